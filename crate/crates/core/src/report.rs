//! The structured (JSON) report document.
//!
//! Every number in the document is an exact integer; point coordinates are
//! rational strings (`p/q`, or plain `p` for integers). Nothing is ever a
//! float, so reports are byte-reproducible.

use serde::Serialize;

use crate::census::{CensusReport, CheckResult};
use crate::geom::SiteSet;
use crate::poset::{LatticeSide, VoronoiPoset};
use crate::Rat;

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub n: usize,
    /// Site coordinates as canonical rational strings, in label order.
    pub points: Vec<[String; 2]>,
    /// c-vector, index = circle order `0..=n-3`.
    pub c: Vec<i64>,
    /// `[f_1, ..., f_n]` by subset enumeration.
    pub f: Vec<i64>,
    /// `[e_1, ..., e_n]` by bisector segmentation.
    pub e: Vec<i64>,
    /// `[v_1, ..., v_n]` from the circle census.
    pub v: Vec<i64>,
    /// `[f_0_inf, ..., f_n_inf]` by separability.
    pub f_inf: Vec<i64>,
    pub reduced_f: Vec<i64>,
    pub reduced_c: Vec<i64>,
    pub chi: i64,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PosetSection {
    /// Members as ascending label arrays, grouped by rank `0..=n`.
    pub members_by_rank: Vec<Vec<Vec<usize>>>,
    /// Cover pairs `[lower, upper]` in (rank, lexicographic) order.
    pub hasse_edges: Vec<[Vec<usize>; 2]>,
    pub is_graded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graded_witness: Option<Vec<usize>>,
    pub is_lattice: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_witness: Option<LatticeWitnessSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LatticeWitnessSection {
    pub pair: [Vec<usize>; 2],
    pub side: &'static str,
    pub bounds: Vec<Vec<usize>>,
}

impl ReportDocument {
    pub fn new(
        sites: &SiteSet<Rat>,
        census: &CensusReport,
        poset: Option<&VoronoiPoset>,
    ) -> ReportDocument {
        ReportDocument {
            n: census.n,
            points: sites
                .sites()
                .iter()
                .map(|p| [p.x.to_string(), p.y.to_string()])
                .collect(),
            c: census.c.clone(),
            f: census.f_enumerated[1..].to_vec(),
            e: census.e_direct[1..].to_vec(),
            v: census.v_from_circles[1..].to_vec(),
            f_inf: census.f_inf_separability.clone(),
            reduced_f: census.reduced_f.clone(),
            reduced_c: census.reduced_c.clone(),
            chi: census.chi,
            checks: census.checks.clone(),
            poset: poset.map(PosetSection::new),
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report serialization cannot fail");
        text.push('\n');
        text
    }
}

impl PosetSection {
    pub fn new(poset: &VoronoiPoset) -> PosetSection {
        let (is_graded, graded_witness) = poset.is_graded();
        let lattice = poset.is_lattice();
        PosetSection {
            members_by_rank: (0..=poset.n())
                .map(|k| poset.rank(k).iter().map(|m| m.labels()).collect())
                .collect(),
            hasse_edges: poset
                .hasse_edges()
                .into_iter()
                .map(|(lo, hi)| [lo.labels(), hi.labels()])
                .collect(),
            is_graded,
            graded_witness: graded_witness.map(|w| w.labels()),
            is_lattice: lattice.is_lattice,
            lattice_witness: lattice.witness.map(|w| LatticeWitnessSection {
                pair: [w.pair.0.labels(), w.pair.1.labels()],
                side: match w.side {
                    LatticeSide::Join => "join",
                    LatticeSide::Meet => "meet",
                },
                bounds: w.bounds.iter().map(|b| b.labels()).collect(),
            }),
        }
    }
}
