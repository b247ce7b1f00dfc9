//! The identity suite: every per-order census of a site set, each computed
//! by two independent paths, plus the full battery of exact cross-checks.
//!
//! The four primary observations are
//!
//! * the f-vector by subset enumeration (region oracle),
//! * the c-vector by circle counting,
//! * the e-vector by bisector segmentation,
//! * the unbounded census by separability.
//!
//! Everything else (vertex counts, Euler-derived edges and unbounded counts,
//! the c-derived f-vector, reduced vectors, the Euler characteristic) is
//! recomputed from those by closed formulas, and every relation is asserted
//! as an exact integer identity — there is no tolerance anywhere. A report
//! is clean iff all checks pass; a mismatch names the identity, the index,
//! and both values.
//!
//! Indexing: per-order vectors have length `n + 1` and are indexed by the
//! diagram order `k` (slot 0 fixed by convention: `f_0 = 1`, `v_0 = e_0 =
//! f_inf_0 = 0`). The c-vector has length `n - 2`, indexed by circle order.

use serde::Serialize;
use thiserror::Error;

use crate::bisectors::e_vector;
use crate::circles::{c_vector, v_vector_from_circles};
use crate::geom::{SiteSet, Violation};
use crate::regions::{f_vector_enumerate_with_guard, SizeGuardError, DEFAULT_SIZE_GUARD};
use crate::scalar::Scalar;
use crate::unbounded::f_inf_vector;

/// One named identity check with its exact operands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub observed: Vec<i64>,
    pub expected: Vec<i64>,
    /// Index (the mathematical `k` or `i`) of the first mismatch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mismatch_index: Option<i64>,
}

impl CheckResult {
    fn compare(
        name: &'static str,
        index_start: i64,
        observed: Vec<i64>,
        expected: Vec<i64>,
    ) -> Self {
        debug_assert_eq!(observed.len(), expected.len());
        let mismatch_index = observed
            .iter()
            .zip(&expected)
            .position(|(o, e)| o != e)
            .map(|pos| index_start + pos as i64);
        CheckResult {
            name,
            pass: mismatch_index.is_none(),
            observed,
            expected,
            mismatch_index,
        }
    }
}

/// The identity names, in report order.
pub const CHECK_NAMES: [&str; 17] = [
    "EULER_PER_ORDER",
    "TOTALS",
    "VK_EXPR",
    "EK_EXPR",
    "FK_EXPR",
    "CV",
    "DUAL",
    "TOTAL_UNBOUNDED",
    "F_SYM",
    "V_SYM",
    "C_SYM",
    "FINF_C",
    "C_DET_F",
    "TILDE_LINK",
    "CHI",
    "ALT_V",
    "CROSS_PATH",
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("not in general position: {0}")]
    GeneralPosition(#[from] Violation),
    #[error(transparent)]
    SizeGuard(#[from] SizeGuardError),
}

/// The complete census of one instance: all vectors from both computation
/// paths and the outcome of every identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub n: usize,
    /// f-vector by subset enumeration (order-indexed, `f[0] = 1`).
    pub f_enumerated: Vec<i64>,
    /// f-vector from the c-vector via `f_k = n - k + 1 + c_{k-2}`.
    pub f_from_c: Vec<i64>,
    /// v-vector via `v_k = c_{k-1} + c_{k-2}`.
    pub v_from_circles: Vec<i64>,
    /// v-vector via `v_k = 2(f_k - 1) - f_k^inf` from the enumeration and
    /// separability paths.
    pub v_from_euler: Vec<i64>,
    /// e-vector by bisector segmentation.
    pub e_direct: Vec<i64>,
    /// e-vector via `e_k = v_k + f_k - 1`.
    pub e_from_euler: Vec<i64>,
    /// c-vector by circle counting (length `n - 2`, indexed by circle order).
    pub c: Vec<i64>,
    /// Unbounded census by separability (order-indexed).
    pub f_inf_separability: Vec<i64>,
    /// Unbounded census via `f_k^inf = 2(f_k - 1) - v_k`.
    pub f_inf_from_euler: Vec<i64>,
    /// `reduced_f[j] = f_{j+1} + f_{n-j}`, from the enumerated f-vector.
    pub reduced_f: Vec<i64>,
    /// `reduced_c[i] = c_i + c_{n-i-3}`, from the counted c-vector.
    pub reduced_c: Vec<i64>,
    /// Reduced Euler characteristic of the enumerated family.
    pub chi: i64,
    pub checks: Vec<CheckResult>,
}

/// Runs every census and identity check on `S`.
///
/// Fails (with no partial report) if `S` is not in general position or
/// exceeds the enumeration guard.
pub fn check_all<T: Scalar>(s: &SiteSet<T>) -> Result<CensusReport, CensusError> {
    check_all_with_guard(s, DEFAULT_SIZE_GUARD)
}

pub fn check_all_with_guard<T: Scalar>(
    s: &SiteSet<T>,
    guard: usize,
) -> Result<CensusReport, CensusError> {
    s.validate_general_position()?;
    let f_enumerated = f_vector_enumerate_with_guard(s, guard)?;
    Ok(CensusReport::from_counts(
        s.len(),
        f_enumerated,
        c_vector(s),
        e_vector(s),
        f_inf_vector(s),
    ))
}

impl CensusReport {
    /// Derives every secondary vector and runs all checks on the four
    /// primary observations. Public so that harnesses can feed mutated
    /// counts and watch the corresponding identities fail.
    pub fn from_counts(
        n: usize,
        f_enumerated: Vec<i64>,
        c: Vec<i64>,
        e_direct: Vec<i64>,
        f_inf_separability: Vec<i64>,
    ) -> CensusReport {
        assert_eq!(f_enumerated.len(), n + 1);
        assert_eq!(c.len(), n - 2);
        assert_eq!(e_direct.len(), n + 1);
        assert_eq!(f_inf_separability.len(), n + 1);

        let ni = n as i64;
        let c_at = |i: i64| {
            if i >= 0 && (i as usize) < c.len() {
                c[i as usize]
            } else {
                0
            }
        };

        let v_from_circles = v_vector_from_circles(&c);
        let f_from_c: Vec<i64> = (0..=ni)
            .map(|k| if k == 0 { 1 } else { ni - k + 1 + c_at(k - 2) })
            .collect();
        let v_from_euler: Vec<i64> = (0..=ni)
            .map(|k| {
                let k = k as usize;
                2 * (f_enumerated[k] - 1) - f_inf_separability[k]
            })
            .collect();
        let e_from_euler: Vec<i64> = (0..=n)
            .map(|k| {
                if k == 0 {
                    0
                } else {
                    v_from_circles[k] + f_enumerated[k] - 1
                }
            })
            .collect();
        let f_inf_from_euler: Vec<i64> = (0..=n)
            .map(|k| 2 * (f_enumerated[k] - 1) - v_from_circles[k])
            .collect();
        let reduced_f = reduced_f_vector(&f_enumerated);
        let reduced_c = reduced_c_vector(&c);
        let chi: i64 = f_enumerated
            .iter()
            .enumerate()
            .map(|(k, &count)| if k % 2 == 0 { -count } else { count })
            .sum();

        let f = &f_enumerated;
        let v = &v_from_circles;
        let e = &e_direct;
        let f_inf = &f_inf_separability;
        let mut checks = Vec::with_capacity(CHECK_NAMES.len());

        checks.push(CheckResult::compare(
            "EULER_PER_ORDER",
            1,
            (1..=n).map(|k| v[k] - e[k] + f[k]).collect(),
            vec![1; n],
        ));
        checks.push(CheckResult::compare(
            "TOTALS",
            0,
            vec![
                v[1..].iter().sum(),
                e[1..].iter().sum(),
                f[1..].iter().sum(),
            ],
            vec![
                ni * (ni - 1) * (ni - 2) / 3,
                ni * (ni - 1) * (ni - 1) / 2,
                ni * (ni * ni + 5) / 6,
            ],
        ));
        checks.push(CheckResult::compare(
            "VK_EXPR",
            1,
            (1..=n).map(|k| v[k]).collect(),
            (1..=n).map(|k| 2 * (f[k] - 1) - f_inf[k]).collect(),
        ));
        checks.push(CheckResult::compare(
            "EK_EXPR",
            1,
            (1..=n).map(|k| e[k]).collect(),
            (1..=n).map(|k| 3 * (f[k] - 1) - f_inf[k]).collect(),
        ));
        checks.push(CheckResult::compare(
            "FK_EXPR",
            1,
            (1..=n).map(|k| f[k]).collect(),
            (1..=ni)
                .map(|k| {
                    let unbounded_below: i64 = (1..=k).map(|i| f_inf[i as usize - 1]).sum();
                    (2 * k - 1) * ni - (k * k - 1) - unbounded_below
                })
                .collect(),
        ));
        // The circle path defines v; the independent side is the Euler path.
        checks.push(CheckResult::compare(
            "CV",
            1,
            (1..=n).map(|k| v_from_euler[k]).collect(),
            (1..=ni).map(|k| c_at(k - 1) + c_at(k - 2)).collect(),
        ));
        checks.push(CheckResult::compare(
            "DUAL",
            1,
            (1..n).map(|k| f_inf[k]).collect(),
            (1..n).map(|k| f_inf[n - k]).collect(),
        ));
        checks.push(CheckResult::compare(
            "TOTAL_UNBOUNDED",
            0,
            vec![f_inf[..n].iter().sum()],
            vec![ni * (ni - 1)],
        ));
        checks.push(CheckResult::compare(
            "F_SYM",
            1,
            (1..=n).map(|k| f[k] + f[n - k + 1]).collect(),
            (1..=ni).map(|k| 2 * k * (ni - k + 1) + 1 - ni).collect(),
        ));
        checks.push(CheckResult::compare(
            "V_SYM",
            1,
            (1..n).map(|k| v[k] + v[n - k]).collect(),
            (1..ni).map(|k| 4 * k * (ni - k) - 2 * ni).collect(),
        ));
        checks.push(CheckResult::compare(
            "C_SYM",
            0,
            (0..=ni - 3).map(|i| c_at(i) + c_at(ni - 3 - i)).collect(),
            (0..=ni - 3).map(|i| 2 * (i + 1) * (ni - 2 - i)).collect(),
        ));
        checks.push(CheckResult::compare(
            "FINF_C",
            1,
            (1..ni)
                .map(|i| f_inf[i as usize] + c_at(i - 1) - c_at(i - 2))
                .collect(),
            (1..ni).map(|i| 2 * (ni - i)).collect(),
        ));
        checks.push(CheckResult::compare(
            "C_DET_F",
            1,
            (1..=n).map(|k| f[k]).collect(),
            (1..=n).map(|k| f_from_c[k]).collect(),
        ));
        checks.push(CheckResult::compare(
            "TILDE_LINK",
            1,
            (1..reduced_f.len()).map(|i| reduced_f[i]).collect(),
            (1..reduced_f.len())
                .map(|i| reduced_c[i - 1] + ni + 1)
                .collect(),
        ));
        checks.push(if n % 2 == 1 {
            CheckResult::compare("CHI", 0, vec![chi], vec![0])
        } else {
            // Even n: only the parity is forced (odd iff n divisible by 4).
            let expected_parity = if n.is_multiple_of(4) { 1 } else { 0 };
            CheckResult::compare("CHI", 0, vec![chi.rem_euclid(2)], vec![expected_parity])
        });
        checks.push(CheckResult::compare(
            "ALT_V",
            0,
            vec![(1..n).map(|k| if k % 2 == 1 { v[k] } else { -v[k] }).sum()],
            vec![0],
        ));
        // Double-entry bookkeeping: the four vector pairs, concatenated in
        // the order f, e, v, f_inf.
        checks.push(CheckResult::compare(
            "CROSS_PATH",
            0,
            f[1..]
                .iter()
                .chain(&e[1..])
                .chain(&v[1..])
                .chain(&f_inf[..])
                .copied()
                .collect(),
            f_from_c[1..]
                .iter()
                .chain(&e_from_euler[1..])
                .chain(&v_from_euler[1..])
                .chain(&f_inf_from_euler[..])
                .copied()
                .collect(),
        ));
        debug_assert_eq!(
            checks.iter().map(|c| c.name).collect::<Vec<_>>(),
            CHECK_NAMES
        );

        CensusReport {
            n,
            f_enumerated,
            f_from_c,
            v_from_circles,
            v_from_euler,
            e_direct,
            e_from_euler,
            c,
            f_inf_separability,
            f_inf_from_euler,
            reduced_f,
            reduced_c,
            chi,
            checks,
        }
    }

    /// Whether every check passed.
    pub fn is_clean(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// `reduced_f[j] = f_{j+1} + f_{n-j}` for `j` up to `floor((n-1)/2)`; the
/// self-paired middle entry of odd `n` appears once (as twice the central
/// count). Takes the order-indexed f-vector.
pub fn reduced_f_vector(f: &[i64]) -> Vec<i64> {
    let n = f.len() - 1;
    (0..n.div_ceil(2)).map(|j| f[j + 1] + f[n - j]).collect()
}

/// `reduced_c[i] = c_i + c_{n-i-3}` for `i` up to `floor((n-3)/2)`. Takes
/// the c-vector (length `n - 2`).
pub fn reduced_c_vector(c: &[i64]) -> Vec<i64> {
    let n = c.len() + 2;
    (0..(n - 1) / 2).map(|i| c[i] + c[n - 3 - i]).collect()
}

/// The reduced f-vector of any instance of size `n`, by the closed form
/// `2(j+1)(n-j) + 1 - n`.
pub fn reduced_f_closed(n: usize) -> Vec<i64> {
    let ni = n as i64;
    (0..(ni + 1) / 2)
        .map(|j| 2 * (j + 1) * (ni - j) + 1 - ni)
        .collect()
}

/// The reduced c-vector of any instance of size `n`, by the closed form
/// `2(i+1)(n-2-i)`.
pub fn reduced_c_closed(n: usize) -> Vec<i64> {
    let ni = n as i64;
    (0..(ni - 1) / 2)
        .map(|i| 2 * (i + 1) * (ni - 2 - i))
        .collect()
}

/// One row of the closed-form table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: usize,
    pub reduced_f: Vec<i64>,
    pub reduced_c: Vec<i64>,
}

/// The closed-form reduced vectors for every `n` in the range; depends on
/// nothing but `n`.
pub fn closed_form_table(n_min: usize, n_max: usize) -> Vec<TableRow> {
    assert!(3 <= n_min && n_min <= n_max, "need 3 <= n_min <= n_max");
    (n_min..=n_max)
        .map(|n| TableRow {
            n,
            reduced_f: reduced_f_closed(n),
            reduced_c: reduced_c_closed(n),
        })
        .collect()
}

/// The per-order count that the symmetry relations force outright at the
/// central index: the region count `f_{(n+1)/2}` for odd `n`, the vertex
/// count `v_{n/2}` for even `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralValue {
    /// `f_k = kn - k^2 + 1` at `k = (n + 1) / 2`.
    RegionCount { k: usize, value: i64 },
    /// `v_k = n^2/2 - n` at `k = n / 2`.
    VertexCount { k: usize, value: i64 },
}

pub fn central_values(n: usize) -> CentralValue {
    let ni = n as i64;
    if n % 2 == 1 {
        let k = (ni + 1) / 2;
        CentralValue::RegionCount {
            k: k as usize,
            value: k * ni - k * k + 1,
        }
    } else {
        CentralValue::VertexCount {
            k: n / 2,
            value: ni * ni / 2 - ni,
        }
    }
}
