//! Arithmetic feasibility conditions for edge-regular and (strictly) Neumaier
//! parameter sets.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NeumaierParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub e: u64,
    pub s: u64,
}

impl NeumaierParams {
    pub const fn new(v: u64, k: u64, lambda: u64, e: u64, s: u64) -> Self {
        NeumaierParams { v, k, lambda, e, s }
    }

    /// The basic bounds 1 ≤ e ≤ s−1, k < v−1, s−2 ≤ λ < k.
    pub fn check_bounds(&self) -> Result<()> {
        let &NeumaierParams { v, k, lambda, e, s } = self;
        let ok = e >= 1 && s >= 2 && e < s && k + 1 < v && lambda < k && lambda + 2 >= s;
        if ok {
            Ok(())
        } else {
            Err(Error::Input(format!("{self} violates 1<=e<=s-1, k<v-1, s-2<=lambda<k")))
        }
    }

    fn signed(&self) -> (i64, i64, i64, i64, i64) {
        (self.v as i64, self.k as i64, self.lambda as i64, self.e as i64, self.s as i64)
    }
}

impl fmt::Display for NeumaierParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{},{})", self.v, self.k, self.lambda, self.e, self.s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Status {
    Open,
    OnlyStronglyRegular,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reason {
    pub id: String,
    pub citation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub reasons: Vec<Reason>,
}

impl Verdict {
    pub fn open() -> Self {
        Verdict {
            status: Status::Open,
            reasons: Vec::new(),
        }
    }

    fn flag(&mut self, status: Status, id: &str, citation: impl Into<String>) {
        self.status = self.status.max(status);
        self.reasons.push(Reason {
            id: id.to_string(),
            citation: citation.into(),
        });
    }

    /// Worst status wins; reasons are concatenated.
    pub fn merge(mut self, other: Verdict) -> Verdict {
        self.status = self.status.max(other.status);
        self.reasons.extend(other.reasons);
        self
    }

    pub fn is_open(&self) -> bool {
        self.status == Status::Open
    }

    pub fn reason_ids(&self) -> Vec<&str> {
        self.reasons.iter().map(|r| r.id.as_str()).collect()
    }
}

/// Necessary conditions for an edge-regular graph with parameters (v, k, λ).
pub fn erg_conditions(v: u64, k: u64, lambda: u64) -> Verdict {
    let (v, k, l) = (v as i64, k as i64, lambda as i64);
    let mut out = Verdict::open();
    if v - 2 * k + l < 0 {
        out.flag(Status::Infeasible, "ERG.i", format!("v-2k+lambda = {} < 0", v - 2 * k + l));
    }
    if l * k % 2 != 0 {
        out.flag(Status::Infeasible, "ERG.ii", format!("lambda*k = {} is odd", l * k));
    }
    if v * k * l % 6 != 0 {
        out.flag(Status::Infeasible, "ERG.iii", format!("v*k*lambda = {} not divisible by 6", v * k * l));
    }
    if v * k % 2 != 0 {
        out.flag(Status::Infeasible, "ERG.iv", format!("v*k = {} is odd", v * k));
    }
    out
}

/// Necessary conditions for a Neumaier graph with parameters (v, k, λ; e, s).
pub fn neumaier_conditions(p: &NeumaierParams) -> Verdict {
    let (v, k, l, e, s) = p.signed();
    let mut out = Verdict::open();
    let slack = k - s + e - l - 1;
    if slack < 0 {
        out.flag(Status::Infeasible, "NEU.i", format!("k-s+e-lambda-1 = {slack} < 0"));
    }
    let (lhs, rhs) = (s * (k - s + 1), (v - s) * e);
    if lhs != rhs {
        out.flag(Status::Infeasible, "NEU.ii", format!("s(k-s+1) = {lhs} != (v-s)e = {rhs}"));
    }
    let (lhs, rhs) = (s * (s - 1) * (l - s + 2), (v - s) * e * (e - 1));
    if lhs != rhs {
        out.flag(
            Status::Infeasible,
            "NEU.iii",
            format!("s(s-1)(lambda-s+2) = {lhs} != (v-s)e(e-1) = {rhs}"),
        );
    }
    out
}

/// Further necessary conditions for a strictly Neumaier graph.
pub fn strict_conditions(p: &NeumaierParams) -> Verdict {
    let (v, k, l, e, s) = p.signed();
    let mut out = Verdict::open();
    if s < 4 {
        out.flag(Status::Infeasible, "STR.i", format!("s = {s} < 4"));
    }
    if e > k - 2 {
        out.flag(Status::Infeasible, "STR.ii", format!("e = {e} > k-2 = {}", k - 2));
    }
    if v == 2 * k - l || v == 2 * k - l + 1 {
        out.flag(Status::Infeasible, "STR.iii", format!("v = {v} in {{2k-lambda, 2k-lambda+1}}"));
    }
    let slack = k - s + e - l - 1;
    if slack < 1 {
        out.flag(Status::Infeasible, "STR.iv", format!("k-s+e-lambda-1 = {slack} < 1"));
    }
    out
}

/// k(k−1) − μ(v−k−1) for a co-edge-regular (v, k, μ).
pub fn co_edge_defect(v: u64, k: u64, mu: u64) -> i64 {
    let (v, k, mu) = (v as i64, k as i64, mu as i64);
    k * (k - 1) - mu * (v - k - 1)
}

/// The co-edge defect of the complement of an edge-regular (v, k, λ).
pub fn complement_defect(v: u64, k: u64, lambda: u64) -> i64 {
    let (v, k, l) = (v as i64, k as i64, lambda as i64);
    (v - k - 1) * (v - k - 2) - k * (v - 2 * k + l)
}

pub fn corollary_complement_test(v: u64, k: u64, lambda: u64) -> Verdict {
    let d = complement_defect(v, k, lambda);
    let mut out = Verdict::open();
    if d < 0 {
        out.flag(
            Status::Infeasible,
            "COR32.D<0",
            format!("complement defect (v-k-1)(v-k-2)-k(v-2k+lambda) = {d} < 0"),
        );
    } else if d == 0 {
        out.flag(
            Status::OnlyStronglyRegular,
            "COR32.D=0",
            "complement defect is 0, so every such graph is strongly regular",
        );
    }
    out
}

/// Whether `p` is (6l+3, 4l+2, 3l; l+1, 2l+1) for some l ≥ 3.
pub fn theorem_family_6l3(p: &NeumaierParams) -> bool {
    let l = p.lambda / 3;
    p.lambda % 3 == 0 && l >= 3 && *p == NeumaierParams::new(6 * l + 3, 4 * l + 2, 3 * l, l + 1, 2 * l + 1)
}

/// Everything known about a parameter set: the necessary conditions for a
/// strictly Neumaier graph plus the complement and 6l+3 nonexistence results.
pub fn full_verdict(p: &NeumaierParams) -> Verdict {
    let mut out = erg_conditions(p.v, p.k, p.lambda)
        .merge(neumaier_conditions(p))
        .merge(strict_conditions(p))
        .merge(corollary_complement_test(p.v, p.k, p.lambda));
    if theorem_family_6l3(p) {
        out.flag(
            Status::Infeasible,
            "THM33",
            format!("member of the (6l+3,4l+2,3l;l+1,2l+1) family with l = {}", p.lambda / 3),
        );
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Exists {
    Yes,
    Unknown,
}

/// Parameter sets with a known strictly Neumaier graph.
const KNOWN_TO_EXIST: [NeumaierParams; 5] = [
    NeumaierParams::new(16, 9, 4, 2, 4),
    NeumaierParams::new(24, 8, 2, 1, 4),
    NeumaierParams::new(28, 9, 2, 1, 4),
    NeumaierParams::new(40, 12, 2, 1, 4),
    NeumaierParams::new(52, 15, 2, 1, 4),
];

pub fn known_existence(p: &NeumaierParams) -> Exists {
    if KNOWN_TO_EXIST.contains(p) {
        Exists::Yes
    } else {
        Exists::Unknown
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibleRow {
    pub params: NeumaierParams,
    pub verdict: Verdict,
    pub exists: Exists,
}

/// All parameter sets with v ≤ v_max passing the edge-regular, Neumaier and
/// strict conditions, ordered by (v, k, λ, e, s). The verdict records the
/// complement and 6l+3 results, which may still rule a row out.
pub fn enumerate_feasible(v_max: u64) -> Vec<FeasibleRow> {
    let mut rows = Vec::new();
    for v in 5..=v_max {
        for k in 3..v - 1 {
            for s in 4..=k + 1 {
                // s(k−s+1) = (v−s)e pins e.
                let num = s * (k + 1 - s);
                if num % (v - s) != 0 {
                    continue;
                }
                let e = num / (v - s);
                if e == 0 || e >= s {
                    continue;
                }
                // s(s−1)(λ−s+2) = (v−s)e(e−1) pins λ.
                let rhs = (v - s) * e * (e - 1);
                if rhs % (s * (s - 1)) != 0 {
                    continue;
                }
                let lambda = rhs / (s * (s - 1)) + s - 2;
                if lambda >= k {
                    continue;
                }
                let p = NeumaierParams::new(v, k, lambda, e, s);
                let base = erg_conditions(v, k, lambda)
                    .merge(neumaier_conditions(&p))
                    .merge(strict_conditions(&p));
                if !base.is_open() {
                    continue;
                }
                rows.push(FeasibleRow {
                    params: p,
                    verdict: full_verdict(&p),
                    exists: known_existence(&p),
                });
            }
        }
    }
    rows.sort_by_key(|r| r.params);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: u64, k: u64, l: u64, e: u64, s: u64) -> NeumaierParams {
        NeumaierParams::new(v, k, l, e, s)
    }

    #[test]
    fn erg_examples() {
        assert!(erg_conditions(16, 9, 4).is_open());
        assert_eq!(erg_conditions(5, 3, 1).reason_ids(), ["ERG.ii", "ERG.iii", "ERG.iv"]);
        assert_eq!(erg_conditions(7, 2, 0).reason_ids(), Vec::<&str>::new());
        assert_eq!(erg_conditions(8, 4, 1).reason_ids(), ["ERG.iii"]);
        assert_eq!(erg_conditions(10, 7, 3).reason_ids()[0], "ERG.i");
    }

    #[test]
    fn neumaier_examples() {
        assert!(neumaier_conditions(&p(16, 9, 4, 2, 4)).is_open());
        assert!(neumaier_conditions(&p(24, 8, 2, 1, 4)).is_open());
        let v = neumaier_conditions(&p(16, 9, 4, 2, 5));
        assert_eq!(v.status, Status::Infeasible);
        assert!(v.reason_ids().contains(&"NEU.ii"));
    }

    #[test]
    fn strict_examples() {
        assert!(strict_conditions(&p(16, 9, 4, 2, 4)).is_open());
        assert_eq!(strict_conditions(&p(9, 4, 1, 1, 3)).reason_ids(), ["STR.i", "STR.iv"]);
        assert_eq!(strict_conditions(&p(12, 6, 2, 1, 3)).reason_ids(), ["STR.i"]);
        assert!(strict_conditions(&p(15, 8, 4, 1, 4)).reason_ids().contains(&"STR.iv"));
    }

    #[test]
    fn defects() {
        assert_eq!(co_edge_defect(16, 5, 2), 0);
        assert_eq!(co_edge_defect(21, 6, 2), 2);
        assert_eq!(co_edge_defect(10, 3, 4), -18);
        assert_eq!(complement_defect(21, 14, 9), 2);
        assert_eq!(complement_defect(16, 9, 4), 12);
    }

    #[test]
    fn complement_test_examples() {
        assert_eq!(corollary_complement_test(39, 30, 23).status, Status::Infeasible);
        assert_eq!(corollary_complement_test(56, 45, 36).status, Status::OnlyStronglyRegular);
        assert!(corollary_complement_test(16, 9, 4).is_open());
    }

    #[test]
    fn family_6l3() {
        assert!(theorem_family_6l3(&p(21, 14, 9, 4, 7)));
        assert!(theorem_family_6l3(&p(63, 42, 30, 11, 21)));
        assert!(!theorem_family_6l3(&p(16, 9, 4, 2, 4)));
        assert!(!theorem_family_6l3(&p(15, 10, 6, 3, 5)));
    }

    #[test]
    fn printed_55_30_row_fails_clique_identity() {
        let v = neumaier_conditions(&p(55, 30, 18, 3, 5));
        assert_eq!(v.reason_ids(), ["NEU.ii"]);
        assert!(full_verdict(&p(55, 34, 18, 3, 5)).is_open());
    }

    #[test]
    fn small_enumerations() {
        let rows = enumerate_feasible(16);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].params, p(16, 9, 4, 2, 4));
        assert_eq!(rows[0].exists, Exists::Yes);
        let rows = enumerate_feasible(27);
        for q in [p(21, 14, 9, 4, 7), p(27, 18, 12, 5, 9)] {
            let r = rows.iter().find(|r| r.params == q).unwrap();
            assert_eq!(r.verdict.status, Status::Infeasible);
            assert_eq!(r.verdict.reason_ids(), ["THM33"]);
        }
    }

    /// Brute force over every tuple in the bounds, no pruning.
    fn brute_enumeration(v_max: u64) -> Vec<NeumaierParams> {
        let mut out = Vec::new();
        for v in 5..=v_max {
            for k in 1..v - 1 {
                for l in 0..k {
                    for s in 2..=k + 1 {
                        for e in 1..s {
                            let q = p(v, k, l, e, s);
                            if q.check_bounds().is_err() {
                                continue;
                            }
                            if erg_conditions(v, k, l).is_open()
                                && neumaier_conditions(&q).is_open()
                                && strict_conditions(&q).is_open()
                            {
                                out.push(q);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    #[test]
    fn pruned_enumeration_matches_brute_force() {
        let fast: Vec<_> = enumerate_feasible(40).into_iter().map(|r| r.params).collect();
        assert_eq!(fast, brute_enumeration(40));
    }

    #[test]
    fn geometric_family_defect() {
        for a in 2u64..=6 {
            for n in 2u32..=5 {
                let g = |m: u32| (a.pow(m) - 1) / (a - 1);
                let q = p(
                    3 * g(n + 1),
                    2 * a.pow(n) + a * g(n),
                    3 * a.pow(n) - 2 * a.pow(n - 1) + a * g(n - 1) - 1,
                    a.pow(n),
                    g(n + 1),
                );
                let (ai, an) = (a as i64, a.pow(n) as i64);
                // The numerator is divisible by (a−1)², not only by a−1.
                let num = -2 * ((ai - 2) * an * (a.pow(n - 1) as i64 - 2) - 1);
                assert_eq!(num % ((ai - 1) * (ai - 1)), 0);
                assert_eq!(complement_defect(q.v, q.k, q.lambda), num / ((ai - 1) * (ai - 1)), "a={a} n={n}");
                assert!(erg_conditions(q.v, q.k, q.lambda).is_open());
                assert!(neumaier_conditions(&q).is_open());
                assert!(strict_conditions(&q).is_open());
                let verdict = full_verdict(&q);
                if a >= 3 {
                    assert_eq!(verdict.status, Status::Infeasible, "{q}");
                } else {
                    // D = 2 for a = 2: the complement test is silent.
                    assert!(verdict.reason_ids().iter().all(|id| !id.starts_with("COR32")), "{q}");
                }
            }
        }
    }

    #[test]
    fn linear_family_defect() {
        for a in 0u64..=10 {
            let q = p(27 * a + 21, 21 * a + 14, 17 * a + 9, 6 * a + 4, 9 * a + 7);
            let ai = a as i64;
            assert_eq!(complement_defect(q.v, q.k, q.lambda), -2 * (ai + 1) * (3 * ai - 1));
            assert!(erg_conditions(q.v, q.k, q.lambda).is_open());
            assert!(neumaier_conditions(&q).is_open());
            assert!(strict_conditions(&q).is_open());
            // λ = 13a + 7 breaks the clique identities.
            let typo = p(q.v, q.k, 13 * a + 7, q.e, q.s);
            assert!(neumaier_conditions(&typo).reason_ids().contains(&"NEU.iii"));
        }
    }

    #[test]
    fn cubic_families_have_zero_defect() {
        for a in 2u64..=8 {
            let first = p(
                2 * a * a * (2 * a + 3),
                (a + 1) * (4 * a * a - 1),
                4 * a.pow(3) + 2 * a * a - a - 2,
                4 * a * a - 2 * a,
                4 * a * a,
            );
            let second = p(
                2 * (2 * a + 1) * (a * a + a - 1),
                2 * (a + 1) * (2 * a * a - 1),
                4 * a.pow(3) + 2 * a * a - a - 3,
                4 * a * a - 2 * a,
                4 * a * a - 1,
            );
            for q in [first, second] {
                assert_eq!(complement_defect(q.v, q.k, q.lambda), 0, "{q}");
                if q.v == 2 * q.k - q.lambda + 1 {
                    // Only (50,42,35;12,15), at a = 2, sits on this boundary.
                    assert_eq!((a, strict_conditions(&q).reason_ids()), (2, vec!["STR.iii"]));
                    continue;
                }
                assert!(erg_conditions(q.v, q.k, q.lambda).is_open(), "{q}");
                assert!(neumaier_conditions(&q).is_open(), "{q}");
                assert!(strict_conditions(&q).is_open(), "{q}");
                assert_eq!(full_verdict(&q).status, Status::OnlyStronglyRegular, "{q}");
            }
        }
        assert_eq!(full_verdict(&p(56, 45, 36, 12, 16)).status, Status::OnlyStronglyRegular);
    }
}
