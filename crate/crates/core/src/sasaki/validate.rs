//! Audit rules for claimed Hodge-diamond data.
//!
//! Each validator returns a structured report: one entry per rule with a
//! pass/fail flag and the offending positions, so callers can render
//! diagnosable failures instead of a bare boolean.

use serde::Serialize;

use super::{HodgeDiamond, LeafCount, Positivity, SasakiError, SasakiStructureRecord};

/// Outcome of one validation rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleResult {
    pub rule: String,
    pub passed: bool,
    /// Offending entries, e.g. `h^{2,0} = 1 (expected 0)`.
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    rules: Vec<RuleResult>,
}

impl ValidationReport {
    pub fn rules(&self) -> &[RuleResult] {
        &self.rules
    }

    pub fn passed(&self) -> bool {
        self.rules.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RuleResult> {
        self.rules.iter().filter(|r| !r.passed)
    }

    /// Appends a rule outcome; used to combine reports from several audits.
    pub fn push_rule(&mut self, rule: RuleResult) {
        self.rules.push(rule);
    }

    fn push(&mut self, rule: impl Into<String>, witnesses: Vec<String>) {
        self.rules.push(RuleResult {
            rule: rule.into(),
            passed: witnesses.is_empty(),
            witnesses,
        });
    }
}

/// Optional rules for [`validate_diamond`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Check the hard-Lefschetz monotonicity `h^{p,q} <= h^{p+1,q+1}` for
    /// `p + q < n`, which holds for the transversely Kähler structures this
    /// crate models but is not part of the bare Hodge-structure axioms.
    pub lefschetz: bool,
}

impl ValidationOptions {
    pub fn with_lefschetz() -> ValidationOptions {
        ValidationOptions { lefschetz: true }
    }
}

fn witness(diamond: &HodgeDiamond, p: usize, q: usize, expected: impl std::fmt::Display) -> String {
    format!("h^{{{p},{q}}} = {} (expected {expected})", diamond.entry(p, q))
}

/// Audits the Hodge-structure constraints of a claimed diamond: corner
/// normalization `h^{0,0} = h^{n,n} = 1`, conjugation symmetry
/// `h^{p,q} = h^{q,p}`, duality `h^{p,q} = h^{n-q,n-p}`, nonnegativity,
/// and optionally Lefschetz monotonicity.
pub fn validate_diamond(diamond: &HodgeDiamond, options: ValidationOptions) -> ValidationReport {
    let n = diamond.n();
    let mut report = ValidationReport::default();

    let mut corners = Vec::new();
    if diamond.entry(0, 0) != 1 {
        corners.push(witness(diamond, 0, 0, 1));
    }
    if diamond.entry(n, n) != 1 {
        corners.push(witness(diamond, n, n, 1));
    }
    report.push("corner_normalization", corners);

    let mut conj = Vec::new();
    for p in 0..=n {
        for q in p + 1..=n {
            if diamond.entry(p, q) != diamond.entry(q, p) {
                conj.push(witness(diamond, p, q, diamond.entry(q, p)));
            }
        }
    }
    report.push("conjugation_symmetry", conj);

    let mut duality = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            let (dp, dq) = (n - q, n - p);
            if (p, q) <= (dp, dq) && diamond.entry(p, q) != diamond.entry(dp, dq) {
                duality.push(witness(diamond, p, q, diamond.entry(dp, dq)));
            }
        }
    }
    report.push("serre_duality", duality);

    let mut negative = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            if diamond.entry(p, q) < 0 {
                negative.push(witness(diamond, p, q, ">= 0"));
            }
        }
    }
    report.push("nonnegativity", negative);

    if options.lefschetz {
        let mut lefschetz = Vec::new();
        for p in 0..=n {
            for q in 0..=n {
                if p + q < n && diamond.entry(p, q) > diamond.entry(p + 1, q + 1) {
                    lefschetz.push(witness(
                        diamond,
                        p,
                        q,
                        format!("<= h^{{{},{}}} = {}", p + 1, q + 1, diamond.entry(p + 1, q + 1)),
                    ));
                }
            }
        }
        report.push("lefschetz_monotonicity", lefschetz);
    }

    report
}

/// A foliation with finitely many closed leaves has vanishing off-diagonal
/// basic Hodge numbers; audits that consequence on a record claiming a
/// finite count.
pub fn check_finite_closed_leaves_vanishing(
    record: &SasakiStructureRecord,
) -> Result<ValidationReport, SasakiError> {
    match record.closed_leaf_count {
        LeafCount::Finite(_) => {}
        LeafCount::Infinite => {
            return Err(SasakiError::PreconditionViolated(
                "finite-closed-leaves check requires a finite closed_leaf_count".into(),
            ))
        }
    }
    let diamond = &record.diamond;
    let n = diamond.n();
    let mut offenders = Vec::new();
    for p in 0..=n {
        for q in 0..=n {
            if p != q && diamond.entry(p, q) != 0 {
                offenders.push(witness(diamond, p, q, 0));
            }
        }
    }
    let mut report = ValidationReport::default();
    report.push("offdiagonal_vanishing", offenders);
    Ok(report)
}

/// Positive structures have `h^{p,0} = h^{0,q} = 0` for `p, q > 0`; audits
/// that vanishing on a record claiming positivity.
pub fn check_positivity_vanishing(
    record: &SasakiStructureRecord,
) -> Result<ValidationReport, SasakiError> {
    if record.positivity != Positivity::Positive {
        return Err(SasakiError::PreconditionViolated(
            "positivity check requires a record labeled positive".into(),
        ));
    }
    let diamond = &record.diamond;
    let n = diamond.n();
    let mut offenders = Vec::new();
    for p in 1..=n {
        if diamond.entry(p, 0) != 0 {
            offenders.push(witness(diamond, p, 0, 0));
        }
    }
    for q in 1..=n {
        if diamond.entry(0, q) != 0 {
            offenders.push(witness(diamond, 0, q, 0));
        }
    }
    let mut report = ValidationReport::default();
    report.push("edge_vanishing", offenders);
    Ok(report)
}

/// Localization comparison against the closed-leaf set `C`: for every
/// offset `s`, the sum of `h^{p,p+s}` over `p` must agree between the
/// manifold diamond and the diamond of `C`, and the manifold entries must
/// vanish outright for `|s| > dim_C`. The disjoint-points case is
/// `diamond_c` with `n = 0` carrying the multiplicity as `h^{0,0}`.
pub fn carrell_lieberman_check(
    diamond_m: &HodgeDiamond,
    diamond_c: &HodgeDiamond,
    dim_c: usize,
) -> Result<ValidationReport, SasakiError> {
    if diamond_c.n() != dim_c {
        return Err(SasakiError::PreconditionViolated(format!(
            "closed-leaf diamond has n = {} but dim_C = {dim_c}",
            diamond_c.n()
        )));
    }
    let span = diamond_m.n().max(diamond_c.n()) as i64;
    let mut report = ValidationReport::default();
    for s in -span..=span {
        let mut offenders = Vec::new();
        let sum_m = diamond_m.diagonal_offset_sum(s);
        let sum_c = diamond_c.diagonal_offset_sum(s);
        if sum_m != sum_c {
            offenders.push(format!(
                "sum_p h^{{p,p+({s})}}: manifold {sum_m} vs closed leaves {sum_c}"
            ));
        }
        if s.unsigned_abs() as usize > dim_c {
            for p in 0..=diamond_m.n() {
                let q = p as i64 + s;
                if (0..=diamond_m.n() as i64).contains(&q)
                    && diamond_m.entry(p, q as usize) != 0
                {
                    offenders.push(witness(diamond_m, p, q as usize, 0));
                }
            }
        }
        report.push(format!("antidiagonal_sum(s={s})"), offenders);
    }
    Ok(report)
}
