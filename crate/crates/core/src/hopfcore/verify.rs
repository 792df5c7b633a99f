//! Exhaustive check of the Hopf algebra axioms on basis elements.

use std::collections::BTreeMap;
use std::fmt;

use super::{tensor_of, FinHopf, HopfElement};
use crate::cyclofield::CycScalar;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Bialgebra,
    Antipode,
}

impl Axiom {
    pub const ALL: [Axiom; 6] =
        [Axiom::Associativity, Axiom::Unit, Axiom::Coassociativity, Axiom::Counit, Axiom::Bialgebra, Axiom::Antipode];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Bialgebra => "bialgebra",
            Axiom::Antipode => "antipode",
        }
    }
}

/// Outcome of one axiom suite. `failure` names the first offending basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn failed(&self) -> Vec<Axiom> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.axiom).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}/{} axiom suites pass", self.passed_count(), self.checks.len())?;
        for c in &self.checks {
            match &c.failure {
                None => writeln!(f, "  {:<16} ok", c.axiom.name())?,
                Some(why) => writeln!(f, "  {:<16} FAIL: {why}", c.axiom.name())?,
            }
        }
        Ok(())
    }
}

/// Runs all six axiom suites. Each suite stops at its first counterexample.
pub fn verify_hopf(h: &FinHopf) -> Result<VerificationReport> {
    h.validate()?;
    let checks = Axiom::ALL
        .iter()
        .map(|&axiom| {
            let failure = match axiom {
                Axiom::Associativity => associativity(h),
                Axiom::Unit => unit(h),
                Axiom::Coassociativity => coassociativity(h),
                Axiom::Counit => counit(h),
                Axiom::Bialgebra => bialgebra(h),
                Axiom::Antipode => antipode(h),
            };
            AxiomCheck { axiom, passed: failure.is_none(), failure }
        })
        .collect();
    Ok(VerificationReport { checks })
}

fn associativity(h: &FinHopf) -> Option<String> {
    let n = h.dim();
    for i in 0..n {
        for j in 0..n {
            let ij = h.mul_basis(i, j);
            for k in 0..n {
                let left = h.multiply(ij, &h.basis(k));
                let right = h.multiply(&h.basis(i), h.mul_basis(j, k));
                if left != right {
                    return Some(format!("({} {}) {}", h.label(i), h.label(j), h.label(k)));
                }
            }
        }
    }
    None
}

fn unit(h: &FinHopf) -> Option<String> {
    let one = h.one();
    for i in 0..h.dim() {
        let e = h.basis(i);
        if h.multiply(&one, &e) != e || h.multiply(&e, &one) != e {
            return Some(h.label(i).to_string());
        }
    }
    None
}

type Tensor3 = BTreeMap<(usize, usize, usize), CycScalar>;

fn add3(t: &mut Tensor3, key: (usize, usize, usize), c: &CycScalar) {
    if c.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(e) => {
            *e += c;
            if e.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, c.clone());
        }
    }
}

fn coassociativity(h: &FinHopf) -> Option<String> {
    for i in 0..h.dim() {
        let mut left = Tensor3::new();
        let mut right = Tensor3::new();
        for (&(a, b), c) in h.comul_basis(i) {
            for (&(p, q), d) in h.comul_basis(a) {
                add3(&mut left, (p, q, b), &(c * d));
            }
            for (&(p, q), d) in h.comul_basis(b) {
                add3(&mut right, (a, p, q), &(c * d));
            }
        }
        if left != right {
            return Some(h.label(i).to_string());
        }
    }
    None
}

fn counit(h: &FinHopf) -> Option<String> {
    for i in 0..h.dim() {
        let mut left = HopfElement::zero();
        let mut right = HopfElement::zero();
        for (&(a, b), c) in h.comul_basis(i) {
            left.add_term(b, &(c * h.counit_basis(a)));
            right.add_term(a, &(c * h.counit_basis(b)));
        }
        let e = h.basis(i);
        if left != e || right != e {
            return Some(h.label(i).to_string());
        }
    }
    None
}

fn bialgebra(h: &FinHopf) -> Option<String> {
    let one = h.one();
    if h.comultiply(&one) != tensor_of(&one, &one) {
        return Some("comultiplication of the unit".into());
    }
    if !h.counit(&one).is_one() {
        return Some("counit of the unit".into());
    }
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            let prod = h.mul_basis(i, j);
            if h.counit(prod) != h.counit_basis(i) * h.counit_basis(j) {
                return Some(format!("counit of {} {}", h.label(i), h.label(j)));
            }
            if h.comultiply(prod) != h.tensor_multiply(h.comul_basis(i), h.comul_basis(j)) {
                return Some(format!("comultiplication of {} {}", h.label(i), h.label(j)));
            }
        }
    }
    None
}

fn antipode(h: &FinHopf) -> Option<String> {
    let one = h.one();
    for i in 0..h.dim() {
        let mut left = HopfElement::zero();
        let mut right = HopfElement::zero();
        for (&(a, b), c) in h.comul_basis(i) {
            left.add_scaled(&h.multiply(h.antipode_basis(a), &h.basis(b)), c);
            right.add_scaled(&h.multiply(&h.basis(a), h.antipode_basis(b)), c);
        }
        let expected = one.scale(h.counit_basis(i));
        if left != expected || right != expected {
            return Some(h.label(i).to_string());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::tests::c2_group_algebra;

    #[test]
    fn group_algebra_passes_all_suites() {
        let h = c2_group_algebra();
        let report = verify_hopf(&h).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.to_string().starts_with("6/6 axiom suites pass"));
    }

    #[test]
    fn perturbed_product_fails_associativity() {
        let h = c2_group_algebra();
        // g * 1 = 0
        let broken = h.with_product(1, 0, HopfElement::zero());
        let report = verify_hopf(&broken).unwrap();
        assert!(!report.check(Axiom::Unit).unwrap().passed);
        assert!(!report.check(Axiom::Associativity).unwrap().passed);
    }
}
