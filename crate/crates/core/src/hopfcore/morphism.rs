//! Linear maps between Hopf algebras and the morphism test.

use std::fmt;

use super::{add_tensor_term, FinHopf, HopfElement, Tensor2};
use crate::cyclofield::{CycScalar, Field};
use crate::linalg::rank;

/// A linear map given by the images of source basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMorphismCandidate {
    target_dim: usize,
    images: Vec<HopfElement>,
}

impl HopfMorphismCandidate {
    pub fn new(images: Vec<HopfElement>, target_dim: usize) -> Self {
        HopfMorphismCandidate { target_dim, images }
    }

    /// From a dense `source_dim × target_dim` matrix: row `i` is the image of `e_i`.
    pub fn from_matrix(rows: &[Vec<CycScalar>]) -> Self {
        let target_dim = rows.first().map_or(0, Vec::len);
        let images = rows.iter().map(|r| HopfElement::from_terms(r.iter().cloned().enumerate())).collect();
        HopfMorphismCandidate { target_dim, images }
    }

    pub fn identity(dim: usize, field: &Field) -> Self {
        HopfMorphismCandidate { target_dim: dim, images: (0..dim).map(|i| HopfElement::basis(i, field)).collect() }
    }

    pub fn source_dim(&self) -> usize {
        self.images.len()
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn image(&self, i: usize) -> &HopfElement {
        &self.images[i]
    }

    pub fn images(&self) -> &[HopfElement] {
        &self.images
    }

    pub fn entry(&self, i: usize, j: usize, field: &Field) -> CycScalar {
        self.images[i].coefficient(j, field)
    }

    pub fn matrix(&self, field: &Field) -> Vec<Vec<CycScalar>> {
        self.images.iter().map(|e| e.coords(self.target_dim, field)).collect()
    }

    pub fn apply(&self, a: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (&i, c) in a.terms() {
            out.add_scaled(&self.images[i], c);
        }
        out
    }

    pub fn apply_tensor(&self, t: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), c) in t {
            for (&p, u) in self.images[a].terms() {
                let cu = c * u;
                for (&q, v) in self.images[b].terms() {
                    add_tensor_term(&mut out, (p, q), &(&cu * v));
                }
            }
        }
        out
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &HopfMorphismCandidate) -> HopfMorphismCandidate {
        HopfMorphismCandidate { target_dim: then.target_dim, images: self.images.iter().map(|e| then.apply(e)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim() == self.target_dim
            && self.images.iter().enumerate().all(|(i, e)| e.single_term().is_some_and(|(j, c)| j == i && c.is_one()))
    }

    /// Linear invertibility by exact rank.
    pub fn is_invertible(&self) -> bool {
        self.source_dim() == self.target_dim && rank(self.images.iter().map(|e| e.terms().clone())) == self.target_dim
    }
}

/// First axiom violated by a candidate map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismFailure {
    Shape,
    Unit,
    Counit(usize),
    Comultiplication(usize),
    Antipode(usize),
    Multiplication(usize, usize),
}

impl fmt::Display for MorphismFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismFailure::Shape => write!(f, "dimension mismatch"),
            MorphismFailure::Unit => write!(f, "unit not preserved"),
            MorphismFailure::Counit(i) => write!(f, "counit fails on basis {i}"),
            MorphismFailure::Comultiplication(i) => write!(f, "comultiplication fails on basis {i}"),
            MorphismFailure::Antipode(i) => write!(f, "antipode fails on basis {i}"),
            MorphismFailure::Multiplication(i, j) => write!(f, "multiplication fails on basis pair ({i}, {j})"),
        }
    }
}

/// Checks unit, counit, comultiplication, antipode, then multiplication on
/// every basis pair in row-major order, stopping at the first failure.
pub fn check_hopf_morphism(phi: &HopfMorphismCandidate, a: &FinHopf, b: &FinHopf) -> Result<(), MorphismFailure> {
    if phi.source_dim() != a.dim() || phi.target_dim() != b.dim() || a.field().order() != b.field().order() {
        return Err(MorphismFailure::Shape);
    }
    if phi.apply(&a.one()) != b.one() {
        return Err(MorphismFailure::Unit);
    }
    for i in 0..a.dim() {
        if &b.counit(phi.image(i)) != a.counit_basis(i) {
            return Err(MorphismFailure::Counit(i));
        }
    }
    for i in 0..a.dim() {
        if b.comultiply(phi.image(i)) != phi.apply_tensor(a.comul_basis(i)) {
            return Err(MorphismFailure::Comultiplication(i));
        }
    }
    for i in 0..a.dim() {
        if b.antipode(phi.image(i)) != phi.apply(a.antipode_basis(i)) {
            return Err(MorphismFailure::Antipode(i));
        }
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if phi.apply(a.mul_basis(i, j)) != b.multiply(phi.image(i), phi.image(j)) {
                return Err(MorphismFailure::Multiplication(i, j));
            }
        }
    }
    Ok(())
}

pub fn is_hopf_morphism(phi: &HopfMorphismCandidate, a: &FinHopf, b: &FinHopf) -> bool {
    check_hopf_morphism(phi, a, b).is_ok()
}

/// A Hopf morphism whose matrix is invertible.
pub fn is_isomorphism(phi: &HopfMorphismCandidate, a: &FinHopf, b: &FinHopf) -> bool {
    is_hopf_morphism(phi, a, b) && phi.is_invertible()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::tests::c2_group_algebra;

    #[test]
    fn identity_is_isomorphism() {
        let h = c2_group_algebra();
        let id = HopfMorphismCandidate::identity(2, h.field());
        assert!(id.is_identity());
        assert!(is_isomorphism(&id, &h, &h));
    }

    #[test]
    fn trivial_map_is_morphism_not_isomorphism() {
        let h = c2_group_algebra();
        let one = h.basis(0);
        let trivial = HopfMorphismCandidate::new(vec![one.clone(), one], 2);
        assert!(is_hopf_morphism(&trivial, &h, &h));
        assert!(!is_isomorphism(&trivial, &h, &h));
    }

    #[test]
    fn scaling_breaks_counit() {
        let h = c2_group_algebra();
        let k = h.field().clone();
        let two = CycScalar::from_integer(&k, 2);
        let phi = HopfMorphismCandidate::new(vec![h.basis(0), h.basis(1).scale(&two)], 2);
        assert_eq!(check_hopf_morphism(&phi, &h, &h), Err(MorphismFailure::Counit(1)));
    }
}
