//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! A [`FinHopf`] stores the multiplication, unit, comultiplication, counit
//! and antipode on a fixed basis, all with exact coefficients. Elements and
//! tensors are sparse coordinate maps.

mod json;
mod morphism;
mod solve;
mod verify;

use std::collections::BTreeMap;

use crate::cyclofield::{CycScalar, Field};
use crate::error::{Error, Result};
use crate::linalg::{add_term, SparseVec};

pub use json::FinHopfJson;
pub use morphism::{check_hopf_morphism, is_hopf_morphism, is_isomorphism, HopfMorphismCandidate, MorphismFailure};
pub use solve::{group_likes, is_group_like, skew_primitives};
pub use verify::{verify_hopf, Axiom, AxiomCheck, VerificationReport};

/// A vector in a [`FinHopf`], stored sparsely by basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct HopfElement {
    terms: BTreeMap<usize, CycScalar>,
}

impl HopfElement {
    pub fn zero() -> Self {
        HopfElement { terms: BTreeMap::new() }
    }

    pub fn basis(index: usize, field: &Field) -> Self {
        Self::monomial(index, CycScalar::one(field))
    }

    pub fn monomial(index: usize, coef: CycScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(index, coef);
        }
        HopfElement { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, CycScalar)>) -> Self {
        let mut out = SparseVec::new();
        for (i, c) in terms {
            add_term(&mut out, i, &c);
        }
        HopfElement { terms: out }
    }

    pub fn from_sparse(terms: SparseVec) -> Self {
        Self::from_terms(terms)
    }

    pub fn terms(&self) -> &BTreeMap<usize, CycScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<usize, CycScalar> {
        self.terms
    }

    pub fn coefficient(&self, index: usize, field: &Field) -> CycScalar {
        self.terms.get(&index).cloned().unwrap_or_else(|| CycScalar::zero(field))
    }

    /// Dense coordinates of length `dim`.
    pub fn coords(&self, dim: usize, field: &Field) -> Vec<CycScalar> {
        (0..dim).map(|i| self.coefficient(i, field)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, index: usize, coef: &CycScalar) {
        add_term(&mut self.terms, index, coef);
    }

    pub fn add_scaled(&mut self, other: &HopfElement, coef: &CycScalar) {
        if coef.is_zero() {
            return;
        }
        for (&i, c) in &other.terms {
            add_term(&mut self.terms, i, &(c * coef));
        }
    }

    pub fn add(&self, other: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (&i, c) in &other.terms {
            out.add_term(i, &-c);
        }
        out
    }

    pub fn scale(&self, coef: &CycScalar) -> HopfElement {
        let mut out = HopfElement::zero();
        out.add_scaled(self, coef);
        out
    }

    pub fn neg(&self) -> HopfElement {
        HopfElement { terms: self.terms.iter().map(|(&i, c)| (i, -c)).collect() }
    }

    /// The single `(index, coefficient)` pair when the element is a scaled basis vector.
    pub fn single_term(&self) -> Option<(usize, &CycScalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&i, c)| (i, c))
        } else {
            None
        }
    }
}

/// An element of `H ⊗ H`, keyed by pairs of basis indices.
pub type Tensor2 = BTreeMap<(usize, usize), CycScalar>;

pub fn add_tensor_term(t: &mut Tensor2, key: (usize, usize), coef: &CycScalar) {
    if coef.is_zero() {
        return;
    }
    match t.get_mut(&key) {
        Some(existing) => {
            *existing += coef;
            if existing.is_zero() {
                t.remove(&key);
            }
        }
        None => {
            t.insert(key, coef.clone());
        }
    }
}

/// `a ⊗ b` for two elements.
pub fn tensor_of(a: &HopfElement, b: &HopfElement) -> Tensor2 {
    let mut t = Tensor2::new();
    for (&i, c) in a.terms() {
        for (&j, d) in b.terms() {
            add_tensor_term(&mut t, (i, j), &(c * d));
        }
    }
    t
}

/// A finite-dimensional Hopf algebra by basis-indexed structure constants.
#[derive(Clone, Debug)]
pub struct FinHopf {
    field: Field,
    labels: Vec<String>,
    /// `mul[i * dim + j] = e_i e_j`.
    mul: Vec<HopfElement>,
    unit: HopfElement,
    comul: Vec<Tensor2>,
    counit: Vec<CycScalar>,
    /// `antipode[i] = S(e_i)`.
    antipode: Vec<HopfElement>,
}

impl PartialEq for FinHopf {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order()
            && self.labels == other.labels
            && self.mul == other.mul
            && self.unit == other.unit
            && self.comul == other.comul
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl FinHopf {
    /// Assembles a structure after checking that every tensor has the right
    /// shape and only refers to valid basis indices.
    pub fn from_parts(
        field: Field,
        labels: Vec<String>,
        mul: Vec<HopfElement>,
        unit: HopfElement,
        comul: Vec<Tensor2>,
        counit: Vec<CycScalar>,
        antipode: Vec<HopfElement>,
    ) -> Result<Self> {
        let h = FinHopf { field, labels, mul, unit, comul, counit, antipode };
        h.validate()?;
        Ok(h)
    }

    /// An algebra with a placeholder coalgebra, so that products in `H ⊗ H`
    /// can be used while the coalgebra maps are being computed.
    pub(crate) fn algebra_only(field: Field, labels: Vec<String>, mul: Vec<HopfElement>, unit: HopfElement) -> Self {
        let dim = labels.len();
        let zero = CycScalar::zero(&field);
        FinHopf {
            field,
            labels,
            mul,
            unit,
            comul: vec![Tensor2::new(); dim],
            counit: vec![zero; dim],
            antipode: vec![HopfElement::zero(); dim],
        }
    }

    pub(crate) fn with_coalgebra(
        mut self,
        comul: Vec<Tensor2>,
        counit: Vec<CycScalar>,
        antipode: Vec<HopfElement>,
    ) -> Result<Self> {
        self.comul = comul;
        self.counit = counit;
        self.antipode = antipode;
        self.validate()?;
        Ok(self)
    }

    /// Checks tensor dimensions and index ranges.
    pub fn validate(&self) -> Result<()> {
        let dim = self.labels.len();
        let bad = |what: String| Err(Error::Malformed(what));
        if dim == 0 {
            return bad("dimension must be positive".into());
        }
        if self.mul.len() != dim * dim {
            return bad(format!("mul has {} products, expected {}", self.mul.len(), dim * dim));
        }
        if self.comul.len() != dim {
            return bad(format!("comul has {} entries, expected {dim}", self.comul.len()));
        }
        if self.counit.len() != dim {
            return bad(format!("counit has {} entries, expected {dim}", self.counit.len()));
        }
        if self.antipode.len() != dim {
            return bad(format!("antipode has {} rows, expected {dim}", self.antipode.len()));
        }
        let in_range = |e: &HopfElement| e.terms.keys().all(|&k| k < dim);
        if !self.mul.iter().all(in_range) || !self.antipode.iter().all(in_range) || !in_range(&self.unit) {
            return bad("basis index out of range".into());
        }
        if !self.comul.iter().all(|t| t.keys().all(|&(a, b)| a < dim && b < dim)) {
            return bad("comul index out of range".into());
        }
        let order = self.field.order();
        let all_scalars = self
            .mul
            .iter()
            .chain(self.antipode.iter())
            .chain(std::iter::once(&self.unit))
            .flat_map(|e| e.terms.values())
            .chain(self.comul.iter().flat_map(|t| t.values()))
            .chain(self.counit.iter());
        for c in all_scalars {
            if c.field().order() != order {
                return bad("scalar from a different field".into());
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn basis(&self, i: usize) -> HopfElement {
        HopfElement::basis(i, &self.field)
    }

    pub fn one(&self) -> HopfElement {
        self.unit.clone()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &HopfElement {
        &self.mul[i * self.dim() + j]
    }

    pub fn comul_basis(&self, i: usize) -> &Tensor2 {
        &self.comul[i]
    }

    pub fn counit_basis(&self, i: usize) -> &CycScalar {
        &self.counit[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &HopfElement {
        &self.antipode[i]
    }

    pub fn multiply(&self, a: &HopfElement, b: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (&i, c) in a.terms() {
            for (&j, d) in b.terms() {
                out.add_scaled(self.mul_basis(i, j), &(c * d));
            }
        }
        out
    }

    pub fn comultiply(&self, a: &HopfElement) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, c) in a.terms() {
            for (&key, d) in &self.comul[i] {
                add_tensor_term(&mut out, key, &(c * d));
            }
        }
        out
    }

    pub fn counit(&self, a: &HopfElement) -> CycScalar {
        let mut acc = CycScalar::zero(&self.field);
        for (&i, c) in a.terms() {
            acc += &(c * &self.counit[i]);
        }
        acc
    }

    pub fn antipode(&self, a: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (&i, c) in a.terms() {
            out.add_scaled(&self.antipode[i], c);
        }
        out
    }

    /// Product in the tensor-square algebra `H ⊗ H`.
    pub fn tensor_multiply(&self, a: &Tensor2, b: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(i1, i2), c) in a {
            for (&(j1, j2), d) in b {
                let coef = c * d;
                let left = self.mul_basis(i1, j1);
                let right = self.mul_basis(i2, j2);
                for (&k1, l) in left.terms() {
                    let lc = &coef * l;
                    for (&k2, r) in right.terms() {
                        add_tensor_term(&mut out, (k1, k2), &(&lc * r));
                    }
                }
            }
        }
        out
    }

    /// Number of structure-constant entries (products, coproducts, counit
    /// values, antipode images, unit) that differ from `other`. Labels are
    /// not compared. Returns `usize::MAX` when dimensions or fields differ.
    pub fn structure_mismatches(&self, other: &FinHopf) -> usize {
        if self.dim() != other.dim() || self.field.order() != other.field.order() {
            return usize::MAX;
        }
        let mut count = 0;
        count += self.mul.iter().zip(&other.mul).filter(|(a, b)| a != b).count();
        count += self.comul.iter().zip(&other.comul).filter(|(a, b)| a != b).count();
        count += self.counit.iter().zip(&other.counit).filter(|(a, b)| a != b).count();
        count += self.antipode.iter().zip(&other.antipode).filter(|(a, b)| a != b).count();
        count += usize::from(self.unit != other.unit);
        count
    }

    /// Replaces the product of two basis elements; used to build deliberately
    /// broken structures.
    pub fn with_product(mut self, i: usize, j: usize, value: HopfElement) -> Self {
        let dim = self.dim();
        self.mul[i * dim + j] = value;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclofield::make_field;

    /// K[C_2] written out by hand.
    pub(crate) fn c2_group_algebra() -> FinHopf {
        let k = make_field(2).unwrap();
        let e = |i| HopfElement::basis(i, &k);
        let mul = vec![e(0), e(1), e(1), e(0)];
        let comul = (0..2).map(|i| tensor_of(&e(i), &e(i))).collect();
        let counit = vec![CycScalar::one(&k); 2];
        FinHopf::from_parts(k.clone(), vec!["1".into(), "g".into()], mul, e(0), comul, counit, vec![e(0), e(1)]).unwrap()
    }

    #[test]
    fn malformed_shapes_are_rejected() {
        let k = make_field(2).unwrap();
        let e = |i| HopfElement::basis(i, &k);
        let err = FinHopf::from_parts(k.clone(), vec!["1".into()], vec![], e(0), vec![Tensor2::new()], vec![CycScalar::one(&k)], vec![e(0)]);
        assert!(matches!(err, Err(Error::Malformed(_))));
        let err = FinHopf::from_parts(
            k.clone(),
            vec!["1".into()],
            vec![e(3)],
            e(0),
            vec![tensor_of(&e(0), &e(0))],
            vec![CycScalar::one(&k)],
            vec![e(0)],
        );
        assert!(matches!(err, Err(Error::Malformed(_))));
    }

    #[test]
    fn element_arithmetic() {
        let h = c2_group_algebra();
        let k = h.field().clone();
        let g = h.basis(1);
        let one = h.one();
        let x = one.sub(&g);
        // (1 - g)^2 = 2(1 - g)
        assert_eq!(h.multiply(&x, &x), x.scale(&CycScalar::from_integer(&k, 2)));
        assert!(h.counit(&x).is_zero());
        assert_eq!(x.coords(2, &k), vec![CycScalar::one(&k), CycScalar::from_integer(&k, -1)]);
    }
}
