//! Metacyclic groups and their group algebras.

use super::MetacyclicSpec;
use crate::cyclofield::{CycScalar, Field};
use crate::error::Result;
use crate::hopfcore::{tensor_of, FinHopf, HopfElement};

/// Elements `d^t c^i` of a metacyclic group, indexed by `t·l + i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetacyclicGroup {
    spec: MetacyclicSpec,
    /// `k^i mod n` for `0 <= i < l`.
    k_powers: Vec<usize>,
}

impl MetacyclicGroup {
    pub fn new(spec: MetacyclicSpec) -> Result<Self> {
        spec.validate()?;
        let mut k_powers = Vec::with_capacity(spec.l);
        let mut p = 1 % spec.n;
        for _ in 0..spec.l {
            k_powers.push(p);
            p = p * (spec.k % spec.n) % spec.n;
        }
        Ok(MetacyclicGroup { spec, k_powers })
    }

    pub fn spec(&self) -> &MetacyclicSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.spec.order()
    }

    pub fn index(&self, t: usize, i: usize) -> usize {
        (t % self.spec.n) * self.spec.l + i % self.spec.l
    }

    /// `(t, i)` with the element equal to `d^t c^i`.
    pub fn exponents(&self, g: usize) -> (usize, usize) {
        (g / self.spec.l, g % self.spec.l)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn c(&self) -> usize {
        self.index(0, 1)
    }

    pub fn d(&self) -> usize {
        self.index(1, 0)
    }

    /// `(d^t c^i)(d^s c^j) = d^{t + s k^i} c^{i + j}`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (t, i) = self.exponents(a);
        let (s, j) = self.exponents(b);
        self.index(t + s * self.k_powers[i], i + j)
    }

    pub fn pow(&self, g: usize, e: usize) -> usize {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, g))
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.mul(g, h) == 0).expect("finite group")
    }

    pub fn label(&self, g: usize) -> String {
        let (t, i) = self.exponents(g);
        format!("d^{t} c^{i}")
    }
}

/// `K[G]` on the basis `d^t c^i`, all basis elements group-like.
pub fn build_group_algebra(spec: &MetacyclicSpec, field: &Field) -> Result<FinHopf> {
    let group = MetacyclicGroup::new(*spec)?;
    let dim = group.order();
    let e = |i| HopfElement::basis(i, field);
    let labels = (0..dim).map(|g| group.label(g)).collect();
    let mut mul = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            mul.push(e(group.mul(a, b)));
        }
    }
    let comul = (0..dim).map(|g| tensor_of(&e(g), &e(g))).collect();
    let counit = vec![CycScalar::one(field); dim];
    let antipode = (0..dim).map(|g| e(group.inverse(g))).collect();
    FinHopf::from_parts(field.clone(), labels, mul, e(0), comul, counit, antipode)
}
