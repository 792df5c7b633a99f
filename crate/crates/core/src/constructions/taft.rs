//! Taft algebras `T_{m²}(q)`.

use super::TaftSpec;
use crate::cyclofield::{CycScalar, Field};
use crate::error::Result;
use crate::hopfcore::{tensor_of, FinHopf, HopfElement, Tensor2};

pub fn taft_index(m: usize, i: usize, j: usize) -> usize {
    (i % m) * m + j
}

pub fn taft_label(i: usize, j: usize) -> String {
    format!("h^{i} x^{j}")
}

/// Multiplication table on `h^i x^j` from `(h^i x^j)(h^k x^l) = q^{jk} h^{i+k} x^{j+l}`.
pub(crate) fn taft_products(m: usize, q_exp: usize, field: &Field) -> Vec<HopfElement> {
    let dim = m * m;
    let mut mul = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        let (i, j) = (a / m, a % m);
        for b in 0..dim {
            let (k, l) = (b / m, b % m);
            if j + l >= m {
                mul.push(HopfElement::zero());
            } else {
                let coef = CycScalar::root(field, (q_exp * j * k) as i64);
                mul.push(HopfElement::monomial(taft_index(m, i + k, j + l), coef));
            }
        }
    }
    mul
}

pub fn build_taft(spec: &TaftSpec) -> Result<FinHopf> {
    let field = spec.field()?;
    let m = spec.m;
    let dim = m * m;
    let labels = (0..dim).map(|a| taft_label(a / m, a % m)).collect();
    let alg = FinHopf::algebra_only(field.clone(), labels, taft_products(m, spec.q.exponent(), &field), HopfElement::basis(0, &field));

    let e = |i| HopfElement::basis(i, &field);
    let h = e(taft_index(m, 1, 0));
    let x = e(taft_index(m, 0, 1));
    let one = e(0);
    let delta_h = tensor_of(&h, &h);
    let mut delta_x = tensor_of(&x, &h);
    for (k, c) in tensor_of(&one, &x) {
        crate::hopfcore::add_tensor_term(&mut delta_x, k, &c);
    }
    let s_h = alg.basis(taft_index(m, m - 1, 0));
    let s_x = alg.multiply(&x, &s_h).neg();

    let mut comul = Vec::with_capacity(dim);
    let mut antipode = Vec::with_capacity(dim);
    for a in 0..dim {
        let (i, j) = (a / m, a % m);
        let mut d: Tensor2 = tensor_of(&one, &one);
        let mut s = one.clone();
        for _ in 0..i {
            d = alg.tensor_multiply(&d, &delta_h);
            s = alg.multiply(&s_h, &s);
        }
        for _ in 0..j {
            d = alg.tensor_multiply(&d, &delta_x);
            s = alg.multiply(&s_x, &s);
        }
        comul.push(d);
        antipode.push(s);
    }
    let counit = (0..dim)
        .map(|a| if a % m == 0 { CycScalar::one(&field) } else { CycScalar::zero(&field) })
        .collect();
    alg.with_coalgebra(comul, counit, antipode)
}
