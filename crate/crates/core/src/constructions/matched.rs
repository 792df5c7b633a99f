//! Matched pairs `(A, H, ▷, ◁)` and their axioms.

use super::group::MetacyclicGroup;
use super::taft::taft_index;
use super::SmashSpec;
use crate::cyclofield::CycScalar;
use crate::error::{Error, Result};
use crate::hopfcore::{add_tensor_term, tensor_of, FinHopf, HopfElement, Tensor2};

/// Actions `▷ : H ⊗ A → A` and `◁ : H ⊗ A → H` on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchedPairData {
    left_dim: usize,
    right_dim: usize,
    /// `left[y * dim A + a] = y ▷ a`.
    left: Vec<HopfElement>,
    /// `right[y * dim A + a] = y ◁ a`.
    right: Vec<HopfElement>,
    /// `(β, σ)` exponents when built from parameters.
    pub params: Option<(usize, usize)>,
}

impl MatchedPairData {
    /// `dim_a = dim A` (acted on from the left), `dim_h = dim H`.
    pub fn new(dim_a: usize, dim_h: usize, left: Vec<HopfElement>, right: Vec<HopfElement>) -> Result<Self> {
        if left.len() != dim_a * dim_h || right.len() != dim_a * dim_h {
            return Err(Error::Malformed("action tables must have dim A * dim H entries".into()));
        }
        Ok(MatchedPairData { left_dim: dim_a, right_dim: dim_h, left, right, params: None })
    }

    pub fn dim_a(&self) -> usize {
        self.left_dim
    }

    pub fn dim_h(&self) -> usize {
        self.right_dim
    }

    pub fn left_basis(&self, y: usize, a: usize) -> &HopfElement {
        &self.left[y * self.left_dim + a]
    }

    pub fn right_basis(&self, y: usize, a: usize) -> &HopfElement {
        &self.right[y * self.left_dim + a]
    }

    pub fn act_left(&self, y: &HopfElement, a: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (&i, c) in y.terms() {
            for (&j, d) in a.terms() {
                out.add_scaled(self.left_basis(i, j), &(c * d));
            }
        }
        out
    }

    pub fn act_right(&self, y: &HopfElement, a: &HopfElement) -> HopfElement {
        let mut out = HopfElement::zero();
        for (&i, c) in y.terms() {
            for (&j, d) in a.terms() {
                out.add_scaled(self.right_basis(i, j), &(c * d));
            }
        }
        out
    }

    /// True iff `y ◁ a = ε(a) y` on every basis pair.
    pub fn right_action_is_trivial(&self, a: &FinHopf) -> bool {
        (0..self.right_dim).all(|y| {
            (0..self.left_dim).all(|j| {
                let expected = HopfElement::monomial(y, a.counit_basis(j).clone());
                self.right_basis(y, j) == &expected
            })
        })
    }
}

/// `d^t c^i ▷ h^{a} x^{b} = β^{ib} σ^{tb} h^{a} x^{b}` with trivial right action,
/// on `A = T_{m²}(q)` and `H = K[G]`.
pub fn build_matched_pair(spec: &SmashSpec) -> Result<MatchedPairData> {
    spec.validate()?;
    let field = spec.field()?;
    let group = MetacyclicGroup::new(spec.group()?)?;
    let m = spec.m;
    let dim_a = m * m;
    let dim_h = group.order();
    let beta = spec.beta().exponent();
    let sigma = spec.sigma().exponent();
    let mut left = Vec::with_capacity(dim_a * dim_h);
    let mut right = Vec::with_capacity(dim_a * dim_h);
    for y in 0..dim_h {
        let (t, i) = group.exponents(y);
        for a in 0..dim_a {
            let (p, b) = (a / m, a % m);
            let e = (beta * i * b + sigma * t * b) as i64;
            left.push(HopfElement::monomial(taft_index(m, p, b), CycScalar::root(&field, e)));
            let eps = if b == 0 { CycScalar::one(&field) } else { CycScalar::zero(&field) };
            right.push(HopfElement::monomial(y, eps));
        }
    }
    let mut mp = MatchedPairData::new(dim_a, dim_h, left, right)?;
    mp.params = Some((beta, sigma));
    Ok(mp)
}

/// All axioms of a matched pair, checked on basis elements. Returns one
/// message per violated axiom (the first counterexample of each).
pub fn matched_pair_violations(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Vec<String> {
    let mut out = Vec::new();
    if mp.dim_a() != a.dim() || mp.dim_h() != h.dim() {
        out.push("dimension mismatch".to_string());
        return out;
    }
    let checks: [(&str, &dyn Fn() -> Option<String>); 8] = [
        ("left module", &|| left_module(a, h, mp)),
        ("left module coalgebra", &|| left_module_coalgebra(a, h, mp)),
        ("right module", &|| right_module(a, h, mp)),
        ("right module coalgebra", &|| right_module_coalgebra(a, h, mp)),
        ("mp1", &|| mp1(a, h, mp)),
        ("mp2", &|| mp2(a, h, mp)),
        ("mp3", &|| mp3(a, h, mp)),
        ("mp4", &|| mp4(a, h, mp)),
    ];
    for (name, check) in checks {
        if let Some(at) = check() {
            out.push(format!("{name} fails at {at}"));
        }
    }
    out
}

pub fn verify_matched_pair(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Result<()> {
    let v = matched_pair_violations(a, h, mp);
    if v.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidMatchedPair(v.join("; ")))
    }
}

fn pair(h: &FinHopf, y: usize, a: &FinHopf, j: usize) -> String {
    format!("({}, {})", h.label(y), a.label(j))
}

fn left_module(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    let one = h.one();
    for j in 0..a.dim() {
        if mp.act_left(&one, &a.basis(j)) != a.basis(j) {
            return Some(format!("unit on {}", a.label(j)));
        }
    }
    for y in 0..h.dim() {
        for z in 0..h.dim() {
            for j in 0..a.dim() {
                let lhs = mp.act_left(h.mul_basis(y, z), &a.basis(j));
                let rhs = mp.act_left(&h.basis(y), mp.left_basis(z, j));
                if lhs != rhs {
                    return Some(format!("({}, {}, {})", h.label(y), h.label(z), a.label(j)));
                }
            }
        }
    }
    None
}

fn right_module(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    let one = a.one();
    for y in 0..h.dim() {
        if mp.act_right(&h.basis(y), &one) != h.basis(y) {
            return Some(format!("unit on {}", h.label(y)));
        }
    }
    for y in 0..h.dim() {
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = mp.act_right(&h.basis(y), a.mul_basis(i, j));
                let rhs = mp.act_right(mp.right_basis(y, i), &a.basis(j));
                if lhs != rhs {
                    return Some(format!("({}, {}, {})", h.label(y), a.label(i), a.label(j)));
                }
            }
        }
    }
    None
}

/// `Σ (y_(1) ⊙ a_(1)) ⊗ (y_(2) ⊙ a_(2))` for an action given on basis pairs.
fn act_on_coproducts(
    h: &FinHopf,
    a: &FinHopf,
    y: usize,
    j: usize,
    act: impl Fn(usize, usize) -> HopfElement,
) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&(y1, y2), c) in h.comul_basis(y) {
        for (&(a1, a2), d) in a.comul_basis(j) {
            let coef = c * d;
            for (k, v) in tensor_of(&act(y1, a1), &act(y2, a2)) {
                add_tensor_term(&mut out, k, &(&coef * &v));
            }
        }
    }
    out
}

fn left_module_coalgebra(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    for y in 0..h.dim() {
        for j in 0..a.dim() {
            let image = mp.left_basis(y, j);
            if a.counit(image) != h.counit_basis(y) * a.counit_basis(j) {
                return Some(format!("counit at {}", pair(h, y, a, j)));
            }
            let rhs = act_on_coproducts(h, a, y, j, |p, q| mp.left_basis(p, q).clone());
            if a.comultiply(image) != rhs {
                return Some(format!("comultiplication at {}", pair(h, y, a, j)));
            }
        }
    }
    None
}

fn right_module_coalgebra(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    for y in 0..h.dim() {
        for j in 0..a.dim() {
            let image = mp.right_basis(y, j);
            if h.counit(image) != h.counit_basis(y) * a.counit_basis(j) {
                return Some(format!("counit at {}", pair(h, y, a, j)));
            }
            let rhs = act_on_coproducts(h, a, y, j, |p, q| mp.right_basis(p, q).clone());
            if h.comultiply(image) != rhs {
                return Some(format!("comultiplication at {}", pair(h, y, a, j)));
            }
        }
    }
    None
}

fn mp1(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    for y in 0..h.dim() {
        if mp.act_left(&h.basis(y), &a.one()) != a.one().scale(h.counit_basis(y)) {
            return Some(format!("{} ▷ 1", h.label(y)));
        }
    }
    for j in 0..a.dim() {
        if mp.act_right(&h.one(), &a.basis(j)) != h.one().scale(a.counit_basis(j)) {
            return Some(format!("1 ◁ {}", a.label(j)));
        }
    }
    None
}

fn mp2(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    for y in 0..h.dim() {
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = mp.act_left(&h.basis(y), a.mul_basis(i, j));
                let mut rhs = HopfElement::zero();
                for (&(y1, y2), c) in h.comul_basis(y) {
                    for (&(a1, a2), d) in a.comul_basis(i) {
                        let first = mp.left_basis(y1, a1);
                        let second = mp.act_left(mp.right_basis(y2, a2), &a.basis(j));
                        rhs.add_scaled(&a.multiply(first, &second), &(c * d));
                    }
                }
                if lhs != rhs {
                    return Some(format!("({}, {}, {})", h.label(y), a.label(i), a.label(j)));
                }
            }
        }
    }
    None
}

fn mp3(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    for y in 0..h.dim() {
        for z in 0..h.dim() {
            for j in 0..a.dim() {
                let lhs = mp.act_right(h.mul_basis(y, z), &a.basis(j));
                let mut rhs = HopfElement::zero();
                for (&(z1, z2), c) in h.comul_basis(z) {
                    for (&(a1, a2), d) in a.comul_basis(j) {
                        let first = mp.act_right(&h.basis(y), mp.left_basis(z1, a1));
                        let second = mp.right_basis(z2, a2);
                        rhs.add_scaled(&h.multiply(&first, second), &(c * d));
                    }
                }
                if lhs != rhs {
                    return Some(format!("({}, {}, {})", h.label(y), h.label(z), a.label(j)));
                }
            }
        }
    }
    None
}

fn mp4(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Option<String> {
    for y in 0..h.dim() {
        for j in 0..a.dim() {
            let lhs = cross(h, a, y, j, mp, false);
            let rhs = cross(h, a, y, j, mp, true);
            if lhs != rhs {
                return Some(pair(h, y, a, j));
            }
        }
    }
    None
}

/// `Σ y_(1) ◁ a_(1) ⊗ y_(2) ▷ a_(2)`, or with the second Sweedler legs
/// used on the right side when `swapped`.
fn cross(h: &FinHopf, a: &FinHopf, y: usize, j: usize, mp: &MatchedPairData, swapped: bool) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&(y1, y2), c) in h.comul_basis(y) {
        for (&(a1, a2), d) in a.comul_basis(j) {
            let coef = c * d;
            let (r, l) = if swapped {
                (mp.right_basis(y2, a2), mp.left_basis(y1, a1))
            } else {
                (mp.right_basis(y1, a1), mp.left_basis(y2, a2))
            };
            for (k, v) in tensor_of(r, l) {
                add_tensor_term(&mut out, k, &(&coef * &v));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_group_algebra, build_taft};

    fn parts(spec: &SmashSpec) -> (FinHopf, FinHopf, MatchedPairData) {
        let a = build_taft(&spec.taft().unwrap()).unwrap();
        let h = build_group_algebra(&spec.group().unwrap(), &spec.field().unwrap()).unwrap();
        (a, h, build_matched_pair(spec).unwrap())
    }

    #[test]
    fn parametric_pairs_satisfy_axioms() {
        for (beta, sigma) in [(1, 1), (-1, 1)] {
            let spec = SmashSpec::dihedral_signs(2, 3, beta, sigma).unwrap();
            let (a, h, mp) = parts(&spec);
            assert_eq!(matched_pair_violations(&a, &h, &mp), Vec::<String>::new());
            assert!(mp.right_action_is_trivial(&a));
        }
    }

    #[test]
    fn c_acts_by_beta_on_x() {
        let spec = SmashSpec::dihedral_signs(2, 3, -1, 1).unwrap();
        let (a, h, mp) = parts(&spec);
        let c = h.basis(1);
        let x = a.basis(taft_index(2, 0, 1));
        let hh = a.basis(taft_index(2, 1, 0));
        assert_eq!(mp.act_left(&c, &x), x.neg());
        assert_eq!(mp.act_left(&c, &hh), hh);
    }

    #[test]
    fn broken_action_is_reported() {
        let spec = SmashSpec::dihedral_signs(2, 3, -1, 1).unwrap();
        let (a, h, mut mp) = parts(&spec);
        // c ▷ x = 2x violates the module axiom c^2 = 1.
        let two = CycScalar::from_integer(a.field(), 2);
        let idx = a.dim() + taft_index(2, 0, 1);
        mp.left[idx] = a.basis(taft_index(2, 0, 1)).scale(&two);
        let v = matched_pair_violations(&a, &h, &mp);
        assert!(v.iter().any(|s| s.starts_with("left module fails")), "{v:?}");
        assert!(verify_matched_pair(&a, &h, &mp).is_err());
    }
}
