//! Bicrossed products `A ⋈ H`, and the same algebras built directly from
//! generators and relations.

use super::matched::{build_matched_pair, verify_matched_pair, MatchedPairData};
use super::taft::{build_taft, taft_index, taft_label};
use super::{build_group_algebra, SmashSpec};
use crate::cyclofield::CycScalar;
use crate::error::Result;
use crate::hopfcore::{add_tensor_term, tensor_of, FinHopf, HopfElement, Tensor2};

pub fn smash_label(p: usize, b: usize, t: usize, i: usize) -> String {
    format!("{} # d^{t} c^{i}", taft_label(p, b))
}

/// `A ⋈ H` on the basis `a ⊗ y` (index `a · dim H + y`) with the tensor
/// coalgebra and `(a ⋈ y)(b ⋈ z) = a (y_(1) ▷ b_(1)) ⋈ (y_(2) ◁ b_(2)) z`.
pub fn build_bicrossed(a: &FinHopf, h: &FinHopf, mp: &MatchedPairData) -> Result<FinHopf> {
    verify_matched_pair(a, h, mp)?;
    let field = a.field().clone();
    let (da, dh) = (a.dim(), h.dim());
    let dim = da * dh;
    let join = |x: &HopfElement, y: &HopfElement| -> HopfElement {
        let mut out = HopfElement::zero();
        for (&i, c) in x.terms() {
            for (&j, d) in y.terms() {
                out.add_term(i * dh + j, &(c * d));
            }
        }
        out
    };

    let mut labels = Vec::with_capacity(dim);
    for i in 0..da {
        for y in 0..dh {
            labels.push(format!("{} # {}", a.label(i), h.label(y)));
        }
    }

    let mut mul = Vec::with_capacity(dim * dim);
    for u in 0..dim {
        let (ia, y) = (u / dh, u % dh);
        for v in 0..dim {
            let (ib, z) = (v / dh, v % dh);
            let mut out = HopfElement::zero();
            for (&(y1, y2), c) in h.comul_basis(y) {
                for (&(b1, b2), d) in a.comul_basis(ib) {
                    let left = a.multiply(&a.basis(ia), mp.left_basis(y1, b1));
                    if left.is_zero() {
                        continue;
                    }
                    let right = h.multiply(mp.right_basis(y2, b2), &h.basis(z));
                    out.add_scaled(&join(&left, &right), &(c * d));
                }
            }
            mul.push(out);
        }
    }
    let alg = FinHopf::algebra_only(field.clone(), labels, mul, join(&a.one(), &h.one()));

    let mut comul = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    let mut antipode = Vec::with_capacity(dim);
    for u in 0..dim {
        let (ia, y) = (u / dh, u % dh);
        let mut t = Tensor2::new();
        for (&(a1, a2), c) in a.comul_basis(ia) {
            for (&(y1, y2), d) in h.comul_basis(y) {
                add_tensor_term(&mut t, (a1 * dh + y1, a2 * dh + y2), &(c * d));
            }
        }
        comul.push(t);
        counit.push(a.counit_basis(ia) * h.counit_basis(y));
        // S(a ⋈ y) = (1 ⋈ S(y)) (S(a) ⋈ 1)
        let sy = join(&a.one(), h.antipode_basis(y));
        let sa = join(a.antipode_basis(ia), &h.one());
        antipode.push(alg.multiply(&sy, &sa));
    }
    alg.with_coalgebra(comul, counit, antipode)
}

/// The smash product built through the matched pair.
pub fn build_smash(spec: &SmashSpec) -> Result<FinHopf> {
    let a = build_taft(&spec.taft()?)?;
    let h = build_group_algebra(&spec.group()?, &spec.field()?)?;
    let mp = build_matched_pair(spec)?;
    build_bicrossed(&a, &h, &mp)
}

/// Normal monomial `h^p x^b d^t c^i` times a root of unity, or zero.
#[derive(Clone, Copy, Debug)]
struct Word {
    p: usize,
    b: usize,
    t: usize,
    i: usize,
    coef_exp: usize,
}

#[derive(Clone, Copy)]
enum Letter {
    H,
    X,
    D,
    C,
}

struct Rewriter {
    m: usize,
    l: usize,
    n: usize,
    k: usize,
    order: usize,
    q: usize,
    beta: usize,
    sigma: usize,
}

impl Rewriter {
    /// Right multiplication by one generator, moving it left into place.
    fn push(&self, w: Word, letter: Letter) -> Option<Word> {
        let order = self.order;
        match letter {
            // c and d commute with h; x^b h = q^b h x^b
            Letter::H => Some(Word { p: (w.p + 1) % self.m, coef_exp: (w.coef_exp + self.q * w.b) % order, ..w }),
            // c^i x = β^i x c^i, d^t x = σ^t x d^t
            Letter::X => {
                if w.b + 1 >= self.m {
                    return None;
                }
                let e = self.beta * w.i + self.sigma * w.t;
                Some(Word { b: w.b + 1, coef_exp: (w.coef_exp + e) % order, ..w })
            }
            // c^i d = d^{k^i} c^i, one c at a time
            Letter::D => {
                let mut shift = 1 % self.n;
                for _ in 0..w.i {
                    shift = shift * self.k % self.n;
                }
                Some(Word { t: (w.t + shift) % self.n, ..w })
            }
            Letter::C => Some(Word { i: (w.i + 1) % self.l, ..w }),
        }
    }

    fn index(&self, w: &Word) -> usize {
        taft_index(self.m, w.p, w.b) * (self.l * self.n) + w.t * self.l + w.i
    }

    fn word(&self, idx: usize) -> Word {
        let g = self.l * self.n;
        let (ta, gi) = (idx / g, idx % g);
        Word { p: ta / self.m, b: ta % self.m, t: gi / self.l, i: gi % self.l, coef_exp: 0 }
    }
}

/// The smash product built from generators `h, x, c, d` and the relations
/// `xh = qhx`, `ch = hc`, `dh = hd`, `cx = βxc`, `dx = σxd`, `cd = d^k c`,
/// with basis `h^p x^b d^t c^i` (same indices as [`build_smash`]).
pub fn build_smash_presentation(spec: &SmashSpec) -> Result<FinHopf> {
    spec.validate()?;
    let field = spec.field()?;
    let (m, l, n) = (spec.m, spec.l, spec.n);
    let rw = Rewriter {
        m,
        l,
        n,
        k: spec.k % n,
        order: spec.order(),
        q: spec.q().exponent(),
        beta: spec.beta().exponent(),
        sigma: spec.sigma().exponent(),
    };
    let dim = spec.dim();
    let letters_of = |w: &Word| {
        let mut v = Vec::new();
        v.extend(std::iter::repeat(Letter::H).take(w.p));
        v.extend(std::iter::repeat(Letter::X).take(w.b));
        v.extend(std::iter::repeat(Letter::D).take(w.t));
        v.extend(std::iter::repeat(Letter::C).take(w.i));
        v
    };

    let mut labels = Vec::with_capacity(dim);
    let mut mul = Vec::with_capacity(dim * dim);
    for u in 0..dim {
        let w = rw.word(u);
        labels.push(smash_label(w.p, w.b, w.t, w.i));
        for v in 0..dim {
            let letters = letters_of(&rw.word(v));
            let product = letters.into_iter().try_fold(w, |acc, letter| rw.push(acc, letter));
            mul.push(match product {
                Some(r) => HopfElement::monomial(rw.index(&r), CycScalar::root(&field, r.coef_exp as i64)),
                None => HopfElement::zero(),
            });
        }
    }
    let one = HopfElement::basis(0, &field);
    let alg = FinHopf::algebra_only(field.clone(), labels, mul, one.clone());

    let gen = |p, b, t, i| HopfElement::basis(rw.index(&Word { p, b, t, i, coef_exp: 0 }), &field);
    let (h, x, d, c) = (gen(1 % m, 0, 0, 0), gen(0, 1, 0, 0), gen(0, 0, 1 % n, 0), gen(0, 0, 0, 1 % l));
    let mut delta_x = tensor_of(&x, &h);
    for (key, v) in tensor_of(&one, &x) {
        add_tensor_term(&mut delta_x, key, &v);
    }
    let delta = |g: &HopfElement| tensor_of(g, g);
    let s_h = gen(m - 1, 0, 0, 0);
    let s_x = alg.multiply(&x, &s_h).neg();
    let s_d = gen(0, 0, n - 1, 0);
    let s_c = gen(0, 0, 0, l - 1);

    let mut comul = Vec::with_capacity(dim);
    let mut antipode = Vec::with_capacity(dim);
    let mut counit = Vec::with_capacity(dim);
    for u in 0..dim {
        let w = rw.word(u);
        let mut t = tensor_of(&one, &one);
        let mut s = one.clone();
        for letter in letters_of(&w) {
            let (dl, sl) = match letter {
                Letter::H => (delta(&h), &s_h),
                Letter::X => (delta_x.clone(), &s_x),
                Letter::D => (delta(&d), &s_d),
                Letter::C => (delta(&c), &s_c),
            };
            t = alg.tensor_multiply(&t, &dl);
            s = alg.multiply(sl, &s);
        }
        comul.push(t);
        antipode.push(s);
        counit.push(if w.b == 0 { CycScalar::one(&field) } else { CycScalar::zero(&field) });
    }
    alg.with_coalgebra(comul, counit, antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::verify_hopf;

    #[test]
    fn both_paths_agree_on_d6() {
        let spec = SmashSpec::dihedral_signs(2, 3, -1, 1).unwrap();
        let a = build_smash(&spec).unwrap();
        let b = build_smash_presentation(&spec).unwrap();
        assert_eq!(a.dim(), 24);
        assert_eq!(a.structure_mismatches(&b), 0);
        assert_eq!(a, b);
        assert!(verify_hopf(&b).unwrap().all_passed());
    }

    #[test]
    fn cx_is_beta_xc() {
        let spec = SmashSpec::dihedral_signs(2, 3, -1, 1).unwrap();
        let s = build_smash(&spec).unwrap();
        let c = s.basis(s.index_of("h^0 x^0 # d^0 c^1").unwrap());
        let x = s.basis(s.index_of("h^0 x^1 # d^0 c^0").unwrap());
        let d = s.basis(s.index_of("h^0 x^0 # d^1 c^0").unwrap());
        assert_eq!(s.multiply(&c, &x), s.multiply(&x, &c).neg());
        assert_eq!(s.antipode(&d), s.basis(s.index_of("h^0 x^0 # d^2 c^0").unwrap()));
        assert!(s.counit(&x).is_zero());
        assert!(s.counit(&c).is_one() && s.counit(&d).is_one());
    }
}
