//! Extension of generator data to full actions, with early rejection.

use std::fmt;

use super::skeleton::Skeleton;
use super::{ActionCandidate, GeneratorAction, SearchSpace};
use crate::constructions::{matched_pair_violations, taft_index, MatchedPairData};
use crate::cyclofield::CycScalar;
use crate::hopfcore::{add_tensor_term, tensor_of, HopfElement, Tensor2};

/// Why a candidate does not extend to a matched pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    /// No consistent action on group-like elements.
    GroupLikes,
    /// The compatibility `y_(1) ◁ a_(1) ⊗ y_(2) ▷ a_(2) = y_(2) ◁ a_(2) ⊗ y_(1) ▷ a_(1)` fails at `(g, x)`.
    Mp4 { generator: String },
    /// `g ▷ (xh) ≠ q g ▷ (hx)`.
    QCommutation { generator: String },
    /// The extension leaves the span of group-likes and `x`.
    OutOfSpan,
    GroupRelation(String),
    TaftRelation(String),
    Axiom(String),
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectReason::GroupLikes => write!(f, "no consistent action on group-likes"),
            RejectReason::Mp4 { generator } => write!(f, "mp4 fails at ({generator}, x)"),
            RejectReason::QCommutation { generator } => write!(f, "xh = qhx not preserved by {generator}"),
            RejectReason::OutOfSpan => write!(f, "extension leaves span of group-likes and x"),
            RejectReason::GroupRelation(r) => write!(f, "group relation {r} fails"),
            RejectReason::TaftRelation(r) => write!(f, "Taft relation {r} fails"),
            RejectReason::Axiom(a) => write!(f, "{a}"),
        }
    }
}

impl SearchSpace {
    pub(crate) fn h_pow(&self, p: usize) -> HopfElement {
        self.taft.basis(taft_index(self.m, p % self.m, 0))
    }

    pub(crate) fn x(&self) -> HopfElement {
        self.taft.basis(taft_index(self.m, 0, 1))
    }

    /// `g ▷ x` as an element of the Taft algebra.
    pub(crate) fn left_x(&self, ga: &GeneratorAction) -> HopfElement {
        let k = &self.field;
        let alpha = ga.alpha.to_scalar(k);
        if ga.h_exp == 1 {
            // α(1 − h) + βx
            let mut e = self.h_pow(0).sub(&self.h_pow(1)).scale(&alpha);
            e.add_scaled(&self.x(), &ga.beta.to_scalar(k));
            e
        } else {
            self.h_pow(ga.h_exp).sub(&self.h_pow(0)).scale(&alpha)
        }
    }

    /// `γ(g − g')` in `K[G]`.
    pub(crate) fn right_x(&self, ga: &GeneratorAction) -> HopfElement {
        let gamma = ga.gamma.to_scalar(&self.field);
        self.group_alg.basis(ga.generator).sub(&self.group_alg.basis(ga.right_h)).scale(&gamma)
    }

    /// Checks that only involve one generator's data.
    pub(crate) fn check_generator(&self, ga: &GeneratorAction) -> Result<(), RejectReason> {
        let g = self.group_alg.basis(ga.generator);
        let g2 = self.group_alg.basis(ga.right_h);
        let hi = self.h_pow(ga.h_exp);
        let one = self.h_pow(0);
        let gx = self.left_x(ga);
        let rx = self.right_x(ga);
        let mut lhs = tensor_of(&rx, &hi);
        for (k, c) in tensor_of(&g, &gx) {
            add_tensor_term(&mut lhs, k, &c);
        }
        let mut rhs = tensor_of(&g2, &gx);
        for (k, c) in tensor_of(&rx, &one) {
            add_tensor_term(&mut rhs, k, &c);
        }
        if lhs != rhs {
            return Err(RejectReason::Mp4 { generator: self.group.label(ga.generator) });
        }
        if ga.right_h == ga.generator {
            // g ▷ (xh) = (g ▷ x) h^i and g ▷ (hx) = h^i (g ▷ x)
            let q = CycScalar::root(&self.field, self.q_exp as i64);
            if self.taft.multiply(&gx, &hi) != self.taft.multiply(&hi, &gx).scale(&q) {
                return Err(RejectReason::QCommutation { generator: self.group.label(ga.generator) });
            }
        }
        Ok(())
    }

    /// Full extension for one group-like skeleton. On success returns the
    /// actions on all basis pairs, already checked against every axiom.
    pub(crate) fn extend(&self, cand: &ActionCandidate, sk: &Skeleton) -> Result<MatchedPairData, RejectReason> {
        let ext = Extension { space: self, cand, sk };
        ext.run()
    }
}

/// Products `Y · a` in the would-be bicrossed product, as elements of `T ⊗ K[G]`
/// keyed by `(taft index, group index)`.
struct Extension<'a> {
    space: &'a SearchSpace,
    cand: &'a ActionCandidate,
    sk: &'a Skeleton,
}

impl Extension<'_> {
    fn gen_action(&self, g: usize) -> &GeneratorAction {
        self.cand.actions.iter().find(|a| a.generator == g).expect("generator in candidate")
    }

    fn right_group(&self, t: &Tensor2, z: usize) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, y), c) in t {
            add_tensor_term(&mut out, (a, self.space.group.mul(y, z)), c);
        }
        out
    }

    /// `g · x = (g ▷ x) ⊗ (g ◁ h) + 1 ⊗ (g ◁ x)`.
    fn gen_times_x(&self, g: usize) -> Tensor2 {
        let sp = self.space;
        let ga = self.gen_action(g);
        let mut t = tensor_of(&sp.left_x(ga), &sp.group_alg.basis(ga.right_h));
        for (k, c) in tensor_of(&sp.h_pow(0), &sp.right_x(ga)) {
            add_tensor_term(&mut t, k, &c);
        }
        t
    }

    /// Left multiplication by a generator on vectors supported on `h^p ⊗ Y` and `x ⊗ Y`.
    fn left_gen(&self, g: usize, v: &Tensor2) -> Result<Tensor2, RejectReason> {
        let m = self.space.m;
        let gx = self.gen_times_x(g);
        let mut out = Tensor2::new();
        for (&(a, y), c) in v {
            let (p, b) = (a / m, a % m);
            let part = match (p, b) {
                (p, 0) => {
                    let mut t = Tensor2::new();
                    t.insert((taft_index(m, self.sk.p(g, p), 0), self.sk.q(g, p)), CycScalar::one(&self.space.field));
                    t
                }
                (0, 1) => gx.clone(),
                _ => return Err(RejectReason::OutOfSpan),
            };
            for (k, d) in self.right_group(&part, y) {
                add_tensor_term(&mut out, k, &(c * &d));
            }
        }
        Ok(out)
    }

    /// `t · v` for `t` in `T` acting on the Taft factor.
    fn taft_left(&self, t: &HopfElement, v: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, y), c) in v {
            let prod = self.space.taft.multiply(t, &self.space.taft.basis(a));
            for (&k, d) in prod.terms() {
                add_tensor_term(&mut out, (k, y), &(c * d));
            }
        }
        out
    }

    /// `v · x`, given `Y · x` for every `Y`.
    fn times_x(&self, v: &Tensor2, yx: &[Tensor2]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, y), c) in v {
            let part = self.taft_left(&self.space.taft.basis(a), &yx[y]);
            for (k, d) in part {
                add_tensor_term(&mut out, k, &(c * &d));
            }
        }
        out
    }

    fn apply_word(&self, gens: &[usize], v: &Tensor2) -> Result<Tensor2, RejectReason> {
        let mut cur = v.clone();
        for &g in gens.iter().rev() {
            cur = self.left_gen(g, &cur)?;
        }
        Ok(cur)
    }

    fn run(&self) -> Result<MatchedPairData, RejectReason> {
        let sp = self.space;
        let group = &sp.group;
        let (m, order) = (sp.m, group.order());
        let k = &sp.field;
        let one = CycScalar::one(k);
        let x_idx = taft_index(m, 0, 1);
        let mut x1 = Tensor2::new();
        x1.insert((x_idx, 0), one.clone());

        // Group relations on x ⊗ 1.
        let spec = group.spec();
        let (c, d) = (group.c(), group.d());
        let has_c = sp.generators.contains(&c);
        let has_d = sp.generators.contains(&d);
        if has_c && self.apply_word(&vec![c; spec.l], &x1)? != x1 {
            return Err(RejectReason::GroupRelation(format!("c^{} = 1", spec.l)));
        }
        if has_d && self.apply_word(&vec![d; spec.n], &x1)? != x1 {
            return Err(RejectReason::GroupRelation(format!("d^{} = 1", spec.n)));
        }
        if has_c && has_d {
            let mut rhs_word = vec![d; spec.k % spec.n];
            rhs_word.push(c);
            if self.apply_word(&[c, d], &x1)? != self.apply_word(&rhs_word, &x1)? {
                return Err(RejectReason::GroupRelation(format!("cd = d^{} c", spec.k)));
            }
        }

        // Y · x along canonical words d^t c^i = d (d^{t-1} c^i) or c (c^{i-1}).
        let mut yx: Vec<Option<Tensor2>> = vec![None; order];
        yx[0] = Some(x1.clone());
        for y in 1..order {
            let (t, i) = group.exponents(y);
            let (g, rest) = if t > 0 { (d, group.index(t - 1, i)) } else { (c, group.index(0, i - 1)) };
            let prev = yx[rest].clone().expect("shorter word computed first");
            yx[y] = Some(self.left_gen(g, &prev)?);
        }
        let yx: Vec<Tensor2> = yx.into_iter().map(|v| v.expect("all computed")).collect();
        for y in 0..order {
            for &g in &sp.generators {
                if self.left_gen(g, &yx[y])? != yx[group.mul(g, y)] {
                    return Err(RejectReason::GroupRelation(format!("action of {} on words", group.label(g))));
                }
            }
        }

        // x h = q h x
        let q = CycScalar::root(k, sp.q_exp as i64);
        for z in 0..order {
            let mut xh = Tensor2::new();
            for (&(a, y), cf) in &yx[z] {
                let part = self.taft_left(&sp.taft.basis(a), &self.h_times(y));
                for (key, v) in part {
                    add_tensor_term(&mut xh, key, &(cf * &v));
                }
            }
            let hx = self.taft_left(&sp.h_pow(self.sk.p(z, 1)), &yx[self.sk.q(z, 1)]);
            let mut scaled = Tensor2::new();
            for (key, v) in hx {
                add_tensor_term(&mut scaled, key, &(&v * &q));
            }
            if xh != scaled {
                return Err(RejectReason::TaftRelation("xh = qhx".into()));
            }
        }

        // Z · x^b for all b < m, and x^m = 0.
        let mut powers: Vec<Vec<Tensor2>> = Vec::with_capacity(order);
        for z in 0..order {
            let mut row = Vec::with_capacity(m);
            let mut cur = Tensor2::new();
            cur.insert((0, z), one.clone());
            for _ in 0..m {
                row.push(cur.clone());
                cur = self.times_x(&cur, &yx);
            }
            if !cur.is_empty() {
                return Err(RejectReason::TaftRelation(format!("x^{m} = 0")));
            }
            powers.push(row);
        }

        // Y · h^p x^b = h^{P(Y,p)} (Q(Y,p) · x^b); split into both actions.
        let dim_t = m * m;
        let mut left = Vec::with_capacity(order * dim_t);
        let mut right = Vec::with_capacity(order * dim_t);
        for y in 0..order {
            for a in 0..dim_t {
                let (p, b) = (a / m, a % m);
                let prod = self.taft_left(&sp.h_pow(self.sk.p(y, p)), &powers[self.sk.q(y, p)][b]);
                let mut l = HopfElement::zero();
                let mut r = HopfElement::zero();
                for (&(ta, gy), cf) in &prod {
                    l.add_term(ta, cf);
                    r.add_term(gy, &(cf * sp.taft.counit_basis(ta)));
                }
                left.push(l);
                right.push(r);
            }
        }
        let mp = MatchedPairData::new(dim_t, order, left, right).expect("table sizes match");
        let violations = matched_pair_violations(&sp.taft, &sp.group_alg, &mp);
        if let Some(v) = violations.into_iter().next() {
            return Err(RejectReason::Axiom(v));
        }
        Ok(mp)
    }

    /// `Y · h = h^{P(Y,1)} ⊗ Q(Y,1)`.
    fn h_times(&self, y: usize) -> Tensor2 {
        let mut t = Tensor2::new();
        t.insert((taft_index(self.space.m, self.sk.p(y, 1), 0), self.sk.q(y, 1)), CycScalar::one(&self.space.field));
        t
    }
}
