//! Isomorphism classes of the smash products `T_{m²}(q) # K[D_{2n}]`.

use num_integer::Integer;

use crate::constructions::{build_smash, taft_index, MetacyclicGroup, MetacyclicSpec, SmashSpec};
use crate::cyclofield::{CycScalar, RootOfUnity};
use crate::error::{Error, Result};
use crate::hopfcore::{is_isomorphism, FinHopf, HopfElement, HopfMorphismCandidate};
use crate::matchedpairsearch::max_candidates;

/// The automorphism `c ↦ d^s c`, `d ↦ d^t` of `D_{2n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralAut {
    pub s: usize,
    pub t: usize,
}

impl DihedralAut {
    pub fn identity() -> Self {
        DihedralAut { s: 0, t: 1 }
    }

    /// Image of `d^a c^b`, i.e. `d^{ta} (d^s c)^b`, as a group index.
    pub fn apply(&self, group: &MetacyclicGroup, g: usize) -> usize {
        let (a, b) = group.exponents(g);
        let vc = group.index(self.s, 1);
        let vd = group.index(self.t, 0);
        group.mul(group.pow(vd, a), group.pow(vc, b))
    }

    /// Checks `gcd(t, n) = 1` and that the images satisfy the defining
    /// relations and give a bijection.
    pub fn validate(&self, group: &MetacyclicGroup) -> Result<()> {
        let spec = group.spec();
        let n = spec.n;
        if self.s >= n || self.t >= n || self.t.gcd(&n) != 1 {
            return Err(Error::InvalidWitness(format!("(s, t) = ({}, {}) is not an automorphism datum", self.s, self.t)));
        }
        let vc = group.index(self.s, 1);
        let vd = group.index(self.t, 0);
        let relations = group.pow(vc, spec.l) == 0
            && group.pow(vd, n) == 0
            && group.mul(vc, vd) == group.mul(group.pow(vd, spec.k), vc);
        let mut images: Vec<usize> = (0..group.order()).map(|g| self.apply(group, g)).collect();
        images.sort_unstable();
        images.dedup();
        if !relations || images.len() != group.order() {
            return Err(Error::InvalidWitness("images of c, d do not define an automorphism".into()));
        }
        Ok(())
    }
}

/// Data of an isomorphism `T^{β,σ} → T^{β̄,σ̄}`:
/// `h^a x^b # y ↦ γ^b h^a x^b r(y) # v(y)` with `r(d^i c^j) = h^{i·d_exp + j·c_exp}`
/// and `v` the automorphism `(s, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoWitness {
    pub c_exp: usize,
    pub d_exp: usize,
    pub aut: DihedralAut,
    pub gamma_exp: usize,
}

impl IsoWitness {
    pub fn identity() -> Self {
        IsoWitness { c_exp: 0, d_exp: 0, aut: DihedralAut::identity(), gamma_exp: 0 }
    }

    /// `(f, F, s, t)`.
    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.c_exp, self.d_exp, self.aut.s, self.aut.t)
    }
}

fn check_dihedral(spec: &SmashSpec) -> Result<()> {
    if spec.l != 2 || spec.n < 3 || spec.k % spec.n != spec.n - 1 {
        return Err(Error::OutOfScope(format!(
            "classification needs a dihedral group D_2n with n >= 3, got l={}, n={}, k={}",
            spec.l, spec.n, spec.k
        )));
    }
    spec.validate()
}

fn check_pair(a: &SmashSpec, b: &SmashSpec) -> Result<()> {
    check_dihedral(a)?;
    check_dihedral(b)?;
    if a.m != b.m || a.n != b.n || a.order() != b.order() || a.q() != b.q() {
        return Err(Error::OutOfScope("both algebras must share m, n, q and the field".into()));
    }
    Ok(())
}

/// Whether `(f, F, s, t)` satisfies the divisibility and root conditions for `a → b`.
pub fn witness_conditions_hold(w: &IsoWitness, a: &SmashSpec, b: &SmashSpec) -> bool {
    let (m, n) = (a.m, a.n);
    let (f, big_f, s, t) = w.tuple();
    if f >= m || big_f >= m || s >= n || t >= n || t.gcd(&n) != 1 {
        return false;
    }
    if (2 * f) % m != 0 || (n * big_f) % m != 0 || (2 * big_f) % m != 0 {
        return false;
    }
    let q = a.q();
    let lhs_c = q.pow(f as i64);
    let rhs_c = a.beta().mul(&b.beta()).mul(&b.sigma().pow(s as i64));
    let lhs_d = q.pow(big_f as i64);
    let rhs_d = a.sigma().mul(&b.sigma().pow(t as i64));
    lhs_c == rhs_c && lhs_d == rhs_d
}

/// The lexicographically smallest `(f, F, s, t)` witness, with `γ = 1`.
pub fn are_isomorphic(a: &SmashSpec, b: &SmashSpec) -> Result<Option<IsoWitness>> {
    check_pair(a, b)?;
    let (m, n) = (a.m, a.n);
    for f in 0..m {
        for big_f in 0..m {
            for s in 0..n {
                for t in 0..n {
                    let w = IsoWitness { c_exp: f, d_exp: big_f, aut: DihedralAut { s, t }, gamma_exp: 0 };
                    if witness_conditions_hold(&w, a, b) {
                        return Ok(Some(w));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn smash_index(spec: &SmashSpec, p: usize, b: usize, g: usize) -> usize {
    taft_index(spec.m, p % spec.m, b) * (spec.l * spec.n) + g
}

/// The matrix of the witness map, a monomial matrix on the smash basis.
pub fn build_witness_map(w: &IsoWitness, a: &SmashSpec, b: &SmashSpec) -> Result<HopfMorphismCandidate> {
    check_pair(a, b)?;
    let group = MetacyclicGroup::new(a.group()?)?;
    w.aut.validate(&group)?;
    if !witness_conditions_hold(w, a, b) {
        return Err(Error::InvalidWitness(format!("{:?} does not satisfy the isomorphism conditions", w.tuple())));
    }
    let field = a.field()?;
    let m = a.m;
    let q = a.q().exponent();
    let mut images = Vec::with_capacity(a.dim());
    for ta in 0..m * m {
        let (p, bx) = (ta / m, ta % m);
        for g in 0..group.order() {
            let (i, j) = group.exponents(g);
            let shift = i * w.d_exp + j * w.c_exp;
            // x^b h^R = q^{bR} h^R x^b
            let e = (w.gamma_exp * bx + q * bx * shift) as i64;
            let target = smash_index(a, p + shift, bx, w.aut.apply(&group, g));
            images.push(HopfElement::monomial(target, CycScalar::root(&field, e)));
        }
    }
    Ok(HopfMorphismCandidate::new(images, a.dim()))
}

/// The witness of the inverse map `b → a`.
pub fn build_inverse_witness(w: &IsoWitness, a: &SmashSpec, b: &SmashSpec) -> Result<IsoWitness> {
    check_pair(a, b)?;
    let (m, n) = (a.m as i64, a.n as i64);
    let (f, big_f, s, t) = w.tuple();
    let eg = (t as i64).extended_gcd(&n);
    if eg.gcd != 1 {
        return Err(Error::InvalidWitness(format!("gcd({t}, {n}) != 1")));
    }
    // t τ + n τ' = 1
    let tau1 = eg.x.rem_euclid(n);
    let tau2 = (-tau1 * s as i64).rem_euclid(n);
    let f_bar = (-(f as i64) - big_f as i64 * tau2).rem_euclid(m);
    let big_f_bar = (-(big_f as i64) * tau1).rem_euclid(m);
    let order = a.order();
    let inv = IsoWitness {
        c_exp: f_bar as usize,
        d_exp: big_f_bar as usize,
        aut: DihedralAut { s: tau2 as usize, t: tau1 as usize },
        gamma_exp: (order - w.gamma_exp % order) % order,
    };
    if !witness_conditions_hold(&inv, b, a) {
        return Err(Error::InvalidWitness("inverse data fails the isomorphism conditions".into()));
    }
    Ok(inv)
}

/// `U_2 × U_{gcd(n, n−2)}` as `(β, σ)` exponents, sorted.
pub fn parameter_set(m: usize, n: usize) -> Vec<(usize, usize)> {
    let spec = MetacyclicSpec { l: 2, n, k: n.saturating_sub(1) };
    let order = SmashSpec::default_order(m, 2, n);
    crate::matchedpairsearch::expected_params(&spec, order)
}

fn dihedral_spec(m: usize, q_exp: i64, n: usize, params: (usize, usize)) -> Result<SmashSpec> {
    let spec = SmashSpec {
        m,
        q_exp,
        l: 2,
        n,
        k: n.saturating_sub(1),
        beta_exp: params.0 as i64,
        sigma_exp: params.1 as i64,
        field_order: None,
    };
    check_dihedral(&spec)?;
    Ok(spec.normalized())
}

/// Isomorphism classes of `T^{β,σ}`, each sorted, ordered by smallest member.
pub fn classify(m: usize, q_exp: i64, n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    let params = parameter_set(m, n);
    let specs = params.iter().map(|&p| dihedral_spec(m, q_exp, n, p)).collect::<Result<Vec<_>>>()?;
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for i in 0..params.len() {
        for class in classes.iter_mut() {
            if are_isomorphic(&specs[class[0]], &specs[i])?.is_some() {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes.into_iter().map(|c| c.into_iter().map(|i| params[i]).collect()).collect())
}

/// Class count by parity: 2 if `m`, `n` are both odd, 3 if `m` is odd and `n` even, 1 otherwise.
pub fn predicted_count(m: usize, n: usize) -> usize {
    match (m % 2, n % 2) {
        (1, 1) => 2,
        (1, 0) => 3,
        _ => 1,
    }
}

/// Number of maps tried by [`oracle_isomorphic`].
pub fn oracle_candidate_count(a: &SmashSpec) -> u128 {
    let n = a.n;
    let units = (0..n).filter(|t| t.gcd(&n) == 1).count() as u128;
    a.order() as u128 * (a.m * a.m) as u128 * n as u128 * units
}

/// Independent check: tries every map `a # y ↦ u(a) r(y) # v(y)` with
/// `u(x) = γx` for all `N`-th roots `γ`, `r(d^i c^j) = h^{iF + jf}` for all
/// `f, F`, and `v` any automorphism `(s, t)`, all evaluated by multiplying
/// generators inside the target algebra. True iff one is an isomorphism.
pub fn oracle_isomorphic(a: &SmashSpec, b: &SmashSpec, bound: u128) -> Result<bool> {
    check_pair(a, b)?;
    let count = oracle_candidate_count(a);
    if count > bound {
        return Err(Error::ScaleGuard { count, bound });
    }
    let ha = build_smash(a)?;
    let hb = build_smash(b)?;
    oracle_on(a, &ha, &hb)
}

/// [`oracle_isomorphic`] with prebuilt algebras and the default bound.
pub fn oracle_isomorphic_built(a: &SmashSpec, ha: &FinHopf, hb: &FinHopf) -> Result<bool> {
    let count = oracle_candidate_count(a);
    let bound = max_candidates();
    if count > bound {
        return Err(Error::ScaleGuard { count, bound });
    }
    oracle_on(a, ha, hb)
}

fn oracle_on(a: &SmashSpec, ha: &FinHopf, hb: &FinHopf) -> Result<bool> {
    let (m, n) = (a.m, a.n);
    let group = MetacyclicGroup::new(a.group()?)?;
    let field = hb.field().clone();
    let order = a.order();
    let gdim = group.order();
    let gen = |p, bx, g| hb.basis(smash_index(a, p, bx, g));
    let h = gen(1, 0, 0);
    let x = gen(0, 1, 0);
    let c = gen(0, 0, group.c());
    let d = gen(0, 0, group.d());
    let one = hb.one();
    let power = |e: &HopfElement, k: usize| (0..k).fold(one.clone(), |acc, _| hb.multiply(&acc, e));
    let h_pows: Vec<HopfElement> = (0..m).map(|k| power(&h, k)).collect();

    let units: Vec<usize> = (0..n).filter(|t| t.gcd(&n) == 1).collect();
    for gamma in 0..order {
        let gx = x.scale(&RootOfUnity::new(gamma, order).to_scalar(&field));
        let u: Vec<HopfElement> =
            (0..m * m).map(|ta| hb.multiply(&h_pows[ta / m], &power(&gx, ta % m))).collect();
        for f in 0..m {
            for big_f in 0..m {
                let r: Vec<&HopfElement> = (0..gdim)
                    .map(|g| {
                        let (i, j) = group.exponents(g);
                        &h_pows[(i * big_f + j * f) % m]
                    })
                    .collect();
                for s in 0..n {
                    for &t in &units {
                        let vc = hb.multiply(&power(&d, s), &c);
                        let vd = power(&d, t);
                        let v: Vec<HopfElement> = (0..gdim)
                            .map(|g| {
                                let (i, j) = group.exponents(g);
                                hb.multiply(&power(&vd, i), &power(&vc, j))
                            })
                            .collect();
                        let mut images = Vec::with_capacity(ha.dim());
                        for ua in &u {
                            for g in 0..gdim {
                                images.push(hb.multiply(&hb.multiply(ua, r[g]), &v[g]));
                            }
                        }
                        let psi = HopfMorphismCandidate::new(images, hb.dim());
                        if is_isomorphism(&psi, ha, hb) {
                            return Ok(true);
                        }
                    }
                }
            }
        }
    }
    Ok(false)
}
