//! Exhaustive search for matched pairs between a metacyclic group algebra
//! `K[G]` and a Taft algebra `T_{m²}(q)`.
//!
//! A candidate fixes, for each generator `g` of `G`, the images `g ▷ h`,
//! `g ▷ x`, `g ◁ h` and `g ◁ x` in the only shapes allowed by the coalgebra
//! conditions. Coefficients range over a finite pool `{0} ∪ U_L`.
//! Each candidate is extended to full actions and checked exactly.

mod extend;
mod skeleton;

use num_integer::Integer;

use crate::constructions::{build_group_algebra, build_taft, MatchedPairData, MetacyclicGroup, MetacyclicSpec, TaftSpec};
use crate::cyclofield::{make_field, CycScalar, Field};
use crate::error::{Error, Result};
use crate::hopfcore::FinHopf;

pub use extend::RejectReason;
pub use skeleton::{solve_skeletons, Skeleton};

/// Default bound on the number of candidates a search will consider.
pub const DEFAULT_MAX_CANDIDATES: u128 = 10_000_000;

/// Candidate bound, overridable through `HOPF_MAX_CANDIDATES`.
pub fn max_candidates() -> u128 {
    std::env::var("HOPF_MAX_CANDIDATES").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MAX_CANDIDATES)
}

/// A pool coefficient: zero or `ζ_N^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coefficient {
    Zero,
    Root(usize),
}

impl Coefficient {
    pub fn to_scalar(self, field: &Field) -> CycScalar {
        match self {
            Coefficient::Zero => CycScalar::zero(field),
            Coefficient::Root(e) => CycScalar::root(field, e as i64),
        }
    }

    pub fn exponent(self) -> Option<usize> {
        match self {
            Coefficient::Zero => None,
            Coefficient::Root(e) => Some(e),
        }
    }
}

/// Data for one generator `g`:
/// `g ▷ h = h^h_exp`; `g ▷ x = α(1 − h) + βx` if `h_exp = 1`, else `α(h^h_exp − 1)`;
/// `g ◁ h = right_h`; `g ◁ x = γ(g − right_h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorAction {
    pub generator: usize,
    pub h_exp: usize,
    pub alpha: Coefficient,
    pub beta: Coefficient,
    pub right_h: usize,
    pub gamma: Coefficient,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionCandidate {
    pub actions: Vec<GeneratorAction>,
}

impl ActionCandidate {
    pub fn action(&self, generator: usize) -> Option<&GeneratorAction> {
        self.actions.iter().find(|a| a.generator == generator)
    }
}

/// Everything fixed during a search: the group, the Taft algebra and the pool.
pub struct SearchSpace {
    pub(crate) group: MetacyclicGroup,
    pub(crate) m: usize,
    pub(crate) q_exp: usize,
    pub(crate) field: Field,
    pub(crate) pool: Vec<Coefficient>,
    /// Group indices of the nontrivial generators among `c`, `d`.
    pub(crate) generators: Vec<usize>,
    pub(crate) taft: FinHopf,
    pub(crate) group_alg: FinHopf,
}

impl SearchSpace {
    /// Pool `{0} ∪ U_L` with `L = lcm(l, n, m)` unless `pool_order` is given.
    /// The field is `Q(ζ_N)` with `N = lcm(2, m, l, n, L)`; `q_exp` refers to it.
    pub fn new(group: MetacyclicSpec, m: usize, q_exp: i64, pool_order: Option<usize>) -> Result<Self> {
        let default_pool = group.l.lcm(&group.n).lcm(&m.max(1));
        let pool_order = pool_order.unwrap_or(default_pool);
        if pool_order == 0 {
            return Err(Error::InvalidArgument("pool order must be positive".into()));
        }
        let order = 2usize.lcm(&m.max(1)).lcm(&group.l).lcm(&group.n).lcm(&pool_order);
        let step = order / pool_order;
        let mut pool = vec![Coefficient::Zero];
        pool.extend((0..pool_order).map(|j| Coefficient::Root(j * step)));
        Self::with_pool(group, m, q_exp, order, pool)
    }

    /// Explicit pool over `Q(ζ_order)`.
    pub fn with_pool(group: MetacyclicSpec, m: usize, q_exp: i64, order: usize, pool: Vec<Coefficient>) -> Result<Self> {
        let taft_spec = TaftSpec::in_field(m, q_exp, order)?;
        let field = make_field(order)?;
        let group_data = MetacyclicGroup::new(group)?;
        if let Some(bad) = pool.iter().find(|c| matches!(c, Coefficient::Root(e) if *e >= order)) {
            return Err(Error::InvalidArgument(format!("pool entry {bad:?} is not reduced mod {order}")));
        }
        let generators = [group_data.c(), group_data.d()].into_iter().filter(|&g| g != group_data.identity()).collect();
        Ok(SearchSpace {
            taft: build_taft(&taft_spec)?,
            group_alg: build_group_algebra(&group, &field)?,
            group: group_data,
            m,
            q_exp: taft_spec.q.exponent(),
            field,
            pool,
            generators,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn pool(&self) -> &[Coefficient] {
        &self.pool
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn group(&self) -> &MetacyclicGroup {
        &self.group
    }

    pub fn taft(&self) -> &FinHopf {
        &self.taft
    }

    pub fn group_algebra(&self) -> &FinHopf {
        &self.group_alg
    }

    /// All shapes for one generator in stream order: left part first, then
    /// the right part.
    fn left_options(&self) -> Vec<(usize, Coefficient, Coefficient)> {
        let mut out = Vec::new();
        for i in 0..self.m {
            for &alpha in &self.pool {
                if i == 1 {
                    for &beta in &self.pool {
                        out.push((i, alpha, beta));
                    }
                } else {
                    out.push((i, alpha, Coefficient::Zero));
                }
            }
        }
        out
    }

    fn right_options(&self, g: usize) -> Vec<(usize, Coefficient)> {
        let mut out = Vec::new();
        for target in 0..self.group.order() {
            if target == g {
                out.push((target, Coefficient::Zero));
            } else {
                out.extend(self.pool.iter().map(|&gamma| (target, gamma)));
            }
        }
        out
    }

    fn generator_options(&self, g: usize) -> Vec<GeneratorAction> {
        let mut out = Vec::new();
        for (h_exp, alpha, beta) in self.left_options() {
            for (right_h, gamma) in self.right_options(g) {
                out.push(GeneratorAction { generator: g, h_exp, alpha, beta, right_h, gamma });
            }
        }
        out
    }
}

/// Size of the candidate stream:
/// `Π_g (|pool|² + (m − 1)|pool|) (1 + (|G| − 1)|pool|)`.
pub fn candidate_count(space: &SearchSpace) -> u128 {
    let p = space.pool.len() as u128;
    let m = space.m as u128;
    let g = space.group.order() as u128;
    let per = (p * p + (m - 1) * p) * (1 + (g - 1) * p);
    (0..space.generators.len()).fold(1u128, |acc, _| acc * per)
}

/// Every candidate, the first generator varying slowest.
pub fn enumerate_candidates(space: &SearchSpace) -> impl Iterator<Item = ActionCandidate> + '_ {
    let options: Vec<Vec<GeneratorAction>> = space.generators.iter().map(|&g| space.generator_options(g)).collect();
    let total: usize = options.iter().map(Vec::len).product();
    (0..total).map(move |mut idx| {
        let mut actions = vec![options[0][0]; options.len()];
        for (slot, opts) in options.iter().enumerate().rev() {
            actions[slot] = opts[idx % opts.len()];
            idx /= opts.len();
        }
        ActionCandidate { actions }
    })
}

fn skeleton_key(cand: &ActionCandidate) -> Vec<(usize, usize, usize)> {
    cand.actions.iter().map(|a| (a.generator, a.h_exp, a.right_h)).collect()
}

/// Decides one candidate. On success returns the extended actions.
pub fn extend_candidate(space: &SearchSpace, cand: &ActionCandidate) -> std::result::Result<MatchedPairData, RejectReason> {
    let skeletons = solve_skeletons(&space.group, space.m, &skeleton_key(cand));
    if skeletons.is_empty() {
        return Err(RejectReason::GroupLikes);
    }
    for ga in &cand.actions {
        space.check_generator(ga)?;
    }
    let mut last = RejectReason::GroupLikes;
    for sk in &skeletons {
        match space.extend(cand, sk) {
            Ok(mp) => return Ok(mp),
            Err(e) => last = e,
        }
    }
    Err(last)
}

pub fn check_candidate(space: &SearchSpace, cand: &ActionCandidate) -> std::result::Result<(), RejectReason> {
    extend_candidate(space, cand).map(|_| ())
}

/// A surviving candidate with its projection to `(β, σ)` exponents.
#[derive(Clone, Debug)]
pub struct Survivor {
    pub candidate: ActionCandidate,
    pub actions: MatchedPairData,
    /// Exponents of `c ▷ x = βx` and `d ▷ x = σx`; `None` when the survivor
    /// does not have that diagonal shape.
    pub params: Option<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub field_order: usize,
    pub candidates: u128,
    pub survivors: Vec<Survivor>,
}

impl SearchOutcome {
    /// Sorted parameter pairs of all survivors of diagonal shape.
    pub fn params(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.survivors.iter().filter_map(|s| s.params).collect();
        v.sort();
        v
    }
}

/// `U_l × U_{gcd(n, k − 1)}` as exponents of `ζ_N`, sorted.
pub fn expected_params(group: &MetacyclicSpec, field_order: usize) -> Vec<(usize, usize)> {
    let bl = field_order / group.l;
    let bs = field_order / group.sigma_bound();
    let mut v: Vec<_> =
        (0..group.l).flat_map(|i| (0..group.sigma_bound()).map(move |j| (i * bl, j * bs))).collect();
    v.sort();
    v
}

fn project(space: &SearchSpace, cand: &ActionCandidate) -> Option<(usize, usize)> {
    let diag = |g: usize| -> Option<usize> {
        if g == space.group.identity() {
            return Some(0);
        }
        let a = cand.action(g)?;
        if a.h_exp != 1 || a.alpha != Coefficient::Zero || a.right_h != g {
            return None;
        }
        a.beta.exponent()
    };
    Some((diag(space.group.c())?, diag(space.group.d())?))
}

/// Runs the full search, refusing when the stream exceeds `bound`.
///
/// Equivalent to applying [`check_candidate`] to every element of
/// [`enumerate_candidates`], but shares work between candidates with the same
/// group-like data and drops per-generator failures early.
pub fn survivors(space: &SearchSpace, bound: u128) -> Result<SearchOutcome> {
    let count = candidate_count(space);
    if count > bound {
        return Err(Error::ScaleGuard { count, bound });
    }
    let mut found = Vec::new();
    let lefts = space.left_options();
    // (g ▷ h exponent, g ◁ h) pairs, the same range for every generator
    let skeleton_choices: Vec<(usize, usize)> =
        (0..space.m).flat_map(|i| (0..space.group.order()).map(move |t| (i, t))).collect();
    let mut choice = vec![0usize; space.generators.len()];
    loop {
        let key: Vec<(usize, usize, usize)> = space
            .generators
            .iter()
            .zip(&choice)
            .map(|(&g, &ci)| {
                let (i, t) = skeleton_choices[ci];
                (g, i, t)
            })
            .collect();
        let skeletons = solve_skeletons(&space.group, space.m, &key);
        if !skeletons.is_empty() {
            // Per-generator options compatible with this skeleton choice.
            let per_gen: Vec<Vec<GeneratorAction>> = key
                .iter()
                .map(|&(g, i, target)| {
                    let rights: Vec<Coefficient> =
                        if target == g { vec![Coefficient::Zero] } else { space.pool.clone() };
                    lefts
                        .iter()
                        .filter(|(li, _, _)| *li == i)
                        .flat_map(|&(h_exp, alpha, beta)| {
                            rights.iter().map(move |&gamma| GeneratorAction {
                                generator: g,
                                h_exp,
                                alpha,
                                beta,
                                right_h: target,
                                gamma,
                            })
                        })
                        .filter(|ga| space.check_generator(ga).is_ok())
                        .collect()
                })
                .collect();
            if per_gen.iter().all(|v| !v.is_empty()) {
                let total: usize = per_gen.iter().map(Vec::len).product();
                for mut idx in 0..total {
                    let mut actions = Vec::with_capacity(per_gen.len());
                    for opts in per_gen.iter().rev() {
                        actions.push(opts[idx % opts.len()]);
                        idx /= opts.len();
                    }
                    actions.reverse();
                    let cand = ActionCandidate { actions };
                    if let Some(mp) = skeletons.iter().find_map(|sk| space.extend(&cand, sk).ok()) {
                        let params = project(space, &cand);
                        found.push(Survivor { candidate: cand, actions: mp, params });
                    }
                }
            }
        }
        // next skeleton choice
        let mut slot = choice.len();
        loop {
            if slot == 0 {
                return Ok(SearchOutcome { field_order: space.field.order(), candidates: count, survivors: found });
            }
            slot -= 1;
            choice[slot] += 1;
            if choice[slot] < skeleton_choices.len() {
                break;
            }
            choice[slot] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d6(m: usize) -> SearchSpace {
        let order = 2usize.lcm(&m).lcm(&3) as i64;
        SearchSpace::new(MetacyclicSpec::dihedral(3).unwrap(), m, order / m as i64, None).unwrap()
    }

    #[test]
    fn counts_match_formula() {
        let s = d6(2);
        assert_eq!(s.pool().len(), 7);
        assert_eq!(candidate_count(&s), 2016 * 2016);
    }

    #[test]
    fn trivial_candidate_passes() {
        let s = d6(2);
        let trivial = ActionCandidate {
            actions: s
                .generators()
                .iter()
                .map(|&g| GeneratorAction {
                    generator: g,
                    h_exp: 1,
                    alpha: Coefficient::Zero,
                    beta: Coefficient::Root(0),
                    right_h: g,
                    gamma: Coefficient::Zero,
                })
                .collect(),
        };
        assert_eq!(check_candidate(&s, &trivial), Ok(()));
        let mut bad = trivial.clone();
        bad.actions[0].h_exp = 0;
        assert_eq!(check_candidate(&s, &bad), Err(RejectReason::GroupLikes));
        let mut bad = trivial.clone();
        bad.actions[0].alpha = Coefficient::Root(0);
        assert!(matches!(check_candidate(&s, &bad), Err(RejectReason::QCommutation { .. })));
    }

    #[test]
    fn nontrivial_right_action_with_beta_fails_mp4() {
        let s = d6(2);
        let g = s.group().clone();
        let cand = ActionCandidate {
            actions: vec![
                GeneratorAction {
                    generator: g.c(),
                    h_exp: 1,
                    alpha: Coefficient::Zero,
                    beta: Coefficient::Root(3),
                    right_h: g.index(2, 1),
                    gamma: Coefficient::Zero,
                },
                GeneratorAction {
                    generator: g.d(),
                    h_exp: 1,
                    alpha: Coefficient::Zero,
                    beta: Coefficient::Root(0),
                    right_h: g.index(2, 0),
                    gamma: Coefficient::Zero,
                },
            ],
        };
        assert!(!solve_skeletons(&g, 2, &skeleton_key(&cand)).is_empty());
        assert!(matches!(check_candidate(&s, &cand), Err(RejectReason::Mp4 { .. })));
    }
}
