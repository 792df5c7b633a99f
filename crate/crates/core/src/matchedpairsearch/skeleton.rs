//! Group-like part of a matched pair between `K[G]` and a Taft algebra.
//!
//! On group-likes the actions restrict to maps `P : G × Z_m → Z_m`
//! (`Y ▷ h^a = h^{P(Y, a)}`) and `Q : G × Z_m → G` (`Y ◁ h^a = Q(Y, a)`).
//! Given their values on generators, all consistent completions are found by
//! propagation and backtracking.

use crate::constructions::MetacyclicGroup;

/// Complete tables `P` and `Q`, indexed by `y * m + a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub m: usize,
    pub p: Vec<usize>,
    pub q: Vec<usize>,
}

impl Skeleton {
    pub fn p(&self, y: usize, a: usize) -> usize {
        self.p[y * self.m + a % self.m]
    }

    pub fn q(&self, y: usize, a: usize) -> usize {
        self.q[y * self.m + a % self.m]
    }
}

#[derive(Clone)]
struct Partial {
    p: Vec<Option<usize>>,
    q: Vec<Option<usize>>,
}

enum Step {
    Changed,
    Stable,
    Conflict,
}

fn assign(slot: &mut Option<usize>, value: usize, changed: &mut bool) -> bool {
    match *slot {
        Some(v) => v == value,
        None => {
            *slot = Some(value);
            *changed = true;
            true
        }
    }
}

struct Solver<'a> {
    group: &'a MetacyclicGroup,
    m: usize,
    order: usize,
}

impl Solver<'_> {
    fn propagate_once(&self, st: &mut Partial) -> Step {
        let (m, g) = (self.m, self.order);
        let at = |y: usize, a: usize| y * m + a % m;
        let mut changed = false;
        for y in 0..g {
            for a in 0..m {
                let (Some(pya), Some(qya)) = (st.p[at(y, a)], st.q[at(y, a)]) else { continue };
                for b in 0..m {
                    // y ▷ (h^a h^b) = (y ▷ h^a)((y ◁ h^a) ▷ h^b)
                    if let Some(v) = st.p[at(qya, b)] {
                        if !assign(&mut st.p[at(y, a + b)], (pya + v) % m, &mut changed) {
                            return Step::Conflict;
                        }
                    }
                    // y ◁ (h^a h^b) = (y ◁ h^a) ◁ h^b
                    if let Some(v) = st.q[at(qya, b)] {
                        if !assign(&mut st.q[at(y, a + b)], v, &mut changed) {
                            return Step::Conflict;
                        }
                    }
                }
            }
        }
        for y in 0..g {
            for z in 0..g {
                let yz = self.group.mul(y, z);
                for a in 0..m {
                    let Some(pza) = st.p[at(z, a)] else { continue };
                    // (yz) ▷ h^a = y ▷ (z ▷ h^a)
                    if let Some(v) = st.p[at(y, pza)] {
                        if !assign(&mut st.p[at(yz, a)], v, &mut changed) {
                            return Step::Conflict;
                        }
                    }
                    // (yz) ◁ h^a = (y ◁ (z ▷ h^a))(z ◁ h^a)
                    if let (Some(u), Some(w)) = (st.q[at(y, pza)], st.q[at(z, a)]) {
                        if !assign(&mut st.q[at(yz, a)], self.group.mul(u, w), &mut changed) {
                            return Step::Conflict;
                        }
                    }
                }
            }
        }
        if changed {
            Step::Changed
        } else {
            Step::Stable
        }
    }

    fn solve(&self, mut st: Partial, out: &mut Vec<Skeleton>) {
        loop {
            match self.propagate_once(&mut st) {
                Step::Conflict => return,
                Step::Changed => continue,
                Step::Stable => break,
            }
        }
        if let Some(idx) = st.p.iter().position(Option::is_none) {
            for v in 0..self.m {
                let mut next = st.clone();
                next.p[idx] = Some(v);
                self.solve(next, out);
            }
        } else if let Some(idx) = st.q.iter().position(Option::is_none) {
            for v in 0..self.order {
                let mut next = st.clone();
                next.q[idx] = Some(v);
                self.solve(next, out);
            }
        } else {
            out.push(Skeleton {
                m: self.m,
                p: st.p.into_iter().map(|v| v.expect("complete")).collect(),
                q: st.q.into_iter().map(|v| v.expect("complete")).collect(),
            });
        }
    }
}

/// All tables with `P(g, 1) = h_exp` and `Q(g, 1) = target` for each
/// `(g, h_exp, target)` in `generators`, satisfying the unit laws and the
/// module and matched-pair identities on group-likes.
pub fn solve_skeletons(group: &MetacyclicGroup, m: usize, generators: &[(usize, usize, usize)]) -> Vec<Skeleton> {
    let order = group.order();
    let mut st = Partial { p: vec![None; order * m], q: vec![None; order * m] };
    let mut ok = true;
    let mut set = |slot: &mut Option<usize>, v: usize| {
        let mut dummy = false;
        ok &= assign(slot, v, &mut dummy);
    };
    for a in 0..m {
        set(&mut st.p[a], a);
        set(&mut st.q[a], 0);
    }
    for y in 0..order {
        set(&mut st.p[y * m], 0);
        set(&mut st.q[y * m], y);
    }
    for &(g, i, target) in generators {
        set(&mut st.p[g * m + 1 % m], i % m);
        set(&mut st.q[g * m + 1 % m], target);
    }
    let mut out = Vec::new();
    if ok {
        Solver { group, m, order }.solve(st, &mut out);
    }
    out
}
