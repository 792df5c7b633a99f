use hopf_core::constructions::{matched_pair_violations, MetacyclicSpec, SmashSpec};
use hopf_core::matchedpairsearch::{
    candidate_count, check_candidate, enumerate_candidates, expected_params, extend_candidate, survivors, Coefficient,
    RejectReason, SearchSpace,
};
use hopf_core::Error;

fn space(m: usize, l: usize, n: usize, k: usize, pool: Option<usize>) -> SearchSpace {
    let group = MetacyclicSpec::new(l, n, k).unwrap();
    let base = SmashSpec::default_order(m, l, n);
    let order = num_integer::lcm(base, pool.unwrap_or(1));
    SearchSpace::new(group, m, (order / m) as i64, pool).unwrap()
}

fn signs_space(m: usize, l: usize, n: usize, k: usize) -> SearchSpace {
    let group = MetacyclicSpec::new(l, n, k).unwrap();
    let order = SmashSpec::default_order(m, l, n);
    let pool = vec![Coefficient::Zero, Coefficient::Root(0), Coefficient::Root(order / 2)];
    SearchSpace::with_pool(group, m, (order / m) as i64, order, pool).unwrap()
}

#[test]
fn stream_size_by_hand() {
    // D_6, m = 2, pool {0} ∪ U_6 has 7 entries. Per generator:
    // left shapes 7 (h ↦ 1) + 7·7 (h ↦ h) = 56, right shapes 1 + 5·7 = 36.
    let s = space(2, 2, 3, 2, None);
    assert_eq!(s.pool().len(), 7);
    assert_eq!(candidate_count(&s), (56u128 * 36).pow(2));
    let small = signs_space(2, 2, 3, 2);
    assert_eq!(enumerate_candidates(&small).count() as u128, candidate_count(&small));
}

#[test]
fn dfs_agrees_with_brute_force() {
    for (m, l, n, k) in [(2, 2, 3, 2), (2, 2, 4, 3), (2, 1, 3, 1)] {
        let s = signs_space(m, l, n, k);
        let brute: Vec<_> = enumerate_candidates(&s).filter(|c| check_candidate(&s, c).is_ok()).collect();
        let fast = survivors(&s, u128::MAX).unwrap();
        let mut a: Vec<_> = brute.iter().map(|c| format!("{:?}", c.actions)).collect();
        let mut b: Vec<_> = fast.survivors.iter().map(|c| format!("{:?}", c.candidate.actions)).collect();
        a.sort();
        b.sort();
        assert_eq!(a, b, "({m},{l},{n},{k})");
    }
}

#[test]
fn survivors_satisfy_all_axioms_with_trivial_right_action() {
    for (m, l, n, k) in [(2, 2, 3, 2), (2, 2, 4, 3), (3, 2, 3, 2), (2, 1, 3, 1), (2, 3, 7, 2)] {
        let s = space(m, l, n, k, None);
        let out = survivors(&s, u128::MAX).unwrap();
        let group = MetacyclicSpec::new(l, n, k).unwrap();
        assert_eq!(out.survivors.len(), l * group.sigma_bound(), "({m},{l},{n},{k})");
        assert_eq!(out.params(), expected_params(&group, out.field_order));
        for sv in &out.survivors {
            assert!(matched_pair_violations(s.taft(), s.group_algebra(), &sv.actions).is_empty());
            assert!(sv.actions.right_action_is_trivial(s.taft()));
        }
    }
}

#[test]
fn cyclic_group_counts_sigma_only() {
    // l = 1 and k = 1: C_3, where every σ ∈ U_3 survives.
    let s = space(2, 1, 3, 1, None);
    let out = survivors(&s, u128::MAX).unwrap();
    assert_eq!(out.survivors.len(), 3);
    assert!(out.params().iter().all(|&(b, _)| b == 0));
}

#[test]
fn enlarging_the_pool_changes_nothing() {
    for (m, l, n, k, bigger) in [(2, 2, 3, 2, 12), (2, 2, 4, 3, 8), (3, 2, 3, 2, 12)] {
        let base = survivors(&space(m, l, n, k, None), u128::MAX).unwrap();
        let big_space = space(m, l, n, k, Some(bigger));
        let big = survivors(&big_space, u128::MAX).unwrap();
        assert!(big.candidates > base.candidates);
        // Compare as roots, since the two fields differ.
        let as_roots = |ps: Vec<(usize, usize)>, order: usize| -> Vec<(usize, usize)> {
            let mut v: Vec<_> = ps.into_iter().map(|(b, s)| (b * 120 / order, s * 120 / order)).collect();
            v.sort();
            v
        };
        assert_eq!(as_roots(base.params(), base.field_order), as_roots(big.params(), big.field_order));
    }
}

#[test]
fn rejection_reasons() {
    let s = space(2, 2, 3, 2, None);
    let trivial = enumerate_candidates(&s)
        .find(|c| c.actions.iter().all(|a| a.h_exp == 1 && a.alpha == Coefficient::Zero && a.beta == Coefficient::Root(0) && a.right_h == a.generator))
        .unwrap();
    assert!(check_candidate(&s, &trivial).is_ok());

    let mut to_one = trivial.clone();
    to_one.actions[0].h_exp = 0;
    assert_eq!(check_candidate(&s, &to_one), Err(RejectReason::GroupLikes));

    let mut alpha = trivial.clone();
    alpha.actions[0].alpha = Coefficient::Root(0);
    assert!(matches!(check_candidate(&s, &alpha), Err(RejectReason::QCommutation { .. })));

    let mp = extend_candidate(&s, &trivial).unwrap();
    assert!(mp.right_action_is_trivial(s.taft()));
}

#[test]
fn scale_guard_refuses() {
    let s = space(2, 2, 3, 2, None);
    assert!(matches!(survivors(&s, 1000), Err(Error::ScaleGuard { .. })));
}
