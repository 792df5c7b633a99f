//! Acceptance suite: one test per criterion, each printing a PASS or FAIL line.
//!
//! Run with `cargo test -p hopf-core --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use hopf_core::classification::{
    are_isomorphic, build_inverse_witness, build_witness_map, classify, oracle_isomorphic_built, parameter_set,
};
use hopf_core::constructions::{
    build_bicrossed, build_group_algebra, build_smash, build_smash_presentation, build_taft, taft_index,
    MetacyclicSpec, SmashSpec, TaftSpec,
};
use hopf_core::hopfcore::{is_hopf_morphism, is_isomorphism, skew_primitives, verify_hopf};
use hopf_core::linalg::rank;
use hopf_core::matchedpairsearch::{expected_params, max_candidates, survivors, SearchSpace};
use hopf_core::{make_field, FinHopf, HopfElement};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: hopf_core::Error) -> String {
    e.to_string()
}

const CENSUS: [(usize, usize, usize, usize); 3] = [(2, 2, 3, 2), (2, 2, 4, 3), (3, 2, 3, 2)];
const CLASS_COUNTS: [(usize, usize, usize); 8] =
    [(3, 3, 2), (3, 5, 2), (3, 4, 3), (5, 4, 3), (2, 3, 1), (2, 4, 1), (4, 3, 1), (4, 4, 1)];

fn taft_cases() -> Vec<(TaftSpec, &'static str)> {
    vec![
        (TaftSpec::in_field(2, 1, 2).unwrap(), "m=2, q=-1"),
        (TaftSpec::in_field(3, 2, 6).unwrap(), "m=3, q=ζ_3"),
        (TaftSpec::in_field(4, 1, 4).unwrap(), "m=4, q=i"),
    ]
}

fn group_cases() -> Vec<(MetacyclicSpec, &'static str)> {
    vec![
        (MetacyclicSpec::dihedral(3).unwrap(), "D_6"),
        (MetacyclicSpec::dihedral(4).unwrap(), "D_8"),
        (MetacyclicSpec::new(2, 3, 2).unwrap(), "D^2_{2·3}"),
    ]
}

fn smash_specs(m: usize, l: usize, n: usize, k: usize) -> Vec<SmashSpec> {
    let group = MetacyclicSpec::new(l, n, k).unwrap();
    let order = SmashSpec::default_order(m, l, n);
    expected_params(&group, order)
        .into_iter()
        .map(|(b, s)| SmashSpec::new(m, l, n, k, b as i64, s as i64).unwrap())
        .collect()
}

fn dihedral_specs(m: usize, n: usize) -> Vec<SmashSpec> {
    smash_specs(m, 2, n, n - 1)
}

fn criterion_1(built: &mut Vec<FinHopf>) -> Outcome {
    let start = Instant::now();
    for (spec, name) in taft_cases() {
        let h = build_taft(&spec).map_err(err)?;
        let r = verify_hopf(&h).map_err(err)?;
        ensure(r.all_passed(), || format!("Taft {name}: {r}"))?;
        built.push(h);
    }
    for (spec, name) in group_cases() {
        let field = make_field(spec.default_field_order()).map_err(err)?;
        let h = build_group_algebra(&spec, &field).map_err(err)?;
        let r = verify_hopf(&h).map_err(err)?;
        ensure(r.all_passed(), || format!("{name}: {r}"))?;
        built.push(h);
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(5), || format!("took {t:?}"))?;
    Ok(format!("3 Taft algebras and 3 group algebras pass 6/6 suites in {t:.2?}"))
}

fn same_span(space: &[HopfElement], expected: &[HopfElement]) -> bool {
    let r = |v: &[HopfElement]| rank(v.iter().map(|e| e.terms().clone()));
    let both: Vec<HopfElement> = space.iter().chain(expected).cloned().collect();
    space.len() == r(expected) && r(&both) == space.len()
}

fn criterion_2() -> Outcome {
    let mut dims = Vec::new();
    for m in 2..=4 {
        let order = if m % 2 == 0 { m } else { 2 * m };
        let spec = TaftSpec::new(m, (order / m) as i64).map_err(err)?;
        let h = build_taft(&spec).map_err(err)?;
        let one = h.one();
        let mut row = Vec::new();
        for j in 0..m {
            let g = h.basis(taft_index(m, j, 0));
            let p = skew_primitives(&h, &g, &one).map_err(err)?;
            // The classified space is K(h^j - 1) for j != 1 and K(h - 1) + Kx for j = 1.
            let mut expected = vec![g.sub(&one)];
            if j == 1 {
                expected.push(h.basis(taft_index(m, 0, 1)));
            }
            ensure(same_span(&p, &expected), || format!("m={m}, j={j}: got dimension {}", p.len()))?;
            let want = if j == 1 { 2 } else if j == 0 { 0 } else { 1 };
            ensure(p.len() == want, || format!("m={m}, j={j}: dimension {} != {want}", p.len()))?;
            row.push(p.len());
        }
        dims.push(format!("m={m}: {row:?}"));
    }
    Ok(format!("P_{{h^j,1}} equals the classified span; dims {}", dims.join(", ")))
}

fn criterion_3(built: &mut Vec<FinHopf>) -> Outcome {
    let mut total = 0;
    for (m, l, n, k) in CENSUS {
        for spec in smash_specs(m, l, n, k) {
            let a = build_smash(&spec).map_err(err)?;
            let b = build_smash_presentation(&spec).map_err(err)?;
            let mismatches = a.structure_mismatches(&b);
            ensure(mismatches == 0, || format!("{spec:?}: {mismatches} mismatches"))?;
            ensure(a.labels() == b.labels(), || format!("{spec:?}: labels differ"))?;
            total += 1;
            built.push(a);
            built.push(b);
        }
    }
    Ok(format!("{total} parameter choices, zero structure-constant mismatches"))
}

fn criterion_4(built: &mut Vec<FinHopf>) -> Outcome {
    let mut parts = Vec::new();
    for (m, l, n, k) in CENSUS {
        let start = Instant::now();
        let group = MetacyclicSpec::new(l, n, k).map_err(err)?;
        let order = SmashSpec::default_order(m, l, n);
        let space = SearchSpace::new(group, m, (order / m) as i64, None).map_err(err)?;
        let outcome = survivors(&space, max_candidates()).map_err(err)?;
        let want = l * group.sigma_bound();
        ensure(outcome.survivors.len() == want, || {
            format!("(m,l,n,k)=({m},{l},{n},{k}): {} survivors, expected {want}", outcome.survivors.len())
        })?;
        ensure(outcome.params() == expected_params(&group, outcome.field_order), || {
            format!("({m},{l},{n},{k}): parameters {:?}", outcome.params())
        })?;
        for s in &outcome.survivors {
            ensure(s.actions.right_action_is_trivial(space.taft()), || format!("({m},{l},{n},{k}): nontrivial right action"))?;
            built.push(build_bicrossed(space.taft(), space.group_algebra(), &s.actions).map_err(err)?);
        }
        let t = start.elapsed();
        ensure(t < Duration::from_secs(60), || format!("({m},{l},{n},{k}) took {t:?}"))?;
        parts.push(format!("({m},{l},{n},{k}): {want} of {} in {t:.2?}", outcome.candidates));
    }
    Ok(format!("survivors = l·gcd(n,k-1), right action trivial; {}", parts.join("; ")))
}

fn criterion_5(built: &mut Vec<FinHopf>) -> Outcome {
    let mut parts = Vec::new();
    for (m, n, want) in CLASS_COUNTS {
        let order = SmashSpec::default_order(m, 2, n);
        let classes = classify(m, (order / m) as i64, n).map_err(err)?;
        ensure(classes.len() == want, || format!("(m,n)=({m},{n}): {} classes, expected {want}", classes.len()))?;
        for spec in dihedral_specs(m, n) {
            built.push(build_smash(&spec).map_err(err)?);
        }
        parts.push(format!("({m},{n})→{}", classes.len()));
    }
    Ok(format!("class counts {}", parts.join(" ")))
}

fn criterion_6() -> Outcome {
    let mut pairs = 0;
    let mut max_dim = 0;
    for (m, n, _) in CLASS_COUNTS {
        let specs = dihedral_specs(m, n);
        let algebras = specs.iter().map(build_smash).collect::<Result<Vec<_>, _>>().map_err(err)?;
        for (i, a) in specs.iter().enumerate() {
            for (j, b) in specs.iter().enumerate() {
                let Some(w) = are_isomorphic(a, b).map_err(err)? else { continue };
                let phi = build_witness_map(&w, a, b).map_err(err)?;
                ensure(is_hopf_morphism(&phi, &algebras[i], &algebras[j]), || format!("{a:?} → {b:?}: not a morphism"))?;
                ensure(is_isomorphism(&phi, &algebras[i], &algebras[j]), || format!("{a:?} → {b:?}: not invertible"))?;
                let inv = build_inverse_witness(&w, a, b).map_err(err)?;
                let psi = build_witness_map(&inv, b, a).map_err(err)?;
                ensure(phi.then(&psi).is_identity() && psi.then(&phi).is_identity(), || {
                    format!("{a:?} → {b:?}: inverse does not compose to identity")
                })?;
                pairs += 1;
                max_dim = max_dim.max(algebras[i].dim());
            }
        }
    }
    Ok(format!("{pairs} isomorphic ordered pairs, witness maps verified, inverses exact (dim up to {max_dim})"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for (m, n) in [(2, 3), (3, 3), (3, 4)] {
        let specs = dihedral_specs(m, n);
        let algebras = specs.iter().map(build_smash).collect::<Result<Vec<_>, _>>().map_err(err)?;
        for (i, a) in specs.iter().enumerate() {
            for (j, b) in specs.iter().enumerate() {
                let fast = are_isomorphic(a, b).map_err(err)?.is_some();
                let slow = oracle_isomorphic_built(a, &algebras[i], &algebras[j]).map_err(err)?;
                ensure(fast == slow, || format!("(m,n)=({m},{n}) {a:?} vs {b:?}: witness {fast}, oracle {slow}"))?;
                pairs += 1;
            }
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(600), || format!("took {t:?}"))?;
    Ok(format!("{pairs} ordered pairs agree in {t:.2?}"))
}

fn criterion_8() -> Outcome {
    let (m, n) = (3, 4);
    let specs = dihedral_specs(m, n);
    let k = specs.len();
    ensure(k == parameter_set(m, n).len(), || "parameter set size".into())?;
    let mut rel = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            rel[i][j] = are_isomorphic(&specs[i], &specs[j]).map_err(err)?.is_some();
        }
    }
    for i in 0..k {
        ensure(rel[i][i], || format!("not reflexive at {i}"))?;
        for j in 0..k {
            ensure(rel[i][j] == rel[j][i], || format!("not symmetric at ({i},{j})"))?;
            for l in 0..k {
                ensure(!(rel[i][j] && rel[j][l]) || rel[i][l], || format!("not transitive at ({i},{j},{l})"))?;
            }
        }
    }
    Ok(format!("reflexive, symmetric, transitive on all {k} parameters"))
}

fn criterion_9(built: &[FinHopf]) -> Outcome {
    for h in built {
        let s = h.to_json_string();
        let back = FinHopf::from_json_str(&s).map_err(err)?;
        ensure(&back == h && back.labels() == h.labels(), || format!("dim {} differs after import", h.dim()))?;
        ensure(back.to_json_string() == s, || format!("dim {} re-export differs", h.dim()))?;
    }
    Ok(format!("{} algebras round-trip bit-exactly", built.len()))
}

fn report(i: usize, name: &str, outcome: Outcome) {
    match outcome {
        Ok(detail) => println!("criterion {i} PASS  {name}: {detail}"),
        Err(why) => {
            println!("criterion {i} FAIL  {name}: {why}");
            panic!("criterion {i} failed: {why}");
        }
    }
}

#[test]
fn criterion_1_axiom_suites() {
    report(1, "axiom suites", criterion_1(&mut Vec::new()));
}

#[test]
fn criterion_2_skew_primitive_spaces() {
    report(2, "skew-primitive spaces", criterion_2());
}

#[test]
fn criterion_3_construction_paths_agree() {
    report(3, "construction path equality", criterion_3(&mut Vec::new()));
}

#[test]
fn criterion_4_matched_pair_census() {
    report(4, "matched-pair census", criterion_4(&mut Vec::new()));
}

#[test]
fn criterion_5_class_counts() {
    report(5, "classification counts", criterion_5(&mut Vec::new()));
}

#[test]
fn criterion_6_witnesses_and_inverses() {
    report(6, "witness soundness and inverses", criterion_6());
}

#[test]
fn criterion_7_oracle_agreement() {
    report(7, "oracle agreement", criterion_7());
}

#[test]
fn criterion_8_equivalence_relation() {
    report(8, "equivalence relation", criterion_8());
}

#[test]
fn criterion_9_json_round_trip() {
    // Rebuilds every algebra from criteria 1 to 5.
    let mut built = Vec::new();
    let setup = criterion_1(&mut built)
        .and_then(|_| criterion_3(&mut built))
        .and_then(|_| criterion_4(&mut built))
        .and_then(|_| criterion_5(&mut built));
    report(9, "serialization round trip", setup.and_then(|_| criterion_9(&built)));
}
