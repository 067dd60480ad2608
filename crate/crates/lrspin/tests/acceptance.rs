//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line (visible with `--nocapture`) and asserting both the
//! expected values and its time budget.

use lrspin::branching::{self, BranchingQuery, Group, Method};
use lrspin::flags::{
    flag_sequences_companion, flag_sequences_row, is_barred_d_row, is_flagged_d_companion,
    FlagContext,
};
use lrspin::genexp;
use lrspin::lr::{enumerate_lr, psi, psi_inverse, LrKind};
use lrspin::oracle::{zero_weight_dim, RootSystem};
use lrspin::partition::{enumerate_partitions, Partition};
use lrspin::poly::GradedPolynomial;
use lrspin::separation::{default_pad_height, general_inverse, separate, SplitColumn};
use lrspin::spinor::{enumerate_lrd, OrthogonalWeight, SpinorElement, TwoColumn};
use lrspin::tableau::{SkewShape, Tableau};
use std::time::{Duration, Instant};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn two(left: &[usize], right: &[usize], a: usize) -> TwoColumn {
    TwoColumn::two(left.to_vec(), right.to_vec(), a).unwrap()
}

fn report(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {name}: PASS ({elapsed:.2?})");
    assert!(
        elapsed < budget,
        "{name} exceeded its budget: {elapsed:.2?} > {budget:.2?}"
    );
}

/// All orthogonal weights for rank `n` up to the given size.
fn orthogonal_weights(n: usize, max_size: usize) -> Vec<Partition> {
    enumerate_partitions(max_size, n)
        .into_iter()
        .filter(|mu| {
            let muc = mu.conjugate();
            muc.part(0) + muc.part(1) <= n
        })
        .collect()
}

#[test]
fn criterion_01_psi_golden() {
    let started = Instant::now();
    let lambda = p(&[7, 6, 4, 3, 2]);
    let mu = p(&[6, 4, 2, 2]);
    let nu = p(&[2, 2, 2, 1, 1]);
    let s = Tableau::from_rows(vec![vec![1, 3, 3, 5, 7], vec![2, 4, 6]]).unwrap();
    let u = psi(&s, &lambda, &mu, &nu).unwrap();
    let expected = Tableau::new(
        SkewShape::rotated(&nu),
        vec![vec![1], vec![2], vec![2, 3], vec![3, 4], vec![5, 5]],
    )
    .unwrap();
    assert_eq!(u, expected);
    assert_eq!(u.column(1), vec![1, 2, 3, 4, 5]);
    assert_eq!(u.column(0), vec![2, 3, 5]);
    assert_eq!(psi_inverse(&u, &lambda, &mu, &nu).unwrap(), s);
    report("01 psi golden", started, Duration::from_secs(1));
}

#[test]
fn criterion_02_flag_sequences_golden() {
    let started = Instant::now();
    // row side, accepted
    let ctx = FlagContext::new(8, p(&[2, 2, 2, 1, 1]), p(&[4, 2, 2, 2, 2])).unwrap();
    let s = Tableau::from_rows(vec![vec![1, 3, 3, 3, 5], vec![2, 4, 4]]).unwrap();
    let seqs = flag_sequences_row(&s, &ctx).unwrap();
    assert_eq!(seqs.m, vec![1, 3, 5, 7, 8]);
    assert_eq!(seqs.nseq, vec![2, 4, 6]);
    assert!(is_barred_d_row(&s, &ctx));
    // row side, rejected
    let ctx_b = FlagContext::new(8, p(&[2, 2, 2, 1, 1]), p(&[4, 4, 2, 2])).unwrap();
    let s_beta = Tableau::from_rows(vec![vec![1, 1, 3, 3, 5], vec![2, 2, 4]]).unwrap();
    let seqs = flag_sequences_row(&s_beta, &ctx_b).unwrap();
    assert_eq!(seqs.m, vec![1, 3, 5, 6, 8]);
    assert_eq!(seqs.nseq, vec![2, 4, 7]);
    assert!(!is_barred_d_row(&s_beta, &ctx_b));
    // companion side, accepted
    let u = Tableau::new(
        SkewShape::rotated(&p(&[2, 2, 2, 1, 1])),
        vec![vec![1], vec![2], vec![2, 3], vec![3, 4], vec![6, 6]],
    )
    .unwrap();
    let seqs = flag_sequences_companion(&u, &ctx);
    assert_eq!(seqs.m, vec![1, 3, 5, 7, 8]);
    assert_eq!(seqs.nseq, vec![2, 4, 6]);
    assert!(is_flagged_d_companion(&u, &ctx));
    report("02 flag sequences golden", started, Duration::from_secs(1));
}

#[test]
fn criterion_03_branching_golden() {
    let started = Instant::now();
    let q = BranchingQuery::new(8, p(&[5, 4, 4, 3, 2, 2]), p(&[2, 2, 2, 1, 1]), Group::O).unwrap();
    for method in [Method::Direct, Method::Barred, Method::Flagged] {
        let (total, contributions) =
            branching::multiplicity_with_contributions(&q, method).unwrap();
        assert_eq!(total, 1, "{method:?}");
        if method != Method::Direct {
            let find = |delta: &[usize]| {
                contributions
                    .iter()
                    .find(|(d, _)| d == &p(delta))
                    .map(|(_, c)| *c)
            };
            assert_eq!(find(&[4, 2, 2, 2, 2]), Some(1));
            assert_eq!(find(&[4, 4, 2, 2]), Some(0));
        }
    }
    let (difference, flagged, equal) =
        branching::enright_willenbring_check(8, 2, 2, 3, 2, &p(&[5, 4, 4, 3, 2, 2])).unwrap();
    assert_eq!(difference, 1);
    assert_eq!(flagged, 1);
    assert!(equal);
    report("03 branching golden", started, Duration::from_secs(30));
}

#[test]
fn criterion_04_separation_golden() {
    let started = Instant::now();
    // n = 8
    let e = SpinorElement::from_parts(
        8,
        p(&[4, 3, 3, 2]),
        vec![
            two(&[1, 3, 4, 5], &[1, 2], 4),
            two(&[1, 3, 4], &[1, 2], 3),
            two(&[1, 5, 6], &[1, 4], 3),
            two(&[1, 2, 3, 5], &[1, 2, 3, 4], 2),
        ],
    )
    .unwrap();
    let res = separate(&e, None).unwrap();
    assert_eq!(res.delta, p(&[4, 4, 2, 2]));
    assert_eq!(
        res.tail.rows(),
        &[vec![1, 1, 1, 1], vec![3, 3, 5, 5], vec![4, 4, 6], vec![5]]
    );
    // n = 9, negative case
    let e = SpinorElement::from_parts(
        9,
        p(&[4, 3, 3, 2, 1]),
        vec![
            two(&[1, 3, 4, 5], &[1, 2], 4),
            two(&[1, 3, 4], &[1, 2], 3),
            two(&[1, 5, 6], &[1, 4], 3),
            two(&[1, 2, 3, 7], &[1, 2, 3, 6], 2),
            TwoColumn::spin(vec![1, 2, 3, 4, 5]).unwrap(),
        ],
    )
    .unwrap();
    let res = separate(&e, None).unwrap();
    assert_eq!(res.delta, p(&[6, 4, 2, 2, 2]));
    assert_eq!(
        res.tail.rows(),
        &[
            vec![1, 1, 1, 1, 3],
            vec![3, 3, 5, 7],
            vec![4, 4, 6],
            vec![5]
        ]
    );
    // n = 3, padded spin-minus case: the full separated configuration
    let e = SpinorElement::from_parts(
        3,
        p(&[2, 1]),
        vec![
            two(&[1, 2, 3, 7], &[1, 2, 3, 6], 2),
            TwoColumn::spin(vec![1, 2, 3, 4, 5]).unwrap(),
        ],
    )
    .unwrap();
    let res = separate(&e, None).unwrap();
    let want = vec![
        SplitColumn {
            body: vec![1, 2],
            tail: vec![3, 7],
        },
        SplitColumn {
            body: vec![1, 2],
            tail: vec![3],
        },
        SplitColumn {
            body: vec![1, 2, 3, 4, 5, 6],
            tail: vec![],
        },
    ];
    assert_eq!(res.columns, want);
    assert_eq!(res.delta, p(&[6, 2, 2]));
    report("04 separation golden", started, Duration::from_secs(5));
}

/// The systematic sweep behind criteria 5-7 and 10.
fn sweep(max_n: usize, max_lambda: usize) -> Vec<(usize, Partition, Partition)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for mu in orthogonal_weights(n, max_lambda) {
            for lambda in enumerate_partitions(max_lambda, n) {
                if lambda.size() < mu.size() || (lambda.size() - mu.size()) % 2 != 0 {
                    continue;
                }
                out.push((n, lambda, mu.clone()));
            }
        }
    }
    out
}

#[test]
fn criterion_05_method_agreement_and_bijection() {
    let started = Instant::now();
    let mut instances = 0usize;
    let mut witnesses = 0usize;
    for (n, lambda, mu) in sweep(6, 8) {
        let q = BranchingQuery::new(n, lambda.clone(), mu.clone(), Group::O).unwrap();
        let direct_set = enumerate_lrd(&mu, &lambda, n);
        let (barred_total, barred_contribs) =
            branching::multiplicity_with_contributions(&q, Method::Barred).unwrap();
        let flagged = branching::multiplicity(&q, Method::Flagged).unwrap();
        assert_eq!(direct_set.len(), barred_total, "n={n} λ={lambda} μ={mu}");
        assert_eq!(barred_total, flagged, "n={n} λ={lambda} μ={mu}");

        // separation realises the bijection: image in the barred union,
        // injective, counts matching per delta
        let mut image: Vec<(Partition, Tableau)> = Vec::new();
        for e in &direct_set {
            let sep = separate(e, None).unwrap();
            let ctx = FlagContext::new(n, mu.clone(), sep.delta.clone()).unwrap();
            assert!(
                is_barred_d_row(&sep.tail, &ctx),
                "tail outside the barred set at n={n} λ={lambda} μ={mu}"
            );
            assert_eq!(sep.lambda, lambda);
            image.push((sep.delta, sep.tail));
        }
        let mut dedup = image.clone();
        dedup.sort_by_key(|(d, t)| format!("{d:?}|{t:?}"));
        dedup.dedup();
        assert_eq!(dedup.len(), image.len(), "separation not injective");
        for (delta, count) in &barred_contribs {
            let here = image.iter().filter(|(d, _)| d == delta).count();
            assert_eq!(here, *count, "image count at δ={delta}");
        }
        instances += 1;
        witnesses += direct_set.len();
    }
    println!("  [{instances} instances, {witnesses} witnesses]");
    report(
        "05 method agreement and bijection",
        started,
        Duration::from_secs(900),
    );
}

#[test]
fn criterion_06_stable_range_recovery() {
    let started = Instant::now();
    for (n, lambda, mu) in sweep(6, 8) {
        if 2 * lambda.len() > n {
            continue;
        }
        let q = BranchingQuery::new(n, lambda.clone(), mu.clone(), Group::O).unwrap();
        let plain = branching::littlewood_stable(&q).unwrap();
        let flagged = branching::multiplicity(&q, Method::Flagged).unwrap();
        assert_eq!(plain, flagged, "n={n} λ={lambda} μ={mu}");
        // set equality: in the stable range every anti-lattice witness
        // passes the flag condition
        let weight = lambda.size() - mu.size();
        for delta in lrspin::partition::enumerate_family(
            lrspin::partition::ParityFamily::EvenRows,
            weight,
            n,
        ) {
            if delta.size() != weight || !lambda.contains(&delta) {
                continue;
            }
            let ctx = FlagContext::new(n, mu.clone(), delta.clone()).unwrap();
            for w in enumerate_lr(&lambda, &delta, &mu, LrKind::AntiLattice) {
                assert!(
                    is_flagged_d_companion(&w.companion, &ctx),
                    "stable-range witness rejected at n={n} λ={lambda} μ={mu} δ={delta}"
                );
            }
        }
    }
    report("06 stable range recovery", started, Duration::from_secs(900));
}

#[test]
fn criterion_07_sliding_invariants() {
    // separate() always runs both sliding implementations and checks the
    // Knuth class of every application; this criterion drives that code
    // over the full sweep and adds the explicit commutation check on the
    // first peeling pass of every element
    use lrspin::separation::{column_tuple, pad_negative, slide_sites, sliding_s, SlideImpl};
    let started = Instant::now();
    let mut applications = 0usize;
    let mut commutations = 0usize;
    for (n, lambda, mu) in sweep(6, 8) {
        for e in enumerate_lrd(&mu, &lambda, n) {
            let sep = separate(&e, None).unwrap();
            applications += sep.steps.len();
            let back = general_inverse(&sep.delta, &sep.tail, &mu, n).unwrap();
            assert_eq!(back, e);

            // disjoint slides commute: apply the sites of the first pass
            // in both orders
            let weight = OrthogonalWeight::new(mu.clone(), n).unwrap();
            let padded = if weight.positive {
                e.clone()
            } else {
                pad_negative(&e, lrspin::separation::default_pad_height(&e)).unwrap()
            };
            let sites = slide_sites(&padded);
            if sites.len() >= 2 {
                let tuple = column_tuple(&padded);
                let desc = sites.iter().rev().try_fold(tuple.clone(), |t, &(pos, a)| {
                    sliding_s(&t, pos, a, SlideImpl::Both)
                });
                let asc = sites.iter().try_fold(tuple, |t, &(pos, a)| {
                    sliding_s(&t, pos, a, SlideImpl::ClosedForm)
                });
                assert_eq!(desc.unwrap(), asc.unwrap(), "commutation at n={n} λ={lambda} μ={mu}");
                commutations += 1;
            }
        }
    }
    println!(
        "  [{applications} sliding steps dual-checked, {commutations} commutation pairs]"
    );
    report("07 sliding invariants", started, Duration::from_secs(900));
}

#[test]
fn criterion_08_generalized_exponents() {
    let started = Instant::now();
    let k = genexp::k_so_odd(&p(&[1, 1]), 2).unwrap();
    assert_eq!(
        k,
        GradedPolynomial::monomial(1, 1) + GradedPolynomial::monomial(3, 1)
    );
    let k = genexp::k_so_even(&p(&[1, 1]), 3).unwrap();
    assert_eq!(
        k,
        GradedPolynomial::monomial(1, 1)
            + GradedPolynomial::monomial(2, 1)
            + GradedPolynomial::monomial(3, 1)
    );
    for m in 1..=3usize {
        for mu in enumerate_partitions(5, m) {
            let odd = genexp::k_so_odd(&mu, m).unwrap();
            assert!(odd.terms().all(|(_, c)| c > 0), "negative coefficient");
            assert_eq!(
                odd.eval(1),
                zero_weight_dim(RootSystem::B, m, &mu) as i64,
                "odd zero-weight dimension at m={m} μ={mu}"
            );
            // even case: the division by 1 + t^m must be exact
            let even = genexp::k_so_even(&mu, m).unwrap();
            assert!(even.terms().all(|(_, c)| c > 0), "negative coefficient");
            assert_eq!(
                even.eval(1),
                zero_weight_dim(RootSystem::D, m, &mu) as i64,
                "even zero-weight dimension at m={m} μ={mu}"
            );
        }
    }
    report("08 generalized exponents", started, Duration::from_secs(600));
}

#[test]
fn criterion_09_graded_identity() {
    let started = Instant::now();
    for n in 2..=5usize {
        let m = n / 2;
        for mu in enumerate_partitions(3, m) {
            assert!(
                genexp::graded_identity_check(&mu, n, 4).unwrap(),
                "graded identity fails at n={n} μ={mu}"
            );
        }
    }
    report("09 graded identity", started, Duration::from_secs(600));
}

#[test]
fn criterion_10_padding_stability() {
    let started = Instant::now();
    let mut negatives = 0usize;
    for (n, lambda, mu) in sweep(6, 8) {
        let weight = OrthogonalWeight::new(mu.clone(), n).unwrap();
        if weight.positive {
            continue;
        }
        for e in enumerate_lrd(&mu, &lambda, n) {
            let h = default_pad_height(&e);
            let a = separate(&e, Some(h)).unwrap();
            let b = separate(&e, Some(h + 2)).unwrap();
            assert_eq!(a.columns, b.columns, "padding unstable at n={n} λ={lambda} μ={mu}");
            assert_eq!(a.delta, b.delta);
            assert_eq!(a.lambda, b.lambda);
            negatives += 1;
        }
    }
    println!("  [{negatives} negative-case separations double-run]");
    report("10 padding stability", started, Duration::from_secs(900));
}
