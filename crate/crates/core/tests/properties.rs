use proptest::prelude::*;
use qschubert_core::*;

fn ctx_strategy() -> impl Strategy<Value = RectContext> {
    (1usize..=5, 1usize..=6).prop_map(|(k, w)| RectContext::new(k, k + w).unwrap())
}

fn bounded(c: RectContext) -> impl Strategy<Value = BoundedPartition> {
    proptest::collection::vec(0..=c.width(), c.k()).prop_map(move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        BoundedPartition::new(v, c).unwrap()
    })
}

fn with_one() -> impl Strategy<Value = BoundedPartition> {
    ctx_strategy().prop_flat_map(bounded)
}

fn with_two() -> impl Strategy<Value = (BoundedPartition, BoundedPartition)> {
    ctx_strategy().prop_flat_map(|c| (bounded(c), bounded(c)))
}

fn small_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn word_round_trip(l in with_one()) {
        let w = l.word();
        prop_assert_eq!(w.bits().iter().filter(|&&b| b == 1).count(), l.ctx().k());
        prop_assert_eq!(w.bits().len(), l.ctx().n());
        prop_assert_eq!(partition_of(w.bits(), l.ctx()).unwrap(), l.clone());
        let k = l.ctx().k();
        let pad = l.padded();
        for m in 1..=k {
            prop_assert_eq!(w.bits()[pad[k - m] + m - 1], 1);
        }
    }

    #[test]
    fn phi_laws(l in with_one()) {
        let (k, n) = (l.ctx().k() as i64, l.ctx().n() as i64);
        prop_assert_eq!(l.phi(0), 0);
        prop_assert_eq!(l.phi(n), k);
        for i in -3 * n..3 * n {
            let step = l.phi(i + 1) - l.phi(i);
            prop_assert!(step == 0 || step == 1);
            prop_assert_eq!(l.phi(i + n), l.phi(i) + k);
        }
    }

    #[test]
    fn involutions(l in with_one()) {
        prop_assert_eq!(l.complement().complement(), l.clone());
        prop_assert_eq!(l.conjugate().conjugate(), l.partition().clone());
        prop_assert_eq!(l.weight() + l.complement().weight(), l.ctx().area());
    }

    #[test]
    fn rotation_group_law(l in with_one(), i in -12i64..=12, j in -12i64..=12) {
        let n = l.ctx().n() as i64;
        prop_assert_eq!(l.cyclic_shift(j).cyclic_shift(i), l.cyclic_shift(i + j));
        prop_assert_eq!(l.cyclic_shift(n), l.clone());
        prop_assert_eq!(l.cyclic_shift(0), l.clone());
        prop_assert_eq!(l.cyclic_shift(i).word(), l.word().rotate_left(i));
    }

    #[test]
    fn frame_view_agrees_with_rotation(l in with_one(), i in 0i64..=24) {
        let (view, offset) = frame_view(&l, i);
        prop_assert_eq!(view, l.cyclic_shift(i));
        prop_assert_eq!(offset, l.phi(i));
    }

    #[test]
    fn nonoverlap_equivalences((l, m) in with_two()) {
        let free = is_nonoverlapping(&l, &m).unwrap();
        prop_assert_eq!(free, contains(l.partition(), m.complement().partition()));
        prop_assert_eq!(free, !schubert_product(&l, &m).unwrap().is_zero());
        prop_assert_eq!(free, is_toric(&m.complement(), 0, &l).unwrap());
    }

    #[test]
    fn lr_symmetry_and_conjugation(
        l in small_partition(3, 3),
        m in small_partition(3, 3),
        extra in small_partition(4, 4),
    ) {
        // pick nu among the terms of the product, or an arbitrary shape
        let expansion = lr_expand(&l, &m, usize::MAX);
        let mut shapes: Vec<Partition> = expansion.keys().cloned().collect();
        shapes.push(extra);
        for nu in shapes {
            let c = lr_coefficient(&l, &m, &nu);
            prop_assert_eq!(c, lr_coefficient(&m, &l, &nu));
            prop_assert_eq!(c, lr_coefficient(&l.conjugate(), &m.conjugate(), &nu.conjugate()));
            if c > 0 {
                prop_assert_eq!(l.weight() + m.weight(), nu.weight());
                prop_assert!(contains(&l, &nu) && contains(&m, &nu));
            }
            prop_assert_eq!(c, expansion.get(&nu).copied().unwrap_or(0));
        }
    }

    #[test]
    fn fillings_are_lr_fillings(l in small_partition(3, 3), m in small_partition(3, 3)) {
        for (nu, c) in lr_expand(&l, &m, usize::MAX) {
            let all: Vec<_> = enumerate_lr_fillings(&l, &m, &nu).collect();
            prop_assert_eq!(all.len() as u64, c);
            for t in &all {
                prop_assert!(t.is_semistandard());
                prop_assert!(t.is_lr_filling(&m));
                prop_assert!(is_yamanouchi(&t.reading_word(), &m));
            }
        }
    }

    #[test]
    fn quantum_product_laws((l, m) in ctx_strategy()
        .prop_filter("keep the product small", |c| c.n() <= 8)
        .prop_flat_map(|c| (bounded(c), bounded(c))))
    {
        let n = l.ctx().n();
        let q = quantum_product(&l, &m).unwrap();
        prop_assert!(!q.is_zero());
        prop_assert!(q.is_nonzero_mod2());
        prop_assert_eq!(&q, &quantum_product(&m, &l).unwrap());
        prop_assert_eq!(q.slice(0), schubert_product(&l, &m).unwrap());
        for (d, nu) in q.terms().keys() {
            prop_assert_eq!(l.weight() + m.weight(), nu.weight() + d * n);
        }
        let e = extremal_data(&l, &m).unwrap();
        prop_assert_eq!(e.d_min + l.phi(e.a) + m.phi(-e.a), 0);
        prop_assert_eq!(e.d_max + l.phi(-e.b) + m.phi(e.b - l.ctx().width() as i64), 0);
        prop_assert!(0 <= e.d_min && e.d_min <= e.d_max);
        prop_assert!(!schubert_product(&e.lambda_min, &e.mu_min).unwrap().is_zero());
        prop_assert!(!schubert_product(&e.lambda_max, &e.mu_max).unwrap().is_zero());
        prop_assert_eq!(e.lambda_min.word(), l.word().rotate_left(e.a));
        let support: Vec<usize> = q.degrees().into_iter().collect();
        let interval: Vec<usize> = (e.d_min as usize..=e.d_max as usize).collect();
        prop_assert_eq!(&support, &interval);
        prop_assert_eq!(toric_support(&l, &m).unwrap().into_iter().collect::<Vec<_>>(), interval);
    }

    #[test]
    fn classical_slide_laws((l, m) in with_two()) {
        prop_assume!(is_nonoverlapping(&l, &m).unwrap());
        let s = slide(&l, &m).unwrap();
        prop_assert_eq!(&s.nu, &nu_classical(&l, &m).unwrap());
        prop_assert_eq!(s.nu.weight(), l.weight() + m.weight());
        prop_assert!(contains(l.partition(), s.nu.partition()));
        prop_assert!(s.witness.is_lr_filling(m.partition()));
        prop_assert!(s.trace.preserves_labels());
        prop_assert_eq!(s.trace.theta().reading_word(), s.witness.reading_word());
        prop_assert_eq!(lr_coefficient(l.partition(), m.partition(), s.nu.partition()), 1);
    }

    #[test]
    fn toric_implies_cylindric((l, m) in with_two(), d in -2i64..=6) {
        if is_toric(&m, d, &l).unwrap() {
            prop_assert!(is_cylindric_shape(&m, d, &l).unwrap());
        }
    }
}

#[test]
fn rotating_the_empty_partition_is_not_identity() {
    let c = RectContext::new(2, 4).unwrap();
    let e = c.empty();
    assert_eq!(e.cyclic_shift(1).parts(), &[2]);
    assert_eq!(e.cyclic_shift(2).parts(), &[2, 2]);
}

#[test]
fn frame_view_exhaustive_gr36() {
    let c = RectContext::new(3, 6).unwrap();
    for l in all_bounded_partitions(c) {
        for i in 0..=12 {
            assert_eq!(frame_view(&l, i), (l.cyclic_shift(i), l.phi(i)), "{l}, i = {i}");
        }
    }
}

#[test]
fn bounded_partition_counts() {
    for (k, n, count) in [(1, 2, 2), (2, 4, 6), (3, 6, 20), (5, 11, 462)] {
        let all = all_bounded_partitions(RectContext::new(k, n).unwrap());
        assert_eq!(all.len(), count);
        assert!(all.windows(2).all(|w| w[0].padded() < w[1].padded()));
    }
}
