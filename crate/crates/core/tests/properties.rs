use dyckstat::involution::{big_phi, in_phi_domain, in_phi_inverse_domain};
use dyckstat::stats::{self, rise_set_composition, rises_from_composition};
use dyckstat::word::is_dyck;
use dyckstat::*;
use proptest::prelude::*;

/// Balanced word from a shuffle of `n` norths and `n` easts, with every
/// excursion below the diagonal reflected upwards.
fn reflect_to_dyck(raw: Vec<bool>) -> DyckWord {
    let mut height = 0i64;
    let mut steps = Vec::with_capacity(raw.len());
    let mut below = false;
    for north in raw {
        let delta = if north { 1 } else { -1 };
        if height == 0 {
            below = delta < 0;
        }
        height += delta;
        let step = if north != below {
            Step::North
        } else {
            Step::East
        };
        steps.push(step);
    }
    DyckWord::from_steps(steps).expect("reflection yields a Dyck word")
}

fn dyck(max_n: usize) -> impl Strategy<Value = DyckWord> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let mut v = vec![true; n];
            v.extend(vec![false; n]);
            Just(v).prop_shuffle()
        })
        .prop_map(reflect_to_dyck)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn format_parse_round_trip(w in dyck(30)) {
        for a in Alphabet::ALL {
            prop_assert_eq!(DyckWord::parse(&w.format(a), a).unwrap(), w.clone());
        }
    }

    #[test]
    fn prime_components_concatenate(w in dyck(30)) {
        let parts = prime_components(&w);
        prop_assert_eq!(parts.len(), stats::returns(w.steps()));
        prop_assert_eq!(DyckWord::concat(&parts), w);
    }

    #[test]
    fn marked_factorization_reassembles(w in dyck(30), cut in any::<prop::sample::Index>()) {
        let steps = w.steps();
        let prefix = &steps[..cut.index(steps.len() + 1)];
        let m = MarkedFactorization::of(prefix).unwrap();
        prop_assert_eq!(m.reassemble(), prefix.to_vec());
        for f in &m.items {
            prop_assert_eq!(prime_components(&f.prime).len(), 1);
        }
    }

    #[test]
    fn statistic_ranges(w in dyck(30)) {
        let s = compute_stats(&w);
        let n = s.semilength;
        prop_assert_eq!(s.rise_composition.iter().sum::<usize>(), n);
        prop_assert_eq!(s.rises.len(), s.rise_composition.len());
        prop_assert_eq!(rises_from_composition(&rise_set_composition(&s.rises, n)), s.rises.clone());
        if n > 0 {
            prop_assert!(s.returns >= 1 && s.returns <= n);
            prop_assert!(s.ldr < n);
            prop_assert_eq!(s.rises[0], 1);
        }
        let has_double_rise = w.steps().windows(2).any(|p| p == [Step::North, Step::North]);
        let has_double_fall = w.steps().windows(2).any(|p| p == [Step::East, Step::East]);
        prop_assert_eq!(s.ldr == 0, !has_double_rise);
        prop_assert_eq!(s.fdf == n, !has_double_fall);
    }

    #[test]
    fn reverse_complement_duality(w in dyck(30)) {
        let rc = w.reverse_complement();
        prop_assert!(is_dyck(rc.steps()));
        prop_assert_eq!(stats::fdf(rc.steps()), w.semilength() - stats::ldr(w.steps()));
        prop_assert_eq!(stats::returns(rc.steps()), stats::returns(w.steps()));
        prop_assert_eq!(rc.reverse_complement(), w);
    }

    // Beyond the exhaustively checked sizes.
    #[test]
    fn big_phi_swaps_on_large_words(w in dyck(24)) {
        let n = w.semilength();
        let image = big_phi(&w).unwrap();
        prop_assert!(is_dyck(image.steps()));
        prop_assert_eq!(big_phi(&image).unwrap(), w.clone());
        prop_assert_eq!(stats::rises(image.steps()), stats::rises(w.steps()));
        prop_assert_eq!(stats::returns(image.steps()), n - stats::ldr(w.steps()));
        prop_assert_eq!(n - stats::ldr(image.steps()), stats::returns(w.steps()));
    }

    #[test]
    fn phi_laws_on_large_words(w in dyck(24)) {
        if in_phi_domain(&w) {
            let (image, case) = phi(&w).unwrap();
            prop_assert!(is_dyck(image.steps()));
            prop_assert_eq!(stats::returns(image.steps()), stats::returns(w.steps()) + 1);
            prop_assert_eq!(stats::ldr(image.steps()), stats::ldr(w.steps()) + 1);
            prop_assert_eq!(phi_inverse(&image).unwrap(), (w.clone(), case));
        }
        if in_phi_inverse_domain(&w) {
            let (pre, case) = phi_inverse(&w).unwrap();
            prop_assert_eq!(phi(&pre).unwrap(), (w, case));
        }
    }

    #[test]
    fn permutation_round_trip(w in dyck(30)) {
        let p = from_dyck(&w);
        prop_assert!(p.is_321_avoiding());
        prop_assert_eq!(to_dyck(&p).unwrap(), w.clone());
        let s = perm_stats(&p);
        prop_assert_eq!(s.lrmax, stats::rises(w.steps()));
        prop_assert_eq!(s.blocks, stats::returns(w.steps()));
        prop_assert_eq!(s.ldes_inverse, stats::ldr(w.steps()));
    }

    #[test]
    fn parse_never_panics(text in "[NEUD01x ]{0,40}") {
        for a in Alphabet::ALL {
            if let Ok(w) = DyckWord::parse(&text, a) {
                prop_assert_eq!(w.format(a), text.clone());
            }
        }
        let _ = text.parse::<Permutation>();
    }
}
