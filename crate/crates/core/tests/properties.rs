use chainweights::conv::{convolve, corr_left, corr_right, epsilon, nonzero_ideals, FnR, SElement};
use chainweights::criterion::criterion_values;
use chainweights::mobius::{mobius_invert, mobius_invert_upper, sum_below, FinitePoset};
use chainweights::weights::{is_invariant, sym_left, sym_right, Weight};
use chainweights::{ProductRing, Scalar};
use num_traits::{One, Zero};
use proptest::prelude::*;

const RINGS: &[&str] = &[
    "Z4", "Z8", "Z9", "Z2*Z2", "Z2*Z4", "Z2*Z2*Z2", "F2x2", "F3x2", "Z2*F2x2",
];

fn ring() -> impl Strategy<Value = ProductRing> {
    prop::sample::select(RINGS).prop_map(|s| s.parse().unwrap())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=5, -2i64..=2)
        .prop_map(|(n, d, im)| Scalar::complex(Scalar::ratio(n, d), Scalar::int(im)))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn table(r: &ProductRing) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), r.size())
}

fn ring_and_fn() -> impl Strategy<Value = (ProductRing, FnR)> {
    ring().prop_flat_map(|r| table(&r).prop_map(move |t| (r.clone(), FnR::new(&r, t).unwrap())))
}

fn ring_and_three_fns() -> impl Strategy<Value = (FnR, FnR, FnR)> {
    ring().prop_flat_map(|r| {
        (table(&r), table(&r), table(&r)).prop_map(move |(a, b, c)| {
            (
                FnR::new(&r, a).unwrap(),
                FnR::new(&r, b).unwrap(),
                FnR::new(&r, c).unwrap(),
            )
        })
    })
}

fn ring_and_weight() -> impl Strategy<Value = Weight> {
    ring().prop_flat_map(|r| {
        prop::collection::vec(scalar(), r.ideal_reps().len()).prop_map(move |mut v| {
            let zero = r.ideal_pos(&r.zero_ideal()).unwrap();
            v[zero] = Scalar::zero();
            Weight::from_values(&r, v).unwrap()
        })
    })
}

fn ring_weight_and_s() -> impl Strategy<Value = (Weight, SElement)> {
    ring_and_weight().prop_flat_map(|w| {
        let n = nonzero_ideals(w.ring()).len();
        prop::collection::vec(scalar(), n).prop_map(move |c| {
            let s = SElement::from_epsilon_coords(w.ring(), &c).unwrap();
            (w.clone(), s)
        })
    })
}

/// Random partial orders on up to 6 points, given as a random DAG closed
/// under transitivity.
fn poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut rel = vec![vec![false; n]; n];
            for i in 0..n {
                rel[i][i] = true;
                for j in i + 1..n {
                    rel[i][j] = bits[i * n + j];
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if rel[i][k] && rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
            FinitePoset::from_fn(n, |i, j| rel[i][j]).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar(), n in nonzero_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a / &n) * &n, a.clone());
        prop_assert_eq!(&a - &a, Scalar::zero());
        prop_assert_eq!(&n * &n.inv().unwrap(), Scalar::one());
        let text = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Scalar>(&text).unwrap(), a);
    }

    #[test]
    fn inversion_round_trip(p in poset(), seed in prop::collection::vec(-9i64..=9, 6)) {
        let f: Vec<Scalar> = (0..p.len()).map(|i| Scalar::int(seed[i])).collect();
        if p.least().is_some() {
            let g = sum_below(&p, &f);
            prop_assert_eq!(mobius_invert(&p, &g).unwrap(), f.clone());
        }
        if p.greatest().is_some() {
            // g(x) = Σ_{y ≥ x} f(y); invert from above
            let g: Vec<Scalar> = (0..p.len())
                .map(|x| (0..p.len()).filter(|&y| p.leq(x, y)).map(|y| f[y].clone()).sum())
                .collect();
            prop_assert_eq!(mobius_invert_upper(&p, &g).unwrap(), f.clone());
        }
    }

    #[test]
    fn module_laws((f, g, w) in ring_and_three_fns()) {
        let fg = convolve(&f, &g).unwrap();
        prop_assert_eq!(
            corr_left(&fg, &w).unwrap(),
            corr_left(&f, &corr_left(&g, &w).unwrap()).unwrap()
        );
        prop_assert_eq!(
            corr_right(&w, &fg).unwrap(),
            corr_right(&corr_right(&w, &f).unwrap(), &g).unwrap()
        );
        prop_assert_eq!(
            corr_left(&g, &corr_right(&w, &f).unwrap()).unwrap(),
            corr_right(&corr_left(&g, &w).unwrap(), &f).unwrap()
        );
    }

    #[test]
    fn criterion_scales(w in ring_and_weight(), lambda in nonzero_scalar()) {
        let scaled = criterion_values(&w.scale(&lambda));
        for ((x, v), (y, sv)) in criterion_values(&w).into_iter().zip(scaled) {
            prop_assert_eq!(x, y);
            prop_assert_eq!(&v * &lambda, sv);
        }
    }

    #[test]
    fn symmetry_inherited((r, f) in ring_and_fn(), picks in prop::collection::vec(any::<bool>(), 16)) {
        // build a function with a nontrivial symmetry by averaging over a
        // subgroup generated by one unit
        let units = r.units();
        let u = units[picks.iter().filter(|&&b| b).count() % units.len()];
        let mut group = vec![r.one()];
        while let Some(&last) = group.last() {
            let next = r.mul(last, u);
            if next == r.one() {
                break;
            }
            group.push(next);
        }
        let g = FnR::from_fn(&r, |x| group.iter().map(|&v| f.at(r.mul(v, x)).clone()).sum());
        let h = FnR::from_fn(&r, |x| group.iter().map(|&v| f.at(r.mul(x, v)).clone()).sum());
        prop_assert!(sym_left(&corr_right(&f, &g).unwrap()).is_superset_of(&sym_right(&g)));
        prop_assert!(sym_right(&corr_left(&h, &f).unwrap()).is_superset_of(&sym_left(&h)));
    }

    #[test]
    fn invariant_weights_closed_under_s((w, s) in ring_weight_and_s()) {
        let out = corr_right(&w.to_fn(), &s).unwrap();
        prop_assert!(is_invariant(&out));
        let back = Weight::from_fn(&out).unwrap();
        prop_assert_eq!(back.to_fn(), out);
    }

    #[test]
    fn epsilon_expansion_round_trip((w, s) in ring_weight_and_s()) {
        let r = w.ring();
        let rebuilt = nonzero_ideals(r)
            .iter()
            .zip(s.epsilon_coords())
            .fold(FnR::zero(r), |acc, (e, c)| acc.add(&epsilon(r, e).unwrap().scale(&c)).unwrap());
        prop_assert_eq!(&rebuilt, &*s);
    }
}
