use catalan_tasep::closedforms::{n_mk, z_n};
use catalan_tasep::determinants::genfun;
use catalan_tasep::paths::{enumerate_paths, path_to_tableau, tableau_to_path};
use catalan_tasep::shapes::{boundary_weight, shape_to_state, state_to_shape};
use catalan_tasep::tableaux::{enumerate, CondensedTableau};
use catalan_tasep::tasep::{formula_distribution, prob_locations, RateSpec};
use catalan_tasep::{BivarPoly, Rat, Shape, TasepState};
use num_traits::One;
use proptest::prelude::*;

fn state() -> impl Strategy<Value = TasepState> {
    (1usize..=9).prop_flat_map(|n| (Just(n), 0..(1usize << n))).prop_map(|(n, i)| TasepState::from_index(n, i))
}

fn small_shape() -> impl Strategy<Value = Shape> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(rows, cols)| proptest::collection::vec(0..=cols, rows).prop_map(move |p| (p, cols)))
        .prop_map(|(mut parts, cols)| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            Shape::new(parts, cols).unwrap()
        })
}

fn rate() -> impl Strategy<Value = Rat> {
    (1i64..=6, 1i64..=6).prop_map(|(p, q)| Rat::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn state_shape_round_trip(s in state()) {
        prop_assert_eq!(shape_to_state(&state_to_shape(&s)), s.clone());
        let text = s.to_string();
        prop_assert_eq!(text.parse::<TasepState>().unwrap(), s);
    }

    #[test]
    fn genfun_has_the_boundary_factor(s in state()) {
        let shape = state_to_shape(&s);
        let g = genfun(&shape);
        prop_assert!(g.has_nonnegative_coefficients());
        let quotient = g.div_exact(&boundary_weight(&shape));
        prop_assert_eq!(quotient, Some(prob_locations(s.len(), &s.particle_positions()).unwrap()));
    }

    #[test]
    fn tableaux_and_paths_correspond(lambda in small_shape()) {
        let tableaux = enumerate(&lambda);
        let paths = enumerate_paths(&lambda);
        prop_assert_eq!(tableaux.len(), paths.len());
        for p in &paths {
            let t: CondensedTableau = path_to_tableau(p).unwrap();
            prop_assert!(t.is_valid());
            prop_assert_eq!(&tableau_to_path(&t).unwrap(), p);
        }
        let total: BivarPoly = tableaux.iter().map(CondensedTableau::weight).sum();
        prop_assert_eq!(total, genfun(&lambda));
    }

    #[test]
    fn formula_distribution_is_normalized(n in 1usize..=6, a in rate(), b in rate()) {
        let spec = RateSpec::new(n, a.clone(), b.clone()).unwrap();
        let dist = formula_distribution(&spec).unwrap();
        prop_assert!(dist.total().is_one());
        let z = z_n(n).eval(&a, &b);
        for k in 0..=n {
            let by_k: Rat = dist.iter().filter(|(s, _)| s.particles() == k).map(|(_, p)| p.clone()).sum();
            prop_assert_eq!(by_k, n_mk(n - k, k).eval(&a, &b) / &z);
        }
    }

    #[test]
    fn particle_hole_symmetry_of_rectangle_sums(m in 0usize..=5, k in 0usize..=5) {
        let swapped = n_mk(k, m);
        let mirrored = BivarPoly::from_terms(n_mk(m, k).terms().into_iter().map(|((j, l), c)| ((l, j), c.clone())));
        prop_assert_eq!(swapped, mirrored);
    }
}
