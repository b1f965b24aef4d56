use hodge_moduli::ek::{hp_ss_rank2_closed_form, hp_ss_series, SsRecursion};
use hodge_moduli::hn::enumerate_hn_types;
use hodge_moduli::poly::rat;
use hodge_moduli::rank2::{
    assemble_stable_series, hodge_deligne_stable_rank2, hp_moduli_stable_rank2, moduli_dimension, rank2_strata,
    stratum_beta1, stratum_beta2,
};
use hodge_moduli::verify::oracle;
use hodge_moduli::LaurentPoly;

fn golden(name: &str) -> LaurentPoly {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    serde_json::from_value(v["poly"].clone()).unwrap()
}

#[test]
fn genus_two_golden_tables() {
    assert_eq!(hp_moduli_stable_rank2(2).unwrap(), golden("stable2_g2_hp.json"));
    let hd = hodge_deligne_stable_rank2(2).unwrap();
    assert_eq!(hd, golden("stable2_g2_hd.json"));
    assert_eq!(hd.constant_term(), rat(0));
}

#[test]
fn beta_strata_series_genus_two() {
    let b1 = LaurentPoly::from_int_terms(&[
        (0, 0, 1), (0, 1, 2), (1, 0, 2), (0, 2, 1), (1, 1, 6), (2, 0, 1), (1, 2, 6), (2, 1, 6),
        (1, 3, 2), (2, 2, 11), (3, 1, 2), (2, 3, 8), (3, 2, 8), (2, 4, 2), (3, 3, 12), (4, 2, 2),
    ]);
    let b2 = LaurentPoly::from_int_terms(&[
        (0, 0, 1), (0, 1, 4), (1, 0, 4), (0, 2, 6), (1, 1, 17), (2, 0, 6), (0, 3, 4), (1, 2, 28),
        (2, 1, 28), (3, 0, 4), (0, 4, 1), (1, 3, 22), (2, 2, 52), (3, 1, 22), (4, 0, 1), (1, 4, 8),
        (2, 3, 50), (3, 2, 50), (4, 1, 8), (1, 5, 1), (2, 4, 27), (3, 3, 64), (4, 2, 27), (5, 1, 1),
    ]);
    assert_eq!(stratum_beta1(2).unwrap().contribution.series_expand(6).unwrap().terms(), &b1);
    assert_eq!(stratum_beta2(2).unwrap().contribution.series_expand(6).unwrap().terms(), &b2);
}

#[test]
fn series_input_agrees_with_exact_pipeline() {
    for g in 2..=4 {
        let order = 2 * moduli_dimension(2, g) + 4;
        let ss = hp_ss_series(2, 0, g, order).unwrap();
        let assembled = assemble_stable_series(&ss, &rank2_strata(g).unwrap()).unwrap().mul_binomial(1, 1);
        let exact = hp_moduli_stable_rank2(g).unwrap();
        assert_eq!(assembled.terms(), &exact.truncate(order), "g = {g}");
    }
}

#[test]
fn hn_enumeration_complete_against_box_scan() {
    for n in 1..=4 {
        for d in -6..=6 {
            for g in 1..=3 {
                let ours: Vec<(Vec<(i64, i64)>, i64)> = enumerate_hn_types(n, d, g, 20)
                    .unwrap()
                    .into_iter()
                    .map(|(t, c)| (t.quotients.iter().map(|q| (q.rank, q.degree)).collect(), c))
                    .collect();
                let mut sorted = ours.clone();
                sorted.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
                assert_eq!(sorted, oracle::hn_types(n, d, g, 20), "n={n} d={d} g={g}");
                assert!(ours.iter().all(|(_, c)| *c > 0));
            }
        }
    }
}

#[test]
fn hn_degree_shift_bijection() {
    for (n, d, g) in [(2, 1, 2), (3, 1, 2), (3, 2, 3), (4, 1, 2)] {
        let a = enumerate_hn_types(n, d, g, 14).unwrap();
        let b = enumerate_hn_types(n, d + n, g, 14).unwrap();
        let shifted: Vec<_> = a
            .iter()
            .map(|(t, c)| (t.quotients.iter().map(|q| (q.rank, q.degree + q.rank)).collect::<Vec<_>>(), *c))
            .collect();
        let target: Vec<_> =
            b.iter().map(|(t, c)| (t.quotients.iter().map(|q| (q.rank, q.degree)).collect::<Vec<_>>(), *c)).collect();
        assert_eq!(shifted, target);
    }
}

#[test]
fn semistable_series_counts_and_diagonal_oracle() {
    for (n, d, g) in [(2, 0, 2), (2, 1, 3), (3, 0, 2), (3, 2, 2)] {
        let s = SsRecursion::new().series(n, d, g, 12).unwrap();
        assert!(s.non_count_coefficients().is_empty(), "n={n} d={d} g={g}");
        assert!(s.is_uv_symmetric());
        let diag = s.into_terms().specialize_diagonal();
        let o = oracle::Diagonal::new().series(n, d, g, 12);
        for (k, x) in o.iter().enumerate() {
            assert_eq!(diag.coeff(k as i64), num_rational::BigRational::from_integer(x.clone()));
        }
    }
}

#[test]
fn closed_form_semistable_rank_two_higher_genus() {
    for g in 4..=5 {
        let rec = hp_ss_series(2, 0, g, 16).unwrap();
        assert_eq!(rec, hp_ss_rank2_closed_form(g).unwrap().series_expand(16).unwrap());
    }
}
