use proptest::prelude::*;

use stringcone::strings::pretty_inequality;
use stringcone::{
    condition_l, ArQuiver, ConeSpec, DynkinDiagram, LusztigCrystal, Quiver, StringCrystal,
};

/// An orientation of `A_n` or `D_n` chosen by edge mask.
fn quiver(n: usize, d: bool, mask: usize) -> Quiver {
    let diagram = if d {
        DynkinDiagram::type_d(n.max(4))
    } else {
        DynkinDiagram::type_a(n)
    };
    let all = Quiver::all_orientations(&diagram);
    all[mask % all.len()].clone()
}

fn instance() -> impl Strategy<Value = (Quiver, Vec<i64>)> {
    (2usize..=5, any::<bool>(), 0usize..64).prop_flat_map(|(n, d, mask)| {
        let q = quiver(n, d, mask);
        let len = q.diagram().num_positive_roots();
        (Just(q), proptest::collection::vec(0i64..4, len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lusztig_raising_adds_a_simple_root((q, t) in instance(), pick in 0usize..8) {
        let ar = ArQuiver::from_quiver(&q);
        // the operator formula needs every Hom(X, S_i) to be at most one dimensional
        prop_assume!(condition_l(&ar));
        let crystal = LusztigCrystal::new(&ar);
        let i = 1 + pick % q.rank();
        let raised = crystal.e(i, &t).unwrap();
        prop_assert!(raised.iter().all(|&x| x >= 0));
        let before = crystal.weight(&t);
        let after = crystal.weight(&raised);
        let step: Vec<i64> = after.coords().iter().zip(before.coords()).map(|(a, b)| a - b).collect();
        prop_assert_eq!(step, q.diagram().simple_root(i).coords().to_vec());
    }

    #[test]
    fn string_operators_invert_each_other((q, a) in instance(), pick in 0usize..8) {
        let crystal = StringCrystal::new(q.diagram(), &q.adapted_word());
        let i = 1 + pick % q.rank();
        let up = crystal.e(i, &a).unwrap();
        prop_assert_eq!(crystal.f(i, &up).unwrap(), Some(a.clone()));
        if let Some(down) = crystal.f(i, &a).unwrap() {
            prop_assert_eq!(crystal.e(i, &down).unwrap(), a);
        }
    }

    #[test]
    fn strings_are_closed_under_raising((q, a) in instance(), pick in 0usize..8) {
        let crystal = StringCrystal::new(q.diagram(), &q.adapted_word());
        let i = 1 + pick % q.rank();
        if crystal.is_string(&a) {
            prop_assert!(crystal.is_string(&crystal.e(i, &a).unwrap()));
        }
    }

    #[test]
    fn lusztig_moves_satisfy_the_string_cone_in_type_a((q, a) in instance()) {
        prop_assume!(q.diagram().is_type_a());
        let ar = ArQuiver::from_quiver(&q);
        let cone = ConeSpec::new(LusztigCrystal::new(&ar).moves());
        let crystal = StringCrystal::new(q.diagram(), ar.word());
        prop_assert_eq!(cone.contains(&a).unwrap(), crystal.is_string(&a));
    }

    #[test]
    fn pretty_inequalities_round_trip(normal in proptest::collection::vec(-3i64..=3, 1..8)) {
        prop_assume!(normal.iter().any(|&c| c != 0));
        let text = pretty_inequality(&normal);
        let body = text.strip_suffix(">=0").unwrap();
        let mut parsed = vec![0i64; normal.len()];
        for (sign, term) in split_terms(body) {
            let (coeff, index) = term.split_once('t').unwrap();
            let c: i64 = if coeff.is_empty() { 1 } else { coeff.parse().unwrap() };
            let k: usize = index.parse().unwrap();
            parsed[k - 1] += sign * c;
        }
        prop_assert_eq!(parsed, normal);
    }
}

fn split_terms(body: &str) -> Vec<(i64, &str)> {
    let mut out = Vec::new();
    let mut sign = 1;
    let mut start = 0;
    for (at, ch) in body.char_indices() {
        if ch == '+' || ch == '-' {
            if at > start {
                out.push((sign, &body[start..at]));
            }
            sign = if ch == '+' { 1 } else { -1 };
            start = at + 1;
        }
    }
    out.push((sign, &body[start..]));
    out
}
