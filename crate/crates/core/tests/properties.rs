//! Randomized properties, each against an independent computation.

use num_bigint::BigInt;
use num_rational::Ratio;
use proptest::prelude::*;
use traceform::clifford::{monomial_sign, CliffordElt};
use traceform::hilbert::{cup, hilbert_symbol};
use traceform::numeric::{ratio, Rational};
use traceform::oracle::hilbert_oracle;
use traceform::poly::MonicPoly;
use traceform::qform::{berger, Gram, PivotOrder, QForm};
use traceform::qsqrt2::QSqrt2;
use traceform::squareclass::{Place, SquareClass};
use traceform::trace::{trace_gram, EtaleAlg};

const CAP: i64 = 999_999_999_999;

fn clifford_elt(rank: usize) -> impl Strategy<Value = CliffordElt> {
    let mask = (1u32 << rank) - 1;
    prop::collection::vec((0..=mask, -3i64..=3, -3i64..=3), 1..5).prop_map(move |terms| {
        terms.into_iter().fold(CliffordElt::zero(rank).unwrap(), |acc, (m, u, v)| {
            let c = QSqrt2::new(Ratio::from_integer(u), Ratio::new(v, 2));
            acc.add(&CliffordElt::monomial(rank, m, c).unwrap()).unwrap()
        })
    })
}

fn triple() -> impl Strategy<Value = (CliffordElt, CliffordElt, CliffordElt)> {
    (1usize..=8).prop_flat_map(|r| (clifford_elt(r), clifford_elt(r), clifford_elt(r)))
}

fn nonzero(bound: i64) -> impl Strategy<Value = i64> {
    (-bound..=bound).prop_filter("nonzero", |x| *x != 0)
}

fn rational() -> impl Strategy<Value = Rational> {
    (nonzero(60), 1i64..=5).prop_map(|(n, d)| ratio(n, d))
}

fn form(max_rank: usize) -> impl Strategy<Value = QForm> {
    prop::collection::vec(rational(), 1..=max_rank).prop_map(|e| QForm::new(e).unwrap())
}

fn squarefree(n: i64) -> bool {
    let m = n.abs();
    (2..).take_while(|d| d * d <= m).all(|d| m % (d * d) != 0)
}

/// Sign of sorting the word `s ++ t` (as index lists) by adjacent swaps,
/// with repeated generators cancelling.
fn bubble_sign(s: u32, t: u32) -> i32 {
    let mut word: Vec<u32> = (0..32).filter(|i| s >> i & 1 == 1).collect();
    word.extend((0..32).filter(|i| t >> i & 1 == 1));
    let mut sign = 1;
    for i in 0..word.len() {
        for j in 0..word.len() - 1 - i {
            if word[j] > word[j + 1] {
                word.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    sign
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn clifford_product_is_associative((a, b, c) in triple()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn monomial_sign_matches_sorting(s in 0u32..(1 << 12), t in 0u32..(1 << 12)) {
        prop_assert_eq!(monomial_sign(s, t), bubble_sign(s, t));
    }

    #[test]
    fn hilbert_symbol_matches_oracle(a in nonzero(5000), b in nonzero(5000), i in 0usize..16) {
        let places = [0u64, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
        let v = if places[i] == 0 { Place::Infinity } else { Place::Prime(places[i]) };
        let (ca, cb) = (SquareClass::from_int(a).unwrap(), SquareClass::from_int(b).unwrap());
        prop_assert_eq!(hilbert_symbol(&ca, &cb, v), hilbert_oracle(a, b, v));
    }

    // Inputs stay below the square of the trial-division limit, where
    // factorization always succeeds.
    #[test]
    fn cup_is_bilinear_and_even(a in nonzero(CAP), a2 in nonzero(CAP), b in nonzero(CAP)) {
        let (ca, ca2, cb) = (
            SquareClass::from_int(a).unwrap(),
            SquareClass::from_int(a2).unwrap(),
            SquareClass::from_int(b).unwrap(),
        );
        let lhs = cup(&ca.mul(&ca2), &cb);
        prop_assert!(lhs.satisfies_reciprocity());
        prop_assert_eq!(lhs, cup(&ca, &cb).add(&cup(&ca2, &cb)));
        prop_assert_eq!(cup(&ca, &cb), cup(&cb, &ca));
    }

    #[test]
    fn square_classes_multiply(a in nonzero(1_000_000), b in nonzero(1_000_000)) {
        let prod = SquareClass::from_bigint(&(BigInt::from(a) * BigInt::from(b))).unwrap();
        prop_assert_eq!(prod, SquareClass::from_int(a).unwrap().mul(&SquareClass::from_int(b).unwrap()));
    }

    #[test]
    fn whitney_formula(q1 in form(5), q2 in form(5)) {
        let lhs = q1.direct_sum(&q2).sw_total().unwrap();
        prop_assert_eq!(lhs, q1.sw_total().unwrap().mul(&q2.sw_total().unwrap()));
    }

    #[test]
    fn berger_closed_form(a in rational(), q in form(6)) {
        prop_assert_eq!(berger(&a, &q).unwrap(), q.scale(&a).unwrap().sw_total().unwrap());
    }

    #[test]
    fn isometry_is_invariant_under_squares_and_order(q in form(6), s in nonzero(20), rot in 0usize..6) {
        let mut entries: Vec<Rational> = q.entries().iter().map(|e| e * ratio(s * s, 1)).collect();
        let k = rot % entries.len();
        entries.rotate_left(k);
        prop_assert!(q.is_isometric(&QForm::new(entries).unwrap()).unwrap());
    }
}

#[test]
fn large_cofactors_are_refused() {
    // (10⁶ + 3)(10⁶ + 33), both prime.
    let n = BigInt::from(1_000_003i64) * BigInt::from(1_000_033i64);
    assert!(matches!(
        SquareClass::from_bigint(&n),
        Err(traceform::Error::FactorizationLimit(_))
    ));
}

fn gram(n: usize) -> impl Strategy<Value = Gram> {
    prop::collection::vec((-6i64..=6, 1i64..=3), n * (n + 1) / 2).prop_map(move |vals| {
        let mut rows = vec![vec![ratio(0, 1); n]; n];
        let mut it = vals.into_iter();
        for i in 0..n {
            for j in i..n {
                let (a, b) = it.next().unwrap();
                rows[i][j] = ratio(a, b);
                rows[j][i] = ratio(a, b);
            }
        }
        Gram::from_rows(rows).unwrap()
    })
}

fn small_poly() -> impl Strategy<Value = MonicPoly> {
    (3usize..=4)
        .prop_flat_map(|d| prop::collection::vec(-9i64..=9, d))
        .prop_map(|tail| {
            let mut c = vec![1i64];
            c.extend(tail);
            MonicPoly::from_i64(&c).unwrap()
        })
        .prop_filter("separable", MonicPoly::is_separable)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn diagonalization_is_pivot_independent(g in gram(6)) {
        let first = g.diagonalize_with(PivotOrder::First);
        prop_assume!(first.is_ok());
        let first = first.unwrap().invariants().unwrap();
        let last = g.diagonalize_with(PivotOrder::Last).unwrap().invariants().unwrap();
        prop_assert_eq!(first, last);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 50, ..ProptestConfig::default() })]

    #[test]
    fn gram_determinant_is_the_discriminant(f in small_poly()) {
        let det = trace_gram(&f).unwrap().determinant().unwrap();
        let via_gram = SquareClass::from_rational(&det).unwrap();
        let via_resultant = SquareClass::from_bigint(&f.discriminant()).unwrap();
        prop_assert_eq!(via_gram, via_resultant);
    }

    #[test]
    fn biquadratic_trace_form_is_a_tensor(a in nonzero(40), b in nonzero(40)) {
        prop_assume!(a != 1 && b != 1 && squarefree(a) && squarefree(b));
        prop_assume!(num_integer::gcd(a, b) == 1);
        // √a + √b has minimal polynomial x⁴ − 2(a+b)x² + (a−b)².
        let f = MonicPoly::from_i64(&[1, 0, -2 * (a + b), 0, (a - b) * (a - b)]).unwrap();
        let q = EtaleAlg::field(f).unwrap().trace_form().unwrap();
        let qa = QForm::from_ints(&[2, 2 * a]).unwrap();
        let qb = QForm::from_ints(&[2, 2 * b]).unwrap();
        prop_assert!(q.is_isometric(&qa.tensor(&qb)).unwrap());
    }

    #[test]
    fn multiplicity_identities_for_quadratics(d in nonzero(200), m in 1usize..=4) {
        prop_assume!(d != 1 && squarefree(d));
        let f = MonicPoly::from_i64(&[1, 0, -d]).unwrap();
        let q = EtaleAlg::field(f.clone()).unwrap().trace_form().unwrap();
        let qa = EtaleAlg::new(vec![(f, m)]).unwrap().trace_form().unwrap();
        let w1 = q.w1().unwrap();
        let expected_w1 = if m % 2 == 1 { w1.clone() } else { SquareClass::one() };
        let mut expected_w2 = if m % 2 == 1 { q.w2().unwrap() } else { Default::default() };
        if (m * (m - 1) / 2) % 2 == 1 {
            expected_w2 = expected_w2.add(&cup(&w1, &w1));
        }
        prop_assert_eq!(qa.w1().unwrap(), expected_w1);
        prop_assert_eq!(qa.w2().unwrap(), expected_w2);
    }
}
