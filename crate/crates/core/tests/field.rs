use hermquot::gf::{make_field, AdditiveOperator, FieldContext, FieldElement};
use proptest::prelude::*;

// Polynomials over F_p as coefficient vectors, constant term first.
fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let lead_inv = (1..p).find(|&c| c * b[db] % p == 1).unwrap();
    while a.len() > db {
        let top = a.len() - 1;
        let c = a[top] * lead_inv % p;
        if c != 0 {
            for i in 0..=db {
                let idx = top - db + i;
                a[idx] = (a[idx] + p * p - c * b[i] % p) % p;
            }
        }
        a.pop();
    }
    a
}

fn monic_polys(deg: usize, p: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..(p as u64).pow(deg as u32)).map(move |mut i| {
        let mut v: Vec<u32> = (0..deg)
            .map(|_| {
                let c = (i % p as u64) as u32;
                i /= p as u64;
                c
            })
            .collect();
        v.push(1);
        v
    })
}

fn irreducible_by_trial_division(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    (1..=k / 2).all(|d| monic_polys(d, p).all(|g| poly_rem(f.to_vec(), &g, p).iter().any(|&c| c != 0)))
}

// lex order from the constant term upward: c0 is the most significant digit
fn lex_least_irreducible(p: u32, k: usize) -> Vec<u32> {
    let total = (p as u64).pow(k as u32);
    (0..total)
        .map(|mut i| {
            let mut digits = vec![0u32; k];
            for c in digits.iter_mut().rev() {
                *c = (i % p as u64) as u32;
                i /= p as u64;
            }
            digits.push(1);
            digits
        })
        .find(|f| irreducible_by_trial_division(f, p))
        .unwrap()
}

#[test]
fn modulus_matches_trial_division_oracle() {
    for (p, k) in [(7, 2), (5, 2), (7, 4), (5, 6), (11, 2)] {
        let f = make_field(p, k).unwrap();
        assert_eq!(f.modulus(), lex_least_irreducible(p, k).as_slice(), "F_{p}^{k}");
    }
}

#[test]
fn inverse_by_scan() {
    let f = make_field(7, 1).unwrap();
    let three = f.from_int(3);
    let by_scan = f.elements().find(|&e| f.mul(e, three) == f.one()).unwrap();
    assert_eq!(by_scan, f.from_int(5));
    assert_eq!(f.inv(three).unwrap(), by_scan);

    let f = make_field(5, 4).unwrap();
    for a in f.elements().filter(|e| !e.is_zero()) {
        let inv = f.inv(a).unwrap();
        assert_eq!(f.mul(a, inv), f.one());
    }
    assert!(f.inv(f.zero()).is_err());
}

#[test]
fn additive_solutions_match_brute_scan() {
    let f = make_field(7, 2).unwrap();
    let one = f.one();
    let ops = [
        AdditiveOperator::new(vec![(one, 7), (one, 1)]),
        AdditiveOperator::new(vec![(one, 7), (f.neg(one), 1)]),
        AdditiveOperator::new(vec![(f.parse("2,3").unwrap(), 7), (f.parse("0,1").unwrap(), 1)]),
    ];
    for op in &ops {
        for c in f.elements() {
            let mut brute: Vec<FieldElement> = f.elements().filter(|&y| op.eval(&f, y) == c).collect();
            brute.sort_by(|a, b| f.lex_cmp(*a, *b));
            assert_eq!(f.additive_solve(op, c), brute);
        }
    }
}

#[test]
fn trace_zero_elements() {
    for (p, k) in [(5, 2), (7, 2), (5, 4)] {
        let f = make_field(p, k).unwrap();
        let zeros = f.elements().filter(|&e| f.trace_to_prime(e).is_zero()).count();
        assert_eq!(zeros as u32, f.order() / p);
    }
}

#[test]
fn omega_relation() {
    for (p, k) in [(5, 2), (7, 2), (7, 4), (5, 6), (11, 2)] {
        let f = make_field(p, k).unwrap();
        let q = (p as u64).pow(k as u32 / 2);
        let omega = f.find_omega().unwrap();
        assert_eq!(f.pow(omega, q - 1), f.neg(f.one()));
    }
}

#[test]
fn lex_order_starts_at_constant_term() {
    let f = make_field(5, 2).unwrap();
    let lex: Vec<String> = f.elements_lex().take(6).map(|e| f.format(e)).collect();
    assert_eq!(lex, ["0,0", "0,1", "0,2", "0,3", "0,4", "1,0"]);
}

fn field() -> FieldContext {
    make_field(5, 4).unwrap()
}

proptest! {
    #[test]
    fn field_axioms(a in 0u32..625, b in 0u32..625, c in 0u32..625) {
        let f = field();
        let (a, b, c) = (f.from_index(a).unwrap(), f.from_index(b).unwrap(), f.from_index(c).unwrap());
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !b.is_zero() {
            prop_assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        }
    }

    #[test]
    fn frobenius_is_a_field_automorphism(a in 0u32..625, b in 0u32..625, i in 0u32..4) {
        let f = field();
        let (a, b) = (f.from_index(a).unwrap(), f.from_index(b).unwrap());
        prop_assert_eq!(f.frobenius(f.add(a, b), i), f.add(f.frobenius(a, i), f.frobenius(b, i)));
        prop_assert_eq!(f.frobenius(f.mul(a, b), i), f.mul(f.frobenius(a, i), f.frobenius(b, i)));
        prop_assert_eq!(f.frobenius(a, 4), a);
        prop_assert!(f.in_subfield(f.trace_to_prime(a), 1));
    }

    #[test]
    fn format_parse_round_trip(a in 0u32..625) {
        let f = field();
        let e = f.from_index(a).unwrap();
        prop_assert_eq!(f.parse(&f.format(e)).unwrap(), e);
    }
}
