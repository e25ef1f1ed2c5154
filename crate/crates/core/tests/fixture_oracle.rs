//! Re-derives every fixture polynomial from its primitive element and
//! screens it: irreducible over Q, mod-p factorization patterns consistent
//! with the claimed Galois group, and the expected real/imaginary type.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use traceform::fixtures::{self, Fixture};
use traceform::numeric::{rat, Rational};
use traceform::poly::MonicPoly;
use traceform::qform::QForm;

type Matrix = Vec<Vec<Rational>>;

fn companion(coeffs: &[i64]) -> Matrix {
    // Leading coefficient first, monic.
    let n = coeffs.len() - 1;
    let mut m = vec![vec![rat(0); n]; n];
    for i in 1..n {
        m[i][i - 1] = rat(1);
    }
    for i in 0..n {
        m[i][n - 1] = rat(-coeffs[n - i]);
    }
    m
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { rat(1) } else { rat(0) }).collect())
        .collect()
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (p, q) = (a.len(), b.len());
    let mut m = vec![vec![rat(0); p * q]; p * q];
    for i in 0..p {
        for j in 0..p {
            for k in 0..q {
                for l in 0..q {
                    m[i * q + k][j * q + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    m
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut m = vec![vec![rat(0); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                m[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    m
}

/// `A ⊗ I + I ⊗ B`, whose eigenvalues are the pairwise sums.
fn kron_sum(a: &Matrix, b: &Matrix) -> Matrix {
    add(&kron(a, &identity(b.len())), &kron(&identity(a.len()), b))
}

/// Characteristic polynomial by Faddeev–LeVerrier, leading first.
fn charpoly(a: &Matrix) -> Vec<i64> {
    let n = a.len();
    let mut coeffs = vec![rat(1)];
    let mut m = vec![vec![rat(0); n]; n];
    for k in 1..=n {
        m = matmul(a, &m);
        let c_prev = coeffs.last().unwrap().clone();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &c_prev;
        }
        let am = matmul(a, &m);
        let trace: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs.push(-trace / rat(k as i64));
    }
    coeffs
        .iter()
        .map(|c| {
            assert!(c.is_integer());
            c.to_integer().to_i64().unwrap()
        })
        .collect()
}

fn sum_of_roots(polys: &[&[i64]]) -> Vec<i64> {
    let mut m = companion(polys[0]);
    for p in &polys[1..] {
        m = kron_sum(&m, &companion(p));
    }
    charpoly(&m)
}

/// Chebyshev-type `P_n` with `P_n(2 cos θ) = 2 cos(nθ)`, lowest degree first.
fn chebyshev(n: usize) -> Vec<i64> {
    let (mut prev, mut cur) = (vec![2i64], vec![0, 1]);
    for _ in 1..n {
        let mut next = vec![0i64; cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    cur
}

#[test]
fn multiquadratic_and_compositum_polynomials() {
    assert_eq!(
        sum_of_roots(&[&[1, 0, -2], &[1, 0, -3], &[1, 0, -5]]),
        fixtures::MQ_REAL.poly
    );
    assert_eq!(
        sum_of_roots(&[&[1, 0, 1], &[1, 0, -2], &[1, 0, -3]]),
        fixtures::MQ_IMAG.poly
    );
    assert_eq!(sum_of_roots(&[&[1, 0, 0, 0, -2], &[1, 0, 1]]), fixtures::D4_OCTIC.poly);
    assert_eq!(
        sum_of_roots(&[&[1, 0, -3], fixtures::C4.poly]),
        fixtures::C4X_COMPOSITUM.poly
    );
}

#[test]
fn cyclic_polynomials_from_chebyshev() {
    // 2cos(π/16) is a root of P_8 since 2cos(π/2) = 0.
    let p8 = chebyshev(8);
    let real: Vec<i64> = p8.iter().rev().copied().collect();
    assert_eq!(real, fixtures::C8_REAL.poly);
    // P_8(i x): the coefficient of x^k picks up i^k, real since only even k occur.
    let imag: Vec<i64> = p8
        .iter()
        .enumerate()
        .map(|(k, c)| {
            assert!(k % 2 == 0 || *c == 0);
            if k % 4 == 2 {
                -c
            } else {
                *c
            }
        })
        .rev()
        .collect();
    assert_eq!(imag, fixtures::C8_IMAG.poly);
    // √(2+√2) = 2cos(π/8), a root of P_4.
    let p4: Vec<i64> = chebyshev(4).iter().rev().copied().collect();
    assert_eq!(p4, fixtures::C4.poly);
}

/// Polynomials over F_p, lowest degree first, without trailing zeros.
mod fp {
    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
        let mut r = a.clone();
        let lead = inv(*b.last().unwrap(), p);
        while r.len() >= b.len() {
            let c = r.last().unwrap() * lead % p;
            let shift = r.len() - b.len();
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mulmod(a: &Poly, b: &Poly, m: &Poly, p: u64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&trim(out), m, p)
    }

    pub fn powmod(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
        let mut r = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(&r, &b, m, p);
            }
            b = mulmod(&b, &b, m, p);
            e >>= 1;
        }
        r
    }

    pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
        let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        let l = inv(*a.last().unwrap(), p);
        a.iter().map(|c| c * l % p).collect()
    }

    pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn div(a: &Poly, b: &Poly, p: u64) -> Poly {
        let mut r = a.clone();
        let lead = inv(*b.last().unwrap(), p);
        let mut q = vec![0u64; a.len() + 1 - b.len()];
        while r.len() >= b.len() {
            let c = r.last().unwrap() * lead % p;
            let shift = r.len() - b.len();
            q[shift] = c;
            for (i, bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - c * bi % p) % p;
            }
            r = trim(r);
        }
        q
    }

    /// Degrees of the irreducible factors of a squarefree `f`, with
    /// multiplicity, by distinct-degree factorization.
    pub fn factor_degrees(f: &Poly, p: u64) -> Vec<usize> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 0;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push(f.len() - 1);
                break;
            }
            h = powmod(&h, p, &f, p);
            let g = gcd(&f, &sub(&h, &x, p), p);
            if g.len() > 1 {
                out.extend(std::iter::repeat(d).take((g.len() - 1) / d));
                f = div(&f, &g, p);
                h = rem(&h, &f, p);
            }
        }
        out
    }
}

fn reduce_mod(poly: &[i64], p: u64) -> fp::Poly {
    fp::trim(poly.iter().rev().map(|c| c.rem_euclid(p as i64) as u64).collect())
}

fn primes_below(n: u64) -> Vec<u64> {
    (2..n).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)).collect()
}

/// Frobenius orders seen at unramified primes below 600; panics if some
/// pattern is not equal-degree, which a Galois field forbids.
fn frobenius_orders(f: &Fixture) -> BTreeSet<usize> {
    let disc = f.poly().discriminant();
    let mut orders = BTreeSet::new();
    for p in primes_below(600) {
        if (&disc % BigInt::from(p)).is_zero() {
            continue;
        }
        let degs = fp::factor_degrees(&reduce_mod(f.poly, p), p);
        assert_eq!(degs.iter().sum::<usize>(), f.poly.len() - 1);
        let distinct: BTreeSet<usize> = degs.iter().copied().collect();
        assert_eq!(distinct.len(), 1, "{}: mixed pattern {degs:?} mod {p}", f.name);
        orders.extend(distinct);
    }
    orders
}

fn element_orders(f: &Fixture) -> BTreeSet<usize> {
    let g = f.group().unwrap();
    (0..g.order()).map(|x| g.element_order(x)).collect()
}

/// Complex roots by Durand–Kerner.
fn roots(poly: &[i64]) -> Vec<Complex64> {
    let n = poly.len() - 1;
    let eval = |z: Complex64| poly.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64);
    let seed = Complex64::new(0.4, 0.9);
    let mut zs: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * 2.0).collect();
    for _ in 0..2000 {
        let prev = zs.clone();
        for i in 0..n {
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (zs[i] - zs[j]));
            let step = eval(zs[i]) / denom;
            zs[i] -= step;
        }
        if zs.iter().zip(&prev).all(|(a, b)| (a - b).norm() < 1e-14) {
            break;
        }
    }
    for z in &zs {
        assert!(eval(*z).norm() < 1e-6, "root did not converge");
    }
    zs
}

/// True if no subset of the roots of size `1..=n/2` gives a monic integer
/// factor; every near-integer candidate is confirmed by exact division.
fn irreducible_over_q(poly: &[i64]) -> bool {
    let rs = roots(poly);
    let n = rs.len();
    let f = MonicPoly::from_i64(poly).unwrap();
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > n / 2 {
            continue;
        }
        let mut factor = vec![Complex64::new(1.0, 0.0)];
        for (i, r) in rs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let mut next = vec![Complex64::new(0.0, 0.0); factor.len() + 1];
                for (k, c) in factor.iter().enumerate() {
                    next[k] += c;
                    next[k + 1] -= c * r;
                }
                factor = next;
            }
        }
        if factor.iter().all(|c| (c.re - c.re.round()).abs() < 1e-6 && c.im.abs() < 1e-6) {
            let g: Vec<BigInt> = factor.iter().map(|c| BigInt::from(c.re.round() as i64)).collect();
            let dense_f = f.to_dense();
            let dense_g: Vec<Rational> = g.iter().rev().map(|c| Rational::from_integer(c.clone())).collect();
            if traceform::poly::dense_rem(&dense_f, &dense_g).iter().all(Zero::is_zero) {
                return false;
            }
        }
    }
    true
}

#[test]
fn fixtures_are_irreducible_and_separable() {
    for f in fixtures::ALL {
        assert!(f.poly().is_separable(), "{}", f.name);
        assert!(irreducible_over_q(f.poly), "{}", f.name);
    }
    // The screen does detect factors.
    assert!(!irreducible_over_q(&[1, 0, -5, 0, 4]));
    assert!(!irreducible_over_q(&[1, 0, 0, 0, 4]));
}

#[test]
fn frobenius_orders_match_the_groups() {
    for f in fixtures::ALL {
        assert_eq!(frobenius_orders(&f), element_orders(&f), "{}", f.name);
    }
}

#[test]
fn reality_matches_roots() {
    for f in fixtures::ALL {
        let real_roots = roots(f.poly).iter().filter(|z| z.im.abs() < 1e-9).count();
        let expected = if f.totally_real { f.poly.len() - 1 } else { 0 };
        assert_eq!(real_roots, expected, "{}", f.name);
    }
}

#[test]
fn galois_trace_forms_have_extreme_signature() {
    for f in fixtures::ALL {
        let q = f.algebra().unwrap().trace_form().unwrap();
        let (p, m) = q.signature();
        assert!(m == 0 || p == m, "{}: ({p}, {m})", f.name);
    }
}

#[test]
fn real_multiquadratic_trace_form_is_the_unit_form() {
    let q = fixtures::MQ_REAL.algebra().unwrap().trace_form().unwrap();
    assert!(q.is_isometric(&QForm::unit(8)).unwrap());
}

#[test]
fn compositum_discriminants() {
    let (d1, d2) = fixtures::compositum_discs();
    let e2 = fixtures::C4.algebra().unwrap();
    assert_eq!(e2.disc().unwrap(), d2);
    let e1 = traceform::trace::EtaleAlg::field(MonicPoly::from_i64(&[1, 0, -3]).unwrap()).unwrap();
    assert_eq!(e1.disc().unwrap(), d1);
}
