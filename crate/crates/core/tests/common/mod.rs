//! Independent oracles and seeded generators shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use polya::exact_poly::{int, Rational};
use polya::Polynomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| int(x)).collect()
}

pub fn rational_in(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    Rational::new(
        rng.gen_range(-num..=num).into(),
        rng.gen_range(1..=den).into(),
    )
}

/// Rational in `[lo, hi]` with denominator at most `den`.
pub fn rational_between(rng: &mut ChaCha8Rng, lo: &Rational, hi: &Rational, den: i64) -> Rational {
    let d: i64 = rng.gen_range(1..=den);
    let step: i64 = rng.gen_range(0..=d);
    lo + (hi - lo) * Rational::new(step.into(), d.into())
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    Polynomial::new((0..=d).map(|_| rational_in(rng, 9, 4)).collect())
}

pub fn nonzero_random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    loop {
        let p = random_poly(rng, max_degree);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Stirling numbers of the second kind by their recurrence.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
    t[0][0] = BigInt::one();
    for i in 1..=n {
        for j in 1..=i {
            t[i][j] = BigInt::from(j) * &t[i - 1][j] + &t[i - 1][j - 1];
        }
    }
    if k > n {
        BigInt::zero()
    } else {
        t[n][k].clone()
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

/// Discriminant of `d + c x + b x^2 + a x^3`.
pub fn cubic_discriminant(p: &Polynomial) -> Rational {
    assert_eq!(p.degree(), Some(3));
    let (d, c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2), p.coeff(3));
    let k = |n: i64| int(n);
    &b * &b * &c * &c
        - k(4) * &a * &c * &c * &c
        - k(4) * &b * &b * &b * &d
        - k(27) * &a * &a * &d * &d
        + k(18) * &a * &b * &c * &d
}

/// Determinant by permutation expansion, for matrices up to about 6 x 6.
pub fn leibniz_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Rational::zero();
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<Rational>], total: &mut Rational) {
    let n = perm.len();
    if k == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let mut prod = Rational::one();
        for (i, &j) in perm.iter().enumerate() {
            prod *= &m[i][j];
        }
        if inversions % 2 == 1 {
            prod = -prod;
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every Toeplitz minor of order `1..=max_order` over the window, no pruning.
pub fn brute_force_negative_minors(
    a: &[Rational],
    max_order: usize,
) -> Vec<(Vec<usize>, Vec<usize>, Rational)> {
    let n = a.len();
    let entry = |i: usize, j: usize| {
        if j < i {
            Rational::zero()
        } else {
            a[j - i].clone()
        }
    };
    let mut out = Vec::new();
    for order in 1..=max_order.min(n) {
        for rows in subsets(n, order) {
            for cols in subsets(n, order) {
                let m: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| entry(i, j)).collect())
                    .collect();
                let v = leibniz_det(&m);
                if v < Rational::zero() {
                    out.push((rows.clone(), cols, v));
                }
            }
        }
    }
    out
}

/// `x (x+1) prod (x + theta_i)` with `theta_i` in `[0, 1]`.
pub fn unit_interval_rooted(rng: &mut ChaCha8Rng, extra: usize) -> Polynomial {
    let mut f = Polynomial::from_ints(&[0, 1, 1]);
    for _ in 0..extra {
        let theta = rational_between(rng, &int(0), &int(1), 6);
        f = &f * &Polynomial::new(vec![theta, int(1)]);
    }
    let lead = Rational::new(rng.gen_range(1..=5).into(), rng.gen_range(1..=3).into());
    f.scale(&lead)
}

/// `lead * prod (x - r_i)` with `degree` roots drawn from `[lo, hi]`.
pub fn rooted_in(rng: &mut ChaCha8Rng, lo: &Rational, hi: &Rational, degree: usize) -> Polynomial {
    let roots: Vec<Rational> = (0..degree)
        .map(|_| rational_between(rng, lo, hi, 6))
        .collect();
    let lead = Rational::new(rng.gen_range(1..=5).into(), rng.gen_range(1..=3).into());
    Polynomial::from_roots(lead, &roots)
}

pub const ZERO_LOCATION_CASES: usize = 100;
pub const ZERO_LOCATION_MAX_DEGREE: usize = 8;

fn catalan_alpha() -> polya::symm::AlphaSeq {
    polya::symm::AlphaSeq::catalan()
}

fn intervals() -> [(Rational, Rational); 3] {
    [(int(-1), int(0)), (int(0), int(1)), (int(-2), int(3))]
}

fn scalings() -> [Rational; 3] {
    [int(1), int(2), Rational::new(1.into(), 3.into())]
}

/// g rooted in [a, b], c > 0: every zero of U(g) lies in [a, b].
/// Returns the number of polynomials checked.
pub fn zero_location_inside(seed: u64) -> Result<usize, String> {
    use polya::exact_poly::{Interval, RootCounter};
    let mut rng = rng(seed);
    let mut checked = 0;
    for (a, b) in intervals() {
        let inside = Interval::closed(a.clone(), b.clone()).unwrap();
        for c in scalings() {
            for _ in 0..ZERO_LOCATION_CASES {
                let deg = rng.gen_range(1..=ZERO_LOCATION_MAX_DEGREE);
                let g = rooted_in(&mut rng, &a, &b, deg);
                let out = polya::symm::u_op(&g, &catalan_alpha(), &a, &b, &c, 0)
                    .map_err(|e| e.to_string())?;
                let rc = RootCounter::new(&out).map_err(|e| e.to_string())?;
                if rc.count(&inside) != rc.degree() {
                    return Err(format!("[{a}, {b}], c = {c}, g = {g}: U(g) = {out}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// g rooted in (-inf, a] or [b, inf), c < 0: every zero of U(g) is real and
/// lies in (-inf, a] or [b, inf).
pub fn zero_location_outside(seed: u64) -> Result<usize, String> {
    use polya::exact_poly::{Interval, RootCounter};
    let mut rng = rng(seed);
    let mut checked = 0;
    for (a, b) in intervals() {
        let outside = [Interval::at_most(a.clone()), Interval::at_least(b.clone())];
        for c in scalings() {
            let c = -c;
            for left in [true, false] {
                for _ in 0..ZERO_LOCATION_CASES {
                    let deg = rng.gen_range(1..=ZERO_LOCATION_MAX_DEGREE);
                    let g = if left {
                        rooted_in(&mut rng, &(&a - int(4)), &a, deg)
                    } else {
                        rooted_in(&mut rng, &b, &(&b + int(4)), deg)
                    };
                    let out = polya::symm::u_op(&g, &catalan_alpha(), &a, &b, &c, 0)
                        .map_err(|e| e.to_string())?;
                    let rc = RootCounter::new(&out).map_err(|e| e.to_string())?;
                    if rc.count_union(&outside) != rc.degree() {
                        return Err(format!("[{a}, {b}], c = {c}, g = {g}: U(g) = {out}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(checked)
}

/// P = r x - s with r, s >= 0 and g rooted in (-inf, 0]: E(g) is real-rooted.
pub fn zero_location_linear(seed: u64) -> Result<usize, String> {
    let mut rng = rng(seed);
    let mut checked = 0;
    for _ in 0..3 * ZERO_LOCATION_CASES {
        let deg = rng.gen_range(1..=ZERO_LOCATION_MAX_DEGREE);
        let g = rooted_in(&mut rng, &int(-5), &int(0), deg);
        let r = rational_between(&mut rng, &int(0), &int(3), 4);
        let s = rational_between(&mut rng, &int(0), &int(3), 4);
        let p = Polynomial::new(vec![-s, r]);
        let out = polya::symm::e_op(&g, &catalan_alpha(), &p, 0).map_err(|e| e.to_string())?;
        if out.is_zero() || !polya::exact_poly::is_real_rooted(&out).map_err(|e| e.to_string())? {
            return Err(format!("P = {p}, g = {g}: E(g) = {out}"));
        }
        checked += 1;
    }
    Ok(checked)
}
