//! Small exact-arithmetic helpers shared across the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Floor of the integer square root; input must be nonnegative.
pub fn isqrt(n: &Int) -> Int {
    assert!(!n.is_negative(), "isqrt of negative integer");
    n.sqrt()
}

/// Exact square root of an integer, if one exists.
pub fn int_sqrt_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, if one exists.
pub fn rat_sqrt_exact(q: &Rat) -> Option<Rat> {
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(Rat::new(n, d))
}

pub fn is_square_int(n: &Int) -> bool {
    int_sqrt_exact(n).is_some()
}

pub fn is_square_rat(q: &Rat) -> bool {
    rat_sqrt_exact(q).is_some()
}

/// Factor a nonzero integer by trial division. Returns (p, e) pairs with p
/// ascending. Intended for the smooth numbers that arise in the censuses and
/// verification replays; `limit` caps the trial divisor and any remaining
/// cofactor > limit^2 is returned as an error value in the last slot check.
pub fn factor_trial(n: &Int, limit: u64) -> Option<Vec<(Int, u32)>> {
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut out = Vec::new();
    let mut p = Int::from(2u32);
    let lim = Int::from(limit);
    while &p * &p <= m && p <= lim {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == Int::from(2u32) { 1u32 } else { 2u32 };
    }
    if m.is_one() {
        Some(out)
    } else if &m <= &(&lim * &lim) {
        out.push((m, 1));
        Some(out)
    } else {
        None
    }
}

/// Squarefree kernel d and cofactor c with n = d * c^2 (n nonzero).
pub fn squarefree_part(n: &Int) -> Option<(Int, Int)> {
    let fac = factor_trial(n, 1_000_000)?;
    let mut d = if n.is_negative() { -Int::one() } else { Int::one() };
    let mut c = Int::one();
    for (p, e) in fac {
        if e % 2 == 1 {
            d *= &p;
        }
        for _ in 0..(e / 2) {
            c *= &p;
        }
    }
    Some((d, c))
}

/// Deterministic Miller–Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod_u64(acc, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Kronecker symbol (a|n), extended Jacobi symbol over the integers.
pub fn kronecker(a: &Int, n: &Int) -> i32 {
    if n.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    let mut a = a.clone();
    let mut n = n.clone();
    let mut sign = 1i32;
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            sign = -sign;
        }
    }
    // strip factors of 2 from n
    let mut v2 = 0u32;
    while n.is_even() {
        n /= 2;
        v2 += 1;
    }
    let res8 = |x: &Int| -> i64 {
        let r = x.mod_floor(&Int::from(8));
        i64::try_from(&r).unwrap()
    };
    if v2 > 0 {
        if a.is_even() {
            return 0;
        }
        // (2|a) on odd a is chi_8(a)
        let r8 = res8(&a);
        if v2 % 2 == 1 && (r8 == 3 || r8 == 5) {
            sign = -sign;
        }
    }
    // now Jacobi (a|n), n odd positive
    a = a.mod_floor(&n);
    while !a.is_zero() {
        let mut t = 0u32;
        while a.is_even() {
            a /= 2;
            t += 1;
        }
        let n8 = res8(&n);
        if t % 2 == 1 && (n8 == 3 || n8 == 5) {
            sign = -sign;
        }
        if res8(&a) % 4 == 3 && n8 % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut n);
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        sign
    } else {
        0
    }
}

/// Is d a fundamental discriminant (of a quadratic field), d != 1?
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    let squarefree = |m: i64| -> bool {
        match squarefree_part(&Int::from(m)) {
            Some((_, c)) => c.is_one(),
            None => false,
        }
    };
    if d.rem_euclid(4) == 1 {
        squarefree(d)
    } else if d.rem_euclid(4) == 0 {
        let q = d / 4;
        let qr = q.rem_euclid(4);
        (qr == 2 || qr == 3) && squarefree(q)
    } else {
        false
    }
}

/// Best rational approximation to x with denominator at most `den_bound`,
/// by continued-fraction convergents.
pub fn rational_reconstruct(x: &Rat, den_bound: &Int) -> Rat {
    let mut p_prev = Int::one();
    let mut q_prev = Int::zero();
    let mut p = x.to_integer();
    let mut q = Int::one();
    let mut frac = x - Rat::from_integer(p.clone());
    while !frac.is_zero() && &q <= den_bound {
        let inv = frac.recip();
        let a = inv.to_integer();
        frac = inv - Rat::from_integer(a.clone());
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
    }
    if &q <= den_bound {
        Rat::new(p, q)
    } else {
        Rat::new(p_prev, q_prev)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_matches_legendre_small() {
        // (a|p) = a^((p-1)/2) mod p for odd primes
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23] {
            for a in 0..p {
                let ls = pow_mod_u64(a, (p - 1) / 2, p);
                let expect = if ls == 0 {
                    0
                } else if ls == 1 {
                    1
                } else {
                    -1
                };
                assert_eq!(kronecker(&int(a as i64), &int(p as i64)), expect, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn kronecker_chi_minus4() {
        // chi_{-4}: period 4, 1 at 1 mod 4, -1 at 3 mod 4, 0 even
        let d = int(-4);
        let vals: Vec<i32> = (1..=8).map(|k| kronecker(&d, &int(k))).collect();
        assert_eq!(vals, vec![1, 0, -1, 0, 1, 0, -1, 0]);
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3i64, -4, -7, -8, -11, -15, -20, -23, 5, 8, 12, 13] {
            assert!(is_fundamental_discriminant(d), "{d}");
        }
        for d in [-9i64, -12, -16, -18, 1, 4, 9, 25, -27] {
            assert!(!is_fundamental_discriminant(d), "{d}");
        }
    }

    #[test]
    fn reconstruct_recovers_simple_fractions() {
        let x = ratio(22, 7) + ratio(1, 100_000_000);
        let r = rational_reconstruct(&x, &int(50));
        assert_eq!(r, ratio(22, 7));
    }

    #[test]
    fn squarefree_kernel() {
        let (d, c) = squarefree_part(&int(-720)).unwrap();
        assert_eq!(d, int(-5));
        assert_eq!(c, int(12));
    }
}
