//! Dense polynomial utilities over Z, Q, and F_p for the small degrees
//! (<= 4) used throughout the crate: resultants and discriminants, Sturm
//! sequences with exact real-root isolation, and factorization mod p.

use crate::arith::{mul_mod_u64, pow_mod_u64, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients ascending: p[i] is the coefficient of x^i.
pub type IntPoly = Vec<Int>;
pub type RatPoly = Vec<Rat>;

pub fn ipoly(coeffs: &[i64]) -> IntPoly {
    coeffs.iter().map(|&c| Int::from(c)).collect()
}

pub fn degree(p: &[Int]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn eval_int(p: &[Int], x: &Int) -> Int {
    let mut acc = Int::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn eval_rat(p: &[Int], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + Rat::from_integer(c.clone());
    }
    acc
}

pub fn eval_rat_poly(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub fn derivative(p: &[Int]) -> IntPoly {
    if p.len() <= 1 {
        return vec![Int::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Int::from(i))
        .collect()
}

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(f: &[Int], g: &[Int]) -> Int {
    let n = match degree(f) {
        Some(n) => n,
        None => return Int::zero(),
    };
    let m = match degree(g) {
        Some(m) => m,
        None => return Int::zero(),
    };
    if n == 0 {
        return num_traits::pow::pow(f[0].clone(), m);
    }
    if m == 0 {
        return num_traits::pow::pow(g[0].clone(), n);
    }
    let size = n + m;
    let mut s = crate::lattice::zeros(size, size);
    for i in 0..m {
        for j in 0..=n {
            s[i][i + j] = f[n - j].clone();
        }
    }
    for i in 0..n {
        for j in 0..=m {
            s[m + i][i + j] = g[m - j].clone();
        }
    }
    crate::lattice::det(&s)
}

/// Discriminant: disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
pub fn discriminant(f: &[Int]) -> Int {
    let n = degree(f).expect("nonzero polynomial");
    assert!(n >= 1);
    let r = resultant(f, &derivative(f));
    let lc = &f[n];
    let mut d = r / lc;
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    d
}

// ---------------------------------------------------------------------------
// Real-root isolation via Sturm sequences (exact rational arithmetic).
// ---------------------------------------------------------------------------

fn to_rat_poly(p: &[Int]) -> RatPoly {
    p.iter().map(|c| Rat::from_integer(c.clone())).collect()
}

fn rat_poly_trim(mut p: RatPoly) -> RatPoly {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn rat_poly_rem(a: &[Rat], b: &[Rat]) -> RatPoly {
    let mut r: RatPoly = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > 1 && r.len() - 1 >= db && !r.last().unwrap().is_zero() {
        let dr = r.len() - 1;
        let q = r[dr].clone() / lb;
        let shift = dr - db;
        for i in 0..=db {
            let t = &q * &b[i];
            r[shift + i] -= t;
        }
        r = rat_poly_trim(r);
        if r.iter().all(|c| c.is_zero()) {
            break;
        }
    }
    rat_poly_trim(r)
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(f: &[Int]) -> Vec<RatPoly> {
    let f0 = rat_poly_trim(to_rat_poly(f));
    let f1 = rat_poly_trim(to_rat_poly(&derivative(f)));
    let mut chain = vec![f0, f1];
    loop {
        let k = chain.len();
        let r = rat_poly_rem(&chain[k - 2], &chain[k - 1]);
        if r.iter().all(|c| c.is_zero()) {
            break;
        }
        chain.push(r.iter().map(|c| -c).collect());
        if chain.last().unwrap().len() == 1 {
            break;
        }
    }
    chain
}

fn sign_changes_at(chain: &[RatPoly], x: &Rat) -> usize {
    let mut signs = Vec::new();
    for p in chain {
        let v = eval_rat_poly(p, x);
        if !v.is_zero() {
            signs.push(v.is_positive());
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of real roots of a squarefree f in the half-open interval (a, b].
pub fn count_roots_between(f: &[Int], a: &Rat, b: &Rat) -> usize {
    let chain = sturm_chain(f);
    sign_changes_at(&chain, a) - sign_changes_at(&chain, b)
}

/// Cauchy-style bound: all real roots lie in (-B, B).
pub fn root_bound(f: &[Int]) -> Rat {
    let n = degree(f).expect("nonzero");
    let lc = f[n].clone();
    let mut max = Rat::zero();
    for c in f.iter().take(n) {
        let q = Rat::new(c.clone(), lc.clone()).abs();
        if q > max {
            max = q;
        }
    }
    max + Rat::one() + Rat::one()
}

/// Isolating intervals (lo, hi] for every real root of a squarefree integer
/// polynomial, in increasing order. Interval endpoints are never roots.
pub fn isolate_real_roots(f: &[Int]) -> Vec<(Rat, Rat)> {
    let chain = sturm_chain(f);
    let b = root_bound(f);
    let mut work = vec![(-b.clone(), b.clone())];
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    while let Some((lo, hi)) = work.pop() {
        let n = sign_changes_at(&chain, &lo) - sign_changes_at(&chain, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        // choose a split point that is not itself a root (finitely many roots,
        // so a few fractions of the interval always suffice)
        let mut mid = (&lo + &hi) / Rat::from_integer(Int::from(2));
        let mut den = 3i64;
        while eval_rat(f, &mid).is_zero() {
            mid = &lo + (&hi - &lo) / Rat::from_integer(Int::from(den));
            den += 2;
        }
        work.push((lo, mid.clone()));
        work.push((mid, hi));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Shrink an isolating interval of f until its width is below `width`.
pub fn refine_root(f: &[Int], lo: &Rat, hi: &Rat, width: &Rat) -> (Rat, Rat) {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let two = Rat::from_integer(Int::from(2));
    let sign_lo = eval_rat(f, &lo).is_positive();
    loop {
        if &(&hi - &lo) < width {
            return (lo, hi);
        }
        let mid = (&lo + &hi) / &two;
        let v = eval_rat(f, &mid);
        if v.is_zero() {
            let w = (&hi - &lo) / Rat::from_integer(Int::from(4));
            return (&mid - &w, &mid + &w);
        }
        if v.is_positive() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// Exact integer roots of a squarefree monic integer polynomial. Fast path:
/// integer roots divide the constant term; isolation is the fallback when
/// the constant term resists factoring.
pub fn integer_roots_monic(f: &[Int]) -> Vec<Int> {
    if f[0].is_zero() {
        // strip the factor x and recurse on the cofactor
        let mut out = vec![Int::zero()];
        let g: IntPoly = f[1..].to_vec();
        if degree(&g).unwrap_or(0) >= 1 {
            out.extend(integer_roots_monic(&g));
        }
        out.sort();
        out.dedup();
        return out;
    }
    if let Some(fac) = crate::arith::factor_trial(&f[0], 100_000) {
        let mut divs = vec![Int::one()];
        for (p, e) in fac {
            let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
            let mut pk = Int::one();
            for _ in 0..=e {
                for d in &divs {
                    next.push(d * &pk);
                }
                pk *= &p;
            }
            divs = next;
        }
        let mut out = Vec::new();
        for d in divs {
            for s in [1i64, -1] {
                let c = &d * Int::from(s);
                if eval_int(f, &c).is_zero() {
                    out.push(c);
                }
            }
        }
        out.sort();
        out.dedup();
        return out;
    }
    let mut out = Vec::new();
    for (lo, hi) in isolate_real_roots(f) {
        let a = lo.ceil().to_integer();
        let b = hi.floor().to_integer();
        let mut k = a;
        while k <= b {
            if eval_int(f, &k).is_zero() {
                out.push(k.clone());
            }
            k += 1;
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x] for word-size p.
// ---------------------------------------------------------------------------

pub type ModPoly = Vec<u64>;

pub fn mp_trim(mut p: ModPoly) -> ModPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

pub fn mp_deg(p: &[u64]) -> usize {
    p.iter().rposition(|&c| c != 0).unwrap_or(0)
}

pub fn mp_from_int(f: &[Int], p: u64) -> ModPoly {
    let pp = Int::from(p);
    mp_trim(
        f.iter()
            .map(|c| u64::try_from(&c.mod_floor(&pp)).unwrap())
            .collect(),
    )
}

pub fn mp_mul(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod_u64(x, y, p)) % p;
        }
    }
    mp_trim(out)
}

pub fn mp_rem(a: &[u64], m: &[u64], p: u64) -> ModPoly {
    let dm = mp_deg(m);
    let inv_lead = pow_mod_u64(m[dm], p - 2, p);
    let mut r: ModPoly = a.to_vec();
    while mp_deg(&r) >= dm && !(mp_deg(&r) == 0 && r[0] == 0) {
        let dr = mp_deg(&r);
        if dr < dm {
            break;
        }
        let q = mul_mod_u64(r[dr], inv_lead, p);
        if q != 0 {
            let shift = dr - dm;
            for i in 0..=dm {
                let t = mul_mod_u64(q, m[i], p);
                r[shift + i] = (r[shift + i] + p - t % p) % p;
            }
        }
        r[dr] = 0;
        r = mp_trim(r);
        if r.len() == 1 && r[0] == 0 {
            break;
        }
    }
    mp_trim(r)
}

pub fn mp_gcd(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut a: ModPoly = mp_trim(a.to_vec());
    let mut b: ModPoly = mp_trim(b.to_vec());
    while !(b.len() == 1 && b[0] == 0) {
        let r = mp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    // monic normalization
    let d = mp_deg(&a);
    if a[d] != 0 {
        let inv = pow_mod_u64(a[d], p - 2, p);
        for c in a.iter_mut() {
            *c = mul_mod_u64(*c, inv, p);
        }
    }
    a
}

/// x^e mod (m, p) by square and multiply.
pub fn mp_pow_x(e: &Int, m: &[u64], p: u64) -> ModPoly {
    let bits = e.bits();
    let mut acc: ModPoly = vec![1];
    for i in (0..bits).rev() {
        acc = mp_rem(&mp_mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            let mut shifted = vec![0u64; acc.len() + 1];
            shifted[1..].copy_from_slice(&acc);
            acc = mp_rem(&shifted, m, p);
        }
    }
    acc
}

/// Roots of a squarefree polynomial mod p (deterministic; fine for the small
/// degrees used here).
pub fn mp_roots(f: &[u64], p: u64) -> Vec<u64> {
    let f = mp_trim(f.to_vec());
    let mut out = Vec::new();
    if p < 600 {
        for r in 0..p {
            let mut acc = 0u64;
            for &c in f.iter().rev() {
                acc = (mul_mod_u64(acc, r, p) + c) % p;
            }
            if acc == 0 {
                out.push(r);
            }
        }
        return out;
    }
    // linear-factor part: gcd(x^p - x, f)
    let xp = mp_pow_x(&Int::from(p), &f, p);
    // x^p - x
    let mut g = xp;
    if g.len() < 2 {
        g.resize(2, 0);
    }
    g[1] = (g[1] + p - 1) % p;
    let lin = mp_gcd(&g, &f, p);
    collect_roots_split(&lin, p, &mut out);
    out.sort_unstable();
    out
}

/// Split a product of distinct linear factors and collect its roots
/// (deterministic shifts instead of random ones).
fn collect_roots_split(g: &[u64], p: u64, out: &mut Vec<u64>) {
    let d = mp_deg(g);
    if d == 0 {
        return;
    }
    if d == 1 {
        // monic x + c -> root -c
        let c = g[0];
        out.push((p - c % p) % p);
        return;
    }
    // try (x + t)^((p-1)/2) - 1 for t = 0, 1, 2, ...
    for t in 0u64.. {
        let base: ModPoly = vec![t % p, 1];
        let mut acc: ModPoly = vec![1];
        let e = (p - 1) / 2;
        let bits = 64 - e.leading_zeros() as u64;
        for i in (0..bits).rev() {
            acc = mp_rem(&mp_mul(&acc, &acc, p), g, p);
            if (e >> i) & 1 == 1 {
                acc = mp_rem(&mp_mul(&acc, &base, p), g, p);
            }
        }
        // acc - 1
        let mut h = acc;
        h[0] = (h[0] + p - 1) % p;
        let gg = mp_gcd(&h, g, p);
        let dg = mp_deg(&gg);
        if dg > 0 && dg < d {
            let quot = mp_divide_exact(g, &gg, p);
            collect_roots_split(&gg, p, out);
            collect_roots_split(&quot, p, out);
            return;
        }
    }
}

fn mp_divide_exact(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let da = mp_deg(a);
    let db = mp_deg(b);
    let inv_lead = pow_mod_u64(b[db], p - 2, p);
    let mut r: ModPoly = a.to_vec();
    let mut q = vec![0u64; da - db + 1];
    for i in (0..=(da - db)).rev() {
        let coef = mul_mod_u64(*r.get(db + i).unwrap_or(&0), inv_lead, p);
        q[i] = coef;
        if coef != 0 {
            for j in 0..=db {
                let t = mul_mod_u64(coef, b[j], p);
                r[i + j] = (r[i + j] + p - t) % p;
            }
        }
    }
    mp_trim(q)
}

/// Full factorization mod p of an integer polynomial of degree <= 4 whose
/// leading coefficient is a p-unit. Returns monic factors with multiplicity.
pub fn factor_mod_p(f: &[Int], p: u64) -> Vec<(ModPoly, u32)> {
    let fp = mp_from_int(f, p);
    let d = mp_deg(&fp);
    assert!(d <= 4, "degree cap");
    assert!(fp[d] != 0, "leading coefficient divisible by p");
    // make monic
    let inv = pow_mod_u64(fp[d], p - 2, p);
    let monic: ModPoly = fp.iter().map(|&c| mul_mod_u64(c, inv, p)).collect();

    let mut remaining = monic;
    let mut factors: Vec<(ModPoly, u32)> = Vec::new();
    // peel linear factors with multiplicity
    loop {
        let roots = mp_roots(&squarefree_part_mod(&remaining, p), p);
        if roots.is_empty() {
            break;
        }
        for r in roots {
            let lin: ModPoly = vec![(p - r) % p, 1];
            let mut mult = 0u32;
            while mp_deg(&remaining) >= 1 && mp_rem(&remaining, &lin, p).len() == 1 && mp_rem(&remaining, &lin, p)[0] == 0 {
                remaining = mp_divide_exact(&remaining, &lin, p);
                mult += 1;
            }
            if mult > 0 {
                factors.push((lin, mult));
            }
        }
        break;
    }
    let dr = mp_deg(&remaining);
    match dr {
        0 => {}
        2 => factors.push((remaining.clone(), 1)),
        3 | 4 => {
            // no roots left; try splitting into two irreducible quadratics
            if dr == 4 {
                if let Some((a, b)) = split_quartic_into_quadratics(&remaining, p) {
                    if a == b {
                        factors.push((a, 2));
                    } else {
                        factors.push((a, 1));
                        factors.push((b, 1));
                    }
                } else {
                    factors.push((remaining.clone(), 1));
                }
            } else {
                factors.push((remaining.clone(), 1));
            }
        }
        _ => unreachable!("rootless part of degree 1"),
    }
    factors.sort_by(|x, y| (mp_deg(&x.0), &x.0).cmp(&(mp_deg(&y.0), &y.0)));
    factors
}

fn squarefree_part_mod(f: &[u64], p: u64) -> ModPoly {
    // f / gcd(f, f')
    let d = mp_deg(f);
    if d == 0 {
        return f.to_vec();
    }
    let mut fd = vec![0u64; d];
    for i in 1..=d {
        fd[i - 1] = mul_mod_u64(f[i], (i as u64) % p, p);
    }
    let fd = mp_trim(fd);
    if fd.len() == 1 && fd[0] == 0 {
        // derivative vanished (inseparable shape); fall back to f itself
        return f.to_vec();
    }
    let g = mp_gcd(f, &fd, p);
    if mp_deg(&g) == 0 {
        f.to_vec()
    } else {
        mp_divide_exact(f, &g, p)
    }
}

/// Try to write a rootless monic quartic mod p as a product of two monic
/// quadratics, via the distinct-degree gcd with x^(p^2) - x.
fn split_quartic_into_quadratics(f: &[u64], p: u64) -> Option<(ModPoly, ModPoly)> {
    if p == 2 {
        // four monic quadratics; try each
        for a in 0..2u64 {
            for b in 0..2u64 {
                let g: ModPoly = vec![b, a, 1];
                let r = mp_rem(f, &g, p);
                if mp_deg(&r) == 0 && r[0] == 0 {
                    let q = mp_divide_exact(f, &g, p);
                    return Some((g, q));
                }
            }
        }
        return None;
    }
    // repeated quadratic factor: f = g^2
    let sf = squarefree_part_mod(f, p);
    if mp_deg(&sf) == 2 {
        return Some((sf.clone(), sf));
    }
    let p2 = Int::from(p) * Int::from(p);
    let xq = mp_pow_x(&p2, f, p);
    let mut g = xq;
    if g.len() < 2 {
        g.resize(2, 0);
    }
    g[1] = (g[1] + p - 1) % p;
    let dd2 = mp_gcd(&g, f, p);
    if mp_deg(&dd2) != 4 {
        // not a product of quadratics (it is irreducible of degree 4)
        return None;
    }
    // split the two quadratics: gcd with (x+t)^((p^2-1)/2) - 1 computed in
    // F_p[x]/(f) needs F_p2 exponent; cheaper: enumerate monic quadratic
    // divisors deterministically via the resolvent of the factorization
    // f = (x^2+ax+b)(x^2+cx+d). Coefficient matching over F_p.
    let f4 = f;
    let (s1, s2, s3, s4) = (f4[3], f4[2], f4[1], f4[0]);
    for a in 0..p {
        let c = (p + s1 % p - a) % p;
        // b + d = s2 - a c; b d = s4; a d + b c = s3
        let bd_sum = (s2 + p * 2 - mul_mod_u64(a, c, p)) % p;
        // solve b, d: roots of z^2 - bd_sum z + s4, with linear condition
        let disc = (mul_mod_u64(bd_sum, bd_sum, p) + p - mul_mod_u64(4 % p, s4, p) % p) % p;
        let sq = sqrt_mod_p(disc, p)?;
        // Note: disc may be a nonresidue for this a; then try next a
        let sq = match sq {
            Some(s) => s,
            None => continue,
        };
        let inv2 = pow_mod_u64(2 % p, p - 2, p);
        for sgn in [0u64, 1] {
            let root = if sgn == 0 { sq } else { (p - sq) % p };
            let b = mul_mod_u64((bd_sum + root) % p, inv2, p);
            let d = (bd_sum + p - b) % p;
            if (mul_mod_u64(a, d, p) + mul_mod_u64(b, c, p)) % p == s3 % p
                && mul_mod_u64(b, d, p) == s4 % p
            {
                return Some((vec![b, a, 1], vec![d, c, 1]));
            }
        }
    }
    None
}

/// Square root mod odd prime p (Tonelli–Shanks). Outer Option is for the
/// p = 2 guard; inner Option is None when a is a nonresidue.
#[allow(clippy::option_option)]
fn sqrt_mod_p(a: u64, p: u64) -> Option<Option<u64>> {
    if p == 2 {
        return Some(Some(a % 2));
    }
    let a = a % p;
    if a == 0 {
        return Some(Some(0));
    }
    if pow_mod_u64(a, (p - 1) / 2, p) != 1 {
        return Some(None);
    }
    Some(Some(tonelli_shanks(a, p)))
}

pub fn tonelli_shanks(a: u64, p: u64) -> u64 {
    if p % 4 == 3 {
        return pow_mod_u64(a, (p + 1) / 4, p);
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    // find a nonresidue deterministically
    let mut z = 2u64;
    while pow_mod_u64(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod_u64(z, q, p);
    let mut t = pow_mod_u64(a, q, p);
    let mut r = pow_mod_u64(a, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod_u64(tt, tt, p);
            i += 1;
        }
        let b = pow_mod_u64(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod_u64(b, b, p);
        t = mul_mod_u64(t, c, p);
        r = mul_mod_u64(r, b, p);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn disc_of_quadratics_and_cubics() {
        // x^2 - 2: disc 8
        assert_eq!(discriminant(&ipoly(&[-2, 0, 1])), int(8));
        // x^3 - 3x - 1: disc 81
        assert_eq!(discriminant(&ipoly(&[-1, -3, 0, 1])), int(81));
        // x^4 + 10x^2 + 17: disc known to factor over 2 and 17
        let d = discriminant(&ipoly(&[17, 0, 10, 0, 1]));
        assert!((d.clone() % int(17)).is_zero() && d > int(0));
    }

    #[test]
    fn isolate_roots_of_cubic() {
        // x^3 - 3x - 1 has three real roots near -1.53, -0.35, 1.88
        let f = ipoly(&[-1, -3, 0, 1]);
        let roots = isolate_real_roots(&f);
        assert_eq!(roots.len(), 3);
        let approx: Vec<f64> = roots
            .iter()
            .map(|(a, b)| {
                let (a, b) = refine_root(&f, a, b, &(rat(1) / rat(1 << 20)));
                let mid = (&a + &b) / rat(2);
                mid.numer().to_string().parse::<f64>().unwrap() / mid.denom().to_string().parse::<f64>().unwrap()
            })
            .collect();
        assert!((approx[0] + 1.532088886).abs() < 1e-5);
        assert!((approx[1] + 0.347296355).abs() < 1e-5);
        assert!((approx[2] - 1.879385241).abs() < 1e-5);
    }

    #[test]
    fn integer_roots() {
        // (x-3)(x+5)(x-1) = x^3 + x^2 - 17x + 15
        let f = ipoly(&[15, -17, 1, 1]);
        let r = integer_roots_monic(&f);
        assert_eq!(r, vec![int(-5), int(1), int(3)]);
    }

    #[test]
    fn factor_mod_small() {
        // x^2 - 2 mod 17 splits: roots 6 and 11
        let f = ipoly(&[-2, 0, 1]);
        let fac = factor_mod_p(&f, 17);
        assert_eq!(fac.len(), 2);
        assert!(fac.iter().all(|(g, e)| mp_deg(g) == 1 && *e == 1));
        // x^2 - 2 mod 3 inert
        let fac = factor_mod_p(&f, 3);
        assert_eq!(fac.len(), 1);
        assert_eq!(mp_deg(&fac[0].0), 2);
        // x^2 - 2 mod 2 = x^2
        let fac = factor_mod_p(&f, 2);
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 2);
    }

    #[test]
    fn factor_mod_larger_prime_roots() {
        let f = ipoly(&[-2, 0, 1]);
        // 2 is a QR mod 7 (3^2=2), and mod 1009?
        let fac = factor_mod_p(&f, 7);
        assert_eq!(fac.len(), 2);
        for (g, _) in &fac {
            // verify root
            let r = (7 - g[0] % 7) % 7;
            assert_eq!((r * r) % 7, 2);
        }
        let fac = factor_mod_p(&f, 1009);
        let split = fac.len() == 2;
        let qr = pow_mod_u64(2, (1009 - 1) / 2, 1009) == 1;
        assert_eq!(split, qr);
    }

    #[test]
    fn resultant_matches_known() {
        // Res(x^2-2, x^2-3) = (2-3)^2 ... compute directly: product over roots
        // of f of g(root) = (2-3)(2-3)... g(±√2) = 2-3 = -1 -> product 1
        assert_eq!(resultant(&ipoly(&[-2, 0, 1]), &ipoly(&[-3, 0, 1])), int(1));
    }
}
