//! Galois classification of quartic CM fields and irreducible quartic
//! polynomials: C4, V4, or D4 (Weyl) for the CM case, with A4/S4 reported
//! honestly for non-CM inputs to the polynomial classifier.

use crate::arith::{int, is_square_int, Int, Rat};
use crate::error::{Error, Result};
use crate::poly::{degree, discriminant, integer_roots_monic, IntPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Galois group of the Galois closure of a quartic CM field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GaloisType {
    C4,
    V4,
    D4,
}

impl GaloisType {
    pub fn closure_degree(self) -> u32 {
        match self {
            GaloisType::C4 | GaloisType::V4 => 4,
            GaloisType::D4 => 8,
        }
    }

    /// A quartic CM field is Weyl exactly when its closure group is D4.
    pub fn is_weyl(self) -> bool {
        matches!(self, GaloisType::D4)
    }

    pub fn label(self) -> &'static str {
        match self {
            GaloisType::C4 => "C4",
            GaloisType::V4 => "V4",
            GaloisType::D4 => "D4",
        }
    }
}

/// Classification of a general irreducible quartic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticClass {
    Cm(GaloisType),
    A4,
    S4,
}

impl QuarticClass {
    pub fn label(self) -> &'static str {
        match self {
            QuarticClass::Cm(t) => t.label(),
            QuarticClass::A4 => "A4",
            QuarticClass::S4 => "S4",
        }
    }
}

/// Classify E = Q(sqrt(a + b sqrt d)) for totally negative delta = a + b sqrt d
/// over the real quadratic field of squarefree d > 1.
///
/// With N = a^2 - b^2 d: V4 when b = 0 or N is a rational square, C4 when
/// N d is a rational square, D4 otherwise.
pub fn classify_quartic_cm(d: i64, a: &Rat, b: &Rat) -> Result<GaloisType> {
    if d <= 1 {
        return Err(Error::InvalidInput("d must be a squarefree integer > 1".into()));
    }
    // totally negative: a < 0 and a^2 > b^2 d
    let di = Rat::from_integer(int(d));
    let n = a * a - b * b * &di;
    if !(a.is_negative() && n.is_positive()) {
        return Err(Error::InvalidInput(
            "delta = a + b sqrt(d) must be totally negative".into(),
        ));
    }
    if b.is_zero() {
        return Ok(GaloisType::V4);
    }
    // scale by the square of the common denominator; N scales by a 4th power
    let n_scaled = {
        let den = a.denom().lcm(b.denom());
        let d4 = num_traits::pow::pow(den, 4);
        (&n * Rat::from_integer(d4)).to_integer()
    };
    if is_square_int(&n_scaled) {
        Ok(GaloisType::V4)
    } else if is_square_int(&(&n_scaled * int(d))) {
        Ok(GaloisType::C4)
    } else {
        Ok(GaloisType::D4)
    }
}

/// Resolvent cubic of x^4 + p x^3 + q x^2 + r x + s, with roots
/// x1 x2 + x3 x4 and its two companions.
pub fn resolvent_cubic(f: &[Int]) -> IntPoly {
    let (s, r, q, p) = (&f[0], &f[1], &f[2], &f[3]);
    vec![
        -(p * p * s - int(4) * q * s + r * r),
        p * r - int(4) * s,
        -q.clone(),
        Int::one(),
    ]
}

/// Is x a square in Q(sqrt D) for rational integer x and nonsquare D?
fn is_square_in_quad(x: &Int, d_disc: &Int) -> bool {
    if x.is_zero() {
        return true;
    }
    is_square_int(x) || is_square_int(&(x * d_disc))
}

/// Exact irreducibility test for a monic integer quartic.
pub fn quartic_is_irreducible(f: &[Int]) -> Result<bool> {
    if degree(f) != Some(4) || !f[4].is_one() {
        return Err(Error::InvalidInput("expected a monic quartic".into()));
    }
    if f[0].is_zero() {
        return Ok(false);
    }
    if !integer_roots_monic(f).is_empty() {
        return Ok(false);
    }
    // monic quadratic factor (x^2+ux+v)(x^2+wx+z) with v z = f0 over Z
    let s = f[0].clone();
    let divisors = all_divisors(&s.abs())
        .ok_or_else(|| Error::WorkloadExceeded("constant term too large to factor".into()))?;
    for v in &divisors {
        for v_sign in [1i64, -1] {
            let v = v * int(v_sign);
            if v.is_zero() {
                continue;
            }
            let z = &s / &v;
            // u + w = f3; u w = f2 - v - z; u z + v w = f1
            let sum = f[3].clone();
            let prod = &f[2] - &v - &z;
            let disc = &sum * &sum - int(4) * &prod;
            if disc.is_negative() {
                continue;
            }
            if let Some(root) = crate::arith::int_sqrt_exact(&disc) {
                for sgn in [1i64, -1] {
                    let two_u = &sum + int(sgn) * &root;
                    if two_u.is_even() {
                        let u = two_u / int(2);
                        let w = &sum - &u;
                        if &u * &z + &v * &w == f[1] {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

fn all_divisors(n: &Int) -> Option<Vec<Int>> {
    let fac = crate::arith::factor_trial(n, 10_000_000)?;
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
    divs.sort();
    divs.dedup();
    Some(divs)
}

/// Classify the Galois group of an irreducible monic integer quartic by the
/// resolvent-cubic decision tree.
pub fn classify_quartic_poly(f: &[Int]) -> Result<QuarticClass> {
    if !quartic_is_irreducible(f)? {
        return Err(Error::Reducible("quartic factors over Q".into()));
    }
    let r3 = resolvent_cubic(f);
    let disc = discriminant(f);
    debug_assert!(!disc.is_zero());
    let roots = integer_roots_monic(&r3);
    match roots.len() {
        0 => {
            if is_square_int(&disc) {
                Ok(QuarticClass::A4)
            } else {
                Ok(QuarticClass::S4)
            }
        }
        3 => Ok(QuarticClass::Cm(GaloisType::V4)),
        1 => {
            let beta = &roots[0];
            let (s, q, p) = (&f[0], &f[2], &f[3]);
            let d1 = beta * beta - int(4) * s;
            let d2 = p * p - int(4) * (q - beta);
            let cyclic = is_square_in_quad(&d1, &disc) && is_square_in_quad(&d2, &disc);
            if cyclic {
                Ok(QuarticClass::Cm(GaloisType::C4))
            } else {
                Ok(QuarticClass::Cm(GaloisType::D4))
            }
        }
        _ => unreachable!("separable cubic has 0, 1, or 3 rational roots"),
    }
}

/// Order of the Weyl group W_2g: 2^g g!.
pub fn weyl_group_order(g: u32) -> Int {
    assert!(g >= 1);
    let mut out = Int::one() << g as usize;
    for k in 2..=g {
        out *= int(k as i64);
    }
    out
}

/// Degree of the reflex field of a quartic CM field, by Galois type of the
/// closure: the orbit size of a CM type under the closure group.
pub fn reflex_degree_quartic(t: GaloisType) -> u32 {
    match t {
        GaloisType::D4 | GaloisType::C4 => 4,
        GaloisType::V4 => 2,
    }
}

/// Minimal polynomial of sqrt(a + b sqrt d): x^4 - 2 a x^2 + (a^2 - b^2 d),
/// for integral a, b.
pub fn quartic_min_poly(d: i64, a: &Int, b: &Int) -> IntPoly {
    vec![
        a * a - b * b * int(d),
        Int::zero(),
        int(-2) * a,
        Int::zero(),
        Int::one(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::poly::{factor_mod_p, ipoly, mp_deg};

    /// Independent oracle: factorization fingerprints mod many primes.
    /// Frobenius cycle types separate the five possible groups:
    /// type (1,3) occurs only for A4/S4; (1,1,2) only for S4/D4;
    /// (4) only for C4/D4/S4. V4 sees only (1,1,1,1) and (2,2).
    fn fingerprint_classify(f: &[Int], n_primes: usize) -> QuarticClass {
        let disc = discriminant(f);
        let mut saw_112 = false;
        let mut saw_4 = false;
        let mut saw_13 = false;
        let mut p = 2u64;
        let mut used = 0;
        while used < n_primes {
            p += 1;
            if !crate::arith::is_prime_u64(p) {
                continue;
            }
            if (&disc % int(p as i64)).is_zero() {
                continue;
            }
            used += 1;
            let fac = factor_mod_p(f, p);
            let mut degs: Vec<usize> = fac
                .iter()
                .flat_map(|(g, e)| std::iter::repeat(mp_deg(g)).take(*e as usize))
                .collect();
            degs.sort_unstable();
            match degs.as_slice() {
                [1, 1, 2] => saw_112 = true,
                [4] => saw_4 = true,
                [1, 3] => saw_13 = true,
                _ => {}
            }
        }
        let disc_square = is_square_int(&disc);
        if saw_13 {
            return if disc_square { QuarticClass::A4 } else { QuarticClass::S4 };
        }
        if saw_112 {
            return QuarticClass::Cm(GaloisType::D4);
        }
        if saw_4 {
            return QuarticClass::Cm(GaloisType::C4);
        }
        QuarticClass::Cm(GaloisType::V4)
    }

    #[test]
    fn known_examples() {
        // zeta_5: x^4+x^3+x^2+x+1 is cyclic
        assert_eq!(
            classify_quartic_poly(&ipoly(&[1, 1, 1, 1, 1])).unwrap(),
            QuarticClass::Cm(GaloisType::C4)
        );
        // zeta_8: x^4+1 is biquadratic
        assert_eq!(
            classify_quartic_poly(&ipoly(&[1, 0, 0, 0, 1])).unwrap(),
            QuarticClass::Cm(GaloisType::V4)
        );
        // sqrt(-5-2 sqrt 2): x^4+10x^2+17 is dihedral
        assert_eq!(
            classify_quartic_poly(&ipoly(&[17, 0, 10, 0, 1])).unwrap(),
            QuarticClass::Cm(GaloisType::D4)
        );
        // generic: x^4 - x - 1 is S4
        assert_eq!(classify_quartic_poly(&ipoly(&[-1, -1, 0, 0, 1])).unwrap(), QuarticClass::S4);
        // x^4 + 8x + 12 is a classical A4 quartic
        assert_eq!(classify_quartic_poly(&ipoly(&[12, 8, 0, 0, 1])).unwrap(), QuarticClass::A4);
    }

    #[test]
    fn cm_criterion_examples() {
        // d = 2, delta = -5 - 2 sqrt 2: N = 17 -> D4
        assert_eq!(
            classify_quartic_cm(2, &rat(-5), &rat(-2)).unwrap(),
            GaloisType::D4
        );
        // d = 5, delta = -5 + sqrt 5: N = 20, N d = 100 -> C4
        assert_eq!(
            classify_quartic_cm(5, &rat(-5), &rat(1)).unwrap(),
            GaloisType::C4
        );
        // d = 3, delta = -1 (b = 0) -> V4
        assert_eq!(
            classify_quartic_cm(3, &rat(-1), &rat(0)).unwrap(),
            GaloisType::V4
        );
    }

    #[test]
    fn criterion_agrees_with_resolvent_on_randoms() {
        let mut seed = 42u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (seed >> 33) as i64
        };
        let ds = [2i64, 3, 5, 6, 7, 10, 11, 13];
        let mut checked = 0;
        while checked < 500 {
            let d = ds[(next().unsigned_abs() % ds.len() as u64) as usize];
            let a = -(next().unsigned_abs() as i64 % 60) - 1;
            let b = (next() % 15) * if next() % 2 == 0 { 1 } else { -1 };
            let a = Int::from(a);
            let b = Int::from(b);
            // need totally negative: a < 0, a^2 > b^2 d
            if &a * &a <= &b * &b * int(d) {
                continue;
            }
            let f = quartic_min_poly(d, &a, &b);
            if !quartic_is_irreducible(&f).unwrap() {
                continue;
            }
            let lhs = classify_quartic_cm(
                d,
                &Rat::from_integer(a.clone()),
                &Rat::from_integer(b.clone()),
            )
            .unwrap();
            let rhs = classify_quartic_poly(&f).unwrap();
            assert_eq!(QuarticClass::Cm(lhs), rhs, "d={d} a={a} b={b}");
            checked += 1;
        }
    }

    #[test]
    fn resolvent_agrees_with_fingerprint_oracle() {
        // random quartics, including non-CM ones
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 21) as i64 - 10
        };
        let mut checked = 0;
        while checked < 120 {
            let f = ipoly(&[next(), next(), next(), next(), 1]);
            if degree(&f) != Some(4) || discriminant(&f).is_zero() {
                continue;
            }
            if !quartic_is_irreducible(&f).unwrap() {
                continue;
            }
            let a = classify_quartic_poly(&f).unwrap();
            let b = fingerprint_classify(&f, 160);
            assert_eq!(a, b, "f = {f:?}");
            checked += 1;
        }
    }

    #[test]
    fn scale_invariance() {
        for c in [2i64, 3, 5, 7] {
            let c2 = rat(c * c);
            let base = classify_quartic_cm(2, &rat(-5), &rat(-2)).unwrap();
            let scaled = classify_quartic_cm(2, &(rat(-5) * &c2), &(rat(-2) * &c2)).unwrap();
            assert_eq!(base, scaled);
        }
        // rational (non-integer) scaling too
        let scaled = classify_quartic_cm(
            2,
            &(rat(-5) * crate::arith::ratio(1, 4)),
            &(rat(-2) * crate::arith::ratio(1, 4)),
        )
        .unwrap();
        assert_eq!(scaled, GaloisType::D4);
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_group_order(1), int(2));
        assert_eq!(weyl_group_order(2), int(8));
        assert_eq!(weyl_group_order(3), int(48));
    }

    /// Orbit brute force in the explicit permutation models: the four CM
    /// types are selections of one root from each conjugate pair {0,1},{2,3}.
    fn orbit_size(group: &[[usize; 4]]) -> usize {
        let types: Vec<[usize; 2]> = vec![[0, 2], [0, 3], [1, 2], [1, 3]];
        let canon = |mut t: [usize; 2]| {
            t.sort_unstable();
            t
        };
        let start = canon([0, 2]);
        let mut orbit = vec![start];
        let mut frontier = vec![start];
        while let Some(t) = frontier.pop() {
            for g in group {
                let img = canon([g[t[0]], g[t[1]]]);
                // pair-preserving permutations send CM types to CM types
                assert!(types.contains(&img));
                if !orbit.contains(&img) {
                    orbit.push(img);
                    frontier.push(img);
                }
            }
        }
        orbit.len()
    }

    #[test]
    fn reflex_degrees_match_orbit_brute_force() {
        // C4 generated by (0 2 1 3)
        let mut c4 = vec![[0usize, 1, 2, 3]];
        let gen = [2usize, 3, 1, 0]; // 0->2, 1->3, 2->1, 3->0
        let mut g = gen;
        for _ in 0..3 {
            c4.push(g);
            g = [gen[g[0]], gen[g[1]], gen[g[2]], gen[g[3]]];
        }
        assert_eq!(orbit_size(&c4), reflex_degree_quartic(GaloisType::C4) as usize);

        // V4 = {e, (01)(23), (02)(13), (03)(12)}
        let v4 = vec![
            [0usize, 1, 2, 3],
            [1, 0, 3, 2],
            [2, 3, 0, 1],
            [3, 2, 1, 0],
        ];
        assert_eq!(orbit_size(&v4), reflex_degree_quartic(GaloisType::V4) as usize);

        // D4: all pair-preserving permutations (8 elements)
        let mut d4 = Vec::new();
        for swap_pairs in [false, true] {
            for flip1 in [false, true] {
                for flip2 in [false, true] {
                    let mut perm = [0usize; 4];
                    for (i, x) in perm.iter_mut().enumerate() {
                        let pair = i / 2;
                        let pos = i % 2;
                        let new_pair = if swap_pairs { 1 - pair } else { pair };
                        let flip = if new_pair == 0 { flip1 } else { flip2 };
                        let new_pos = if flip { 1 - pos } else { pos };
                        *x = 2 * new_pair + new_pos;
                    }
                    d4.push(perm);
                }
            }
        }
        assert_eq!(d4.len(), 8);
        assert_eq!(orbit_size(&d4), reflex_degree_quartic(GaloisType::D4) as usize);
    }
}
