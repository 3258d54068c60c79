//! Fractional-ideal arithmetic in the ring of integers of a totally real
//! field: Hermite normal form lattices, products and inverses, norms,
//! Kummer–Dedekind factorization of rational primes, valuations, residue
//! fields, and splitting behavior in quadratic extensions.

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};
use crate::lattice::{self, Mat};
use crate::nfield::{Field, FieldElement};
use crate::poly::{self, ModPoly};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A nonzero fractional ideal, stored as (1/denom) times the row span of an
/// upper-triangular HNF matrix whose rows are coordinates over the integral
/// basis.
#[derive(Clone, Debug)]
pub struct FractionalIdeal {
    pub hnf: Mat,
    pub denom: Int,
    pub field: Field,
}

impl PartialEq for FractionalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.hnf == other.hnf && self.denom == other.denom
    }
}
impl Eq for FractionalIdeal {}

impl FractionalIdeal {
    pub fn unit_ideal(field: &Field) -> Self {
        FractionalIdeal {
            hnf: lattice::identity(field.degree()),
            denom: Int::one(),
            field: field.clone(),
        }
    }

    fn normalize(mut self) -> Self {
        let mut g = self.denom.clone();
        for row in &self.hnf {
            for c in row {
                g = g.gcd(c);
                if g.is_one() {
                    return self;
                }
            }
        }
        if !g.is_one() && !g.is_zero() {
            for row in self.hnf.iter_mut() {
                for c in row.iter_mut() {
                    *c = &*c / &g;
                }
            }
            self.denom /= &g;
        }
        self
    }

    /// Ideal generated (as an O_F-module) by the given nonzero elements.
    pub fn from_generators(field: &Field, gens: &[FieldElement]) -> Result<Self> {
        let n = field.degree();
        if gens.iter().all(|g| g.is_zero()) {
            return Err(Error::ZeroIdeal);
        }
        let mut den = Int::one();
        let mut products: Vec<Vec<Rat>> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            for k in 0..n {
                let bk = FieldElement::from_coords(
                    field,
                    (0..n)
                        .map(|j| if j == k { Rat::one() } else { Rat::zero() })
                        .collect(),
                );
                let prod = g.mul(&bk);
                for c in &prod.coords {
                    den = den.lcm(c.denom());
                }
                products.push(prod.coords);
            }
        }
        let rows: Mat = products
            .iter()
            .map(|coords| {
                coords
                    .iter()
                    .map(|c| {
                        let scaled = c * Rat::from_integer(den.clone());
                        scaled.to_integer()
                    })
                    .collect()
            })
            .collect();
        let hnf = lattice::hnf_square(rows, n).ok_or(Error::ZeroIdeal)?;
        Ok(FractionalIdeal {
            hnf,
            denom: den,
            field: field.clone(),
        }
        .normalize())
    }

    pub fn principal(x: &FieldElement) -> Result<Self> {
        Self::from_generators(&x.field, std::slice::from_ref(x))
    }

    /// The Z-basis of the ideal as field elements.
    pub fn basis_elements(&self) -> Vec<FieldElement> {
        let d = Rat::from_integer(self.denom.clone());
        self.hnf
            .iter()
            .map(|row| {
                FieldElement::from_coords(
                    &self.field,
                    row.iter().map(|c| Rat::from_integer(c.clone()) / &d).collect(),
                )
            })
            .collect()
    }

    pub fn contains(&self, x: &FieldElement) -> bool {
        let scaled: Vec<Rat> = x
            .coords
            .iter()
            .map(|c| c * Rat::from_integer(self.denom.clone()))
            .collect();
        if scaled.iter().any(|c| !c.is_integer()) {
            return false;
        }
        let v: Vec<Int> = scaled.into_iter().map(|c| c.to_integer()).collect();
        lattice::solve_upper_triangular(&self.hnf, &v).is_some()
    }

    pub fn is_integral(&self) -> bool {
        self.denom.is_one()
    }

    pub fn norm(&self) -> Rat {
        let d = lattice::det_triangular(&self.hnf);
        let mut den = Int::one();
        for _ in 0..self.field.degree() {
            den *= &self.denom;
        }
        Rat::new(d, den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = self.basis_elements();
        let b = other.basis_elements();
        let mut gens = Vec::with_capacity(a.len() * b.len());
        for x in &a {
            for y in &b {
                gens.push(x.mul(y));
            }
        }
        Self::from_generators(&self.field, &gens).expect("product of nonzero ideals")
    }

    pub fn pow(&self, e: i64) -> Self {
        if e == 0 {
            return Self::unit_ideal(&self.field);
        }
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::unit_ideal(&self.field);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        acc
    }

    /// Inverse via the colon lattice (O : I).
    pub fn inv(&self) -> Self {
        let n = self.field.degree();
        let det = lattice::det_triangular(&self.hnf);
        // x in (O:I) with x = (denom/det) y, y integral coords:
        // y * M_j = 0 mod det for every multiplication matrix M_j of the
        // (integer) rows of hnf.
        let mut stacked: Mat = vec![Vec::new(); n];
        for row in &self.hnf {
            let g = FieldElement::from_coords(
                &self.field,
                row.iter().map(|c| Rat::from_integer(c.clone())).collect(),
            );
            let m = g.rep_matrix(); // integral entries since g is integral
            for i in 0..n {
                for mij in &m[i] {
                    debug_assert!(mij.is_integer());
                    stacked[i].push(mij.to_integer());
                }
            }
        }
        let y_basis = lattice::kernel_mod(&stacked, &det);
        // ideal = (denom/det) * span(y_basis) = (1/det) * span(denom * y)
        let rows: Mat = y_basis
            .iter()
            .map(|r| r.iter().map(|c| c * &self.denom).collect())
            .collect();
        let hnf = lattice::hnf_square(rows, n).expect("inverse lattice has full rank");
        FractionalIdeal {
            hnf,
            denom: det.abs(),
            field: self.field.clone(),
        }
        .normalize()
    }

    /// Ideal sum I + J.
    pub fn sum(&self, other: &Self) -> Self {
        let n = self.field.degree();
        let den = self.denom.lcm(&other.denom);
        let s1 = &den / &self.denom;
        let s2 = &den / &other.denom;
        let mut rows: Mat = Vec::with_capacity(2 * n);
        for r in &self.hnf {
            rows.push(r.iter().map(|c| c * &s1).collect());
        }
        for r in &other.hnf {
            rows.push(r.iter().map(|c| c * &s2).collect());
        }
        let hnf = lattice::hnf_square(rows, n).expect("sum of nonzero ideals");
        FractionalIdeal {
            hnf,
            denom: den,
            field: self.field.clone(),
        }
        .normalize()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.denom.is_one() && self.hnf == lattice::identity(self.field.degree())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.sum(other).is_unit_ideal()
    }

    /// Scale by a rational number q (the ideal q * I).
    pub fn scale_rat(&self, q: &Rat) -> Self {
        let rows: Mat = self
            .hnf
            .iter()
            .map(|r| r.iter().map(|c| c * q.numer()).collect())
            .collect();
        FractionalIdeal {
            hnf: rows,
            denom: &self.denom * q.denom(),
            field: self.field.clone(),
        }
        .normalize()
    }
}

pub fn v_p_int(n: &Int, p: u64) -> u32 {
    let p = Int::from(p);
    let mut m = n.clone();
    let mut v = 0;
    while !m.is_zero() && (&m % &p).is_zero() {
        m /= &p;
        v += 1;
    }
    v
}

/// A prime ideal with its Kummer–Dedekind data.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    pub ideal: FractionalIdeal,
    pub p: u64,
    pub residue_deg: u32,
    pub ram_index: u32,
    /// Monic factor g of the minimal polynomial mod p; (p, g(theta)) is a
    /// two-element generating set.
    pub two_elt_poly: ModPoly,
}

impl PartialEq for PrimeIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.ideal == other.ideal
    }
}
impl Eq for PrimeIdeal {}

impl PrimeIdeal {
    pub fn norm(&self) -> Int {
        num_traits::pow::pow(Int::from(self.p), self.residue_deg as usize)
    }

    /// The element g(theta) of the two-element representation.
    pub fn beta(&self) -> FieldElement {
        let field = &self.ideal.field;
        let pc: Vec<Rat> = self
            .two_elt_poly
            .iter()
            .map(|&c| Rat::from_integer(Int::from(c)))
            .collect();
        FieldElement::from_power_coords(field, pc)
    }

    /// An element with valuation exactly 1 at this prime and valuation 0 at
    /// every other prime above p.
    pub fn uniformizer(&self) -> FieldElement {
        let field = &self.ideal.field;
        let beta = self.beta();
        let pi_candidates = {
            let mut v = vec![beta.clone()];
            let p_el = FieldElement::from_rational(field, Rat::from_integer(Int::from(self.p)));
            v.push(beta.add(&p_el));
            v
        };
        for c in pi_candidates {
            if !c.is_zero() && self.valuation_element(&c) == 1 {
                return c;
            }
        }
        // fall back: scan basis elements of P not in P^2, correcting the
        // sibling valuations with beta
        let p2 = self.ideal.mul(&self.ideal);
        for b in self.ideal.basis_elements() {
            if !p2.contains(&b) {
                // b has v_P = 1; kill sibling contamination by adding a large
                // multiple of beta + p if needed;, valuations at siblings of b
                // may be positive, so take b + p * t for small t
                for t in 0..4i64 {
                    let cand = b.add(
                        &FieldElement::from_rational(
                            &self.ideal.field,
                            Rat::from_integer(Int::from(self.p) * Int::from(t)),
                        ),
                    );
                    if !cand.is_zero() && self.valuation_element(&cand) == 1 && sibling_valuations_zero(self, &cand) {
                        return cand;
                    }
                }
            }
        }
        panic!("no uniformizer found (should be unreachable)");
    }

    /// Valuation of a nonzero integral element (assumes x integral).
    fn valuation_element(&self, x: &FieldElement) -> i64 {
        debug_assert!(!x.is_zero());
        let mut v = 0i64;
        let mut pk = self.ideal.clone();
        loop {
            if !pk.contains(x) {
                return v;
            }
            v += 1;
            pk = pk.mul(&self.ideal);
        }
    }

    /// Valuation of an arbitrary nonzero element.
    pub fn valuation(&self, x: &FieldElement) -> i64 {
        assert!(!x.is_zero());
        let d = x.denominator();
        let xd = x.scale(&Rat::from_integer(d.clone()));
        let vd = v_p_int(&d, self.p) as i64 * self.ram_index as i64;
        self.valuation_element(&xd) - vd
    }

    /// Valuation of a nonzero fractional ideal.
    pub fn valuation_ideal(&self, i: &FractionalIdeal) -> i64 {
        let vden = v_p_int(&i.denom, self.p) as i64 * self.ram_index as i64;
        let mut v = i64::MAX;
        for b in i.basis_elements() {
            if b.is_zero() {
                continue;
            }
            v = v.min(self.valuation(&b));
            if v == -vden {
                break;
            }
        }
        v
    }

    /// Reduce a p-integral element (denominator coprime to p) in the residue
    /// field F_p[t]/(g). Returns None if the denominator is not invertible
    /// mod p.
    pub fn reduce(&self, x: &FieldElement) -> Option<ModPoly> {
        let p = self.p;
        let pc = x.power_coords();
        let mut den = Int::one();
        for c in &pc {
            den = den.lcm(c.denom());
        }
        if (&den % Int::from(p)).is_zero() {
            return None;
        }
        let den_mod = u64::try_from(&den.mod_floor(&Int::from(p))).unwrap();
        let den_inv = crate::arith::pow_mod_u64(den_mod, p - 2, p);
        let ints: Vec<u64> = pc
            .iter()
            .map(|c| {
                let scaled = c * Rat::from_integer(den.clone());
                let m = scaled.to_integer().mod_floor(&Int::from(p));
                crate::arith::mul_mod_u64(u64::try_from(&m).unwrap(), den_inv, p)
            })
            .collect();
        Some(poly::mp_rem(&poly::mp_trim(ints), &self.two_elt_poly, p))
    }

    /// Is the reduction of x a square in the residue field? None when x is
    /// not a p-integral unit at this prime.
    pub fn residue_is_square(&self, x: &FieldElement) -> Option<bool> {
        let r = self.reduce(x)?;
        if r.len() == 1 && r[0] == 0 {
            return None;
        }
        if self.p == 2 {
            // Frobenius is surjective on F_{2^f}
            return Some(true);
        }
        // r^((q-1)/2) in F_p[t]/(g)
        let q_minus_1_half = (num_traits::pow::pow(Int::from(self.p), self.residue_deg as usize)
            - Int::one())
            / Int::from(2);
        let res = mod_poly_pow(&r, &q_minus_1_half, &self.two_elt_poly, self.p);
        Some(res.len() == 1 && res[0] == 1)
    }
}

fn sibling_valuations_zero(pr: &PrimeIdeal, x: &FieldElement) -> bool {
    let field = &pr.ideal.field;
    match factor_rational_prime(field, pr.p) {
        Ok(fac) => fac
            .iter()
            .filter(|(q, _)| q != pr)
            .all(|(q, _)| q.valuation_element(x) == 0),
        Err(_) => true,
    }
}

fn mod_poly_pow(base: &[u64], e: &Int, m: &[u64], p: u64) -> ModPoly {
    let mut acc: ModPoly = vec![1];
    let bits = e.bits();
    for i in (0..bits).rev() {
        acc = poly::mp_rem(&poly::mp_mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = poly::mp_rem(&poly::mp_mul(&acc, base, p), m, p);
        }
    }
    acc
}

/// Kummer–Dedekind factorization of a rational prime p in O_F. Requires
/// p coprime to the index [O_F : Z[theta]].
pub fn factor_rational_prime(field: &Field, p: u64) -> Result<Vec<(PrimeIdeal, u32)>> {
    if !crate::arith::is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if (field.index() % Int::from(p)).is_zero() {
        return Err(Error::IndexDivisor(p));
    }
    let fac = poly::factor_mod_p(field.min_poly(), p);
    let mut out = Vec::new();
    let p_el = FieldElement::from_rational(field, Rat::from_integer(Int::from(p)));
    for (g, e) in fac {
        let beta = {
            let pc: Vec<Rat> = g.iter().map(|&c| Rat::from_integer(Int::from(c))).collect();
            FieldElement::from_power_coords(field, pc)
        };
        let ideal = FractionalIdeal::from_generators(field, &[p_el.clone(), beta])?;
        out.push((
            PrimeIdeal {
                ideal,
                p,
                residue_deg: poly::mp_deg(&g) as u32,
                ram_index: e,
                two_elt_poly: g,
            },
            e,
        ));
    }
    // deterministic order: by residue degree, then by the factor polynomial
    out.sort_by(|a, b| {
        (a.0.residue_deg, &a.0.two_elt_poly).cmp(&(b.0.residue_deg, &b.0.two_elt_poly))
    });
    debug_assert_eq!(
        out.iter().map(|(q, e)| q.residue_deg * e).sum::<u32>() as usize,
        field.degree()
    );
    Ok(out)
}

/// Splitting behavior of a prime of F in the quadratic extension F(sqrt(delta)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

/// Decide how a prime ideal behaves in E = F(sqrt(delta)).
pub fn splitting_in_quadratic_ext(pr: &PrimeIdeal, delta: &FieldElement) -> Result<Splitting> {
    if delta.is_zero() {
        return Err(Error::ZeroElement);
    }
    if delta.field.degree() == 2 {
        if crate::nfield::is_square(delta, 1 << 20)?.is_some() {
            return Err(Error::DeltaSquare);
        }
    }
    let v = pr.valuation(delta);
    if v.rem_euclid(2) == 1 {
        return Ok(Splitting::Ramified);
    }
    // normalize to a unit at pr, keeping denominators coprime to p
    let delta_star = normalize_unit_part(pr, delta, v);
    if pr.p != 2 {
        match pr.residue_is_square(&delta_star) {
            Some(true) => Ok(Splitting::Split),
            Some(false) => Ok(Splitting::Inert),
            None => Err(Error::NotCoprime),
        }
    } else {
        let e2 = pr.ram_index as i64; // v_P(2) for p = 2
        let t = deepest_square_level(pr, &delta_star, 2 * e2 + 1);
        if t >= 2 * e2 + 1 {
            Ok(Splitting::Split)
        } else if t == 2 * e2 {
            Ok(Splitting::Inert)
        } else {
            Ok(Splitting::Ramified)
        }
    }
}

/// delta / pi^v times a square integer, integral and a unit at pr, with the
/// same square class locally.
pub(crate) fn normalize_unit_part(pr: &PrimeIdeal, delta: &FieldElement, v: i64) -> FieldElement {
    let mut x = delta.clone();
    if v != 0 {
        let pi = pr.uniformizer();
        let piv = pi.pow(-v).expect("uniformizer is invertible");
        x = x.mul(&piv);
    }
    // clear denominators by a square (does not change the square class)
    let d = x.denominator();
    if !d.is_one() {
        x = x.scale(&Rat::from_integer(&d * &d));
    }
    x
}

/// Largest t <= cap such that x^2 = u is solvable mod P^t (u an integral
/// unit at P); returns cap + 1 when solvable at the cap itself would still
/// hold... (capped search: returns values in 0..=cap).
pub(crate) fn deepest_square_level(pr: &PrimeIdeal, u: &FieldElement, cap: i64) -> i64 {
    let mut t_max = 0i64;
    let mut pt = pr.ideal.clone();
    for t in 1..=cap {
        if square_solvable_mod(pr, u, &pt) {
            t_max = t;
        } else {
            return t_max;
        }
        if t < cap {
            pt = pt.mul(&pr.ideal);
        }
    }
    t_max
}

/// Does c^2 = u (mod lattice) have a solution? Brute enumeration of residue
/// representatives; the residue ring sizes that occur here are tiny.
fn square_solvable_mod(pr: &PrimeIdeal, u: &FieldElement, modulus: &FractionalIdeal) -> bool {
    let field = &pr.ideal.field;
    let n = field.degree();
    debug_assert!(modulus.is_integral());
    let diag: Vec<Int> = (0..n).map(|i| modulus.hnf[i][i].clone()).collect();
    let count: u64 = diag
        .iter()
        .map(|d| d.to_u64().expect("residue ring too large"))
        .product();
    assert!(count <= 1 << 22, "residue ring too large for enumeration");
    let mut idx = vec![Int::zero(); n];
    loop {
        // candidate element with coords idx
        let c = FieldElement::from_coords(
            field,
            idx.iter().map(|c| Rat::from_integer(c.clone())).collect(),
        );
        let diff = c.mul(&c).sub(u);
        if diff.is_zero() || modulus.contains(&diff) {
            return true;
        }
        // increment mixed-radix counter
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            idx[i] += 1;
            if idx[i] < diag[i] {
                break;
            }
            idx[i] = Int::zero();
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::nfield::{real_quadratic, FieldElement};

    fn el(f: &Field, a: i64, b: i64) -> FieldElement {
        FieldElement::from_power_coords(f, vec![rat(a), rat(b)])
    }

    #[test]
    fn factor_17_splits_in_sqrt2() {
        let f = real_quadratic(2).unwrap();
        let fac = factor_rational_prime(&f, 17).unwrap();
        assert_eq!(fac.len(), 2);
        for (q, e) in &fac {
            assert_eq!(*e, 1);
            assert_eq!(q.residue_deg, 1);
            assert_eq!(q.norm(), int(17));
        }
    }

    #[test]
    fn factor_2_ramifies_in_sqrt2() {
        let f = real_quadratic(2).unwrap();
        let fac = factor_rational_prime(&f, 2).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].1, 2);
        assert_eq!(fac[0].0.ram_index, 2);
        assert_eq!(fac[0].0.residue_deg, 1);
    }

    #[test]
    fn factor_3_inert_in_sqrt2() {
        let f = real_quadratic(2).unwrap();
        let fac = factor_rational_prime(&f, 3).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0.residue_deg, 2);
        assert_eq!(fac[0].0.ram_index, 1);
    }

    #[test]
    fn product_of_primes_is_p() {
        let f = real_quadratic(2).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13, 17] {
            let fac = factor_rational_prime(&f, p).unwrap();
            let mut prod = FractionalIdeal::unit_ideal(&f);
            for (q, e) in &fac {
                prod = prod.mul(&q.ideal.pow(*e as i64));
            }
            let p_el = FieldElement::from_rational(&f, rat(p as i64));
            let p_ideal = FractionalIdeal::principal(&p_el).unwrap();
            assert_eq!(prod, p_ideal, "p = {p}");
        }
    }

    #[test]
    fn inverse_of_paper_conductor() {
        // inv(<-5-2 sqrt 2>) must contain 1 and (6 + sqrt 2)/17 as a Z-basis
        let f = real_quadratic(2).unwrap();
        let d = el(&f, -5, -2);
        let i = FractionalIdeal::principal(&d).unwrap();
        let inv = i.inv();
        assert!(inv.contains(&FieldElement::one(&f)));
        let z = el(&f, 6, 1).scale(&Rat::new(int(1), int(17)));
        assert!(inv.contains(&z));
        // norms: N(I) = 17, N(I^-1) = 1/17
        assert_eq!(i.norm(), rat(17));
        assert_eq!(inv.norm(), Rat::new(int(1), int(17)));
        assert!(i.mul(&inv).is_unit_ideal());
        // the basis {1, (6+sqrt2)/17} spans exactly inv
        let g = FractionalIdeal::from_generators(&f, &[FieldElement::one(&f), z]).unwrap();
        assert_eq!(g, inv);
    }

    #[test]
    fn mul_by_unit_ideal_is_identity() {
        let f = real_quadratic(2).unwrap();
        let i = FractionalIdeal::principal(&el(&f, 3, 1)).unwrap();
        let o = FractionalIdeal::unit_ideal(&f);
        assert_eq!(i.mul(&o), i);
    }

    #[test]
    fn norm_multiplicative_random() {
        let f = real_quadratic(5).unwrap();
        let mut seed = 7u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 19) as i64 - 9
        };
        for _ in 0..50 {
            let (a, b, c, d) = (next(), next(), next(), next());
            let x = el(&f, a, b);
            let y = el(&f, c, d);
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let ix = FractionalIdeal::principal(&x).unwrap();
            let iy = FractionalIdeal::principal(&y).unwrap();
            assert_eq!(ix.mul(&iy).norm(), ix.norm() * iy.norm());
            assert!(ix.mul(&ix.inv()).is_unit_ideal());
        }
    }

    #[test]
    fn splitting_examples() {
        let f = real_quadratic(2).unwrap();
        let delta = el(&f, -5, -2);
        // ramified at the conductor prime above 17
        let fac17 = factor_rational_prime(&f, 17).unwrap();
        let ram: Vec<_> = fac17
            .iter()
            .map(|(q, _)| splitting_in_quadratic_ext(q, &delta).unwrap())
            .collect();
        assert!(ram.contains(&Splitting::Ramified));

        // delta = -1 over Q(sqrt 2): the inert prime (3) splits in F(i)
        // since -1 is a fourth power... check: (-1)^((9-1)/2) = 1 in F_9
        let minus1 = FieldElement::from_rational(&f, rat(-1));
        let fac3 = factor_rational_prime(&f, 3).unwrap();
        assert_eq!(
            splitting_in_quadratic_ext(&fac3[0].0, &minus1).unwrap(),
            Splitting::Split
        );
    }

    #[test]
    fn splitting_at_even_prime_for_minus1() {
        // F = Q(sqrt 2), delta = -1: E = Q(zeta_8), which is ramified at
        // (sqrt 2) with relative discriminant of norm 4
        let f = real_quadratic(2).unwrap();
        let minus1 = FieldElement::from_rational(&f, rat(-1));
        let fac2 = factor_rational_prime(&f, 2).unwrap();
        assert_eq!(
            splitting_in_quadratic_ext(&fac2[0].0, &minus1).unwrap(),
            Splitting::Ramified
        );
    }

    #[test]
    fn valuations() {
        let f = real_quadratic(2).unwrap();
        let fac2 = factor_rational_prime(&f, 2).unwrap();
        let sqrt2 = FieldElement::theta(&f);
        assert_eq!(fac2[0].0.valuation(&sqrt2), 1);
        assert_eq!(fac2[0].0.valuation(&FieldElement::from_rational(&f, rat(2))), 2);
        let half = FieldElement::from_rational(&f, Rat::new(int(1), int(2)));
        assert_eq!(fac2[0].0.valuation(&half), -2);
    }

    #[test]
    fn splitting_invariant_under_square_scaling() {
        let f = real_quadratic(2).unwrap();
        let delta = el(&f, -5, -2);
        let eps = el(&f, 3, 2); // totally positive unit
        let scaled = delta.mul(&eps).mul(&eps);
        for p in [3u64, 5, 7, 11, 13, 29] {
            let fac = factor_rational_prime(&f, p).unwrap();
            for (q, _) in fac {
                assert_eq!(
                    splitting_in_quadratic_ext(&q, &delta).unwrap(),
                    splitting_in_quadratic_ext(&q, &scaled).unwrap(),
                    "p = {p}"
                );
            }
        }
    }
}
