//! Exact arithmetic in totally real number fields of degree 1, 2, or 3:
//! construction with verified integral bases, embeddings with exact sign
//! decisions, norms and traces, unit groups, and square testing.

use crate::arith::{int, is_square_rat, rat_sqrt_exact, rational_reconstruct, Int, Rat};
use crate::error::{Error, Result};
use crate::poly::{
    self, degree, discriminant, factor_mod_p, integer_roots_monic, isolate_real_roots,
    mp_deg, refine_root, IntPoly,
};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

/// A totally real number field of degree n <= 3, presented by a monic
/// integer polynomial together with an integral basis expressed in the power
/// basis of a root.
#[derive(Debug)]
pub struct TotallyRealField {
    degree: usize,
    min_poly: IntPoly,
    /// Row i: coordinates of the i-th integral basis element over 1, t, t^2.
    basis_mat: Vec<Vec<Rat>>,
    /// Inverse of `basis_mat`: converts power coordinates to basis coordinates.
    basis_inv: Vec<Vec<Rat>>,
    disc: Int,
    /// Index [O_F : Z[t]].
    index: Int,
    /// mult_table[i][j] = basis coordinates of b_i * b_j.
    mult_table: Vec<Vec<Vec<Rat>>>,
    /// Isolating intervals for the real roots, in increasing order.
    root_intervals: Vec<(Rat, Rat)>,
}

impl PartialEq for TotallyRealField {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.basis_mat == other.basis_mat
    }
}
impl Eq for TotallyRealField {}

pub type Field = Arc<TotallyRealField>;

/// An exact element, stored by its rational coordinates over the integral
/// basis of its parent field.
#[derive(Clone)]
pub struct FieldElement {
    pub coords: Vec<Rat>,
    pub field: Field,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}
impl Eq for FieldElement {}

fn mat_mul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut acc = Rat::zero();
            for (l, row) in b.iter().enumerate().take(k) {
                acc += &a[i][l] * &row[j];
            }
            out[i][j] = acc;
        }
    }
    out
}

fn mat_inv_rat(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { Rat::one() } else { Rat::zero() });
            }
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for j in 0..2 * n {
            m[col][j] *= &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..2 * n {
                    let t = &f * &m[col][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Reduce power coordinates (length up to 2n-1) modulo the minimal polynomial.
fn reduce_power_coords(mut v: Vec<Rat>, min_poly: &[Int]) -> Vec<Rat> {
    let n = degree(min_poly).unwrap();
    while v.len() > n {
        let top = v.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let d = v.len(); // x^d = -(lower coefficients)/1 since monic
        for i in 0..n {
            let c = Rat::from_integer(min_poly[i].clone());
            let t = &top * c;
            v[d - n + i] -= t;
        }
    }
    v.resize(n, Rat::zero());
    v
}

impl TotallyRealField {
    /// Build a field from a monic integer polynomial of degree <= 3.
    /// When `basis` is None the standard basis is used (quadratic fields get
    /// the maximal order; cubic fields get {1, t, t^2} after a maximality
    /// check). A supplied basis is given in power coordinates, one row per
    /// basis element, and is verified to be a ring containing Z[t] whose
    /// discriminant is square-compatible with the polynomial discriminant.
    pub fn make_field(min_poly: &[Int], basis: Option<Vec<Vec<Rat>>>) -> Result<Field> {
        let n = degree(min_poly).ok_or_else(|| Error::InvalidInput("zero polynomial".into()))?;
        if n == 0 || n > 3 {
            return Err(Error::InvalidInput(format!("degree {n} not in 1..=3")));
        }
        if !min_poly[n].is_one() {
            return Err(Error::InvalidInput("polynomial must be monic".into()));
        }
        let f: IntPoly = min_poly[..=n].to_vec();
        let disc_poly = if n == 1 { Int::one() } else { discriminant(&f) };
        if n > 1 && disc_poly.is_zero() {
            return Err(Error::Reducible("repeated root".into()));
        }
        // irreducibility over Q: monic, so rational roots are integers
        if n >= 2 && !integer_roots_monic(&f).is_empty() {
            return Err(Error::Reducible("rational root".into()));
        }
        // totally real: n distinct real roots
        let roots = isolate_real_roots(&f);
        if roots.len() != n {
            return Err(Error::NotTotallyReal);
        }

        let basis_mat: Vec<Vec<Rat>> = match basis {
            Some(b) => b,
            None => Self::default_basis(&f, n, &disc_poly)?,
        };
        if basis_mat.len() != n || basis_mat.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput("basis must be n rows of n coordinates".into()));
        }
        // first basis element must be 1
        if basis_mat[0][0] != Rat::one() || basis_mat[0][1..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidInput("first basis element must be 1".into()));
        }
        let basis_inv =
            mat_inv_rat(&basis_mat).ok_or_else(|| Error::InvalidInput("basis is singular".into()))?;

        // index from the determinant: det(basis_mat) = 1/[O : Z[t]]
        let det = det_rat(&basis_mat);
        if det.is_zero() {
            return Err(Error::InvalidInput("basis is singular".into()));
        }
        let inv_det = det.recip().abs();
        if !inv_det.is_integer() {
            return Err(Error::InvalidInput(
                "basis does not contain Z[t] with integral index".into(),
            ));
        }
        let index = inv_det.to_integer();

        // multiplication table and ring closure check
        let mut mult_table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                // product in power coordinates
                let mut prod = vec![Rat::zero(); 2 * n - 1];
                for (a, ca) in basis_mat[i].iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (b, cb) in basis_mat[j].iter().enumerate() {
                        if cb.is_zero() {
                            continue;
                        }
                        prod[a + b] += ca * cb;
                    }
                }
                let red = reduce_power_coords(prod, &f);
                // to basis coordinates
                let coords = vec_mat(&red, &basis_inv);
                if coords.iter().any(|c| !c.is_integer()) {
                    return Err(Error::InvalidInput(
                        "supplied basis is not closed under multiplication".into(),
                    ));
                }
                mult_table[i][j] = coords;
            }
        }
        // theta must lie in the order
        {
            let mut theta_pc = vec![Rat::zero(); n];
            if n > 1 {
                theta_pc[1] = Rat::one();
            }
            let coords = vec_mat(&theta_pc, &basis_inv);
            if coords.iter().any(|c| !c.is_integer()) {
                return Err(Error::InvalidInput("basis does not contain t".into()));
            }
        }

        let disc = {
            // disc(basis) = disc_poly * det^2; both exact
            let d = Rat::from_integer(disc_poly.clone()) * &det * &det;
            if !d.is_integer() {
                return Err(Error::InvalidInput("basis discriminant is not integral".into()));
            }
            d.to_integer()
        };
        // square compatibility: disc_poly / disc must be a square (the index^2)
        if n > 1 {
            let q = Rat::new(disc_poly.clone(), disc.clone());
            if !q.is_integer() || !crate::arith::is_square_int(&q.to_integer()) {
                return Err(Error::InvalidInput(
                    "basis discriminant does not divide the polynomial discriminant as a square".into(),
                ));
            }
        }

        let field = TotallyRealField {
            degree: n,
            min_poly: f,
            basis_mat,
            basis_inv,
            disc,
            index,
            mult_table,
            root_intervals: roots,
        };
        Ok(Arc::new(field))
    }

    fn default_basis(f: &[Int], n: usize, disc_poly: &Int) -> Result<Vec<Vec<Rat>>> {
        match n {
            1 => Ok(vec![vec![Rat::one()]]),
            2 => {
                // squarefree kernel d0 of the discriminant; theta = root of f
                let (d0, s) = crate::arith::squarefree_part(disc_poly)
                    .ok_or_else(|| Error::InvalidInput("discriminant too large to factor".into()))?;
                // sqrt(d0) = (2 theta + b) / s where b is the linear coefficient
                let b = f[1].clone();
                let one = vec![Rat::one(), Rat::zero()];
                let d0_mod4 = d0.mod_floor(&int(4));
                let w = if d0_mod4 == int(1) {
                    // (1 + sqrt(d0))/2 = ((s + b) + 2 theta) / (2 s)
                    vec![
                        Rat::new(&s + &b, int(2) * &s),
                        Rat::new(int(2), int(2) * &s),
                    ]
                } else {
                    // sqrt(d0) = (b + 2 theta)/s
                    vec![Rat::new(b.clone(), s.clone()), Rat::new(int(2), s.clone())]
                };
                Ok(vec![one, w])
            }
            3 => {
                // {1, t, t^2} accepted only when maximal at every prime whose
                // square divides the polynomial discriminant
                let fac = crate::arith::factor_trial(disc_poly, 2_000_000)
                    .ok_or_else(|| Error::InvalidInput("discriminant too large to factor".into()))?;
                for (p, e) in fac {
                    if e >= 2 {
                        let pu = p.to_u64().ok_or_else(|| {
                            Error::InvalidInput("discriminant prime too large".into())
                        })?;
                        if !dedekind_p_maximal(f, pu) {
                            return Err(Error::NonMonogenicBasisRequired(pu));
                        }
                    }
                }
                Ok((0..3)
                    .map(|i| {
                        (0..3)
                            .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                            .collect()
                    })
                    .collect())
            }
            _ => unreachable!(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &IntPoly {
        &self.min_poly
    }

    pub fn discriminant(&self) -> &Int {
        &self.disc
    }

    pub fn index(&self) -> &Int {
        &self.index
    }

    pub fn basis_mat(&self) -> &Vec<Vec<Rat>> {
        &self.basis_mat
    }

    pub fn mult_entry(&self, i: usize, j: usize) -> &Vec<Rat> {
        &self.mult_table[i][j]
    }

    /// Refined isolating interval of the i-th real root (roots in increasing
    /// order), with width below 2^-bits.
    pub fn root_interval(&self, i: usize, bits: u32) -> (Rat, Rat) {
        let w = Rat::new(Int::one(), Int::one() << bits);
        let (lo, hi) = &self.root_intervals[i];
        refine_root(&self.min_poly, lo, hi, &w)
    }
}

fn det_rat(a: &[Vec<Rat>]) -> Rat {
    match a.len() {
        1 => a[0][0].clone(),
        2 => &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0],
        3 => {
            let m = a;
            &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
                - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
                + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
        }
        _ => unreachable!(),
    }
}

fn vec_mat(v: &[Rat], m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m[0].len();
    let mut out = vec![Rat::zero(); n];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for j in 0..n {
            out[j] += vi * &m[i][j];
        }
    }
    out
}

/// Dedekind's p-maximality criterion for Z[t] defined by a monic integer
/// polynomial f.
pub fn dedekind_p_maximal(f: &[Int], p: u64) -> bool {
    let fac = factor_mod_p(f, p);
    // g* = product of distinct factors, h* = f/g* mod p
    let mut gstar: Vec<u64> = vec![1];
    for (g, _) in &fac {
        gstar = poly::mp_mul(&gstar, g, p);
    }
    let fp = poly::mp_from_int(f, p);
    let hstar = if mp_deg(&gstar) == mp_deg(&fp) {
        vec![1u64]
    } else {
        // exact division in F_p[x]
        mp_div(&fp, &gstar, p)
    };
    // lift g*, h* to Z, T = (g h - f)/p
    let g_lift: IntPoly = gstar.iter().map(|&c| Int::from(c)).collect();
    let h_lift: IntPoly = hstar.iter().map(|&c| Int::from(c)).collect();
    let mut gh = vec![Int::zero(); g_lift.len() + h_lift.len() - 1];
    for (i, a) in g_lift.iter().enumerate() {
        for (j, b) in h_lift.iter().enumerate() {
            gh[i + j] += a * b;
        }
    }
    let mut t_poly = vec![Int::zero(); gh.len().max(f.len())];
    for (i, c) in gh.iter().enumerate() {
        t_poly[i] += c;
    }
    for (i, c) in f.iter().enumerate() {
        t_poly[i] -= c;
    }
    let t_mod: Vec<u64> = t_poly
        .iter()
        .map(|c| {
            let q = c / Int::from(p);
            debug_assert_eq!(&q * Int::from(p), *c);
            u64::try_from(&q.mod_floor(&Int::from(p))).unwrap()
        })
        .collect();
    let t_mod = poly::mp_trim(t_mod);
    let g1 = poly::mp_gcd(&t_mod, &gstar, p);
    let g2 = poly::mp_gcd(&g1, &hstar, p);
    mp_deg(&g2) == 0
}

fn mp_div(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    // exact division helper (quotient of a by b, remainder assumed zero)
    let da = mp_deg(a);
    let db = mp_deg(b);
    let inv = crate::arith::pow_mod_u64(b[db], p - 2, p);
    let mut r = a.to_vec();
    let mut q = vec![0u64; da - db + 1];
    for i in (0..=(da - db)).rev() {
        let c = crate::arith::mul_mod_u64(*r.get(db + i).unwrap_or(&0), inv, p);
        q[i] = c;
        if c != 0 {
            for j in 0..=db {
                let t = crate::arith::mul_mod_u64(c, b[j], p);
                r[i + j] = (r[i + j] + p - t) % p;
            }
        }
    }
    poly::mp_trim(q)
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

impl FieldElement {
    pub fn zero(field: &Field) -> Self {
        FieldElement {
            coords: vec![Rat::zero(); field.degree],
            field: field.clone(),
        }
    }

    pub fn one(field: &Field) -> Self {
        Self::from_rational(field, Rat::one())
    }

    pub fn from_rational(field: &Field, q: Rat) -> Self {
        let mut coords = vec![Rat::zero(); field.degree];
        coords[0] = q;
        FieldElement {
            coords,
            field: field.clone(),
        }
    }

    pub fn from_coords(field: &Field, coords: Vec<Rat>) -> Self {
        assert_eq!(coords.len(), field.degree);
        FieldElement {
            coords,
            field: field.clone(),
        }
    }

    /// Element theta, the distinguished root of the minimal polynomial.
    pub fn theta(field: &Field) -> Self {
        let n = field.degree;
        let mut pc = vec![Rat::zero(); n];
        if n > 1 {
            pc[1] = Rat::one();
        } else {
            // degree 1: theta = -c0
            pc[0] = Rat::from_integer(-field.min_poly[0].clone());
        }
        Self::from_power_coords(field, pc)
    }

    pub fn from_power_coords(field: &Field, pc: Vec<Rat>) -> Self {
        let pc = reduce_power_coords(pc, &field.min_poly);
        let coords = vec_mat(&pc, &field.basis_inv);
        FieldElement {
            coords,
            field: field.clone(),
        }
    }

    pub fn power_coords(&self) -> Vec<Rat> {
        vec_mat(&self.coords, &self.field.basis_mat)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement {
            coords,
            field: self.field.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        FieldElement {
            coords,
            field: self.field.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            coords: self.coords.iter().map(|c| -c).collect(),
            field: self.field.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.field.degree;
        let mut coords = vec![Rat::zero(); n];
        for i in 0..n {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if other.coords[j].is_zero() {
                    continue;
                }
                let f = &self.coords[i] * &other.coords[j];
                for k in 0..n {
                    coords[k] += &f * &self.field.mult_table[i][j][k];
                }
            }
        }
        FieldElement {
            coords,
            field: self.field.clone(),
        }
    }

    pub fn scale(&self, q: &Rat) -> Self {
        FieldElement {
            coords: self.coords.iter().map(|c| c * q).collect(),
            field: self.field.clone(),
        }
    }

    /// Matrix of multiplication by self in the integral basis (rows act on
    /// the left: coords(x * self) = coords(x) . M).
    pub fn rep_matrix(&self) -> Vec<Vec<Rat>> {
        let n = self.field.degree;
        let mut m = vec![vec![Rat::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if self.coords[j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    m[i][k] += &self.coords[j] * &self.field.mult_table[i][j][k];
                }
            }
        }
        m
    }

    pub fn norm(&self) -> Rat {
        det_rat(&self.rep_matrix())
    }

    pub fn trace(&self) -> Rat {
        let m = self.rep_matrix();
        let mut t = Rat::zero();
        for (i, row) in m.iter().enumerate() {
            t += &row[i];
        }
        t
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = self.field.degree;
        let m = self.rep_matrix();
        let minv = mat_inv_rat(&m).ok_or(Error::ZeroElement)?;
        // coords(1) . M^{-1}
        let mut one = vec![Rat::zero(); n];
        one[0] = Rat::one();
        let coords = vec_mat(&one, &minv);
        Ok(FieldElement {
            coords,
            field: self.field.clone(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Common denominator of the coordinates.
    pub fn denominator(&self) -> Int {
        let mut d = Int::one();
        for c in &self.coords {
            d = d.lcm(c.denom());
        }
        d
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Exact sign (+1 or -1) of the image of a nonzero element under the
    /// i-th real embedding, decided through interval refinement.
    pub fn sign_at_embedding(&self, i: usize) -> i32 {
        assert!(!self.is_zero());
        let pc = self.power_coords();
        let f = &self.field.min_poly;
        let mut bits = 16u32;
        loop {
            let w = Rat::new(Int::one(), Int::one() << bits);
            let (lo, hi) = {
                let (a, b) = &self.field.root_intervals[i];
                refine_root(f, a, b, &w)
            };
            let (vlo, vhi) = interval_eval(&pc, &lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            bits *= 2;
            assert!(bits <= 1 << 16, "sign refinement failed to converge");
        }
    }

    /// Numeric value of the i-th embedding at the given binary precision.
    pub fn embedding_float(&self, i: usize, prec: u32) -> rug::Float {
        let (lo, hi) = self.field.root_interval(i, prec + 8);
        let mid = (&lo + &hi) / Rat::from_integer(int(2));
        let root = crate::analytic::real::rat_to_float(&mid, prec + 16);
        let pc = self.power_coords();
        let mut acc = rug::Float::with_val(prec + 16, 0);
        for c in pc.iter().rev() {
            acc = acc * &root + crate::analytic::real::rat_to_float(c, prec + 16);
        }
        rug::Float::with_val(prec, acc)
    }

    pub fn embedding_f64(&self, i: usize) -> f64 {
        self.embedding_float(i, 53).to_f64()
    }
}

fn interval_eval(p: &[Rat], lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mut alo = Rat::zero();
    let mut ahi = Rat::zero();
    for c in p.iter().rev() {
        // [alo, ahi] * [lo, hi]
        let c1 = &alo * lo;
        let c2 = &alo * hi;
        let c3 = &ahi * lo;
        let c4 = &ahi * hi;
        let mut nlo = c1.clone();
        let mut nhi = c1;
        for v in [c2, c3, c4] {
            if v < nlo {
                nlo = v.clone();
            }
            if v > nhi {
                nhi = v;
            }
        }
        alo = nlo + c;
        ahi = nhi + c;
    }
    (alo, ahi)
}

// ---------------------------------------------------------------------------
// Field-level operations from the public surface
// ---------------------------------------------------------------------------

/// Convenience constructor for Q(sqrt m), m squarefree and positive.
pub fn real_quadratic(m: i64) -> Result<Field> {
    TotallyRealField::make_field(&poly::ipoly(&[-m, 0, 1]), None)
}

/// True iff every real embedding of x is negative. Decided exactly.
pub fn is_totally_negative(x: &FieldElement) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok((0..x.field.degree).all(|i| x.sign_at_embedding(i) == -1))
}

pub fn is_totally_positive(x: &FieldElement) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    Ok((0..x.field.degree).all(|i| x.sign_at_embedding(i) == 1))
}

/// Fundamental unit of a real quadratic field (norm +1 or -1), the smallest
/// unit > 1, computed from the continued fraction of sqrt(m).
pub fn fundamental_unit(field: &Field) -> FieldElement {
    assert_eq!(field.degree(), 2);
    // recover squarefree m from the field: disc d is m or 4m
    let d = field.discriminant().clone();
    let m = if (&d % int(4)).is_zero() { &d / int(4) } else { d.clone() };
    let (x1, y1, norm_is_minus) = pell_fundamental(&m);
    // u1 = x1 + y1 sqrt(m) in Z[sqrt m]
    let sqrt_m = sqrt_of_rational_int(field, &m);
    let u1 = FieldElement::from_rational(field, Rat::from_integer(x1.clone()))
        .add(&sqrt_m.scale(&Rat::from_integer(y1.clone())));
    // For m = 1 mod 4 the maximal order can contain a smaller unit with
    // u^3 = u1 (index 3 in the unit group). Detect it numerically and verify.
    if d.mod_floor(&int(4)) == int(1) {
        let u1_val = u1.embedding_float(1, 128); // larger root embedding
        let cand = u1_val.clone().root(3);
        // candidate = (a + b sqrt m)/2; recover a = cand + conj, where
        // conj = ±1/cand depending on the norm of the cube root
        for conj_sign in [1i32, -1] {
            let conj = {
                let mut c = cand.clone().recip();
                if conj_sign < 0 {
                    c = -c;
                }
                c
            };
            let a_f = rug::Float::with_val(128, &cand + &conj);
            let b_f = rug::Float::with_val(128, &cand - &conj)
                / rug::Float::with_val(128, &crate::analytic::real::int_to_float(&m, 160)).sqrt();
            let around = |f: &rug::Float| -> Vec<Int> {
                match f.to_integer().map(|z| crate::analytic::real::rug_to_bigint(&z)) {
                    Some(b) => vec![b.clone() - 1, b.clone(), b + 1],
                    None => vec![],
                }
            };
            for a in around(&a_f) {
                for b in around(&b_f) {
                    if (&a - &b).mod_floor(&int(2)).is_zero() {
                        let cand_el = FieldElement::from_rational(field, Rat::new(a.clone(), int(2)))
                            .add(&sqrt_m.scale(&Rat::new(b.clone(), int(2))));
                        if cand_el.is_integral()
                            && cand_el.norm().abs() == Rat::one()
                            && cand_el.pow(3).unwrap() == u1
                        {
                            return cand_el;
                        }
                    }
                }
            }
        }
    }
    let _ = norm_is_minus;
    u1
}

/// The element sqrt(m) for the field Q(sqrt m) (m its squarefree kernel).
fn sqrt_of_rational_int(field: &Field, m: &Int) -> FieldElement {
    // theta is a root of x^2 + b x + c; sqrt(disc_poly) = 2 theta + b and
    // disc_poly = m * s^2 for a rational integer s (m squarefree kernel)
    let f = field.min_poly();
    let b = f[1].clone();
    let disc_poly = discriminant(f);
    let (m0, s) = crate::arith::squarefree_part(&disc_poly).expect("small disc");
    assert_eq!(&m0, m, "field mismatch in sqrt_of_rational_int");
    let pc = vec![
        Rat::new(b, s.clone()),
        Rat::new(int(2), s),
    ];
    FieldElement::from_power_coords(field, pc)
}

/// Fundamental solution of x^2 - m y^2 = ±1 via the continued fraction of
/// sqrt(m). Returns (x, y, norm_is_minus_one).
fn pell_fundamental(m: &Int) -> (Int, Int, bool) {
    let a0 = crate::arith::isqrt(m);
    assert!(&(&a0 * &a0) != m, "m must not be a square");
    let mut p_prev = Int::one();
    let mut q_prev = Int::zero();
    let mut p = a0.clone();
    let mut q = Int::one();
    let mut pp = Int::zero(); // P_i
    let mut qq = Int::one(); // Q_i
    let mut i = 0u32;
    loop {
        // next CF state
        pp = {
            let a_i = if i == 0 {
                a0.clone()
            } else {
                (&a0 + &pp) / &qq
            };
            &a_i * &qq - &pp
        };
        qq = (m - &pp * &pp) / &qq;
        i += 1;
        let a_i = (&a0 + &pp) / &qq;
        // convergent update with a_i
        let p_next = &a_i * &p + &p_prev;
        let q_next = &a_i * &q + &q_prev;
        if qq.is_one() {
            // period complete; (p, q) before this update is the fundamental solution
            let lhs = &p * &p - m * &q * &q;
            debug_assert!(lhs.clone().abs().is_one());
            return (p.clone(), q.clone(), lhs == int(-1));
        }
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        assert!(i < 10_000_000, "continued fraction failed to close");
    }
}

/// The generator epsilon > 1 of the group of totally positive units modulo
/// torsion: the fundamental unit itself when its norm is +1, else its square.
pub fn fundamental_totally_positive_unit(field: &Field) -> FieldElement {
    let u = fundamental_unit(field);
    if u.norm() == Rat::one() {
        u
    } else {
        u.mul(&u)
    }
}

/// Galois automorphisms of the field as coordinate matrices (basis coords ->
/// basis coords), identity first. Quadratic fields always return both maps;
/// cubic fields return three maps when the cubic is Galois (detected by an
/// exact square test on the quadratic resolvent), else just the identity.
pub fn galois_automorphisms(field: &Field) -> Result<Vec<Vec<Vec<Rat>>>> {
    let n = field.degree();
    let id: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    if n == 1 {
        return Ok(vec![id]);
    }
    if n == 2 {
        // theta -> -b - theta
        let b = field.min_poly()[1].clone();
        let sigma_theta = FieldElement::from_power_coords(
            field,
            vec![Rat::from_integer(-b), -Rat::one()],
        );
        return Ok(vec![id, automorphism_matrix(field, &sigma_theta)]);
    }
    // cubic: f(Y)/(Y - theta) = Y^2 + (theta + a) Y + (theta^2 + a theta + b)
    let f = field.min_poly();
    let a = Rat::from_integer(f[2].clone());
    let b = Rat::from_integer(f[1].clone());
    let theta = FieldElement::theta(field);
    let lin = theta.add(&FieldElement::from_rational(field, a.clone()));
    let cst = theta
        .mul(&theta)
        .add(&theta.scale(&a))
        .add(&FieldElement::from_rational(field, b));
    // disc of the quadratic factor
    let disc = lin.mul(&lin).sub(&cst.scale(&Rat::from_integer(int(4))));
    match is_square(&disc, 1 << 16)? {
        None => Ok(vec![id]),
        Some(s) => {
            let half = Rat::new(Int::one(), int(2));
            let r1 = lin.neg().add(&s).scale(&half);
            let r2 = lin.neg().sub(&s).scale(&half);
            Ok(vec![
                id,
                automorphism_matrix(field, &r1),
                automorphism_matrix(field, &r2),
            ])
        }
    }
}

fn automorphism_matrix(field: &Field, sigma_theta: &FieldElement) -> Vec<Vec<Rat>> {
    let n = field.degree();
    // power-basis images: theta^k -> sigma_theta^k; then conjugate by basis
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        // image of basis element b_i: evaluate its power-coordinate poly at sigma_theta
        let pc = &field.basis_mat[i];
        let mut acc = FieldElement::zero(field);
        let mut pow = FieldElement::one(field);
        for c in pc {
            acc = acc.add(&pow.scale(c));
            pow = pow.mul(sigma_theta);
        }
        rows.push(acc.coords);
    }
    rows
}

pub fn apply_automorphism(x: &FieldElement, m: &[Vec<Rat>]) -> FieldElement {
    FieldElement::from_coords(&x.field, vec_mat(&x.coords, m))
}

/// Exact square test. Returns a square root if x is a square in F.
/// Quadratic fields are decided purely algebraically; cubic fields combine
/// residue/valuation certificates with rational reconstruction, and report
/// InconclusiveHeightBound when neither a root nor a certificate is found
/// within the height budget.
pub fn is_square(x: &FieldElement, height_bound: u64) -> Result<Option<FieldElement>> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    let n = x.field.degree();
    // quick negative certificate: a negative embedding
    for i in 0..n {
        if x.sign_at_embedding(i) < 0 {
            return Ok(None);
        }
    }
    let nx = x.norm();
    if n == 1 {
        return Ok(rat_sqrt_exact(&x.coords[0]).map(|r| FieldElement::from_rational(&x.field, r)));
    }
    if n == 2 {
        // y = (x + s)/t with s = ±sqrt(N(x)), t = sqrt(T(x) + 2s)
        let n0 = match rat_sqrt_exact(&nx) {
            Some(v) => v,
            None => return Ok(None),
        };
        let tx = x.trace();
        for s in [n0.clone(), -n0.clone()] {
            let t2 = &tx + Rat::from_integer(int(2)) * &s;
            if t2.is_zero() {
                // trace-zero square root: y = v mu with mu = theta - Tr(theta)/2
                let theta = FieldElement::theta(&x.field);
                let half_tr = theta.trace() / Rat::from_integer(int(2));
                let mu = theta.sub(&FieldElement::from_rational(&x.field, half_tr));
                let mu2 = mu.mul(&mu).as_rational().expect("mu^2 is rational");
                let ratio = x
                    .as_rational()
                    .map(|q| q / &mu2);
                if let Some(r) = ratio {
                    if let Some(v) = rat_sqrt_exact(&r) {
                        let y = mu.scale(&v);
                        if y.mul(&y) == *x {
                            return Ok(Some(y));
                        }
                    }
                }
                continue;
            }
            if let Some(t) = rat_sqrt_exact(&t2) {
                if t.is_zero() {
                    continue;
                }
                let y = x
                    .add(&FieldElement::from_rational(&x.field, s.clone()))
                    .scale(&t.recip());
                if y.mul(&y) == *x {
                    return Ok(Some(y));
                }
            }
        }
        return Ok(None);
    }
    // cubic path
    if !is_square_rat(&nx) {
        return Ok(None);
    }
    // residue certificate: x a nonresidue modulo some odd degree-1 prime
    if let Some(false) = cubic_residue_square_scan(x) {
        return Ok(None);
    }
    // reconstruction at increasing precision
    let den_bound = Int::from(height_bound);
    for prec in [192u32, 384, 768] {
        let roots: Vec<rug::Float> = (0..3).map(|i| x.embedding_float(i, prec).sqrt()).collect();
        // basis embedding matrix
        for signs in [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]] {
            let target: Vec<rug::Float> = roots
                .iter()
                .zip(signs.iter())
                .map(|(r, &s)| if s > 0 { r.clone() } else { -r.clone() })
                .collect();
            if let Some(y) = reconstruct_from_embeddings(&x.field, &target, prec, &den_bound) {
                if y.mul(&y) == *x {
                    return Ok(Some(y));
                }
            }
        }
    }
    Err(Error::InconclusiveHeightBound(height_bound))
}

/// Scan small odd primes for a residue-field certificate that x is a
/// nonsquare. Returns Some(false) on a nonsquare certificate, None if
/// inconclusive after the scan.
fn cubic_residue_square_scan(x: &FieldElement) -> Option<bool> {
    let field = &x.field;
    let den = x.denominator();
    let primes: Vec<u64> = {
        let mut v = Vec::new();
        let mut p = 3u64;
        while v.len() < 25 {
            if crate::arith::is_prime_u64(p) {
                v.push(p);
            }
            p += 2;
        }
        v
    };
    for p in primes {
        let pi = Int::from(p);
        if (field.discriminant() % &pi).is_zero()
            || (field.index() % &pi).is_zero()
            || (&den % &pi).is_zero()
        {
            continue;
        }
        let nx = x.norm();
        if (nx.numer() % &pi).is_zero() {
            continue;
        }
        // factor p and test quadratic residuosity in each residue field
        let Ok(fac) = crate::ideals::factor_rational_prime(field, p) else {
            continue;
        };
        for (pr, _) in fac {
            if let Some(is_sq) = pr.residue_is_square(x) {
                if !is_sq {
                    return Some(false);
                }
            }
        }
    }
    None
}

fn reconstruct_from_embeddings(
    field: &Field,
    values: &[rug::Float],
    prec: u32,
    den_bound: &Int,
) -> Option<FieldElement> {
    let n = field.degree();
    // numeric basis-embedding matrix B[i][j] = embedding_j(basis_i)
    let mut b = vec![vec![rug::Float::new(prec); n]; n];
    for (i, row) in b.iter_mut().enumerate() {
        let bi = FieldElement::from_coords(
            &Arc::clone(field),
            (0..n)
                .map(|k| if k == i { Rat::one() } else { Rat::zero() })
                .collect(),
        );
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = bi.embedding_float(j, prec);
        }
    }
    // solve coords . B = values by Gaussian elimination on B^T
    let mut m: Vec<Vec<rug::Float>> = (0..n)
        .map(|j| {
            let mut r: Vec<rug::Float> = (0..n).map(|i| b[i][j].clone()).collect();
            r.push(values[j].clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &bb| {
            m[a][col]
                .clone()
                .abs()
                .partial_cmp(&m[bb][col].clone().abs())
                .unwrap()
        })?;
        m.swap(col, piv);
        if m[col][col].is_zero() {
            return None;
        }
        let inv = m[col][col].clone().recip();
        for j in 0..=n {
            m[col][j] = rug::Float::with_val(prec, &m[col][j] * &inv);
        }
        for i in 0..n {
            if i != col {
                let f = m[i][col].clone();
                for j in 0..=n {
                    let t = rug::Float::with_val(prec, &f * &m[col][j]);
                    m[i][j] = rug::Float::with_val(prec, &m[i][j] - &t);
                }
            }
        }
    }
    let coords: Vec<Rat> = (0..n)
        .map(|i| {
            let approx = crate::analytic::real::float_to_rat(&m[i][n]);
            rational_reconstruct(&approx, den_bound)
        })
        .collect();
    Some(FieldElement::from_coords(field, coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn sqrt2_field() {
        let f = real_quadratic(2).unwrap();
        assert_eq!(f.discriminant(), &int(8));
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn sqrt5_field_with_supplied_basis() {
        // x^2 - 5 with basis {1, (1+theta)/2} has discriminant 5
        let basis = vec![
            vec![rat(1), rat(0)],
            vec![ratio(1, 2), ratio(1, 2)],
        ];
        let f = TotallyRealField::make_field(&poly::ipoly(&[-5, 0, 1]), Some(basis)).unwrap();
        assert_eq!(f.discriminant(), &int(5));
        // default basis gives the same field
        let g = real_quadratic(5).unwrap();
        assert_eq!(g.discriminant(), &int(5));
    }

    #[test]
    fn cubic_81() {
        let f = TotallyRealField::make_field(&poly::ipoly(&[-1, -3, 0, 1]), None).unwrap();
        assert_eq!(f.discriminant(), &int(81));
    }

    #[test]
    fn complex_root_rejected() {
        let e = TotallyRealField::make_field(&poly::ipoly(&[2, 0, 1]), None);
        assert!(matches!(e, Err(Error::NotTotallyReal)));
    }

    #[test]
    fn reducible_rejected() {
        let e = TotallyRealField::make_field(&poly::ipoly(&[-4, 0, 1]), None);
        assert!(matches!(e, Err(Error::Reducible(_))));
    }

    #[test]
    fn norm_trace_examples() {
        let f = real_quadratic(2).unwrap();
        // -5 - 2 sqrt 2
        let x = FieldElement::from_power_coords(&f, vec![rat(-5), rat(-2)]);
        assert_eq!(x.norm(), rat(17));
        assert_eq!(FieldElement::one(&f).norm(), rat(1));
        assert_eq!(FieldElement::one(&f).trace(), rat(2));
        // 3 + 2 sqrt 2
        let u = FieldElement::from_power_coords(&f, vec![rat(3), rat(2)]);
        assert_eq!(u.norm(), rat(1));
    }

    #[test]
    fn totally_negative_examples() {
        let f = real_quadratic(2).unwrap();
        let x = FieldElement::from_power_coords(&f, vec![rat(-5), rat(-2)]);
        assert!(is_totally_negative(&x).unwrap());
        assert!(!is_totally_negative(&FieldElement::one(&f)).unwrap());
        let s = FieldElement::theta(&f);
        assert!(!is_totally_negative(&s).unwrap());
        assert!(matches!(
            is_totally_negative(&FieldElement::zero(&f)),
            Err(Error::ZeroElement)
        ));
    }

    #[test]
    fn fundamental_units() {
        let f2 = real_quadratic(2).unwrap();
        let e2 = fundamental_totally_positive_unit(&f2);
        assert_eq!(e2, FieldElement::from_power_coords(&f2, vec![rat(3), rat(2)]));

        let f5 = real_quadratic(5).unwrap();
        let e5 = fundamental_totally_positive_unit(&f5);
        // (3 + sqrt 5)/2
        assert_eq!(
            e5,
            FieldElement::from_power_coords(&f5, vec![ratio(3, 2), ratio(1, 2)])
        );
        assert_eq!(e5.norm(), rat(1));
        assert!(is_totally_positive(&e5).unwrap());

        let f3 = real_quadratic(3).unwrap();
        let e3 = fundamental_totally_positive_unit(&f3);
        assert_eq!(e3, FieldElement::from_power_coords(&f3, vec![rat(2), rat(1)]));
    }

    #[test]
    fn squares_quadratic() {
        let f = real_quadratic(2).unwrap();
        let nine = FieldElement::from_rational(&f, rat(9));
        let r = is_square(&nine, 1000).unwrap().unwrap();
        assert_eq!(r.mul(&r), nine);

        // 17 + 12 sqrt 2 = (3 + 2 sqrt 2)^2
        let x = FieldElement::from_power_coords(&f, vec![rat(17), rat(12)]);
        let r = is_square(&x, 1000).unwrap().unwrap();
        assert_eq!(r.mul(&r), x);

        let s = FieldElement::theta(&f);
        assert!(is_square(&s, 1000).unwrap().is_none());
    }

    #[test]
    fn squares_random_roundtrip() {
        let f = real_quadratic(2).unwrap();
        let mut seed = 1u64;
        for _ in 0..200 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let a = ((seed >> 33) % 41) as i64 - 20;
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let b = ((seed >> 33) % 41) as i64 - 20;
            let x = FieldElement::from_power_coords(&f, vec![rat(a), rat(b)]);
            if x.is_zero() {
                continue;
            }
            let sq = x.mul(&x);
            let r = is_square(&sq, 100_000).unwrap().expect("square of element");
            assert_eq!(r.mul(&r), sq);
        }
    }

    #[test]
    fn cubic_automorphisms() {
        let f = TotallyRealField::make_field(&poly::ipoly(&[-1, -3, 0, 1]), None).unwrap();
        let autos = galois_automorphisms(&f).unwrap();
        assert_eq!(autos.len(), 3, "cyclic cubic has three automorphisms");
        let theta = FieldElement::theta(&f);
        let s1 = apply_automorphism(&theta, &autos[1]);
        // sigma(theta) is again a root of the minimal polynomial
        let val = s1.mul(&s1).mul(&s1).sub(&s1.scale(&rat(3))).sub(&FieldElement::one(&f));
        assert!(val.is_zero());
        assert_ne!(s1, theta);
    }

    #[test]
    fn embeddings_refine() {
        let f = real_quadratic(2).unwrap();
        let th = FieldElement::theta(&f);
        let lo = th.embedding_float(1, 64);
        let hi = th.embedding_float(1, 128);
        let diff = (lo - hi).abs();
        assert!(diff < rug::Float::with_val(64, 2f64.powi(-60)));
    }
}
