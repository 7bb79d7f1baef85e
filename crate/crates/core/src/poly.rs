//! Dense univariate polynomials over a finite field and their factorization.
//!
//! The counting paths (`degree_divisor`, `is_irreducible`) use only the
//! squarefree test and distinct-degree factorization, so they are
//! deterministic. Cantor-Zassenhaus splitting is used only by [`factor`].

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::divisor::DegreeDivisor;
use crate::ff::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different fields")]
    FieldMismatch,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("bad input: {0}")]
    BadInput(String),
}

/// Polynomial in `Y` over a finite field, lowest degree first.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u64>,
}

impl Poly {
    /// Builds from packed coefficients (each must be `< q`), trimming zeros.
    pub fn new(field: &Field, mut coeffs: Vec<u64>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.order()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Builds from integer coefficients reduced into the prime subfield.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Self {
        Self::new(field, vec![1])
    }

    pub fn constant(field: &Field, c: u64) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `Y`.
    pub fn x(field: &Field) -> Self {
        Self::new(field, vec![0, 1])
    }

    /// `c * Y^k`.
    pub fn monomial(field: &Field, c: u64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.lead()) {
            Some(li) if li != 1 => self.scale(li),
            _ => self.clone(),
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            f,
            (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            f,
            (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    /// Quotient and remainder.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        self.check(d)?;
        let f = &self.field;
        let dd = d.degree().ok_or(PolyError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let li = f.inv(d.lead()).expect("nonzero leading coefficient");
        let mut quo = vec![0u64; r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = f.mul(r[k], li);
            if c == 0 {
                continue;
            }
            quo[k - dd] = c;
            for (i, &di) in d.coeffs.iter().enumerate() {
                r[k - dd + i] = f.sub(r[k - dd + i], f.mul(c, di));
            }
        }
        r.truncate(dd);
        Ok((Self::new(f, quo), Self::new(f, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact division; errors if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, PolyError> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::BadInput("inexact polynomial division".into()))
        }
    }

    pub fn derivative(&self) -> Self {
        let f = &self.field;
        Self::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_u64(i as u64), c))
                .collect(),
        )
    }

    /// `self^e mod m` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Result<Self, PolyError> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one(&self.field).rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(&self.field);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Horner evaluation at a packed field value.
    pub fn eval(&self, x: u64) -> u64 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Squarefree test: `gcd(f, f') = 1` with `f' != 0`. Constants count as squarefree.
    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return !self.is_zero();
        }
        let d = self.derivative();
        !d.is_zero() && gcd_unchecked(self, &d).is_one()
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let prime = self.field.is_prime_field();
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if prime {
                c.to_string()
            } else {
                format!("{:?}", self.field.coeff_vec(c))
            };
            match (i, c == 1) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "Y")?,
                (1, false) => write!(f, "{cs}*Y")?,
                (_, true) => write!(f, "Y^{i}")?,
                (_, false) => write!(f, "{cs}*Y^{i}")?,
            }
        }
        Ok(())
    }
}

fn gcd_unchecked(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b).expect("same field, nonzero divisor");
        a = std::mem::replace(&mut b, r);
    }
    a.monic()
}

/// Monic greatest common divisor by Euclid.
pub fn poly_gcd(f: &Poly, g: &Poly) -> Result<Poly, PolyError> {
    f.check(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(PolyError::BadInput("gcd(0, 0) is undefined".into()));
    }
    Ok(gcd_unchecked(f, g))
}

/// Returns `h` with `h(Y^p) = f(Y)`; requires `f' = 0`.
fn pth_root_poly(f: &Poly) -> Poly {
    let fld = f.field();
    let p = fld.characteristic() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&c| fld.pth_root(c))
        .collect();
    Poly::new(fld, coeffs)
}

/// `f = prod g_i^{e_i}` with each `g_i` monic squarefree and pairwise coprime,
/// sorted by multiplicity.
pub fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, usize)>, PolyError> {
    if f.is_constant() {
        return Err(PolyError::BadInput(
            "squarefree decomposition of a constant".into(),
        ));
    }
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let mut out = Vec::new();
    sff(f, 1, &mut out);
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

fn sff(f: &Poly, scale: usize, out: &mut Vec<(Poly, usize)>) {
    let p = f.field().characteristic() as usize;
    let d = f.derivative();
    let mut c = gcd_unchecked(f, &d);
    let mut w = f.div_exact(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_constant() {
        let y = gcd_unchecked(&w, &c);
        let fac = w.div_exact(&y).expect("gcd divides w");
        if !fac.is_constant() {
            out.push((fac, i * scale));
        }
        c = c.div_exact(&y).expect("gcd divides c");
        w = y;
        i += 1;
    }
    // what is left has only multiplicities divisible by p
    if !c.is_constant() {
        sff(&pth_root_poly(&c), scale * p, out);
    }
}

/// Distinct-degree factorization: `(d, h_d)` where `h_d` is the product of all
/// monic irreducible factors of degree exactly `d`. Only nonconstant parts
/// are returned, in ascending `d`.
pub fn distinct_degree(f: &Poly) -> Result<Vec<(usize, Poly)>, PolyError> {
    if f.is_zero() {
        return Err(PolyError::BadInput("zero polynomial".into()));
    }
    if !f.is_monic() {
        return Err(PolyError::NotMonic);
    }
    if !f.is_squarefree() {
        return Err(PolyError::NotSquarefree);
    }
    Ok(ddf_unchecked(f))
}

fn ddf_unchecked(f: &Poly) -> Vec<(usize, Poly)> {
    let fld = f.field().clone();
    let q = fld.order();
    let x = Poly::x(&fld);
    let mut rest = f.clone();
    let mut out = Vec::new();
    let mut h = x.clone();
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (d + 1) {
            break;
        }
        d += 1;
        h = h.pow_mod(q, &rest).expect("nonzero modulus");
        let g = gcd_unchecked(&rest, &h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero modulus");
            out.push((d, g));
        }
    }
    if let Some(deg) = rest.degree().filter(|&d| d > 0) {
        out.push((deg, rest));
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting of a monic squarefree `h` whose
/// irreducible factors all have degree `d`. Returns the factors sorted.
pub fn equal_degree_split<R: Rng + ?Sized>(
    h: &Poly,
    d: usize,
    rng: &mut R,
) -> Result<Vec<Poly>, PolyError> {
    let deg = h
        .degree()
        .ok_or_else(|| PolyError::BadInput("zero polynomial".into()))?;
    if d == 0 || deg <= d || deg % d != 0 {
        return Err(PolyError::BadInput(format!(
            "need deg(h) > d and d | deg(h), got deg {deg}, d {d}"
        )));
    }
    if !h.is_monic() {
        return Err(PolyError::NotMonic);
    }
    let mut out = Vec::new();
    edf(h, d, rng, &mut out);
    out.sort();
    Ok(out)
}

fn edf<R: Rng + ?Sized>(h: &Poly, d: usize, rng: &mut R, out: &mut Vec<Poly>) {
    let deg = h.degree().unwrap_or(0);
    if deg <= d {
        out.push(h.clone());
        return;
    }
    let fld = h.field().clone();
    let q = fld.order();
    loop {
        let r = Poly::new(&fld, (0..deg).map(|_| rng.gen_range(0..q)).collect());
        if r.is_constant() {
            continue;
        }
        let w = if q % 2 == 1 {
            // r^((q^d - 1)/2) = (r * r^q * ... * r^(q^(d-1)))^((q-1)/2)
            let mut norm = r.clone();
            let mut conj = r.clone();
            for _ in 1..d {
                conj = conj.pow_mod(q, h).expect("nonzero modulus");
                norm = norm.mul(&conj).rem(h).expect("nonzero modulus");
            }
            norm.pow_mod((q - 1) / 2, h)
                .expect("nonzero modulus")
                .sub(&Poly::one(&fld))
        } else {
            // trace map sum_{i < d log2 q} r^(2^i)
            let k = q.trailing_zeros() as usize;
            let mut term = r.rem(h).expect("nonzero modulus");
            let mut acc = term.clone();
            for _ in 1..d * k {
                term = term.mul(&term).rem(h).expect("nonzero modulus");
                acc = acc.add(&term);
            }
            acc
        };
        let g = gcd_unchecked(h, &w);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let other = h.div_exact(&g).expect("gcd divides");
            edf(&g, d, rng, out);
            edf(&other, d, rng, out);
            return;
        }
    }
}

/// Irreducibility via the squarefree test and distinct-degree factorization.
pub fn is_irreducible(f: &Poly) -> bool {
    if f.is_constant() {
        return false;
    }
    let g = f.monic();
    if !g.is_squarefree() {
        return false;
    }
    let parts = ddf_unchecked(&g);
    parts.len() == 1 && parts[0].0 == g.degree().unwrap_or(0)
}

/// Residue-degree profile of a squarefree polynomial: degree `d` appears
/// `deg(h_d)/d` times. The input is normalized to monic first.
pub fn degree_divisor(f: &Poly) -> Result<DegreeDivisor, PolyError> {
    if f.is_zero() {
        return Err(PolyError::BadInput("zero polynomial".into()));
    }
    let g = f.monic();
    if !g.is_squarefree() {
        return Err(PolyError::NotSquarefree);
    }
    let mut parts = Vec::new();
    for (d, h) in ddf_unchecked(&g) {
        let k = h.degree().unwrap_or(0) / d;
        parts.extend(std::iter::repeat_n(d, k));
    }
    Ok(DegreeDivisor::new(parts).expect("degrees are positive"))
}

/// Complete factorization into monic irreducibles with multiplicities,
/// returned with the leading coefficient. Factors are sorted.
pub fn factor<R: Rng + ?Sized>(
    f: &Poly,
    rng: &mut R,
) -> Result<(u64, Vec<(Poly, usize)>), PolyError> {
    if f.is_zero() {
        return Err(PolyError::BadInput("zero polynomial".into()));
    }
    let lead = f.lead();
    let g = f.monic();
    if g.is_constant() {
        return Ok((lead, Vec::new()));
    }
    let mut out = Vec::new();
    for (part, e) in squarefree_decomposition(&g)? {
        for (d, h) in ddf_unchecked(&part) {
            if h.degree() == Some(d) {
                out.push((h, e));
            } else {
                for fac in equal_degree_split(&h, d, rng)? {
                    out.push((fac, e));
                }
            }
        }
    }
    out.sort();
    Ok((lead, out))
}
