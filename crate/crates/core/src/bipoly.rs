//! Integer polynomials: `IntPoly` in one variable `T`, and `BiPoly`
//! `P(T, Y)` stored as a polynomial in `Y` with `Z[T]` coefficients.
//!
//! Discriminants with respect to `Y` are computed as Sylvester determinants
//! over `Z[T]` with fraction-free (Bareiss) elimination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::ff::Field;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BiPolyError {
    #[error("degree in Y is {0}, need at least 2")]
    DegreeTooSmall(usize),
    #[error("inexact division in Z[T]")]
    InexactDivision,
}

/// Dense polynomial over the integers, lowest degree first, trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact division in `Z[T]`.
    pub fn div_exact(&self, d: &Self) -> Result<Self, BiPolyError> {
        let dd = d.degree().ok_or(BiPolyError::InexactDivision)?;
        let mut r = self.coeffs.clone();
        if r.is_empty() {
            return Ok(Self::zero());
        }
        if r.len() <= dd {
            return Err(BiPolyError::InexactDivision);
        }
        let dl = d.lead();
        let mut quo = vec![BigInt::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let (c, rem) = r[k].div_rem(&dl);
            if !rem.is_zero() {
                return Err(BiPolyError::InexactDivision);
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k - dd + i] -= &c * di;
            }
            quo[k - dd] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(BiPolyError::InexactDivision);
        }
        Ok(Self::new(quo))
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) * a mod d`.
    fn prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let dl = d.lead();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            let mut shifted = vec![BigInt::zero(); shift];
            shifted.extend(d.coeffs.iter().map(|c| c * r.lead()));
            r = r.scale(&dl).sub(&Self::new(shifted));
        }
        r
    }

    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Primitive gcd over `Q[T]` (as a primitive integer polynomial).
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = o.primitive_part();
        while !b.is_zero() {
            let r = a.prem(&b).primitive_part();
            a = std::mem::replace(&mut b, r);
        }
        a
    }

    /// Squarefree part over `Q`, primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("primitive gcd divides")
            .primitive_part()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Reduction into the prime subfield of `field`.
    pub fn reduce(&self, field: &Field) -> Poly {
        Poly::new(
            field,
            self.coeffs.iter().map(|c| reduce_int(c, field)).collect(),
        )
    }

    /// Fmt with a chosen variable name.
    pub fn display_in(&self, var: &str) -> String {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            terms.push((c.clone(), monomial_str(&[(var, i)])));
        }
        join_terms(terms)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("T"))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("T"))
    }
}

pub(crate) fn reduce_int(c: &BigInt, field: &Field) -> u64 {
    let p = BigInt::from(field.characteristic());
    c.mod_floor(&p).to_u64().expect("residue fits")
}

fn monomial_str(vars: &[(&str, usize)]) -> String {
    vars.iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

fn join_terms(terms: Vec<(BigInt, String)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (c, mono)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if mono.is_empty() {
            s.push_str(&a.to_string());
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{a}*{mono}"));
        }
    }
    s
}

/// `P(T, Y) = sum_j c_j(T) Y^j` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    /// `ycoeffs[j]` is the coefficient of `Y^j`, a polynomial in `T`.
    ycoeffs: Vec<IntPoly>,
}

impl BiPoly {
    pub fn from_y_coeffs(mut ycoeffs: Vec<IntPoly>) -> Self {
        while ycoeffs.last().is_some_and(IntPoly::is_zero) {
            ycoeffs.pop();
        }
        BiPoly { ycoeffs }
    }

    /// From a coefficient matrix `c[i][j]` of `T^i Y^j`.
    pub fn from_matrix(c: &[Vec<i64>]) -> Self {
        let ny = c.iter().map(Vec::len).max().unwrap_or(0);
        let ycoeffs = (0..ny)
            .map(|j| {
                IntPoly::new(
                    c.iter()
                        .map(|row| BigInt::from(row.get(j).copied().unwrap_or(0)))
                        .collect(),
                )
            })
            .collect();
        Self::from_y_coeffs(ycoeffs)
    }

    /// From `(coeff, i, j)` triples meaning `coeff * T^i * Y^j`.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        let mut out = Self::zero();
        for &(c, i, j) in terms {
            out = out.add(&Self::monomial(BigInt::from(c), i, j));
        }
        out
    }

    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut t = vec![BigInt::zero(); i + 1];
        t[i] = c;
        let mut y = vec![IntPoly::zero(); j + 1];
        y[j] = IntPoly::new(t);
        Self::from_y_coeffs(y)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    /// Degree in `Y`; 0 for the zero polynomial.
    pub fn deg_y(&self) -> usize {
        self.ycoeffs.len().saturating_sub(1)
    }

    /// Degree in `T`; 0 for the zero polynomial.
    pub fn deg_t(&self) -> usize {
        self.ycoeffs
            .iter()
            .filter_map(IntPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Coefficient of `T^i Y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.ycoeffs.get(j).map(|c| c.coeff(i)).unwrap_or_default()
    }

    pub fn y_coeffs(&self) -> &[IntPoly] {
        &self.ycoeffs
    }

    /// Leading coefficient in `Y`, a polynomial in `T`.
    pub fn lead_y(&self) -> IntPoly {
        self.ycoeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.ycoeffs.len().max(o.ycoeffs.len());
        let z = IntPoly::zero();
        Self::from_y_coeffs(
            (0..n)
                .map(|j| {
                    self.ycoeffs
                        .get(j)
                        .unwrap_or(&z)
                        .add(o.ycoeffs.get(j).unwrap_or(&z))
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::from_y_coeffs(self.ycoeffs.iter().map(IntPoly::neg).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![IntPoly::zero(); self.ycoeffs.len() + o.ycoeffs.len() - 1];
        for (i, a) in self.ycoeffs.iter().enumerate() {
            for (j, b) in o.ycoeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_y_coeffs(out)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `dP/dY`.
    pub fn derivative_y(&self) -> Self {
        Self::from_y_coeffs(
            self.ycoeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c.scale(&BigInt::from(j)))
                .collect(),
        )
    }

    /// `P(t0, Y)` over the integers.
    pub fn specialize_int(&self, t0: &BigInt) -> IntPoly {
        IntPoly::new(self.ycoeffs.iter().map(|c| c.eval(t0)).collect())
    }

    /// Coefficients reduced mod `p`, lifted back to `[0, p)`.
    pub fn reduce_lift(&self, p: u64) -> Self {
        let pb = BigInt::from(p);
        Self::from_y_coeffs(
            self.ycoeffs
                .iter()
                .map(|c| IntPoly::new(c.coeffs().iter().map(|a| a.mod_floor(&pb)).collect()))
                .collect(),
        )
    }

    /// Precomputes the reduction of every coefficient into `field`.
    pub fn reduce(&self, field: &Field) -> ReducedBiPoly {
        ReducedBiPoly {
            field: field.clone(),
            rows: self.ycoeffs.iter().map(|c| c.reduce(field)).collect(),
        }
    }
}

impl fmt::Display for BiPoly {
    /// Terms by descending `Y` degree, then descending `T` degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (j, cj) in self.ycoeffs.iter().enumerate().rev() {
            for (i, c) in cj.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                terms.push((c.clone(), monomial_str(&[("T", i), ("Y", j)])));
            }
        }
        write!(f, "{}", join_terms(terms))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A `BiPoly` with coefficients reduced into a fixed finite field.
#[derive(Clone, Debug)]
pub struct ReducedBiPoly {
    field: Field,
    rows: Vec<Poly>,
}

/// Result of substituting `T = t0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    pub poly: Poly,
    /// The `Y`-leading coefficient vanished at `t0`.
    pub degree_drop: bool,
}

impl ReducedBiPoly {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// `P(t0, Y)` for a packed element `t0` of the field.
    pub fn specialize(&self, t0: u64) -> Specialization {
        let coeffs: Vec<u64> = self.rows.iter().map(|r| r.eval(t0)).collect();
        let degree_drop = coeffs.last().is_some_and(|&c| c == 0);
        Specialization {
            poly: Poly::new(&self.field, coeffs),
            degree_drop,
        }
    }
}

/// `P(t0, Y)` with `t0` in a finite field; integer coefficients are reduced
/// into the prime subfield first.
pub fn specialize(p: &BiPoly, t0: &crate::ff::FieldElem) -> Specialization {
    p.reduce(t0.field()).specialize(t0.value())
}

/// Fraction-free determinant of a square matrix over `Z[T]`.
pub fn det_bareiss(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::constant(BigInt::one());
    }
    let mut negate = false;
    let mut prev = IntPoly::constant(BigInt::one());
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Sylvester matrix of `a` and `b` as polynomials in `Y`.
pub fn sylvester(a: &BiPoly, b: &BiPoly) -> Vec<Vec<IntPoly>> {
    let m = a.deg_y();
    let k = b.deg_y();
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    for (src, shifts, deg) in [(a, k, m), (b, m, k)] {
        for s in 0..shifts {
            let mut row = vec![IntPoly::zero(); size];
            for d in 0..=deg {
                // highest power first
                row[s + d] = src.ycoeffs[deg - d].clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// `Res_Y(a, b)` as a Sylvester determinant.
pub fn resultant_y(a: &BiPoly, b: &BiPoly) -> IntPoly {
    det_bareiss(sylvester(a, b))
}

/// Discriminant of `P` with respect to `Y`:
/// `(-1)^(n(n-1)/2) Res_Y(P, dP/dY) / lc_Y(P)`.
pub fn disc_y(p: &BiPoly) -> Result<IntPoly, BiPolyError> {
    let n = p.deg_y();
    if p.is_zero() || n < 2 {
        return Err(BiPolyError::DegreeTooSmall(n));
    }
    let res = resultant_y(p, &p.derivative_y());
    let mut d = res.div_exact(&p.lead_y())?;
    if (n * (n - 1) / 2) % 2 == 1 {
        d = d.neg();
    }
    Ok(d)
}

/// Discriminant of `P mod p` over `F_p`, computed from the integer lift of
/// the reduced polynomial (so a `Y`-degree drop mod `p` is honored).
pub fn disc_y_mod(p: &BiPoly, field: &Field) -> Result<Poly, BiPolyError> {
    let lifted = p.reduce_lift(field.characteristic());
    Ok(disc_y(&lifted)?.reduce(field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    /// Cofactor expansion over Z[T], test-only oracle.
    fn det_laplace(m: &[Vec<IntPoly>]) -> IntPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = IntPoly::zero();
        for c in 0..n {
            if m[0][c].is_zero() {
                continue;
            }
            let minor: Vec<Vec<IntPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != c)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = m[0][c].mul(&det_laplace(&minor));
            acc = if c % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    #[test]
    fn quadratic_discriminant() {
        // Y^2 - T
        let p = BiPoly::from_terms(&[(1, 0, 2), (-1, 1, 0)]);
        assert_eq!(disc_y(&p).unwrap(), ip(&[0, 4]));
        assert_eq!(det_laplace(&sylvester(&p, &p.derivative_y())), ip(&[0, -4]));
    }

    #[test]
    fn cubic_trinomial_discriminant() {
        // Y^3 + Y - T: -4 - 27 T^2
        let p = BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)]);
        let d = disc_y(&p).unwrap();
        assert_eq!(d, ip(&[-4, 0, -27]));
        let s = sylvester(&p, &p.derivative_y());
        assert_eq!(det_bareiss(s.clone()), det_laplace(&s));
    }

    #[test]
    fn constant_in_t_and_small_degree() {
        let p = BiPoly::from_terms(&[(1, 0, 2), (-1, 0, 0)]);
        assert_eq!(disc_y(&p).unwrap(), ip(&[4]));
        let lin = BiPoly::from_terms(&[(1, 0, 1), (-1, 1, 0)]);
        assert_eq!(disc_y(&lin), Err(BiPolyError::DegreeTooSmall(1)));
    }

    #[test]
    fn bareiss_matches_laplace_on_nonmonic() {
        // T*Y^3 + (T^2+1)*Y^2 - 3Y + T - 2
        let p = BiPoly::from_terms(&[(1, 1, 3), (1, 2, 2), (1, 0, 2), (-3, 0, 1), (1, 1, 0), (-2, 0, 0)]);
        let s = sylvester(&p, &p.derivative_y());
        let det = det_bareiss(s.clone());
        assert_eq!(det, det_laplace(&s));
        // disc is Res / lc up to sign; lc = T divides Res
        assert!(disc_y(&p).is_ok());
    }

    #[test]
    fn reduce_mod_p_respects_degree_drop() {
        // 5Y^3 + Y^2 - T: mod 5 becomes Y^2 - T
        let p = BiPoly::from_terms(&[(5, 0, 3), (1, 0, 2), (-1, 1, 0)]);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(disc_y_mod(&p, &f5).unwrap(), ip(&[0, 4]).reduce(&f5));
    }

    #[test]
    fn specialize_examples() {
        let f5 = Field::prime(5).unwrap();
        let p = BiPoly::from_terms(&[(1, 0, 2), (-1, 1, 0)]);
        let s = specialize(&p, &f5.elem(3));
        assert_eq!(s.poly, Poly::from_ints(&f5, &[2, 0, 1]));
        assert!(!s.degree_drop);

        let q = BiPoly::from_terms(&[(1, 1, 2), (1, 0, 1), (1, 0, 0)]);
        let s = specialize(&q, &f5.elem(0));
        assert_eq!(s.poly, Poly::from_ints(&f5, &[1, 1]));
        assert!(s.degree_drop);

        let f7 = Field::prime(7).unwrap();
        let r = BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)]);
        assert_eq!(specialize(&r, &f7.elem(2)).poly, Poly::from_ints(&f7, &[5, 1, 0, 1]));
    }

    #[test]
    fn squarefree_part_and_gcd() {
        // 4T^2 -> T
        assert_eq!(ip(&[0, 0, 4]).squarefree_part(), ip(&[0, 1]));
        // (T-1)^2 (T+2) -> (T-1)(T+2)
        let f = ip(&[-1, 1]).mul(&ip(&[-1, 1])).mul(&ip(&[2, 1]));
        assert_eq!(f.squarefree_part(), ip(&[-1, 1]).mul(&ip(&[2, 1])));
        assert_eq!(ip(&[-4, 0, -27]).squarefree_part(), ip(&[4, 0, 27]));
        assert_eq!(ip(&[6, 12]).gcd(&ip(&[3, 6, 0])), ip(&[1, 2]));
    }

    #[test]
    fn display_forms() {
        let p = BiPoly::from_terms(&[(1, 0, 3), (1, 0, 1), (-1, 1, 0)]);
        assert_eq!(p.to_string(), "Y^3 + Y - T");
        let q = BiPoly::from_terms(&[(-3, 2, 1), (7, 0, 0)]);
        assert_eq!(q.to_string(), "-3*T^2*Y + 7");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }
}
