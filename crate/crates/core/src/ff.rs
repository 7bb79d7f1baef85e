//! Prime fields `F_p` and extension fields `F_{p^m}`.
//!
//! Elements are packed into a `u64`: for `m = 1` the residue itself, for
//! `m > 1` the coefficient vector `c_0 + c_1 x + ... + c_{m-1} x^{m-1}`
//! encoded in base `p` (`c_0` least significant). Since `q <= 2^31` by the
//! cardinality cap, every product of two residues fits in a `u64`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::arith::{is_prime, mul_mod};

/// Default upper bound on `q = p^m`.
pub const DEFAULT_CARDINALITY_CAP: u64 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error("field cardinality {p}^{m} exceeds cap {cap}")]
    CapExceeded { p: u64, m: usize, cap: u64 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct FieldData {
    p: u64,
    m: usize,
    q: u64,
    /// Monic modulus, low degree first, length `m + 1`. Empty when `m = 1`.
    modulus: Vec<u64>,
}

/// A finite field `F_q`, `q = p^m`. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldData>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}^{} mod [", self.0.p, self.0.m)?;
            for (i, c) in self.0.modulus.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, "]")
        }
    }
}

impl Field {
    /// Builds `F_{p^m}` under the default cardinality cap.
    pub fn new(p: u64, m: usize) -> Result<Self, FieldError> {
        Self::with_cap(p, m, DEFAULT_CARDINALITY_CAP)
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    pub fn with_cap(p: u64, m: usize, cap: u64) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if m == 0 || m > 64 {
            return Err(FieldError::DegreeOutOfRange(m));
        }
        let q = u32::try_from(m)
            .ok()
            .and_then(|e| p.checked_pow(e))
            .filter(|&q| q <= cap)
            .ok_or(FieldError::CapExceeded { p, m, cap })?;
        let modulus = if m == 1 {
            Vec::new()
        } else {
            smallest_irreducible(p, m)
        };
        Ok(Field(Arc::new(FieldData { p, m, q, modulus })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.m
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Monic modulus coefficients (low degree first); `None` for prime fields.
    pub fn modulus(&self) -> Option<&[u64]> {
        if self.0.m == 1 {
            None
        } else {
            Some(&self.0.modulus)
        }
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.m == 1
    }

    /// Embeds an integer through `Z -> F_p -> F_q`.
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.0.p as i64) as u64
    }

    /// Embeds an unsigned integer through `Z -> F_p -> F_q`.
    pub fn from_u64(&self, v: u64) -> u64 {
        v % self.0.p
    }

    /// Wraps a packed value as a checked element.
    pub fn elem(&self, v: u64) -> FieldElem {
        assert!(v < self.0.q, "packed value {v} outside field of order {}", self.0.q);
        FieldElem {
            field: self.clone(),
            value: v,
        }
    }

    /// Element from its coefficient vector over `F_p` (length at most `m`).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElem {
        assert!(coeffs.len() <= self.0.m);
        let mut v = 0;
        for &c in coeffs.iter().rev() {
            v = v * self.0.p + c % self.0.p;
        }
        self.elem(v)
    }

    /// All elements in packed order `0..q`.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.0.q
    }

    // Raw arithmetic on packed values. Callers guarantee the values are < q.

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.m == 1 {
            let s = a as u128 + b as u128;
            return if s >= p as u128 { (s - p as u128) as u64 } else { s as u64 };
        }
        self.map2(a, b, |x, y| (x + y) % p)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        if self.0.m == 1 {
            return if a >= b { a - b } else { a + p - b };
        }
        self.map2(a, b, |x, y| (x + p - y) % p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.0.m == 1 {
            return if self.0.p < 1 << 32 {
                a * b % self.0.p
            } else {
                mul_mod(a, b, self.0.p)
            };
        }
        let p = self.0.p;
        let m = self.0.m;
        let x = self.unpack(a);
        let y = self.unpack(b);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi * yj) % p;
            }
        }
        // reduce by the monic modulus
        let md = &self.0.modulus;
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..m {
                prod[k - m + i] = (prod[k - m + i] + (p - c) * md[i]) % p;
            }
            prod[k] = 0;
        }
        self.pack(&prod[..m])
    }

    pub fn pow(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if self.0.m == 1 {
            return Some(inv_mod(a, self.0.p));
        }
        Some(self.pack(&poly_inv_mod(&self.unpack(a), &self.0.modulus, self.0.p)))
    }

    /// Inverse Frobenius: the unique `b` with `b^p = a`, i.e. `a^(q/p)`.
    pub fn pth_root(&self, a: u64) -> u64 {
        if self.0.m == 1 {
            a
        } else {
            self.pow(a, self.0.q / self.0.p)
        }
    }

    fn unpack(&self, mut v: u64) -> Vec<u64> {
        let p = self.0.p;
        (0..self.0.m)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    fn pack(&self, coeffs: &[u64]) -> u64 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.0.p + c)
    }

    fn map2(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let p = self.0.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.0.m {
            out += f(a % p, b % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }

    pub(crate) fn coeff_vec(&self, v: u64) -> Vec<u64> {
        self.unpack(v)
    }
}

/// An element bound to its field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    field: Field,
    value: u64,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.is_prime_field() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{:?}", self.coefficients())
        }
    }
}

/// Binary and unary operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(u64),
    Inv,
}

impl FieldElem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Coefficient vector over `F_p`, length `m`.
    pub fn coefficients(&self) -> Vec<u64> {
        self.field.coeff_vec(self.value)
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        arith(self, other, ArithOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, FieldError> {
        arith(self, other, ArithOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        arith(self, other, ArithOp::Mul)
    }

    pub fn div(&self, other: &Self) -> Result<Self, FieldError> {
        arith(self, other, ArithOp::Div)
    }

    pub fn pow(&self, e: u64) -> Self {
        self.field.elem(self.field.pow(self.value, e))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        self.field
            .inv(self.value)
            .map(|v| self.field.elem(v))
            .ok_or(FieldError::DivisionByZero)
    }
}

/// Field arithmetic on checked elements. For the unary operations
/// (`Pow`, `Inv`) the second operand is ignored apart from the field check.
pub fn arith(a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem, FieldError> {
    a.same_field(b)?;
    let f = &a.field;
    let v = match op {
        ArithOp::Add => f.add(a.value, b.value),
        ArithOp::Sub => f.sub(a.value, b.value),
        ArithOp::Mul => f.mul(a.value, b.value),
        ArithOp::Div => {
            let bi = f.inv(b.value).ok_or(FieldError::DivisionByZero)?;
            f.mul(a.value, bi)
        }
        ArithOp::Pow(e) => f.pow(a.value, e),
        ArithOp::Inv => f.inv(a.value).ok_or(FieldError::DivisionByZero)?,
    };
    Ok(f.elem(v))
}

/// Summary used in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub p: u64,
    pub m: usize,
    pub q: u64,
    pub modulus: Option<Vec<u64>>,
}

impl From<&Field> for FieldInfo {
    fn from(f: &Field) -> Self {
        FieldInfo {
            p: f.characteristic(),
            m: f.degree(),
            q: f.order(),
            modulus: f.modulus().map(<[u64]>::to_vec),
        }
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (s0, s1) = (s1, s0 - qt * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(p as i128) as u64
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder and quotient over F_p, low degree first. `b` must be nonzero.
fn divrem_fp(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quo = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = mul_mod(r[k], lead_inv, p);
        if c == 0 {
            continue;
        }
        quo[k - db] = c;
        for i in 0..=db {
            r[k - db + i] = (r[k - db + i] + (p - mul_mod(c, b[i], p))) % p;
        }
    }
    trim(&mut r);
    trim(&mut quo);
    (quo, r)
}

fn mul_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

fn sub_fp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out: Vec<u64> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

/// Inverse of `a` modulo the irreducible `modulus` via extended Euclid.
fn poly_inv_mod(a: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let m = modulus.len() - 1;
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (qt, rem) = divrem_fp(&r0, &r1, p);
        let s2 = sub_fp(&s0, &mul_fp(&qt, &s1, p), p);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r0 is a nonzero constant since the modulus is irreducible
    debug_assert_eq!(r0.len(), 1);
    let c = inv_mod(r0[0], p);
    let mut out: Vec<u64> = s0.iter().map(|&x| mul_mod(x, c, p)).collect();
    out.resize(m, 0);
    out
}

/// Lexicographically smallest monic irreducible of degree `m` over `F_p`,
/// comparing coefficient tuples `(c_0, c_1, ..., c_{m-1})` from `c_0`.
fn smallest_irreducible(p: u64, m: usize) -> Vec<u64> {
    let base = Field(Arc::new(FieldData {
        p,
        m: 1,
        q: p,
        modulus: Vec::new(),
    }));
    let mut tuple = vec![0u64; m];
    loop {
        let mut coeffs = tuple.clone();
        coeffs.push(1);
        let f = crate::poly::Poly::new(&base, coeffs.clone());
        if crate::poly::is_irreducible(&f) {
            return coeffs;
        }
        // advance with c_{m-1} varying fastest
        let mut i = m;
        loop {
            assert!(i > 0, "no irreducible polynomial of degree {m} over F_{p}");
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < p {
                break;
            }
            tuple[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_no_modulus() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert!(f.modulus().is_none());
    }

    #[test]
    fn four_element_field_modulus() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.order(), 4);
        assert_eq!(f.modulus(), Some(&[1, 1, 1][..]));
    }

    #[test]
    fn rejects_composites_and_bad_degrees() {
        assert_eq!(Field::new(4, 1), Err(FieldError::NotPrime(4)));
        assert_eq!(Field::new(1, 1), Err(FieldError::NotPrime(1)));
        assert_eq!(Field::new(5, 0), Err(FieldError::DegreeOutOfRange(0)));
        assert!(matches!(
            Field::new(2, 40),
            Err(FieldError::CapExceeded { .. })
        ));
        assert!(matches!(
            Field::with_cap(101, 2, 10_000),
            Err(FieldError::CapExceeded { .. })
        ));
    }

    #[test]
    fn small_inverse_and_power() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.elem(3).inv().unwrap().value(), 5);
        let f67 = Field::prime(67).unwrap();
        assert_eq!(f67.elem(2).pow(33).value(), 66);
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.elem(0).inv(), Err(FieldError::DivisionByZero));
        assert_eq!(
            arith(&f5.elem(1), &f5.elem(0), ArithOp::Div),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let a = Field::prime(5).unwrap().elem(1);
        let b = Field::prime(7).unwrap().elem(1);
        assert_eq!(a.add(&b), Err(FieldError::FieldMismatch));
    }

    #[test]
    fn gf4_tables() {
        // With modulus x^2+x+1 and packing c0 + 2*c1: 0, 1, x=2, x+1=3.
        let f = Field::new(2, 2).unwrap();
        let add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        let mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(f.add(a as u64, b as u64), add[a][b]);
                assert_eq!(f.mul(a as u64, b as u64), mul[a][b]);
            }
        }
    }

    #[test]
    fn extension_moduli_are_irreducible_and_smallest() {
        // tuples (c0, c1, c2): x^3+x^2+1 = (1,0,1) precedes x^3+x+1 = (1,1,0)
        assert_eq!(Field::new(2, 3).unwrap().modulus(), Some(&[1, 0, 1, 1][..]));
        // over F_3: x^2+1 comes first (tuples (0,*) are reducible)
        assert_eq!(Field::new(3, 2).unwrap().modulus(), Some(&[1, 0, 1][..]));
    }

    #[test]
    fn field_axioms_in_extensions() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (2, 4), (7, 3)] {
            let f = Field::new(p, m).unwrap();
            let q = f.order();
            for a in 1..q {
                let ai = f.inv(a).unwrap();
                assert_eq!(f.mul(a, ai), 1);
                assert_eq!(f.pow(a, q - 1), 1);
                // Frobenius has order m
                let mut x = a;
                for _ in 0..m {
                    x = f.pow(x, p);
                }
                assert_eq!(x, a);
                assert_eq!(f.pow(f.pth_root(a), p), a);
            }
        }
    }

    #[test]
    fn from_coeffs_round_trip() {
        let f = Field::new(5, 3).unwrap();
        let e = f.from_coeffs(&[1, 2, 3]);
        assert_eq!(e.coefficients(), vec![1, 2, 3]);
        assert_eq!(e.value(), 1 + 2 * 5 + 3 * 25);
    }
}
