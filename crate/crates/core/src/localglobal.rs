//! Local conditions at good primes, their assembly into arithmetic
//! progressions of specialization points over `Q`, and mod-`p'`
//! irreducibility certificates for the specialized polynomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{factorial, is_prime, primes_in};
use crate::bipoly::{disc_y, BiPoly, BiPolyError, IntPoly, ReducedBiPoly};
use crate::divisor::DegreeDivisor;
use crate::ff::{Field, FieldError};
use crate::perm::{conjugacy_classes, cycle_type, PermGroup};
use crate::poly::{degree_divisor, is_irreducible};

/// Default cap on certificate primes.
pub const DEFAULT_CERT_CAP: u64 = 10_000;
/// How far past the floor [`beta_plans`] looks for primes.
pub const DEFAULT_PRIME_WINDOW: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("discriminant in Y vanishes identically")]
    InseparableCover,
    #[error("Y-degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} is bad: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("divisor {divisor} does not sum to the Y-degree {n}")]
    DivisorMismatch { divisor: String, n: usize },
    #[error("no residue mod {p} has degree divisor {target}{}", if *theory_violated { " although p is good and above the bound (falsification)" } else { "" })]
    NoResidue {
        p: u64,
        target: String,
        m0: u128,
        /// `p >= m0` and `p` good: the existence statement predicts a residue.
        theory_violated: bool,
    },
    #[error("found {found} of {needed} good primes in the search window")]
    NotEnoughPrimes { needed: usize, found: usize },
    #[error("prime {0} appears in more than one plan")]
    DuplicatePrime(u64),
    #[error("residue {b} mod {p} gives {observed}, not {target}")]
    ResidueMismatch {
        p: u64,
        b: u64,
        target: String,
        observed: String,
    },
    #[error("leading Y-coefficient vanishes at t0 = {0}")]
    DegreeDrop(BigInt),
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl From<BiPolyError> for LocalError {
    fn from(e: BiPolyError) -> Self {
        match e {
            BiPolyError::DegreeTooSmall(n) => LocalError::DegreeTooSmall(n),
            BiPolyError::InexactDivision => LocalError::InseparableCover,
        }
    }
}

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// An integer cover `P(T, Y)` with its discriminant data precomputed.
#[derive(Clone, Debug)]
pub struct Cover {
    poly: BiPoly,
    n: usize,
    disc: IntPoly,
    radical: IntPoly,
    r: usize,
}

impl Cover {
    pub fn new(poly: BiPoly) -> Result<Self, LocalError> {
        let n = poly.deg_y();
        let disc = disc_y(&poly)?;
        if disc.is_zero() {
            return Err(LocalError::InseparableCover);
        }
        let radical = disc.squarefree_part();
        let r = radical.degree().unwrap_or(0) + 1;
        Ok(Cover {
            poly,
            n,
            disc,
            radical,
            r,
        })
    }

    pub fn poly(&self) -> &BiPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn disc(&self) -> &IntPoly {
        &self.disc
    }

    pub fn branch_bound(&self) -> usize {
        self.r
    }

    /// `4 r^2 (n!)^2`, saturating.
    pub fn bound_m0(&self) -> u128 {
        let nf = factorial(self.n.min(34));
        4u128
            .saturating_mul((self.r as u128).pow(2))
            .saturating_mul(nf.saturating_mul(nf))
    }

    fn check_target(&self, t: &DegreeDivisor) -> Result<(), LocalError> {
        if t.total() != self.n {
            return Err(LocalError::DivisorMismatch {
                divisor: t.to_string(),
                n: self.n,
            });
        }
        Ok(())
    }
}

/// The checks behind calling a prime good.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Goodness {
    pub p: u64,
    /// `p` does not divide the content of the leading `Y`-coefficient.
    pub leading_coefficient_kept: bool,
    /// `disc_Y(P) mod p` has the same degree as over `Z`.
    pub disc_degree_kept: bool,
    /// The radical of `disc_Y(P)` stays squarefree mod `p`.
    pub radical_squarefree: bool,
}

impl Goodness {
    pub fn is_good(&self) -> bool {
        self.leading_coefficient_kept && self.disc_degree_kept && self.radical_squarefree
    }
}

pub fn prime_goodness(cover: &Cover, p: u64) -> Result<Goodness, LocalError> {
    if !is_prime(p) {
        return Err(LocalError::NotPrime(p));
    }
    let field = Field::prime(p)?;
    let lead = cover.poly.lead_y();
    let pb = BigInt::from(p);
    let leading_coefficient_kept = !(lead.content() % &pb).is_zero();
    let disc_degree_kept = cover.disc.reduce(&field).degree() == cover.disc.degree();
    let rad = cover.radical.reduce(&field);
    let radical_squarefree =
        rad.degree() == cover.radical.degree() && (rad.is_constant() || rad.is_squarefree());
    Ok(Goodness {
        p,
        leading_coefficient_kept,
        disc_degree_kept,
        radical_squarefree,
    })
}

/// Good primes in `[lo, hi]` with their certificates.
pub fn good_primes(cover: &Cover, lo: u64, hi: u64) -> Vec<Goodness> {
    primes_in(lo, hi)
        .map(|p| prime_goodness(cover, p).expect("p is prime"))
        .filter(Goodness::is_good)
        .collect()
}

/// A residue class mod `p` realizing a target degree divisor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePlan {
    pub p: u64,
    pub target: DegreeDivisor,
    pub b: u64,
    pub goodness: Goodness,
    /// `p >= 4 r^2 (n!)^2`
    pub above_bound: bool,
}

/// Degree divisor of `P(t0, Y) mod p`, or `None` when the fiber is ramified
/// (degree drop or repeated factor).
fn fiber_divisor(reduced: &ReducedBiPoly, t0: u64) -> Option<DegreeDivisor> {
    let s = reduced.specialize(t0);
    if s.degree_drop || !s.poly.is_squarefree() {
        return None;
    }
    degree_divisor(&s.poly).ok()
}

/// Smallest `b in [0, p)` whose fiber mod `p` is squarefree with degree
/// divisor `target`.
pub fn find_residue(cover: &Cover, p: u64, target: &DegreeDivisor) -> Result<PrimePlan, LocalError> {
    cover.check_target(target)?;
    let goodness = prime_goodness(cover, p)?;
    if !goodness.is_good() {
        return Err(LocalError::BadPrime {
            p,
            reason: format!("{goodness:?}"),
        });
    }
    let field = Field::prime(p)?;
    let reduced = cover.poly.reduce(&field);
    let m0 = cover.bound_m0();
    let above_bound = p as u128 >= m0;
    for b in 0..p {
        if fiber_divisor(&reduced, b).as_ref() == Some(target) {
            return Ok(PrimePlan {
                p,
                target: target.clone(),
                b,
                goodness,
                above_bound,
            });
        }
    }
    Err(LocalError::NoResidue {
        p,
        target: target.to_string(),
        m0,
        theory_violated: above_bound,
    })
}

/// Plan for a given residue `b`, checked to realize `target` mod `p`.
pub fn plan_at(cover: &Cover, p: u64, b: u64, target: &DegreeDivisor) -> Result<PrimePlan, LocalError> {
    cover.check_target(target)?;
    let goodness = prime_goodness(cover, p)?;
    if !goodness.is_good() {
        return Err(LocalError::BadPrime {
            p,
            reason: format!("{goodness:?}"),
        });
    }
    let b = b % p;
    let observed = fiber_divisor(&cover.poly.reduce(&Field::prime(p)?), b);
    if observed.as_ref() != Some(target) {
        return Err(LocalError::ResidueMismatch {
            p,
            b,
            target: target.to_string(),
            observed: observed.map_or("a ramified fiber".into(), |d| d.to_string()),
        });
    }
    Ok(PrimePlan {
        p,
        target: target.clone(),
        b,
        goodness,
        above_bound: p as u128 >= cover.bound_m0(),
    })
}

/// Frequencies of the degree divisors seen at all unramified `t0 mod p`,
/// over the given primes.
pub fn observed_types(cover: &Cover, primes: &[u64]) -> Result<BTreeMap<DegreeDivisor, u64>, LocalError> {
    let mut out = BTreeMap::new();
    for &p in primes {
        if !is_prime(p) {
            return Err(LocalError::NotPrime(p));
        }
        let reduced = cover.poly.reduce(&Field::prime(p)?);
        for t0 in 0..p {
            if let Some(d) = fiber_divisor(&reduced, t0) {
                *out.entry(d).or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// Cycle types of one representative per nontrivial conjugacy class.
pub fn nontrivial_class_types(gbar: &PermGroup) -> Vec<DegreeDivisor> {
    conjugacy_classes(gbar)
        .iter()
        .skip(1)
        .map(|c| cycle_type(&c[0]))
        .collect()
}

/// One plan per class type on distinct good primes at or above
/// `max(floor, m0)`, taken in increasing order.
pub fn beta_plans(
    cover: &Cover,
    class_types: &[DegreeDivisor],
    floor: u64,
) -> Result<Vec<PrimePlan>, LocalError> {
    for t in class_types {
        cover.check_target(t)?;
    }
    let start = u64::try_from(cover.bound_m0()).unwrap_or(u64::MAX).max(floor);
    let end = start.saturating_add(DEFAULT_PRIME_WINDOW);
    let mut plans = Vec::with_capacity(class_types.len());
    let mut primes = primes_in(start, end);
    for t in class_types {
        let plan = loop {
            let Some(p) = primes.next() else {
                return Err(LocalError::NotEnoughPrimes {
                    needed: class_types.len(),
                    found: plans.len(),
                });
            };
            if !prime_goodness(cover, p)?.is_good() {
                continue;
            }
            break find_residue(cover, p, t)?;
        };
        plans.push(plan);
    }
    Ok(plans)
}

/// `t0 = a m + b` realizing every plan's local condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Progression {
    #[serde(serialize_with = "ser_big")]
    pub a: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub b: BigInt,
    /// Product of the auxiliary primes.
    #[serde(serialize_with = "ser_big")]
    pub beta: BigInt,
    pub plans: Vec<PrimePlan>,
    pub beta_plans: Vec<PrimePlan>,
}

impl Progression {
    pub fn all_plans(&self) -> impl Iterator<Item = &PrimePlan> {
        self.plans.iter().chain(&self.beta_plans)
    }

    pub fn term(&self, m: u64) -> BigInt {
        &self.a * BigInt::from(m) + &self.b
    }
}

/// Chinese remaindering over all plans.
pub fn build_progression(
    plans: &[PrimePlan],
    beta_plans: &[PrimePlan],
) -> Result<Progression, LocalError> {
    let mut seen = BTreeSet::new();
    let mut a = BigInt::one();
    let mut b = BigInt::zero();
    for plan in plans.iter().chain(beta_plans) {
        if !seen.insert(plan.p) {
            return Err(LocalError::DuplicatePrime(plan.p));
        }
        let p = BigInt::from(plan.p);
        // b + a*k = b_p (mod p)  =>  k = (b_p - b) * a^-1 (mod p)
        let inv = mod_inverse(&(&a % &p), &p);
        let k = ((BigInt::from(plan.b) - &b) * inv).mod_floor(&p);
        b += &a * k;
        a *= &p;
    }
    let beta = beta_plans.iter().map(|pl| BigInt::from(pl.p)).product();
    Ok(Progression {
        a,
        b,
        beta,
        plans: plans.to_vec(),
        beta_plans: beta_plans.to_vec(),
    })
}

fn mod_inverse(x: &BigInt, p: &BigInt) -> BigInt {
    let e = x.extended_gcd(p);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(p)
}

/// Smallest prime `p' <= cap` with `P(t0, Y) mod p'` irreducible of full
/// degree, which certifies irreducibility over `Q`.
pub fn hilbert_certificate(cover: &Cover, t0: &BigInt, cap: u64) -> Result<Option<u64>, LocalError> {
    let f = cover.poly.specialize_int(t0);
    if f.degree() != Some(cover.n) {
        return Err(LocalError::DegreeDrop(t0.clone()));
    }
    for p in primes_in(2, cap) {
        let field = Field::prime(p)?;
        let g = f.reduce(&field);
        if g.degree() == Some(cover.n) && is_irreducible(&g) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCheck {
    pub p: u64,
    pub target: DegreeDivisor,
    /// `None` when the fiber mod `p` is ramified.
    pub observed: Option<DegreeDivisor>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleCheck {
    #[serde(serialize_with = "ser_big")]
    pub t0: BigInt,
    pub unramified: bool,
    pub locals: Vec<LocalCheck>,
    /// Certificate prime; `None` is inconclusive.
    pub certificate: Option<u64>,
    pub degree_drop: bool,
}

impl SampleCheck {
    pub fn hard_failure(&self) -> bool {
        !self.unramified || self.degree_drop || self.locals.iter().any(|l| !l.ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProgressionReport {
    pub samples: Vec<SampleCheck>,
    pub hard_failures: usize,
    pub inconclusive: usize,
    pub pass: bool,
}

/// Checks `t0 = a m + b` for `m = 0..samples`: the fiber over `t0` is
/// unramified, every plan's local divisor is realized, and a certificate
/// of irreducibility is sought below `cert_cap`.
pub fn verify_progression(
    cover: &Cover,
    prog: &Progression,
    samples: u64,
    cert_cap: u64,
) -> Result<ProgressionReport, LocalError> {
    let fields = prog
        .all_plans()
        .map(|pl| Field::prime(pl.p).map(|f| (pl, cover.poly.reduce(&f))))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = Vec::with_capacity(samples as usize);
    for m in 0..samples {
        let t0 = prog.term(m);
        let unramified = !cover.disc.eval(&t0).is_zero();
        let locals = fields
            .iter()
            .map(|(pl, reduced)| {
                let t = t0.mod_floor(&BigInt::from(pl.p)).to_u64().expect("below p");
                let observed = fiber_divisor(reduced, t);
                LocalCheck {
                    p: pl.p,
                    target: pl.target.clone(),
                    ok: observed.as_ref() == Some(&pl.target),
                    observed,
                }
            })
            .collect();
        let (certificate, degree_drop) = match hilbert_certificate(cover, &t0, cert_cap) {
            Ok(c) => (c, false),
            Err(LocalError::DegreeDrop(_)) => (None, true),
            Err(e) => return Err(e),
        };
        out.push(SampleCheck {
            t0,
            unramified,
            locals,
            certificate,
            degree_drop,
        });
    }
    let hard_failures = out.iter().filter(|s| s.hard_failure()).count();
    let inconclusive = out
        .iter()
        .filter(|s| !s.hard_failure() && s.certificate.is_none())
        .count();
    Ok(ProgressionReport {
        samples: out,
        hard_failures,
        inconclusive,
        pass: hard_failures == 0,
    })
}

impl ProgressionReport {
    pub fn all_certified(&self) -> bool {
        self.samples.iter().all(|s| s.certificate.is_some())
    }
}
