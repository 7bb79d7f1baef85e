//! Specialization census of a cover `P(T, Y) = 0` of the line over `F_q`,
//! the Tchebotarev-type estimate for each cycle type, and trinomial counts.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{factorial, is_prime};
use crate::bipoly::{disc_y, disc_y_mod, BiPoly, BiPolyError};
use crate::divisor::DegreeDivisor;
use crate::ff::{Field, FieldError, FieldInfo};
use crate::perm::class_size_sn;
use crate::poly::{degree_divisor, factor, is_irreducible, squarefree_decomposition, Poly, PolyError};

/// Default limit on the number of points a census will enumerate.
pub const DEFAULT_CENSUS_CAP: u64 = 1 << 31;

pub const BRANCH_BOUND_METHOD: &str =
    "upper bound: degree of the radical of disc_Y(P) plus one for infinity";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TchebError {
    #[error("discriminant in Y vanishes identically: the cover is inseparable or not reduced")]
    InseparableCover,
    #[error("Y-degree {0} is below 2")]
    DegreeTooSmall(usize),
    #[error("field has {q} elements, above the census cap {cap}")]
    CapExceeded { q: u64, cap: u64 },
    #[error("divisor {divisor} does not sum to the Y-degree {n}")]
    DivisorMismatch { divisor: String, n: usize },
    #[error("full factorization disagrees with distinct-degree data at t0 = {0}")]
    FactorMismatch(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<BiPolyError> for TchebError {
    fn from(e: BiPolyError) -> Self {
        match e {
            BiPolyError::DegreeTooSmall(n) => TchebError::DegreeTooSmall(n),
            BiPolyError::InexactDivision => TchebError::InseparableCover,
        }
    }
}

/// Degree of the product of the distinct irreducible factors of `f != 0`.
pub(crate) fn radical_degree(f: &Poly) -> usize {
    if f.is_constant() {
        return 0;
    }
    squarefree_decomposition(&f.monic())
        .expect("monic nonconstant")
        .iter()
        .map(|(g, _)| g.degree().unwrap_or(0))
        .sum()
}

/// `r` for `P` reduced into `field`.
pub fn branch_bound(p: &BiPoly, field: &Field) -> Result<usize, TchebError> {
    let disc = disc_y_mod(p, field)?;
    if disc.is_zero() {
        return Err(TchebError::InseparableCover);
    }
    Ok(radical_degree(&disc) + 1)
}

/// `r` for `P` over the rationals.
pub fn branch_bound_int(p: &BiPoly) -> Result<usize, TchebError> {
    let disc = disc_y(p)?;
    if disc.is_zero() {
        return Err(TchebError::InseparableCover);
    }
    Ok(disc.squarefree_part().degree().unwrap_or(0) + 1)
}

#[derive(Clone, Debug, Default)]
pub struct CensusOptions {
    /// Worker threads; 0 or 1 runs inline.
    pub threads: usize,
    /// When set, every unramified fiber is also fully factored with a
    /// ChaCha8 stream seeded from `seed + t0` and cross-checked.
    pub full_factor_seed: Option<u64>,
    pub assumed_geometric_monodromy: Option<String>,
    /// Overrides [`DEFAULT_CENSUS_CAP`].
    pub cap: Option<u64>,
}

/// Estimate check for one cycle type.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub divisor: DegreeDivisor,
    pub observed: u64,
    pub class_size: u128,
    /// `(q+1) * class_size / n!`
    pub main_term: f64,
    /// `r * n! * sqrt(q)`
    pub error_bound: f64,
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusReport {
    pub q: u64,
    pub field: FieldInfo,
    pub poly: String,
    pub n: usize,
    pub r: usize,
    pub branch_bound_method: &'static str,
    pub counts: BTreeMap<DegreeDivisor, u64>,
    pub ramified: u64,
    pub verdicts: Vec<Verdict>,
    /// Riemann-Hurwitz bound `(r - 2)(n! - 1)/2` on the genus of the Galois closure.
    pub genus_bound: f64,
    pub seed: Option<u64>,
    pub assumed_geometric_monodromy: Option<String>,
}

impl CensusReport {
    pub fn count(&self, t: &DegreeDivisor) -> u64 {
        self.counts.get(t).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum::<u64>() + self.ramified
    }

    pub fn verdict(&self, t: &DegreeDivisor) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| &v.divisor == t)
    }
}

/// Counts unramified `t0 in F_q` by the degree divisor of `P(t0, Y)`.
/// Fibers where the `Y`-degree drops or that are not squarefree go to the
/// ramified bucket. Results do not depend on `threads`.
pub fn census(p: &BiPoly, field: &Field, opts: &CensusOptions) -> Result<CensusReport, TchebError> {
    let q = field.order();
    let cap = opts.cap.unwrap_or(DEFAULT_CENSUS_CAP);
    if q > cap {
        return Err(TchebError::CapExceeded { q, cap });
    }
    let lifted = p.reduce_lift(field.characteristic());
    let n = lifted.deg_y();
    if n < 2 {
        return Err(TchebError::DegreeTooSmall(n));
    }
    let r = branch_bound(p, field)?;
    let reduced = p.reduce(field);

    let scan = |lo: u64, hi: u64| -> Result<(BTreeMap<DegreeDivisor, u64>, u64), TchebError> {
        let mut counts = BTreeMap::new();
        let mut ramified = 0u64;
        for t0 in lo..hi {
            let s = reduced.specialize(t0);
            if s.degree_drop || !s.poly.is_squarefree() {
                ramified += 1;
                continue;
            }
            let d = degree_divisor(&s.poly)?;
            if let Some(seed) = opts.full_factor_seed {
                let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t0));
                let (_, facs) = factor(&s.poly, &mut rng)?;
                let degs = facs.iter().map(|(f, _)| f.degree().unwrap_or(0)).collect();
                if DegreeDivisor::new(degs).ok().as_ref() != Some(&d) {
                    return Err(TchebError::FactorMismatch(t0));
                }
            }
            *counts.entry(d).or_insert(0) += 1;
        }
        Ok((counts, ramified))
    };

    let (counts, ramified) = if opts.threads <= 1 {
        scan(0, q)?
    } else {
        let chunks = (opts.threads as u64 * 4).min(q.max(1));
        let step = q.div_ceil(chunks);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        let parts: Vec<_> = pool.install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| scan((c * step).min(q), ((c + 1) * step).min(q)))
                .collect::<Result<Vec<_>, _>>()
        })?;
        let mut counts = BTreeMap::new();
        let mut ramified = 0;
        for (c, r) in parts {
            for (k, v) in c {
                *counts.entry(k).or_insert(0) += v;
            }
            ramified += r;
        }
        (counts, ramified)
    };

    let nf = factorial(n);
    let mut report = CensusReport {
        q,
        field: FieldInfo::from(field),
        poly: p.to_string(),
        n,
        r,
        branch_bound_method: BRANCH_BOUND_METHOD,
        counts,
        ramified,
        verdicts: Vec::new(),
        genus_bound: (r as f64 - 2.0) * (nf as f64 - 1.0) / 2.0,
        seed: opts.full_factor_seed,
        assumed_geometric_monodromy: opts.assumed_geometric_monodromy.clone(),
    };
    report.verdicts = DegreeDivisor::partitions(n)
        .iter()
        .map(|t| tcheb_check(&report, t))
        .collect::<Result<_, _>>()?;
    Ok(report)
}

/// `|N - (q+1)|t|/n!| <= r n! sqrt(q)`, decided exactly as
/// `(N n! - (q+1)|t|)^2 <= r^2 (n!)^4 q`.
pub fn tcheb_check(report: &CensusReport, t: &DegreeDivisor) -> Result<Verdict, TchebError> {
    let n = report.n;
    if t.total() != n {
        return Err(TchebError::DivisorMismatch {
            divisor: t.to_string(),
            n,
        });
    }
    let observed = report.count(t);
    let class_size = class_size_sn(t);
    let nf = factorial(n);
    let q = report.q;
    let lhs = BigInt::from(observed) * BigInt::from(nf) - BigInt::from(q + 1) * BigInt::from(class_size);
    let rhs = BigInt::from(report.r).pow(2) * BigInt::from(nf).pow(4) * BigInt::from(q);
    let pass = lhs.abs().pow(2) <= rhs;
    let main_term = (q as f64 + 1.0) * class_size as f64 / nf as f64;
    Ok(Verdict {
        divisor: t.clone(),
        observed,
        class_size,
        main_term,
        error_bound: report.r as f64 * nf as f64 * (q as f64).sqrt(),
        deviation: (observed as f64 - main_term).abs(),
        pass,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChowlaCount {
    pub n: usize,
    pub p: u64,
    pub count: u64,
    /// `p / n`
    pub expected: f64,
    /// `p | n(n-1)`: the asymptotic statement does not apply.
    pub hypothesis_fails: bool,
}

/// Number of `a in F_p` with `Y^n + Y + a` irreducible.
pub fn chowla_count(n: usize, p: u64) -> Result<ChowlaCount, TchebError> {
    if n < 2 {
        return Err(TchebError::DegreeTooSmall(n));
    }
    if !is_prime(p) {
        return Err(TchebError::NotPrime(p));
    }
    let field = Field::prime(p)?;
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    coeffs[1] = field.add(coeffs[1], 1);
    let mut count = 0;
    for a in 0..p {
        coeffs[0] = a;
        if is_irreducible(&Poly::new(&field, coeffs.clone())) {
            count += 1;
        }
    }
    let nn = n as u64;
    Ok(ChowlaCount {
        n,
        p,
        count,
        expected: p as f64 / n as f64,
        hypothesis_fails: (nn * (nn - 1)).is_multiple_of(p),
    })
}

/// Chowla count with the estimate `|count - (p+1)/n| <= r n! sqrt(p)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChowlaVerdict {
    #[serde(flatten)]
    pub count: ChowlaCount,
    /// `(p+1)/n`, the main term for the class of `n`-cycles.
    pub main_term: f64,
    pub error_bound: f64,
    pub pass: bool,
}

/// The trinomial cover `Y^n + Y - T`.
pub fn trinomial(n: usize) -> BiPoly {
    BiPoly::from_terms(&[(1, 0, n), (1, 0, 1), (-1, 1, 0)])
}

/// [`chowla_count`] over `primes`, with verdicts, in input order.
pub fn chowla_sweep(n: usize, primes: &[u64], threads: usize) -> Result<Vec<ChowlaVerdict>, TchebError> {
    let r = branch_bound_int(&trinomial(n))?;
    let nf = factorial(n);
    let one = |&p: &u64| -> Result<ChowlaVerdict, TchebError> {
        let c = chowla_count(n, p)?;
        // |count*n - (p+1)| <= r n! n sqrt(p), squared
        let lhs = BigInt::from(c.count) * BigInt::from(n) - BigInt::from(p + 1);
        let rhs = BigInt::from(r).pow(2) * BigInt::from(nf).pow(2) * BigInt::from(n).pow(2) * BigInt::from(p);
        Ok(ChowlaVerdict {
            main_term: (p as f64 + 1.0) / n as f64,
            error_bound: r as f64 * nf as f64 * (p as f64).sqrt(),
            pass: lhs.pow(2) <= rhs,
            count: c,
        })
    };
    if threads <= 1 {
        return primes.iter().map(one).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| primes.par_iter().map(one).collect())
}
