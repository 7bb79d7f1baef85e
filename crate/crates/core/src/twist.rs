//! Finite-group model of the twisting lemma.
//!
//! A [`TwistProblem`] packages a group `G`, a normal subgroup `Gbar`, a
//! subgroup `H`, actions `nu: G -> S_n` and `mu: H -> S_n`, and an
//! automorphism `chibar` of `G/Gbar`. The functions here enumerate the
//! isomorphisms `H -> H'` inducing `chibar`, reduce them modulo conjugation by
//! `Gbar`, and test which classes make `nu o chi` conjugate to `mu`.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::perm::{
    centralizer_order, cycle_type, generate, hom_from_images, is_normal, simultaneous_conjugacy,
    GroupError, GroupHom, Perm, PermGroup,
};

/// Bound on generator-image combinations tried by [`enumerate_isoms`].
pub const CANDIDATE_CAP: u64 = 10_000_000;
/// Largest `|H|` accepted by the exhaustive searches.
pub const MAX_H_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("the geometric subgroup is not normal in G")]
    NotNormal,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("(const/comp) fails: {0}")]
    ConstCompFails(String),
    #[error("search too large: {0}")]
    SearchTooLarge(String),
    #[error("specialization datum is inconsistent: {0}")]
    ModelInvariantViolated(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("hypothesis fails: {0}")]
    HypothesisFails(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `G/Gbar` with cosets numbered by least element; the trivial coset is 0.
#[derive(Clone, Debug)]
pub struct Quotient {
    g: PermGroup,
    coset_of: Vec<usize>,
    reps: Vec<Perm>,
}

impl Quotient {
    pub fn new(g: &PermGroup, gbar: &PermGroup) -> Self {
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for (i, x) in g.elements().iter().enumerate() {
            if coset_of[i] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x.clone());
            for y in gbar.elements() {
                let j = g.index_of(&x.compose(y)).expect("Gbar inside G");
                coset_of[j] = id;
            }
        }
        Quotient {
            g: g.clone(),
            coset_of,
            reps,
        }
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Coset index of `x`; `None` outside `G`.
    pub fn coset(&self, x: &Perm) -> Option<usize> {
        self.g.index_of(x).map(|i| self.coset_of[i])
    }

    pub fn representative(&self, c: usize) -> &Perm {
        &self.reps[c]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.coset(&self.reps[a].compose(&self.reps[b]))
            .expect("closed")
    }
}

/// The automorphism of `G/Gbar`, either the identity or a table of
/// `(x, y)` pairs meaning `x Gbar -> y Gbar`, one pair per coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiBar {
    Identity,
    Table(Vec<(Perm, Perm)>),
}

/// Result of [`check_const_comp`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstComp {
    pub holds: bool,
    pub diagnostic: Option<String>,
}

fn resolve_chibar(q: &Quotient, chibar: &ChiBar) -> Result<Vec<usize>, String> {
    let k = q.order();
    let map: Vec<usize> = match chibar {
        ChiBar::Identity => (0..k).collect(),
        ChiBar::Table(pairs) => {
            let mut map = vec![usize::MAX; k];
            for (x, y) in pairs {
                let cx = q.coset(x).ok_or_else(|| format!("{x} is not in G"))?;
                let cy = q.coset(y).ok_or_else(|| format!("{y} is not in G"))?;
                if map[cx] != usize::MAX {
                    return Err(format!("coset of {x} is given twice"));
                }
                map[cx] = cy;
            }
            if let Some(c) = map.iter().position(|&v| v == usize::MAX) {
                return Err(format!("coset of {} has no image", q.representative(c)));
            }
            map
        }
    };
    let mut hit = vec![false; k];
    for (c, &v) in map.iter().enumerate() {
        if hit[v] {
            return Err(format!(
                "not injective: coset of {} collides",
                q.representative(c)
            ));
        }
        hit[v] = true;
    }
    for a in 0..k {
        for b in 0..k {
            if map[q.mul(a, b)] != q.mul(map[a], map[b]) {
                return Err(format!(
                    "not multiplicative on the cosets of {} and {}",
                    q.representative(a),
                    q.representative(b)
                ));
            }
        }
    }
    Ok(map)
}

fn check_structure(g: &PermGroup, gbar: &PermGroup, h: &PermGroup) -> Result<(), TwistError> {
    for (name, sub) in [("Gbar", gbar), ("H", h)] {
        if sub.degree() != g.degree() {
            return Err(GroupError::DegreeMismatch(g.degree(), sub.degree()).into());
        }
        if let Some(x) = sub.elements().iter().find(|x| !g.contains(x)) {
            return Err(TwistError::NotSubgroup(format!("{name} contains {x} outside G")));
        }
    }
    if !is_normal(gbar, g)? {
        return Err(TwistError::NotNormal);
    }
    Ok(())
}

fn const_comp_inner(q: &Quotient, h: &PermGroup, chibar: &ChiBar) -> ConstComp {
    let mut hit = vec![false; q.order()];
    for x in h.elements() {
        hit[q.coset(x).expect("H inside G")] = true;
    }
    if let Some(c) = hit.iter().position(|&b| !b) {
        return ConstComp {
            holds: false,
            diagnostic: Some(format!(
                "H*Gbar != G: the coset of {} is not met by H",
                q.representative(c)
            )),
        };
    }
    match resolve_chibar(q, chibar) {
        Ok(_) => ConstComp {
            holds: true,
            diagnostic: None,
        },
        Err(d) => ConstComp {
            holds: false,
            diagnostic: Some(format!("chibar is not an automorphism of G/Gbar: {d}")),
        },
    }
}

/// True iff `H*Gbar = G` and `chibar` is an automorphism table of `G/Gbar`.
pub fn check_const_comp(
    g: &PermGroup,
    gbar: &PermGroup,
    h: &PermGroup,
    chibar: &ChiBar,
) -> Result<ConstComp, TwistError> {
    check_structure(g, gbar, h)?;
    Ok(const_comp_inner(&Quotient::new(g, gbar), h, chibar))
}

#[derive(Clone, Debug)]
pub struct TwistProblem {
    n: usize,
    g: PermGroup,
    gbar: PermGroup,
    h: PermGroup,
    nu: GroupHom,
    mu: GroupHom,
    chibar: ChiBar,
    quotient: Quotient,
    const_comp: ConstComp,
    /// Coset map of `chibar`, present when (const/comp) holds.
    chibar_map: Option<Vec<usize>>,
    sn: PermGroup,
}

impl TwistProblem {
    /// Validates the structural invariants. (const/comp) itself is recorded,
    /// not enforced; operations that need it fail with `ConstCompFails`.
    pub fn new(
        n: usize,
        g: PermGroup,
        gbar: PermGroup,
        h: PermGroup,
        nu: GroupHom,
        mu: GroupHom,
        chibar: ChiBar,
    ) -> Result<Self, TwistError> {
        check_structure(&g, &gbar, &h)?;
        if nu.domain() != &g {
            return Err(TwistError::BadInput("nu must be defined on G".into()));
        }
        if mu.domain() != &h {
            return Err(TwistError::BadInput("mu must be defined on H".into()));
        }
        for d in [nu.codomain_degree(), mu.codomain_degree()] {
            if d != n {
                return Err(GroupError::DegreeMismatch(n, d).into());
            }
        }
        let quotient = Quotient::new(&g, &gbar);
        let const_comp = const_comp_inner(&quotient, &h, &chibar);
        let chibar_map = if const_comp.holds {
            resolve_chibar(&quotient, &chibar).ok()
        } else {
            None
        };
        let sn = PermGroup::symmetric(n)?;
        Ok(TwistProblem {
            n,
            g,
            gbar,
            h,
            nu,
            mu,
            chibar,
            quotient,
            const_comp,
            chibar_map,
            sn,
        })
    }

    /// `G = Gbar = S_n`, `nu` the identity, `H` generated by `gens`, and `mu`
    /// the natural action of `H`.
    pub fn symmetric(n: usize, h_gens: &[Perm]) -> Result<Self, TwistError> {
        let g = PermGroup::symmetric(n)?;
        let h = generate(n, h_gens)?;
        let nu = GroupHom::inclusion(&g);
        let mu = GroupHom::inclusion(&h);
        Self::new(n, g.clone(), g, h, nu, mu, ChiBar::Identity)
    }

    pub fn degree(&self) -> usize {
        self.n
    }
    pub fn g(&self) -> &PermGroup {
        &self.g
    }
    pub fn gbar(&self) -> &PermGroup {
        &self.gbar
    }
    pub fn h(&self) -> &PermGroup {
        &self.h
    }
    pub fn nu(&self) -> &GroupHom {
        &self.nu
    }
    pub fn mu(&self) -> &GroupHom {
        &self.mu
    }
    pub fn chibar(&self) -> &ChiBar {
        &self.chibar
    }
    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }
    pub fn const_comp(&self) -> &ConstComp {
        &self.const_comp
    }

    fn chibar_map(&self) -> Result<&[usize], TwistError> {
        self.chibar_map.as_deref().ok_or_else(|| {
            TwistError::ConstCompFails(
                self.const_comp
                    .diagnostic
                    .clone()
                    .unwrap_or_else(|| "unknown".into()),
            )
        })
    }

    /// Whether `chi: H -> G` induces `chibar` on every element of `H`.
    pub fn induces_chibar(&self, chi: &GroupHom) -> Result<bool, TwistError> {
        let map = self.chibar_map()?;
        Ok(self.h.elements().iter().zip(chi.table()).all(|(x, y)| {
            match (self.quotient.coset(x), self.quotient.coset(y)) {
                (Some(cx), Some(cy)) => map[cx] == cy,
                _ => false,
            }
        }))
    }

    /// Candidate images for each generator of `H`: elements of `G` in the
    /// coset prescribed by `chibar`, filtered by `keep`.
    fn generator_candidates(
        &self,
        keep: impl Fn(&Perm, &Perm) -> bool,
    ) -> Result<Vec<Vec<Perm>>, TwistError> {
        let map = self.chibar_map()?;
        if self.h.order() > MAX_H_ORDER {
            return Err(TwistError::SearchTooLarge(format!(
                "|H| = {} exceeds {MAX_H_ORDER}",
                self.h.order()
            )));
        }
        let cands: Vec<Vec<Perm>> = self
            .h
            .generators()
            .iter()
            .map(|hg| {
                let target = map[self.quotient.coset(hg).expect("H inside G")];
                self.g
                    .elements()
                    .iter()
                    .filter(|y| self.quotient.coset(y) == Some(target) && keep(hg, y))
                    .cloned()
                    .collect()
            })
            .collect();
        let total = cands
            .iter()
            .try_fold(1u64, |acc, c| acc.checked_mul(c.len() as u64))
            .unwrap_or(u64::MAX);
        if total > CANDIDATE_CAP {
            return Err(TwistError::SearchTooLarge(format!(
                "{total} generator-image combinations exceed {CANDIDATE_CAP}"
            )));
        }
        Ok(cands)
    }

    /// All homomorphisms `H -> G` inducing `chibar`, injective or not, in
    /// lexicographic order of generator images.
    pub fn compatible_homs(&self) -> Result<Vec<GroupHom>, TwistError> {
        let cands = self.generator_candidates(|hg, y| hg.order() % y.order() == 0)?;
        Ok(product_search(&cands, |imgs| {
            hom_from_images(&self.h, imgs, self.g.degree()).ok()
        }))
    }
}

/// Tries every tuple in the cartesian product of `cands` in lexicographic order.
fn product_search<T>(cands: &[Vec<Perm>], mut f: impl FnMut(&[Perm]) -> Option<T>) -> Vec<T> {
    let mut out = Vec::new();
    if cands.iter().any(Vec::is_empty) {
        return out;
    }
    let mut idx = vec![0usize; cands.len()];
    loop {
        let imgs: Vec<Perm> = idx.iter().zip(cands).map(|(&i, c)| c[i].clone()).collect();
        if let Some(v) = f(&imgs) {
            out.push(v);
        }
        let mut k = cands.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < cands[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Every injective homomorphism `H -> G` inducing `chibar`, found by
/// exhaustive generator-image search. Ordered lexicographically by the
/// images of `H`'s generators.
pub fn enumerate_isoms(prob: &TwistProblem) -> Result<Vec<GroupHom>, TwistError> {
    let cands = prob.generator_candidates(|hg, y| hg.order() == y.order())?;
    Ok(product_search(&cands, |imgs| {
        hom_from_images(&prob.h, imgs, prob.g.degree())
            .ok()
            .filter(GroupHom::is_injective)
    }))
}

/// One class of `Isom_chibar(H, H')` modulo `conj(Gbar)`.
#[derive(Clone, Debug)]
pub struct ChiClass {
    pub gamma: usize,
    /// Least member in generator-image order.
    pub chi: GroupHom,
    pub members: Vec<GroupHom>,
}

impl ChiClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partitions `isoms` into orbits under `chi -> conj(w) o chi`, `w` in `Gbar`.
/// Classes are indexed by their least member.
pub fn gamma_representatives(isoms: &[GroupHom], gbar: &PermGroup) -> Vec<ChiClass> {
    let keys: Vec<Vec<Perm>> = isoms.iter().map(GroupHom::generator_images).collect();
    let index: HashMap<&Vec<Perm>, usize> = keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut class_of = vec![usize::MAX; isoms.len()];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..isoms.len() {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let key = &keys[members[k]];
            for w in gbar.generators() {
                let moved: Vec<Perm> = key.iter().map(|x| w.conj(x)).collect();
                if let Some(&j) = index.get(&moved) {
                    if class_of[j] == usize::MAX {
                        class_of[j] = id;
                        members.push(j);
                    }
                }
            }
            k += 1;
        }
        orbits.push(members);
    }
    let mut classes: Vec<ChiClass> = orbits
        .into_iter()
        .map(|mut m| {
            m.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
            ChiClass {
                gamma: 0,
                chi: isoms[m[0]].clone(),
                members: m.into_iter().map(|i| isoms[i].clone()).collect(),
            }
        })
        .collect();
    classes.sort_by_key(|c| c.chi.generator_images());
    for (i, c) in classes.iter_mut().enumerate() {
        c.gamma = i;
    }
    classes
}

/// Least `sigma` in `S_n` with `nu(chi(h)) = sigma mu(h) sigma^-1` for all `h`.
pub fn check_ii2(prob: &TwistProblem, chi: &GroupHom) -> Result<Option<Perm>, TwistError> {
    let composed = prob.nu.after(chi)?;
    Ok(simultaneous_conjugacy(&composed, &prob.mu, &prob.sn)?)
}

#[derive(Clone, Debug)]
pub struct Ii2Count {
    pub classes: Vec<ChiClass>,
    /// Witness per class, `None` where (ii-2) fails.
    pub witnesses: Vec<Option<Perm>>,
    pub count: usize,
    /// Set when exactly one class passes.
    pub unique_gamma: Option<usize>,
}

/// Number of classes `gamma` passing (ii-2).
pub fn count_ii2(prob: &TwistProblem) -> Result<Ii2Count, TwistError> {
    let isoms = enumerate_isoms(prob)?;
    let classes = gamma_representatives(&isoms, &prob.gbar);
    let witnesses = classes
        .iter()
        .map(|c| check_ii2(prob, &c.chi))
        .collect::<Result<Vec<_>, _>>()?;
    let passing: Vec<usize> = witnesses
        .iter()
        .enumerate()
        .filter_map(|(i, w)| w.as_ref().map(|_| i))
        .collect();
    Ok(Ii2Count {
        count: passing.len(),
        unique_gamma: (passing.len() == 1).then(|| passing[0]),
        classes,
        witnesses,
    })
}

/// Finite stand-in for a specialization: `phi_n: D -> H` surjective and a
/// candidate `psi: D -> G`.
#[derive(Clone, Debug)]
pub struct SpecializationDatum {
    pub d: PermGroup,
    pub phi_n: GroupHom,
    pub psi: GroupHom,
}

impl SpecializationDatum {
    /// Checks surjectivity of `phi_n` and `coset(psi) = chibar(coset(phi_n))`.
    pub fn validate(&self, prob: &TwistProblem) -> Result<(), TwistError> {
        let bad = |m: String| Err(TwistError::ModelInvariantViolated(m));
        if self.phi_n.domain() != &self.d || self.psi.domain() != &self.d {
            return bad("phiN and psi must share the domain D".into());
        }
        if self.phi_n.image() != prob.h.elements() {
            return bad("phiN is not onto H".into());
        }
        let map = prob.chibar_map()?;
        for (x, y) in self.phi_n.table().iter().zip(self.psi.table()) {
            let Some(cy) = prob.quotient.coset(y) else {
                return bad(format!("psi takes the value {y} outside G"));
            };
            let cx = prob.quotient.coset(x).expect("H inside G");
            if map[cx] != cy {
                return bad(format!(
                    "psi value {y} is not in chibar of the coset of phiN value {x}"
                ));
            }
        }
        Ok(())
    }
}

/// `{w in Gbar : psi(t) = w chi(phiN(t)) w^-1 for all t in D}`, sorted.
pub fn twisted_fixed_points(
    prob: &TwistProblem,
    chi: &GroupHom,
    datum: &SpecializationDatum,
) -> Result<Vec<Perm>, TwistError> {
    datum.validate(prob)?;
    let target = chi.after(&datum.phi_n)?;
    let a = target.generator_images();
    let b = datum.psi.generator_images();
    Ok(prob
        .gbar
        .elements()
        .iter()
        .filter(|w| a.iter().zip(&b).all(|(x, y)| w.conj(x) == *y))
        .cloned()
        .collect())
}

/// `|Cen_Gbar(chi(H))|`, the size of every nonempty twisted fixed-point set.
pub fn twisted_centralizer_order(prob: &TwistProblem, chi: &GroupHom) -> Result<usize, TwistError> {
    Ok(centralizer_order(&prob.gbar, &chi.generator_images())?)
}

/// A random datum: either `D = H` with `phiN` the identity, or
/// `D = H x Z/2` on two extra points with `phiN` killing the new factor.
/// `psi` is drawn uniformly from the compatible homomorphisms.
pub fn random_datum<R: Rng + ?Sized>(
    prob: &TwistProblem,
    rng: &mut R,
) -> Result<SpecializationDatum, TwistError> {
    let homs = prob.compatible_homs()?;
    let base = homs
        .choose(rng)
        .ok_or_else(|| TwistError::ConstCompFails("no compatible homomorphism".into()))?;
    let d0 = prob.h.degree();
    let h_gens = prob.h.generators();
    if rng.gen_bool(0.5) {
        return Ok(SpecializationDatum {
            d: prob.h.clone(),
            phi_n: GroupHom::inclusion(&prob.h),
            psi: base.clone(),
        });
    }
    let extend = |x: &Perm| {
        let mut img = x.images().to_vec();
        img.extend([d0 as u32, d0 as u32 + 1]);
        Perm::from_images(img).expect("extended bijection")
    };
    let mut gens: Vec<Perm> = h_gens.iter().map(extend).collect();
    let mut swap: Vec<u32> = (0..d0 as u32).collect();
    swap.extend([d0 as u32 + 1, d0 as u32]);
    gens.push(Perm::from_images(swap).expect("transposition"));
    let d = generate(d0 + 2, &gens)?;
    let mut phi_imgs: Vec<Perm> = h_gens.to_vec();
    phi_imgs.push(Perm::identity(d0));
    let phi_n = hom_from_images(&d, &phi_imgs, d0)?;
    let base_imgs = base.generator_images();
    // image of the Z/2 factor: a random element of Gbar that keeps psi a homomorphism
    let mut extra: Vec<Perm> = prob
        .gbar
        .elements()
        .iter()
        .filter(|w| w.compose(w).is_identity() && base_imgs.iter().all(|x| x.commutes_with(w)))
        .cloned()
        .collect();
    extra.shuffle(rng);
    let z = extra.into_iter().next().unwrap_or_else(|| Perm::identity(d0));
    let mut psi_imgs = base_imgs;
    psi_imgs.push(z);
    let psi = hom_from_images(&d, &psi_imgs, d0)?;
    Ok(SpecializationDatum { d, phi_n, psi })
}

/// `a = b + k*nu` with `k` the product of the primes dividing `mu` but not
/// `b`; then `gcd(a, mu*nu) = 1`.
pub fn cyclic_chi_a(h_order: u64, nu: u64, mu: u64, b: u64) -> Result<u64, TwistError> {
    if nu == 0 || mu == 0 {
        return Err(TwistError::BadInput("nu and mu must be positive".into()));
    }
    if num_integer::gcd(b, nu) != 1 {
        return Err(TwistError::BadInput(format!("gcd({b}, {nu}) != 1")));
    }
    let mn = mu
        .checked_mul(nu)
        .ok_or_else(|| TwistError::BadInput("mu*nu overflows".into()))?;
    if h_order == 0 || mn % h_order != 0 {
        return Err(TwistError::BadInput(format!(
            "|H| = {h_order} does not divide mu*nu = {mn}"
        )));
    }
    let k: u64 = crate::arith::prime_divisors(mu)
        .into_iter()
        .filter(|&p| !b.is_multiple_of(p))
        .product();
    k.checked_mul(nu)
        .and_then(|kn| kn.checked_add(b))
        .ok_or_else(|| TwistError::BadInput("a overflows".into()))
}

/// Outcome of [`cyclic_situation_c`].
#[derive(Clone, Debug)]
pub struct CyclicOutcome {
    pub generator: Perm,
    pub b: u64,
    pub a: u64,
    /// `omega -> omega^a`.
    pub chi_a: GroupHom,
    pub gamma: usize,
    pub witness: Perm,
}

/// Builds `chi_a: omega -> omega^a` for cyclic `H = <omega>`, locates its
/// class and confirms (ii-2) for it.
pub fn cyclic_situation_c(prob: &TwistProblem) -> Result<CyclicOutcome, TwistError> {
    let map = prob.chibar_map()?.to_vec();
    let h = &prob.h;
    let omega = match h.generators() {
        [g] => g.clone(),
        _ => h
            .cyclic_generator()
            .ok_or_else(|| TwistError::HypothesisFails("H is not cyclic".into()))?,
    };
    let nu_type = cycle_type(prob.nu.apply(&omega).expect("omega in G"));
    let mu_type = cycle_type(prob.mu.apply(&omega).expect("omega in H"));
    if nu_type != mu_type {
        return Err(TwistError::HypothesisFails(format!(
            "nu(omega) has type {nu_type} but mu(omega) has type {mu_type}"
        )));
    }
    let q = &prob.quotient;
    let h_order = h.order() as u64;
    let nu_ord = q.order() as u64;
    let c = q.coset(&omega).expect("omega in G");
    let target = map[c];
    let b = (1..=nu_ord)
        .find(|&b| num_integer::gcd(b, nu_ord) == 1 && q.coset(&omega.pow(b)) == Some(target))
        .ok_or_else(|| {
            TwistError::ConstCompFails("chibar is not a power map on G/Gbar".into())
        })?;
    let a = cyclic_chi_a(h_order, nu_ord, h_order / nu_ord, b)?;
    // express each generator of H as a power of omega
    let powers: Vec<Perm> = (0..h_order).map(|j| omega.pow(j)).collect();
    let imgs = h
        .generators()
        .iter()
        .map(|g| {
            let j = powers.iter().position(|x| x == g).expect("omega generates H") as u64;
            omega.pow((a % h_order) * j % h_order)
        })
        .collect::<Vec<_>>();
    let chi_a = hom_from_images(h, &imgs, prob.g.degree())?;
    debug_assert!(chi_a.is_injective());
    let count = count_ii2(prob)?;
    let key = chi_a.generator_images();
    let gamma = count
        .classes
        .iter()
        .position(|cl| cl.members.iter().any(|m| m.generator_images() == key))
        .ok_or_else(|| TwistError::BadInput("chi_a does not induce chibar".into()))?;
    let witness = check_ii2(prob, &chi_a)?.ok_or_else(|| {
        TwistError::HypothesisFails("nu o chi_a is not conjugate to mu".into())
    })?;
    if count.witnesses[gamma].is_none() || count.count == 0 {
        return Err(TwistError::BadInput(
            "class of chi_a disagrees with the (ii-2) census".into(),
        ));
    }
    Ok(CyclicOutcome {
        generator: omega,
        b,
        a,
        chi_a,
        gamma,
        witness,
    })
}

impl fmt::Display for ChiClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gamma {}: {:?} ({} members)", self.gamma, self.chi, self.size())
    }
}
