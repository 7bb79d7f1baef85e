//! Permutations of `{1..n}`, fully enumerated permutation groups, and
//! homomorphisms stored as complete tables.
//!
//! Composition is right to left: `a.compose(&b)` applies `b` first, so
//! `sigma.conj(x) = sigma * x * sigma^-1` maps `sigma(i) -> sigma(x(i))`.
//! Internally points are `0..n`; text uses `1..=n` cycle notation.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::factorial;
use crate::divisor::DegreeDivisor;

/// Default bound on enumerated group order (covers `S_8`).
pub const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("permutation degrees disagree ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("group closure exceeds {0} elements")]
    CapExceeded(usize),
    #[error("generator images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("homomorphisms have different domains")]
    DomainMismatch,
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("expected {expected} generator images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },
    #[error("cannot parse permutation {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            img: (0..n as u32).collect(),
        }
    }

    /// From 0-based images; `None` unless a bijection of `0..n`.
    pub fn from_images(img: Vec<u32>) -> Option<Self> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            let x = x as usize;
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm { img })
    }

    /// From 1-based cycles, e.g. `&[&[1, 2, 3], &[4, 5]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, GroupError> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n {
                    return Err(GroupError::Parse {
                        text: format!("{cycles:?}"),
                        reason: format!("point {a} outside 1..={n}"),
                    });
                }
                if used[a - 1] {
                    return Err(GroupError::Parse {
                        text: format!("{cycles:?}"),
                        reason: format!("point {a} repeated"),
                    });
                }
                used[a - 1] = true;
                let b = cyc[(k + 1) % cyc.len()];
                img[a - 1] = (b - 1) as u32;
            }
        }
        Ok(Perm { img })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    /// Points may be separated by spaces or commas.
    pub fn parse(text: &str, n: usize) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body_start.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = &body_start[..close];
            let pts = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err("non-integer point")))
                .collect::<Result<Vec<_>, _>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = body_start[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs).map_err(|e| match e {
            GroupError::Parse { reason, .. } => err(&reason),
            other => other,
        })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    /// `self * other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: other.img.iter().map(|&i| self.img[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u32;
        }
        Perm { img }
    }

    /// `self * x * self^-1`.
    pub fn conj(&self, x: &Perm) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &xi) in x.img.iter().enumerate() {
            img[self.img[i] as usize] = self.img[xi as usize];
        }
        Perm { img }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Disjoint cycles including fixed points, 0-based, each starting at its
    /// least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.apply(i);
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> usize {
        cycle_type(self).lcm()
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cyc in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (k, i) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Multiset of cycle lengths, fixed points counted as 1s.
pub fn cycle_type(s: &Perm) -> DegreeDivisor {
    DegreeDivisor::new(s.cycles().iter().map(Vec::len).collect())
        .expect("cycle lengths are positive")
}

#[derive(Debug)]
struct GroupData {
    degree: usize,
    gens: Vec<Perm>,
    /// Sorted canonical order.
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// BFS spanning tree: `element = gens[g] * element[parent]`; `None` at the identity.
    parent: Vec<Option<(usize, usize)>>,
    /// Element indices in BFS discovery order (identity first).
    bfs: Vec<usize>,
}

/// A finite permutation group with all elements enumerated. Cheap to clone.
#[derive(Clone)]
pub struct PermGroup(Arc<GroupData>);

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.degree == other.0.degree && self.0.elements == other.0.elements)
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.0.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "> of order {} in S_{}", self.order(), self.degree())
    }
}

/// Closure of `gens` in `S_degree` under the default cap.
pub fn generate(degree: usize, gens: &[Perm]) -> Result<PermGroup, GroupError> {
    generate_capped(degree, gens, DEFAULT_GROUP_CAP)
}

pub fn generate_capped(degree: usize, gens: &[Perm], cap: usize) -> Result<PermGroup, GroupError> {
    for g in gens {
        if g.degree() != degree {
            return Err(GroupError::DegreeMismatch(degree, g.degree()));
        }
    }
    let id = Perm::identity(degree);
    let mut found: HashMap<Perm, usize> = HashMap::new();
    let mut order: Vec<Perm> = vec![id.clone()];
    let mut parent_bfs: Vec<Option<(usize, usize)>> = vec![None];
    found.insert(id, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(xi) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let y = g.compose(&order[xi]);
            if found.contains_key(&y) {
                continue;
            }
            if order.len() >= cap {
                return Err(GroupError::CapExceeded(cap));
            }
            found.insert(y.clone(), order.len());
            queue.push_back(order.len());
            order.push(y);
            parent_bfs.push(Some((xi, gi)));
        }
    }
    // re-index into sorted order
    let mut sorted: Vec<usize> = (0..order.len()).collect();
    sorted.sort_by(|&a, &b| order[a].cmp(&order[b]));
    let mut rank = vec![0usize; order.len()];
    for (r, &b) in sorted.iter().enumerate() {
        rank[b] = r;
    }
    let elements: Vec<Perm> = sorted.iter().map(|&b| order[b].clone()).collect();
    let mut parent = vec![None; order.len()];
    for (b, p) in parent_bfs.iter().enumerate() {
        parent[rank[b]] = p.map(|(pb, g)| (rank[pb], g));
    }
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let bfs = rank;
    Ok(PermGroup(Arc::new(GroupData {
        degree,
        gens: gens.to_vec(),
        elements,
        index,
        parent,
        bfs,
    })))
}

impl PermGroup {
    /// `S_n` generated by `(1 2)` and `(1 2 ... n)`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[&[1, 2]])?);
        }
        if n >= 3 {
            let cyc: Vec<usize> = (1..=n).collect();
            gens.push(Perm::from_cycles(n, &[&cyc])?);
        }
        generate(n, &gens)
    }

    /// `A_n` generated by the 3-cycles `(1 2 i)`.
    pub fn alternating(n: usize) -> Result<Self, GroupError> {
        let gens = (3..=n)
            .map(|i| Perm::from_cycles(n, &[&[1, 2, i]]))
            .collect::<Result<Vec<_>, _>>()?;
        generate(n, &gens)
    }

    pub fn trivial(n: usize) -> Self {
        generate(n, &[]).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> usize {
        self.0.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.gens
    }

    /// Elements in canonical (sorted image array) order.
    pub fn elements(&self) -> &[Perm] {
        &self.0.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.0.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.0.index.contains_key(p)
    }

    pub fn is_subset_of(&self, other: &PermGroup) -> bool {
        self.degree() == other.degree() && self.elements().iter().all(|e| other.contains(e))
    }

    /// Element indices in BFS order, identity first.
    fn bfs_order(&self) -> &[usize] {
        &self.0.bfs
    }

    /// Element of largest order first found in canonical order, if the group is cyclic.
    pub fn cyclic_generator(&self) -> Option<Perm> {
        self.elements()
            .iter()
            .find(|e| e.order() == self.order())
            .cloned()
    }
}

/// `|{g in G : g s = s g for all s in S}|` by direct scan.
pub fn centralizer_order(g: &PermGroup, s: &[Perm]) -> Result<usize, GroupError> {
    Ok(centralizer(g, s)?.len())
}

pub fn centralizer(g: &PermGroup, s: &[Perm]) -> Result<Vec<Perm>, GroupError> {
    if let Some(bad) = s.iter().find(|x| x.degree() != g.degree()) {
        return Err(GroupError::DegreeMismatch(g.degree(), bad.degree()));
    }
    Ok(g
        .elements()
        .iter()
        .filter(|e| s.iter().all(|x| e.commutes_with(x)))
        .cloned()
        .collect())
}

/// Size of the `S_n` class of type `t`: `n! / prod_i (i^{a_i} a_i!)`.
pub fn class_size_sn(t: &DegreeDivisor) -> u128 {
    factorial(t.total()) / centralizer_order_sn(t)
}

/// `prod_i i^{a_i} a_i!`, the centralizer order in `S_n` of an element of type `t`.
pub fn centralizer_order_sn(t: &DegreeDivisor) -> u128 {
    t.powers()
        .into_iter()
        .map(|(i, a)| (i as u128).pow(a as u32) * factorial(a))
        .product()
}

/// Partition of `G` into conjugacy classes. Classes are sorted internally and
/// ordered by least element, so the identity class comes first.
pub fn conjugacy_classes(g: &PermGroup) -> Vec<Vec<Perm>> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Perm>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut members = vec![start];
        let mut k = 0;
        while k < members.len() {
            let x = &g.elements()[members[k]];
            for s in g.generators() {
                let y = g.index_of(&s.conj(x)).expect("closed under conjugation");
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    members.push(y);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        classes.push(members.into_iter().map(|i| g.elements()[i].clone()).collect());
    }
    classes
}

/// Number of nontrivial conjugacy classes.
pub fn nontrivial_class_count(g: &PermGroup) -> usize {
    conjugacy_classes(g).len() - 1
}

/// `gNg^-1 = N` for every generator `g` of `G`.
pub fn is_normal(n: &PermGroup, g: &PermGroup) -> Result<bool, GroupError> {
    if n.degree() != g.degree() {
        return Err(GroupError::DegreeMismatch(n.degree(), g.degree()));
    }
    if let Some(x) = n.elements().iter().find(|x| !g.contains(x)) {
        return Err(GroupError::NotASubgroup(format!("{x} is not in the larger group")));
    }
    Ok(g
        .generators()
        .iter()
        .all(|s| n.generators().iter().all(|x| n.contains(&s.conj(x)))))
}

/// A homomorphism from an enumerated group, as a full table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: PermGroup,
    codomain_degree: usize,
    /// Indexed like `domain.elements()`.
    table: Vec<Perm>,
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (g, x)) in self
            .domain
            .generators()
            .iter()
            .zip(self.generator_images())
            .enumerate()
        {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g} -> {x}")?;
        }
        write!(f, "}}")
    }
}

/// Extends generator images along the BFS words of the domain and checks
/// `table(g x) = image(g) table(x)` for every generator `g` and element `x`,
/// which catches every violated relation.
pub fn hom_from_images(
    domain: &PermGroup,
    images: &[Perm],
    codomain_degree: usize,
) -> Result<GroupHom, GroupError> {
    let gens = domain.generators();
    if images.len() != gens.len() {
        return Err(GroupError::ImageCountMismatch {
            expected: gens.len(),
            got: images.len(),
        });
    }
    if let Some(bad) = images.iter().find(|x| x.degree() != codomain_degree) {
        return Err(GroupError::DegreeMismatch(codomain_degree, bad.degree()));
    }
    let n = domain.order();
    let mut table: Vec<Option<Perm>> = vec![None; n];
    for &idx in domain.bfs_order() {
        let v = match domain.0.parent[idx] {
            None => Perm::identity(codomain_degree),
            Some((par, g)) => images[g].compose(
                table[par]
                    .as_ref()
                    .expect("BFS parent precedes child"),
            ),
        };
        table[idx] = Some(v);
    }
    let table: Vec<Perm> = table.into_iter().map(|t| t.expect("every element reached")).collect();
    for (xi, x) in domain.elements().iter().enumerate() {
        for (gi, g) in gens.iter().enumerate() {
            let yi = domain.index_of(&g.compose(x)).expect("closed");
            if table[yi] != images[gi].compose(&table[xi]) {
                return Err(GroupError::NotAHomomorphism(format!(
                    "{g} * {x} maps to {} but the images multiply to {}",
                    table[yi],
                    images[gi].compose(&table[xi])
                )));
            }
        }
    }
    Ok(GroupHom {
        domain: domain.clone(),
        codomain_degree,
        table,
    })
}

impl GroupHom {
    /// The inclusion of `domain` into its own symmetric group.
    pub fn inclusion(domain: &PermGroup) -> GroupHom {
        GroupHom {
            domain: domain.clone(),
            codomain_degree: domain.degree(),
            table: domain.elements().to_vec(),
        }
    }

    pub fn domain(&self) -> &PermGroup {
        &self.domain
    }

    pub fn codomain_degree(&self) -> usize {
        self.codomain_degree
    }

    pub fn table(&self) -> &[Perm] {
        &self.table
    }

    pub fn apply(&self, x: &Perm) -> Option<&Perm> {
        self.domain.index_of(x).map(|i| &self.table[i])
    }

    pub fn generator_images(&self) -> Vec<Perm> {
        self.domain
            .generators()
            .iter()
            .map(|g| self.apply(g).expect("generator in domain").clone())
            .collect()
    }

    /// Distinct image elements, sorted.
    pub fn image(&self) -> Vec<Perm> {
        let mut v = self.table.clone();
        v.sort();
        v.dedup();
        v
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.domain.order()
    }

    /// `self o inner`; the image of `inner` must lie in `self.domain`.
    pub fn after(&self, inner: &GroupHom) -> Result<GroupHom, GroupError> {
        let table = inner
            .table
            .iter()
            .map(|x| {
                self.apply(x).cloned().ok_or_else(|| {
                    GroupError::NotASubgroup(format!("{x} is outside the outer domain"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GroupHom {
            domain: inner.domain.clone(),
            codomain_degree: self.codomain_degree,
            table,
        })
    }

    /// `conj(sigma) o self`.
    pub fn conjugated(&self, sigma: &Perm) -> GroupHom {
        GroupHom {
            domain: self.domain.clone(),
            codomain_degree: self.codomain_degree,
            table: self.table.iter().map(|x| sigma.conj(x)).collect(),
        }
    }
}

/// Least `sigma` in `ambient`'s canonical order with
/// `f(h) = sigma g(h) sigma^-1` on every domain generator, hence on all `h`.
pub fn simultaneous_conjugacy(
    f: &GroupHom,
    g: &GroupHom,
    ambient: &PermGroup,
) -> Result<Option<Perm>, GroupError> {
    if f.domain != g.domain {
        return Err(GroupError::DomainMismatch);
    }
    for d in [f.codomain_degree, g.codomain_degree] {
        if d != ambient.degree() {
            return Err(GroupError::DegreeMismatch(ambient.degree(), d));
        }
    }
    let fi = f.generator_images();
    let gi = g.generator_images();
    Ok(ambient
        .elements()
        .iter()
        .find(|s| fi.iter().zip(&gi).all(|(a, b)| *a == s.conj(b)))
        .cloned())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> PermGroup {
        generate(n, &gens.iter().map(|s| p(s, n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("(1 2 3)(4 5)", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(p("()", 4).to_string(), "()");
        assert_eq!(p("(3,1)", 3).to_string(), "(1 3)");
        assert_eq!(p(" (2 3) (1 4) ", 4).to_string(), "(1 4)(2 3)");
        assert!(Perm::parse("(1 2", 3).is_err());
        assert!(Perm::parse("(1 4)", 3).is_err());
        assert!(Perm::parse("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse("(a)", 3).is_err());
    }

    #[test]
    fn composition_convention() {
        // (23)(13)(23) = (12)
        let a = p("(2 3)", 3);
        let b = p("(1 3)", 3);
        assert_eq!(a.compose(&b).compose(&a), p("(1 2)", 3));
        assert_eq!(a.conj(&b), p("(1 2)", 3));
        // (1234)(13)(1234)^-1 = (24)
        assert_eq!(p("(1 2 3 4)", 4).conj(&p("(1 3)", 4)), p("(2 4)", 4));
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&Perm::identity(5)).to_string(), "1^5");
        assert_eq!(cycle_type(&p("(1 2 3)(4 5)", 5)).to_string(), "2^1 3^1");
        assert_eq!(cycle_type(&p("(1 2 3 4 5 6)", 6)).to_string(), "6^1");
    }

    #[test]
    fn generate_examples() {
        assert_eq!(grp(3, &["(1 2)", "(1 2 3)"]).order(), 6);
        let d4 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let mut expected: Vec<Perm> = [
            "()", "(1 2 3 4)", "(1 3)(2 4)", "(1 4 3 2)", "(1 3)", "(2 4)", "(1 2)(3 4)",
            "(1 4)(2 3)",
        ]
        .iter()
        .map(|s| p(s, 4))
        .collect();
        expected.sort();
        assert_eq!(d4.elements(), &expected[..]);
        assert_eq!(PermGroup::trivial(5).order(), 1);
        assert_eq!(
            generate_capped(5, &[p("(1 2)", 5), p("(1 2 3 4 5)", 5)], 100).unwrap_err(),
            GroupError::CapExceeded(100)
        );
        assert_eq!(
            generate(4, &[p("(1 2)", 3)]).unwrap_err(),
            GroupError::DegreeMismatch(4, 3)
        );
        assert_eq!(PermGroup::symmetric(5).unwrap().order(), 120);
        assert_eq!(PermGroup::alternating(5).unwrap().order(), 60);
    }

    #[test]
    fn centralizer_examples() {
        let s4 = PermGroup::symmetric(4).unwrap();
        assert_eq!(centralizer_order(&s4, &[p("(1 2)(3 4)", 4)]).unwrap(), 8);
        assert_eq!(centralizer_order(&s4, &[Perm::identity(4)]).unwrap(), 24);
        let s5 = PermGroup::symmetric(5).unwrap();
        assert_eq!(centralizer_order(&s5, &[p("(1 2 3)(4 5)", 5)]).unwrap(), 6);
        assert!(centralizer_order(&s5, &[p("(1 2)", 4)]).is_err());
    }

    #[test]
    fn class_size_examples() {
        let t: DegreeDivisor = "1^1 4^1".parse().unwrap();
        assert_eq!(class_size_sn(&t), 30);
        assert_eq!(class_size_sn(&"1^6".parse().unwrap()), 1);
        assert_eq!(class_size_sn(&"2^2".parse().unwrap()), 3);
    }

    #[test]
    fn class_examples() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let c = conjugacy_classes(&s3);
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], vec![Perm::identity(3)]);
        assert_eq!(nontrivial_class_count(&s3), 2);
        assert_eq!(conjugacy_classes(&PermGroup::trivial(3)).len(), 1);
        assert_eq!(conjugacy_classes(&PermGroup::symmetric(4).unwrap()).len(), 5);
    }

    #[test]
    fn hom_examples() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let id = hom_from_images(&s3, &[p("(1 2)", 3), p("(1 2 3)", 3)], 3).unwrap();
        assert_eq!(id, GroupHom::inclusion(&s3));

        let z2 = grp(3, &["(1 2)"]);
        let h = hom_from_images(&z2, &[p("(1 3)", 3)], 3).unwrap();
        assert_eq!(h.apply(&p("(1 2)", 3)), Some(&p("(1 3)", 3)));

        // Z/4 onto Z/2 is a genuine homomorphism (kernel of order 2)
        let z4 = grp(4, &["(1 2 3 4)"]);
        let onto = hom_from_images(&z4, &[p("(1 2)", 4)], 4).unwrap();
        assert!(!onto.is_injective());
        assert_eq!(onto.apply(&p("(1 3)(2 4)", 4)), Some(&Perm::identity(4)));
        // an order-3 image violates c^4 = 1
        assert!(matches!(
            hom_from_images(&z4, &[p("(1 2 3)", 4)], 4),
            Err(GroupError::NotAHomomorphism(_))
        ));
        // S_3 -> S_3 sending (1 2) to a 3-cycle breaks (1 2)^2 = 1
        assert!(matches!(
            hom_from_images(&s3, &[p("(1 2 3)", 3), p("(1 2 3)", 3)], 3),
            Err(GroupError::NotAHomomorphism(_))
        ));
        assert!(matches!(
            hom_from_images(&s3, &[p("(1 2)", 3)], 3),
            Err(GroupError::ImageCountMismatch { .. })
        ));
    }

    #[test]
    fn simultaneous_conjugacy_examples() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let z2 = grp(3, &["(1 2)"]);
        let f = hom_from_images(&z2, &[p("(1 2)", 3)], 3).unwrap();
        let g = hom_from_images(&z2, &[p("(1 3)", 3)], 3).unwrap();
        assert_eq!(simultaneous_conjugacy(&f, &g, &s3).unwrap(), Some(p("(2 3)", 3)));
        assert_eq!(simultaneous_conjugacy(&f, &f, &s3).unwrap(), Some(Perm::identity(3)));

        let s4 = PermGroup::symmetric(4).unwrap();
        let z2 = grp(4, &["(1 2)"]);
        let f = hom_from_images(&z2, &[p("(1 2)", 4)], 4).unwrap();
        let g = hom_from_images(&z2, &[p("(1 2)(3 4)", 4)], 4).unwrap();
        assert_eq!(simultaneous_conjugacy(&f, &g, &s4).unwrap(), None);

        let other = grp(4, &["(3 4)"]);
        let h = hom_from_images(&other, &[p("(1 2)", 4)], 4).unwrap();
        assert_eq!(
            simultaneous_conjugacy(&f, &h, &s4),
            Err(GroupError::DomainMismatch)
        );
    }

    #[test]
    fn normality_examples() {
        let s3 = PermGroup::symmetric(3).unwrap();
        let a3 = PermGroup::alternating(3).unwrap();
        assert!(is_normal(&a3, &s3).unwrap());
        assert!(!is_normal(&grp(3, &["(1 2)"]), &s3).unwrap());
        assert!(is_normal(&s3, &s3).unwrap());
        assert!(matches!(
            is_normal(&s3, &a3),
            Err(GroupError::NotASubgroup(_))
        ));
    }
}
