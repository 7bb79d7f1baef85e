//! TOML input files for the `twist` and `progression` commands.
//!
//! Problem file:
//!
//! ```toml
//! degree = 4                   # n: nu and mu land in S_n
//! group_degree = 4             # optional, points moved by G; defaults to degree
//! g = ["(1 2 3 4)", "(1 3)"]   # generators of G
//! gbar = ["(1 2 3 4)"]         # generators of the normal subgroup
//! h = ["(1 3)"]                # generators of H
//! nu = "inclusion"             # or images of the generators of G
//! mu = ["(1 3)"]               # or "inclusion"
//! chibar = "identity"          # or [["x", "y"], ...], one pair per coset
//! ```
//!
//! Datum file:
//!
//! ```toml
//! degree = 2                   # optional, points moved by D; defaults to group_degree
//! d = ["(1 2)"]                # generators of D
//! phi = ["(1 3)"]              # images in H of the generators of D
//! psi = ["(2 4)"]              # images in G
//! ```
//!
//! Plan file:
//!
//! ```toml
//! cert_cap = 10000             # optional
//!
//! [[plan]]
//! prime = 67
//! type = "2^1"
//! residue = 2                  # optional; searched when absent
//!
//! [beta]                       # optional
//! classes = ["2^1"]            # cycle types, or
//! gbar = ["(1 2)"]             # generators of the geometric group
//! floor = 64                   # optional
//! ```

use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use fibra_core::perm::DEFAULT_GROUP_CAP;
use fibra_core::{
    generate, hom_from_images, ChiBar, DegreeDivisor, GroupHom, Perm, PermGroup,
    SpecializationDatum, TwistProblem,
};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Named(String),
    Images(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum ChiBarSpec {
    Named(String),
    Table(Vec<[String; 2]>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub degree: usize,
    pub group_degree: Option<usize>,
    pub g: Vec<String>,
    pub gbar: Vec<String>,
    pub h: Vec<String>,
    pub nu: MapSpec,
    pub mu: MapSpec,
    pub chibar: ChiBarSpec,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumFile {
    pub degree: Option<usize>,
    pub d: Vec<String>,
    pub phi: Vec<String>,
    pub psi: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanEntry {
    pub prime: u64,
    #[serde(rename = "type")]
    pub target: String,
    pub residue: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetaSpec {
    pub classes: Option<Vec<String>>,
    pub gbar: Option<Vec<String>>,
    pub floor: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlanFile {
    pub cert_cap: Option<u64>,
    #[serde(default)]
    pub plan: Vec<PlanEntry>,
    pub beta: Option<BetaSpec>,
}

pub fn read_toml<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

pub fn parse_perms(texts: &[String], degree: usize) -> Result<Vec<Perm>> {
    texts
        .iter()
        .map(|s| Perm::parse(s, degree).map_err(|e| anyhow!(e)))
        .collect()
}

pub fn parse_group(texts: &[String], degree: usize) -> Result<PermGroup> {
    let gens = parse_perms(texts, degree)?;
    Ok(fibra_core::perm::generate_capped(degree, &gens, DEFAULT_GROUP_CAP)?)
}

pub fn parse_divisor(text: &str) -> Result<DegreeDivisor> {
    text.parse()
        .map_err(|e| anyhow!("bad degree divisor {text:?}: {e}"))
}

fn build_map(spec: &MapSpec, domain: &PermGroup, degree: usize, what: &str) -> Result<GroupHom> {
    match spec {
        MapSpec::Named(s) if s == "inclusion" => {
            if domain.degree() != degree {
                bail!("{what} = \"inclusion\" needs group_degree = degree");
            }
            Ok(GroupHom::inclusion(domain))
        }
        MapSpec::Named(s) => bail!("{what}: unknown map {s:?}; use \"inclusion\" or a list of images"),
        MapSpec::Images(imgs) => {
            let imgs = parse_perms(imgs, degree)?;
            hom_from_images(domain, &imgs, degree).with_context(|| format!("{what} is not a homomorphism"))
        }
    }
}

impl ProblemFile {
    pub fn build(&self) -> Result<TwistProblem> {
        let gd = self.group_degree.unwrap_or(self.degree);
        let g = parse_group(&self.g, gd).context("G")?;
        let gbar = parse_group(&self.gbar, gd).context("gbar")?;
        let h = parse_group(&self.h, gd).context("H")?;
        let nu = build_map(&self.nu, &g, self.degree, "nu")?;
        let mu = build_map(&self.mu, &h, self.degree, "mu")?;
        let chibar = match &self.chibar {
            ChiBarSpec::Named(s) if s == "identity" => ChiBar::Identity,
            ChiBarSpec::Named(s) => bail!("chibar: unknown value {s:?}; use \"identity\" or pairs"),
            ChiBarSpec::Table(pairs) => ChiBar::Table(
                pairs
                    .iter()
                    .map(|[x, y]| Ok((Perm::parse(x, gd)?, Perm::parse(y, gd)?)))
                    .collect::<Result<Vec<_>, fibra_core::GroupError>>()?,
            ),
        };
        Ok(TwistProblem::new(self.degree, g, gbar, h, nu, mu, chibar)?)
    }
}

impl DatumFile {
    pub fn build(&self, prob: &TwistProblem) -> Result<SpecializationDatum> {
        let gd = prob.g().degree();
        let d = generate(self.degree.unwrap_or(gd), &parse_perms(&self.d, self.degree.unwrap_or(gd))?)?;
        let phi_n = hom_from_images(&d, &parse_perms(&self.phi, gd)?, gd).context("phi")?;
        let psi = hom_from_images(&d, &parse_perms(&self.psi, gd)?, gd).context("psi")?;
        Ok(SpecializationDatum { d, phi_n, psi })
    }
}
