//! JSON file formats and a loader that preserves group identity.
//!
//! Group references are either `catalog:<name>`, a file path, or an inline
//! group object. The loader caches resolved groups per invocation so that
//! homomorphism files sharing a group reference receive the *same* group
//! object; cover-core compares groups by identity.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use cover_core::caps::Caps;
use cover_core::group::FiniteGroup;
use cover_core::hom::GroupHom;
use cover_core::module::GModule;
use cover_core::square::Square;

use crate::catalog::Catalog;

/// Group file: either a Cayley table or permutation generators.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Table {
        name: String,
        table: Vec<Vec<usize>>,
    },
    Perms {
        name: String,
        degree: usize,
        perm_gens: Vec<Vec<usize>>,
    },
}

impl GroupJson {
    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        let g = match self {
            GroupJson::Table { name, table } => FiniteGroup::from_table(table, name)?,
            GroupJson::Perms { name, degree, perm_gens } => {
                FiniteGroup::from_permutations(*degree, perm_gens, name, caps)?
            }
        };
        Ok(g)
    }

    pub fn of(group: &FiniteGroup) -> GroupJson {
        let n = group.order();
        let table: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| group.mul(i, j)).collect()).collect();
        GroupJson::Table { name: group.name().to_string(), table }
    }

    pub fn name(&self) -> &str {
        match self {
            GroupJson::Table { name, .. } => name,
            GroupJson::Perms { name, .. } => name,
        }
    }
}

/// A group reference: `catalog:<name>`, a path, or an inline object.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Inline(GroupJson),
}

/// Hom file: group references plus the image array.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HomJson {
    pub src: GroupRef,
    pub dst: GroupRef,
    pub images: Vec<usize>,
}

/// Square file: four homs (paths or inline).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SquareJson {
    pub eta: HomJson,
    pub beta: HomJson,
    pub alpha: HomJson,
    pub phi: HomJson,
}

/// Module file: group reference plus matrix action per element index.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleJson {
    pub group: GroupRef,
    pub prime: u32,
    pub dim: usize,
    /// Keys are stringified element indices; every element must be present.
    pub action: BTreeMap<String, Vec<Vec<u32>>>,
}

/// Smallest-embedding-cover result file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SecJson {
    pub base: GroupJson,
    pub cover_group: GroupJson,
    pub cover_hom: HomJson,
    pub chain: Vec<SquareJson>,
    pub ep: bool,
    pub seed: u64,
}

/// Loader with identity-preserving group resolution.
pub struct Loader {
    caps: Caps,
    catalog: Catalog,
    cache: BTreeMap<String, FiniteGroup>,
}

impl Loader {
    pub fn new(caps: &Caps) -> Result<Loader> {
        Ok(Loader { caps: caps.clone(), catalog: Catalog::new(caps)?, cache: BTreeMap::new() })
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    /// Resolves a `catalog:` name or group file path.
    pub fn group_by_name(&mut self, spec: &str, base_dir: Option<&Path>) -> Result<FiniteGroup> {
        if let Some(name) = spec.strip_prefix("catalog:") {
            return self.catalog.get(name);
        }
        let path = resolve_path(spec, base_dir)?;
        let key = format!("file:{}", path.display());
        if let Some(g) = self.cache.get(&key) {
            return Ok(g.clone());
        }
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading group file {}", path.display()))?;
        let json: GroupJson = serde_json::from_str(&text)
            .with_context(|| format!("parsing group file {}", path.display()))?;
        let g = json.build(&self.caps)?;
        self.cache.insert(key, g.clone());
        Ok(g)
    }

    pub fn group_ref(&mut self, r: &GroupRef, base_dir: Option<&Path>) -> Result<FiniteGroup> {
        match r {
            GroupRef::Name(spec) => self.group_by_name(spec, base_dir),
            GroupRef::Inline(json) => {
                // Inline groups are cached by name so repeated inline copies
                // of the same group resolve to one object.
                let key = format!("inline:{}", json.name());
                if let Some(g) = self.cache.get(&key) {
                    return Ok(g.clone());
                }
                let g = json.build(&self.caps)?;
                self.cache.insert(key, g.clone());
                Ok(g)
            }
        }
    }

    pub fn hom_json(&mut self, json: &HomJson, base_dir: Option<&Path>) -> Result<GroupHom> {
        let src = self.group_ref(&json.src, base_dir)?;
        let dst = self.group_ref(&json.dst, base_dir)?;
        Ok(GroupHom::new(src, dst, json.images.clone())?)
    }

    pub fn hom_file(&mut self, path: &Path) -> Result<GroupHom> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading hom file {}", path.display()))?;
        let json: HomJson = serde_json::from_str(&text)
            .with_context(|| format!("parsing hom file {}", path.display()))?;
        self.hom_json(&json, path.parent())
    }

    pub fn square_json(&mut self, json: &SquareJson, base_dir: Option<&Path>) -> Result<Square> {
        let eta = self.hom_json(&json.eta, base_dir)?;
        let beta = self.hom_json(&json.beta, base_dir)?;
        let alpha = self.hom_json(&json.alpha, base_dir)?;
        let phi = self.hom_json(&json.phi, base_dir)?;
        Ok(Square::new(eta, beta, alpha, phi)?)
    }

    pub fn module_file(&mut self, path: &Path) -> Result<GModule> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading module file {}", path.display()))?;
        let json: ModuleJson = serde_json::from_str(&text)
            .with_context(|| format!("parsing module file {}", path.display()))?;
        let group = self.group_ref(&json.group, path.parent())?;
        let mut action = Vec::with_capacity(group.order());
        for idx in 0..group.order() {
            let key = idx.to_string();
            let mat = json
                .action
                .get(&key)
                .ok_or_else(|| anyhow!("module action missing element {idx}"))?;
            action.push(mat.clone());
        }
        Ok(GModule::new(&group, json.prime, json.dim, action)?)
    }
}

fn resolve_path(spec: &str, base_dir: Option<&Path>) -> Result<PathBuf> {
    let direct = PathBuf::from(spec);
    if direct.exists() {
        return Ok(direct);
    }
    if let Some(dir) = base_dir {
        let joined = dir.join(spec);
        if joined.exists() {
            return Ok(joined);
        }
    }
    bail!("no such file: {spec}")
}

/// Serializes a hom with inline group objects (self-contained).
pub fn hom_to_json_inline(hom: &GroupHom) -> HomJson {
    HomJson {
        src: GroupRef::Inline(GroupJson::of(hom.src())),
        dst: GroupRef::Inline(GroupJson::of(hom.dst())),
        images: hom.images(),
    }
}

/// Serializes a hom referencing groups by name (for files that embed the
/// groups elsewhere).
pub fn hom_to_json_named(hom: &GroupHom) -> HomJson {
    HomJson {
        src: GroupRef::Name(hom.src().name().to_string()),
        dst: GroupRef::Name(hom.dst().name().to_string()),
        images: hom.images(),
    }
}

pub fn square_to_json_inline(s: &Square) -> SquareJson {
    SquareJson {
        eta: hom_to_json_inline(&s.eta),
        beta: hom_to_json_inline(&s.beta),
        alpha: hom_to_json_inline(&s.alpha),
        phi: hom_to_json_inline(&s.phi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loader_preserves_group_identity() {
        let caps = Caps::default();
        let mut loader = Loader::new(&caps).unwrap();
        let a = loader.group_by_name("catalog:S3", None).unwrap();
        let b = loader.group_by_name("catalog:S3", None).unwrap();
        assert_eq!(a, b); // identity, not just structure
    }

    #[test]
    fn group_json_roundtrip() {
        let caps = Caps::default();
        let g = cover_core::groups::cyclic(4);
        let json = GroupJson::of(&g);
        let text = serde_json::to_string(&json).unwrap();
        let back: GroupJson = serde_json::from_str(&text).unwrap();
        let g2 = back.build(&caps).unwrap();
        assert_eq!(g2.order(), 4);
        assert_eq!(g2.name(), "C4");
    }

    #[test]
    fn perm_group_json() {
        let caps = Caps::default();
        let text = r#"{"name": "S3", "degree": 3, "perm_gens": [[1,0,2],[1,2,0]]}"#;
        let json: GroupJson = serde_json::from_str(text).unwrap();
        let g = json.build(&caps).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn hom_json_inline_roundtrip() {
        let caps = Caps::default();
        let mut loader = Loader::new(&caps).unwrap();
        let s3 = loader.group_by_name("catalog:S3", None).unwrap();
        let c2 = loader.group_by_name("catalog:C2", None).unwrap();
        let images: Vec<usize> =
            (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        let sgn = GroupHom::new(s3, c2, images).unwrap();
        let json = hom_to_json_inline(&sgn);
        let text = serde_json::to_string(&json).unwrap();
        let parsed: HomJson = serde_json::from_str(&text).unwrap();
        let back = loader.hom_json(&parsed, None).unwrap();
        assert_eq!(back.images(), sgn.images());
    }
}
