//! Built-in group catalog, addressable as `catalog:<name>`.

use std::collections::BTreeMap;

use anyhow::{anyhow, Result};
use cover_core::caps::Caps;
use cover_core::group::FiniteGroup;
use cover_core::groups;

/// Named groups with construction recipes. Every entry passes the group
/// axioms by construction; names are unique.
pub struct Catalog {
    groups: BTreeMap<String, FiniteGroup>,
}

pub const CATALOG_NAMES: &[&str] = &[
    "1", "C2", "C3", "C4", "C6", "C8", "C2xC2", "C2xC3", "S3", "S3xC2", "Q8",
];

impl Catalog {
    pub fn new(caps: &Caps) -> Result<Catalog> {
        let mut map = BTreeMap::new();
        map.insert("1".to_string(), groups::trivial());
        for n in [2usize, 3, 4, 6, 8] {
            map.insert(format!("C{n}"), groups::cyclic(n));
        }
        map.insert("C2xC2".to_string(), groups::klein_four(caps)?);
        let (c2xc3, _, _) =
            FiniteGroup::direct_product(&groups::cyclic(2), &groups::cyclic(3), "C2xC3", caps)?;
        map.insert("C2xC3".to_string(), c2xc3);
        let s3 = groups::symmetric(3, caps)?;
        map.insert("S3".to_string(), s3.clone());
        let (s3xc2, _, _) = FiniteGroup::direct_product(&s3, &groups::cyclic(2), "S3xC2", caps)?;
        map.insert("S3xC2".to_string(), s3xc2);
        map.insert("Q8".to_string(), groups::quaternion8());
        Ok(Catalog { groups: map })
    }

    pub fn get(&self, name: &str) -> Result<FiniteGroup> {
        self.groups
            .get(name)
            .cloned()
            .ok_or_else(|| anyhow!("unknown catalog group {name:?}; known: {:?}", CATALOG_NAMES))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.groups.keys().map(|s| s.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &FiniteGroup)> {
        self.groups.iter().map(|(k, v)| (k.as_str(), v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_entries_pass_axioms() {
        let caps = Caps::default();
        let cat = Catalog::new(&caps).unwrap();
        let mut seen = std::collections::HashSet::new();
        for (name, g) in cat.iter() {
            assert!(g.verify_axioms().is_ok(), "{name} fails axioms");
            assert!(seen.insert(name.to_string()), "duplicate name {name}");
        }
        for name in CATALOG_NAMES {
            assert!(cat.get(name).is_ok(), "missing {name}");
        }
    }

    #[test]
    fn expected_orders() {
        let caps = Caps::default();
        let cat = Catalog::new(&caps).unwrap();
        for (name, order) in [
            ("1", 1),
            ("C2", 2),
            ("C3", 3),
            ("C4", 4),
            ("C6", 6),
            ("C8", 8),
            ("C2xC2", 4),
            ("C2xC3", 6),
            ("S3", 6),
            ("S3xC2", 12),
            ("Q8", 8),
        ] {
            assert_eq!(cat.get(name).unwrap().order(), order, "{name}");
        }
    }
}
