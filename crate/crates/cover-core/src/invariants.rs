//! Multiplicity and support invariants of fundamental covers.
//!
//! A fundamental cover decomposes as a fiber product of indecomposable
//! covers. Grouping the legs — non-abelian-kernel legs by isomorphism over
//! the base, abelian-kernel legs by their kernel's module class — yields
//! invariants that determine the cover up to isomorphism over the base:
//! a multiplicity per non-abelian class, and per module class the span of
//! the legs' cohomology classes together with the relation dimension.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::cohomology::{extension_class, h2_space, span_and_relations, CocycleClass, H2Space};
use crate::error::{CoverError, Result};
use crate::fp::Echelon;
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::module::{module_from_kernel, module_isomorphism, GModule};
use crate::square::{fiber_product, isomorphic_over_base, CoverFamily};

/// Canonical class representatives over one base group.
///
/// Classes are keyed by their index in this registry, so invariants built
/// against the same registry are directly comparable. Module classes carry
/// their H^2 space. Representatives are canonicalized first-seen, with
/// covers keyed by source order first (the documented total order).
pub struct ClassRegistry {
    base: FiniteGroup,
    na_reps: Vec<GroupHom>,
    ab_reps: Vec<(GModule, H2Space)>,
    caps: Caps,
}

impl ClassRegistry {
    pub fn new(base: &FiniteGroup, caps: &Caps) -> ClassRegistry {
        ClassRegistry {
            base: base.clone(),
            na_reps: Vec::new(),
            ab_reps: Vec::new(),
            caps: caps.clone(),
        }
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn na_rep(&self, idx: usize) -> &GroupHom {
        &self.na_reps[idx]
    }

    pub fn ab_rep(&self, idx: usize) -> &(GModule, H2Space) {
        &self.ab_reps[idx]
    }

    /// Class index of a non-abelian-kernel indecomposable cover.
    pub fn na_class_of(&mut self, leg: &GroupHom) -> Result<usize> {
        for (i, rep) in self.na_reps.iter().enumerate() {
            if isomorphic_over_base(leg, rep, &self.caps)?.is_some() {
                return Ok(i);
            }
        }
        self.na_reps.push(leg.clone());
        Ok(self.na_reps.len() - 1)
    }

    /// Class index of a simple module (kernel modules materialize lazily).
    pub fn ab_class_of(&mut self, module: &GModule) -> Result<usize> {
        for (i, (rep, _)) in self.ab_reps.iter().enumerate() {
            if module_isomorphism(module, rep).is_some() {
                return Ok(i);
            }
        }
        let h2 = h2_space(&self.base, module, &self.caps)?;
        self.ab_reps.push((module.clone(), h2));
        Ok(self.ab_reps.len() - 1)
    }
}

/// Per-module-class invariant data.
#[derive(Clone)]
pub struct AbInvariant {
    /// F_p echelon of the F_C-saturated span of leg classes, in H^2
    /// coordinates of the registry's module representative.
    pub supp: Echelon,
    /// F_C-dimension of the span.
    pub supp_dim: usize,
    /// Relation dimension of the leg family.
    pub mult: usize,
    /// Classes of the legs, for reporting.
    pub leg_classes: Vec<CocycleClass>,
}

/// Invariants of a fundamental cover relative to a registry.
#[derive(Clone)]
pub struct FundamentalInvariants {
    base: FiniteGroup,
    /// Non-abelian class index -> multiplicity.
    pub na_mults: BTreeMap<usize, usize>,
    /// Module class index -> abelian invariant data.
    pub ab_data: BTreeMap<usize, AbInvariant>,
}

impl FundamentalInvariants {
    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    /// Multiset view of the non-abelian multiplicities.
    pub fn na_summary(&self) -> Vec<(usize, usize)> {
        self.na_mults.iter().map(|(&k, &v)| (k, v)).collect()
    }
}

/// Verifies the decomposition against `pi` and computes invariants.
///
/// The family must consist of indecomposable covers of `pi`'s base whose
/// fiber product is isomorphic to `pi` over the base (checked by search).
/// A single isomorphism leg denotes the empty decomposition of an
/// isomorphism and produces empty invariants.
pub fn cover_invariants(
    registry: &mut ClassRegistry,
    pi: &GroupHom,
    decomposition: &CoverFamily,
    caps: &Caps,
) -> Result<FundamentalInvariants> {
    if pi.dst() != registry.base() || decomposition.base() != registry.base() {
        return Err(CoverError::BaseMismatch);
    }
    let (m, _) = crate::square::fundament(pi)?;
    if !m.is_trivial() {
        return Err(CoverError::NotFundamental);
    }
    let mut invariants = FundamentalInvariants {
        base: registry.base().clone(),
        na_mults: BTreeMap::new(),
        ab_data: BTreeMap::new(),
    };
    if decomposition.len() == 1 && decomposition.legs()[0].kernel().is_trivial() {
        if !pi.kernel().is_trivial() {
            return Err(CoverError::DecompositionFailed(
                "an isomorphism leg cannot decompose a proper cover".into(),
            ));
        }
        return Ok(invariants);
    }
    for leg in decomposition.legs() {
        if !crate::square::is_indecomposable(leg) {
            return Err(CoverError::DecompositionFailed("leg is not indecomposable".into()));
        }
    }
    // Verify the family presents pi: fiber product isomorphic over the base.
    let fp = fiber_product(decomposition, caps)?;
    if isomorphic_over_base(&fp.to_base, pi, caps)?.is_none() {
        return Err(CoverError::DecompositionFailed(
            "fiber product of the family is not the cover".into(),
        ));
    }
    // Group the legs.
    let mut ab_legs: BTreeMap<usize, Vec<GroupHom>> = BTreeMap::new();
    for leg in decomposition.legs() {
        if leg.kernel().is_abelian() {
            let km = module_from_kernel(leg)?;
            let class_idx = registry.ab_class_of(&km.module)?;
            ab_legs.entry(class_idx).or_default().push(leg.clone());
        } else {
            let class_idx = registry.na_class_of(leg)?;
            *invariants.na_mults.entry(class_idx).or_insert(0) += 1;
        }
    }
    for (class_idx, legs) in ab_legs {
        let (module, h2) = registry.ab_rep(class_idx);
        let classes: Vec<CocycleClass> = legs
            .iter()
            .map(|leg| extension_class(leg, module, caps))
            .collect::<Result<_>>()?;
        let sr = span_and_relations(&classes, h2)?;
        invariants.ab_data.insert(
            class_idx,
            AbInvariant {
                supp: sr.span_echelon,
                supp_dim: sr.span_dim,
                mult: sr.relation_dim,
                leg_classes: classes,
            },
        );
    }
    Ok(invariants)
}

/// Ordering flags between two fundamental covers' invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverComparison {
    /// First dominates second (`second ≼ first`).
    pub first_dominates_second: bool,
    /// Second dominates first (`first ≼ second`).
    pub second_dominates_first: bool,
    pub isomorphic: bool,
}

impl CoverComparison {
    pub fn incomparable(&self) -> bool {
        !self.first_dominates_second && !self.second_dominates_first
    }
}

/// Compares invariants per the multiplicity/support criterion: domination is
/// multiplicity inequality plus support inclusion at every class;
/// isomorphism is equality of both.
pub fn compare_covers(
    registry: &ClassRegistry,
    a: &FundamentalInvariants,
    b: &FundamentalInvariants,
) -> Result<CoverComparison> {
    if a.base() != registry.base() || b.base() != registry.base() {
        return Err(CoverError::BaseMismatch);
    }
    let dominates = |big: &FundamentalInvariants, small: &FundamentalInvariants| -> bool {
        // Multiplicities: every class of `small` bounded by `big`.
        for (idx, &mult) in &small.na_mults {
            if big.na_mults.get(idx).copied().unwrap_or(0) < mult {
                return false;
            }
        }
        for (idx, ab) in &small.ab_data {
            let (big_mult, big_supp) = match big.ab_data.get(idx) {
                Some(x) => (x.mult, Some(&x.supp)),
                None => (0, None),
            };
            if big_mult < ab.mult {
                return false;
            }
            match big_supp {
                Some(supp) => {
                    if !supp.contains_space(&ab.supp) {
                        return false;
                    }
                }
                None => {
                    if ab.supp.rank() > 0 {
                        return false;
                    }
                }
            }
        }
        true
    };
    let first_dominates_second = dominates(a, b);
    let second_dominates_first = dominates(b, a);
    let isomorphic = first_dominates_second
        && second_dominates_first
        && a.na_mults == b.na_mults
        && a.ab_data.len() == b.ab_data.len()
        && a.ab_data.iter().all(|(idx, ab)| {
            b.ab_data
                .get(idx)
                .map(|bb| bb.mult == ab.mult && bb.supp.same_space(&ab.supp))
                .unwrap_or(false)
        });
    Ok(CoverComparison { first_dominates_second, second_dominates_first, isomorphic })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hom::enumerate_homs;
    use crate::square::indecomposable_decomposition;

    fn caps() -> Caps {
        Caps::default()
    }

    fn klein_split_cover() -> (GroupHom, FiniteGroup) {
        let capsv = caps();
        let v = groups::klein_four(&capsv).unwrap();
        let c2 = groups::cyclic(2);
        let pr = enumerate_homs(&v, &c2, true, &capsv).unwrap().remove(0);
        (pr, c2)
    }

    fn c4_cover(c2: &FiniteGroup) -> GroupHom {
        let c4 = groups::cyclic(4);
        GroupHom::new(c4, c2.clone(), vec![0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn two_split_legs_give_mult_two_zero_supp() {
        let capsv = caps();
        let (split, c2) = klein_split_cover();
        let family = CoverFamily::new(&c2, vec![split.clone(), split.clone()]).unwrap();
        let fp = fiber_product(&family, &capsv).unwrap();
        let mut reg = ClassRegistry::new(&c2, &capsv);
        let inv = cover_invariants(&mut reg, &fp.to_base, &family, &capsv).unwrap();
        assert!(inv.na_mults.is_empty());
        assert_eq!(inv.ab_data.len(), 1);
        let ab = inv.ab_data.values().next().unwrap();
        assert_eq!(ab.supp_dim, 0);
        assert_eq!(ab.mult, 2);
    }

    #[test]
    fn c4_cover_has_line_supp_zero_mult() {
        let capsv = caps();
        let (_, c2) = klein_split_cover();
        let eta = c4_cover(&c2);
        let family = indecomposable_decomposition(&eta, &capsv).unwrap();
        let mut reg = ClassRegistry::new(&c2, &capsv);
        let inv = cover_invariants(&mut reg, &eta, &family, &capsv).unwrap();
        let ab = inv.ab_data.values().next().unwrap();
        assert_eq!(ab.supp_dim, 1);
        assert_eq!(ab.mult, 0);
    }

    #[test]
    fn nonabelian_singleton_gets_mult_one() {
        let capsv = caps();
        let a5 = groups::alternating(5, &capsv).unwrap();
        let one = groups::trivial();
        let pi = GroupHom::new(a5, one.clone(), vec![0; 60]).unwrap();
        assert!(crate::square::is_indecomposable(&pi));
        let family = CoverFamily::new(&one, vec![pi.clone()]).unwrap();
        let mut reg = ClassRegistry::new(&one, &capsv);
        let inv = cover_invariants(&mut reg, &pi, &family, &capsv).unwrap();
        assert_eq!(inv.na_summary(), vec![(0, 1)]);
        assert!(inv.ab_data.is_empty());
    }

    #[test]
    fn comparison_examples() {
        let capsv = caps();
        let (split, c2) = klein_split_cover();
        let eta_c4 = c4_cover(&c2);
        let mut reg = ClassRegistry::new(&c2, &capsv);
        let fam_c4 = indecomposable_decomposition(&eta_c4, &capsv).unwrap();
        let inv_c4 = cover_invariants(&mut reg, &eta_c4, &fam_c4, &capsv).unwrap();
        let fam_split = indecomposable_decomposition(&split, &capsv).unwrap();
        let inv_split = cover_invariants(&mut reg, &split, &fam_split, &capsv).unwrap();
        // Same invariants compare isomorphic.
        let self_cmp = compare_covers(&reg, &inv_c4, &inv_c4).unwrap();
        assert!(self_cmp.isomorphic);
        // C4 cover vs split cover: incomparable (supports differ, and the
        // split cover's mult exceeds the C4 cover's).
        let cmp = compare_covers(&reg, &inv_c4, &inv_split).unwrap();
        assert!(cmp.incomparable());
        // Fiber product of both dominates each.
        let family = CoverFamily::new(&c2, vec![eta_c4.clone(), split.clone()]).unwrap();
        let fp = fiber_product(&family, &capsv).unwrap();
        let inv_both = cover_invariants(&mut reg, &fp.to_base, &family, &capsv).unwrap();
        let cmp2 = compare_covers(&reg, &inv_both, &inv_c4).unwrap();
        assert!(cmp2.first_dominates_second);
        assert!(!cmp2.second_dominates_first);
        // Cross-check with the explicit domination search.
        assert!(crate::square::dominates(&fp.to_base, &eta_c4, &capsv).unwrap().is_some());
        assert!(crate::square::dominates(&eta_c4, &fp.to_base, &capsv).unwrap().is_none());
    }

    #[test]
    fn uniqueness_across_decompositions() {
        // C4 x C2 over C2 decomposes in three ways; invariants agree.
        let capsv = caps();
        let c2 = groups::cyclic(2);
        let c4 = groups::cyclic(4);
        let (_, pr1, _) = FiniteGroup::direct_product(&c4, &c2, "C4xC2", &capsv).unwrap();
        let mod2 = GroupHom::new(pr1.dst().clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let pi = crate::hom::compose(&pr1, &mod2).unwrap();
        let decomps = crate::square::all_decompositions(&pi, 8, &capsv).unwrap();
        assert!(decomps.len() >= 2, "expected multiple decompositions, got {}", decomps.len());
        let mut reg = ClassRegistry::new(&c2, &capsv);
        let invs: Vec<FundamentalInvariants> = decomps
            .iter()
            .map(|fam| cover_invariants(&mut reg, &pi, fam, &capsv).unwrap())
            .collect();
        for w in invs.windows(2) {
            let cmp = compare_covers(&reg, &w[0], &w[1]).unwrap();
            assert!(cmp.isomorphic);
        }
    }
}
