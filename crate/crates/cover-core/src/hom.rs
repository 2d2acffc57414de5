//! Homomorphisms between finite groups and exhaustive search over them.
//!
//! The search always runs over images of a greedily computed minimal
//! generating set of the source, never over all `|dst|^|src|` maps. A partial
//! assignment of generator images is extended over the whole source by a
//! breadth-first walk; extension failures prune the branch.

use std::collections::HashMap;

use crate::caps::Caps;
use crate::error::{CoverError, Result};
use crate::group::{FiniteGroup, Subgroup};

/// A total homomorphism given by its image array.
#[derive(Clone)]
pub struct GroupHom {
    src: FiniteGroup,
    dst: FiniteGroup,
    images: Vec<u16>,
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.dst == other.dst && self.images == other.images
    }
}
impl Eq for GroupHom {}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, kernel order {})",
            self.src.name(),
            self.dst.name(),
            self.kernel().order()
        )
    }
}

impl GroupHom {
    /// Validates the homomorphism property on all pairs.
    pub fn new(src: FiniteGroup, dst: FiniteGroup, images: Vec<usize>) -> Result<GroupHom> {
        if images.len() != src.order() {
            return Err(CoverError::TypeMismatch(format!(
                "image array has length {}, expected {}",
                images.len(),
                src.order()
            )));
        }
        for &v in &images {
            if v >= dst.order() {
                return Err(CoverError::TypeMismatch(format!("image {v} out of range")));
            }
        }
        if images[0] != 0 {
            return Err(CoverError::TypeMismatch("identity must map to identity".into()));
        }
        let imgs: Vec<u16> = images.iter().map(|&x| x as u16).collect();
        for a in 0..src.order() {
            for b in 0..src.order() {
                if imgs[src.mul(a, b)] != dst.mul(imgs[a] as usize, imgs[b] as usize) as u16 {
                    return Err(CoverError::TypeMismatch(format!(
                        "not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        Ok(GroupHom { src, dst, images: imgs })
    }

    pub(crate) fn new_unchecked(src: FiniteGroup, dst: FiniteGroup, images: Vec<u16>) -> GroupHom {
        debug_assert_eq!(images.len(), src.order());
        GroupHom { src, dst, images }
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom {
            src: g.clone(),
            dst: g.clone(),
            images: (0..g.order() as u16).collect(),
        }
    }

    pub fn src(&self) -> &FiniteGroup {
        &self.src
    }

    pub fn dst(&self) -> &FiniteGroup {
        &self.dst
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn kernel(&self) -> Subgroup {
        let elems: Vec<u16> = (0..self.src.order())
            .filter(|&x| self.images[x] == 0)
            .map(|x| x as u16)
            .collect();
        Subgroup::from_sorted_unchecked(&self.src, elems)
    }

    pub fn image(&self) -> Subgroup {
        let mut elems: Vec<u16> = self.images.clone();
        elems.sort_unstable();
        elems.dedup();
        Subgroup::from_sorted_unchecked(&self.dst, elems)
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, sub: &Subgroup) -> Vec<u16> {
        let mut elems: Vec<u16> = sub.elements().iter().map(|&x| self.images[x as usize]).collect();
        elems.sort_unstable();
        elems.dedup();
        elems
    }

    /// Preimage of a sorted element list of the destination.
    pub fn preimage_of(&self, elems: &[u16]) -> Vec<u16> {
        (0..self.src.order() as u16)
            .filter(|&x| elems.binary_search(&self.images[x as usize]).is_ok())
            .collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().order() == self.dst.order()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().order() == 1
    }

    pub fn is_bijective(&self) -> bool {
        self.src.order() == self.dst.order() && self.is_injective()
    }

    /// Inverse of a bijective homomorphism.
    pub fn inverse(&self) -> Result<GroupHom> {
        if !self.is_bijective() {
            return Err(CoverError::TypeMismatch("inverse of a non-bijection".into()));
        }
        let mut inv = vec![0u16; self.dst.order()];
        for x in 0..self.src.order() {
            inv[self.images[x] as usize] = x as u16;
        }
        Ok(GroupHom::new_unchecked(self.dst.clone(), self.src.clone(), inv))
    }
}

/// Composition `g ∘ f` (apply `f` first); requires `f.dst` and `g.src` to be
/// the same group object.
pub fn compose(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
    if f.dst() != g.src() {
        return Err(CoverError::TypeMismatch(
            "compose: middle groups are different objects".into(),
        ));
    }
    let images: Vec<u16> = (0..f.src().order())
        .map(|x| g.images[f.images[x] as usize])
        .collect();
    Ok(GroupHom::new_unchecked(f.src().clone(), g.dst().clone(), images))
}

/// Kernel and image of a homomorphism.
pub fn hom_kernel_image(f: &GroupHom) -> (Subgroup, Subgroup) {
    (f.kernel(), f.image())
}

#[derive(Clone, Copy, PartialEq)]
pub(crate) enum Require {
    Any,
    Surjective,
    Bijective,
}

/// Extends generator images to a full image array, or fails.
///
/// The walk assigns `im[x*g]` for each reached `x` and generator `g`; a final
/// pass checks `im[x*g] = im[x]*im[g]` for all `x`, which suffices for the
/// homomorphism property because every element is a word in the generators.
pub(crate) fn extend_by_generators(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    gens: &[usize],
    gen_images: &[usize],
) -> Option<Vec<u16>> {
    let n = src.order();
    let mut im = vec![u16::MAX; n];
    im[0] = 0;
    let mut order: Vec<usize> = Vec::with_capacity(n);
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for (k, &g) in gens.iter().enumerate() {
            let y = src.mul(x, g);
            let val = dst.mul(im[x] as usize, gen_images[k]) as u16;
            if im[y] == u16::MAX {
                im[y] = val;
                order.push(y);
            } else if im[y] != val {
                return None;
            }
        }
    }
    if order.len() < n {
        return None; // generators fail to generate; cannot happen for a true generating set
    }
    // Full verification sweep over (element, generator) pairs.
    for x in 0..n {
        for (k, &g) in gens.iter().enumerate() {
            if im[src.mul(x, g)] != dst.mul(im[x] as usize, gen_images[k]) as u16 {
                return None;
            }
        }
    }
    Some(im)
}

fn image_size(dst: &FiniteGroup, im: &[u16]) -> usize {
    let mut seen = vec![false; dst.order()];
    let mut count = 0;
    for &v in im {
        if !seen[v as usize] {
            seen[v as usize] = true;
            count += 1;
        }
    }
    count
}

/// Backtracking search over generator images.
///
/// `candidates[k]` lists allowed images for generator `k`, in the order they
/// will be tried; the search is deterministic. With `first_only` the search
/// stops at the first hit.
pub(crate) fn search_homs(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    candidates: &[Vec<usize>],
    require: Require,
    first_only: bool,
    budget: &mut u64,
) -> Result<Vec<GroupHom>> {
    let gens = src.generating_set();
    debug_assert_eq!(gens.len(), candidates.len());
    if require == Require::Bijective && src.order() != dst.order() {
        return Ok(Vec::new());
    }
    let mut out: Vec<GroupHom> = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    if gens.is_empty() {
        // Trivial source: single map.
        let hom = GroupHom::new_unchecked(src.clone(), dst.clone(), vec![0]);
        let ok = match require {
            Require::Any => true,
            Require::Surjective => dst.order() == 1,
            Require::Bijective => dst.order() == 1,
        };
        return Ok(if ok { vec![hom] } else { Vec::new() });
    }
    let k = gens.len();
    let mut depth = 0usize;
    loop {
        if depth == k {
            if *budget == 0 {
                return Err(CoverError::SearchBudgetExceeded);
            }
            *budget -= 1;
            let gen_images: Vec<usize> = (0..k).map(|i| candidates[i][choice[i]]).collect();
            if let Some(im) = extend_by_generators(src, dst, gens, &gen_images) {
                let ok = match require {
                    Require::Any => true,
                    Require::Surjective => image_size(dst, &im) == dst.order(),
                    Require::Bijective => {
                        src.order() == dst.order() && image_size(dst, &im) == dst.order()
                    }
                };
                if ok {
                    out.push(GroupHom::new_unchecked(src.clone(), dst.clone(), im));
                    if first_only {
                        return Ok(out);
                    }
                }
            }
            // Backtrack.
            loop {
                if depth == 0 {
                    out.sort_by(|a, b| a.images.cmp(&b.images));
                    return Ok(out);
                }
                depth -= 1;
                choice[depth] += 1;
                if choice[depth] < candidates[depth].len() {
                    depth += 1;
                    break;
                }
                choice[depth] = 0;
            }
            continue;
        }
        if candidates[depth].is_empty() {
            out.sort_by(|a, b| a.images.cmp(&b.images));
            return Ok(out);
        }
        depth += 1;
    }
}

/// Candidate images for each generator, filtered by an order-divisibility
/// (or order-equality) constraint and an optional per-generator fiber.
fn order_filtered_candidates(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    exact_order: bool,
    fiber: Option<&dyn Fn(usize) -> Vec<usize>>,
) -> Vec<Vec<usize>> {
    let gens = src.generating_set();
    gens.iter()
        .map(|&g| {
            let pool: Vec<usize> = match fiber {
                Some(f) => f(g),
                None => (0..dst.order()).collect(),
            };
            let go = src.elem_order(g);
            pool.into_iter()
                .filter(|&d| {
                    let od = dst.elem_order(d);
                    if exact_order {
                        od == go
                    } else {
                        go % od == 0
                    }
                })
                .collect()
        })
        .collect()
}

/// Exhaustive list of homomorphisms `src -> dst`, sorted by image array.
pub fn enumerate_homs(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    epi_only: bool,
    caps: &Caps,
) -> Result<Vec<GroupHom>> {
    let candidates = order_filtered_candidates(src, dst, false, None);
    let mut budget = caps.search_budget;
    search_homs(
        src,
        dst,
        &candidates,
        if epi_only { Require::Surjective } else { Require::Any },
        false,
        &mut budget,
    )
}

/// Searches for an isomorphism; `None` when the groups are not isomorphic.
///
/// Deterministic: cheap invariants (order, abelianness, element-order and
/// class-size profiles) run first, then a backtracking search over
/// order-and-class-matched generator images.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<Option<GroupHom>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(None);
    }
    if g.order_profile() != h.order_profile() {
        return Ok(None);
    }
    let class_profile = |x: &FiniteGroup| {
        let mut v: Vec<usize> = x.conjugacy_classes().iter().map(|c| c.len()).collect();
        v.sort_unstable();
        v
    };
    if class_profile(g) != class_profile(h) {
        return Ok(None);
    }
    let gens = g.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&gen| {
            (0..h.order())
                .filter(|&d| h.elem_order(d) == g.elem_order(gen) && h.class_size(d) == g.class_size(gen))
                .collect()
        })
        .collect();
    let mut budget = caps.search_budget;
    let found = search_homs(g, h, &candidates, Require::Bijective, true, &mut budget)?;
    Ok(found.into_iter().next())
}

/// Searches for an epimorphism `g ↠ target`: enumerates normal subgroups of
/// the right index and tests quotient isomorphism.
pub fn is_quotient(g: &FiniteGroup, target: &FiniteGroup, caps: &Caps) -> Result<Option<GroupHom>> {
    if g.order() % target.order() != 0 {
        return Ok(None);
    }
    let idx = g.order() / target.order();
    for entry in g.quotient_entries() {
        if entry.kernel.len() != idx {
            continue;
        }
        let qhom = GroupHom::new_unchecked(g.clone(), entry.group.clone(), entry.images.clone());
        if let Some(iso) = is_isomorphic(&entry.group, target, caps)? {
            return Ok(Some(compose(&qhom, &iso)?));
        }
    }
    Ok(None)
}

/// Epimorphisms `g ↠ A` up to post-composition with automorphisms of `A`:
/// one representative per kernel.
pub fn epis_per_kernel(g: &FiniteGroup, target: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupHom>> {
    let mut out = Vec::new();
    if g.order() % target.order() != 0 {
        return Ok(out);
    }
    let idx = g.order() / target.order();
    for entry in g.quotient_entries() {
        if entry.kernel.len() != idx {
            continue;
        }
        let qhom = GroupHom::new_unchecked(g.clone(), entry.group.clone(), entry.images.clone());
        if let Some(iso) = is_isomorphic(&entry.group, target, caps)? {
            out.push(compose(&qhom, &iso)?);
        }
    }
    Ok(out)
}

/// Deduplicated quotient groups of `g` up to isomorphism, smallest first.
pub fn quotient_reps(g: &FiniteGroup, caps: &Caps) -> Result<Vec<FiniteGroup>> {
    let mut reps: Vec<FiniteGroup> = Vec::new();
    for entry in g.quotient_entries() {
        let q = &entry.group;
        let mut fresh = true;
        for r in &reps {
            if r.order() == q.order() && is_isomorphic(r, q, caps)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(q.clone());
        }
    }
    reps.sort_by_key(|g| g.order());
    Ok(reps)
}

/// Fiber-constrained epimorphism search: homs `src -> dst` whose generator
/// images are confined to given fibers. Used by domination and cover
/// isomorphism searches.
pub(crate) fn search_constrained(
    src: &FiniteGroup,
    dst: &FiniteGroup,
    fiber: &dyn Fn(usize) -> Vec<usize>,
    require: Require,
    first_only: bool,
    caps: &Caps,
) -> Result<Vec<GroupHom>> {
    let exact = matches!(require, Require::Bijective);
    let candidates = order_filtered_candidates(src, dst, exact, Some(fiber));
    let mut budget = caps.search_budget;
    search_homs(src, dst, &candidates, require, first_only, &mut budget)
}

/// Memo for pairwise isomorphism checks keyed by group identity.
pub struct IsoCache {
    seen: HashMap<(usize, usize), bool>,
}

impl IsoCache {
    pub fn new() -> Self {
        IsoCache { seen: HashMap::new() }
    }

    pub fn isomorphic(&mut self, g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<bool> {
        let key = {
            let a = std::sync::Arc::as_ptr(&g.0) as usize;
            let b = std::sync::Arc::as_ptr(&h.0) as usize;
            (a.min(b), a.max(b))
        };
        if let Some(&v) = self.seen.get(&key) {
            return Ok(v);
        }
        let v = is_isomorphic(g, h, caps)?.is_some();
        self.seen.insert(key, v);
        Ok(v)
    }
}

impl Default for IsoCache {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn caps() -> Caps {
        Caps::default()
    }

    fn sign_hom(s3: &FiniteGroup, c2: &FiniteGroup) -> GroupHom {
        let images: Vec<usize> = (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        GroupHom::new(s3.clone(), c2.clone(), images).unwrap()
    }

    #[test]
    fn sign_kernel_and_image() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        let (ker, im) = hom_kernel_image(&sgn);
        assert_eq!(ker.order(), 3);
        assert_eq!(im.order(), 2);
        assert_eq!(sgn.src().order(), ker.order() * im.order());
    }

    #[test]
    fn identity_and_constant_maps() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let id = GroupHom::identity(&s3);
        assert!(id.kernel().is_trivial());
        assert!(id.image().is_whole_group());
        let one = groups::trivial();
        let constant = GroupHom::new(s3.clone(), one.clone(), vec![0; 6]).unwrap();
        assert_eq!(constant.kernel().order(), 6);
        assert_eq!(constant.image().order(), 1);
    }

    #[test]
    fn exactly_one_epi_s3_to_c2() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let epis = enumerate_homs(&s3, &c2, true, &caps()).unwrap();
        assert_eq!(epis.len(), 1);
        assert_eq!(epis[0], sign_hom(&s3, &c2));
    }

    #[test]
    fn three_epis_klein_to_c2() {
        let v = groups::klein_four(&caps()).unwrap();
        let c2 = groups::cyclic(2);
        let epis = enumerate_homs(&v, &c2, true, &caps()).unwrap();
        assert_eq!(epis.len(), 3);
    }

    #[test]
    fn no_epi_c2_to_c3() {
        let c2 = groups::cyclic(2);
        let c3 = groups::cyclic(3);
        assert!(enumerate_homs(&c2, &c3, true, &caps()).unwrap().is_empty());
    }

    #[test]
    fn epi_filter_matches_surjective_subset() {
        let v = groups::klein_four(&caps()).unwrap();
        let c2 = groups::cyclic(2);
        let all = enumerate_homs(&v, &c2, false, &caps()).unwrap();
        let surjective: Vec<&GroupHom> = all.iter().filter(|h| h.is_surjective()).collect();
        let epis = enumerate_homs(&v, &c2, true, &caps()).unwrap();
        assert_eq!(surjective.len(), epis.len());
        for (a, b) in surjective.iter().zip(epis.iter()) {
            assert_eq!(**a, *b);
        }
    }

    #[test]
    fn compose_with_identity() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        let id = GroupHom::identity(&s3);
        assert_eq!(compose(&id, &sgn).unwrap(), sgn);
    }

    #[test]
    fn compose_c8_to_c2_through_c4() {
        let c8 = groups::cyclic(8);
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let f = GroupHom::new(c8.clone(), c4.clone(), (0..8).map(|x| x % 4).collect()).unwrap();
        let g = GroupHom::new(c4.clone(), c2.clone(), (0..4).map(|x| x % 2).collect()).unwrap();
        let fg = compose(&f, &g).unwrap();
        let direct = GroupHom::new(c8, c2, (0..8).map(|x| x % 2).collect()).unwrap();
        assert_eq!(fg, direct);
    }

    #[test]
    fn compose_type_mismatch() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2a = groups::cyclic(2);
        let c2b = groups::cyclic(2); // structurally equal, different object
        let sgn = sign_hom(&s3, &c2a);
        let id_b = GroupHom::identity(&c2b);
        assert!(matches!(compose(&sgn, &id_b), Err(CoverError::TypeMismatch(_))));
    }

    #[test]
    fn c4_not_isomorphic_to_klein() {
        let c4 = groups::cyclic(4);
        let v = groups::klein_four(&caps()).unwrap();
        assert!(is_isomorphic(&c4, &v, &caps()).unwrap().is_none());
    }

    #[test]
    fn group_isomorphic_to_itself() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let iso = is_isomorphic(&s3, &s3, &caps()).unwrap().unwrap();
        assert!(iso.is_bijective());
    }

    #[test]
    fn c6_isomorphic_to_c2_times_c3() {
        let c6 = groups::cyclic(6);
        let (p, _, _) =
            FiniteGroup::direct_product(&groups::cyclic(2), &groups::cyclic(3), "C2xC3", &caps())
                .unwrap();
        let iso = is_isomorphic(&c6, &p, &caps()).unwrap().unwrap();
        assert!(iso.is_bijective());
    }

    #[test]
    fn quotient_detection() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        assert!(is_quotient(&s3, &c2, &caps()).unwrap().is_some());
        let c3 = groups::cyclic(3);
        assert!(is_quotient(&s3, &c3, &caps()).unwrap().is_none());
    }

    #[test]
    fn hom_validation_rejects_non_hom() {
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let bad = GroupHom::new(c4, c2, vec![0, 1, 1, 0]);
        assert!(bad.is_err());
    }
}
