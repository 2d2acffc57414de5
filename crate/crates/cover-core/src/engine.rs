//! Embedding property, basic and superbasic covers, and the
//! smallest-embedding-cover fixed point for finite groups.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::caps::Caps;
use crate::cohomology::{extension_class_raw, h2_space, span_and_relations};
use crate::error::{CoverError, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{
    compose, enumerate_homs, epis_per_kernel, is_isomorphic, is_quotient, quotient_reps, GroupHom,
};
use crate::square::{
    compact_by_quotients, dominates, fiber_product, is_indecomposable, isomorphic_over_base,
    pullback, CoverFamily, Square,
};

/// A finite embedding problem: solve `gamma` with `alpha ∘ gamma = phi`.
#[derive(Clone, Debug)]
pub struct EmbeddingProblem {
    pub phi: GroupHom,
    pub alpha: GroupHom,
}

/// Result of the embedding-property scan.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub has_ep: bool,
    /// First unsolvable problem in enumeration order, when one exists.
    pub witness: Option<EmbeddingProblem>,
}

/// Enumerates the embedding problems of `g` up to the symmetries that
/// preserve solvability: `B` runs over quotient types of `g`, `alpha` over
/// all epimorphisms of `B` onto a minimal quotient (so `alpha` is
/// indecomposable, which suffices by factoring), and `phi` over one
/// representative per kernel.
fn for_each_problem<F>(g: &FiniteGroup, caps: &Caps, mut visit: F) -> Result<()>
where
    F: FnMut(&GroupHom, &GroupHom, &FiniteGroup) -> Result<bool>,
{
    let breps = quotient_reps(g, caps)?;
    for b in &breps {
        if b.order() == 1 {
            continue;
        }
        // Distinct minimal quotients of B up to isomorphism.
        let mut areps: Vec<FiniteGroup> = Vec::new();
        for m in minimal_normals(b) {
            let msub = Subgroup::from_sorted_unchecked(b, m.clone());
            let (a, _) = b.quotient(&msub)?;
            let mut fresh = true;
            for seen in &areps {
                if seen.order() == a.order() && is_isomorphic(seen, &a, caps)?.is_some() {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                areps.push(a);
            }
        }
        for a in &areps {
            let phis = epis_per_kernel(g, a, caps)?;
            if phis.is_empty() {
                continue;
            }
            let alphas: Vec<GroupHom> = enumerate_homs(b, a, true, caps)?
                .into_iter()
                .filter(|alpha| is_minimal_kernel(alpha))
                .collect();
            for alpha in &alphas {
                for phi in &phis {
                    if !visit(phi, alpha, b)? {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn minimal_normals(g: &FiniteGroup) -> Vec<Vec<u16>> {
    let normals = g.normal_subgroups();
    normals
        .iter()
        .filter(|n| n.len() > 1)
        .filter(|n| {
            !normals.iter().any(|m| {
                m.len() > 1 && m.len() < n.len() && m.iter().all(|e| n.binary_search(e).is_ok())
            })
        })
        .cloned()
        .collect()
}

fn is_minimal_kernel(alpha: &GroupHom) -> bool {
    let ker = alpha.kernel();
    if ker.is_trivial() {
        return false;
    }
    let b = alpha.src();
    !b.normal_subgroups().iter().any(|m| {
        m.len() > 1
            && m.len() < ker.order()
            && m.iter().all(|e| ker.elements().binary_search(e).is_ok())
    })
}

/// Decides the embedding property by exhausting the reduced problem space;
/// reports the first unsolvable problem as a witness.
pub fn has_embedding_property(g: &FiniteGroup, caps: &Caps) -> Result<EmbeddingReport> {
    let mut witness: Option<EmbeddingProblem> = None;
    for_each_problem(g, caps, |phi, alpha, _b| {
        if dominates(phi, alpha, caps)?.is_none() {
            witness = Some(EmbeddingProblem { phi: phi.clone(), alpha: alpha.clone() });
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(EmbeddingReport { has_ep: witness.is_none(), witness })
}

/// Superbasic covers found by scanning a group's embedding problems.
pub struct SuperbasicScan {
    /// Pullback square and cover, deduplicated up to isomorphism over `g`.
    pub covers: Vec<(Square, GroupHom)>,
    /// Candidates whose pullback exceeded the order cap.
    pub skipped_over_cap: usize,
}

/// Enumerates superbasic covers of `g`: pullbacks of unsolvable embedding
/// problems `(phi, alpha)` with `alpha` indecomposable between quotients of
/// `g`. Such a pullback square is compact exactly because `phi` does not
/// dominate `alpha`.
pub fn enumerate_superbasic(g: &FiniteGroup, caps: &Caps) -> Result<SuperbasicScan> {
    let mut covers: Vec<(Square, GroupHom)> = Vec::new();
    let mut skipped = 0usize;
    for_each_problem(g, caps, |phi, alpha, b| {
        if dominates(phi, alpha, caps)?.is_some() {
            return Ok(true);
        }
        let needed = b.order() * g.order() / alpha.dst().order();
        if needed > caps.max_order {
            skipped += 1;
            return Ok(true);
        }
        let (square, _) = pullback(alpha, phi, caps)?;
        let eta = square.eta.clone();
        for (_, seen) in &covers {
            if isomorphic_over_base(&eta, seen, caps)?.is_some() {
                return Ok(true);
            }
        }
        covers.push((square, eta));
        Ok(true)
    })?;
    Ok(SuperbasicScan { covers, skipped_over_cap: skipped })
}

/// Output of the smallest-embedding-cover construction.
#[derive(Clone)]
pub struct SecResult {
    /// The composed cover `E ↠ G`.
    pub cover: GroupHom,
    /// Superbasic steps, first step at index 0; each step's `eta` maps the
    /// next chain group onto the previous one.
    pub chain: Vec<Square>,
    /// Final embedding-property report of the cover source (always positive).
    pub ep_report: EmbeddingReport,
    pub seed: u64,
}

impl SecResult {
    /// The cover source `E`.
    pub fn source(&self) -> &FiniteGroup {
        self.cover.src()
    }
}

/// Iterates superbasic covers until the embedding property holds.
///
/// The candidate order at each step is shuffled by `seed`; the resulting
/// cover is independent of the seed up to isomorphism over `g`.
pub fn smallest_embedding_cover(g: &FiniteGroup, seed: u64, caps: &Caps) -> Result<SecResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = g.clone();
    let mut composed = GroupHom::identity(g);
    let mut chain: Vec<Square> = Vec::new();
    for _ in 0..caps.max_sec_iters {
        let report = has_embedding_property(&current, caps)?;
        if report.has_ep {
            return Ok(SecResult { cover: composed, chain, ep_report: report, seed });
        }
        let scan = enumerate_superbasic(&current, caps)?;
        if scan.covers.is_empty() {
            if scan.skipped_over_cap > 0 {
                return Err(CoverError::OrderCapExceeded {
                    needed: caps.max_order + 1,
                    cap: caps.max_order,
                });
            }
            return Err(CoverError::Internal(
                "no superbasic cover although the embedding property fails".into(),
            ));
        }
        let mut order: Vec<usize> = (0..scan.covers.len()).collect();
        order.shuffle(&mut rng);
        let (square, eta) = scan.covers[order[0]].clone();
        composed = compose(&eta, &composed)?;
        chain.push(square);
        current = chain.last().expect("just pushed").eta.src().clone();
    }
    Err(CoverError::IterationCapExceeded(caps.max_sec_iters))
}

/// Classification of a cover against the computed smallest embedding cover
/// of its base.
#[derive(Clone, Debug)]
pub struct CoverClassification {
    pub indecomposable: bool,
    pub fundamental: bool,
    pub superbasic: bool,
    pub basic: bool,
    pub i_cover: bool,
    /// Compact cartesian square witnessing basicness.
    pub basic_square: Option<Square>,
    /// Compact cartesian square with bottom-left a quotient of the base.
    pub superbasic_square: Option<Square>,
    /// Map from the smallest embedding cover witnessing domination.
    pub i_cover_witness: Option<GroupHom>,
}

/// Classifier for covers of a fixed base group; computes the smallest
/// embedding cover once (seed 0) and reuses its quotients as the finite
/// part of the cover universe.
pub struct Classifier {
    base: FiniteGroup,
    sec: SecResult,
    ef_reps: Vec<FiniteGroup>,
    caps: Caps,
}

impl Classifier {
    pub fn new(base: &FiniteGroup, caps: &Caps) -> Result<Classifier> {
        let sec = smallest_embedding_cover(base, 0, caps)?;
        let ef_reps = quotient_reps(sec.source(), caps)?;
        Ok(Classifier { base: base.clone(), sec, ef_reps, caps: caps.clone() })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn sec(&self) -> &SecResult {
        &self.sec
    }

    /// True when `b` is isomorphic to a quotient of the smallest embedding
    /// cover, i.e. lies in the finite cover universe of the base.
    pub fn in_cover_universe(&self, b: &FiniteGroup) -> Result<bool> {
        for rep in &self.ef_reps {
            if rep.order() == b.order() && is_isomorphic(rep, b, &self.caps)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Classifies a cover of the base.
    ///
    /// Basic: some normal `N` of the source with `N ∩ Ker eta = 1` yields a
    /// compact cartesian square whose bottom-left group lies in the cover
    /// universe. Superbasic: additionally the bottom-left group is a
    /// quotient of the base itself and the cover is indecomposable.
    /// I-cover: the smallest embedding cover dominates the cover.
    pub fn classify(&self, eta: &GroupHom) -> Result<CoverClassification> {
        if eta.dst() != &self.base {
            return Err(CoverError::BaseMismatch);
        }
        if !eta.is_surjective() {
            return Err(CoverError::TypeMismatch("cover must be surjective".into()));
        }
        let indecomposable = is_indecomposable(eta);
        let fundamental = crate::square::is_fundamental(eta)?;
        let i_cover_witness = dominates(&self.sec.cover, eta, &self.caps)?;
        let h = eta.src();
        let ker = eta.kernel();
        let mut basic_square: Option<Square> = None;
        let mut superbasic_square: Option<Square> = None;
        for n in h.normal_subgroups() {
            let nsub = Subgroup::from_sorted_unchecked(h, n.clone());
            if !nsub.intersect(&ker).is_trivial() {
                continue;
            }
            let square = crate::square::cover_square(eta, &nsub)?;
            if !compact_by_quotients(&square, &self.caps)? {
                continue;
            }
            let b = square.beta.dst();
            if basic_square.is_none() && self.in_cover_universe(b)? {
                basic_square = Some(square.clone());
            }
            if superbasic_square.is_none()
                && indecomposable
                && is_quotient(&self.base, b, &self.caps)?.is_some()
            {
                superbasic_square = Some(square.clone());
            }
            if basic_square.is_some() && (superbasic_square.is_some() || !indecomposable) {
                break;
            }
        }
        Ok(CoverClassification {
            indecomposable,
            fundamental,
            superbasic: superbasic_square.is_some(),
            basic: basic_square.is_some(),
            i_cover: i_cover_witness.is_some(),
            basic_square,
            superbasic_square,
            i_cover_witness,
        })
    }

}

/// One-shot classification; prefer [`Classifier`] when classifying several
/// covers of the same base.
pub fn classify_cover(eta: &GroupHom, caps: &Caps) -> Result<CoverClassification> {
    Classifier::new(eta.dst(), caps)?.classify(eta)
}

/// Builds an I-cover from a family of indecomposable epimorphisms onto a
/// common finite group, checking the direct-product condition (a) and the
/// linear-independence condition (b) over trivial simple modules.
///
/// The base is `G = (fiber product over A of the B_i) × A` with `phi` the
/// second projection; each `alpha_i` pulls back to a cover of `G`, and the
/// returned cover is the fiber product of those pullbacks.
pub fn general_i_cover(alphas: &[GroupHom], caps: &Caps) -> Result<(FiniteGroup, GroupHom)> {
    if alphas.is_empty() {
        return Err(CoverError::TypeMismatch("family must be nonempty".into()));
    }
    let a = alphas[0].dst().clone();
    for alpha in alphas {
        if alpha.dst() != &a {
            return Err(CoverError::TypeMismatch("family targets differ".into()));
        }
        if !alpha.is_surjective() {
            return Err(CoverError::TypeMismatch("family member not surjective".into()));
        }
        if !is_indecomposable(alpha) {
            return Err(CoverError::NotIndecomposable);
        }
    }
    // Condition (a): no source splits off its kernel as a direct factor.
    for (i, alpha) in alphas.iter().enumerate() {
        let b = alpha.src();
        let ker = alpha.kernel();
        for u in b.normal_subgroups() {
            let usub = Subgroup::from_sorted_unchecked(b, u.clone());
            if usub.intersect(&ker).is_trivial()
                && usub.order() * ker.order() == b.order()
                && usub.product_set(&ker).len() == b.order()
            {
                return Err(CoverError::ConditionAViolated(i));
            }
        }
    }
    // Condition (b): classes over each trivial simple module are
    // independent over its endomorphism field.
    let mut by_trivial: std::collections::BTreeMap<(u32, usize), Vec<usize>> =
        std::collections::BTreeMap::new();
    for (i, alpha) in alphas.iter().enumerate() {
        if !alpha.kernel().is_abelian() {
            continue;
        }
        let km = crate::module::module_from_kernel(alpha)?;
        let trivial_action = (0..a.order())
            .all(|g| km.module.act_matrix(g) == &crate::fp::mat_identity(km.module.dim()));
        if trivial_action {
            by_trivial.entry((km.module.prime(), km.module.dim())).or_default().push(i);
        }
    }
    for ((_, _), indices) in &by_trivial {
        let classes: Vec<_> = indices
            .iter()
            .map(|&i| extension_class_raw(&alphas[i]).map(|(c, _)| c))
            .collect::<Result<_>>()?;
        let h2 = h2_space(&a, &classes[0].module, caps)?;
        let sr = span_and_relations(&classes, &h2)?;
        if sr.relation_dim > 0 {
            return Err(CoverError::ConditionBViolated);
        }
    }
    // Base group G = (fiber product over A) x A.
    let b_family = CoverFamily::new(&a, alphas.to_vec())?;
    let b_fp = fiber_product(&b_family, caps)?;
    let (g, _, phi) =
        FiniteGroup::direct_product(&b_fp.group, &a, &format!("{}-base", a.name()), caps)?;
    // Pull each alpha back along phi and take the fiber product over G.
    let mut legs = Vec::with_capacity(alphas.len());
    for alpha in alphas {
        let (square, _) = pullback(alpha, &phi, caps)?;
        legs.push(square.eta);
    }
    let family = CoverFamily::new(&g, legs)?;
    let fp = fiber_product(&family, caps)?;
    Ok((g, fp.to_base))
}

/// Fiber product of `n` copies of an indecomposable cover; `n = 0` gives the
/// identity cover of the base.
pub fn power_cover(eta: &GroupHom, n: usize, caps: &Caps) -> Result<GroupHom> {
    if n == 0 {
        return Ok(GroupHom::identity(eta.dst()));
    }
    if !is_indecomposable(eta) {
        return Err(CoverError::NotIndecomposable);
    }
    let family = CoverFamily::new(eta.dst(), vec![eta.clone(); n])?;
    let fp = fiber_product(&family, caps)?;
    Ok(fp.to_base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn caps() -> Caps {
        Caps::default()
    }

    fn s3_times_c2(caps: &Caps) -> (FiniteGroup, GroupHom, GroupHom) {
        let s3 = groups::symmetric(3, caps).unwrap();
        let c2 = groups::cyclic(2);
        FiniteGroup::direct_product(&s3, &c2, "S3xC2", caps).unwrap()
    }

    #[test]
    fn trivial_and_c2_have_embedding_property() {
        let capsv = caps();
        assert!(has_embedding_property(&groups::trivial(), &capsv).unwrap().has_ep);
        assert!(has_embedding_property(&groups::cyclic(2), &capsv).unwrap().has_ep);
    }

    #[test]
    fn small_groups_with_embedding_property() {
        let capsv = caps();
        for g in [
            groups::cyclic(3),
            groups::cyclic(4),
            groups::klein_four(&capsv).unwrap(),
            groups::symmetric(3, &capsv).unwrap(),
            groups::quaternion8(),
        ] {
            let report = has_embedding_property(&g, &capsv).unwrap();
            assert!(report.has_ep, "{} should have the embedding property", g.name());
        }
    }

    #[test]
    fn s3_times_c2_fails_embedding_property_with_witness() {
        let capsv = caps();
        let (g, _, _) = s3_times_c2(&capsv);
        let report = has_embedding_property(&g, &capsv).unwrap();
        assert!(!report.has_ep);
        let witness = report.witness.unwrap();
        // The witness problem: phi with kernel the S3 factor, alpha the sign
        // map of an S3 quotient.
        let phi_ker = witness.phi.kernel();
        assert_eq!(phi_ker.order(), 6);
        assert!(!phi_ker.is_abelian());
        assert_eq!(witness.alpha.src().order(), 6);
        assert_eq!(witness.alpha.dst().order(), 2);
        // Re-verify unsolvability directly.
        assert!(dominates(&witness.phi, &witness.alpha, &capsv).unwrap().is_none());
    }

    #[test]
    fn superbasic_scan_empty_for_embedding_property_groups() {
        let capsv = caps();
        for g in [groups::trivial(), groups::cyclic(2), groups::symmetric(3, &capsv).unwrap()] {
            let scan = enumerate_superbasic(&g, &capsv).unwrap();
            assert!(scan.covers.is_empty());
            assert_eq!(scan.skipped_over_cap, 0);
        }
    }

    #[test]
    fn superbasic_covers_of_s3_times_c2() {
        let capsv = caps();
        let (g, _, _) = s3_times_c2(&capsv);
        let scan = enumerate_superbasic(&g, &capsv).unwrap();
        assert!(!scan.covers.is_empty());
        // Contains an order-36 cover with kernel of order 3.
        assert!(scan
            .covers
            .iter()
            .any(|(_, eta)| eta.src().order() == 36 && eta.kernel().order() == 3));
        // Every scan result is genuinely superbasic: indecomposable with a
        // compact square over a quotient of g.
        for (square, eta) in &scan.covers {
            assert!(is_indecomposable(eta));
            assert!(compact_by_quotients(square, &capsv).unwrap());
        }
    }

    #[test]
    fn sec_of_embedding_property_group_is_itself() {
        let capsv = caps();
        let c2 = groups::cyclic(2);
        let sec = smallest_embedding_cover(&c2, 0, &capsv).unwrap();
        assert!(sec.chain.is_empty());
        assert_eq!(sec.source().order(), 2);
        let one = groups::trivial();
        let sec1 = smallest_embedding_cover(&one, 0, &capsv).unwrap();
        assert!(sec1.chain.is_empty());
        assert_eq!(sec1.source().order(), 1);
    }

    #[test]
    fn sec_of_s3_times_c2_reaches_order_108() {
        let capsv = caps();
        let (g, _, _) = s3_times_c2(&capsv);
        let sec = smallest_embedding_cover(&g, 0, &capsv).unwrap();
        assert_eq!(sec.source().order(), 108);
        assert_eq!(sec.chain.len(), 2);
        assert!(sec.ep_report.has_ep);
        // Chain composition equals the cover.
        let mut composed = GroupHom::identity(&g);
        for square in &sec.chain {
            composed = compose(&square.eta, &composed).unwrap();
        }
        assert_eq!(composed, sec.cover);
    }

    #[test]
    fn sec_seeds_agree_up_to_cover_isomorphism() {
        let capsv = caps();
        let (g, _, _) = s3_times_c2(&capsv);
        let a = smallest_embedding_cover(&g, 1, &capsv).unwrap();
        let b = smallest_embedding_cover(&g, 5, &capsv).unwrap();
        assert!(isomorphic_over_base(&a.cover, &b.cover, &capsv).unwrap().is_some());
    }

    #[test]
    fn classify_identity_cover() {
        let capsv = caps();
        let (g, _, _) = s3_times_c2(&capsv);
        let clf = Classifier::new(&g, &capsv).unwrap();
        let id = GroupHom::identity(&g);
        let c = clf.classify(&id).unwrap();
        assert!(c.i_cover);
        assert!(c.basic);
        assert!(!c.superbasic);
        assert!(!c.indecomposable);
    }

    #[test]
    fn classify_c4_over_c2() {
        let capsv = caps();
        let c2 = groups::cyclic(2);
        let c4 = groups::cyclic(4);
        let eta = GroupHom::new(c4, c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let clf = Classifier::new(&c2, &capsv).unwrap();
        let c = clf.classify(&eta).unwrap();
        assert!(!c.basic);
        assert!(!c.i_cover);
        assert!(c.indecomposable);
    }

    #[test]
    fn classify_superbasic_cover_of_s3_times_c2() {
        let capsv = caps();
        let (g, _, _) = s3_times_c2(&capsv);
        let scan = enumerate_superbasic(&g, &capsv).unwrap();
        let (_, eta) = &scan.covers[0];
        let clf = Classifier::new(&g, &capsv).unwrap();
        let c = clf.classify(eta).unwrap();
        assert!(c.superbasic);
        assert!(c.basic);
        assert!(c.i_cover);
        assert!(c.superbasic_square.is_some());
    }

    #[test]
    fn general_i_cover_single_sign() {
        let capsv = caps();
        let s3 = groups::symmetric(3, &capsv).unwrap();
        let c2 = groups::cyclic(2);
        let images: Vec<usize> = (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        let sgn = GroupHom::new(s3, c2, images).unwrap();
        let (g, cover) = general_i_cover(&[sgn], &capsv).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(cover.src().order(), 36);
        assert_eq!(cover.dst(), &g);
    }

    #[test]
    fn general_i_cover_condition_a() {
        let capsv = caps();
        let c6 = groups::cyclic(6);
        let c2 = groups::cyclic(2);
        let alpha = GroupHom::new(c6, c2, (0..6).map(|x| x % 2).collect()).unwrap();
        assert!(matches!(
            general_i_cover(&[alpha], &capsv),
            Err(CoverError::ConditionAViolated(0))
        ));
    }

    #[test]
    fn general_i_cover_condition_b() {
        let capsv = caps();
        let c2 = groups::cyclic(2);
        let a1 = GroupHom::new(groups::cyclic(4), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let a2 = GroupHom::new(groups::cyclic(4), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(matches!(
            general_i_cover(&[a1, a2], &capsv),
            Err(CoverError::ConditionBViolated)
        ));
    }

    #[test]
    fn power_cover_sizes() {
        let capsv = caps();
        let s3 = groups::symmetric(3, &capsv).unwrap();
        let c2 = groups::cyclic(2);
        let images: Vec<usize> = (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        let sgn = GroupHom::new(s3, c2.clone(), images).unwrap();
        let p0 = power_cover(&sgn, 0, &capsv).unwrap();
        assert!(p0.is_bijective());
        let p1 = power_cover(&sgn, 1, &capsv).unwrap();
        assert!(isomorphic_over_base(&p1, &sgn, &capsv).unwrap().is_some());
        let p2 = power_cover(&sgn, 2, &capsv).unwrap();
        assert_eq!(p2.src().order(), 18);
    }
}
