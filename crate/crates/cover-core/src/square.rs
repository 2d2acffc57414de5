//! Commuting squares of epimorphisms, fiber products, domination,
//! indecomposability, and fundaments.
//!
//! A [`Square`] is the commuting quadruple
//!
//! ```text
//!        eta
//!     H ----->> G
//!     |         |
//!  beta|        |phi
//!     v         v
//!     B ----->> A
//!        alpha
//! ```
//!
//! of epimorphisms. The square is *semi-cartesian* when
//! `(Ker beta)(Ker eta) = Ker(phi ∘ eta)`, *cartesian* when additionally
//! `Ker beta ∩ Ker eta = 1`, and a cartesian square is *compact* when no
//! proper subgroup of `H` surjects simultaneously onto `B` and `G`.

use std::collections::HashMap;

use crate::caps::Caps;
use crate::error::{CoverError, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::hom::{compose, search_constrained, GroupHom, Require};

/// Commuting square of four epimorphisms.
#[derive(Clone, Debug)]
pub struct Square {
    pub eta: GroupHom,
    pub beta: GroupHom,
    pub alpha: GroupHom,
    pub phi: GroupHom,
}

impl Square {
    /// Validates shared corners, surjectivity, and commutation.
    pub fn new(eta: GroupHom, beta: GroupHom, alpha: GroupHom, phi: GroupHom) -> Result<Square> {
        if eta.src() != beta.src() {
            return Err(CoverError::TypeMismatch("eta and beta have different sources".into()));
        }
        if beta.dst() != alpha.src() {
            return Err(CoverError::TypeMismatch("beta target differs from alpha source".into()));
        }
        if eta.dst() != phi.src() {
            return Err(CoverError::TypeMismatch("eta target differs from phi source".into()));
        }
        if alpha.dst() != phi.dst() {
            return Err(CoverError::TypeMismatch("alpha and phi have different targets".into()));
        }
        for (name, hom) in [("eta", &eta), ("beta", &beta), ("alpha", &alpha), ("phi", &phi)] {
            if !hom.is_surjective() {
                return Err(CoverError::TypeMismatch(format!("{name} is not surjective")));
            }
        }
        for h in 0..eta.src().order() {
            if alpha.apply(beta.apply(h)) != phi.apply(eta.apply(h)) {
                return Err(CoverError::NonCommuting(h));
            }
        }
        Ok(Square { eta, beta, alpha, phi })
    }

    pub fn top_left(&self) -> &FiniteGroup {
        self.eta.src()
    }
}

/// Classification flags of a square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareStatus {
    pub semi_cartesian: bool,
    pub cartesian: bool,
    /// `None` when the square is not cartesian, so compactness does not apply.
    pub compact: Option<bool>,
    /// A proper subgroup of the top-left group surjecting onto both `B` and
    /// `G`, when one exists; first in the (order, elements) subgroup order.
    pub witness: Option<Vec<usize>>,
}

/// Classifies a square; compactness is decided by exhaustive subgroup
/// enumeration of the top-left group.
pub fn square_classify(s: &Square) -> SquareStatus {
    let h = s.top_left();
    let ker_beta = s.beta.kernel();
    let ker_eta = s.eta.kernel();
    let composed = compose(&s.eta, &s.phi).expect("square corners are shared");
    let ker_comp = composed.kernel();
    let product = ker_beta.product_set(&ker_eta);
    let semi = product == ker_comp.elements();
    let cartesian = semi && ker_beta.intersect(&ker_eta).is_trivial();
    if !cartesian {
        return SquareStatus { semi_cartesian: semi, cartesian: false, compact: None, witness: None };
    }
    let b_order = s.beta.dst().order();
    let g_order = s.eta.dst().order();
    let mut witness = None;
    for sub in h.all_subgroups() {
        if sub.len() == h.order() {
            continue;
        }
        if image_count(&s.beta, sub) != b_order {
            continue;
        }
        if image_count(&s.eta, sub) == g_order {
            witness = Some(sub.iter().map(|&x| x as usize).collect());
            break;
        }
    }
    SquareStatus {
        semi_cartesian: true,
        cartesian: true,
        compact: Some(witness.is_none()),
        witness,
    }
}

fn image_count(hom: &GroupHom, sub: &[u16]) -> usize {
    let mut seen = vec![false; hom.dst().order()];
    let mut count = 0;
    for &x in sub {
        let v = hom.apply(x as usize);
        if !seen[v] {
            seen[v] = true;
            count += 1;
        }
    }
    count
}

/// Compactness of a cartesian square via the quotient criterion.
///
/// A proper subgroup of `H` surjecting onto both `B` and `G` corresponds, by
/// Goursat's lemma applied inside the fiber product, to a common quotient `Q`
/// of `B` and `G` strictly refining `A`: a normal `M ⊊ Ker alpha` with an
/// epimorphism `G ↠ B/M` under which the square's maps factor compatibly.
/// Checking all such `M` avoids enumerating the subgroups of `H`.
pub fn compact_by_quotients(s: &Square, caps: &Caps) -> Result<bool> {
    let status_cartesian = {
        let ker_beta = s.beta.kernel();
        let ker_eta = s.eta.kernel();
        let composed = compose(&s.eta, &s.phi)?;
        ker_beta.intersect(&ker_eta).is_trivial()
            && ker_beta.product_set(&ker_eta) == composed.kernel().elements()
    };
    if !status_cartesian {
        return Err(CoverError::Internal("quotient compactness needs a cartesian square".into()));
    }
    let b = s.alpha.src();
    let g = s.phi.src();
    let ker_alpha = s.alpha.kernel();
    for m in b.normal_subgroups() {
        if m.len() >= ker_alpha.order() {
            continue;
        }
        if !m.iter().all(|e| ker_alpha.elements().binary_search(e).is_ok()) {
            continue;
        }
        // Q = B/M with induced map rho: Q -> A. Search phi'': G -> Q with
        // rho ∘ phi'' = phi; existence of one kills compactness.
        let msub = Subgroup::from_sorted_unchecked(b, m.clone());
        let (q, qmap) = b.quotient(&msub)?;
        let mut rho_images = vec![0u16; q.order()];
        for x in 0..b.order() {
            rho_images[qmap.apply(x)] = s.alpha.apply(x) as u16;
        }
        let rho = GroupHom::new_unchecked(q.clone(), s.alpha.dst().clone(), rho_images);
        let fiber = |gen: usize| -> Vec<usize> {
            let want = s.phi.apply(gen);
            (0..q.order()).filter(|&x| rho.apply(x) == want).collect()
        };
        let found = search_constrained(g, &q, &fiber, Require::Surjective, true, caps)?;
        if !found.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An indexed family of epimorphisms onto one base group.
#[derive(Clone, Debug)]
pub struct CoverFamily {
    base: FiniteGroup,
    legs: Vec<GroupHom>,
}

impl CoverFamily {
    pub fn new(base: &FiniteGroup, legs: Vec<GroupHom>) -> Result<CoverFamily> {
        if legs.is_empty() {
            return Err(CoverError::TypeMismatch("cover family must be nonempty".into()));
        }
        for leg in &legs {
            if leg.dst() != base {
                return Err(CoverError::TypeMismatch("family leg has a different base".into()));
            }
            if !leg.is_surjective() {
                return Err(CoverError::TypeMismatch("family leg is not surjective".into()));
            }
        }
        Ok(CoverFamily { base: base.clone(), legs })
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.base
    }

    pub fn legs(&self) -> &[GroupHom] {
        &self.legs
    }

    pub fn len(&self) -> usize {
        self.legs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.legs.is_empty()
    }
}

/// The fiber product of a family: matching tuples of the direct product,
/// with coordinate projections and the induced map to the base.
#[derive(Clone)]
pub struct FiberProduct {
    pub group: FiniteGroup,
    /// Element tuples in lexicographic order; index = group element index.
    pub tuples: Vec<Vec<u16>>,
    pub projections: Vec<GroupHom>,
    pub to_base: GroupHom,
    family: CoverFamily,
}

impl FiberProduct {
    pub fn family(&self) -> &CoverFamily {
        &self.family
    }

    /// Projection onto the coordinates in `subset` (a strictly increasing
    /// index list): returns the subfamily's fiber product and the projection.
    pub fn project_subset(&self, subset: &[usize], caps: &Caps) -> Result<(FiberProduct, GroupHom)> {
        let legs: Vec<GroupHom> = subset.iter().map(|&i| self.family.legs[i].clone()).collect();
        let subfamily = CoverFamily::new(&self.family.base, legs)?;
        let sub = fiber_product(&subfamily, caps)?;
        let index: HashMap<&Vec<u16>, u16> =
            sub.tuples.iter().enumerate().map(|(i, t)| (t, i as u16)).collect();
        let images: Vec<u16> = self
            .tuples
            .iter()
            .map(|t| {
                let small: Vec<u16> = subset.iter().map(|&i| t[i]).collect();
                index[&small]
            })
            .collect();
        let hom = GroupHom::new_unchecked(self.group.clone(), sub.group.clone(), images);
        Ok((sub, hom))
    }
}

/// Builds the fiber product of a family of covers.
pub fn fiber_product(family: &CoverFamily, caps: &Caps) -> Result<FiberProduct> {
    let base = family.base();
    let k = family.len();
    // Predicted order: |G| * prod(|H_i| / |G|).
    let mut predicted: usize = base.order();
    for leg in family.legs() {
        let fiber = leg.src().order() / base.order();
        predicted = predicted.saturating_mul(fiber);
        if predicted > caps.max_order {
            return Err(CoverError::OrderCapExceeded { needed: predicted, cap: caps.max_order });
        }
    }
    if predicted > caps.max_order {
        return Err(CoverError::OrderCapExceeded { needed: predicted, cap: caps.max_order });
    }
    // Fibers over each base element, per leg.
    let fibers: Vec<Vec<Vec<u16>>> = family
        .legs()
        .iter()
        .map(|leg| {
            let mut f: Vec<Vec<u16>> = vec![Vec::new(); base.order()];
            for x in 0..leg.src().order() {
                f[leg.apply(x)].push(x as u16);
            }
            f
        })
        .collect();
    let mut tuples: Vec<Vec<u16>> = Vec::with_capacity(predicted);
    for g in 0..base.order() {
        let mut stack: Vec<Vec<u16>> = vec![Vec::new()];
        for leg_fibers in fibers.iter() {
            let mut next = Vec::with_capacity(stack.len() * leg_fibers[g].len());
            for partial in &stack {
                for &x in &leg_fibers[g] {
                    let mut t = partial.clone();
                    t.push(x);
                    next.push(t);
                }
            }
            stack = next;
        }
        tuples.extend(stack);
    }
    tuples.sort();
    let n = tuples.len();
    debug_assert_eq!(n, predicted);
    let index: HashMap<&Vec<u16>, u16> = tuples.iter().enumerate().map(|(i, t)| (t, i as u16)).collect();
    let mut flat = vec![0u16; n * n];
    for (i, t) in tuples.iter().enumerate() {
        for (j, u) in tuples.iter().enumerate() {
            let prod: Vec<u16> = (0..k)
                .map(|c| family.legs()[c].src().mul(t[c] as usize, u[c] as usize) as u16)
                .collect();
            flat[i * n + j] = index[&prod];
        }
    }
    let name = format!("fprod[{}]", base.name());
    let group = finish_from_flat(flat, n, &name)?;
    let projections: Vec<GroupHom> = (0..k)
        .map(|c| {
            let images: Vec<u16> = tuples.iter().map(|t| t[c]).collect();
            GroupHom::new_unchecked(group.clone(), family.legs()[c].src().clone(), images)
        })
        .collect();
    let to_base = compose(&projections[0], &family.legs()[0])?;
    Ok(FiberProduct { group, tuples, projections, to_base, family: family.clone() })
}

fn finish_from_flat(flat: Vec<u16>, n: usize, name: &str) -> Result<FiniteGroup> {
    // Tuples are lexicographically sorted, so the identity tuple is index 0
    // and the table is already canonical.
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).map(|j| flat[i * n + j] as usize).collect())
        .collect();
    FiniteGroup::from_table(&rows, name)
}

/// Pullback of `alpha: B ↠ A` along `phi: G ↠ A`: the cartesian square on
/// `H = B ×_A G` together with the underlying fiber product.
pub fn pullback(alpha: &GroupHom, phi: &GroupHom, caps: &Caps) -> Result<(Square, FiberProduct)> {
    if alpha.dst() != phi.dst() {
        return Err(CoverError::TypeMismatch("pullback maps have different targets".into()));
    }
    let family = CoverFamily::new(alpha.dst(), vec![alpha.clone(), phi.clone()])?;
    let fp = fiber_product(&family, caps)?;
    let square = Square::new(
        fp.projections[1].clone(),
        fp.projections[0].clone(),
        alpha.clone(),
        phi.clone(),
    )?;
    Ok((square, fp))
}

/// Searches for `psi` with `pi ∘ psi = eta`, i.e. decides whether `eta`
/// dominates `pi`. The answer (`Some`/`None`) is deterministic.
pub fn dominates(eta: &GroupHom, pi: &GroupHom, caps: &Caps) -> Result<Option<GroupHom>> {
    if eta.dst() != pi.dst() {
        return Err(CoverError::TypeMismatch("covers have different bases".into()));
    }
    if eta.src().order() < pi.src().order() {
        return Ok(None);
    }
    let fiber = |gen: usize| -> Vec<usize> {
        let want = eta.apply(gen);
        (0..pi.src().order()).filter(|&x| pi.apply(x) == want).collect()
    };
    let found = search_constrained(eta.src(), pi.src(), &fiber, Require::Surjective, true, caps)?;
    Ok(found.into_iter().next())
}

/// Searches for a bijective `psi` with `eta2 ∘ psi = eta`.
pub fn isomorphic_over_base(
    eta: &GroupHom,
    eta2: &GroupHom,
    caps: &Caps,
) -> Result<Option<GroupHom>> {
    if eta.dst() != eta2.dst() {
        return Err(CoverError::TypeMismatch("covers have different bases".into()));
    }
    if eta.src().order() != eta2.src().order() {
        return Ok(None);
    }
    let fiber = |gen: usize| -> Vec<usize> {
        let want = eta.apply(gen);
        (0..eta2.src().order()).filter(|&x| eta2.apply(x) == want).collect()
    };
    let found = search_constrained(eta.src(), eta2.src(), &fiber, Require::Bijective, true, caps)?;
    Ok(found.into_iter().next())
}

/// True iff `eta` is indecomposable: its kernel is nontrivial and a minimal
/// normal subgroup of the source. Equivalent to: `eta` is not an isomorphism
/// and every factorization into two epimorphisms has an isomorphism factor.
pub fn is_indecomposable(eta: &GroupHom) -> bool {
    let ker = eta.kernel();
    if ker.is_trivial() {
        return false;
    }
    let h = eta.src();
    for n in h.normal_subgroups() {
        if n.len() == 1 || n.len() >= ker.order() {
            continue;
        }
        if n.iter().all(|e| ker.elements().binary_search(e).is_ok()) {
            return false;
        }
    }
    true
}

/// Normal subgroups `N ≤ Ker pi` for which the induced cover `H/N ↠ G` is
/// indecomposable: exactly the maximal normal subgroups of `H` properly
/// contained in `Ker pi`.
pub(crate) fn qualifying_kernels(pi: &GroupHom) -> Vec<Vec<u16>> {
    let h = pi.src();
    let ker = pi.kernel();
    let inside: Vec<&Vec<u16>> = h
        .normal_subgroups()
        .iter()
        .filter(|n| {
            n.len() < ker.order() && n.iter().all(|e| ker.elements().binary_search(e).is_ok())
        })
        .collect();
    inside
        .iter()
        .filter(|n| {
            !inside.iter().any(|m| {
                m.len() > n.len() && n.iter().all(|e| m.binary_search(e).is_ok())
            })
        })
        .map(|n| (*n).clone())
        .collect()
}

/// The induced cover `H/N ↠ G` of a normal `N ≤ Ker pi`, with the quotient
/// map `H ↠ H/N`.
pub(crate) fn induced_cover(pi: &GroupHom, n: &[u16]) -> Result<(GroupHom, GroupHom)> {
    let h = pi.src();
    let nsub = Subgroup::from_sorted_unchecked(h, n.to_vec());
    let (q, qmap) = h.quotient(&nsub)?;
    let mut images = vec![0u16; q.order()];
    for x in 0..h.order() {
        images[qmap.apply(x)] = pi.apply(x) as u16;
    }
    let induced = GroupHom::new_unchecked(q, pi.dst().clone(), images);
    Ok((induced, qmap))
}

/// Fundament kernel and fundament of a cover.
///
/// `M(pi)` is the intersection of all normal `N ≤ Ker pi` with `H/N ↠ G`
/// indecomposable; the fundament is the induced cover `H/M(pi) ↠ G`. For an
/// isomorphism the intersection is empty and `M(pi) = Ker pi = 1` by
/// convention, so "the fundament is fundamental" holds unconditionally.
pub fn fundament(pi: &GroupHom) -> Result<(Subgroup, GroupHom)> {
    let h = pi.src();
    let quals = qualifying_kernels(pi);
    let m: Vec<u16> = if quals.is_empty() {
        pi.kernel().elements().to_vec()
    } else {
        let mut acc = quals[0].clone();
        for n in &quals[1..] {
            acc.retain(|e| n.binary_search(e).is_ok());
        }
        acc
    };
    let msub = Subgroup::from_sorted_unchecked(h, m.clone());
    let (cover, _) = induced_cover(pi, &m)?;
    Ok((msub, cover))
}

/// True when `M(pi) = 1`.
pub fn is_fundamental(pi: &GroupHom) -> Result<bool> {
    let (m, _) = fundament(pi)?;
    Ok(m.is_trivial())
}

/// Checks whether the induced map from `pi`'s source into the fiber product
/// of the induced covers `H/N_i ↠ G` is an isomorphism over the base; if so,
/// returns the verified family.
fn verify_family(pi: &GroupHom, kernels: &[Vec<u16>], caps: &Caps) -> Result<Option<CoverFamily>> {
    let h = pi.src();
    // Intersection must be trivial for injectivity.
    let mut acc: Vec<u16> = kernels[0].clone();
    for n in &kernels[1..] {
        acc.retain(|e| n.binary_search(e).is_ok());
    }
    if acc.len() != 1 {
        return Ok(None);
    }
    let mut legs = Vec::new();
    let mut predicted = pi.dst().order();
    for n in kernels {
        let (leg, _) = induced_cover(pi, n)?;
        predicted = predicted.saturating_mul(leg.src().order() / pi.dst().order());
        legs.push(leg);
    }
    // The injective induced map is onto the fiber product iff orders match.
    if predicted != h.order() {
        return Ok(None);
    }
    let _ = caps;
    CoverFamily::new(pi.dst(), legs).map(Some)
}

/// A verified decomposition of a fundamental cover into a family of
/// indecomposable covers whose fiber product is isomorphic to it over the
/// base.
///
/// Strategy: greedy selection of qualifying kernels by descending order
/// until the intersection is trivial, then order verification; falls back to
/// an exhaustive subset search.
pub fn indecomposable_decomposition(pi: &GroupHom, caps: &Caps) -> Result<CoverFamily> {
    let (m, _) = fundament(pi)?;
    if !m.is_trivial() {
        return Err(CoverError::NotFundamental);
    }
    if pi.kernel().is_trivial() {
        // An isomorphism is the fiber product of the singleton family {pi}
        // only when pi is indecomposable, which it is not; represent it by
        // the empty-intersection convention: the single leg pi itself.
        return CoverFamily::new(pi.dst(), vec![pi.clone()]);
    }
    if is_indecomposable(pi) {
        return CoverFamily::new(pi.dst(), vec![pi.clone()]);
    }
    let mut quals = qualifying_kernels(pi);
    quals.sort_by(|a, b| (b.len(), a.clone()).cmp(&(a.len(), b.clone())));
    // Greedy: add kernels that strictly shrink the running intersection.
    let mut chosen: Vec<Vec<u16>> = Vec::new();
    let mut acc: Option<Vec<u16>> = None;
    for n in &quals {
        let next = match &acc {
            None => n.clone(),
            Some(a) => a.iter().copied().filter(|e| n.binary_search(e).is_ok()).collect(),
        };
        let shrink = acc.as_ref().map(|a| next.len() < a.len()).unwrap_or(true);
        if shrink {
            chosen.push(n.clone());
            acc = Some(next);
        }
        if acc.as_ref().map(|a| a.len() == 1).unwrap_or(false) {
            break;
        }
    }
    if acc.as_ref().map(|a| a.len() == 1).unwrap_or(false) {
        if let Some(family) = verify_family(pi, &chosen, caps)? {
            return Ok(family);
        }
    }
    // Exhaustive fallback over subsets, smallest family first.
    for family in decomposition_candidates(&quals) {
        if let Some(fam) = verify_family(pi, &family, caps)? {
            return Ok(fam);
        }
    }
    Err(CoverError::DecompositionFailed(format!(
        "no verified family among {} qualifying kernels of {:?}",
        quals.len(),
        pi
    )))
}

/// All verified decompositions (families of qualifying kernels), up to a
/// limit. Used to exercise invariant uniqueness across decompositions.
pub fn all_decompositions(pi: &GroupHom, limit: usize, caps: &Caps) -> Result<Vec<CoverFamily>> {
    let (m, _) = fundament(pi)?;
    if !m.is_trivial() {
        return Err(CoverError::NotFundamental);
    }
    if is_indecomposable(pi) {
        return Ok(vec![CoverFamily::new(pi.dst(), vec![pi.clone()])?]);
    }
    let quals = qualifying_kernels(pi);
    let mut out = Vec::new();
    for family in decomposition_candidates(&quals) {
        if let Some(fam) = verify_family(pi, &family, caps)? {
            out.push(fam);
            if out.len() >= limit {
                break;
            }
        }
    }
    Ok(out)
}

/// Subsets of the qualifying kernels in deterministic order: by size, then
/// lexicographically by index.
fn decomposition_candidates(quals: &[Vec<u16>]) -> Vec<Vec<Vec<u16>>> {
    let k = quals.len();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..(1 << k.min(20)) {
        let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        subsets.push(subset);
    }
    subsets.sort_by_key(|s| (s.len(), s.clone()));
    subsets
        .into_iter()
        .map(|s| s.into_iter().map(|i| quals[i].clone()).collect())
        .collect()
}

/// The canonical square attached to a cover `eta: H ↠ G` and a normal `N`
/// of `H` with `N ∩ Ker eta = 1`: `B = H/N`, `A = G/eta(N)`, with the
/// quotient maps and the induced bottom map. The cartesian conditions force
/// this shape, so these are all cartesian squares over `eta` up to
/// isomorphism.
pub fn cover_square(eta: &GroupHom, n: &Subgroup) -> Result<Square> {
    let h = eta.src();
    let g = eta.dst();
    if n.parent() != h {
        return Err(CoverError::TypeMismatch("subgroup of a different group".into()));
    }
    if !n.intersect(&eta.kernel()).is_trivial() {
        return Err(CoverError::TypeMismatch("subgroup meets the kernel".into()));
    }
    let (_, beta) = h.quotient(n)?;
    let image = eta.image_of(n);
    let img_sub = Subgroup::from_sorted_unchecked(g, image);
    let (_, phi) = g.quotient(&img_sub)?;
    let mut alpha_images = vec![0u16; beta.dst().order()];
    for x in 0..h.order() {
        alpha_images[beta.apply(x)] = phi.apply(eta.apply(x)) as u16;
    }
    let alpha = GroupHom::new(
        beta.dst().clone(),
        phi.dst().clone(),
        alpha_images.iter().map(|&x| x as usize).collect(),
    )?;
    Square::new(eta.clone(), beta, alpha, phi)
}

/// The unique connecting homomorphism into a cartesian square, when it is a
/// homomorphism: for maps `beta2: E -> B`, `eta2: E -> G` commuting over `A`,
/// the map `x -> (the unique h with beta(h) = beta2(x), eta(h) = eta2(x))`.
pub fn connecting_hom(s: &Square, beta2: &GroupHom, eta2: &GroupHom) -> Result<Option<GroupHom>> {
    if beta2.src() != eta2.src() {
        return Err(CoverError::TypeMismatch("connecting maps have different sources".into()));
    }
    if beta2.dst() != s.beta.dst() || eta2.dst() != s.eta.dst() {
        return Err(CoverError::TypeMismatch("connecting maps land in the wrong corners".into()));
    }
    let h = s.top_left();
    // (beta, eta) is injective on a cartesian square: index pairs.
    let mut pair_index: HashMap<(usize, usize), usize> = HashMap::new();
    for x in 0..h.order() {
        pair_index.insert((s.beta.apply(x), s.eta.apply(x)), x);
    }
    let e = beta2.src();
    let mut images = Vec::with_capacity(e.order());
    for x in 0..e.order() {
        match pair_index.get(&(beta2.apply(x), eta2.apply(x))) {
            Some(&v) => images.push(v as u16),
            None => return Ok(None),
        }
    }
    // The set map exists; verify it is a homomorphism.
    for a in 0..e.order() {
        for b in 0..e.order() {
            if images[e.mul(a, b)] as usize
                != h.mul(images[a] as usize, images[b] as usize)
            {
                return Ok(None);
            }
        }
    }
    Ok(Some(GroupHom::new_unchecked(e.clone(), h.clone(), images)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::hom::enumerate_homs;

    fn caps() -> Caps {
        Caps::default()
    }

    fn sign_hom(s3: &FiniteGroup, c2: &FiniteGroup) -> GroupHom {
        let images: Vec<usize> = (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        GroupHom::new(s3.clone(), c2.clone(), images).unwrap()
    }

    fn mod2(c4: &FiniteGroup, c2: &FiniteGroup) -> GroupHom {
        GroupHom::new(c4.clone(), c2.clone(), (0..4).map(|x| x % 2).collect()).unwrap()
    }

    #[test]
    fn fiber_product_over_trivial_base_is_direct_product() {
        let one = groups::trivial();
        let c2 = groups::cyclic(2);
        let c3 = groups::cyclic(3);
        let l1 = GroupHom::new(c2.clone(), one.clone(), vec![0, 0]).unwrap();
        let l2 = GroupHom::new(c3.clone(), one.clone(), vec![0, 0, 0]).unwrap();
        let family = CoverFamily::new(&one, vec![l1, l2]).unwrap();
        let fp = fiber_product(&family, &caps()).unwrap();
        assert_eq!(fp.group.order(), 6);
    }

    #[test]
    fn fiber_product_of_two_signs_has_order_18() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        let family = CoverFamily::new(&c2, vec![sgn.clone(), sgn]).unwrap();
        let fp = fiber_product(&family, &caps()).unwrap();
        assert_eq!(fp.group.order(), 18);
        // Matching-tuple invariant.
        for t in &fp.tuples {
            assert_eq!(
                family.legs()[0].apply(t[0] as usize),
                family.legs()[1].apply(t[1] as usize)
            );
        }
        // to_base = leg ∘ projection for every coordinate.
        for j in 0..2 {
            let via = compose(&fp.projections[j], &family.legs()[j]).unwrap();
            assert_eq!(via, fp.to_base);
        }
    }

    #[test]
    fn single_leg_fiber_product_is_the_leg() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        let family = CoverFamily::new(&c2, vec![sgn.clone()]).unwrap();
        let fp = fiber_product(&family, &caps()).unwrap();
        assert_eq!(fp.group.order(), 6);
        assert!(fp.projections[0].is_bijective());
        let transported = compose(&fp.projections[0], &sgn).unwrap();
        assert_eq!(transported, fp.to_base);
    }

    #[test]
    fn pullback_square_is_cartesian() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let c4 = groups::cyclic(4);
        let (square, _) = pullback(&sign_hom(&s3, &c2), &mod2(&c4, &c2), &caps()).unwrap();
        let status = square_classify(&square);
        assert!(status.cartesian);
        assert!(status.semi_cartesian);
    }

    #[test]
    fn c4_remark_square_cartesian_not_compact() {
        // H = C4 x C2, eta = projection to C4... the counterexample square
        // has G = C4 on top right: eta: C4xC2 -> C4, beta: C4xC2 -> C4 by
        // (g, s) -> g + 2s, alpha = phi = mod 2.
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let (h, pr1, pr2) = FiniteGroup::direct_product(&c4, &c2, "C4xC2", &caps()).unwrap();
        let eta = pr1;
        let beta_images: Vec<usize> = (0..8)
            .map(|i| {
                let g = pr2.apply(i); // s-coordinate
                let x = eta.apply(i);
                (x + 2 * g) % 4
            })
            .collect();
        let beta = GroupHom::new(h.clone(), c4.clone(), beta_images).unwrap();
        let alpha = mod2(&c4, &c2);
        let phi = mod2(&c4, &c2);
        let square = Square::new(eta, beta, alpha, phi).unwrap();
        let status = square_classify(&square);
        assert!(status.cartesian);
        assert_eq!(status.compact, Some(false));
        // Witness is the C4 x 1 coordinate subgroup, elements {(g,0)}.
        assert_eq!(status.witness, Some(vec![0, 2, 4, 6]));
    }

    #[test]
    fn iso_alpha_square_compact_iff_eta_iso() {
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        // eta = identity on C4: cartesian and compact.
        let square = Square::new(
            GroupHom::identity(&c4),
            mod2(&c4, &c2),
            GroupHom::identity(&c2),
            mod2(&c4, &c2),
        )
        .unwrap();
        let status = square_classify(&square);
        assert!(status.cartesian);
        assert_eq!(status.compact, Some(true));
        // eta = C4 -> C2 proper: semi-cartesian but not cartesian.
        let c2b = groups::cyclic(2);
        let idc2 = GroupHom::new(c2.clone(), c2b.clone(), vec![0, 1]).unwrap();
        let square2 = Square::new(
            mod2(&c4, &c2),
            compose(&mod2(&c4, &c2), &idc2).unwrap(),
            GroupHom::identity(&c2b),
            idc2.clone(),
        )
        .unwrap();
        let status2 = square_classify(&square2);
        assert!(status2.semi_cartesian);
        assert!(!status2.cartesian);
        assert_eq!(status2.compact, None);
    }

    #[test]
    fn dominates_identity_cases() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        // eta dominates the identity cover of G, witnessed by eta itself.
        let id = GroupHom::identity(&c2);
        let psi = dominates(&sgn, &id, &caps()).unwrap().unwrap();
        assert_eq!(psi, sgn);
        // eta dominates eta, witnessed by an isomorphism.
        let psi2 = dominates(&sgn, &sgn, &caps()).unwrap().unwrap();
        assert!(psi2.is_bijective());
    }

    #[test]
    fn identity_cover_does_not_dominate_c4_cover() {
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let id = GroupHom::identity(&c2);
        let eta = mod2(&c4, &c2);
        assert!(dominates(&id, &eta, &caps()).unwrap().is_none());
    }

    #[test]
    fn klein_epis_one_orbit_over_c2() {
        let v = groups::klein_four(&caps()).unwrap();
        let c2 = groups::cyclic(2);
        let epis = enumerate_homs(&v, &c2, true, &caps()).unwrap();
        assert_eq!(epis.len(), 3);
        for a in &epis {
            for b in &epis {
                let iso = isomorphic_over_base(a, b, &caps()).unwrap();
                assert!(iso.is_some(), "all three epis are isomorphic over C2");
            }
        }
    }

    #[test]
    fn c4_and_klein_covers_not_isomorphic_over_c2() {
        let c4 = groups::cyclic(4);
        let v = groups::klein_four(&caps()).unwrap();
        let c2 = groups::cyclic(2);
        let a = mod2(&c4, &c2);
        let b = enumerate_homs(&v, &c2, true, &caps()).unwrap().remove(0);
        assert!(isomorphic_over_base(&a, &b, &caps()).unwrap().is_none());
    }

    #[test]
    fn sign_is_indecomposable() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        assert!(is_indecomposable(&sign_hom(&s3, &c2)));
        assert!(!is_indecomposable(&GroupHom::identity(&c2)));
    }

    #[test]
    fn c4_to_trivial_is_decomposable() {
        let c4 = groups::cyclic(4);
        let one = groups::trivial();
        let pi = GroupHom::new(c4, one, vec![0; 4]).unwrap();
        assert!(!is_indecomposable(&pi));
    }

    #[test]
    fn indecomposable_matches_factorization_search() {
        // Cross-check on all quotient covers of a few small groups.
        let caps = caps();
        let pool = vec![
            groups::cyclic(8),
            groups::symmetric(3, &caps).unwrap(),
            groups::klein_four(&caps).unwrap(),
            groups::dihedral(4, &caps).unwrap(),
            groups::quaternion8(),
        ];
        for g in pool {
            for n in crate::group::subgroups(&g, true, &caps).unwrap() {
                let (_, pi) = g.quotient(&n).unwrap();
                let direct = is_indecomposable(&pi);
                // Factorization search: a normal subgroup strictly between 1
                // and the kernel yields a factorization with both factors
                // proper, and conversely.
                let ker = pi.kernel();
                let mut has_middle = false;
                for m in g.normal_subgroups() {
                    if m.len() > 1
                        && m.len() < ker.order()
                        && m.iter().all(|e| ker.elements().binary_search(e).is_ok())
                    {
                        has_middle = true;
                    }
                }
                let by_factorization = !ker.is_trivial() && !has_middle;
                assert_eq!(direct, by_factorization);
            }
        }
    }

    #[test]
    fn fundament_of_indecomposable_is_itself() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        let (m, f) = fundament(&sgn).unwrap();
        assert!(m.is_trivial());
        assert!(isomorphic_over_base(&f, &sgn, &caps()).unwrap().is_some());
    }

    #[test]
    fn fundament_of_c4_to_trivial() {
        let c4 = groups::cyclic(4);
        let one = groups::trivial();
        let pi = GroupHom::new(c4.clone(), one.clone(), vec![0; 4]).unwrap();
        let (m, f) = fundament(&pi).unwrap();
        assert_eq!(m.element_indices(), vec![0, 2]);
        assert_eq!(f.src().order(), 2);
        assert!(is_fundamental(&f).unwrap());
    }

    #[test]
    fn fundament_of_klein_to_trivial_is_trivial_kernel() {
        let v = groups::klein_four(&caps()).unwrap();
        let one = groups::trivial();
        let pi = GroupHom::new(v, one, vec![0; 4]).unwrap();
        let (m, _) = fundament(&pi).unwrap();
        assert!(m.is_trivial());
    }

    #[test]
    fn decomposition_of_indecomposable_is_singleton() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let sgn = sign_hom(&s3, &c2);
        let fam = indecomposable_decomposition(&sgn, &caps()).unwrap();
        assert_eq!(fam.len(), 1);
    }

    #[test]
    fn decomposition_of_klein_over_trivial_has_two_legs() {
        let v = groups::klein_four(&caps()).unwrap();
        let one = groups::trivial();
        let pi = GroupHom::new(v, one, vec![0; 4]).unwrap();
        let fam = indecomposable_decomposition(&pi, &caps()).unwrap();
        assert_eq!(fam.len(), 2);
        for leg in fam.legs() {
            assert_eq!(leg.src().order(), 2);
            assert!(is_indecomposable(leg));
        }
    }

    #[test]
    fn decomposition_rejects_non_fundamental() {
        let c4 = groups::cyclic(4);
        let one = groups::trivial();
        let pi = GroupHom::new(c4, one, vec![0; 4]).unwrap();
        assert!(matches!(
            indecomposable_decomposition(&pi, &caps()),
            Err(CoverError::NotFundamental)
        ));
    }

    #[test]
    fn compactness_routes_agree_on_pullbacks() {
        let caps = caps();
        let s3 = groups::symmetric(3, &caps).unwrap();
        let c2 = groups::cyclic(2);
        let c4 = groups::cyclic(4);
        let v = groups::klein_four(&caps).unwrap();
        let pairs: Vec<(GroupHom, GroupHom)> = vec![
            (sign_hom(&s3, &c2), mod2(&c4, &c2)),
            (mod2(&c4, &c2), sign_hom(&s3, &c2)),
            (
                enumerate_homs(&v, &c2, true, &caps).unwrap().remove(0),
                sign_hom(&s3, &c2),
            ),
        ];
        for (alpha, phi) in pairs {
            let (square, _) = pullback(&alpha, &phi, &caps).unwrap();
            let by_subgroups = square_classify(&square).compact.unwrap();
            let by_quotients = compact_by_quotients(&square, &caps).unwrap();
            assert_eq!(by_subgroups, by_quotients);
        }
    }

    #[test]
    fn connecting_hom_into_pullback() {
        // E = C2^3 mapping onto two C2 coordinates over A = 1; the pullback
        // of (C2 -> 1, C2 -> 1) is C2 x C2 and the connecting map is onto.
        let caps = caps();
        let one = groups::trivial();
        let c2 = groups::cyclic(2);
        let to_one = GroupHom::new(c2.clone(), one.clone(), vec![0, 0]).unwrap();
        let (square, _) = pullback(&to_one, &to_one, &caps).unwrap();
        let (_, pr1, pr2) = FiniteGroup::direct_product(
            &groups::klein_four(&caps).unwrap(),
            &c2,
            "C2^3",
            &caps,
        )
        .unwrap();
        let kpr = enumerate_homs(pr1.dst(), &c2, true, &caps).unwrap().remove(0);
        let to_b = compose(&pr1, &kpr).unwrap();
        let psi = connecting_hom(&square, &to_b, &pr2).unwrap().unwrap();
        assert!(psi.is_surjective());
    }
}
