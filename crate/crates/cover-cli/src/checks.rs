//! The `verify-paper` suite: every in-scope statement of the cover theory is
//! replayed here as an executable check over the built-in catalog, plus a few
//! ad-hoc groups (C2xC4, C2xC2xC4, A4, A5, S4, D4) where the catalog alone
//! would leave a statement vacuous.

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{anyhow, bail, Result};

use cover_core::caps::Caps;
use cover_core::cohomology::{
    class_to_extension, extension_class_raw, h2_space, span_and_relations, splits, CocycleClass,
};
use cover_core::engine::{
    enumerate_superbasic, general_i_cover, has_embedding_property, power_cover, Classifier,
    SuperbasicScan,
};
use cover_core::error::CoverError;
use cover_core::fp;
use cover_core::group::{FiniteGroup, Subgroup};
use cover_core::groups;
use cover_core::hom::{
    compose, enumerate_homs, epis_per_kernel, is_isomorphic, is_quotient, quotient_reps, GroupHom,
};
use cover_core::invariants::{compare_covers, cover_invariants, ClassRegistry};
use cover_core::module::{module_from_kernel, GModule};
use cover_core::square::{
    all_decompositions, compact_by_quotients, connecting_hom, cover_square, dominates,
    fiber_product, fundament, indecomposable_decomposition, is_fundamental, is_indecomposable,
    isomorphic_over_base, pullback, square_classify, CoverFamily, Square,
};

use crate::catalog::Catalog;
use crate::report::{CheckRecord, CheckStatus, VerificationReport};

/// Anchors that the suite must cover; mirrors the in-scope statement list.
pub const REQUIRED_ANCHORS: &[&str] = &[
    "indecomposable-definition",
    "cartesian-conditions",
    "compactness-definition",
    "prop:indecomposable-cartesian-square",
    "remark:square-trivialities",
    "lemma:expand",
    "eq:concrete-fiber-product",
    "remark:about-abelian",
    "prop:indecomposable-quotients-of-fiber-product",
    "def:fundament",
    "lemma:fiber-product-is-fundamental",
    "notation:lambda-relation-dimension",
    "thm:fundamental-mult-supp",
    "thm:compare",
    "cor:dominates-multiple-of-one",
    "def:smallest-embedding-cover",
    "remark:ev-trivialities",
    "lemma:compact-is-quotient",
    "def:basic-cover",
    "remark:nonsplit-is-basic",
    "lemma:embedding-covers-have-no-basic-covers",
    "construction:sec-finite",
    "lemma:compose-basic",
    "prop:basic-subspace",
    "prop:fprod-of-basics-is-basic",
    "prop:going-down-finite",
    "prop:i-is-basic",
    "lemma:fec-is-unique",
    "lemma:i-dominates-basic",
    "cor:finite-quotients-of-sec-k",
    "thm:complete-characterization",
    "thm:uniqueness",
    "lemma:i-cover-criterion",
    "lemma:general-builder",
    "example:i-covers-s3",
    "lemma:ep-for-direct-product",
    "lemma:direct-compact",
    "remark:direct-compact-counterexample",
    "lemma:not-superbasic",
    "prop:not-i-cover",
];

pub struct CheckOutcome {
    pub status: CheckStatus,
    pub witness: String,
}

fn pass(witness: impl Into<String>) -> Result<CheckOutcome> {
    Ok(CheckOutcome { status: CheckStatus::Pass, witness: witness.into() })
}

pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub run: fn(&CheckCtx) -> Result<CheckOutcome>,
}

/// A base group with its classifier and superbasic scan, built lazily.
pub struct World {
    pub base: FiniteGroup,
    pub classifier: Classifier,
    pub scan: SuperbasicScan,
}

impl World {
    fn new(base: FiniteGroup, caps: &Caps) -> Result<World> {
        let classifier = Classifier::new(&base, caps)?;
        let scan = enumerate_superbasic(&base, caps)?;
        Ok(World { base, classifier, scan })
    }
}

pub struct CheckCtx {
    pub caps: Caps,
    pub catalog: Catalog,
    s3xc2: OnceCell<World>,
    c2xc4: OnceCell<World>,
    c2xc2xc4: OnceCell<World>,
}

impl CheckCtx {
    pub fn new(caps: &Caps) -> Result<CheckCtx> {
        Ok(CheckCtx {
            caps: caps.clone(),
            catalog: Catalog::new(caps)?,
            s3xc2: OnceCell::new(),
            c2xc4: OnceCell::new(),
            c2xc2xc4: OnceCell::new(),
        })
    }

    pub fn group(&self, name: &str) -> Result<FiniteGroup> {
        self.catalog.get(name)
    }

    fn world<'a>(&'a self, cell: &'a OnceCell<World>, build: impl Fn() -> Result<FiniteGroup>) -> Result<&'a World> {
        if cell.get().is_none() {
            let base = build()?;
            let world = World::new(base, &self.caps)?;
            let _ = cell.set(world);
        }
        Ok(cell.get().expect("just set"))
    }

    /// The main nontrivial world: base S3xC2.
    pub fn s3xc2(&self) -> Result<&World> {
        self.world(&self.s3xc2, || self.group("S3xC2"))
    }

    /// Base C2xC4: the smallest base with a non-split basic cover.
    pub fn c2xc4(&self) -> Result<&World> {
        self.world(&self.c2xc4, || {
            let (g, _, _) = FiniteGroup::direct_product(
                &self.group("C2")?,
                &self.group("C4")?,
                "C2xC4",
                &self.caps,
            )?;
            Ok(g)
        })
    }

    /// Base C2xC2xC4: support of dimension two over the trivial F2 module.
    pub fn c2xc2xc4(&self) -> Result<&World> {
        self.world(&self.c2xc2xc4, || {
            let (g, _, _) = FiniteGroup::direct_product(
                &self.group("C2xC2")?,
                &self.group("C4")?,
                "C2xC2xC4",
                &self.caps,
            )?;
            Ok(g)
        })
    }

    /// The sign epimorphism of the catalog S3 onto the catalog C2.
    pub fn sign(&self) -> Result<GroupHom> {
        let s3 = self.group("S3")?;
        let c2 = self.group("C2")?;
        let images: Vec<usize> =
            (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        Ok(GroupHom::new(s3, c2, images)?)
    }

    pub fn mod2(&self) -> Result<GroupHom> {
        Ok(GroupHom::new(self.group("C4")?, self.group("C2")?, vec![0, 1, 0, 1])?)
    }

    /// The two superbasic covers of S3xC2, smaller construction index first.
    pub fn superbasic_pair(&self) -> Result<(GroupHom, GroupHom)> {
        let world = self.s3xc2()?;
        if world.scan.covers.len() != 2 {
            bail!("expected exactly 2 superbasic classes of S3xC2, found {}", world.scan.covers.len());
        }
        Ok((world.scan.covers[0].1.clone(), world.scan.covers[1].1.clone()))
    }

    /// The split cover of S3xC2 with kernel C3 and action through the sign
    /// of the S3 coordinate (the inversion pattern *not* realized by a
    /// superbasic cover).
    pub fn split_m1prime(&self) -> Result<GroupHom> {
        let world = self.s3xc2()?;
        let c2 = self.group("C2")?;
        let sgn = self.sign()?;
        // phi = sign of the S3 coordinate of S3xC2.
        let phis = epis_per_kernel(&world.base, &c2, &self.caps)?;
        let sgn_s = phis
            .iter()
            .find(|phi| {
                let ker = phi.kernel();
                // Kernel A3 x C2: abelian of order 6.
                ker.order() == 6 && ker.is_abelian()
            })
            .ok_or_else(|| anyhow!("no sign-of-S3 character found"))?
            .clone();
        let (square, _) = pullback(&sgn, &sgn_s, &self.caps)?;
        Ok(square.eta)
    }

    /// Non-split cover of S3xC2 with central kernel C2 (order 24 source).
    pub fn nonsplit_f2_cover(&self) -> Result<GroupHom> {
        let world = self.s3xc2()?;
        let c2 = self.group("C2")?;
        let phis = epis_per_kernel(&world.base, &c2, &self.caps)?;
        // phi = projection onto the C2 coordinate: kernel isomorphic to S3,
        // non-abelian.
        let pr_c2 = phis
            .iter()
            .find(|phi| !phi.kernel().is_abelian())
            .ok_or_else(|| anyhow!("no C2-coordinate projection found"))?
            .clone();
        let (square, _) = pullback(&self.mod2()?, &pr_c2, &self.caps)?;
        Ok(square.eta)
    }

    /// Split cover of a base by the trivial module F_p: the coordinate
    /// projection `base x Cp -> base`.
    pub fn trivial_split_cover(&self, base: &FiniteGroup, p: usize) -> Result<GroupHom> {
        let cp = groups::cyclic(p);
        let (_, pr1, _) = FiniteGroup::direct_product(
            base,
            &cp,
            &format!("{}xC{}", base.name(), p),
            &self.caps,
        )?;
        Ok(pr1)
    }
}

/// Builds a subgroup as a standalone group plus its embedding element map.
fn subgroup_as_group(parent: &FiniteGroup, elems: &[usize], name: &str) -> Result<(FiniteGroup, Vec<usize>)> {
    let pos = |x: usize| elems.iter().position(|&e| e == x).unwrap();
    let table: Vec<Vec<usize>> = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| pos(parent.mul(a, b))).collect())
        .collect();
    let g = FiniteGroup::from_table(&table, name)?;
    Ok((g, elems.to_vec()))
}

/// Restricts a hom to a subgroup-as-group.
fn restrict_hom(sub: &FiniteGroup, embed: &[usize], hom: &GroupHom) -> Result<GroupHom> {
    let images: Vec<usize> = embed.iter().map(|&e| hom.apply(e)).collect();
    Ok(GroupHom::new(sub.clone(), hom.dst().clone(), images)?)
}

/// Catalog squares: pullbacks of (alpha, phi) with alpha an indecomposable
/// quotient-to-quotient map of a catalog group and phi from another catalog
/// group, bounded by top-left order.
fn catalog_squares(ctx: &CheckCtx, max_top: usize) -> Result<Vec<Square>> {
    let mut out = Vec::new();
    let names = ["C2", "C3", "C4", "C2xC2", "C6", "S3", "C8", "Q8", "S3xC2"];
    for bname in names {
        let b = ctx.group(bname)?;
        for alpha in indecomposable_quotient_maps(&b, &ctx.caps)? {
            for gname in names {
                let g = ctx.group(gname)?;
                if g.order() * b.order() / alpha.dst().order() > max_top {
                    continue;
                }
                for phi in epis_per_kernel(&g, alpha.dst(), &ctx.caps)? {
                    let (square, _) = pullback(&alpha, &phi, &ctx.caps)?;
                    out.push(square);
                }
            }
        }
    }
    Ok(out)
}

/// All epimorphisms of `b` onto its minimal quotients (so each is
/// indecomposable), one target object per minimal normal subgroup.
fn indecomposable_quotient_maps(b: &FiniteGroup, caps: &Caps) -> Result<Vec<GroupHom>> {
    let mut out = Vec::new();
    let normals = b.normal_subgroups().clone();
    for n in &normals {
        if n.len() == 1 {
            continue;
        }
        let minimal = !normals.iter().any(|m| {
            m.len() > 1 && m.len() < n.len() && m.iter().all(|e| n.binary_search(e).is_ok())
        });
        if !minimal {
            continue;
        }
        let nsub = Subgroup::from_sorted_unchecked(b, n.clone());
        let (_, q) = b.quotient(&nsub)?;
        out.push(q);
    }
    let _ = caps;
    Ok(out)
}

/// Fiber-product compactness: no proper subgroup surjects onto every leg
/// source under the projections.
fn fprod_is_compact(fp: &cover_core::square::FiberProduct) -> bool {
    let h = &fp.group;
    for sub in h.all_subgroups() {
        if sub.len() == h.order() {
            continue;
        }
        let onto_all = fp.projections.iter().all(|pr| {
            let mut seen = vec![false; pr.dst().order()];
            let mut count = 0;
            for &x in sub {
                let v = pr.apply(x as usize);
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                }
            }
            count == pr.dst().order()
        });
        if onto_all {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Checks, one per in-scope statement (a statement may get several).
// ---------------------------------------------------------------------------

fn check_fiber_product_tuples(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let sgn = ctx.sign()?;
    let m2 = ctx.mod2()?;
    let klein_pr = enumerate_homs(&ctx.group("C2xC2")?, &c2, true, caps)?.remove(0);
    let mut families = vec![
        CoverFamily::new(&c2, vec![sgn.clone(), sgn.clone()])?,
        CoverFamily::new(&c2, vec![sgn.clone(), m2.clone(), klein_pr.clone()])?,
        CoverFamily::new(&c2, vec![m2.clone()])?,
    ];
    let one = ctx.group("1")?;
    let to_one = GroupHom::new(ctx.group("C3")?, one.clone(), vec![0, 0, 0])?;
    let to_one2 = GroupHom::new(c2.clone(), one.clone(), vec![0, 0])?;
    families.push(CoverFamily::new(&one, vec![to_one, to_one2])?);
    let mut checked = 0;
    for family in &families {
        let fp = fiber_product(family, caps)?;
        for t in &fp.tuples {
            for i in 0..family.len() {
                for j in 0..family.len() {
                    if family.legs()[i].apply(t[i] as usize) != family.legs()[j].apply(t[j] as usize) {
                        bail!("tuple violates the matching condition");
                    }
                }
            }
        }
        for j in 0..family.len() {
            if compose(&fp.projections[j], &family.legs()[j])? != fp.to_base {
                bail!("to_base differs from leg ∘ projection at {j}");
            }
            if !fp.projections[j].is_surjective() {
                bail!("projection {j} not surjective");
            }
        }
        // Coordinate-subset projections.
        if family.len() >= 2 {
            let (subfp, pr) = fp.project_subset(&[0], caps)?;
            if !pr.is_surjective() || compose(&pr, &subfp.to_base)? != fp.to_base {
                bail!("subset projection inconsistent");
            }
        }
        checked += 1;
    }
    pass(format!("{checked} fiber products verified tuple-wise"))
}

fn check_cartesian_conditions(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let squares = catalog_squares(ctx, 36)?;
    for s in &squares {
        let st = square_classify(s);
        if !st.cartesian || !st.semi_cartesian {
            bail!("pullback square not classified cartesian");
        }
    }
    // Semi-cartesian but not cartesian: C2^3 projecting onto two overlapping
    // coordinates over the trivial group.
    let one = ctx.group("1")?;
    let c2 = ctx.group("C2")?;
    let (v8, pr_klein, pr_last) =
        FiniteGroup::direct_product(&ctx.group("C2xC2")?, &c2, "C2^3", caps)?;
    let first = compose(&pr_klein, &enumerate_homs(pr_klein.dst(), &c2, true, caps)?.remove(0))?;
    let to_one_c2 = GroupHom::new(c2.clone(), one.clone(), vec![0, 0])?;
    let eta_comp = compose(&first, &to_one_c2)?;
    let semi_only = Square::new(
        first.clone(),
        {
            // beta onto C2 via a coordinate sharing kernel with eta.
            let mixed: Vec<usize> =
                (0..v8.order()).map(|x| (first.apply(x) + pr_last.apply(x)) % 2).collect();
            GroupHom::new(v8.clone(), c2.clone(), mixed)?
        },
        to_one_c2.clone(),
        to_one_c2.clone(),
    )?;
    let st = square_classify(&semi_only);
    if !st.semi_cartesian || st.cartesian {
        bail!("expected semi-cartesian non-cartesian square, got {st:?}");
    }
    let _ = eta_comp;
    // Not even semi-cartesian: identity beta swallows too little kernel.
    let c4 = ctx.group("C4")?;
    let to_one_c4 = GroupHom::new(c4.clone(), one.clone(), vec![0; 4])?;
    let not_semi = Square::new(
        ctx.mod2()?,
        GroupHom::identity(&c4),
        to_one_c4,
        GroupHom::new(c2.clone(), one.clone(), vec![0, 0])?,
    )?;
    let st2 = square_classify(&not_semi);
    if st2.semi_cartesian {
        bail!("expected non-semi-cartesian square");
    }
    pass(format!("{} pullback squares cartesian; boundary shapes classified", squares.len()))
}

fn check_indecomposable_definition(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut checked = 0;
    for name in ["C2", "C3", "C4", "C6", "C8", "C2xC2", "C2xC3", "S3", "Q8", "S3xC2"] {
        let h = ctx.group(name)?;
        if h.order() > 24 {
            continue;
        }
        for entryn in h.normal_subgroups().clone() {
            let nsub = Subgroup::from_sorted_unchecked(&h, entryn.clone());
            let (_, eta) = h.quotient(&nsub)?;
            let direct = is_indecomposable(&eta);
            // Factorization route: search a middle quotient with both factors
            // proper.
            let mut factorable = false;
            for m in h.normal_subgroups() {
                if m.len() == 1 || m.len() >= entryn.len() {
                    continue;
                }
                if !m.iter().all(|e| entryn.binary_search(e).is_ok()) {
                    continue;
                }
                let msub = Subgroup::from_sorted_unchecked(&h, m.clone());
                let (_, q1) = h.quotient(&msub)?;
                // eta factors through q1 with a proper second factor.
                if dominates(&eta, &eta, caps)?.is_some() {
                    // trivial sanity use of the search; the factorization is
                    // the induced map below.
                }
                let mut images = vec![0usize; q1.dst().order()];
                for x in 0..h.order() {
                    images[q1.apply(x)] = eta.apply(x);
                }
                let tail = GroupHom::new(q1.dst().clone(), eta.dst().clone(), images)?;
                if !q1.is_bijective() && !tail.is_bijective() && compose(&q1, &tail)? == eta {
                    factorable = true;
                    break;
                }
            }
            let by_factorization = !eta.kernel().is_trivial() && !factorable;
            if direct != by_factorization {
                bail!("indecomposability mismatch on a quotient of {name}");
            }
            checked += 1;
        }
    }
    pass(format!("{checked} quotient covers cross-checked against factorization search"))
}

fn check_compactness_definition(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let squares = catalog_squares(ctx, 36)?;
    let mut noncompact = 0;
    let mut compact = 0;
    for s in &squares {
        let st = square_classify(s);
        match st.compact {
            Some(false) => {
                let witness = st.witness.ok_or_else(|| anyhow!("missing witness"))?;
                let (e, embed) = subgroup_as_group(s.top_left(), &witness, "W")?;
                let beta2 = restrict_hom(&e, &embed, &s.beta)?;
                let eta2 = restrict_hom(&e, &embed, &s.eta)?;
                let psi = connecting_hom(s, &beta2, &eta2)?
                    .ok_or_else(|| anyhow!("connecting hom of a witness must exist"))?;
                if psi.is_surjective() {
                    bail!("witness connecting hom is surjective, square cannot be non-compact");
                }
                noncompact += 1;
            }
            Some(true) => {
                // The universal-map route must produce surjections.
                let psi = connecting_hom(s, &s.beta, &s.eta)?
                    .ok_or_else(|| anyhow!("identity pair has no connecting hom"))?;
                if !psi.is_surjective() {
                    bail!("identity connecting hom not surjective on a compact square");
                }
                let (prod, pr1, _) =
                    FiniteGroup::direct_product(s.top_left(), &ctx.group("C2")?, "HxC2", caps)?;
                let _ = prod;
                let beta2 = compose(&pr1, &s.beta)?;
                let eta2 = compose(&pr1, &s.eta)?;
                let psi2 = connecting_hom(s, &beta2, &eta2)?
                    .ok_or_else(|| anyhow!("product pair has no connecting hom"))?;
                if !psi2.is_surjective() {
                    bail!("product connecting hom not surjective on a compact square");
                }
                compact += 1;
            }
            None => bail!("pullback square not cartesian"),
        }
    }
    pass(format!("{compact} compact / {noncompact} non-compact squares agree with the universal map route"))
}

fn check_compactness_vs_domination(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let squares = catalog_squares(ctx, 36)?;
    let mut agree = 0;
    for s in &squares {
        if !is_indecomposable(&s.alpha) {
            continue;
        }
        let by_subgroups = square_classify(s)
            .compact
            .ok_or_else(|| anyhow!("pullback square not cartesian"))?;
        let by_domination = dominates(&s.phi, &s.alpha, caps)?.is_none();
        let by_quotients = compact_by_quotients(s, caps)?;
        if by_subgroups != by_domination || by_subgroups != by_quotients {
            bail!(
                "compactness disagreement: subgroups {by_subgroups}, domination {by_domination}, quotients {by_quotients}"
            );
        }
        agree += 1;
    }
    pass(format!("{agree} cartesian squares with indecomposable alpha agree on all three routes"))
}

fn check_square_trivialities(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    // Stacked pullbacks: right square over (alpha', phi), left square over
    // (gamma, beta'); the outer square must be cartesian, and compact iff
    // both inner squares are.
    let sgn = ctx.sign()?;
    let m2 = ctx.mod2()?;
    let c2 = ctx.group("C2")?;
    let klein_pr = enumerate_homs(&ctx.group("C2xC2")?, &c2, true, caps)?.remove(0);
    let mut instances = 0;
    for (alpha_p, phi) in [
        (sgn.clone(), m2.clone()),
        (m2.clone(), sgn.clone()),
        (klein_pr.clone(), sgn.clone()),
        (sgn.clone(), klein_pr.clone()),
    ] {
        let (right, _) = pullback(&alpha_p, &phi, caps)?;
        // gamma: B -> B' from a product with a small group.
        for extra in [ctx.group("C2")?, ctx.group("C3")?] {
            let (bprod, gamma, _) = FiniteGroup::direct_product(
                alpha_p.src(),
                &extra,
                "Bx",
                caps,
            )?;
            let _ = bprod;
            let (left, _) = pullback(&gamma, &right.beta, caps)?;
            // Outer square: note the pullback orientation: left.eta covers
            // right's top-left group H'.
            let outer = Square::new(
                compose(&left.eta, &right.eta)?,
                left.beta.clone(),
                compose(&gamma, &alpha_p)?,
                phi.clone(),
            )?;
            let st_left = square_classify(&left);
            let st_right = square_classify(&right);
            let st_outer = square_classify(&outer);
            if !(st_left.cartesian && st_right.cartesian && st_outer.cartesian) {
                bail!("two cartesian squares did not force the third");
            }
            let outer_compact = st_outer.compact.unwrap();
            let inner_both = st_left.compact.unwrap() && st_right.compact.unwrap();
            if outer_compact != inner_both {
                bail!("outer compactness disagrees with inner conjunction");
            }
            instances += 1;
        }
    }
    pass(format!("{instances} stacked diagrams: cartesian two-of-three and compactness composition hold"))
}

fn check_expand(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let sgn = ctx.sign()?;
    let m2 = ctx.mod2()?;
    let mut instances = 0;
    // (semi2) = pullback of (alpha, phi); (semi1) = a larger fiber product
    // mapping onto the same corners.
    for (alpha, phi) in [(sgn.clone(), m2.clone()), (m2.clone(), sgn.clone())] {
        let (cart, _) = pullback(&alpha, &phi, caps)?;
        let family = CoverFamily::new(&c2, vec![alpha.clone(), alpha.clone(), phi.clone()])?;
        let fp = fiber_product(&family, caps)?;
        let beta2 = fp.projections[0].clone();
        let eta2 = fp.projections[2].clone();
        let semi1 = Square::new(eta2.clone(), beta2.clone(), alpha.clone(), phi.clone())?;
        if !square_classify(&semi1).semi_cartesian {
            bail!("constructed square is not semi-cartesian");
        }
        let psi = connecting_hom(&cart, &beta2, &eta2)?
            .ok_or_else(|| anyhow!("no connecting homomorphism"))?;
        if !psi.is_surjective() {
            bail!("connecting homomorphism from a semi-cartesian source is not surjective");
        }
        instances += 1;
    }
    // Degenerate instance over the trivial base.
    let one = ctx.group("1")?;
    let to_one = GroupHom::new(c2.clone(), one.clone(), vec![0, 0])?;
    let (cart, _) = pullback(&to_one, &to_one, caps)?;
    let (v8, prk, pr2) = FiniteGroup::direct_product(&ctx.group("C2xC2")?, &c2, "C2^3", caps)?;
    let _ = v8;
    let first = compose(&prk, &enumerate_homs(prk.dst(), &c2, true, caps)?.remove(0))?;
    let semi1 = Square::new(pr2.clone(), first.clone(), to_one.clone(), to_one.clone())?;
    if !square_classify(&semi1).semi_cartesian {
        bail!("triple-product square is not semi-cartesian");
    }
    let psi = connecting_hom(&cart, &first, &pr2)?.ok_or_else(|| anyhow!("no connecting hom"))?;
    if !psi.is_surjective() {
        bail!("triple-product connecting hom not surjective");
    }
    instances += 1;
    pass(format!("{instances} semi-cartesian sources expand surjectively into cartesian squares"))
}

fn check_endomorphism_field(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut sizes = Vec::new();
    // Trivial modules: field of size p.
    for (name, p) in [("C2", 2u32), ("C3", 3), ("S3", 2), ("C2", 5)] {
        let g = ctx.group(name)?;
        let m = GModule::trivial(&g, p);
        let f = cover_core::module::end_field(&m)?;
        if f.order() != p as usize {
            bail!("trivial module end field has order {} instead of {p}", f.order());
        }
        sizes.push(f.order());
    }
    // Inversion module of the sign cover: field of size 3.
    let km = module_from_kernel(&ctx.sign()?)?;
    let f = cover_core::module::end_field(&km.module)?;
    if f.order() != 3 {
        bail!("inversion module end field has order {}", f.order());
    }
    sizes.push(f.order());
    // H^2 spaces close under the field action (verified during
    // construction of the coordinate action matrices).
    for (name, p) in [("C2", 2u32), ("C3", 3), ("S3xC2", 3)] {
        let g = ctx.group(name)?;
        let m = GModule::trivial(&g, p);
        let _ = h2_space(&g, &m, caps)?;
    }
    pass(format!("end fields of orders {sizes:?}; scalar action closes on H^2"))
}

/// Independent route for H^2 sizes: enumerate every normalized table, accept
/// it when the twisted product it defines is associative (a group), and
/// detect splitting by homomorphic sections. The class count is the ratio of
/// valid tables to split tables.
fn h2_by_extension_enumeration(g: &FiniteGroup, p: usize, caps: &Caps) -> Result<(usize, usize)> {
    let n = g.order();
    let cells = (n - 1) * (n - 1);
    let total = p.pow(cells as u32);
    if total > 1 << 20 {
        bail!("table space too large for the oracle");
    }
    let mut valid = 0usize;
    let mut split_count = 0usize;
    for mut code in 0..total {
        let mut table = vec![0usize; n * n];
        for a in 1..n {
            for b in 1..n {
                table[a * n + b] = code % p;
                code /= p;
            }
        }
        // Twisted product on pairs (v, g): associativity of this table is
        // exactly the cocycle identity, so from_table acts as the filter.
        let order = p * n;
        let mut prod = vec![vec![0usize; order]; order];
        for v1 in 0..p {
            for g1 in 0..n {
                for v2 in 0..p {
                    for g2 in 0..n {
                        let v = (v1 + v2 + table[g1 * n + g2]) % p;
                        prod[v1 * n + g1][v2 * n + g2] = v * n + g.mul(g1, g2);
                    }
                }
            }
        }
        let ext = match FiniteGroup::from_table(&prod, "ext-candidate") {
            Ok(e) => e,
            Err(_) => continue,
        };
        valid += 1;
        let proj = GroupHom::new(ext, g.clone(), (0..order).map(|i| i % n).collect())?;
        if splits(&proj, caps)? {
            split_count += 1;
        }
    }
    if valid % split_count.max(1) != 0 {
        bail!("split tables do not partition the cocycle tables evenly");
    }
    Ok((valid, split_count))
}

fn check_h2_dimensions(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut summary = Vec::new();
    for (gname, p, expected_dim) in [("C2", 2usize, 1usize), ("C3", 3, 1), ("C2", 3, 0)] {
        let g = ctx.group(gname)?;
        let m = GModule::trivial(&g, p as u32);
        let h2 = h2_space(&g, &m, caps)?;
        if h2.dim_fp != expected_dim {
            bail!("rank route: dim H^2({gname}, F{p}) = {} expected {expected_dim}", h2.dim_fp);
        }
        let (valid, split_count) = h2_by_extension_enumeration(&g, p, caps)?;
        let classes = valid / split_count;
        let dim_by_enum = {
            let mut d = 0;
            let mut c = classes;
            while c > 1 {
                if c % p != 0 {
                    bail!("class count {classes} is not a power of {p}");
                }
                c /= p;
                d += 1;
            }
            d
        };
        if dim_by_enum != expected_dim {
            bail!("enumeration route: dim H^2({gname}, F{p}) = {dim_by_enum} expected {expected_dim}");
        }
        summary.push(format!("H2({gname},F{p})={expected_dim} [{valid} tables/{split_count} split]"));
    }
    pass(summary.join("; "))
}

fn check_indecomposable_quotients_criterion(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut tested = 0;
    for (base_name, p) in [("C2", 2usize), ("C3", 3)] {
        let base = ctx.group(base_name)?;
        let m = GModule::trivial(&base, p as u32);
        let h2 = h2_space(&base, &m, caps)?;
        // The indecomposable covers with kernel the trivial module: the
        // split one and the nonsplit cyclic one.
        let split_cover = ctx.trivial_split_cover(&base, p)?;
        let nonsplit = class_to_extension(&h2.class_from_coords(&[1]), caps)?;
        let zetas = [split_cover.clone(), nonsplit.clone()];
        let pool = [split_cover.clone(), nonsplit.clone()];
        // Families of size 1 and 2 over the pool.
        let mut families: Vec<Vec<GroupHom>> = Vec::new();
        for a in 0..pool.len() {
            families.push(vec![pool[a].clone()]);
            for b in a..pool.len() {
                families.push(vec![pool[a].clone(), pool[b].clone()]);
            }
        }
        for legs in families {
            let family = CoverFamily::new(&base, legs.clone())?;
            let fp = fiber_product(&family, caps)?;
            let leg_coords: Vec<Vec<u32>> = legs
                .iter()
                .map(|leg| {
                    let class = cover_core::cohomology::extension_class(leg, &m, caps)?;
                    h2.coords_of(&class)
                        .map_err(|e| anyhow!("{e}"))
                })
                .collect::<Result<_>>()?;
            for zeta in &zetas {
                let dominated = dominates(&fp.to_base, zeta, caps)?.is_some();
                // Right-hand side: zeta's class is a nontrivial linear
                // combination of the leg classes.
                let zclass = cover_core::cohomology::extension_class(zeta, &m, caps)?;
                let zcoords = h2.coords_of(&zclass)?;
                let k = legs.len();
                let mut reachable = false;
                for code in 1..p.pow(k as u32) {
                    let mut c = code;
                    let mut acc = vec![0u32; h2.dim_fp];
                    for coords in leg_coords.iter() {
                        let a = (c % p) as u32;
                        c /= p;
                        for (slot, &x) in coords.iter().enumerate() {
                            acc[slot] = fp::add(acc[slot], fp::mul(a, x, p as u32), p as u32);
                        }
                    }
                    if acc == zcoords {
                        reachable = true;
                        break;
                    }
                }
                if dominated != reachable {
                    bail!(
                        "criterion mismatch over {base_name}: dominated {dominated}, combination-reachable {reachable}"
                    );
                }
                tested += 1;
            }
        }
    }
    pass(format!("{tested} (family, cover) pairs agree with the linear-combination criterion"))
}

fn check_fundament_is_fundamental(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut checked = 0;
    let one = ctx.group("1")?;
    let mut pool: Vec<GroupHom> = Vec::new();
    for name in ["C4", "C8", "C2xC2", "S3", "Q8", "C6", "S3xC2"] {
        let h = ctx.group(name)?;
        pool.push(GroupHom::new(h.clone(), one.clone(), vec![0; h.order()])?);
        for q in epis_per_kernel(&h, &ctx.group("C2")?, caps)? {
            pool.push(q);
        }
    }
    let (eta1, eta2) = ctx.superbasic_pair()?;
    pool.push(eta1);
    pool.push(eta2);
    for pi in &pool {
        let (m, fnd) = fundament(pi)?;
        if !is_fundamental(&fnd)? {
            bail!("fundament of {:?} is not fundamental", pi);
        }
        // The fundament kernel is contained in the kernel.
        let ker = pi.kernel();
        if !m.element_indices().iter().all(|&e| ker.contains(e)) {
            bail!("fundament kernel escapes the kernel");
        }
        checked += 1;
    }
    pass(format!("{checked} fundaments verified fundamental"))
}

fn check_decomposition_fiber_product(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let one = ctx.group("1")?;
    let m2 = ctx.mod2()?;
    let klein_to_one = GroupHom::new(ctx.group("C2xC2")?, one.clone(), vec![0; 4])?;
    let (eta1, _) = ctx.superbasic_pair()?;
    let split = ctx.trivial_split_cover(&c2, 2)?;
    let mut verified = 0;
    for pi in [m2.clone(), klein_to_one.clone(), eta1.clone(), split.clone()] {
        let family = indecomposable_decomposition(&pi, caps)?;
        for leg in family.legs() {
            if !is_indecomposable(leg) {
                bail!("decomposition leg is not indecomposable");
            }
        }
        let fp = fiber_product(&family, caps)?;
        if isomorphic_over_base(&fp.to_base, &pi, caps)?.is_none() {
            bail!("fiber product of the decomposition is not the cover");
        }
        verified += 1;
    }
    // Converse: fiber products of indecomposable families are fundamental.
    let family = CoverFamily::new(&c2, vec![m2.clone(), split.clone()])?;
    let fp = fiber_product(&family, caps)?;
    if !is_fundamental(&fp.to_base)? {
        bail!("fiber product of indecomposables is not fundamental");
    }
    // Non-fundamental input is rejected.
    let c4_to_one = GroupHom::new(ctx.group("C4")?, one, vec![0; 4])?;
    match indecomposable_decomposition(&c4_to_one, caps) {
        Err(CoverError::NotFundamental) => {}
        other => bail!("expected NotFundamental, got {other:?}"),
    }
    pass(format!("{verified} decompositions verified as fiber products"))
}

fn check_relation_dimension(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let m = GModule::trivial(&c2, 2);
    let h2 = h2_space(&c2, &m, caps)?;
    let x = h2.class_from_coords(&[1]);
    let zero = CocycleClass::zero(&m);
    let cases: Vec<(Vec<CocycleClass>, usize, usize)> = vec![
        (vec![x.clone(), x.clone()], 1, 1),
        (vec![x.clone()], 1, 0),
        (vec![zero.clone()], 0, 1),
        (vec![x.clone(), zero.clone()], 1, 1),
        (vec![zero.clone(), zero.clone()], 0, 2),
    ];
    for (family, span, rel) in &cases {
        let sr = span_and_relations(family, &h2)?;
        if sr.span_dim != *span || sr.relation_dim != *rel {
            bail!("span/relation mismatch: got ({}, {}), want ({span}, {rel})", sr.span_dim, sr.relation_dim);
        }
    }
    pass(format!("{} relation-dimension cases", cases.len()))
}

fn check_invariants_uniqueness(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let m2 = ctx.mod2()?;
    let split = ctx.trivial_split_cover(&c2, 2)?;
    let (eta1, _) = ctx.superbasic_pair()?;
    // Covers with several genuinely distinct decompositions.
    let mut covers: Vec<(FiniteGroup, GroupHom)> = Vec::new();
    let fp1 = fiber_product(&CoverFamily::new(&c2, vec![split.clone(), split.clone()])?, caps)?;
    covers.push((c2.clone(), fp1.to_base));
    let fp2 = fiber_product(&CoverFamily::new(&c2, vec![m2.clone(), split.clone()])?, caps)?;
    covers.push((c2.clone(), fp2.to_base));
    let world = ctx.s3xc2()?;
    let fp3 = fiber_product(&CoverFamily::new(&world.base, vec![eta1.clone(), eta1.clone()])?, caps)?;
    covers.push((world.base.clone(), fp3.to_base));
    let mut total_decomps = 0;
    for (base, pi) in &covers {
        let decomps = all_decompositions(pi, 6, caps)?;
        if decomps.len() < 2 {
            bail!("expected several decompositions, found {}", decomps.len());
        }
        total_decomps += decomps.len();
        let mut registry = ClassRegistry::new(base, caps);
        let invs: Vec<_> = decomps
            .iter()
            .map(|fam| cover_invariants(&mut registry, pi, fam, caps))
            .collect::<std::result::Result<_, _>>()?;
        for pair in invs.windows(2) {
            let cmp = compare_covers(&registry, &pair[0], &pair[1])?;
            if !cmp.isomorphic {
                bail!("two decompositions of one cover gave different invariants");
            }
        }
    }
    pass(format!("{} covers, {total_decomps} decompositions, identical invariants", covers.len()))
}

fn check_compare_vs_search(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let m2 = ctx.mod2()?;
    let split = ctx.trivial_split_cover(&c2, 2)?;
    let id = GroupHom::identity(&c2);
    let fp_mix = fiber_product(&CoverFamily::new(&c2, vec![m2.clone(), split.clone()])?, caps)?;
    let fp_split2 =
        fiber_product(&CoverFamily::new(&c2, vec![split.clone(), split.clone()])?, caps)?;
    let covers = vec![id, m2.clone(), split.clone(), fp_mix.to_base, fp_split2.to_base];
    let mut registry = ClassRegistry::new(&c2, caps);
    let mut invs = Vec::new();
    for pi in &covers {
        let fam = indecomposable_decomposition(pi, caps)?;
        invs.push(cover_invariants(&mut registry, pi, &fam, caps)?);
    }
    let mut pairs = 0;
    for i in 0..covers.len() {
        for j in 0..covers.len() {
            let cmp = compare_covers(&registry, &invs[i], &invs[j])?;
            let search_dom = dominates(&covers[i], &covers[j], caps)?.is_some();
            if cmp.first_dominates_second != search_dom {
                bail!("criterion and search disagree on domination ({i},{j})");
            }
            let search_iso = isomorphic_over_base(&covers[i], &covers[j], caps)?.is_some();
            if cmp.isomorphic != search_iso {
                bail!("criterion and search disagree on isomorphism ({i},{j})");
            }
            pairs += 1;
        }
    }
    pass(format!("{pairs} ordered pairs of fundamental covers agree with explicit searches"))
}

fn check_power_domination_table(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c2 = ctx.group("C2")?;
    let m2 = ctx.mod2()?;
    let split = ctx.trivial_split_cover(&c2, 2)?;
    // (pi, eta, expected max kappa <= 3 with eta^(kappa) dominated).
    let fp_split2 =
        fiber_product(&CoverFamily::new(&c2, vec![split.clone(), split.clone()])?, caps)?;
    let fp_mix = fiber_product(&CoverFamily::new(&c2, vec![m2.clone(), split.clone()])?, caps)?;
    let cases: Vec<(GroupHom, GroupHom, usize)> = vec![
        // mult 2, supp 0; split eta in supp: kappa <= mult.
        (fp_split2.to_base.clone(), split.clone(), 2),
        // nonsplit eta outside supp {0}: kappa = 0.
        (fp_split2.to_base.clone(), m2.clone(), 0),
        // supp = line, mult 0; nonsplit eta in supp: kappa <= mult + 1.
        (m2.clone(), m2.clone(), 1),
        // split eta, class 0 in supp always: kappa <= mult = 0.
        (m2.clone(), split.clone(), 0),
        // supp = line, mult 1.
        (fp_mix.to_base.clone(), m2.clone(), 2),
        (fp_mix.to_base.clone(), split.clone(), 1),
    ];
    for (pi, eta, expected) in &cases {
        for kappa in 0..=3usize {
            let powered = power_cover(eta, kappa, caps)?;
            let dominated = dominates(pi, &powered, caps)?.is_some();
            if dominated != (kappa <= *expected) {
                bail!(
                    "power table mismatch: kappa {kappa}, expected bound {expected}, dominated {dominated}"
                );
            }
        }
    }
    // Non-abelian case at multiplicity one.
    let one = ctx.group("1")?;
    let a5 = groups::alternating(5, caps)?;
    let pi = GroupHom::new(a5, one.clone(), vec![0; 60])?;
    let p0 = power_cover(&pi, 0, caps)?;
    if dominates(&pi, &p0, caps)?.is_none() || dominates(&pi, &pi, caps)?.is_none() {
        bail!("non-abelian cover fails to dominate its own powers up to mult");
    }
    let c2_to_one = GroupHom::new(ctx.group("C2")?, one, vec![0, 0])?;
    if dominates(&pi, &c2_to_one, caps)?.is_some() {
        bail!("simple non-abelian cover dominates a foreign class");
    }
    pass(format!("{} split/non-split table rows at kappa <= 3", cases.len()))
}

fn check_embedding_property_witness(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    for name in ["1", "C2", "C3", "C4", "C6", "C8", "C2xC2", "C2xC3", "S3", "Q8"] {
        let report = has_embedding_property(&ctx.group(name)?, caps)?;
        if !report.has_ep {
            bail!("{name} unexpectedly fails the embedding property");
        }
    }
    let world = ctx.s3xc2()?;
    let report = has_embedding_property(&world.base, caps)?;
    if report.has_ep {
        bail!("S3xC2 unexpectedly has the embedding property");
    }
    let witness = report.witness.ok_or_else(|| anyhow!("missing witness"))?;
    let ker = witness.phi.kernel();
    if ker.order() != 6 || ker.is_abelian() {
        bail!("witness phi kernel is not the S3 factor");
    }
    if witness.alpha.src().order() != 6 || witness.alpha.dst().order() != 2 {
        bail!("witness alpha is not a sign map of an S3 quotient");
    }
    if dominates(&witness.phi, &witness.alpha, caps)?.is_some() {
        bail!("witness problem is solvable after all");
    }
    pass("10 groups have the property; S3xC2 fails with the S3-kernel sign problem")
}

fn check_ev_trivialities(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let sec0 = world.classifier.sec();
    if sec0.source().order() != 108 {
        bail!("smallest embedding cover of S3xC2 has order {}, expected 108", sec0.source().order());
    }
    let sec1 = cover_core::engine::smallest_embedding_cover(&world.base, 1, caps)?;
    // (a): two runs are quotients of each other.
    if is_quotient(sec0.source(), sec1.source(), caps)?.is_none()
        || is_quotient(sec1.source(), sec0.source(), caps)?.is_none()
    {
        bail!("seed-0 and seed-1 covers are not mutual quotients");
    }
    // (b): the first chain step (a prefix of an I-cover) is an I-cover.
    let prefix = sec0.chain[0].eta.clone();
    let c_prefix = world.classifier.classify(&prefix)?;
    if !c_prefix.i_cover {
        bail!("prefix of the smallest embedding cover is not an I-cover");
    }
    // (c): the composition of the chain steps is an I-cover.
    let c_full = world.classifier.classify(&sec0.cover)?;
    if !c_full.i_cover {
        bail!("composed chain is not an I-cover");
    }
    pass("finiteness (order 108), seed-independence, prefix and composition closure")
}

fn check_compact_fprod_in_universe(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let c2 = ctx.group("C2")?;
    let sgn = ctx.sign()?;
    let klein_pr = enumerate_homs(&ctx.group("C2xC2")?, &c2, true, caps)?.remove(0);
    // A = C2, B1 = S3, B2 = C2xC2 are all quotients of S3xC2, hence in the
    // cover universe.
    let family = CoverFamily::new(&c2, vec![sgn.clone(), klein_pr])?;
    let fp = fiber_product(&family, caps)?;
    if !fprod_is_compact(&fp) {
        bail!("independent fiber product is not compact");
    }
    if !world.classifier.in_cover_universe(&fp.group)? {
        bail!("compact fiber product of universe members left the universe");
    }
    // Contrast: the diagonal makes two copies of the sign non-compact, so
    // the statement does not apply there.
    let doubled = fiber_product(&CoverFamily::new(&c2, vec![sgn.clone(), sgn])?, caps)?;
    if fprod_is_compact(&doubled) {
        bail!("two copies of one cover cannot form a compact fiber product");
    }
    pass("compact fiber product of universe members stays in the universe")
}

fn check_basic_implies_icover(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let mut samples = vec![
        GroupHom::identity(&world.base),
        eta1.clone(),
        eta2.clone(),
        ctx.split_m1prime()?,
        ctx.nonsplit_f2_cover()?,
        ctx.trivial_split_cover(&world.base, 2)?,
    ];
    samples.push(power_cover(&eta1, 2, caps)?);
    let mut basics = 0;
    for eta in &samples {
        let c = world.classifier.classify(eta)?;
        if c.superbasic && !c.basic {
            bail!("superbasic without basic");
        }
        if c.basic && !c.i_cover {
            bail!("basic without I-cover");
        }
        if let Some(square) = &c.basic_square {
            // Certificate re-verified: compact cartesian with bottom-left in
            // the universe.
            let st = square_classify(square);
            if st.compact != Some(true) {
                bail!("basic certificate square is not compact");
            }
            if !world.classifier.in_cover_universe(square.beta.dst())? {
                bail!("basic certificate bottom-left leaves the universe");
            }
            basics += 1;
        }
    }
    pass(format!("{basics} basic certificates re-verified; implications hold on {} samples", samples.len()))
}

fn check_nonsplit_is_basic(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.c2xc4()?;
    let sec = world.classifier.sec();
    if sec.source().order() != 16 || sec.chain.len() != 1 {
        bail!(
            "smallest embedding cover of C2xC4 has order {} (chain {}), expected 16 (1)",
            sec.source().order(),
            sec.chain.len()
        );
    }
    let eta = sec.chain[0].eta.clone();
    if splits(&eta, caps)? {
        bail!("the C4xC4 step unexpectedly splits");
    }
    if !is_indecomposable(&eta) {
        bail!("the C4xC4 step is not indecomposable");
    }
    let c = world.classifier.classify(&eta)?;
    if !c.basic {
        bail!("non-split indecomposable cover with source in the universe is not basic");
    }
    pass("C4xC4 over C2xC4: non-split, indecomposable, source in the universe, basic")
}

fn check_ep_iff_no_superbasic(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut groups_checked = 0;
    let mut pool: Vec<FiniteGroup> = Vec::new();
    for name in crate::catalog::CATALOG_NAMES {
        pool.push(ctx.group(name)?);
    }
    pool.push(ctx.c2xc4()?.base.clone());
    for g in &pool {
        let report = has_embedding_property(g, caps)?;
        let scan = enumerate_superbasic(g, caps)?;
        if report.has_ep != scan.covers.is_empty() {
            bail!("{}: embedding property {} but {} superbasic covers", g.name(), report.has_ep, scan.covers.len());
        }
        if scan.skipped_over_cap != 0 {
            bail!("{}: scan skipped candidates over cap", g.name());
        }
        groups_checked += 1;
    }
    pass(format!("{groups_checked} groups: embedding property iff no superbasic cover"))
}

fn check_sec_chain_superbasic(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut steps = 0;
    for world in [ctx.s3xc2()?, ctx.c2xc4()?] {
        let sec = world.classifier.sec();
        if !sec.ep_report.has_ep {
            bail!("chain endpoint lacks the embedding property");
        }
        for square in &sec.chain {
            // Each step: cartesian, compact, alpha indecomposable, eta
            // indecomposable, bottom-left a quotient of the step's base.
            let st_cartesian = {
                let st = square_classify(square);
                st.cartesian
            };
            if !st_cartesian {
                bail!("chain square not cartesian");
            }
            if !compact_by_quotients(square, caps)? {
                bail!("chain square not compact");
            }
            if !is_indecomposable(&square.alpha) || !is_indecomposable(&square.eta) {
                bail!("chain square maps not indecomposable");
            }
            if is_quotient(square.eta.dst(), square.beta.dst(), caps)?.is_none() {
                bail!("chain square bottom-left is not a quotient of the base");
            }
            steps += 1;
        }
        // Composition of the chain equals the cover.
        let mut composed = GroupHom::identity(&world.base);
        for square in &sec.chain {
            composed = compose(&square.eta, &composed)?;
        }
        if &composed != &sec.cover {
            bail!("chain does not compose to the cover");
        }
    }
    pass(format!("{steps} chain steps verified superbasic; compositions agree"))
}

fn check_compose_basic(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let sec = world.classifier.sec();
    let step1 = sec.chain[0].eta.clone(); // G1 -> G
    let step2 = sec.chain[1].eta.clone(); // G2 -> G1
    let mid = Classifier::new(step1.src(), caps)?;
    // Positive: both steps basic, composition basic.
    let c1 = world.classifier.classify(&step1)?;
    let c2 = mid.classify(&step2)?;
    let composed = compose(&step2, &step1)?;
    let cc = world.classifier.classify(&composed)?;
    if !(c1.basic && c2.basic && cc.basic) {
        bail!("superbasic chain steps or their composition not basic");
    }
    // Negative: a non-basic second factor kills the composition.
    let bad = ctx.trivial_split_cover(step1.src(), 2)?;
    let cbad = mid.classify(&bad)?;
    let composed_bad = compose(&bad, &step1)?;
    let cc_bad = world.classifier.classify(&composed_bad)?;
    if cbad.basic {
        bail!("coordinate projection unexpectedly basic over the middle group");
    }
    if cc_bad.basic {
        bail!("composition with a non-basic factor is basic");
    }
    pass("composition basic iff both factors basic (positive and negative instances)")
}

fn check_basic_subspace(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.c2xc2xc4()?;
    let sec = world.classifier.sec();
    if sec.source().order() != 64 {
        bail!("smallest embedding cover of C2xC2xC4 has order {}", sec.source().order());
    }
    let (_, fnd) = fundament(&sec.cover)?;
    let family = indecomposable_decomposition(&fnd, caps)?;
    let mut registry = ClassRegistry::new(&world.base, caps);
    let inv = cover_invariants(&mut registry, &fnd, &family, caps)?;
    // Expect a single module class with a 2-dimensional support.
    let (class_idx, ab) = inv
        .ab_data
        .iter()
        .next()
        .ok_or_else(|| anyhow!("no abelian invariant data"))?;
    if ab.supp_dim != 2 {
        bail!("expected support of dimension 2, got {}", ab.supp_dim);
    }
    let (_, h2) = registry.ab_rep(*class_idx);
    // (a): every nonzero combination in the support is basic.
    let mut combos = 0;
    let rows = ab.supp.rows.clone();
    let p = 2u32;
    for code in 1..(1u32 << rows.len()) {
        let mut acc = vec![0u32; h2.dim_fp];
        for (bit, row) in rows.iter().enumerate() {
            if code >> bit & 1 == 1 {
                for (slot, &x) in row.iter().enumerate() {
                    acc[slot] = fp::add(acc[slot], x, p);
                }
            }
        }
        let class = h2.class_from_coords(&acc);
        let ext = class_to_extension(&class, caps)?;
        let c = world.classifier.classify(&ext)?;
        if !c.basic {
            bail!("combination {code} in the support is not basic");
        }
        combos += 1;
    }
    // (b): the fiber product of the independent family is basic.
    let basis_legs: Vec<GroupHom> = family
        .legs()
        .iter()
        .take(2)
        .cloned()
        .collect();
    let fp2 = fiber_product(&CoverFamily::new(&world.base, basis_legs)?, caps)?;
    let cb = world.classifier.classify(&fp2.to_base)?;
    if !cb.basic {
        bail!("fiber product of an independent basic family is not basic");
    }
    pass(format!("{combos} nonzero support combinations basic; independent fiber product basic"))
}

fn check_fprod_of_basics(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let c2 = ctx.group("C2")?;
    let m2 = ctx.mod2()?;
    let split = ctx.trivial_split_cover(&c2, 2)?;
    let small_clf = Classifier::new(&c2, caps)?;
    let mut cases = 0;
    // (family, classifier, world base) instances over two bases.
    let instances: Vec<(Vec<GroupHom>, &Classifier, FiniteGroup)> = vec![
        (vec![eta1.clone(), eta2.clone()], &world.classifier, world.base.clone()),
        (vec![eta1.clone(), eta1.clone()], &world.classifier, world.base.clone()),
        (vec![m2.clone(), split.clone()], &small_clf, c2.clone()),
        (vec![split.clone(), split.clone()], &small_clf, c2.clone()),
    ];
    for (legs, clf, base) in instances {
        let family = CoverFamily::new(&base, legs.clone())?;
        let fp = fiber_product(&family, caps)?;
        let left = clf.classify(&fp.to_base)?.basic;
        // Right side: source in the universe AND every indecomposable cover
        // dominated by the fiber product is basic.
        let in_universe = clf.in_cover_universe(&fp.group)?;
        let mut dominated_all_basic = true;
        // Dominated indecomposables: the legs and, per module class, the
        // nonzero combinations of the leg classes.
        let mut registry = ClassRegistry::new(&base, caps);
        let inv = cover_invariants(&mut registry, &fp.to_base, &family, caps)?;
        let mut dominated: Vec<GroupHom> = legs.clone();
        for (class_idx, ab) in &inv.ab_data {
            let (_, h2) = registry.ab_rep(*class_idx);
            let rows = ab.supp.rows.clone();
            let p = h2.module.prime();
            let total = (p as usize).pow(rows.len() as u32);
            for code in 1..total {
                let mut acc = vec![0u32; h2.dim_fp];
                let mut c = code;
                for row in rows.iter() {
                    let a = (c % p as usize) as u32;
                    c /= p as usize;
                    for (slot, &x) in row.iter().enumerate() {
                        acc[slot] = fp::add(acc[slot], fp::mul(a, x, p), p);
                    }
                }
                dominated.push(class_to_extension(&h2.class_from_coords(&acc), caps)?);
            }
        }
        for zeta in &dominated {
            if dominates(&fp.to_base, zeta, caps)?.is_none() {
                continue;
            }
            if !clf.classify(zeta)?.basic {
                dominated_all_basic = false;
                break;
            }
        }
        let right = in_universe && dominated_all_basic;
        if left != right {
            bail!("fiber-product basicness {left} differs from the criterion {right}");
        }
        cases += 1;
    }
    pass(format!("{cases} fiber products agree with the dominated-covers criterion"))
}

fn check_going_down(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut instances = 0;
    for world in [ctx.s3xc2()?, ctx.c2xc4()?] {
        let sec = world.classifier.sec();
        if sec.chain.is_empty() {
            continue;
        }
        // eta: top chain group onto the previous one (basic); xi: previous
        // onto the base. Push basic down along semi-cartesian squares
        // obtained from normal subgroups N with N * Ker eta = Ker(xi ∘ eta).
        let eta = sec.chain.last().expect("nonempty").eta.clone();
        let mut xi = GroupHom::identity(&world.base);
        for square in &sec.chain[..sec.chain.len() - 1] {
            xi = compose(&square.eta, &xi)?;
        }
        let composed = compose(&eta, &xi)?;
        let h = eta.src();
        let ker_eta = eta.kernel();
        let ker_comp = composed.kernel();
        for n in h.normal_subgroups() {
            if !n.iter().all(|e| ker_comp.elements().binary_search(e).is_ok()) {
                continue;
            }
            let nsub = Subgroup::from_sorted_unchecked(h, n.clone());
            if nsub.product_set(&ker_eta) != ker_comp.elements() {
                continue;
            }
            // Induced cover of the base through H/N.
            let (_, zeta) = h.quotient(&nsub)?;
            let mut images = vec![0usize; zeta.dst().order()];
            for x in 0..h.order() {
                images[zeta.apply(x)] = composed.apply(x);
            }
            let eta_bar = GroupHom::new(zeta.dst().clone(), world.base.clone(), images)?;
            // Semi-cartesian by construction; eta is basic (superbasic step).
            let c = world.classifier.classify(&eta_bar)?;
            if !c.basic {
                bail!("basic failed to push down along a semi-cartesian square");
            }
            instances += 1;
        }
    }
    if instances == 0 {
        bail!("no going-down instances generated");
    }
    pass(format!("{instances} semi-cartesian push-downs preserve basic"))
}

fn check_indecomposable_icover_basic(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let mut pool: Vec<(GroupHom, &Classifier)> = vec![
        (eta1, &world.classifier),
        (eta2, &world.classifier),
        (ctx.split_m1prime()?, &world.classifier),
        (ctx.nonsplit_f2_cover()?, &world.classifier),
    ];
    let world2 = ctx.c2xc4()?;
    pool.push((world2.classifier.sec().chain[0].eta.clone(), &world2.classifier));
    let mut nonvacuous = 0;
    for (eta, clf) in &pool {
        if !is_indecomposable(eta) {
            bail!("pool member is not indecomposable");
        }
        let c = clf.classify(eta)?;
        if c.i_cover {
            if !c.basic {
                bail!("indecomposable I-cover is not basic");
            }
            nonvacuous += 1;
        }
    }
    if nonvacuous < 3 {
        bail!("too few indecomposable I-covers exercised: {nonvacuous}");
    }
    let _ = caps;
    pass(format!("{nonvacuous} indecomposable I-covers are basic"))
}

fn check_fec_unique(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let mut fundaments = Vec::new();
    for seed in 0..4u64 {
        let sec = cover_core::engine::smallest_embedding_cover(&world.base, seed, caps)?;
        let (_, fnd) = fundament(&sec.cover)?;
        fundaments.push(fnd);
    }
    for pair in fundaments.windows(2) {
        if isomorphic_over_base(&pair[0], &pair[1], caps)?.is_none() {
            bail!("fundaments of two runs are not isomorphic over the base");
        }
    }
    pass(format!("{} seeded runs share one fundament class", fundaments.len()))
}

fn check_fundamental_icover_basic(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let sec_cover = world.classifier.sec().cover.clone();
    let fp = fiber_product(&CoverFamily::new(&world.base, vec![eta1.clone(), eta2.clone()])?, caps)?;
    let mut nonvacuous = 0;
    for tau in [eta1, eta2, sec_cover, fp.to_base] {
        if !is_fundamental(&tau)? {
            bail!("pool member is not fundamental");
        }
        let c = world.classifier.classify(&tau)?;
        if c.i_cover {
            if !c.basic {
                bail!("fundamental I-cover with finite kernel is not basic");
            }
            nonvacuous += 1;
        }
    }
    if nonvacuous < 3 {
        bail!("too few fundamental I-covers exercised");
    }
    pass(format!("{nonvacuous} fundamental I-covers are basic"))
}

fn check_basic_iff_icover(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let mut pool: Vec<GroupHom> = vec![
        GroupHom::identity(&world.base),
        eta1.clone(),
        eta2.clone(),
        ctx.split_m1prime()?,
        ctx.nonsplit_f2_cover()?,
        ctx.trivial_split_cover(&world.base, 2)?,
        ctx.trivial_split_cover(&world.base, 3)?,
    ];
    pool.push(power_cover(&eta1, 2, caps)?);
    pool.push(power_cover(&eta2, 2, caps)?);
    let fpm = fiber_product(&CoverFamily::new(&world.base, vec![eta1.clone(), eta2.clone()])?, caps)?;
    pool.push(fpm.to_base);
    let fpx =
        fiber_product(&CoverFamily::new(&world.base, vec![eta1.clone(), ctx.split_m1prime()?])?, caps)?;
    pool.push(fpx.to_base);
    // The natural S4-type cover: S4 x C2 onto S3 x C2.
    let s4 = groups::symmetric(4, caps)?;
    let (s4xc2, _, _) = FiniteGroup::direct_product(&s4, &ctx.group("C2")?, "S4xC2", caps)?;
    if let Some(q) = is_quotient(&s4xc2, &world.base, caps)? {
        pool.push(q);
    }
    let mut agree = 0;
    let mut trues = 0;
    for tau in &pool {
        if !is_fundamental(tau)? {
            bail!("pool member is not fundamental");
        }
        let c = world.classifier.classify(tau)?;
        if c.basic != c.i_cover {
            bail!(
                "basic {} but i_cover {} on a fundamental cover of order {}",
                c.basic,
                c.i_cover,
                tau.src().order()
            );
        }
        if c.basic {
            trues += 1;
        }
        agree += 1;
    }
    if agree < 10 {
        bail!("pool too small: {agree}");
    }
    pass(format!("{agree} fundamental covers: basic iff I-cover ({trues} positive)"))
}

fn check_complete_characterization(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let sec_cover = world.classifier.sec().cover.clone();
    let (_, fnd) = fundament(&sec_cover)?;
    let family = indecomposable_decomposition(&fnd, caps)?;
    let mut registry = ClassRegistry::new(&world.base, caps);
    let inv = cover_invariants(&mut registry, &fnd, &family, caps)?;
    let mut summary = Vec::new();
    for eta in [eta1.clone(), eta2.clone()] {
        // Multiplicity of eta's module class in the fundament.
        let km = module_from_kernel(&eta)?;
        let class_idx = registry.ab_class_of(&km.module)?;
        let mult = inv.ab_data.get(&class_idx).map(|ab| ab.mult).unwrap_or(0);
        let mut max_basic = 0usize;
        for n in 0..=3usize {
            let powered = power_cover(&eta, n, caps)?;
            let c = world.classifier.classify(&powered)?;
            if c.basic {
                max_basic = n;
            } else {
                break;
            }
        }
        if max_basic != mult {
            bail!("max basic power {max_basic} differs from multiplicity {mult}");
        }
        summary.push(format!("mult {mult}"));
    }
    // Support membership iff basic on nonzero classes, over C2xC4.
    let world2 = ctx.c2xc4()?;
    let sec2 = world2.classifier.sec().cover.clone();
    let (_, fnd2) = fundament(&sec2)?;
    let family2 = indecomposable_decomposition(&fnd2, caps)?;
    let mut registry2 = ClassRegistry::new(&world2.base, caps);
    let inv2 = cover_invariants(&mut registry2, &fnd2, &family2, caps)?;
    let (class_idx, ab) = inv2.ab_data.iter().next().ok_or_else(|| anyhow!("no module data"))?;
    let (_, h2) = registry2.ab_rep(*class_idx);
    let p = h2.module.prime();
    let mut checked = 0;
    let total = (p as usize).pow(h2.dim_fp as u32);
    for code in 1..total {
        let mut coords = vec![0u32; h2.dim_fp];
        let mut c = code;
        for slot in 0..h2.dim_fp {
            coords[slot] = (c % p as usize) as u32;
            c /= p as usize;
        }
        let in_supp = ab.supp.contains(&coords);
        let ext = class_to_extension(&h2.class_from_coords(&coords), caps)?;
        let basic = world2.classifier.classify(&ext)?.basic;
        if in_supp != basic {
            bail!("class {code}: support membership {in_supp} but basic {basic}");
        }
        checked += 1;
    }
    pass(format!(
        "powers match multiplicities ({}); {checked} nonzero classes: support iff basic",
        summary.join(", ")
    ))
}

fn check_sec_uniqueness_seeds(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let mut covers = Vec::new();
    for seed in 0..10u64 {
        let sec = cover_core::engine::smallest_embedding_cover(&world.base, seed, caps)?;
        if !sec.ep_report.has_ep {
            bail!("seed {seed}: result lacks the embedding property");
        }
        let fresh = has_embedding_property(sec.source(), caps)?;
        if !fresh.has_ep {
            bail!("seed {seed}: re-check of the embedding property fails");
        }
        covers.push(sec.cover);
    }
    for i in 0..covers.len() {
        for j in i + 1..covers.len() {
            if isomorphic_over_base(&covers[i], &covers[j], caps)?.is_none() {
                bail!("seeds {i} and {j} produced non-isomorphic covers");
            }
        }
    }
    pass(format!("{} seeded runs pairwise isomorphic over the base", covers.len()))
}

fn check_icover_criterion(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let world = ctx.s3xc2()?;
    let (eta1, eta2) = ctx.superbasic_pair()?;
    let fpm = fiber_product(&CoverFamily::new(&world.base, vec![eta1.clone(), eta2.clone()])?, caps)?;
    let pool: Vec<GroupHom> = vec![
        eta1.clone(),
        fpm.to_base,
        ctx.trivial_split_cover(&world.base, 2)?,
        ctx.split_m1prime()?,
        power_cover(&eta1, 2, caps)?,
    ];
    let mut agree = 0;
    for pi in &pool {
        // Candidate indecomposable covers dominated by pi: decomposition
        // legs plus module-class combinations.
        let family = indecomposable_decomposition(pi, caps)?;
        let mut registry = ClassRegistry::new(&world.base, caps);
        let inv = cover_invariants(&mut registry, pi, &family, caps)?;
        let mut candidates: Vec<GroupHom> = family.legs().to_vec();
        for (class_idx, ab) in &inv.ab_data {
            let (_, h2) = registry.ab_rep(*class_idx);
            let p = h2.module.prime();
            let rows = ab.supp.rows.clone();
            let total = (p as usize).pow(rows.len() as u32);
            for code in 1..total {
                let mut acc = vec![0u32; h2.dim_fp];
                let mut c = code;
                for row in rows.iter() {
                    let a = (c % p as usize) as u32;
                    c /= p as usize;
                    for (slot, &x) in row.iter().enumerate() {
                        acc[slot] = fp::add(acc[slot], fp::mul(a, x, p), p);
                    }
                }
                candidates.push(class_to_extension(&h2.class_from_coords(&acc), caps)?);
            }
            // The split extension of the module is dominated whenever the
            // multiplicity is positive.
            let zero_ext = class_to_extension(&CocycleClass::zero(&h2.module), caps)?;
            candidates.push(zero_ext);
        }
        // All dominated powers up to 3 must be basic, iff pi is an I-cover.
        let mut all_basic = true;
        'outer: for eta in &candidates {
            if !is_indecomposable(eta) {
                continue;
            }
            for n in 1..=3usize {
                let powered = match power_cover(eta, n, caps) {
                    Ok(p) => p,
                    Err(CoverError::OrderCapExceeded { .. }) => break,
                    Err(e) => return Err(e.into()),
                };
                if dominates(pi, &powered, caps)?.is_none() {
                    break;
                }
                if !world.classifier.classify(&powered)?.basic {
                    all_basic = false;
                    break 'outer;
                }
            }
        }
        let i_cover = world.classifier.classify(pi)?.i_cover;
        if i_cover != all_basic {
            bail!("I-cover {i_cover} but dominated-powers-basic {all_basic}");
        }
        agree += 1;
    }
    pass(format!("{agree} covers agree with the dominated-powers criterion"))
}

fn check_general_builder(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let sgn = ctx.sign()?;
    let (g, cover) = general_i_cover(&[sgn.clone()], caps)?;
    if g.order() != 12 || cover.src().order() != 36 {
        bail!("builder sizes: |G| = {}, |H| = {}", g.order(), cover.src().order());
    }
    let clf = Classifier::new(&g, caps)?;
    let c = clf.classify(&cover)?;
    if !c.i_cover {
        bail!("built cover is not an I-cover");
    }
    // Condition (a) violation: kernel splits off as a direct factor.
    let c6 = ctx.group("C6")?;
    let alpha_bad = GroupHom::new(c6, ctx.group("C2")?, (0..6).map(|x| x % 2).collect())?;
    match general_i_cover(&[alpha_bad], caps) {
        Err(CoverError::ConditionAViolated(0)) => {}
        other => bail!("expected ConditionAViolated, got {other:?}"),
    }
    // Condition (b) violation: dependent classes over the trivial module.
    let m2a = ctx.mod2()?;
    let m2b = ctx.mod2()?;
    match general_i_cover(&[m2a, m2b], caps) {
        Err(CoverError::ConditionBViolated) => {}
        other => bail!("expected ConditionBViolated, got {other:?}"),
    }
    pass("|G| = 12, |H| = 36, I-cover confirmed; both condition violations raised")
}

fn check_s3_example(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let sgn = ctx.sign()?;
    // Two copies of the sign map: conditions hold (the kernel module over C2
    // is the inversion module, not trivial, so independence is vacuous).
    let (g, _) = general_i_cover(&[sgn.clone(), sgn.clone()], caps)?;
    if g.order() != 36 {
        bail!("two-copy base has order {}", g.order());
    }
    // The pulled-back legs are split with kernel C3 and are the same cover.
    let b_family = CoverFamily::new(sgn.dst(), vec![sgn.clone(), sgn.clone()])?;
    let b_fp = fiber_product(&b_family, caps)?;
    let (gprod, _, phi) = FiniteGroup::direct_product(&b_fp.group, sgn.dst(), "base", caps)?;
    let _ = gprod;
    let mut legs = Vec::new();
    for alpha in [sgn.clone(), sgn.clone()] {
        let (square, _) = pullback(&alpha, &phi, caps)?;
        legs.push(square.eta);
    }
    for leg in &legs {
        if leg.kernel().order() != 3 {
            bail!("leg kernel order {}", leg.kernel().order());
        }
        if !splits(leg, caps)? {
            bail!("leg does not split");
        }
    }
    if isomorphic_over_base(&legs[0], &legs[1], caps)?.is_none() {
        bail!("the two legs are not the same cover");
    }
    pass("two-copy instance: split legs with kernel C3, pairwise equal over the base")
}

fn check_ep_direct_product(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut pool: Vec<FiniteGroup> = Vec::new();
    for name in ["S3xC2", "S3", "C2xC2", "C4", "C6", "Q8", "C8"] {
        pool.push(ctx.group(name)?);
    }
    pool.push(groups::alternating(4, caps)?);
    pool.push(groups::dihedral(4, caps)?);
    let simples = [ctx.group("C2")?, ctx.group("C3")?];
    let mut instances = 0;
    for g in &pool {
        let areps = quotient_reps(g, caps)?;
        for a in &areps {
            if a.order() == g.order() {
                continue; // phi an isomorphism is uninformative
            }
            let phis = epis_per_kernel(g, a, caps)?;
            for phi in phis.iter().take(2) {
                for s in &simples {
                    if g.order() > 48 || a.order() * s.order() > caps.max_order {
                        continue;
                    }
                    let (prod, alpha, _) = FiniteGroup::direct_product(
                        a,
                        s,
                        &format!("{}x{}", a.name(), s.name()),
                        caps,
                    )?;
                    // (a) the embedding problem has a surjective solution.
                    let by_solution = dominates(phi, &alpha, caps)?.is_some();
                    // (b) some epimorphism onto the product exists.
                    let by_quotient = is_quotient(g, &prod, caps)?.is_some();
                    // (c) some epimorphism onto S does not factor through phi.
                    let ker_phi = phi.kernel();
                    let mut by_character = false;
                    for psi in epis_per_kernel(g, s, caps)? {
                        let ker_psi = psi.kernel();
                        if !ker_phi
                            .elements()
                            .iter()
                            .all(|e| ker_psi.elements().binary_search(e).is_ok())
                        {
                            by_character = true;
                            break;
                        }
                    }
                    if by_solution != by_quotient || by_solution != by_character {
                        bail!(
                            "triple equivalence fails on ({}, phi->{}, {}): {} {} {}",
                            g.name(),
                            a.name(),
                            s.name(),
                            by_solution,
                            by_quotient,
                            by_character
                        );
                    }
                    instances += 1;
                }
            }
        }
    }
    if instances < 20 {
        bail!("only {instances} instances sampled");
    }
    pass(format!("{instances} (G, phi, S) instances: all three routes agree"))
}

fn check_direct_compact_structure(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut compact_squares = 0;
    for gname in ["C2", "C3", "C4", "C2xC2", "S3"] {
        for sname in ["C2", "C3"] {
            let g = ctx.group(gname)?;
            let s = ctx.group(sname)?;
            let (h, eta, pr_s) = FiniteGroup::direct_product(&g, &s, "GxS", caps)?;
            let ker = eta.kernel();
            for n in h.normal_subgroups() {
                let nsub = Subgroup::from_sorted_unchecked(&h, n.clone());
                if !nsub.intersect(&ker).is_trivial() {
                    continue;
                }
                let square = cover_square(&eta, &nsub)?;
                let st = square_classify(&square);
                if st.compact != Some(true) {
                    continue;
                }
                compact_squares += 1;
                // Structure: B = beta(G x 1) x beta(1 x S) with the S-part
                // equal to Ker alpha and alpha injective on the G-part.
                let b = square.beta.dst();
                let g_part: BTreeSet<usize> = (0..h.order())
                    .filter(|&x| pr_s.apply(x) == 0)
                    .map(|x| square.beta.apply(x))
                    .collect();
                let s_part: BTreeSet<usize> = (0..h.order())
                    .filter(|&x| eta.apply(x) == 0)
                    .map(|x| square.beta.apply(x))
                    .collect();
                if g_part.intersection(&s_part).count() != 1 {
                    bail!("factor images overlap");
                }
                if g_part.len() * s_part.len() != b.order() {
                    bail!("factor images do not span");
                }
                let ker_alpha: BTreeSet<usize> =
                    square.alpha.kernel().element_indices().into_iter().collect();
                if s_part != ker_alpha {
                    bail!("S-part is not the alpha kernel");
                }
                let alpha_images: BTreeSet<usize> =
                    g_part.iter().map(|&x| square.alpha.apply(x)).collect();
                if alpha_images.len() != g_part.len() {
                    bail!("alpha not injective on the G-part");
                }
            }
        }
    }
    if compact_squares == 0 {
        bail!("no compact squares over coordinate projections found");
    }
    pass(format!("{compact_squares} compact squares have the product structure"))
}

fn check_direct_compact_counterexample(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let c4 = ctx.group("C4")?;
    let c2 = ctx.group("C2")?;
    let (h, eta, pr_s) = FiniteGroup::direct_product(&c4, &c2, "C4xC2", caps)?;
    let beta_images: Vec<usize> =
        (0..8).map(|i| (eta.apply(i) + 2 * pr_s.apply(i)) % 4).collect();
    let beta = GroupHom::new(h.clone(), c4.clone(), beta_images)?;
    let alpha = ctx.mod2()?;
    let phi = ctx.mod2()?;
    let square = Square::new(eta.clone(), beta.clone(), alpha, phi)?;
    let st = square_classify(&square);
    if !st.cartesian {
        bail!("counterexample square is not cartesian");
    }
    if st.compact != Some(false) {
        bail!("counterexample square is compact");
    }
    let witness = st.witness.ok_or_else(|| anyhow!("no witness reported"))?;
    if witness != vec![0, 2, 4, 6] {
        bail!("witness is {witness:?}, expected the C4 x 1 coordinate subgroup");
    }
    // The structural failure: the images of the two factors overlap.
    let g_img: BTreeSet<usize> = (0..8).filter(|&x| pr_s.apply(x) == 0).map(|x| beta.apply(x)).collect();
    let s_img: BTreeSet<usize> = (0..8).filter(|&x| eta.apply(x) == 0).map(|x| beta.apply(x)).collect();
    if g_img.intersection(&s_img).count() == 1 {
        bail!("factor images unexpectedly meet trivially");
    }
    pass("cartesian, not compact; witness C4 x 1; factor images overlap")
}

fn check_not_superbasic_grid(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut cells = 0;
    for gname in ["C2", "C3", "C4", "C2xC2", "S3"] {
        let g = ctx.group(gname)?;
        let clf = Classifier::new(&g, caps)?;
        for sname in ["C2", "C3"] {
            let s = ctx.group(sname)?;
            let (_, eta, _) = FiniteGroup::direct_product(&g, &s, "GxS", caps)?;
            let c = clf.classify(&eta)?;
            if c.superbasic {
                bail!("{gname} x {sname} projection is superbasic");
            }
            cells += 1;
        }
    }
    pass(format!("{cells} grid cells: coordinate projection never superbasic"))
}

fn check_not_icover_grid(ctx: &CheckCtx) -> Result<CheckOutcome> {
    let caps = &ctx.caps;
    let mut cells = 0;
    for gname in ["C2", "C3", "C4", "C2xC2", "S3"] {
        let g = ctx.group(gname)?;
        let clf = Classifier::new(&g, caps)?;
        for sname in ["C2", "C3"] {
            let s = ctx.group(sname)?;
            let (_, eta, _) = FiniteGroup::direct_product(&g, &s, "GxS", caps)?;
            let c = clf.classify(&eta)?;
            if c.i_cover {
                bail!("{gname} x {sname} projection is an I-cover");
            }
            cells += 1;
        }
    }
    pass(format!("{cells} grid cells: coordinate projection never an I-cover"))
}

pub fn all_checks() -> Vec<Check> {
    let mut checks = vec![
        Check { id: "basic-iff-icover", anchor: "cor:finite-quotients-of-sec-k", run: check_basic_iff_icover },
        Check { id: "basic-implies-icover", anchor: "def:basic-cover", run: check_basic_implies_icover },
        Check { id: "basic-subspace", anchor: "prop:basic-subspace", run: check_basic_subspace },
        Check { id: "cartesian-conditions", anchor: "cartesian-conditions", run: check_cartesian_conditions },
        Check { id: "compact-fprod-in-universe", anchor: "lemma:compact-is-quotient", run: check_compact_fprod_in_universe },
        Check { id: "compactness-definition", anchor: "compactness-definition", run: check_compactness_definition },
        Check { id: "compactness-vs-domination", anchor: "prop:indecomposable-cartesian-square", run: check_compactness_vs_domination },
        Check { id: "compare-vs-search", anchor: "thm:compare", run: check_compare_vs_search },
        Check { id: "complete-characterization", anchor: "thm:complete-characterization", run: check_complete_characterization },
        Check { id: "compose-basic", anchor: "lemma:compose-basic", run: check_compose_basic },
        Check { id: "decomposition-fiber-product", anchor: "lemma:fiber-product-is-fundamental", run: check_decomposition_fiber_product },
        Check { id: "direct-compact-counterexample", anchor: "remark:direct-compact-counterexample", run: check_direct_compact_counterexample },
        Check { id: "direct-compact-structure", anchor: "lemma:direct-compact", run: check_direct_compact_structure },
        Check { id: "embedding-property-witness", anchor: "def:smallest-embedding-cover", run: check_embedding_property_witness },
        Check { id: "endomorphism-field", anchor: "remark:about-abelian", run: check_endomorphism_field },
        Check { id: "ep-direct-product-triple", anchor: "lemma:ep-for-direct-product", run: check_ep_direct_product },
        Check { id: "ep-iff-no-superbasic", anchor: "lemma:embedding-covers-have-no-basic-covers", run: check_ep_iff_no_superbasic },
        Check { id: "ev-trivialities", anchor: "remark:ev-trivialities", run: check_ev_trivialities },
        Check { id: "expand-surjectivity", anchor: "lemma:expand", run: check_expand },
        Check { id: "fec-unique", anchor: "lemma:fec-is-unique", run: check_fec_unique },
        Check { id: "fiber-product-tuples", anchor: "eq:concrete-fiber-product", run: check_fiber_product_tuples },
        Check { id: "fprod-of-basics", anchor: "prop:fprod-of-basics-is-basic", run: check_fprod_of_basics },
        Check { id: "fundament-is-fundamental", anchor: "def:fundament", run: check_fundament_is_fundamental },
        Check { id: "fundamental-icover-basic", anchor: "lemma:i-dominates-basic", run: check_fundamental_icover_basic },
        Check { id: "general-builder", anchor: "lemma:general-builder", run: check_general_builder },
        Check { id: "going-down", anchor: "prop:going-down-finite", run: check_going_down },
        Check { id: "h2-dimensions", anchor: "remark:about-abelian", run: check_h2_dimensions },
        Check { id: "icover-criterion", anchor: "lemma:i-cover-criterion", run: check_icover_criterion },
        Check { id: "indecomposable-definition", anchor: "indecomposable-definition", run: check_indecomposable_definition },
        Check { id: "indecomposable-icover-basic", anchor: "prop:i-is-basic", run: check_indecomposable_icover_basic },
        Check { id: "indecomposable-quotients-criterion", anchor: "prop:indecomposable-quotients-of-fiber-product", run: check_indecomposable_quotients_criterion },
        Check { id: "invariants-uniqueness", anchor: "thm:fundamental-mult-supp", run: check_invariants_uniqueness },
        Check { id: "nonsplit-is-basic", anchor: "remark:nonsplit-is-basic", run: check_nonsplit_is_basic },
        Check { id: "not-icover-grid", anchor: "prop:not-i-cover", run: check_not_icover_grid },
        Check { id: "not-superbasic-grid", anchor: "lemma:not-superbasic", run: check_not_superbasic_grid },
        Check { id: "power-domination-table", anchor: "cor:dominates-multiple-of-one", run: check_power_domination_table },
        Check { id: "relation-dimension", anchor: "notation:lambda-relation-dimension", run: check_relation_dimension },
        Check { id: "s3-example-icover", anchor: "example:i-covers-s3", run: check_s3_example },
        Check { id: "sec-chain-superbasic", anchor: "construction:sec-finite", run: check_sec_chain_superbasic },
        Check { id: "sec-uniqueness-seeds", anchor: "thm:uniqueness", run: check_sec_uniqueness_seeds },
        Check { id: "square-trivialities", anchor: "remark:square-trivialities", run: check_square_trivialities },
    ];
    checks.sort_by_key(|c| c.id);
    checks
}

/// Runs the suite. `filter` keeps checks whose id contains the substring;
/// `budget` caps the number of executed checks (0 skips everything).
pub fn run_checks(filter: Option<&str>, budget: Option<u64>, caps: &Caps) -> Result<VerificationReport> {
    let ctx = CheckCtx::new(caps)?;
    let mut report = VerificationReport::default();
    let mut executed: u64 = 0;
    for check in all_checks() {
        if let Some(f) = filter {
            if !check.id.contains(f) {
                continue;
            }
        }
        if let Some(b) = budget {
            if executed >= b {
                report.push(CheckRecord {
                    id: check.id.to_string(),
                    anchor: check.anchor.to_string(),
                    status: CheckStatus::Skipped("budget exhausted".into()),
                    runtime_ms: 0,
                    witness: String::new(),
                });
                continue;
            }
        }
        executed += 1;
        let start = Instant::now();
        let outcome = (check.run)(&ctx);
        let runtime_ms = start.elapsed().as_millis() as u64;
        let record = match outcome {
            Ok(o) => CheckRecord {
                id: check.id.to_string(),
                anchor: check.anchor.to_string(),
                status: o.status,
                runtime_ms,
                witness: o.witness,
            },
            Err(e) => CheckRecord {
                id: check.id.to_string(),
                anchor: check.anchor.to_string(),
                status: CheckStatus::Fail(e.to_string()),
                runtime_ms,
                witness: String::new(),
            },
        };
        report.push(record);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_required_anchor_is_covered() {
        let checks = all_checks();
        let provided: BTreeSet<&str> = checks.iter().map(|c| c.anchor).collect();
        for anchor in REQUIRED_ANCHORS {
            assert!(provided.contains(anchor), "anchor {anchor} has no check");
        }
        // And no check invents an anchor outside the manifest.
        let required: BTreeSet<&str> = REQUIRED_ANCHORS.iter().copied().collect();
        for c in &checks {
            assert!(required.contains(c.anchor), "check {} uses unknown anchor {}", c.id, c.anchor);
        }
        assert!(checks.len() >= 25);
    }

    #[test]
    fn check_ids_unique() {
        let checks = all_checks();
        let ids: BTreeSet<&str> = checks.iter().map(|c| c.id).collect();
        assert_eq!(ids.len(), checks.len());
    }
}
