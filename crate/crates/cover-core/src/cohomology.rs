//! Second cohomology of a finite group with coefficients in a simple module,
//! as a vector space over the endomorphism field, plus the translation
//! between extensions and cocycle classes.
//!
//! Cocycle tables are stored normalized (`c(1,·) = c(·,1) = 0`) as flat
//! arrays of length `|G|^2 * d`, row-major with the first argument major.

use std::collections::HashMap;

use crate::caps::Caps;
use crate::error::{CoverError, Result};
use crate::fp::{self, Echelon, Matrix};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;
use crate::module::{end_field, module_from_kernel, module_isomorphism, EndField, GModule};

/// A normalized 2-cocycle representative; classes compare modulo
/// coboundaries.
#[derive(Clone)]
pub struct CocycleClass {
    pub module: GModule,
    /// Flat table: entry `(g * n + h) * d + k`.
    pub table: Vec<u32>,
}

impl std::fmt::Debug for CocycleClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CocycleClass(over {:?})", self.module)
    }
}

impl CocycleClass {
    pub fn zero(module: &GModule) -> CocycleClass {
        let n = module.group().order();
        CocycleClass {
            module: module.clone(),
            table: vec![0u32; n * n * module.dim()],
        }
    }

    pub fn entry(&self, g: usize, h: usize) -> &[u32] {
        let n = self.module.group().order();
        let d = self.module.dim();
        &self.table[(g * n + h) * d..(g * n + h) * d + d]
    }

    /// Checks the 2-cocycle identity on all triples.
    pub fn verify(&self) -> Result<()> {
        let gq = self.module.group();
        let n = gq.order();
        let p = self.module.prime();
        for g1 in 0..n {
            for g2 in 0..n {
                for g3 in 0..n {
                    let acted = self.module.act(g1, self.entry(g2, g3));
                    let lhs = fp::vec_add(&acted, self.entry(g1, gq.mul(g2, g3)), p);
                    let rhs = fp::vec_add(self.entry(g1, g2), self.entry(gq.mul(g1, g2), g3), p);
                    if lhs != rhs {
                        return Err(CoverError::ModuleMismatch(format!(
                            "cocycle identity fails at ({g1},{g2},{g3})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// H^2(G, C) presented by normalized cocycles modulo coboundaries, with the
/// scalar action of `F_C = End_G(C)`.
pub struct H2Space {
    pub module: GModule,
    pub field: EndField,
    /// F_p-dimension of H^2.
    pub dim_fp: usize,
    /// F_C-dimension of H^2.
    pub dim_fc: usize,
    /// Representatives of an F_p-basis of H^2, as normalized tables.
    pub basis_tables: Vec<Vec<u32>>,
    /// Echelon of the coboundary space, in variable coordinates.
    cob: Echelon,
    /// Variable-coordinate vectors of the basis representatives.
    basis_vars: Vec<Vec<u32>>,
    /// Action of each field *basis* element on H^2 coordinates.
    field_basis_action: Vec<Matrix>,
    n: usize,
    d: usize,
}

impl H2Space {
    fn nvars(&self) -> usize {
        (self.n - 1) * (self.n - 1) * self.d
    }

    fn var_index(&self, g: usize, h: usize, k: usize) -> usize {
        ((g - 1) * (self.n - 1) + (h - 1)) * self.d + k
    }

    fn table_to_vars(&self, table: &[u32]) -> Vec<u32> {
        let mut v = vec![0u32; self.nvars()];
        for g in 1..self.n {
            for h in 1..self.n {
                for k in 0..self.d {
                    v[self.var_index(g, h, k)] = table[(g * self.n + h) * self.d + k];
                }
            }
        }
        v
    }

    fn vars_to_table(&self, vars: &[u32]) -> Vec<u32> {
        let mut t = vec![0u32; self.n * self.n * self.d];
        for g in 1..self.n {
            for h in 1..self.n {
                for k in 0..self.d {
                    t[(g * self.n + h) * self.d + k] = vars[self.var_index(g, h, k)];
                }
            }
        }
        t
    }

    /// True when the (normalized) cocycle is a coboundary.
    pub fn is_coboundary(&self, c: &CocycleClass) -> bool {
        self.cob.contains(&self.table_to_vars(&c.table))
    }

    /// True when two classes are equal modulo coboundaries.
    pub fn classes_equal(&self, a: &CocycleClass, b: &CocycleClass) -> bool {
        let p = self.module.prime();
        let diff: Vec<u32> = a.table.iter().zip(&b.table).map(|(&x, &y)| fp::sub(x, y, p)).collect();
        self.cob.contains(&self.table_to_vars(&diff))
    }

    /// Coordinates of a class in the chosen H^2 basis.
    pub fn coords_of(&self, c: &CocycleClass) -> Result<Vec<u32>> {
        let p = self.module.prime();
        let mut rows: Vec<Vec<u32>> = self.basis_vars.clone();
        rows.extend(self.cob.rows.iter().cloned());
        let target = self.table_to_vars(&c.table);
        let coeffs = fp::solve_in_span(&rows, &target, p)
            .ok_or_else(|| CoverError::Internal("cocycle not in Z^2 span".into()))?;
        Ok(coeffs[..self.basis_vars.len()].to_vec())
    }

    /// Class with the given H^2 coordinates (a canonical representative).
    pub fn class_from_coords(&self, coords: &[u32]) -> CocycleClass {
        let p = self.module.prime();
        let mut vars = vec![0u32; self.nvars()];
        for (c, b) in coords.iter().zip(&self.basis_vars) {
            if *c != 0 {
                for (slot, &x) in b.iter().enumerate() {
                    vars[slot] = fp::add(vars[slot], fp::mul(*c, x, p), p);
                }
            }
        }
        CocycleClass { module: self.module.clone(), table: self.vars_to_table(&vars) }
    }

    /// Entrywise action of a field element (by index) on a class.
    pub fn scalar_class(&self, field_elem: usize, c: &CocycleClass) -> CocycleClass {
        let n = self.n;
        let d = self.d;
        let mut table = vec![0u32; n * n * d];
        for cell in 0..n * n {
            let v = &c.table[cell * d..cell * d + d];
            let w = self.field.scalar_apply(field_elem, v);
            table[cell * d..cell * d + d].copy_from_slice(&w);
        }
        CocycleClass { module: self.module.clone(), table }
    }

    /// F_p-span of the F_C-orbit of the given coordinate vectors, as an
    /// echelon in H^2 coordinates.
    pub fn fc_saturate(&self, coords: &[Vec<u32>]) -> Echelon {
        let p = self.module.prime();
        let mut ech = Echelon::new(p, self.dim_fp);
        for v in coords {
            for m in &self.field_basis_action {
                ech.insert(&fp::mat_vec(m, v, p));
            }
        }
        ech
    }
}

/// Computes H^2(G, C) by solving the normalized cocycle conditions and
/// quotienting by coboundaries.
pub fn h2_space(g: &FiniteGroup, m: &GModule, caps: &Caps) -> Result<H2Space> {
    if m.group() != g {
        return Err(CoverError::ModuleMismatch("module is over a different group".into()));
    }
    let n = g.order();
    let d = m.dim();
    let p = m.prime();
    let work = n * n * d;
    if (work as u64) > caps.search_budget {
        return Err(CoverError::SearchBudgetExceeded);
    }
    let field = end_field(m)?;
    let nvars = (n.max(1) - 1) * (n.max(1) - 1) * d;
    let var_index = |gq: usize, h: usize, k: usize| ((gq - 1) * (n - 1) + (h - 1)) * d + k;
    // Cocycle identity rows for triples with no identity argument (a
    // normalized table satisfies the rest automatically):
    //   A(g1) c(g2,g3) - c(g1 g2, g3) + c(g1, g2 g3) - c(g1,g2) = 0.
    let mut zech = Echelon::new(p, nvars);
    let mut row = vec![0u32; nvars];
    let id_mat = fp::mat_identity(d);
    let mut terms: Vec<(usize, usize, Matrix, bool)> = Vec::new();
    for g1 in 1..n {
        for g2 in 1..n {
            for g3 in 1..n {
                terms.clear();
                terms.push((g2, g3, m.act_matrix(g1).clone(), true));
                terms.push((g.mul(g1, g2), g3, id_mat.clone(), false));
                terms.push((g1, g.mul(g2, g3), id_mat.clone(), true));
                terms.push((g1, g2, id_mat.clone(), false));
                // One equation row per output coordinate i.
                for i in 0..d {
                    for x in row.iter_mut() {
                        *x = 0;
                    }
                    for (a, b, mat, sign) in &terms {
                        if *a == 0 || *b == 0 {
                            continue; // normalized cell, identically zero
                        }
                        for j in 0..d {
                            if mat[i][j] == 0 {
                                continue;
                            }
                            let slot = var_index(*a, *b, j);
                            let delta = if *sign { mat[i][j] } else { fp::sub(0, mat[i][j], p) };
                            row[slot] = fp::add(row[slot], delta, p);
                        }
                    }
                    zech.insert(&row);
                }
            }
        }
    }
    let zbasis = fp::nullspace(&zech.rows.clone(), nvars, p);
    // Coboundary space: delta u (g,h) = A(g) u(h) - u(gh) + u(g), u(1) = 0.
    let ucount = (n - 1) * d;
    let uvar = |x: usize, k: usize| (x - 1) * d + k;
    let mut cob = Echelon::new(p, nvars);
    for uidx in 0..ucount {
        let mut u = vec![0u32; ucount];
        u[uidx] = 1;
        let mut table_vars = vec![0u32; nvars];
        for gq in 1..n {
            for h in 1..n {
                // value = A(g) u(h) - u(gh) + u(g), each term d-dimensional.
                let uh: Vec<u32> = (0..d).map(|k| u[uvar(h, k)]).collect();
                let mut val = m.act(gq, &uh);
                let gh = g.mul(gq, h);
                if gh != 0 {
                    for k in 0..d {
                        val[k] = fp::sub(val[k], u[uvar(gh, k)], p);
                    }
                }
                for k in 0..d {
                    val[k] = fp::add(val[k], u[uvar(gq, k)], p);
                }
                for k in 0..d {
                    table_vars[var_index(gq, h, k)] = val[k];
                }
            }
        }
        cob.insert(&table_vars);
    }
    // H^2 basis: cocycle vectors that enlarge the coboundary echelon. Any
    // representative of the new coset works, so keep the vector itself.
    let mut combined = cob.clone();
    let mut basis_vars: Vec<Vec<u32>> = Vec::new();
    for z in &zbasis {
        if combined.insert(z) {
            basis_vars.push(z.clone());
        }
    }
    let dim_fp = basis_vars.len();
    let mut space = H2Space {
        module: m.clone(),
        field,
        dim_fp,
        dim_fc: 0,
        basis_tables: Vec::new(),
        cob,
        basis_vars,
        field_basis_action: Vec::new(),
        n,
        d,
    };
    space.basis_tables = space.basis_vars.iter().map(|v| space.vars_to_table(v)).collect();
    // Matrix of each field basis element acting on H^2 coordinates.
    let mut actions = Vec::new();
    for bidx in 0..space.field.ext_degree() {
        // Field basis element as an elements-index: find it among elements.
        let target = &space.field.basis[bidx];
        let elem_idx = space
            .field
            .elements
            .iter()
            .position(|e| e == target)
            .ok_or_else(|| CoverError::Internal("field basis not among elements".into()))?;
        let mut cols: Vec<Vec<u32>> = Vec::new();
        for table in &space.basis_tables {
            let class = CocycleClass { module: m.clone(), table: table.clone() };
            let acted = space.scalar_class(elem_idx, &class);
            cols.push(space.coords_of(&acted)?);
        }
        let mat: Matrix = (0..dim_fp)
            .map(|r| (0..dim_fp).map(|c| cols[c][r]).collect())
            .collect();
        actions.push(mat);
    }
    space.field_basis_action = actions;
    space.dim_fc = if space.field.ext_degree() == 0 {
        0
    } else {
        debug_assert_eq!(dim_fp % space.field.ext_degree(), 0);
        dim_fp / space.field.ext_degree()
    };
    Ok(space)
}

/// Extracts the cocycle class of an extension with simple abelian kernel,
/// expressed over `target` via a searched module identification.
///
/// The section takes the least preimage of each base element, so `s(1) = 1`
/// and the table is normalized. The class is independent of the section
/// choice up to coboundaries.
pub fn extension_class(eta: &GroupHom, target: &GModule, caps: &Caps) -> Result<CocycleClass> {
    let _ = caps;
    let km = module_from_kernel(eta)?;
    let iso = module_isomorphism(&km.module, target)
        .ok_or_else(|| CoverError::ModuleMismatch("kernel module does not match target".into()))?;
    class_with_section(eta, &km, Some(&iso), None)
}

/// Class of an extension over its own kernel module (no re-identification).
pub fn extension_class_raw(eta: &GroupHom) -> Result<(CocycleClass, crate::module::KernelModule)> {
    let km = module_from_kernel(eta)?;
    let class = class_with_section(eta, &km, None, None)?;
    Ok((class, km))
}

/// Computes the factor set of a chosen set-theoretic section. `section[g]`
/// overrides the default least-preimage choice when provided.
pub fn class_with_section(
    eta: &GroupHom,
    km: &crate::module::KernelModule,
    identification: Option<&Matrix>,
    section: Option<&[usize]>,
) -> Result<CocycleClass> {
    let h = eta.src();
    let g = eta.dst();
    let n = g.order();
    let p = km.module.prime();
    let d = km.module.dim();
    let mut sec = vec![usize::MAX; n];
    if let Some(s) = section {
        sec.copy_from_slice(s);
    } else {
        for x in 0..h.order() {
            let im = eta.apply(x);
            if sec[im] == usize::MAX {
                sec[im] = x;
            }
        }
    }
    if sec[0] != 0 {
        return Err(CoverError::ModuleMismatch("section must send identity to identity".into()));
    }
    let mut table = vec![0u32; n * n * d];
    for a in 0..n {
        for b in 0..n {
            let prod = h.mul(sec[a], sec[b]);
            let back = h.mul(prod, h.inv(sec[g.mul(a, b)]));
            let coords = km
                .coords
                .get(&back)
                .ok_or_else(|| CoverError::Internal("factor set left the kernel".into()))?;
            let v = match identification {
                Some(t) => fp::mat_vec(t, coords, p),
                None => coords.clone(),
            };
            table[(a * n + b) * d..(a * n + b) * d + d].copy_from_slice(&v);
        }
    }
    let class = CocycleClass { module: target_module(km, identification), table };
    class.verify()?;
    Ok(class)
}

fn target_module(km: &crate::module::KernelModule, ident: Option<&Matrix>) -> GModule {
    // With an identification the caller supplies the target module; the
    // table is already transported, so the kernel module's group data is
    // compatible. The caller rewraps; keep the kernel module by default.
    let _ = ident;
    km.module.clone()
}

/// Builds the extension group of a cocycle class: pairs `(v, g)` with the
/// twisted product, and the projection epimorphism with kernel the carrier.
pub fn class_to_extension(x: &CocycleClass, caps: &Caps) -> Result<GroupHom> {
    x.verify()?;
    let g = x.module.group();
    let n = g.order();
    let p = x.module.prime();
    let d = x.module.dim();
    let carrier = x.module.carrier_order();
    let order = carrier * n;
    if order > caps.max_order {
        return Err(CoverError::OrderCapExceeded { needed: order, cap: caps.max_order });
    }
    let vectors = x.module.vectors();
    let vec_index: HashMap<&Vec<u32>, usize> =
        vectors.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let idx = |v: &Vec<u32>, gq: usize| -> usize { vec_index[v] * n + gq };
    let mut table = vec![vec![0usize; order]; order];
    for (vi, v1) in vectors.iter().enumerate() {
        for g1 in 0..n {
            let i = vi * n + g1;
            for (wi, v2) in vectors.iter().enumerate() {
                for g2 in 0..n {
                    let j = wi * n + g2;
                    let mut v = fp::vec_add(v1, &x.module.act(g1, v2), p);
                    v = fp::vec_add(&v, x.entry(g1, g2), p);
                    table[i][j] = idx(&v, g.mul(g1, g2));
                }
            }
        }
    }
    let name = format!("ext({}, F{}^{})", g.name(), p, d);
    let ext = FiniteGroup::from_table(&table, &name)?;
    // (0, 1) has index 0, so no relabeling occurred and the projection is
    // index mod n.
    let images: Vec<usize> = (0..order).map(|i| i % n).collect();
    GroupHom::new(ext, g.clone(), images)
}

/// Span basis and relation dimension of a family of classes over one module.
pub struct SpanRelations {
    /// Indices into the family forming an F_C-basis of the span.
    pub basis_indices: Vec<usize>,
    /// F_C-dimension of the span.
    pub span_dim: usize,
    /// Dimension of the kernel of the evaluation map F_C^I -> H^2.
    pub relation_dim: usize,
    /// F_p echelon of the saturated span, in H^2 coordinates.
    pub span_echelon: Echelon,
    /// Coordinates of each family member.
    pub coords: Vec<Vec<u32>>,
}

pub fn span_and_relations(family: &[CocycleClass], h2: &H2Space) -> Result<SpanRelations> {
    let mut coords = Vec::with_capacity(family.len());
    for c in family {
        if c.module.group() != h2.module.group()
            || c.module.prime() != h2.module.prime()
            || c.module.dim() != h2.module.dim()
        {
            return Err(CoverError::ModuleMismatch("class over a different module".into()));
        }
        coords.push(h2.coords_of(c)?);
    }
    let e = h2.field.ext_degree().max(1);
    let mut ech = Echelon::new(h2.module.prime(), h2.dim_fp.max(1));
    let mut basis_indices = Vec::new();
    for i in 0..coords.len() {
        let sat = h2.fc_saturate(&coords[..=i]);
        if sat.rank() > ech.rank() {
            basis_indices.push(i);
        }
        ech = sat;
    }
    let span_dim = ech.rank() / e;
    let relation_dim = family.len() - span_dim;
    Ok(SpanRelations { basis_indices, span_dim, relation_dim, span_echelon: ech, coords })
}

/// Splitting search: a homomorphic section of `eta` exists iff the extension
/// splits, i.e. iff its class is zero.
pub fn splits(eta: &GroupHom, caps: &Caps) -> Result<bool> {
    let g = eta.dst();
    let fiber = |gen: usize| -> Vec<usize> {
        let want = gen;
        (0..eta.src().order()).filter(|&x| eta.apply(x) == want).collect()
    };
    let found = crate::hom::search_constrained(
        g,
        eta.src(),
        &fiber,
        crate::hom::Require::Any,
        true,
        caps,
    )?;
    Ok(!found.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;
    use crate::square::isomorphic_over_base;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn h2_c2_trivial_f2_is_one_dimensional() {
        let c2 = groups::cyclic(2);
        let m = GModule::trivial(&c2, 2);
        let h2 = h2_space(&c2, &m, &caps()).unwrap();
        assert_eq!(h2.dim_fp, 1);
        assert_eq!(h2.dim_fc, 1);
    }

    #[test]
    fn h2_c3_trivial_f3_is_one_dimensional() {
        let c3 = groups::cyclic(3);
        let m = GModule::trivial(&c3, 3);
        let h2 = h2_space(&c3, &m, &caps()).unwrap();
        assert_eq!(h2.dim_fp, 1);
    }

    #[test]
    fn h2_c2_trivial_f3_vanishes() {
        let c2 = groups::cyclic(2);
        let m = GModule::trivial(&c2, 3);
        let h2 = h2_space(&c2, &m, &caps()).unwrap();
        assert_eq!(h2.dim_fp, 0);
    }

    #[test]
    fn klein_cover_class_is_zero() {
        let capsv = caps();
        let v = groups::klein_four(&capsv).unwrap();
        let c2 = groups::cyclic(2);
        let pr = crate::hom::enumerate_homs(&v, &c2, true, &capsv).unwrap().remove(0);
        let (class, _) = extension_class_raw(&pr).unwrap();
        let h2 = h2_space(&c2, &class.module, &capsv).unwrap();
        assert!(h2.is_coboundary(&class));
        assert!(splits(&pr, &capsv).unwrap());
    }

    #[test]
    fn c4_cover_class_is_nonzero() {
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let eta = GroupHom::new(c4, c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let (class, _) = extension_class_raw(&eta).unwrap();
        let h2 = h2_space(&c2, &class.module, &caps()).unwrap();
        assert!(!h2.is_coboundary(&class));
        assert!(!splits(&eta, &caps()).unwrap());
    }

    #[test]
    fn s3_sign_class_is_zero() {
        let capsv = caps();
        let s3 = groups::symmetric(3, &capsv).unwrap();
        let c2 = groups::cyclic(2);
        let images: Vec<usize> = (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        let sgn = GroupHom::new(s3, c2.clone(), images).unwrap();
        let (class, _) = extension_class_raw(&sgn).unwrap();
        let h2 = h2_space(&c2, &class.module, &capsv).unwrap();
        assert!(h2.is_coboundary(&class));
        assert!(splits(&sgn, &capsv).unwrap());
    }

    #[test]
    fn section_independence() {
        // Two different sections of the C4 cover give the same class.
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let eta = GroupHom::new(c4.clone(), c2.clone(), vec![0, 1, 0, 1]).unwrap();
        let km = module_from_kernel(&eta).unwrap();
        let class1 = class_with_section(&eta, &km, None, Some(&[0, 1])).unwrap();
        let class2 = class_with_section(&eta, &km, None, Some(&[0, 3])).unwrap();
        let h2 = h2_space(&c2, &km.module, &caps()).unwrap();
        assert!(h2.classes_equal(&class1, &class2));
    }

    #[test]
    fn zero_class_gives_split_extension() {
        let c2 = groups::cyclic(2);
        let m = GModule::trivial(&c2, 2);
        let zero = CocycleClass::zero(&m);
        let ext = class_to_extension(&zero, &caps()).unwrap();
        assert_eq!(ext.src().order(), 4);
        assert!(splits(&ext, &caps()).unwrap());
    }

    #[test]
    fn nonzero_class_of_c2_gives_c4_cover() {
        let c2 = groups::cyclic(2);
        let m = GModule::trivial(&c2, 2);
        let h2 = h2_space(&c2, &m, &caps()).unwrap();
        let x = h2.class_from_coords(&[1]);
        let ext = class_to_extension(&x, &caps()).unwrap();
        assert_eq!(ext.src().order(), 4);
        let c4 = groups::cyclic(4);
        let canonical = GroupHom::new(c4, c2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(isomorphic_over_base(&ext, &canonical, &caps()).unwrap().is_some());
    }

    #[test]
    fn nonzero_class_of_c3_gives_c9_cover() {
        let c3 = groups::cyclic(3);
        let m = GModule::trivial(&c3, 3);
        let h2 = h2_space(&c3, &m, &caps()).unwrap();
        let x = h2.class_from_coords(&[1]);
        let ext = class_to_extension(&x, &caps()).unwrap();
        assert_eq!(ext.src().order(), 9);
        // C9, not C3 x C3: some element of order 9.
        assert!(ext.src().order_profile().contains(&9));
    }

    #[test]
    fn roundtrip_class_extension_class() {
        let c2 = groups::cyclic(2);
        let m = GModule::trivial(&c2, 2);
        let h2 = h2_space(&c2, &m, &caps()).unwrap();
        let x = h2.class_from_coords(&[1]);
        let ext = class_to_extension(&x, &caps()).unwrap();
        let back = extension_class(&ext, &m, &caps()).unwrap();
        // Classes agree up to a nonzero scalar of F_C = F_2, i.e. exactly.
        assert!(h2.classes_equal(&x, &back));
    }

    #[test]
    fn span_and_relations_small_cases() {
        let c2 = groups::cyclic(2);
        let m = GModule::trivial(&c2, 2);
        let h2 = h2_space(&c2, &m, &caps()).unwrap();
        let x = h2.class_from_coords(&[1]);
        let zero = CocycleClass::zero(&m);
        let double = span_and_relations(&[x.clone(), x.clone()], &h2).unwrap();
        assert_eq!(double.span_dim, 1);
        assert_eq!(double.relation_dim, 1);
        let single = span_and_relations(&[x], &h2).unwrap();
        assert_eq!(single.relation_dim, 0);
        let only_zero = span_and_relations(&[zero], &h2).unwrap();
        assert_eq!(only_zero.span_dim, 0);
        assert_eq!(only_zero.relation_dim, 1);
    }
}
