//! Simple modules over a finite group, presented as F_p vector spaces with a
//! matrix action, and their endomorphism fields.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{CoverError, Result};
use crate::fp::{self, Matrix};
use crate::group::FiniteGroup;
use crate::hom::GroupHom;

struct GModuleData {
    group: FiniteGroup,
    prime: u32,
    dim: usize,
    /// One invertible d x d matrix over F_p per group element; matrices act
    /// on column vectors.
    action: Vec<Matrix>,
    simple: bool,
}

/// An elementary-abelian group with a linear action of a fixed group.
#[derive(Clone)]
pub struct GModule(Arc<GModuleData>);

impl std::fmt::Debug for GModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GModule(F_{}^{} over {})",
            self.prime(),
            self.dim(),
            self.group().name()
        )
    }
}

impl GModule {
    /// Validates that `action` is a homomorphism into invertible matrices.
    pub fn new(group: &FiniteGroup, prime: u32, dim: usize, action: Vec<Matrix>) -> Result<GModule> {
        if action.len() != group.order() {
            return Err(CoverError::ModuleMismatch(format!(
                "action table has {} entries, group has order {}",
                action.len(),
                group.order()
            )));
        }
        for m in &action {
            if m.len() != dim || m.iter().any(|r| r.len() != dim) {
                return Err(CoverError::ModuleMismatch("action matrix has wrong shape".into()));
            }
            if fp::mat_inv(m, prime).is_none() {
                return Err(CoverError::ModuleMismatch("action matrix is singular".into()));
            }
        }
        if action[0] != fp::mat_identity(dim) {
            return Err(CoverError::ModuleMismatch("identity must act trivially".into()));
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                let lhs = &action[group.mul(a, b)];
                let rhs = fp::mat_mul(&action[a], &action[b], prime);
                if *lhs != rhs {
                    return Err(CoverError::ModuleMismatch(format!(
                        "action is not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        let simple = is_simple_action(prime, dim, &action);
        Ok(GModule(Arc::new(GModuleData {
            group: group.clone(),
            prime,
            dim,
            action,
            simple,
        })))
    }

    /// The trivial one-dimensional module over F_p.
    pub fn trivial(group: &FiniteGroup, prime: u32) -> GModule {
        GModule::new(group, prime, 1, vec![vec![vec![1]]; group.order()])
            .expect("trivial action is a module")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.0.group
    }

    pub fn prime(&self) -> u32 {
        self.0.prime
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_simple(&self) -> bool {
        self.0.simple
    }

    pub fn act_matrix(&self, g: usize) -> &Matrix {
        &self.0.action[g]
    }

    pub fn act(&self, g: usize, v: &[u32]) -> Vec<u32> {
        fp::mat_vec(&self.0.action[g], v, self.0.prime)
    }

    /// Number of carrier elements, `p^d`.
    pub fn carrier_order(&self) -> usize {
        (self.0.prime as usize).pow(self.0.dim as u32)
    }

    /// All carrier vectors, base-p digit order (0 first).
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let p = self.0.prime;
        let d = self.0.dim;
        let total = self.carrier_order();
        let mut out = Vec::with_capacity(total);
        for mut idx in 0..total {
            let mut v = vec![0u32; d];
            for slot in (0..d).rev() {
                v[slot] = (idx % p as usize) as u32;
                idx /= p as usize;
            }
            out.push(v);
        }
        out
    }
}

/// True when the action has no proper nonzero invariant subspace.
fn is_simple_action(p: u32, dim: usize, action: &[Matrix]) -> bool {
    if dim == 0 {
        return false;
    }
    // For every nonzero vector, the invariant subspace it generates must be
    // the whole space.
    let total = (p as usize).pow(dim as u32);
    for idx in 1..total {
        let mut v = vec![0u32; dim];
        let mut rest = idx;
        for slot in (0..dim).rev() {
            v[slot] = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let mut ech = fp::Echelon::new(p, dim);
        ech.insert(&v);
        let mut queue = vec![v];
        while let Some(w) = queue.pop() {
            for m in action {
                let u = fp::mat_vec(m, &w, p);
                if ech.insert(&u) {
                    queue.push(u);
                }
            }
        }
        if ech.rank() < dim {
            return false;
        }
    }
    true
}

/// A kernel identified with a module carrier: the dictionary between kernel
/// elements of a cover and coordinate vectors.
pub struct KernelModule {
    pub module: GModule,
    /// Kernel element index for each carrier vector (keyed by vector).
    pub elem_of: HashMap<Vec<u32>, usize>,
    /// Carrier vector for each kernel element.
    pub coords: HashMap<usize, Vec<u32>>,
}

/// Presents the kernel of `eta` as a module over the base group, acting by
/// conjugation through any preimage.
///
/// Requires the kernel to be elementary abelian; the action is well defined
/// because the kernel is abelian, so inner kernel conjugations are trivial.
pub fn module_from_kernel(eta: &GroupHom) -> Result<KernelModule> {
    let h = eta.src();
    let g = eta.dst();
    let ker = eta.kernel();
    if !ker.is_abelian() {
        return Err(CoverError::NotAbelianKernel);
    }
    if ker.order() == 1 {
        return Err(CoverError::NotElementaryAbelian);
    }
    // Exponent p: all non-identity elements share a prime order.
    let p = h.elem_order(ker.elements()[1] as usize);
    let mut is_prime = p >= 2;
    for q in 2..p {
        if p % q == 0 {
            is_prime = false;
        }
    }
    if !is_prime {
        return Err(CoverError::NotElementaryAbelian);
    }
    for &k in ker.elements().iter().skip(1) {
        if h.elem_order(k as usize) != p {
            return Err(CoverError::NotElementaryAbelian);
        }
    }
    let p = p as u32;
    // Greedy basis of the kernel as an F_p space.
    let mut basis: Vec<usize> = Vec::new();
    let mut span: HashMap<usize, Vec<u32>> = HashMap::new();
    span.insert(0, Vec::new());
    for &k in ker.elements().iter() {
        let k = k as usize;
        if span.contains_key(&k) {
            continue;
        }
        basis.push(k);
        // Extend the span with all multiples of the new basis vector.
        let mut next: HashMap<usize, Vec<u32>> = HashMap::new();
        for (&e, coords) in &span {
            let mut power = 0usize; // k^c
            for c in 0..p {
                let elem = h.mul(e, power);
                let mut v = coords.clone();
                v.push(c);
                next.insert(elem, v);
                power = h.mul(power, k);
            }
        }
        span = next;
    }
    let d = basis.len();
    debug_assert_eq!(span.len(), ker.order());
    let coords: HashMap<usize, Vec<u32>> = span
        .iter()
        .map(|(&e, v)| {
            let mut full = v.clone();
            while full.len() < d {
                full.push(0);
            }
            (e, full)
        })
        .collect();
    let elem_of: HashMap<Vec<u32>, usize> = coords.iter().map(|(&e, v)| (v.clone(), e)).collect();
    // Conjugation action through a fixed preimage per base element.
    let mut preimage = vec![usize::MAX; g.order()];
    for x in 0..h.order() {
        let im = eta.apply(x);
        if preimage[im] == usize::MAX {
            preimage[im] = x;
        }
    }
    let mut action: Vec<Matrix> = Vec::with_capacity(g.order());
    for gx in 0..g.order() {
        let t = preimage[gx];
        let mut cols: Vec<Vec<u32>> = Vec::with_capacity(d);
        for &b in &basis {
            let conj = h.conj(t, b);
            cols.push(coords[&conj].clone());
        }
        // Column-major assembly.
        let mat: Matrix = (0..d).map(|r| (0..d).map(|c| cols[c][r]).collect()).collect();
        action.push(mat);
    }
    let module = GModule::new(g, p, d, action)?;
    Ok(KernelModule { module, elem_of, coords })
}

/// The commutant of a module's action: for a simple module, a finite field.
pub struct EndField {
    pub p: u32,
    /// F_p-basis of the commutant algebra.
    pub basis: Vec<Matrix>,
    /// All field elements as matrices; index 0 is zero, index 1 is one.
    pub elements: Vec<Matrix>,
    pub add: Vec<Vec<u16>>,
    pub mul: Vec<Vec<u16>>,
}

impl EndField {
    /// Field size `p^e`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ext_degree(&self) -> usize {
        self.basis.len()
    }

    /// Applies field element `a` to a carrier vector.
    pub fn scalar_apply(&self, a: usize, v: &[u32]) -> Vec<u32> {
        fp::mat_vec(&self.elements[a], v, self.p)
    }
}

/// Computes `End_G(C)` of a simple module and verifies the field axioms
/// exhaustively.
pub fn end_field(m: &GModule) -> Result<EndField> {
    if !m.is_simple() {
        return Err(CoverError::NotSimple);
    }
    let p = m.prime();
    let d = m.dim();
    // Solve X A_g = A_g X for all g: linear system in the d^2 entries of X.
    let nvars = d * d;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in 0..m.group().order() {
        let a = m.act_matrix(g);
        // (X A - A X)[i][j] = sum_k X[i][k] A[k][j] - A[i][k] X[k][j] = 0.
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u32; nvars];
                for k in 0..d {
                    row[i * d + k] = fp::add(row[i * d + k], a[k][j], p);
                    row[k * d + j] = fp::sub(row[k * d + j], a[i][k], p);
                }
                rows.push(row);
            }
        }
    }
    let basis_vecs = fp::nullspace(&rows, nvars, p);
    let basis: Vec<Matrix> = basis_vecs
        .iter()
        .map(|v| (0..d).map(|i| (0..d).map(|j| v[i * d + j]).collect()).collect())
        .collect();
    let e = basis.len();
    let q = (p as usize).pow(e as u32);
    // Enumerate all elements; order combinations with the zero element first.
    let mut elements: Vec<Matrix> = Vec::with_capacity(q);
    let mut key_of: HashMap<Vec<u32>, usize> = HashMap::new();
    for idx in 0..q {
        let mut coeffs = vec![0u32; e];
        let mut rest = idx;
        for slot in (0..e).rev() {
            coeffs[slot] = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let mut mat = vec![vec![0u32; d]; d];
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                mat = fp::mat_add(&mat, &fp::mat_scale(b, *c, p), p);
            }
        }
        key_of.insert(flatten(&mat), elements.len());
        elements.push(mat);
    }
    // Put the identity matrix at index 1 for convenience.
    let one_idx = key_of[&flatten(&fp::mat_identity(d))];
    if one_idx != 1 && q > 1 {
        elements.swap(1, one_idx);
        key_of.insert(flatten(&elements[1]), 1);
        key_of.insert(flatten(&elements[one_idx]), one_idx);
    }
    // Structure tables; closure under product is part of the verification.
    let mut add = vec![vec![0u16; q]; q];
    let mut mul = vec![vec![0u16; q]; q];
    for i in 0..q {
        for j in 0..q {
            let s = fp::mat_add(&elements[i], &elements[j], p);
            let t = fp::mat_mul(&elements[i], &elements[j], p);
            let si = key_of
                .get(&flatten(&s))
                .ok_or_else(|| CoverError::Internal("commutant not closed under sum".into()))?;
            let ti = key_of
                .get(&flatten(&t))
                .ok_or_else(|| CoverError::Internal("commutant not closed under product".into()))?;
            add[i][j] = *si as u16;
            mul[i][j] = *ti as u16;
        }
    }
    // Field axioms: commutativity and invertibility of nonzero elements.
    for i in 0..q {
        for j in 0..q {
            if mul[i][j] != mul[j][i] {
                return Err(CoverError::Internal("commutant is not commutative".into()));
            }
        }
    }
    for i in 1..q {
        if !(1..q).any(|j| mul[i][j] == 1) {
            return Err(CoverError::Internal("nonzero commutant element not invertible".into()));
        }
    }
    Ok(EndField { p, basis, elements, add, mul })
}

fn flatten(m: &Matrix) -> Vec<u32> {
    m.iter().flatten().copied().collect()
}

/// Searches for a module isomorphism `m1 -> m2`: an invertible intertwiner
/// `T` with `T A1(g) = A2(g) T` for all `g`.
pub fn module_isomorphism(m1: &GModule, m2: &GModule) -> Option<Matrix> {
    if m1.group() != m2.group() || m1.prime() != m2.prime() || m1.dim() != m2.dim() {
        return None;
    }
    let p = m1.prime();
    let d = m1.dim();
    let nvars = d * d;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for g in 0..m1.group().order() {
        let a1 = m1.act_matrix(g);
        let a2 = m2.act_matrix(g);
        // (T A1 - A2 T)[i][j] = 0.
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u32; nvars];
                for k in 0..d {
                    row[i * d + k] = fp::add(row[i * d + k], a1[k][j], p);
                    row[k * d + j] = fp::sub(row[k * d + j], a2[i][k], p);
                }
                rows.push(row);
            }
        }
    }
    let basis = fp::nullspace(&rows, nvars, p);
    // Search the intertwiner space for an invertible element.
    let e = basis.len();
    let total = (p as usize).pow(e as u32);
    for idx in 1..total {
        let mut coeffs = vec![0u32; e];
        let mut rest = idx;
        for slot in (0..e).rev() {
            coeffs[slot] = (rest % p as usize) as u32;
            rest /= p as usize;
        }
        let mut mat = vec![vec![0u32; d]; d];
        for (c, b) in coeffs.iter().zip(&basis) {
            if *c != 0 {
                let bm: Matrix = (0..d).map(|i| (0..d).map(|j| b[i * d + j]).collect()).collect();
                mat = fp::mat_add(&mat, &fp::mat_scale(&bm, *c, p), p);
            }
        }
        if fp::mat_inv(&mat, p).is_some() {
            return Some(mat);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::groups;

    fn caps() -> Caps {
        Caps::default()
    }

    fn sign_hom(s3: &FiniteGroup, c2: &FiniteGroup) -> GroupHom {
        let images: Vec<usize> = (0..6).map(|x| if s3.elem_order(x) == 2 { 1 } else { 0 }).collect();
        GroupHom::new(s3.clone(), c2.clone(), images).unwrap()
    }

    #[test]
    fn sign_kernel_is_inversion_module() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let km = module_from_kernel(&sign_hom(&s3, &c2)).unwrap();
        assert_eq!(km.module.prime(), 3);
        assert_eq!(km.module.dim(), 1);
        // The nontrivial base element inverts: action matrix [2].
        assert_eq!(km.module.act_matrix(1), &vec![vec![2u32]]);
        assert!(km.module.is_simple());
    }

    #[test]
    fn klein_projection_kernel_is_trivial_module() {
        let caps = caps();
        let v = groups::klein_four(&caps).unwrap();
        let c2 = groups::cyclic(2);
        let pr = crate::hom::enumerate_homs(&v, &c2, true, &caps).unwrap().remove(0);
        let km = module_from_kernel(&pr).unwrap();
        assert_eq!(km.module.prime(), 2);
        assert_eq!(km.module.dim(), 1);
        assert_eq!(km.module.act_matrix(1), &vec![vec![1u32]]);
    }

    #[test]
    fn c4_kernel_is_trivial_f2_module() {
        let c4 = groups::cyclic(4);
        let c2 = groups::cyclic(2);
        let eta = GroupHom::new(c4, c2, vec![0, 1, 0, 1]).unwrap();
        let km = module_from_kernel(&eta).unwrap();
        assert_eq!(km.module.prime(), 2);
        assert_eq!(km.module.act_matrix(1), &vec![vec![1u32]]);
    }

    #[test]
    fn non_elementary_kernel_rejected() {
        let c8 = groups::cyclic(8);
        let c2 = groups::cyclic(2);
        let eta = GroupHom::new(c8, c2, (0..8).map(|x| x % 2).collect()).unwrap();
        assert!(matches!(
            module_from_kernel(&eta),
            Err(CoverError::NotElementaryAbelian)
        ));
    }

    #[test]
    fn nonabelian_kernel_rejected() {
        let caps = caps();
        let s3 = groups::symmetric(3, &caps).unwrap();
        let c2 = groups::cyclic(2);
        let (g, pr1, _) = FiniteGroup::direct_product(&s3, &c2, "S3xC2", &caps).unwrap();
        let _ = pr1;
        let pr2 = crate::hom::epis_per_kernel(&g, &c2, &caps)
            .unwrap()
            .into_iter()
            .find(|h| !h.kernel().is_abelian())
            .unwrap();
        assert!(matches!(module_from_kernel(&pr2), Err(CoverError::NotAbelianKernel)));
    }

    #[test]
    fn end_field_of_trivial_module_is_fp() {
        for p in [2u32, 3, 5] {
            let c2 = groups::cyclic(2);
            let m = GModule::trivial(&c2, p);
            let f = end_field(&m).unwrap();
            assert_eq!(f.order(), p as usize);
        }
    }

    #[test]
    fn end_field_of_inversion_module_is_f3() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let km = module_from_kernel(&sign_hom(&s3, &c2)).unwrap();
        let f = end_field(&km.module).unwrap();
        assert_eq!(f.order(), 3);
    }

    #[test]
    fn end_field_of_natural_s3_module_is_f2() {
        // S3 presented as GL(2,2) acting on F2^2.
        let caps = caps();
        let s3 = groups::symmetric(3, &caps).unwrap();
        // Map each permutation of {0,1,2} to its action on F2^2 = nonzero
        // vectors {01, 10, 11} labeled 1, 2, 3.
        let label = |v: (u32, u32)| -> usize {
            match v {
                (0, 1) => 0,
                (1, 0) => 1,
                (1, 1) => 2,
                _ => unreachable!(),
            }
        };
        let vecs = [(0u32, 1u32), (1, 0), (1, 1)];
        // Reconstruct each group element's permutation of the three points
        // from its action on the points 0,1,2 used by from_permutations.
        // The catalog S3 is a permutation group on {0,1,2}; identify point i
        // with vector vecs[i].
        let mut action: Vec<Matrix> = Vec::new();
        // Recover permutations: element x acts on points by the permutation
        // it was built from. We rebuild them via conjugation on a labeling
        // of the three transpositions; simpler: use the regular construction
        // below on generators and multiply.
        // from_permutations sorted elements lexicographically; recompute.
        let mut perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ];
        perms.sort();
        for perm in &perms {
            // Matrix sending vecs[i] to vecs[perm[i]].
            // Columns: image of basis e1 = (1,0) = vecs[1], e2 = (0,1) = vecs[0].
            let im_e1 = vecs[perm[label((1, 0))]];
            let im_e2 = vecs[perm[label((0, 1))]];
            action.push(vec![vec![im_e1.0, im_e2.0], vec![im_e1.1, im_e2.1]]);
        }
        let m = GModule::new(&s3, 2, 2, action).unwrap();
        assert!(m.is_simple());
        let f = end_field(&m).unwrap();
        assert_eq!(f.order(), 2);
    }

    #[test]
    fn end_field_rejects_non_simple() {
        let caps = caps();
        let v = groups::klein_four(&caps).unwrap();
        // Trivial 2-dimensional module over the Klein group is not simple.
        let m = GModule::new(&v, 2, 2, vec![fp::mat_identity(2); 4]).unwrap();
        assert!(!m.is_simple());
        assert!(matches!(end_field(&m), Err(CoverError::NotSimple)));
    }

    #[test]
    fn module_isomorphism_distinguishes_actions() {
        let c2 = groups::cyclic(2);
        let trivial = GModule::trivial(&c2, 3);
        let inversion = GModule::new(&c2, 3, 1, vec![vec![vec![1]], vec![vec![2]]]).unwrap();
        assert!(module_isomorphism(&trivial, &trivial).is_some());
        assert!(module_isomorphism(&trivial, &inversion).is_none());
    }
}
