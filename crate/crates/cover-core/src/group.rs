//! Finite groups as canonicalized Cayley tables.
//!
//! A [`FiniteGroup`] is an immutable Cayley table whose identity element is
//! always index 0. Group values are compared by reference identity: two
//! structurally equal tables are still *different* groups, and relating them
//! takes an explicit isomorphism. This keeps "same group" an intentional
//! statement rather than an accident of construction.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::caps::Caps;
use crate::error::{CoverError, Result};
use crate::hom::GroupHom;

pub(crate) struct GroupData {
    name: String,
    order: usize,
    /// Row-major multiplication table: `table[a * order + b] = a * b`.
    table: Vec<u16>,
    inv: Vec<u16>,
    elem_orders: Vec<u16>,
    gens: OnceLock<Vec<usize>>,
    conj_classes: OnceLock<Vec<Vec<u16>>>,
    normals: OnceLock<Vec<Vec<u16>>>,
    subgroups: OnceLock<Vec<Vec<u16>>>,
    quotients: OnceLock<Vec<QuotientEntry>>,
}

/// A normal subgroup together with its quotient group and quotient map data.
pub(crate) struct QuotientEntry {
    pub kernel: Vec<u16>,
    pub group: FiniteGroup,
    /// Images of the quotient map, indexed by parent element.
    pub images: Vec<u16>,
}

/// A finite group; cheap to clone, compared by identity.
#[derive(Clone)]
pub struct FiniteGroup(pub(crate) Arc<GroupData>);

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}
impl Eq for FiniteGroup {}

impl Hash for FiniteGroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        (Arc::as_ptr(&self.0) as usize).hash(state);
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name(), self.order())
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FiniteGroup {
    /// Builds a group from a raw Cayley table, relabeling the identity to
    /// index 0 and verifying every group axiom.
    pub fn from_table(table: &[Vec<usize>], name: &str) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(CoverError::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(CoverError::NotAGroup(format!(
                    "row {i} has length {} but the table has {n} rows",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(CoverError::NotAGroup(format!(
                        "entry at ({i},{j}) is {v}, out of range"
                    )));
                }
            }
        }
        // Locate the two-sided identity.
        let mut identity = None;
        for e in 0..n {
            if (0..n).all(|x| table[e][x] == x && table[x][e] == x) {
                identity = Some(e);
                break;
            }
        }
        let e = identity.ok_or_else(|| CoverError::NotAGroup("no identity element".into()))?;
        // Relabel so the identity sits at index 0 (swap 0 <-> e).
        let perm: Vec<usize> = (0..n).map(|i| if i == 0 { e } else if i == e { 0 } else { i }).collect();
        let mut flat = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                // perm is an involution, so it is its own inverse.
                flat[i * n + j] = perm[table[perm[i]][perm[j]]] as u16;
            }
        }
        Self::finish(flat, n, name)
    }

    /// Closure of a set of permutations of `{0..degree-1}` under composition.
    ///
    /// Elements are sorted lexicographically as image arrays, which places
    /// the identity permutation first.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        name: &str,
        caps: &Caps,
    ) -> Result<FiniteGroup> {
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(CoverError::NotAGroup(format!(
                    "generator {k} has length {}, expected {degree}",
                    g.len()
                )));
            }
            let mut seen = vec![false; degree];
            for &im in g {
                if im >= degree || seen[im] {
                    return Err(CoverError::NotAGroup(format!(
                        "generator {k} is not a bijection"
                    )));
                }
                seen[im] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        let mut seen: HashSet<Vec<usize>> = elems.iter().cloned().collect();
        let mut queue = vec![identity];
        while let Some(p) = queue.pop() {
            for g in generators {
                let q: Vec<usize> = (0..degree).map(|i| g[p[i]]).collect();
                if seen.insert(q.clone()) {
                    if elems.len() + 1 > caps.max_order {
                        return Err(CoverError::OrderCapExceeded {
                            needed: elems.len() + 1,
                            cap: caps.max_order,
                        });
                    }
                    elems.push(q.clone());
                    queue.push(q);
                }
            }
        }
        elems.sort();
        let n = elems.len();
        let index: std::collections::HashMap<&Vec<usize>, usize> =
            elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut flat = vec![0u16; n * n];
        for (i, p) in elems.iter().enumerate() {
            for (j, q) in elems.iter().enumerate() {
                let prod: Vec<usize> = (0..degree).map(|x| p[q[x]]).collect();
                flat[i * n + j] = index[&prod] as u16;
            }
        }
        Self::finish(flat, n, name)
    }

    /// Validates axioms of an already-canonical flat table and wraps it.
    fn finish(flat: Vec<u16>, n: usize, name: &str) -> Result<FiniteGroup> {
        for x in 0..n {
            if flat[x] as usize != x || flat[x * n] as usize != x {
                return Err(CoverError::NotAGroup(format!(
                    "element 0 is not a two-sided identity at {x}"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b] as usize;
                for c in 0..n {
                    let bc = flat[b * n + c] as usize;
                    if flat[ab * n + c] != flat[a * n + bc] {
                        return Err(CoverError::NotAGroup(format!(
                            "non-associative triple ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inv = vec![u16::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if flat[a * n + b] == 0 && flat[b * n + a] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
            if inv[a] == u16::MAX {
                return Err(CoverError::NotAGroup(format!("no two-sided inverse for {a}")));
            }
        }
        let mut elem_orders = vec![0u16; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1u16;
            while x != 0 {
                x = flat[x * n + a] as usize;
                k += 1;
            }
            elem_orders[a] = k.max(1);
            if a == 0 {
                elem_orders[0] = 1;
            }
        }
        Ok(FiniteGroup(Arc::new(GroupData {
            name: name.to_string(),
            order: n,
            table: flat,
            inv,
            elem_orders,
            gens: OnceLock::new(),
            conj_classes: OnceLock::new(),
            normals: OnceLock::new(),
            subgroups: OnceLock::new(),
            quotients: OnceLock::new(),
        })))
    }

    /// Direct product with the two coordinate projections.
    ///
    /// Element `(a, b)` gets index `a * |h| + b`.
    pub fn direct_product(
        g: &FiniteGroup,
        h: &FiniteGroup,
        name: &str,
        caps: &Caps,
    ) -> Result<(FiniteGroup, GroupHom, GroupHom)> {
        let n = g.order() * h.order();
        if n > caps.max_order {
            return Err(CoverError::OrderCapExceeded { needed: n, cap: caps.max_order });
        }
        let hn = h.order();
        let mut flat = vec![0u16; n * n];
        for a1 in 0..g.order() {
            for b1 in 0..hn {
                let i = a1 * hn + b1;
                for a2 in 0..g.order() {
                    for b2 in 0..hn {
                        let j = a2 * hn + b2;
                        flat[i * n + j] = (g.mul(a1, a2) * hn + h.mul(b1, b2)) as u16;
                    }
                }
            }
        }
        let prod = Self::finish(flat, n, name)?;
        let pr1 = GroupHom::new_unchecked(
            prod.clone(),
            g.clone(),
            (0..n).map(|i| (i / hn) as u16).collect(),
        );
        let pr2 = GroupHom::new_unchecked(
            prod.clone(),
            h.clone(),
            (0..n).map(|i| (i % hn) as u16).collect(),
        );
        Ok((prod, pr1, pr2))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `t * a * t^{-1}`.
    #[inline]
    pub fn conj(&self, t: usize, a: usize) -> usize {
        self.mul(self.mul(t, a), self.inv(t))
    }

    pub fn elem_order(&self, a: usize) -> usize {
        self.0.elem_orders[a] as usize
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.order()).map(|a| self.elem_order(a)).collect();
        v.sort_unstable();
        v
    }

    /// Re-asserts the group axioms on the stored table.
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.order();
        let flat = &self.0.table;
        for &v in flat.iter() {
            if (v as usize) >= n {
                return Err(CoverError::NotAGroup("table not closed".into()));
            }
        }
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(CoverError::NotAGroup("identity axiom fails".into()));
            }
            if self.mul(a, self.inv(a)) != 0 {
                return Err(CoverError::NotAGroup("inverse axiom fails".into()));
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(CoverError::NotAGroup("associativity fails".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<u16> {
        let n = self.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut elems: Vec<usize> = vec![0];
        let mut queue: Vec<usize> = vec![0];
        for &g in gens {
            if !member[g] {
                member[g] = true;
                elems.push(g);
                queue.push(g);
            }
        }
        // Products with generators reach every word; inverses exist because
        // the group is finite.
        while let Some(x) = queue.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !member[y] {
                        member[y] = true;
                        elems.push(y);
                        queue.push(y);
                    }
                }
            }
        }
        let mut out: Vec<u16> = elems.into_iter().map(|x| x as u16).collect();
        out.sort_unstable();
        out
    }

    /// Greedily computed minimal generating set: repeatedly adjoin the
    /// smallest element outside the running closure.
    pub fn generating_set(&self) -> &[usize] {
        self.0.gens.get_or_init(|| {
            let n = self.order();
            let mut gens: Vec<usize> = Vec::new();
            let mut cl = self.closure(&gens);
            while cl.len() < n {
                let mut next = None;
                for x in 0..n {
                    if cl.binary_search(&(x as u16)).is_err() {
                        next = Some(x);
                        break;
                    }
                }
                gens.push(next.expect("closure is proper, so some element is missing"));
                cl = self.closure(&gens);
            }
            if gens.is_empty() && n == 1 {
                // Trivial group: no generators needed.
            }
            gens
        })
    }

    pub fn conjugacy_classes(&self) -> &Vec<Vec<u16>> {
        self.0.conj_classes.get_or_init(|| {
            let n = self.order();
            let mut seen = vec![false; n];
            let mut classes = Vec::new();
            for a in 0..n {
                if seen[a] {
                    continue;
                }
                let mut cls: Vec<u16> = Vec::new();
                for t in 0..n {
                    let c = self.conj(t, a);
                    if !seen[c] {
                        seen[c] = true;
                        cls.push(c as u16);
                    }
                }
                cls.sort_unstable();
                classes.push(cls);
            }
            classes.sort_by(|x, y| (x.len(), x.clone()).cmp(&(y.len(), y.clone())));
            classes
        })
    }

    /// Size of the conjugacy class of `a`.
    pub fn class_size(&self, a: usize) -> usize {
        for cls in self.conjugacy_classes() {
            if cls.binary_search(&(a as u16)).is_ok() {
                return cls.len();
            }
        }
        unreachable!("every element lies in a class")
    }

    /// All normal subgroups, sorted by (order, elements).
    ///
    /// Computed as joins of conjugacy classes: a subgroup generated by a
    /// union of classes is conjugation-invariant, and every normal subgroup
    /// arises this way.
    pub fn normal_subgroups(&self) -> &Vec<Vec<u16>> {
        self.0.normals.get_or_init(|| {
            let classes = self.conjugacy_classes().clone();
            let mut found: HashSet<Vec<u16>> = HashSet::new();
            let trivial = vec![0u16];
            found.insert(trivial.clone());
            let mut queue = vec![trivial];
            while let Some(nsub) = queue.pop() {
                for cls in &classes {
                    if cls.iter().all(|e| nsub.binary_search(e).is_ok()) {
                        continue;
                    }
                    let mut gens: Vec<usize> = nsub.iter().map(|&x| x as usize).collect();
                    gens.extend(cls.iter().map(|&x| x as usize));
                    let bigger = self.closure(&gens);
                    if found.insert(bigger.clone()) {
                        queue.push(bigger);
                    }
                }
            }
            let mut out: Vec<Vec<u16>> = found.into_iter().collect();
            out.sort_by(|x, y| (x.len(), x.clone()).cmp(&(y.len(), y.clone())));
            out
        })
    }

    /// All subgroups, sorted by (order, elements).
    ///
    /// Joins of cyclic subgroups, closed under further joins.
    pub fn all_subgroups(&self) -> &Vec<Vec<u16>> {
        self.0.subgroups.get_or_init(|| {
            let n = self.order();
            let mut cyclic: Vec<Vec<u16>> = Vec::new();
            let mut seen: HashSet<Vec<u16>> = HashSet::new();
            for a in 0..n {
                let c = self.closure(&[a]);
                if seen.insert(c.clone()) {
                    cyclic.push(c);
                }
            }
            let mut queue: Vec<Vec<u16>> = seen.iter().cloned().collect();
            while let Some(sub) = queue.pop() {
                for c in &cyclic {
                    if c.iter().all(|e| sub.binary_search(e).is_ok()) {
                        continue;
                    }
                    let mut gens: Vec<usize> = sub.iter().map(|&x| x as usize).collect();
                    gens.push(c[c.len() - 1] as usize);
                    gens.extend(c.iter().map(|&x| x as usize));
                    let join = self.closure(&gens);
                    if seen.insert(join.clone()) {
                        queue.push(join);
                    }
                }
            }
            let mut out: Vec<Vec<u16>> = seen.into_iter().collect();
            out.sort_by(|x, y| (x.len(), x.clone()).cmp(&(y.len(), y.clone())));
            out
        })
    }

    /// True iff the group has exactly two normal subgroups. The trivial
    /// group has one and is reported not simple.
    pub fn is_simple(&self) -> bool {
        self.normal_subgroups().len() == 2
    }

    pub(crate) fn quotient_entries(&self) -> &Vec<QuotientEntry> {
        self.0.quotients.get_or_init(|| {
            self.normal_subgroups()
                .iter()
                .map(|k| self.build_quotient(k))
                .collect()
        })
    }

    /// Builds the quotient by a normal subgroup given as an element list.
    fn build_quotient(&self, kernel: &[u16]) -> QuotientEntry {
        let n = self.order();
        // Coset of x = sorted { x*k : k in kernel }; label cosets by their
        // minimal element so the identity coset gets index 0.
        let mut coset_of = vec![u16::MAX; n];
        let mut reps: Vec<u16> = Vec::new();
        for x in 0..n {
            if coset_of[x] != u16::MAX {
                continue;
            }
            let mut members: Vec<usize> = kernel.iter().map(|&k| self.mul(x, k as usize)).collect();
            members.sort_unstable();
            let idx = reps.len() as u16;
            for &m in &members {
                coset_of[m] = idx;
            }
            reps.push(members[0] as u16);
        }
        // Scanning x = 0.. assigns index 0 to the identity coset.
        let q = reps.len();
        let mut flat = vec![0u16; q * q];
        for i in 0..q {
            for j in 0..q {
                flat[i * q + j] = coset_of[self.mul(reps[i] as usize, reps[j] as usize)];
            }
        }
        let name = format!("{}/K{}", self.name(), kernel.len());
        let group = FiniteGroup::finish(flat, q, &name)
            .expect("quotient of a group by a normal subgroup is a group");
        QuotientEntry {
            kernel: kernel.to_vec(),
            group,
            images: coset_of,
        }
    }

    /// Quotient by a normal subgroup, with the quotient epimorphism.
    pub fn quotient(&self, n: &Subgroup) -> Result<(FiniteGroup, GroupHom)> {
        if n.parent() != self {
            return Err(CoverError::TypeMismatch(
                "subgroup belongs to a different group".into(),
            ));
        }
        if !n.is_normal() {
            return Err(CoverError::NotNormal);
        }
        let entry = self.build_quotient(n.elements());
        let hom = GroupHom::new_unchecked(self.clone(), entry.group.clone(), entry.images);
        Ok((entry.group, hom))
    }
}

/// A subgroup of a fixed parent group, stored as a sorted element list.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    elements: Vec<u16>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.elements == other.elements
    }
}
impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {} of {})", self.order(), self.parent.name())
    }
}

impl Subgroup {
    /// Validates closure, identity and inverses of `elements`.
    pub fn new(parent: &FiniteGroup, elements: &[usize]) -> Result<Subgroup> {
        let mut elems: Vec<u16> = elements.iter().map(|&x| x as u16).collect();
        elems.sort_unstable();
        elems.dedup();
        if elems.binary_search(&0).is_err() {
            return Err(CoverError::NotAGroup("subgroup misses the identity".into()));
        }
        for &a in &elems {
            if (a as usize) >= parent.order() {
                return Err(CoverError::NotAGroup("element out of range".into()));
            }
            if elems.binary_search(&(parent.inv(a as usize) as u16)).is_err() {
                return Err(CoverError::NotAGroup("subgroup not closed under inverse".into()));
            }
            for &b in &elems {
                let p = parent.mul(a as usize, b as usize) as u16;
                if elems.binary_search(&p).is_err() {
                    return Err(CoverError::NotAGroup("subgroup not closed under product".into()));
                }
            }
        }
        Ok(Subgroup { parent: parent.clone(), elements: elems })
    }

    pub(crate) fn from_sorted_unchecked(parent: &FiniteGroup, elements: Vec<u16>) -> Subgroup {
        Subgroup { parent: parent.clone(), elements }
    }

    /// Subgroup generated by a set of elements.
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Subgroup {
        Subgroup {
            parent: parent.clone(),
            elements: parent.closure(gens),
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[u16] {
        &self.elements
    }

    pub fn element_indices(&self) -> Vec<usize> {
        self.elements.iter().map(|&x| x as usize).collect()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&(x as u16)).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.elements.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        self.elements.iter().all(|&a| {
            (0..g.order()).all(|t| self.contains(g.conj(t, a as usize)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.elements.iter().all(|&a| {
            self.elements
                .iter()
                .all(|&b| self.parent.mul(a as usize, b as usize) == self.parent.mul(b as usize, a as usize))
        })
    }

    /// Intersection with another subgroup of the same parent.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elems: Vec<u16> = self
            .elements
            .iter()
            .copied()
            .filter(|e| other.elements.binary_search(e).is_ok())
            .collect();
        Subgroup { parent: self.parent.clone(), elements: elems }
    }

    /// Product set `A * B` (a subgroup when one factor is normal).
    pub fn product_set(&self, other: &Subgroup) -> Vec<u16> {
        let mut out: Vec<u16> = Vec::new();
        let mut seen = vec![false; self.parent.order()];
        for &a in &self.elements {
            for &b in &other.elements {
                let p = self.parent.mul(a as usize, b as usize);
                if !seen[p] {
                    seen[p] = true;
                    out.push(p as u16);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Exhaustive subgroup enumeration, optionally restricted to normal ones.
pub fn subgroups(g: &FiniteGroup, normal_only: bool, caps: &Caps) -> Result<Vec<Subgroup>> {
    if g.order() > caps.max_order {
        return Err(CoverError::OrderCapExceeded { needed: g.order(), cap: caps.max_order });
    }
    let lists = if normal_only { g.normal_subgroups() } else { g.all_subgroups() };
    Ok(lists
        .iter()
        .map(|elems| Subgroup::from_sorted_unchecked(g, elems.clone()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_table(&[vec![0]], "1").unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.verify_axioms().is_ok());
    }

    #[test]
    fn z4_from_table_orders() {
        let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
        let g = FiniteGroup::from_table(&table, "C4").unwrap();
        assert_eq!(g.order(), 4);
        let mut orders = g.order_profile();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 4, 4]);
    }

    #[test]
    fn identity_relabeled_to_zero() {
        // C3 with op(a,b) = a + b + 1 mod 3, whose identity is element 2.
        let t: Vec<Vec<usize>> = (0..3).map(|i| (0..3).map(|j| (i + j + 1) % 3).collect()).collect();
        let g = FiniteGroup::from_table(&t, "C3-shifted").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.elem_order(1), 3);
    }

    #[test]
    fn non_associative_table_rejected() {
        // 2x2 table with an identity but broken associativity is impossible;
        // use a 3x3 with identity row/col and a bad corner.
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        let err = FiniteGroup::from_table(&t, "bad").unwrap_err();
        match err {
            CoverError::NotAGroup(_) => {}
            other => panic!("expected NotAGroup, got {other:?}"),
        }
    }

    #[test]
    fn s3_from_permutations() {
        let g = groups::symmetric(3, &caps()).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        let mut profile = g.order_profile();
        profile.sort_unstable();
        assert_eq!(profile, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn single_transposition_gives_c2() {
        let g = FiniteGroup::from_permutations(2, &[vec![1, 0]], "C2", &caps()).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn s8_exceeds_cap() {
        let caps = Caps::default().with_max_order(200);
        let err = groups::symmetric(8, &caps).unwrap_err();
        match err {
            CoverError::OrderCapExceeded { cap: 200, .. } => {}
            other => panic!("expected OrderCapExceeded, got {other:?}"),
        }
    }

    #[test]
    fn c2_times_c3_is_cyclic() {
        let c2 = groups::cyclic(2);
        let c3 = groups::cyclic(3);
        let (p, _, _) = FiniteGroup::direct_product(&c2, &c3, "C2xC3", &caps()).unwrap();
        assert_eq!(p.order(), 6);
        // (1,1) sits at index 1*3+1 = 4 and must have order 6.
        assert_eq!(p.elem_order(4), 6);
    }

    #[test]
    fn product_with_trivial_is_isomorphic_copy() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let one = groups::trivial();
        let (p, pr1, _) = FiniteGroup::direct_product(&s3, &one, "S3x1", &caps()).unwrap();
        assert_eq!(p.order(), 6);
        assert!(pr1.is_bijective());
    }

    #[test]
    fn s3_times_c2_nonabelian_order_12() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let c2 = groups::cyclic(2);
        let (p, _, _) = FiniteGroup::direct_product(&s3, &c2, "S3xC2", &caps()).unwrap();
        assert_eq!(p.order(), 12);
        assert!(!p.is_abelian());
    }

    #[test]
    fn klein_four_has_five_subgroups() {
        let v = groups::klein_four(&caps()).unwrap();
        let subs = subgroups(&v, false, &caps()).unwrap();
        assert_eq!(subs.len(), 5);
    }

    #[test]
    fn s3_has_three_normal_subgroups() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let normals = subgroups(&s3, true, &caps()).unwrap();
        assert_eq!(normals.len(), 3);
        let orders: Vec<usize> = normals.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 3, 6]);
    }

    #[test]
    fn trivial_group_single_subgroup() {
        let one = groups::trivial();
        assert_eq!(subgroups(&one, false, &caps()).unwrap().len(), 1);
    }

    #[test]
    fn quotient_s3_by_a3() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let a3_elems: Vec<usize> = (0..6).filter(|&x| s3.elem_order(x) != 2).collect();
        let a3 = Subgroup::new(&s3, &a3_elems).unwrap();
        let (q, hom) = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        assert!(hom.is_surjective());
        assert_eq!(hom.kernel().elements(), a3.elements());
    }

    #[test]
    fn quotient_by_trivial_is_isomorphic_copy() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let triv = Subgroup::new(&s3, &[0]).unwrap();
        let (q, hom) = s3.quotient(&triv).unwrap();
        assert_eq!(q.order(), 6);
        assert!(hom.is_bijective());
    }

    #[test]
    fn quotient_c4_by_c2() {
        let c4 = groups::cyclic(4);
        let c2_sub = Subgroup::generated(&c4, &[2]);
        let (q, _) = c4.quotient(&c2_sub).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn quotient_rejects_non_normal() {
        let s3 = groups::symmetric(3, &caps()).unwrap();
        let tau = (0..6).find(|&x| s3.elem_order(x) == 2).unwrap();
        let sub = Subgroup::generated(&s3, &[tau]);
        assert!(matches!(s3.quotient(&sub), Err(CoverError::NotNormal)));
    }

    #[test]
    fn simplicity_convention() {
        let c2 = groups::cyclic(2);
        assert!(c2.is_simple());
        let s3 = groups::symmetric(3, &caps()).unwrap();
        assert!(!s3.is_simple());
        assert!(!groups::trivial().is_simple());
    }

    #[test]
    fn quotient_kernel_roundtrip() {
        let g = groups::dihedral(4, &caps()).unwrap();
        for n in subgroups(&g, true, &caps()).unwrap() {
            let (_, hom) = g.quotient(&n).unwrap();
            assert_eq!(hom.kernel().elements(), n.elements());
        }
    }
}
