//! Constructors for standard small groups.

use crate::caps::Caps;
use crate::error::Result;
use crate::group::FiniteGroup;

/// The trivial group.
pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_table(&[vec![0]], "1").expect("trivial table is a group")
}

/// Cyclic group of order `n`, elements 0..n with addition mod n.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(&table, &format!("C{n}")).expect("cyclic table is a group")
}

/// Symmetric group on `n` letters, generated by a transposition and an n-cycle.
pub fn symmetric(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    assert!(n >= 2);
    let mut transposition: Vec<usize> = (0..n).collect();
    transposition.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    FiniteGroup::from_permutations(n, &[transposition, cycle], &format!("S{n}"), caps)
}

/// Alternating group on `n` letters.
pub fn alternating(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    assert!(n >= 3);
    let three_cycle: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        p[0] = 1;
        p[1] = 2;
        p[2] = 0;
        p
    };
    let second: Vec<usize> = if n % 2 == 1 {
        (0..n).map(|i| (i + 1) % n).collect()
    } else {
        // For even n the n-cycle is odd; use the (n-1)-cycle fixing 0.
        let mut p: Vec<usize> = (0..n).collect();
        for i in 1..n {
            p[i] = if i == n - 1 { 1 } else { i + 1 };
        }
        p
    };
    FiniteGroup::from_permutations(n, &[three_cycle, second], &format!("A{n}"), caps)
}

/// Klein four-group C2 x C2.
pub fn klein_four(caps: &Caps) -> Result<FiniteGroup> {
    let (g, _, _) = FiniteGroup::direct_product(&cyclic(2), &cyclic(2), "C2xC2", caps)?;
    Ok(g)
}

/// Dihedral group of order `2n` as permutations of an n-gon.
pub fn dihedral(n: usize, caps: &Caps) -> Result<FiniteGroup> {
    assert!(n >= 3);
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(n, &[rotation, reflection], &format!("D{n}"), caps)
}

/// Quaternion group of order 8: elements 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion8() -> FiniteGroup {
    // Index: 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
    const N: usize = 8;
    fn neg(x: usize) -> usize {
        x ^ 1
    }
    let mut table = vec![vec![0usize; N]; N];
    // Products of the units i, j, k.
    let base = |a: usize, b: usize| -> usize {
        match (a, b) {
            (0, x) => x,
            (x, 0) => x,
            (2, 2) | (4, 4) | (6, 6) => 1, // i^2 = j^2 = k^2 = -1
            (2, 4) => 6,                   // ij = k
            (4, 2) => 7,                   // ji = -k
            (4, 6) => 2,                   // jk = i
            (6, 4) => 3,                   // kj = -i
            (6, 2) => 4,                   // ki = j
            (2, 6) => 5,                   // ik = -j
            _ => unreachable!(),
        }
    };
    for a in 0..N {
        for b in 0..N {
            let (ua, sa) = (a & !1, a & 1);
            let (ub, sb) = (b & !1, b & 1);
            let mut p = base(ua, ub);
            if sa ^ sb == 1 {
                p = neg(p);
            }
            table[a][b] = p;
        }
    }
    FiniteGroup::from_table(&table, "Q8").expect("quaternion table is a group")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        let caps = Caps::default();
        assert_eq!(trivial().order(), 1);
        assert_eq!(cyclic(6).order(), 6);
        assert_eq!(symmetric(4, &caps).unwrap().order(), 24);
        assert_eq!(alternating(4, &caps).unwrap().order(), 12);
        assert_eq!(alternating(5, &caps).unwrap().order(), 60);
        assert_eq!(klein_four(&caps).unwrap().order(), 4);
        assert_eq!(dihedral(4, &caps).unwrap().order(), 8);
    }

    #[test]
    fn quaternion_structure() {
        let q8 = quaternion8();
        assert_eq!(q8.order(), 8);
        assert!(!q8.is_abelian());
        let profile = q8.order_profile();
        // One identity, one element of order 2, six of order 4.
        assert_eq!(profile, vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(q8.verify_axioms().is_ok());
    }

    #[test]
    fn a5_is_simple() {
        let caps = Caps::default();
        let a5 = alternating(5, &caps).unwrap();
        assert!(a5.is_simple());
    }
}
