//! Standard small groups used as inputs throughout: cyclic, dihedral,
//! quaternion, symmetric, direct products, and the exponent-3 Heisenberg
//! group of order 27.

use crate::group::{ConcreteGroup, FiniteGroup, Perm, DEFAULT_CLOSURE_BUDGET};

pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
    FiniteGroup::from_flat_unverified(n, table).expect("cyclic table")
}

/// Dihedral group of order `2n`; index `i + n*j` stands for `r^i s^j`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let m = 2 * n;
    let mut table = vec![0; m * m];
    for a in 0..m {
        let (i, j) = (a % n, a / n);
        for b in 0..m {
            let (k, l) = (b % n, b / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            table[a * m + b] = rot + n * ((j + l) % 2);
        }
    }
    FiniteGroup::from_flat_unverified(m, table).expect("dihedral table")
}

/// Quaternion group; index `i + 4j` stands for `x^i y^j` with `x^4 = 1`,
/// `y^2 = x^2`, `y x y^-1 = x^-1`.
pub fn quaternion() -> FiniteGroup {
    let mut table = vec![0; 64];
    for a in 0..8 {
        let (i, j) = (a % 4, a / 4);
        for b in 0..8 {
            let (k, l) = (b % 4, b / 4);
            let (rot, ys) = if j == 0 { (i + k, l) } else { (i + 4 - k, 1 + l) };
            let (rot, ys) = if ys == 2 { (rot + 2, 0) } else { (rot, ys) };
            table[a * 8 + b] = rot % 4 + 4 * ys;
        }
    }
    FiniteGroup::from_flat_unverified(8, table).expect("quaternion table")
}

/// `a × b`, with `(x, y)` at index `x * |b| + y`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let (p, q) = (a.order(), b.order());
    let m = p * q;
    let mut table = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            table[x * m + y] = a.mul(x / q, y / q) * q + b.mul(x % q, y % q);
        }
    }
    let g = FiniteGroup::from_flat_unverified(m, table).expect("product table");
    g.with_identity_first().0
}

/// `Sym(n)` acting on `0..n`, generated by `(0 1)` and the full cycle.
/// Elements are labelled in cycle notation.
pub fn symmetric_group(n: usize) -> ConcreteGroup<Perm> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Perm::transposition(n, 0, 1));
        let all: Vec<usize> = (0..n).collect();
        gens.push(Perm::cycle(n, &all).expect("full cycle"));
    }
    let mut g = ConcreteGroup::generate(&gens, Perm::identity(n), |x, y| x * y, DEFAULT_CLOSURE_BUDGET)
        .expect("symmetric group fits the default budget");
    let labels = g.elements().iter().map(|p| p.to_string()).collect();
    g.set_labels(labels);
    g
}

/// The exponent-3 Heisenberg group of order 27, realised as upper
/// unitriangular 3×3 matrices over F3, together with the indices of the two
/// generators `a`, `b` of its presentation.
#[derive(Clone, Debug)]
pub struct Heisenberg {
    pub group: ConcreteGroup<[u8; 3]>,
    pub a: usize,
    pub b: usize,
}

/// `(x, y, z)` is the matrix `[[1, x, z], [0, 1, y], [0, 0, 1]]`.
fn unitriangular_mul(p: &[u8; 3], q: &[u8; 3]) -> [u8; 3] {
    [(p[0] + q[0]) % 3, (p[1] + q[1]) % 3, (p[2] + q[2] + p[0] * q[1]) % 3]
}

pub fn heisenberg27() -> Heisenberg {
    let a = [1, 0, 0];
    let b = [0, 1, 0];
    let mut group = ConcreteGroup::generate(&[a, b], [0, 0, 0], unitriangular_mul, DEFAULT_CLOSURE_BUDGET)
        .expect("order 27 fits the default budget");
    let labels = group.elements().iter().map(|m| format!("{}{}{}", m[0], m[1], m[2])).collect();
    group.set_labels(labels);
    let (ia, ib) = (group.index_of(&a).unwrap(), group.index_of(&b).unwrap());
    Heisenberg { group, a: ia, b: ib }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_groups_satisfy_the_axioms() {
        let groups = vec![
            cyclic(1),
            cyclic(5),
            dihedral(3),
            dihedral(4),
            quaternion(),
            direct_product(&cyclic(2), &cyclic(4)),
            symmetric_group(4).group().clone(),
            heisenberg27().group.group().clone(),
        ];
        for g in groups {
            assert!(g.check_axioms().passed());
            assert_eq!(g.identity(), 0);
        }
    }

    #[test]
    fn orders_and_shapes() {
        assert_eq!(symmetric_group(4).order(), 24);
        assert!(!dihedral(4).is_abelian());
        assert!(!quaternion().is_abelian());
        let q = quaternion();
        let involutions = (0..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(involutions, 1);
        let d = dihedral(4);
        assert_eq!((0..8).filter(|&x| d.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn heisenberg_presentation_relations() {
        let h = heisenberg27();
        let g = h.group.group();
        assert_eq!(g.order(), 27);
        let comm = |x: usize, y: usize| g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
        let ab = comm(h.a, h.b);
        assert_eq!(g.power(h.a, 3), 0);
        assert_eq!(g.power(h.b, 3), 0);
        assert_eq!(g.power(ab, 3), 0);
        assert_eq!(comm(h.a, ab), 0);
        assert_eq!(comm(h.b, ab), 0);
        assert_ne!(g.mul(h.a, h.b), g.mul(h.b, h.a));
        assert!((0..27).all(|x| x == 0 || g.element_order(x) == 3));
    }
}
