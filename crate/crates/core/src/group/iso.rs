use super::{FiniteGroup, GroupHom};
use crate::error::{Error, Result};

pub const DEFAULT_ISO_BOUND: usize = 256;

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct PartialIso {
    map: Vec<usize>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

impl PartialIso {
    fn new(n: usize) -> Self {
        PartialIso { map: vec![UNSET; n], used: vec![false; n], assigned: Vec::new() }
    }

    /// Assigns `x -> y` and closes the partial map under both products.
    /// Returns false on any conflict.
    fn assign<A, B>(&mut self, x: usize, y: usize, mul_a: &A, mul_b: &B) -> bool
    where
        A: Fn(usize, usize) -> usize,
        B: Fn(usize, usize) -> usize,
    {
        let mut queue = Vec::new();
        if !self.set(x, y, &mut queue) {
            return false;
        }
        while let Some(u) = queue.pop() {
            let mut k = 0;
            while k < self.assigned.len() {
                let v = self.assigned[k];
                for (p, q) in [(u, v), (v, u)] {
                    let target = mul_b(self.map[p], self.map[q]);
                    if !self.set(mul_a(p, q), target, &mut queue) {
                        return false;
                    }
                }
                k += 1;
            }
        }
        true
    }

    fn set(&mut self, x: usize, y: usize, queue: &mut Vec<usize>) -> bool {
        if self.map[x] != UNSET {
            return self.map[x] == y;
        }
        if self.used[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.assigned.push(x);
        queue.push(x);
        true
    }
}

/// Searches for a bijection `phi` of `0..n` with `phi(a*b) = phi(a)*'phi(b)`.
///
/// Each branching step picks the least unmapped element and tries every
/// compatible unused image; forced images are propagated through products,
/// so in practice only generator images are branched on. `fixed` pins
/// images up front (typically identity to identity).
pub fn magma_isomorphism<A, B, C>(
    n: usize,
    mul_a: A,
    mul_b: B,
    compatible: C,
    fixed: &[(usize, usize)],
) -> Option<Vec<usize>>
where
    A: Fn(usize, usize) -> usize,
    B: Fn(usize, usize) -> usize,
    C: Fn(usize, usize) -> bool,
{
    let mut start = PartialIso::new(n);
    for &(x, y) in fixed {
        if !compatible(x, y) || !start.assign(x, y, &mul_a, &mul_b) {
            return None;
        }
    }
    let found = search(start, &mul_a, &mul_b, &compatible)?;
    // propagation guarantees this, but the answer is cheap to confirm
    let ok = (0..n).all(|a| (0..n).all(|b| found[mul_a(a, b)] == mul_b(found[a], found[b])));
    ok.then_some(found)
}

fn search<A, B, C>(state: PartialIso, mul_a: &A, mul_b: &B, compatible: &C) -> Option<Vec<usize>>
where
    A: Fn(usize, usize) -> usize,
    B: Fn(usize, usize) -> usize,
    C: Fn(usize, usize) -> bool,
{
    let Some(x) = state.map.iter().position(|&y| y == UNSET) else {
        return Some(state.map);
    };
    for y in 0..state.map.len() {
        if state.used[y] || !compatible(x, y) {
            continue;
        }
        let mut next = state.clone();
        if next.assign(x, y, mul_a, mul_b) {
            if let Some(done) = search(next, mul_a, mul_b, compatible) {
                return Some(done);
            }
        }
    }
    None
}

/// Isomorphism test with the default order bound.
pub fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<Option<GroupHom>> {
    isomorphic_with_bound(a, b, DEFAULT_ISO_BOUND)
}

/// Returns a witness isomorphism `a -> b`, or `None`. Candidate images are
/// restricted to elements of the same order.
pub fn isomorphic_with_bound(a: &FiniteGroup, b: &FiniteGroup, bound: usize) -> Result<Option<GroupHom>> {
    for g in [a, b] {
        if g.order() > bound {
            return Err(Error::OrderBound { order: g.order(), bound });
        }
    }
    if a.order() != b.order() {
        return Ok(None);
    }
    let orders_a: Vec<usize> = (0..a.order()).map(|x| a.element_order(x)).collect();
    let orders_b: Vec<usize> = (0..b.order()).map(|x| b.element_order(x)).collect();
    let (mut pa, mut pb) = (orders_a.clone(), orders_b.clone());
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return Ok(None);
    }
    let found = magma_isomorphism(
        a.order(),
        |x, y| a.mul(x, y),
        |x, y| b.mul(x, y),
        |x, y| orders_a[x] == orders_b[y],
        &[(a.identity(), b.identity())],
    );
    Ok(found.map(GroupHom::new))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn order_multiset(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn group_is_isomorphic_to_itself() {
        let g = fixtures::dihedral(4);
        let w = isomorphic(&g, &g).unwrap().unwrap();
        assert!(w.verify(&g, &g).passed());
        assert!(w.is_injective());
    }

    #[test]
    fn z4_is_not_klein() {
        let z4 = fixtures::cyclic(4);
        let v4 = fixtures::direct_product(&fixtures::cyclic(2), &fixtures::cyclic(2));
        // independent oracle: element-order multisets already differ
        assert_ne!(order_multiset(&z4), order_multiset(&v4));
        assert!(isomorphic(&z4, &v4).unwrap().is_none());
        assert!(isomorphic(&v4, &z4).unwrap().is_none());
    }

    #[test]
    fn sym3_is_dihedral_of_order_six() {
        let s3 = fixtures::symmetric_group(3);
        let d3 = fixtures::dihedral(3);
        let w = isomorphic(s3.group(), &d3).unwrap().unwrap();
        assert!(w.verify(s3.group(), &d3).passed());
        assert!(w.is_injective());
        assert!(isomorphic(&d3, s3.group()).unwrap().is_some());
    }

    #[test]
    fn same_order_profile_but_not_isomorphic() {
        // Z4 x Z2 and Q8 share the order 8 but not the profile; D4 and Q8 differ too.
        let d4 = fixtures::dihedral(4);
        let q8 = fixtures::quaternion();
        assert!(isomorphic(&d4, &q8).unwrap().is_none());
        let z4z2 = fixtures::direct_product(&fixtures::cyclic(4), &fixtures::cyclic(2));
        assert!(isomorphic(&z4z2, &d4).unwrap().is_none());
    }

    #[test]
    fn symmetric_on_fixture_pairs() {
        let groups = vec![
            fixtures::cyclic(8),
            fixtures::direct_product(&fixtures::cyclic(4), &fixtures::cyclic(2)),
            fixtures::dihedral(4),
            fixtures::quaternion(),
            fixtures::cyclic(6),
            fixtures::dihedral(3),
        ];
        for a in &groups {
            for b in &groups {
                let ab = isomorphic(a, b).unwrap().is_some();
                let ba = isomorphic(b, a).unwrap().is_some();
                assert_eq!(ab, ba);
            }
        }
    }

    #[test]
    fn order_bound() {
        let g = fixtures::cyclic(10);
        assert!(matches!(isomorphic_with_bound(&g, &g, 8), Err(Error::OrderBound { .. })));
    }
}
