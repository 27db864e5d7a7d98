use super::{sorted, FiniteGroup};

/// A map between finite groups given by the image of each source index.
/// The groups themselves are passed to the methods that need them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    images: Vec<usize>,
}

/// Every pair `(a, b)` with `h(ab) != h(a)h(b)`, plus the identity check.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomReport {
    pub violations: Vec<(usize, usize)>,
    pub identity_preserved: bool,
    pub well_formed: bool,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.well_formed && self.identity_preserved && self.violations.is_empty()
    }
}

impl GroupHom {
    pub fn new(images: Vec<usize>) -> GroupHom {
        GroupHom { images }
    }

    pub fn identity(order: usize) -> GroupHom {
        GroupHom { images: (0..order).collect() }
    }

    pub fn trivial(source_order: usize, target: &FiniteGroup) -> GroupHom {
        GroupHom { images: vec![target.identity(); source_order] }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &GroupHom) -> GroupHom {
        GroupHom { images: first.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn verify(&self, source: &FiniteGroup, target: &FiniteGroup) -> HomReport {
        let well_formed =
            self.images.len() == source.order() && self.images.iter().all(|&x| x < target.order());
        if !well_formed {
            return HomReport { well_formed, ..Default::default() };
        }
        let mut violations = Vec::new();
        for a in 0..source.order() {
            for b in 0..source.order() {
                if self.apply(source.mul(a, b)) != target.mul(self.apply(a), self.apply(b)) {
                    violations.push((a, b));
                }
            }
        }
        HomReport {
            violations,
            identity_preserved: self.apply(source.identity()) == target.identity(),
            well_formed,
        }
    }

    /// Preimage of the target identity.
    pub fn kernel(&self, target: &FiniteGroup) -> Vec<usize> {
        (0..self.images.len()).filter(|&a| self.images[a] == target.identity()).collect()
    }

    /// Sorted set of image indices.
    pub fn image(&self) -> Vec<usize> {
        sorted(self.images.clone())
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.images.len()
    }

    pub fn is_surjective(&self, target: &FiniteGroup) -> bool {
        self.image().len() == target.order()
    }
}

/// Every map `h: 0..n -> target` with `h(e) = 1` and `h(a*b) = h(a)h(b)`,
/// where `*` is any binary operation on `0..n` (group or gyrogroup).
///
/// Depth-first over source elements in index order; each assignment is
/// pushed through all products with already assigned elements, so a
/// conflict prunes the branch as soon as it appears. Results come out in
/// lexicographic order.
pub fn enumerate_homs<F>(n: usize, source_identity: usize, op: F, target: &FiniteGroup) -> Vec<Vec<usize>>
where
    F: Fn(usize, usize) -> usize,
{
    const UNSET: usize = usize::MAX;
    fn assign<F: Fn(usize, usize) -> usize>(
        map: &mut [usize],
        x: usize,
        v: usize,
        op: &F,
        target: &FiniteGroup,
    ) -> bool {
        let mut queue = vec![(x, v)];
        while let Some((x, v)) = queue.pop() {
            if map[x] != UNSET {
                if map[x] != v {
                    return false;
                }
                continue;
            }
            map[x] = v;
            for y in 0..map.len() {
                if map[y] == UNSET {
                    continue;
                }
                queue.push((op(x, y), target.mul(map[x], map[y])));
                queue.push((op(y, x), target.mul(map[y], map[x])));
            }
        }
        true
    }
    fn search<F: Fn(usize, usize) -> usize>(map: Vec<usize>, op: &F, target: &FiniteGroup, out: &mut Vec<Vec<usize>>) {
        let Some(x) = map.iter().position(|&v| v == UNSET) else {
            out.push(map);
            return;
        };
        for v in 0..target.order() {
            let mut next = map.clone();
            if assign(&mut next, x, v, op, target) {
                search(next, op, target, out);
            }
        }
    }
    let mut start = vec![UNSET; n];
    let mut out = Vec::new();
    if n > 0 && assign(&mut start, source_identity, target.identity(), &op, target) {
        search(start, &op, target, &mut out);
    }
    out.retain(|m| (0..n).all(|a| (0..n).all(|b| m[op(a, b)] == target.mul(m[a], m[b]))));
    out
}
