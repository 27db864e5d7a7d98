use std::fmt;
use std::ops::Mul;

use crate::error::Error;

/// A bijection of `{0..m-1}` stored as its image array.
///
/// Composition is right-to-left throughout the crate:
/// `p.compose(&q)` maps `x` to `p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { image: (0..degree).collect() }
    }

    /// Builds a permutation from its image array, rejecting anything that is
    /// not a bijection.
    pub fn from_images(image: Vec<usize>) -> Result<Perm, Error> {
        let m = image.len();
        let mut seen = vec![false; m];
        for (x, &y) in image.iter().enumerate() {
            if y >= m {
                return Err(Error::InvalidPerm(format!("image of {x} is {y}, outside 0..{m}")));
            }
            if seen[y] {
                return Err(Error::InvalidPerm(format!("value {y} appears twice")));
            }
            seen[y] = true;
        }
        Ok(Perm { image })
    }

    /// Caller guarantees `image` is a bijection.
    pub(crate) fn from_images_unchecked(image: Vec<usize>) -> Perm {
        debug_assert!(Perm::from_images(image.clone()).is_ok());
        Perm { image }
    }

    pub fn transposition(degree: usize, i: usize, j: usize) -> Perm {
        let mut image: Vec<usize> = (0..degree).collect();
        image.swap(i, j);
        Perm { image }
    }

    /// The cycle `points[0] -> points[1] -> ... -> points[0]`.
    pub fn cycle(degree: usize, points: &[usize]) -> Result<Perm, Error> {
        let mut image: Vec<usize> = (0..degree).collect();
        for (k, &p) in points.iter().enumerate() {
            if p >= degree {
                return Err(Error::InvalidPerm(format!("cycle point {p} outside 0..{degree}")));
            }
            image[p] = points[(k + 1) % points.len()];
        }
        Perm::from_images(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn into_images(self) -> Vec<usize> {
        self.image
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, Error> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Perm) -> Perm {
        Perm { image: other.image.iter().map(|&y| self.image[y]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Perm { image: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.image[x] == x
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.fixes(x)).collect()
    }

    pub fn pow(&self, k: usize) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                seen[start] = true;
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.image[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// `true` for even permutations.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Panics on a degree mismatch; use [`Perm::compose`] for the checked form.
impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "permutation degree mismatch");
        self.compose_unchecked(rhs)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn all_perms(m: usize) -> Vec<Perm> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
            if prefix.len() == used.len() {
                out.push(Perm { image: prefix.clone() });
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; m], &mut out);
        out
    }

    #[test]
    fn swap_is_an_involution() {
        let s = Perm::transposition(3, 0, 1);
        assert!(s.compose(&s).unwrap().is_identity());
        assert_eq!(s.inverse(), s);
    }

    #[test]
    fn identity_is_neutral() {
        let p = Perm::cycle(4, &[0, 2, 3]).unwrap();
        assert_eq!(Perm::identity(4).compose(&p).unwrap(), p);
        assert!(Perm::identity(5).inverse().is_identity());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let c = Perm::cycle(3, &[0, 1, 2]).unwrap();
        let s = Perm::transposition(3, 0, 1);
        let got = c.compose(&s).unwrap();
        for x in 0..3 {
            assert_eq!(got.apply(x), c.apply(s.apply(x)));
        }
        // 0 -> 1 -> 2, 1 -> 0 -> 1, 2 -> 2 -> 0
        assert_eq!(got.images(), &[2, 1, 0]);
    }

    #[test]
    fn inverse_of_three_cycle() {
        let c = Perm::cycle(3, &[0, 1, 2]).unwrap();
        assert_eq!(c.inverse(), Perm::cycle(3, &[0, 2, 1]).unwrap());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Perm::identity(3);
        let b = Perm::identity(4);
        assert!(matches!(a.compose(&b), Err(Error::DegreeMismatch(3, 4))));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn exhaustive_associativity_and_inverse_up_to_degree_five() {
        for m in 1..=5 {
            let perms = all_perms(m);
            for p in &perms {
                let pi = p.inverse();
                assert!((p * &pi).is_identity() && (&pi * p).is_identity());
            }
            // associativity over a slice of triples keeps degree 5 quick
            let step = if m == 5 { 7 } else { 1 };
            for p in perms.iter().step_by(step) {
                for q in perms.iter().step_by(step) {
                    for r in perms.iter().step_by(step) {
                        assert_eq!(&(p * q) * r, p * &(q * r));
                    }
                }
            }
        }
    }

    #[test]
    fn order_and_parity() {
        let p = Perm::from_images(vec![1, 0, 3, 4, 2, 5]).unwrap();
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(p.to_string(), "(0 1)(2 3 4)");
    }

    fn arb_perm(m: usize) -> impl Strategy<Value = Perm> {
        Just((0..m).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|image| Perm { image })
    }

    proptest! {
        #[test]
        fn compose_is_associative_degree_six(p in arb_perm(6), q in arb_perm(6), r in arb_perm(6)) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        }

        #[test]
        fn inverse_is_two_sided(p in arb_perm(6)) {
            prop_assert!((&p * &p.inverse()).is_identity());
            prop_assert!((&p.inverse() * &p).is_identity());
        }
    }
}
