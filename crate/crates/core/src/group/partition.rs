use std::fmt;

/// A partition of `{0..domain_size-1}` into disjoint blocks.
///
/// Canonical form: each block sorted, blocks ordered by their least element,
/// so two partitions are equal iff they have the same blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    domain_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Groups elements by a class label; `labels[x]` is any key for `x`'s class.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut block_of_label = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (x, &l) in labels.iter().enumerate() {
            let b = *block_of_label.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(x);
        }
        // iteration in increasing x keeps blocks sorted and ordered by minimum
        Partition { domain_size: labels.len(), blocks }
    }

    /// Connected components of the graph on `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Partition {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, b) in edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
            }
        }
        let labels: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
        Partition::from_labels(&labels)
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, x: usize) -> &[usize] {
        self.blocks.iter().find(|b| b.binary_search(&x).is_ok()).expect("x lies in the domain")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = Partition::from_labels(&[7, 3, 7, 3, 9]);
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3], vec![4]]);
        let q = Partition::from_edges(5, [(2, 0), (3, 1)]);
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "{0,2} {1,3} {4}");
        assert_eq!(p.block_of(3), &[1, 3]);
    }
}
