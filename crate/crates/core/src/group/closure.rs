use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Default element budget for generated closures. Overridable from the CLI
/// through `GYK_BUDGET`.
pub const DEFAULT_CLOSURE_BUDGET: usize = 1_000_000;

/// Breadth-first closure of `generators` under `mul`, starting at `identity`.
///
/// The result always begins with `identity`; later elements appear in the
/// order they are first reached by right-multiplying already-found elements
/// by the sorted, deduplicated generators. Finiteness makes the result a
/// group whenever `mul` is associative.
pub fn generate_closure<T, F>(generators: &[T], identity: T, mut mul: F, budget: usize) -> Result<Vec<T>>
where
    T: Clone + Ord + Hash,
    F: FnMut(&T, &T) -> T,
{
    let mut gens = generators.to_vec();
    gens.sort();
    gens.dedup();

    let mut seen: HashSet<T> = HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut head = 0;
    while head < elements.len() {
        for g in &gens {
            let y = mul(&elements[head], g);
            if !seen.contains(&y) {
                if elements.len() >= budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                seen.insert(y.clone());
                elements.push(y);
            }
        }
        head += 1;
    }
    Ok(elements)
}

/// A finite group of concrete elements (permutations, pairs, ...) together
/// with its index-based product table.
#[derive(Clone, Debug)]
pub struct ConcreteGroup<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    group: FiniteGroup,
}

impl<T: Clone + Ord + Hash> ConcreteGroup<T> {
    /// Generates the closure and tabulates it. The identity gets index 0.
    pub fn generate<F>(generators: &[T], identity: T, mut mul: F, budget: usize) -> Result<Self>
    where
        F: FnMut(&T, &T) -> T,
    {
        let elements = generate_closure(generators, identity, &mut mul, budget)?;
        Self::tabulate(elements, mul)
    }

    /// Tabulates a set of elements that is expected to be closed under `mul`.
    pub fn tabulate<F>(elements: Vec<T>, mut mul: F) -> Result<Self>
    where
        F: FnMut(&T, &T) -> T,
    {
        let index: HashMap<T, usize> =
            elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::Malformed("duplicate elements".into()));
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let c = mul(a, b);
                match index.get(&c) {
                    Some(&k) => table.push(k),
                    None => return Err(Error::NotSubgroup("element set is not closed".into())),
                }
            }
        }
        let group = FiniteGroup::from_flat_unverified(n, table)?;
        Ok(ConcreteGroup { elements, index, group })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn set_labels(&mut self, labels: Vec<String>) {
        self.group = self.group.clone().with_labels(labels).expect("one label per element");
    }
}
