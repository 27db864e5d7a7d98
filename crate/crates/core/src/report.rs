use std::fmt;

/// One failed check, with the first witness found and how many witnesses
/// were seen in total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub witness: Vec<usize>,
    pub count: usize,
}

/// Outcome of an exhaustive property check. Passed iff no violations.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a witness for `check`. Only the first witness per check is
    /// kept; later ones bump the count.
    pub fn record(&mut self, check: &'static str, witness: &[usize]) {
        match self.violations.iter_mut().find(|v| v.check == check) {
            Some(v) => v.count += 1,
            None => self.violations.push(Violation { check, witness: witness.to_vec(), count: 1 }),
        }
    }

    /// Records a violation when `ok` is false.
    #[inline]
    pub fn expect(&mut self, ok: bool, check: &'static str, witness: &[usize]) {
        if !ok {
            self.record(check, witness);
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        for v in other.violations {
            match self.violations.iter_mut().find(|w| w.check == v.check) {
                Some(w) => w.count += v.count,
                None => self.violations.push(v),
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has(&self, check: &str) -> bool {
        self.violations.iter().any(|v| v.check == check)
    }

    pub fn into_result(self) -> crate::Result<()> {
        if self.passed() {
            Ok(())
        } else {
            Err(crate::Error::Axioms(self))
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "all checks passed");
        }
        for v in &self.violations {
            let w: Vec<String> = v.witness.iter().map(|x| x.to_string()).collect();
            writeln!(f, "violated {}: witness ({}) [{} total]", v.check, w.join(", "), v.count)?;
        }
        Ok(())
    }
}
