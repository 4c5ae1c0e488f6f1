//! Law reports.
//!
//! Every checker in the crate records its findings into a [`LawReport`]. A
//! report holds one entry per law id; each entry counts how many instances
//! were evaluated, how many failed, and keeps the lexicographically least
//! failing witness. Entries are keyed and ordered by law id, and merging two
//! reports is commutative, so the result never depends on evaluation order.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::catalogue;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub statement: String,
    pub instances: u64,
    pub failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl LawCheck {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn merge(&mut self, other: &LawCheck) {
        self.instances += other.instances;
        self.failures += other.failures;
        self.witness = match (self.witness.take(), &other.witness) {
            (Some(a), Some(b)) => Some(if *b < a { b.clone() } else { a }),
            (a, b) => a.or_else(|| b.clone()),
        };
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub laws: usize,
    pub passed: usize,
    pub failed: usize,
    pub instances: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    suite: String,
    checks: BTreeMap<String, LawCheck>,
    notes: Vec<String>,
}

impl LawReport {
    pub fn new(suite: impl Into<String>) -> Self {
        LawReport {
            suite: suite.into(),
            checks: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    pub fn suite(&self) -> &str {
        &self.suite
    }

    /// Record one instance of `law`. The witness closure only runs on failure.
    pub fn check<W, S>(&mut self, law: &str, holds: bool, witness: W) -> bool
    where
        W: FnOnce() -> S,
        S: Into<String>,
    {
        let entry = self
            .checks
            .entry(law.to_string())
            .or_insert_with(|| LawCheck {
                law: law.to_string(),
                statement: catalogue::statement(law).unwrap_or("").to_string(),
                instances: 0,
                failures: 0,
                witness: None,
            });
        entry.instances += 1;
        if !holds {
            entry.failures += 1;
            let w = witness().into();
            match &entry.witness {
                Some(old) if *old <= w => {}
                _ => entry.witness = Some(w),
            }
        }
        holds
    }

    /// Record a law that passed on every one of `count` instances.
    pub fn pass_many(&mut self, law: &str, count: u64) {
        self.check(law, true, String::new);
        if let Some(entry) = self.checks.get_mut(law) {
            entry.instances += count.saturating_sub(1);
        }
    }

    /// Record a batch of instances counted elsewhere, with the least witness.
    pub fn record(&mut self, law: &str, instances: u64, failures: u64, witness: Option<String>) {
        if instances == 0 {
            return;
        }
        let mut batch = LawReport::new("");
        batch.checks.insert(
            law.to_string(),
            LawCheck {
                law: law.to_string(),
                statement: catalogue::statement(law).unwrap_or("").to_string(),
                instances,
                failures,
                witness: if failures > 0 { witness } else { None },
            },
        );
        self.absorb(batch);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Fold `other` into `self`, keeping this report's suite name.
    pub fn absorb(&mut self, other: LawReport) {
        for (law, check) in other.checks {
            match self.checks.get_mut(&law) {
                Some(mine) => mine.merge(&check),
                None => {
                    self.checks.insert(law, check);
                }
            }
        }
        self.notes.extend(other.notes);
        self.notes.sort();
        self.notes.dedup();
    }

    pub fn checks(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.values()
    }

    pub fn get(&self, law: &str) -> Option<&LawCheck> {
        self.checks.get(law)
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn passed(&self) -> bool {
        self.checks.values().all(LawCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.values().filter(|c| !c.passed())
    }

    pub fn summary(&self) -> Summary {
        let failed = self.failures().count();
        Summary {
            laws: self.checks.len(),
            passed: self.checks.len() - failed,
            failed,
            instances: self.checks.values().map(|c| c.instances).sum(),
        }
    }

    /// Panics with the failing entries. Used by tests and by suites that
    /// chain on a result that must hold.
    #[track_caller]
    pub fn assert_passed(&self) {
        if !self.passed() {
            panic!("law report {} failed:\n{}", self.suite, self);
        }
    }
}

impl Serialize for LawReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let checks: Vec<&LawCheck> = self.checks.values().collect();
        let mut s = serializer.serialize_struct("LawReport", 4)?;
        s.serialize_field("suite", &self.suite)?;
        s.serialize_field("checks", &checks)?;
        s.serialize_field("notes", &self.notes)?;
        s.serialize_field("summary", &self.summary())?;
        s.end()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite: {}", self.suite)?;
        let width = self.checks.keys().map(|k| k.len()).max().unwrap_or(0);
        for check in self.checks.values() {
            let status = if check.passed() { "PASS" } else { "FAIL" };
            write!(
                f,
                "  {status}  {:<width$}  {:>8} checked",
                check.law, check.instances
            )?;
            if let Some(w) = &check.witness {
                write!(f, "  {} failed, witness: {w}", check.failures)?;
            }
            writeln!(f)?;
        }
        for note in &self.notes {
            writeln!(f, "  note: {note}")?;
        }
        let s = self.summary();
        write!(
            f,
            "summary: {} laws, {} passed, {} failed, {} instances",
            s.laws, s.passed, s.failed, s.instances
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_is_least_and_merge_is_order_free() {
        let mut a = LawReport::new("x");
        a.check("core.compose.assoc", false, || "c");
        a.check("core.compose.assoc", false, || "b");
        a.check("core.compose.assoc", true, || "a");
        let mut b = LawReport::new("x");
        b.check("core.compose.assoc", false, || "a");

        let mut ab = a.clone();
        ab.absorb(b.clone());
        let mut ba = b;
        ba.absorb(a);
        assert_eq!(ab, ba);
        let check = ab.get("core.compose.assoc").unwrap();
        assert_eq!(check.witness.as_deref(), Some("a"));
        assert_eq!((check.instances, check.failures), (4, 3));
    }

    #[test]
    fn witness_present_iff_fail() {
        let mut r = LawReport::new("x");
        r.check("core.compose.assoc", true, || "never");
        r.pass_many("core.compose.identity", 5);
        assert!(r.passed());
        assert!(r.checks().all(|c| c.witness.is_none()));
        assert_eq!(r.get("core.compose.identity").unwrap().instances, 5);
    }
}
