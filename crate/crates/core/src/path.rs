//! Addresses of subterms, used to point diagnostics at the offending node.

use alloc::vec::Vec;
use core::fmt;

/// One edge from a node to one of its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// The function being composed into (`h` of a composition).
    Head,
    /// An argument of a Cobham composition.
    Arg(usize),
    /// A normal argument of a Bellantoni-Cook composition.
    Normal(usize),
    /// A safe argument of a Bellantoni-Cook composition.
    Safe(usize),
    /// The base case `g` of a recursion.
    Base,
    /// The step function for a `0` bit.
    Step0,
    /// The step function for a `1` bit.
    Step1,
    /// The bounding function `j` of a Cobham recursion.
    Bound,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Head => f.write_str("h"),
            Step::Arg(k) => write!(f, "g[{k}]"),
            Step::Normal(k) => write!(f, "gN[{k}]"),
            Step::Safe(k) => write!(f, "gS[{k}]"),
            Step::Base => f.write_str("g"),
            Step::Step0 => f.write_str("h0"),
            Step::Step1 => f.write_str("h1"),
            Step::Bound => f.write_str("j"),
        }
    }
}

/// A path from the root of an expression down to a subterm.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermPath(pub Vec<Step>);

impl TermPath {
    pub fn root() -> TermPath {
        TermPath(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn child(&self, step: Step) -> TermPath {
        let mut steps = self.0.clone();
        steps.push(step);
        TermPath(steps)
    }
}

impl From<&[Step]> for TermPath {
    fn from(steps: &[Step]) -> Self {
        TermPath(steps.to_vec())
    }
}

impl fmt::Display for TermPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("<root>");
        }
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("/")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
