//! Multivariate polynomials with nonnegative integer coefficients.
//!
//! A polynomial is the number of variables it ranges over plus a sparse list
//! of monomials. Every constructor returns the canonical form, so two
//! polynomials are equal as values iff they are equal as functions.
//! Coefficients are nonnegative, hence every polynomial is monotone in each
//! argument. Arithmetic saturates at `u64::MAX`; a saturated result is still
//! an upper bound of the exact one.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};

/// `coefficient · Π x_var^power`, factors sorted by variable, powers ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    coefficient: u64,
    factors: Vec<(usize, u32)>,
}

impl Monomial {
    pub fn coefficient(&self) -> u64 {
        self.coefficient
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u64 {
        self.factors.iter().map(|&(_, p)| p as u64).sum()
    }

    fn eval(&self, values: &[u64]) -> u64 {
        self.factors.iter().fold(self.coefficient, |acc, &(v, p)| {
            acc.saturating_mul(values[v].saturating_pow(p))
        })
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial {
            coefficient: self.coefficient.saturating_mul(other.coefficient),
            factors: normalize_factors(factors),
        }
    }
}

fn normalize_factors(mut factors: Vec<(usize, u32)>) -> Vec<(usize, u32)> {
    factors.retain(|&(_, p)| p > 0);
    factors.sort_unstable_by_key(|&(v, _)| v);
    let mut out: Vec<(usize, u32)> = Vec::with_capacity(factors.len());
    for (v, p) in factors {
        match out.last_mut() {
            Some((lv, lp)) if *lv == v => *lp = lp.saturating_add(p),
            _ => out.push((v, p)),
        }
    }
    out
}

// Descending degree; within a degree, fewer distinct variables first, then
// lower variable indices (and higher powers) first.
fn monomial_order(a: &[(usize, u32)], b: &[(usize, u32)]) -> Ordering {
    let degree = |f: &[(usize, u32)]| f.iter().map(|&(_, p)| p as u64).sum::<u64>();
    degree(b)
        .cmp(&degree(a))
        .then_with(|| a.len().cmp(&b.len()))
        .then_with(|| {
            for (&(va, pa), &(vb, pb)) in a.iter().zip(b) {
                let c = va.cmp(&vb).then_with(|| pb.cmp(&pa));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
}

/// Polynomial over the variables `x0 .. x{num_vars-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    num_vars: usize,
    monomials: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    IndexOutOfRange { index: usize, num_vars: usize },
    VariableCountMismatch { left: usize, right: usize },
    ArityMismatch { expected: usize, found: usize },
    InjectShrinks { from: usize, to: usize },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::IndexOutOfRange { index, num_vars } => write!(
                f,
                "variable x{index} out of range for a polynomial over {num_vars} variables"
            ),
            PolyError::VariableCountMismatch { left, right } => write!(
                f,
                "polynomials over {left} and {right} variables cannot be combined"
            ),
            PolyError::ArityMismatch { expected, found } => {
                write!(f, "expected {expected} arguments, found {found}")
            }
            PolyError::InjectShrinks { from, to } => write!(
                f,
                "cannot inject a polynomial over {from} variables into {to} variables"
            ),
        }
    }
}

impl core::error::Error for PolyError {}

impl MPoly {
    pub fn zero(num_vars: usize) -> MPoly {
        MPoly {
            num_vars,
            monomials: Vec::new(),
        }
    }

    pub fn constant(num_vars: usize, c: u64) -> MPoly {
        MPoly::from_canonical_parts(num_vars, vec![(c, Vec::new())])
    }

    pub fn variable(num_vars: usize, index: usize) -> Result<MPoly, PolyError> {
        if index >= num_vars {
            return Err(PolyError::IndexOutOfRange { index, num_vars });
        }
        Ok(MPoly::from_canonical_parts(num_vars, vec![(1, vec![(index, 1)])]))
    }

    /// Builds a polynomial from `(coefficient, [(variable, power)])` terms,
    /// in any order and with repetitions; the result is canonical.
    pub fn from_terms<I>(num_vars: usize, terms: I) -> Result<MPoly, PolyError>
    where
        I: IntoIterator<Item = (u64, Vec<(usize, u32)>)>,
    {
        let terms: Vec<_> = terms.into_iter().collect();
        for (_, factors) in &terms {
            if let Some(&(index, _)) = factors.iter().find(|&&(v, _)| v >= num_vars) {
                return Err(PolyError::IndexOutOfRange { index, num_vars });
            }
        }
        Ok(MPoly::from_canonical_parts(num_vars, terms))
    }

    fn from_canonical_parts(num_vars: usize, terms: Vec<(u64, Vec<(usize, u32)>)>) -> MPoly {
        let mut monomials: Vec<Monomial> = terms
            .into_iter()
            .filter(|(c, _)| *c != 0)
            .map(|(coefficient, factors)| Monomial {
                coefficient,
                factors: normalize_factors(factors),
            })
            .collect();
        MPoly::canonicalize(&mut monomials);
        MPoly {
            num_vars,
            monomials,
        }
    }

    fn canonicalize(monomials: &mut Vec<Monomial>) {
        monomials.sort_by(|a, b| monomial_order(&a.factors, &b.factors));
        let mut merged: Vec<Monomial> = Vec::with_capacity(monomials.len());
        for m in monomials.drain(..) {
            match merged.last_mut() {
                Some(last) if last.factors == m.factors => {
                    last.coefficient = last.coefficient.saturating_add(m.coefficient)
                }
                _ => merged.push(m),
            }
        }
        merged.retain(|m| m.coefficient != 0);
        *monomials = merged;
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.monomials.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The constant term.
    pub fn constant_term(&self) -> u64 {
        self.monomials
            .iter()
            .find(|m| m.factors.is_empty())
            .map_or(0, |m| m.coefficient)
    }

    fn same_vars(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.num_vars != other.num_vars {
            return Err(PolyError::VariableCountMismatch {
                left: self.num_vars,
                right: other.num_vars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_vars(other)?;
        let mut monomials = self.monomials.clone();
        monomials.extend(other.monomials.iter().cloned());
        MPoly::canonicalize(&mut monomials);
        Ok(MPoly {
            num_vars: self.num_vars,
            monomials,
        })
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.same_vars(other)?;
        let mut monomials = Vec::with_capacity(self.monomials.len() * other.monomials.len());
        for a in &self.monomials {
            for b in &other.monomials {
                monomials.push(a.times(b));
            }
        }
        MPoly::canonicalize(&mut monomials);
        Ok(MPoly {
            num_vars: self.num_vars,
            monomials,
        })
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: u64) -> MPoly {
        let mut monomials: Vec<Monomial> = self
            .monomials
            .iter()
            .map(|m| Monomial {
                coefficient: m.coefficient.saturating_mul(k),
                factors: m.factors.clone(),
            })
            .collect();
        monomials.retain(|m| m.coefficient != 0);
        MPoly {
            num_vars: self.num_vars,
            monomials,
        }
    }

    /// Sum of polynomials sharing `num_vars`; the empty sum is zero.
    pub fn sum<'a, I>(num_vars: usize, polys: I) -> Result<MPoly, PolyError>
    where
        I: IntoIterator<Item = &'a MPoly>,
    {
        let mut monomials = Vec::new();
        for p in polys {
            if p.num_vars != num_vars {
                return Err(PolyError::VariableCountMismatch {
                    left: num_vars,
                    right: p.num_vars,
                });
            }
            monomials.extend(p.monomials.iter().cloned());
        }
        MPoly::canonicalize(&mut monomials);
        Ok(MPoly {
            num_vars,
            monomials,
        })
    }

    fn pow(&self, mut e: u32) -> MPoly {
        let mut acc = MPoly::constant(self.num_vars, 1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same variable count");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same variable count");
            }
        }
        acc
    }

    /// `P(Q̄)`: substitutes `args[i]` for `x_i`. All of `args` must range
    /// over one common variable count, which becomes the result's.
    ///
    /// With no arguments the result variable count is `target_vars`.
    pub fn compose_with(&self, args: &[MPoly], target_vars: usize) -> Result<MPoly, PolyError> {
        if args.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                found: args.len(),
            });
        }
        for q in args {
            if q.num_vars != target_vars {
                return Err(PolyError::VariableCountMismatch {
                    left: target_vars,
                    right: q.num_vars,
                });
            }
        }
        let mut monomials = Vec::new();
        for m in &self.monomials {
            let mut term = MPoly::constant(target_vars, m.coefficient);
            for &(v, p) in &m.factors {
                term = term.mul(&args[v].pow(p)).expect("same variable count");
            }
            monomials.extend(term.monomials);
        }
        MPoly::canonicalize(&mut monomials);
        Ok(MPoly {
            num_vars: target_vars,
            monomials,
        })
    }

    /// `P(Q̄)` with the target variable count taken from `args`; a
    /// polynomial over zero variables composed with nothing stays over zero.
    pub fn compose(&self, args: &[MPoly]) -> Result<MPoly, PolyError> {
        let target = args.first().map_or(0, MPoly::num_vars);
        self.compose_with(args, target)
    }

    /// Reinterprets this polynomial over `n >= num_vars` variables.
    pub fn inject(&self, n: usize) -> Result<MPoly, PolyError> {
        if n < self.num_vars {
            return Err(PolyError::InjectShrinks {
                from: self.num_vars,
                to: n,
            });
        }
        Ok(MPoly {
            num_vars: n,
            monomials: self.monomials.clone(),
        })
    }

    /// Renames every `x_i` to `x_{i+1}`, adding one leading variable.
    pub fn shift(&self) -> MPoly {
        let mut monomials: Vec<Monomial> = self
            .monomials
            .iter()
            .map(|m| Monomial {
                coefficient: m.coefficient,
                factors: m.factors.iter().map(|&(v, p)| (v + 1, p)).collect(),
            })
            .collect();
        MPoly::canonicalize(&mut monomials);
        MPoly {
            num_vars: self.num_vars + 1,
            monomials,
        }
    }

    pub fn eval(&self, values: &[u64]) -> Result<u64, PolyError> {
        if values.len() != self.num_vars {
            return Err(PolyError::ArityMismatch {
                expected: self.num_vars,
                found: values.len(),
            });
        }
        Ok(self
            .monomials
            .iter()
            .fold(0u64, |acc, m| acc.saturating_add(m.eval(values))))
    }

    /// `[P]`: every variable replaced by the single variable `x`.
    pub fn univariate_collapse(&self) -> UPoly {
        let mut coefficients: Vec<u64> = Vec::new();
        for m in &self.monomials {
            let d = m.degree() as usize;
            if coefficients.len() <= d {
                coefficients.resize(d + 1, 0);
            }
            coefficients[d] = coefficients[d].saturating_add(m.coefficient);
        }
        UPoly::new(coefficients)
    }

    /// Canonical text: `c*x0^2*x1 + ... + k`, `0` for the zero polynomial.
    pub fn print_canonical(&self) -> String {
        let mut out = String::new();
        let _ = write!(out, "{self}");
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (k, m) in self.monomials.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut first = true;
            if m.coefficient != 1 || m.factors.is_empty() {
                write!(f, "{}", m.coefficient)?;
                first = false;
            }
            for &(v, p) in &m.factors {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                write!(f, "x{v}")?;
                if p != 1 {
                    write!(f, "^{p}")?;
                }
            }
        }
        Ok(())
    }
}

/// Univariate polynomial in `x`, coefficients indexed by power.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coefficients: Vec<u64>,
}

impl UPoly {
    pub fn new(mut coefficients: Vec<u64>) -> UPoly {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        UPoly { coefficients }
    }

    pub fn constant(c: u64) -> UPoly {
        UPoly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> UPoly {
        UPoly::new(vec![0, 1])
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc.saturating_mul(x).saturating_add(c))
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coefficients.len().max(other.coefficients.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coefficients.get(i).copied().unwrap_or(0);
                    let b = other.coefficients.get(i).copied().unwrap_or(0);
                    a.saturating_add(b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.coefficients.is_empty() || other.coefficients.is_empty() {
            return UPoly::default();
        }
        let mut out = vec![0u64; self.coefficients.len() + other.coefficients.len() - 1];
        for (i, &a) in self.coefficients.iter().enumerate() {
            for (j, &b) in other.coefficients.iter().enumerate() {
                out[i + j] = out[i + j].saturating_add(a.saturating_mul(b));
            }
        }
        UPoly::new(out)
    }

    pub fn scale(&self, k: u64) -> UPoly {
        UPoly::new(self.coefficients.iter().map(|c| c.saturating_mul(k)).collect())
    }

    /// `self(p(x))`.
    pub fn compose(&self, p: &UPoly) -> UPoly {
        self.coefficients
            .iter()
            .rev()
            .fold(UPoly::default(), |acc, &c| acc.mul(p).add(&UPoly::constant(c)))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, &c) in self.coefficients.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (power, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}*x")?,
                (p, 1) => write!(f, "x^{p}")?,
                (p, c) => write!(f, "{c}*x^{p}")?,
            }
        }
        Ok(())
    }
}
