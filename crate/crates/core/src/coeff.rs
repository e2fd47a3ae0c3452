//! Exact scalar arithmetic: multivariate polynomials over the rationals
//! in a finite set of named parameters (`lam`, `c`, ...).
//!
//! This is the ground ring for everything else. Zero is the empty
//! monomial map and equality is canonical-form equality, so no
//! normalisation pass is ever needed after an operation.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A power product of parameters, e.g. `lam^2 * c`. Exponents are
/// always nonzero; the empty map is the constant monomial 1.
pub type ParamMonomial = BTreeMap<String, u32>;

/// An exact multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coefficient {
    terms: BTreeMap<ParamMonomial, BigRational>,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::default()
    }

    pub fn one() -> Self {
        Coefficient::from_rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Coefficient::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(ParamMonomial::new(), r);
        }
        Coefficient { terms }
    }

    /// The parameter `name` as a degree-one monomial.
    pub fn param(name: &str) -> Self {
        let mut mono = ParamMonomial::new();
        mono.insert(name.to_string(), 1);
        let mut terms = BTreeMap::new();
        terms.insert(mono, BigRational::one());
        Coefficient { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ParamMonomial::new())
                .map_or(false, |r| r.is_one())
    }

    pub fn add(&self, other: &Coefficient) -> Coefficient {
        let mut terms = self.terms.clone();
        for (mono, r) in &other.terms {
            let entry = terms.entry(mono.clone()).or_insert_with(BigRational::zero);
            *entry += r;
            if entry.is_zero() {
                terms.remove(mono);
            }
        }
        Coefficient { terms }
    }

    /// In-place addition, avoiding the clone in `add`.
    pub fn add_assign(&mut self, other: &Coefficient) {
        for (mono, r) in &other.terms {
            let entry = self.terms.entry(mono.clone()).or_insert_with(BigRational::zero);
            *entry += r;
            if entry.is_zero() {
                self.terms.remove(mono);
            }
        }
    }

    pub fn neg(&self) -> Coefficient {
        let terms = self
            .terms
            .iter()
            .map(|(m, r)| (m.clone(), -r.clone()))
            .collect();
        Coefficient { terms }
    }

    pub fn sub(&self, other: &Coefficient) -> Coefficient {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        let mut terms: BTreeMap<ParamMonomial, BigRational> = BTreeMap::new();
        for (ma, ra) in &self.terms {
            for (mb, rb) in &other.terms {
                let mut mono = ma.clone();
                for (name, e) in mb {
                    *mono.entry(name.clone()).or_insert(0) += e;
                }
                let entry = terms.entry(mono).or_insert_with(BigRational::zero);
                *entry += ra * rb;
                if entry.is_zero() {
                    let key = {
                        let mut mono = ma.clone();
                        for (name, e) in mb {
                            *mono.entry(name.clone()).or_insert(0) += e;
                        }
                        mono
                    };
                    terms.remove(&key);
                }
            }
        }
        Coefficient { terms }
    }

    /// Substitute rational values for some (or all) parameters.
    pub fn specialize(&self, values: &BTreeMap<String, BigRational>) -> Coefficient {
        let mut out = Coefficient::zero();
        for (mono, r) in &self.terms {
            let mut scalar = r.clone();
            let mut rest = ParamMonomial::new();
            for (name, e) in mono {
                match values.get(name) {
                    Some(v) => {
                        for _ in 0..*e {
                            scalar *= v;
                        }
                    }
                    None => {
                        rest.insert(name.clone(), *e);
                    }
                }
            }
            let mut term = BTreeMap::new();
            if !scalar.is_zero() {
                term.insert(rest, scalar);
            }
            out = out.add(&Coefficient { terms: term });
        }
        out
    }

    /// Parameter names appearing in this coefficient.
    pub fn params(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.keys().cloned())
            .collect();
        names.sort();
        names.dedup();
        names
    }

    /// Iterate (monomial, rational) pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&ParamMonomial, &BigRational)> {
        self.terms.iter()
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, r) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", r)?;
            for (name, e) in mono {
                write!(f, "*{}^{}", name, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn param_arithmetic() {
        let lam = Coefficient::param("lam");
        let one = Coefficient::one();
        // (lam * x) + (1 * x) has coefficient lam + 1
        let sum = lam.add(&one);
        assert!(!sum.is_zero());
        assert_eq!(sum.sub(&lam), one);
    }

    #[test]
    fn cancellation_is_exact() {
        let lam = Coefficient::param("lam");
        assert!(lam.sub(&lam).is_zero());
        let p = lam.mul(&lam).add(&Coefficient::from_integer(3));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn scale_by_zero() {
        let lam = Coefficient::param("lam");
        assert!(lam.mul(&Coefficient::zero()).is_zero());
    }

    #[test]
    fn specialization() {
        let mut vals = BTreeMap::new();
        vals.insert("lam".to_string(), BigRational::from_integer(2.into()));
        let lam = Coefficient::param("lam");
        assert_eq!(lam.specialize(&vals), Coefficient::from_integer(2));
        let c = Coefficient::param("c");
        assert_eq!(c.specialize(&vals), c);
    }
}
