//! Linear algebra of bracketed polynomials: the free module on words
//! with the exact parameter-polynomial scalars, plus the operations
//! that lift word-level structure linearly — concatenation product,
//! bracket application, hole substitution, and variable evaluation.

use crate::coeff::Coefficient;
use crate::words::{Atom, StarWord, TwoStarWord, Word};
use std::collections::BTreeMap;
use std::fmt;

/// A finite linear combination of bracketed words; no stored
/// coefficient is zero. Terms are kept sorted by the word order.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Word, Coefficient>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    /// The unit word 1 with coefficient 1.
    pub fn one() -> Poly {
        Poly::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Poly {
        Poly::from_term(w, Coefficient::one())
    }

    pub fn from_term(w: Word, c: Coefficient) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending word order.
    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff_of(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            let entry = terms.entry(w.clone()).or_insert_with(Coefficient::zero);
            *entry = entry.add(c);
            if entry.is_zero() {
                terms.remove(w);
            }
        }
        Poly { terms }
    }

    /// In-place `self += a * other`, avoiding the intermediate clones
    /// of `add`/`scale`; this is the hot path of reduction.
    pub fn add_scaled_assign(&mut self, other: &Poly, a: &Coefficient) {
        if a.is_zero() {
            return;
        }
        for (w, c) in &other.terms {
            let p = c.mul(a);
            if p.is_zero() {
                continue;
            }
            let entry = self.terms.entry(w.clone()).or_insert_with(Coefficient::zero);
            entry.add_assign(&p);
            if entry.is_zero() {
                self.terms.remove(w);
            }
        }
    }

    pub fn neg(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), c.neg()))
            .collect();
        Poly { terms }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, a: &Coefficient) -> Poly {
        let mut terms = BTreeMap::new();
        if a.is_zero() {
            return Poly { terms };
        }
        for (w, c) in &self.terms {
            let p = c.mul(a);
            if !p.is_zero() {
                terms.insert(w.clone(), p);
            }
        }
        Poly { terms }
    }

    /// Bilinear extension of word concatenation.
    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out = out.add(&Poly::from_term(u.concat(v), a.mul(b)));
            }
        }
        out
    }

    /// Wrap every monomial in one bracket, linearly. Sends 0 to 0.
    pub fn apply_p(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (Word::bracket(w.clone()), c.clone()))
            .collect();
        Poly { terms }
    }

    /// Split off the coefficient of `w`: f = coeff·w + complement with
    /// w outside the complement's support.
    pub fn support_and_complement(&self, w: &Word) -> (Coefficient, Poly) {
        let mut terms = self.terms.clone();
        let coeff = terms.remove(w).unwrap_or_else(Coefficient::zero);
        (coeff, Poly { terms })
    }

    /// Greatest monomial with its coefficient and the rest of f.
    pub fn leading(&self) -> Result<(Word, Coefficient, Poly), String> {
        let (w, c) = self
            .terms
            .iter()
            .next_back()
            .ok_or_else(|| "no leading term of the zero polynomial".to_string())?;
        let (w, c) = (w.clone(), c.clone());
        let mut terms = self.terms.clone();
        terms.remove(&w);
        Ok((w, c, Poly { terms }))
    }

    /// Greatest monomial failing the predicate, if any.
    pub fn leading_reducible(&self, is_irreducible: impl Fn(&Word) -> bool) -> Option<Word> {
        self.terms
            .keys()
            .rev()
            .find(|w| !is_irreducible(w))
            .cloned()
    }

    /// True when every monomial is in normal form.
    pub fn is_rbnf(&self) -> bool {
        self.terms.keys().all(|w| w.is_rbnf())
    }

    /// Substitute values for scalar parameters in every coefficient.
    pub fn specialize(&self, values: &BTreeMap<String, num_rational::BigRational>) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out = out.add(&Poly::from_term(w.clone(), c.specialize(values)));
        }
        out
    }

    /// Parameter names used by any coefficient.
    pub fn params(&self) -> Vec<String> {
        let mut names: Vec<String> = self.terms.values().flat_map(|c| c.params()).collect();
        names.sort();
        names.dedup();
        names
    }

    /// Generator names occurring in any monomial.
    pub fn letters(&self) -> Vec<String> {
        let mut names: Vec<String> = self.terms.keys().flat_map(|w| w.letters()).collect();
        names.sort();
        names.dedup();
        names
    }
}

/// Linear extension of one-hole substitution.
pub fn substitute(q: &StarWord, s: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (w, c) in s.iter() {
        out = out.add(&Poly::from_term(q.substitute(w), c.clone()));
    }
    out
}

/// Bilinear extension of two-hole substitution.
pub fn substitute2(q: &TwoStarWord, s1: &Poly, s2: &Poly) -> Poly {
    let mut out = Poly::zero();
    for (w1, c1) in s1.iter() {
        for (w2, c2) in s2.iter() {
            out = out.add(&Poly::from_term(q.substitute(w1, w2), c1.mul(c2)));
        }
    }
    out
}

/// The unique operated-algebra morphism sending each variable letter
/// to its assigned polynomial: multiplicative over concatenation,
/// commuting with brackets, linear over terms.
pub fn evaluate(phi: &Poly, assignment: &BTreeMap<String, Poly>) -> Result<Poly, String> {
    fn eval_word(w: &Word, assignment: &BTreeMap<String, Poly>) -> Result<Poly, String> {
        let mut acc = Poly::one();
        for a in &w.0 {
            let factor = match a {
                Atom::Letter(g) => assignment
                    .get(g)
                    .cloned()
                    .ok_or_else(|| format!("unassigned variable: {}", g))?,
                Atom::Bracket(inner) => eval_word(inner, assignment)?.apply_p(),
                Atom::Star(i) => return Err(format!("cannot evaluate a hole: *{}", i)),
            };
            acc = acc.mul(&factor);
        }
        Ok(acc)
    }
    let mut out = Poly::zero();
    for (w, c) in phi.iter() {
        out = out.add(&eval_word(w, assignment)?.scale(c));
    }
    Ok(out)
}

/// Terms printed in descending word order; each scalar expanded into
/// one signed term per parameter monomial so output re-parses exactly.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::{One, Signed};
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            for (mono, r) in c.iter() {
                let negative = r.is_negative();
                if first {
                    if negative {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if negative {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mag = r.abs();
                let mut parts: Vec<String> = Vec::new();
                if !mag.is_one() {
                    parts.push(mag.to_string());
                }
                for (name, e) in mono {
                    for _ in 0..*e {
                        parts.push(name.clone());
                    }
                }
                if w.is_unit() && parts.is_empty() {
                    write!(f, "1")?;
                } else if w.is_unit() {
                    write!(f, "{}*1", parts.join("*"))?;
                } else if parts.is_empty() {
                    write!(f, "{}", w)?;
                } else {
                    write!(f, "{}*{}", parts.join("*"), w)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
