//! Composition checks for the rule family: the critical-pair analogue
//! for leading words that overlap ([u][v][s]) or nest (one rule's
//! leading word inside another's), plus the triviality test that
//! certifies a composition by rewriting it to zero below a bound.

use crate::order::cmp_db;
use crate::poly::{self, Poly};
use crate::rewrite::{normal_form, OpiSpec};
use crate::words::{StarWord, Word};
use std::cmp::Ordering;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompositionKind {
    Intersection,
    Inclusion,
}

/// Which argument of the outer rule instance hosts the inner one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A composition of two rule instances f and g with a common ambient
/// word bounding it.
#[derive(Clone, Debug)]
pub struct Composition {
    pub kind: CompositionKind,
    pub f: Poly,
    pub g: Poly,
    pub ambient: Word,
    pub value: Poly,
}

/// The overlap composition: the leading words of f = phi(u,v) and
/// g = phi(v,s) share the middle bracket inside the ambient word
/// [u][v][s]; the value is f*[s] - [u]*g.
pub fn intersection_composition(u: &Word, v: &Word, s: &Word, phi: &OpiSpec) -> Composition {
    let f = phi.phi_at(u, v);
    let g = phi.phi_at(v, s);
    let mu = Poly::from_word(Word::bracket(s.clone()));
    let nu = Poly::from_word(Word::bracket(u.clone()));
    let ambient = Word::bracket(u.clone())
        .concat(&Word::bracket(v.clone()))
        .concat(&Word::bracket(s.clone()));
    let value = f.mul(&mu).sub(&nu.mul(&g));
    Composition {
        kind: CompositionKind::Intersection,
        f,
        g,
        ambient,
        value,
    }
}

/// The nesting composition: the inner rule's leading word [r][s] sits
/// inside one argument of the outer rule via the context `qprime`;
/// the value is f - q(g) for the composed context q.
pub fn inclusion_composition(
    side: Side,
    qprime: &StarWord,
    r: &Word,
    s: &Word,
    other: &Word,
    phi: &OpiSpec,
) -> Result<Composition, String> {
    let inner_lhs = Word::bracket(r.clone()).concat(&Word::bracket(s.clone()));
    let host = qprime.substitute(&inner_lhs);
    let g = phi.phi_at(r, s);
    let (f, q) = match side {
        Side::Left => {
            let f = phi.phi_at(&host, other);
            let q_word = Word::bracket(qprime.word().clone())
                .concat(&Word::bracket(other.clone()));
            (f, StarWord::new(q_word)?)
        }
        Side::Right => {
            let f = phi.phi_at(other, &host);
            let q_word = Word::bracket(other.clone())
                .concat(&Word::bracket(qprime.word().clone()));
            (f, StarWord::new(q_word)?)
        }
    };
    if f == g {
        return Err("degenerate composition: the two rule instances coincide".to_string());
    }
    let ambient = q.substitute(&inner_lhs);
    let value = f.sub(&poly::substitute(&q, &g));
    Ok(Composition {
        kind: CompositionKind::Inclusion,
        f,
        g,
        ambient,
        value,
    })
}

/// Outcome of the triviality test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Triviality {
    Trivial,
    NotTrivial,
    /// The leading word does not lie strictly below the bound, so the
    /// reduce-to-zero certificate does not apply.
    BoundViolated,
    Indeterminate,
}

/// Certify that h is trivial modulo the bound w: its leading word
/// must sit strictly below w and it must rewrite to zero.
pub fn is_trivial_mod(h: &Poly, w: &Word, phi: &OpiSpec, fuel: usize) -> Triviality {
    if h.is_zero() {
        return Triviality::Trivial;
    }
    let (lead, _, _) = h.leading().expect("nonzero polynomial");
    if cmp_db(&lead, w) != Ordering::Less {
        return Triviality::BoundViolated;
    }
    match normal_form(h, phi, fuel) {
        Ok(nf) => {
            if nf.is_zero() {
                Triviality::Trivial
            } else {
                Triviality::NotTrivial
            }
        }
        Err(_) => Triviality::Indeterminate,
    }
}

/// Words outside every rule's reach: exactly the normal-form words.
pub fn irr_membership(u: &Word) -> bool {
    u.is_rbnf()
}
