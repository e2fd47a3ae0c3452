//! The Rota-Baxter-type verdict. A kernel B passes when it is totally
//! linear in x and y, its monomials are in normal form, it is
//! compatible with the monomial order (so rewriting terminates), and
//! the associativity defect B(B(u,v),w) - B(u,B(v,w)) rewrites to
//! zero. Ships the built-in catalog of the fourteen known kernels.

use crate::order::{compatible_with_db, Compatibility};
use crate::parse::parse_polynomial;
use crate::poly::Poly;
use crate::rewrite::{normal_form, OpiSpec};
use crate::words::Word;

/// Overall outcome for one kernel.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    RotaBaxterType,
    NotRotaBaxterType,
    Indeterminate,
}

/// The individual condition results behind a verdict.
#[derive(Clone, Debug)]
pub struct RbTypeReport {
    pub totally_linear: bool,
    pub b_in_rbnf: bool,
    pub compatibility: Compatibility,
    /// Normal form of the associativity defect; None if reduction ran
    /// out of fuel.
    pub assoc_defect_nf: Option<Poly>,
    pub verdict: Verdict,
}

/// True when x and y each occur exactly once in every monomial of B,
/// counted through all bracket levels, and no other letter occurs.
pub fn is_totally_linear(phi: &OpiSpec) -> bool {
    phi.b.iter().all(|(w, _)| {
        w.letter_count("x") == 1
            && w.letter_count("y") == 1
            && w.letters().iter().all(|g| g == "x" || g == "y")
    })
}

/// B(B(u,v),w) - B(u,B(v,w)) over three fresh generators u < v < w.
/// Total linearity makes this generic instance decisive; no reduction
/// is applied here.
pub fn associativity_defect(phi: &OpiSpec) -> Poly {
    let (u, v, w) = (Word::letter("u"), Word::letter("v"), Word::letter("w"));
    let left = phi.b_at_poly(&phi.b_at(&u, &v), &Poly::from_word(w.clone()));
    let right = phi.b_at_poly(&Poly::from_word(u), &phi.b_at(&v, &w));
    left.sub(&right)
}

/// Evaluate all four conditions.
pub fn rota_baxter_report(phi: &OpiSpec, fuel: usize) -> RbTypeReport {
    let totally_linear = is_totally_linear(phi);
    let b_in_rbnf = phi.b.is_rbnf();
    let compatibility = compatible_with_db(&phi.b);
    let assoc_defect_nf = normal_form(&associativity_defect(phi), phi, fuel).ok();
    let verdict = if !totally_linear || !b_in_rbnf {
        Verdict::NotRotaBaxterType
    } else if compatibility == Compatibility::Unknown {
        // Termination is unproven; even a vanishing defect is not a
        // certificate, and a non-vanishing one is strategy-dependent.
        Verdict::Indeterminate
    } else {
        match &assoc_defect_nf {
            Some(nf) if nf.is_zero() => Verdict::RotaBaxterType,
            Some(_) => Verdict::NotRotaBaxterType,
            None => Verdict::Indeterminate,
        }
    };
    RbTypeReport {
        totally_linear,
        b_in_rbnf,
        compatibility,
        assoc_defect_nf,
        verdict,
    }
}

/// The fourteen known Rota-Baxter-type kernels, keyed a-n. Scalar
/// parameters lam and c stay symbolic.
pub fn catalog() -> Vec<OpiSpec> {
    const ENTRIES: [(&str, &str); 14] = [
        ("a", "x [y]"),
        ("b", "[x] y"),
        ("c", "x [y] + y [x]"),
        ("d", "[x] y + [y] x"),
        ("e", "x [y] + [x] y - [x y]"),
        ("f", "x [y] + [x] y + lam*x y"),
        ("g", "x [y] - x [1] y + lam*x y"),
        ("h", "[x] y - x [1] y + lam*x y"),
        ("i", "x [y] + [x] y - x [1] y + lam*x y"),
        ("j", "x [y] + [x] y - x y [1] - x [1] y + lam*x y"),
        ("k", "x [y] + [x] y - x [1] y - [x y] + lam*x y"),
        ("l", "x [y] + [x] y - x [1] y - [1] x y + lam*x y"),
        ("m", "c*x [1] y + lam*x y"),
        ("n", "c*y [1] x + lam*y x"),
    ];
    ENTRIES
        .iter()
        .map(|(key, text)| {
            OpiSpec::new(key, parse_polynomial(text).expect("catalog entry parses"))
                .expect("catalog entry is a valid kernel")
        })
        .collect()
}

/// Descriptive aliases accepted wherever a catalog key is expected.
pub fn catalog_lookup(key: &str) -> Option<OpiSpec> {
    let key = match key {
        "average" => "a",
        "inverse-average" => "b",
        "nijenhuis" => "e",
        "rota-baxter" => "f",
        "leroux-td" => "i",
        "endomorphism" => "m",
        "antimorphism" => "n",
        other => other,
    };
    catalog().into_iter().find(|e| e.name == key)
}
