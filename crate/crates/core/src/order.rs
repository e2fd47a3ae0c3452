//! Word orders: deg-lex on plain words and the bracket-degree order
//! used as the monomial order everywhere in the engine.
//!
//! The bracket-degree order compares total bracket count first, then
//! the number of top-level brackets, then the tuple of top-level
//! bracket contents followed by the top-level letter blocks, with
//! bracket contents compared recursively and letter blocks by deg-lex
//! on generator names. It is a monomial well-order: substitution into
//! any one-hole context preserves strict inequality.

use crate::words::{Atom, Word};
use std::cmp::Ordering;

/// Order on non-bracket atoms: holes below letters, letters by name.
fn cmp_atom(a: &Atom, b: &Atom) -> Ordering {
    match (a, b) {
        (Atom::Star(i), Atom::Star(j)) => i.cmp(j),
        (Atom::Star(_), Atom::Letter(_)) => Ordering::Less,
        (Atom::Letter(_), Atom::Star(_)) => Ordering::Greater,
        (Atom::Letter(g), Atom::Letter(h)) => g.cmp(h),
        _ => unreachable!("cmp_atom applied to a bracket"),
    }
}

fn cmp_deglex_slices(u: &[Atom], v: &[Atom]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| {
        for (a, b) in u.iter().zip(v.iter()) {
            let ord = cmp_atom(a, b);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    })
}

/// Degree-lexicographic comparison of two plain (bracket-free) words.
pub fn cmp_deglex(u: &Word, v: &Word) -> Result<Ordering, String> {
    if !u.is_letters_only() || !v.is_letters_only() {
        return Err("deg-lex order is defined on bracket-free words only".to_string());
    }
    Ok(cmp_deglex_slices(&u.0, &v.0))
}

/// The bracket-degree comparison.
pub fn cmp_db(u: &Word, v: &Word) -> Ordering {
    u.deg_p()
        .cmp(&v.deg_p())
        .then_with(|| u.p_breadth().cmp(&v.p_breadth()))
        .then_with(|| cmp_tuple(u, v))
}

/// Lexicographic comparison of (bracket contents, letter blocks) for
/// words with equal bracket degree and equal top-level bracket count.
fn cmp_tuple(u: &Word, v: &Word) -> Ordering {
    let ub = u.0.iter().filter_map(|a| match a {
        Atom::Bracket(w) => Some(w),
        _ => None,
    });
    let vb = v.0.iter().filter_map(|a| match a {
        Atom::Bracket(w) => Some(w),
        _ => None,
    });
    for (a, b) in ub.zip(vb) {
        let ord = cmp_db(a, b);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    let mut ublocks = letter_blocks(u);
    let vblocks = letter_blocks(v);
    for (a, b) in ublocks.drain(..).zip(vblocks) {
        let ord = cmp_deglex_slices(a, b);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// The r+1 (possibly empty) maximal non-bracket runs around the r
/// top-level brackets.
fn letter_blocks(u: &Word) -> Vec<&[Atom]> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for (i, a) in u.0.iter().enumerate() {
        if matches!(a, Atom::Bracket(_)) {
            blocks.push(&u.0[start..i]);
            start = i + 1;
        }
    }
    blocks.push(&u.0[start..]);
    blocks
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        cmp_db(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Outcome of the sufficient compatibility criterion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Compatibility {
    Compatible,
    Unknown,
}

/// Sufficient criterion for the rewriting rule to point downward in
/// the bracket-degree order: every monomial of B carries at most one
/// bracket (which also forces B into normal form). Then the leading
/// monomial of [B(u,v)] is strictly below [u][v] for all u, v.
pub fn compatible_with_db(b: &crate::poly::Poly) -> Compatibility {
    let ok = b
        .iter()
        .all(|(w, _)| w.deg_p() <= 1 && w.is_rbnf());
    if ok {
        Compatibility::Compatible
    } else {
        Compatibility::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_word};

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    #[test]
    fn deglex_examples() {
        assert_eq!(cmp_deglex(&w("x y"), &w("y x")).unwrap(), Ordering::Less);
        assert_eq!(cmp_deglex(&Word::unit(), &w("x")).unwrap(), Ordering::Less);
        assert_eq!(cmp_deglex(&w("x x x"), &w("x y")).unwrap(), Ordering::Greater);
        assert!(cmp_deglex(&w("[x]"), &w("x")).is_err());
    }

    #[test]
    fn db_examples() {
        // Fewer total brackets wins regardless of top-level shape.
        assert_eq!(cmp_db(&w("[u][v]"), &w("[[u][v]]")), Ordering::Less);
        // Equal bracket degree: fewer top-level brackets is smaller.
        assert_eq!(cmp_db(&w("[x [y]]"), &w("[x][y]")), Ordering::Less);
        // Any word is below its own bracketing.
        for u in [Word::unit(), w("x"), w("x [y] z"), w("[[x]]")] {
            assert_eq!(cmp_db(&u, &Word::bracket(u.clone())), Ordering::Less);
        }
    }

    #[test]
    fn db_equal_iff_identical() {
        let words = [
            Word::unit(),
            w("x"),
            w("y"),
            w("x y"),
            w("[x]"),
            w("[y] x"),
            w("x [y]"),
            w("[x [y]]"),
            w("[x][y]"),
        ];
        for a in &words {
            for b in &words {
                assert_eq!(cmp_db(a, b) == Ordering::Equal, a == b);
                assert_eq!(cmp_db(a, b), cmp_db(b, a).reverse());
            }
        }
    }

    #[test]
    fn db_agrees_with_deglex_on_plain_words() {
        let words = [Word::unit(), w("x"), w("y"), w("x x"), w("x y"), w("y x")];
        for a in &words {
            for b in &words {
                assert_eq!(cmp_db(a, b), cmp_deglex(a, b).unwrap());
            }
        }
    }

    #[test]
    fn db_tuple_step_orders_by_bracket_contents_first() {
        // Same deg_p and p_breadth; first bracket contents decide.
        assert_eq!(cmp_db(&w("y [x]"), &w("x [y]")), Ordering::Less);
        // Same brackets; letter blocks decide.
        assert_eq!(cmp_db(&w("x [u] y"), &w("y [u] x")), Ordering::Less);
    }

    #[test]
    fn compatibility_examples() {
        let rb = parse_polynomial("x [y] + [x] y + lam*x y").unwrap();
        assert_eq!(compatible_with_db(&rb), Compatibility::Compatible);
        let nij = parse_polynomial("x [y] + [x] y - [x y]").unwrap();
        assert_eq!(compatible_with_db(&nij), Compatibility::Compatible);
        let deep = parse_polynomial("x [[y]]").unwrap();
        assert_eq!(compatible_with_db(&deep), Compatibility::Unknown);
    }
}
