//! The rewriting engine: every adjacent pair of brackets [u][v] in a
//! monomial is a redex and rewrites to [B(u,v)]. One schema generates
//! the whole rule family; redexes are found by pattern matching, the
//! rules are never materialized.

use crate::coeff::Coefficient;
use crate::order::{compatible_with_db, Compatibility};
use crate::poly::{self, Poly};
use crate::words::{Atom, StarWord, Word};
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

/// Default step budget for reductions.
pub const DEFAULT_FUEL: usize = 100_000;

/// The identity [x][y] - [B(x,y)], given by its right-hand kernel B.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OpiSpec {
    pub name: String,
    pub b: Poly,
    pub params: Vec<String>,
}

impl OpiSpec {
    /// Validate that B mentions only the argument variables x, y.
    pub fn new(name: &str, b: Poly) -> Result<OpiSpec, String> {
        for g in b.letters() {
            if g != "x" && g != "y" {
                return Err(format!(
                    "B may only use the variables x and y, found \"{}\"",
                    g
                ));
            }
        }
        let params = b.params();
        Ok(OpiSpec {
            name: name.to_string(),
            b,
            params,
        })
    }

    /// B(u, v) as a polynomial, for word arguments.
    pub fn b_at(&self, u: &Word, v: &Word) -> Poly {
        self.b_at_poly(&Poly::from_word(u.clone()), &Poly::from_word(v.clone()))
    }

    /// B(f, g) for polynomial arguments.
    pub fn b_at_poly(&self, f: &Poly, g: &Poly) -> Poly {
        let mut asg = BTreeMap::new();
        asg.insert("x".to_string(), f.clone());
        asg.insert("y".to_string(), g.clone());
        poly::evaluate(&self.b, &asg).expect("B uses only x and y")
    }

    /// The full identity polynomial [u][v] - [B(u,v)].
    pub fn phi_at(&self, u: &Word, v: &Word) -> Poly {
        let lhs = Word::bracket(u.clone()).concat(&Word::bracket(v.clone()));
        Poly::from_word(lhs).sub(&self.b_at(u, v).apply_p())
    }

    /// Substitute numeric values for scalar parameters.
    pub fn specialize(
        &self,
        values: &BTreeMap<String, num_rational::BigRational>,
    ) -> OpiSpec {
        let b = self.b.specialize(values);
        let params = b.params();
        OpiSpec {
            name: self.name.clone(),
            b,
            params,
        }
    }
}

/// One matched occurrence of the rewriting pattern inside a monomial
/// of the target polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RedexSite {
    pub context: StarWord,
    pub left: Word,
    pub right: Word,
    pub monomial: Word,
    pub coeff: Coefficient,
}

/// A completed reduction: each step records the site fired and the
/// polynomial after firing it.
pub type ReductionTrace = Vec<(RedexSite, Poly)>;

/// All redex sites of a single word, in leftmost-outermost order (an
/// outer adjacency precedes anything nested deeper or further right).
pub fn find_redexes_in_word(w: &Word) -> Vec<RedexSite> {
    fn scan(host: &Word, outer: &StarWord, whole: &Word, out: &mut Vec<RedexSite>) {
        for i in 0..host.0.len() {
            if i + 1 < host.0.len() {
                if let (Atom::Bracket(u), Atom::Bracket(v)) = (&host.0[i], &host.0[i + 1]) {
                    let mut atoms = host.0[..i].to_vec();
                    atoms.push(Atom::Star(1));
                    atoms.extend(host.0[i + 2..].iter().cloned());
                    let ctx = outer
                        .compose(&StarWord::new(Word(atoms)).expect("one hole by construction"));
                    out.push(RedexSite {
                        context: ctx,
                        left: u.clone(),
                        right: v.clone(),
                        monomial: whole.clone(),
                        coeff: Coefficient::one(),
                    });
                }
            }
            if let Atom::Bracket(inner) = &host.0[i] {
                let mut atoms = host.0.clone();
                atoms[i] = Atom::Bracket(Word::star(1));
                let step = outer
                    .compose(&StarWord::new(Word(atoms)).expect("one hole by construction"));
                scan(inner, &step, whole, out);
            }
        }
    }
    let mut out = Vec::new();
    scan(w, &StarWord::hole(), w, &mut out);
    out
}

/// All redex sites of a polynomial, carrying monomial coefficients;
/// empty exactly when the polynomial is in normal form.
pub fn find_redexes(f: &Poly) -> Vec<RedexSite> {
    let mut out = Vec::new();
    for (w, c) in f.iter() {
        for mut site in find_redexes_in_word(w) {
            site.coeff = c.clone();
            out.push(site);
        }
    }
    out
}

/// Fire one site: the monomial's occurrence of [u][v] becomes [B(u,v)],
/// carried by the monomial's full coefficient; all other terms stay.
pub fn rewrite_step(f: &Poly, site: &RedexSite, phi: &OpiSpec) -> Result<Poly, String> {
    let (coeff, complement) = f.support_and_complement(&site.monomial);
    if coeff != site.coeff || coeff.is_zero() {
        return Err(format!(
            "stale redex site: coefficient of {} changed",
            site.monomial
        ));
    }
    let lhs = Word::bracket(site.left.clone()).concat(&Word::bracket(site.right.clone()));
    if site.context.substitute(&lhs) != site.monomial {
        return Err(format!(
            "stale redex site: {} does not contain the matched pattern",
            site.monomial
        ));
    }
    let replacement = poly::substitute(
        &site.context,
        &phi.b_at(&site.left, &site.right).apply_p(),
    );
    Ok(complement.add(&replacement.scale(&coeff)))
}

/// Deterministic reduction to normal form, recording the fired site and
/// the resulting polynomial at every step. One redex fires per step (the
/// first, leftmost-outermost redex of the greatest reducible monomial),
/// and each intermediate polynomial is cloned into the trace, so this is
/// meant for small examples; use [`normal_form`] for bulk reduction.
pub fn normal_form_traced(
    f: &Poly,
    phi: &OpiSpec,
    fuel: usize,
) -> Result<(Poly, ReductionTrace), String> {
    let mut cur = f.clone();
    let mut trace = Vec::new();
    for _ in 0..fuel {
        let target = match cur.leading_reducible(Word::is_rbnf) {
            Some(w) => w,
            None => return Ok((cur, trace)),
        };
        let mut site = find_redexes_in_word(&target)
            .into_iter()
            .next()
            .expect("reducible monomial has a redex");
        site.coeff = cur.coeff_of(&target);
        cur = rewrite_step(&cur, &site, phi)?;
        trace.push((site, cur.clone()));
    }
    if cur.leading_reducible(Word::is_rbnf).is_none() {
        return Ok((cur, trace));
    }
    Err(format!(
        "fuel exhausted after {} steps: possible non-termination",
        fuel
    ))
}

/// Reduction to normal form. Rewriting never mixes distinct monomials, so
/// the normal form of a polynomial is the coefficient-weighted sum of the
/// normal forms of its monomials; those are computed by expanding the
/// first (leftmost-outermost) redex and memoizing per word, which shares
/// work across the exponentially overlapping reduction trees. Fuel counts
/// distinct word expansions and bounds non-terminating kernels.
pub fn normal_form(f: &Poly, phi: &OpiSpec, fuel: usize) -> Result<Poly, String> {
    struct Frame {
        word: Word,
        pending: Vec<(Word, Coefficient)>,
        idx: usize,
        acc: Poly,
    }
    let mut memo: HashMap<Word, Poly> = HashMap::new();
    let mut fuel = fuel;
    let open = |w: &Word, fuel: &mut usize| -> Result<Frame, String> {
        if *fuel == 0 {
            return Err("fuel exhausted: possible non-termination".to_string());
        }
        *fuel -= 1;
        let site = find_redexes_in_word(w)
            .into_iter()
            .next()
            .expect("reducible word has a redex");
        let replacement = poly::substitute(
            &site.context,
            &phi.b_at(&site.left, &site.right).apply_p(),
        );
        Ok(Frame {
            word: w.clone(),
            pending: replacement.iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
            idx: 0,
            acc: Poly::zero(),
        })
    };
    let mut out = Poly::zero();
    for (w, c) in f.iter() {
        if w.is_rbnf() {
            out.add_scaled_assign(&Poly::from_word(w.clone()), c);
            continue;
        }
        if !memo.contains_key(w) {
            let mut stack = vec![open(w, &mut fuel)?];
            while let Some(top) = stack.last_mut() {
                if top.idx == top.pending.len() {
                    let done = stack.pop().expect("frame present");
                    memo.insert(done.word, done.acc);
                    continue;
                }
                let (m, mc) = top.pending[top.idx].clone();
                if m.is_rbnf() {
                    top.acc.add_scaled_assign(&Poly::from_word(m), &mc);
                    top.idx += 1;
                } else if let Some(nf) = memo.get(&m) {
                    top.acc.add_scaled_assign(nf, &mc);
                    top.idx += 1;
                } else {
                    let frame = open(&m, &mut fuel)?;
                    stack.push(frame);
                }
            }
        }
        out.add_scaled_assign(&memo[w], c);
    }
    Ok(out)
}

/// Outcome of a joinability query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Joinability {
    Joinable(Poly),
    NotJoinable,
    Indeterminate,
}

/// Decide whether f and g reduce to a common polynomial. Under a
/// compatible kernel the system terminates, so normal forms decide;
/// otherwise a bounded breadth-first search over reducts is used.
pub fn joinable(f: &Poly, g: &Poly, phi: &OpiSpec, fuel: usize) -> Joinability {
    if compatible_with_db(&phi.b) == Compatibility::Compatible {
        match (normal_form(f, phi, fuel), normal_form(g, phi, fuel)) {
            (Ok(nf), Ok(ng)) => {
                if nf == ng {
                    Joinability::Joinable(nf)
                } else {
                    Joinability::NotJoinable
                }
            }
            _ => Joinability::Indeterminate,
        }
    } else {
        bounded_join_search(f, g, phi, fuel)
    }
}

/// Breadth-first enumeration of reducts of both sides up to `fuel`
/// expansions, looking for a common element.
fn bounded_join_search(f: &Poly, g: &Poly, phi: &OpiSpec, fuel: usize) -> Joinability {
    let key = |p: &Poly| p.to_string();
    let mut seen_f: BTreeSet<String> = BTreeSet::new();
    let mut seen_g: BTreeSet<String> = BTreeSet::new();
    let mut queue_f: VecDeque<Poly> = VecDeque::from([f.clone()]);
    let mut queue_g: VecDeque<Poly> = VecDeque::from([g.clone()]);
    seen_f.insert(key(f));
    seen_g.insert(key(g));
    if seen_g.contains(&key(f)) {
        return Joinability::Joinable(f.clone());
    }
    fn expand(
        queue: &mut VecDeque<Poly>,
        seen: &mut BTreeSet<String>,
        other: &BTreeSet<String>,
        phi: &OpiSpec,
    ) -> Option<Poly> {
        let p = queue.pop_front()?;
        for site in find_redexes(&p) {
            if let Ok(next) = rewrite_step(&p, &site, phi) {
                let k = next.to_string();
                if other.contains(&k) {
                    return Some(next);
                }
                if seen.insert(k) {
                    queue.push_back(next);
                }
            }
        }
        None
    }
    let mut budget = fuel;
    while budget > 0 && (!queue_f.is_empty() || !queue_g.is_empty()) {
        budget = budget.saturating_sub(1);
        if let Some(common) = expand(&mut queue_f, &mut seen_f, &seen_g, phi) {
            return Joinability::Joinable(common);
        }
        if let Some(common) = expand(&mut queue_g, &mut seen_g, &seen_f, phi) {
            return Joinability::Joinable(common);
        }
    }
    if queue_f.is_empty() && queue_g.is_empty() {
        Joinability::NotJoinable
    } else {
        Joinability::Indeterminate
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_word};

    fn p(text: &str) -> Poly {
        parse_polynomial(text).unwrap()
    }

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    fn opi(name: &str, b: &str) -> OpiSpec {
        OpiSpec::new(name, p(b)).unwrap()
    }

    #[test]
    fn opi_rejects_foreign_variables() {
        assert!(OpiSpec::new("bad", p("x [z]")).is_err());
        assert!(OpiSpec::new("ok", p("x [1] y")).is_ok());
    }

    #[test]
    fn redexes_of_simple_shapes() {
        let sites = find_redexes(&p("[x][y]"));
        assert_eq!(sites.len(), 1);
        assert!(sites[0].context.is_hole());
        assert_eq!(sites[0].left, w("x"));
        assert_eq!(sites[0].right, w("y"));

        let sites = find_redexes(&p("[x][y][z]"));
        assert_eq!(sites.len(), 2);
        assert_eq!(sites[0].context.word(), &w("*1 [z]"));
        assert_eq!((&sites[0].left, &sites[0].right), (&w("x"), &w("y")));
        assert_eq!(sites[1].context.word(), &w("[x] *1"));
        assert_eq!((&sites[1].left, &sites[1].right), (&w("y"), &w("z")));

        assert!(find_redexes(&p("x [y [z]]")).is_empty());
    }

    #[test]
    fn nested_redex_found_inside_brackets() {
        let sites = find_redexes(&p("a [[x][y]] b"));
        assert_eq!(sites.len(), 1);
        assert_eq!(sites[0].context.word(), &w("a [*1] b"));
    }

    #[test]
    fn rewrite_step_examples() {
        let rb = opi("rota-baxter", "x [y] + [x] y + lam*x y");
        let f = p("[x][y]");
        let site = find_redexes(&f).remove(0);
        assert_eq!(
            rewrite_step(&f, &site, &rb).unwrap(),
            p("[x [y]] + [[x] y] + lam*[x y]")
        );

        let rev = opi("reversal", "y [x]");
        let g = p("w [v][u]");
        let site = find_redexes(&g).remove(0);
        assert_eq!(rewrite_step(&g, &site, &rev).unwrap(), p("w [u [v]]"));

        let avg = opi("average", "x [y]");
        let h = p("2*[x][y] + z");
        let site = find_redexes(&h).remove(0);
        assert_eq!(rewrite_step(&h, &site, &avg).unwrap(), p("2*[x [y]] + z"));
    }

    #[test]
    fn rewrite_step_rejects_stale_site() {
        let avg = opi("average", "x [y]");
        let f = p("[x][y]");
        let site = find_redexes(&f).remove(0);
        let other = p("3*[x][y]");
        assert!(rewrite_step(&other, &site, &avg).is_err());
    }

    #[test]
    fn rule_instances_are_simple() {
        // The left monomial never reappears in the right side.
        let rb = opi("rota-baxter", "x [y] + [x] y + lam*x y");
        for (u, v) in [
            (w("x"), w("y")),
            (w("[x]"), w("y z")),
            (w("x [y]"), w("[z]")),
        ] {
            let lhs = Word::bracket(u.clone()).concat(&Word::bracket(v.clone()));
            let rhs = rb.b_at(&u, &v).apply_p();
            assert!(rhs.coeff_of(&lhs).is_zero());
        }
    }

    #[test]
    fn normal_forms() {
        let avg = opi("average", "x [y]");
        let (nf, trace) = normal_form_traced(&p("[u][v][w]"), &avg, DEFAULT_FUEL).unwrap();
        assert_eq!(nf, p("[u [v [w]]]"));
        // Leftmost-outermost: three steps ([u[v]][w] is created and
        // reduced again); a right-first strategy would take two.
        assert_eq!(trace.len(), 3);

        let rev = opi("reversal", "y [x]");
        let nf = normal_form(&p("w [v [u]] - w [v][u]"), &rev, DEFAULT_FUEL).unwrap();
        assert_eq!(nf, p("w [v [u]] - w [u [v]]"));

        let already = p("x [y [z]] + 2*w");
        let (nf, trace) = normal_form_traced(&already, &avg, DEFAULT_FUEL).unwrap();
        assert_eq!(nf, already);
        assert!(trace.is_empty());
    }

    #[test]
    fn normal_form_strategy_is_deterministic() {
        let rb = opi("rota-baxter", "x [y] + [x] y + lam*x y");
        let f = p("[x][y][z] + [x][y] - lam*[[a][b]]");
        let nf1 = normal_form(&f, &rb, DEFAULT_FUEL).unwrap();
        let nf2 = normal_form(&f, &rb, DEFAULT_FUEL).unwrap();
        assert_eq!(nf1, nf2);
        assert!(nf1.is_rbnf());
    }

    #[test]
    fn traced_and_memoized_reductions_agree() {
        for kernel in ["x [y]", "y [x]", "x [y] + [x] y + lam*x y", "c*x [1] y + lam*x y"] {
            let phi = opi("k", kernel);
            for f in ["[x][y][z]", "[x y][z] - 2*[x][x] + lam*x", "[[x][y]] + [1][1]"] {
                let f = p(f);
                let (slow, _) = normal_form_traced(&f, &phi, DEFAULT_FUEL).unwrap();
                let fast = normal_form(&f, &phi, DEFAULT_FUEL).unwrap();
                assert_eq!(slow, fast, "kernel {} input {}", kernel, f);
            }
        }
    }

    #[test]
    fn fuel_exhaustion_reported() {
        let rb = opi("rota-baxter", "x [y] + [x] y + lam*x y");
        assert!(normal_form(&p("[x][y][z][w]"), &rb, 1).is_err());
        assert!(normal_form_traced(&p("[x][y][z][w]"), &rb, 1).is_err());
    }

    #[test]
    fn joinability_three_ways() {
        let rb = opi("rota-baxter", "x [y] + [x] y + lam*x y");
        // The two one-step reducts of [u][v][w] rejoin.
        let f = p("[u][v][w]");
        let sites = find_redexes(&f);
        let g1 = rewrite_step(&f, &sites[0], &rb).unwrap();
        let g2 = rewrite_step(&f, &sites[1], &rb).unwrap();
        assert!(matches!(joinable(&g1, &g2, &rb, DEFAULT_FUEL), Joinability::Joinable(_)));
        // Reflexivity.
        assert!(matches!(joinable(&f, &f, &rb, DEFAULT_FUEL), Joinability::Joinable(_)));
        // Distinct normal forms are not joinable.
        let rev = opi("reversal", "y [x]");
        assert_eq!(
            joinable(&p("w [v [u]]"), &p("w [u [v]]"), &rev, DEFAULT_FUEL),
            Joinability::NotJoinable
        );
    }

    #[test]
    fn bounded_search_used_without_compatibility() {
        // Deep kernel: the sufficient criterion does not apply, so the
        // search path decides joinability of identical inputs.
        let deep = opi("deep", "[[x y]]");
        let f = p("[x][y]");
        assert!(matches!(
            joinable(&f, &f, &deep, 100),
            Joinability::Joinable(_)
        ));
        let g = p("[x [y]]");
        assert_eq!(joinable(&f.add(&p("q")), &g, &deep, 100), Joinability::NotJoinable);
    }
}
