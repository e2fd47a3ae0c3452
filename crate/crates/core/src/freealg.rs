//! Arithmetic in the free algebra on the normal-form word basis: the
//! reduction map onto the basis, the recursive product on basis
//! words, its bilinear extension, the bracket operator, and the
//! derived double product B(r1, r2).

use crate::poly::Poly;
use crate::rbtype::{rota_baxter_report, Verdict};
use crate::rewrite::{normal_form, OpiSpec};
use crate::words::{Atom, Word};

/// A validated context: products in the free algebra are only
/// well-defined when the rewriting system is convergent, which the
/// constructor checks once.
pub struct FreeAlgebra {
    pub phi: OpiSpec,
    pub fuel: usize,
}

impl FreeAlgebra {
    pub fn new(phi: OpiSpec, fuel: usize) -> Result<FreeAlgebra, String> {
        let report = rota_baxter_report(&phi, fuel);
        if report.verdict != Verdict::RotaBaxterType {
            return Err(format!(
                "the free algebra needs a convergent kernel; \"{}\" is not of the required type",
                phi.name
            ));
        }
        Ok(FreeAlgebra { phi, fuel })
    }

    /// Project any polynomial onto the normal-form basis.
    pub fn reduce(&self, f: &Poly) -> Poly {
        normal_form(f, &self.phi, self.fuel).expect("convergent kernel terminates")
    }

    /// The product of two basis words, by recursion on their
    /// decompositions: concatenation when no bracket pair meets at
    /// the seam, otherwise the seam brackets merge into
    /// [reduce(B(inner, inner))] between the untouched flanks.
    pub fn diamond(&self, u: &Word, v: &Word) -> Result<Poly, String> {
        if !u.is_rbnf() || !v.is_rbnf() {
            return Err("diamond is defined on normal-form words only".to_string());
        }
        Ok(self.diamond_unchecked(u, v))
    }

    fn diamond_unchecked(&self, u: &Word, v: &Word) -> Poly {
        if u.is_unit() {
            return Poly::from_word(v.clone());
        }
        if v.is_unit() {
            return Poly::from_word(u.clone());
        }
        match (u.0.last().unwrap(), v.0.first().unwrap()) {
            (Atom::Bracket(a), Atom::Bracket(b)) => {
                let mid = self.reduce(&self.phi.b_at(a, b)).apply_p();
                let prefix = Word(u.0[..u.0.len() - 1].to_vec());
                let suffix = Word(v.0[1..].to_vec());
                let mut out = Poly::zero();
                for (w, c) in mid.iter() {
                    out = out.add(&Poly::from_term(
                        prefix.concat(w).concat(&suffix),
                        c.clone(),
                    ));
                }
                out
            }
            _ => Poly::from_word(u.concat(v)),
        }
    }

    /// Bilinear extension of the basis product.
    pub fn free_mul(&self, f: &Poly, g: &Poly) -> Result<Poly, String> {
        let mut out = Poly::zero();
        for (u, a) in f.iter() {
            for (v, b) in g.iter() {
                out = out.add(&self.diamond(u, v)?.scale(&a.mul(b)));
            }
        }
        Ok(out)
    }

    /// The operator: bracket every basis word. Normal forms are closed
    /// under a single bracket.
    pub fn apply_p(&self, f: &Poly) -> Poly {
        f.apply_p()
    }

    /// The derived product B(f, g), computed in the free algebra.
    pub fn double_product(&self, f: &Poly, g: &Poly) -> Poly {
        self.reduce(&self.phi.b_at_poly(f, g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_word};
    use crate::rewrite::DEFAULT_FUEL;

    fn p(text: &str) -> Poly {
        parse_polynomial(text).unwrap()
    }

    fn w(text: &str) -> Word {
        parse_word(text).unwrap()
    }

    fn alg(key: &str) -> FreeAlgebra {
        let phi = crate::rbtype::catalog_lookup(key).unwrap();
        FreeAlgebra::new(phi, DEFAULT_FUEL).unwrap()
    }

    #[test]
    fn construction_requires_passing_kernel() {
        let rev = OpiSpec::new("reversal", p("y [x]")).unwrap();
        assert!(FreeAlgebra::new(rev, DEFAULT_FUEL).is_err());
        assert!(FreeAlgebra::new(
            crate::rbtype::catalog_lookup("rota-baxter").unwrap(),
            DEFAULT_FUEL
        )
        .is_ok());
    }

    #[test]
    fn reduce_examples() {
        let rb = alg("rota-baxter");
        assert_eq!(
            rb.reduce(&p("[x][y]")),
            p("[x [y]] + [[x] y] + lam*[x y]")
        );
        let fixed = p("x [y [z]] - 2*w");
        assert_eq!(rb.reduce(&fixed), fixed);
        let avg = alg("average");
        assert_eq!(avg.reduce(&p("[u][v][w]")), p("[u [v [w]]]"));
    }

    #[test]
    fn diamond_base_cases() {
        let nij = alg("nijenhuis");
        assert_eq!(nij.diamond(&Word::unit(), &w("u")).unwrap(), p("u"));
        assert_eq!(nij.diamond(&w("u"), &Word::unit()).unwrap(), p("u"));
        assert_eq!(nij.diamond(&w("x"), &w("y")).unwrap(), p("x y"));
        assert_eq!(
            nij.diamond(&w("[x]"), &w("[y]")).unwrap(),
            p("[x [y]] + [[x] y] - [[x y]]")
        );
        assert!(nij.diamond(&w("[x][y]"), &w("z")).is_err());
    }

    #[test]
    fn diamond_seam_recursion() {
        let rb = alg("rota-baxter");
        // Flanking letters pass through the seam untouched.
        let left = w("a [x]");
        let right = w("[y] b");
        let direct = rb.reduce(&Poly::from_word(left.concat(&right)));
        assert_eq!(rb.diamond(&left, &right).unwrap(), direct);
    }

    #[test]
    fn free_mul_matches_reduce_of_concatenation() {
        let pairs = [
            ("x", "y"),
            ("[x]", "[y]"),
            ("a [x y]", "[y] z"),
            ("[a [b]]", "[e] d"),
            ("x [y] z", "w"),
        ];
        for key in ["average", "inverse-average", "nijenhuis", "rota-baxter"] {
            let alg = alg(key);
            for (a, b) in pairs {
                let (u, v) = (w(a), w(b));
                let oracle = alg.reduce(&Poly::from_word(u.concat(&v)));
                assert_eq!(alg.diamond(&u, &v).unwrap(), oracle, "{} * {} under {}", a, b, key);
            }
        }
    }

    #[test]
    fn free_mul_unit_and_linearity() {
        let rb = alg("rota-baxter");
        let f = p("x + [y]");
        assert_eq!(rb.free_mul(&f, &Poly::one()).unwrap(), f);
        assert_eq!(rb.free_mul(&Poly::one(), &f).unwrap(), f);
        let g = p("[x] - 2*z");
        let h = p("[y w]");
        let lhs = rb.free_mul(&f.add(&g), &h).unwrap();
        let rhs = rb.free_mul(&f, &h).unwrap().add(&rb.free_mul(&g, &h).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn free_mul_associative() {
        let nij = alg("nijenhuis");
        let (a, b, c) = (p("[x] + y"), p("[y z]"), p("z [x]"));
        let lhs = nij.free_mul(&nij.free_mul(&a, &b).unwrap(), &c).unwrap();
        let rhs = nij.free_mul(&a, &nij.free_mul(&b, &c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn operator_and_identity_in_the_free_algebra() {
        // free_mul([u], [v]) = P(reduce(B(u, v))): the defining
        // identity holds in the free algebra.
        let rb = alg("rota-baxter");
        for (a, b) in [("x", "y"), ("x [y]", "[z] w"), ("[x]", "[y]")] {
            let (u, v) = (w(a), w(b));
            let lhs = rb
                .free_mul(
                    &Poly::from_word(Word::bracket(u.clone())),
                    &Poly::from_word(Word::bracket(v.clone())),
                )
                .unwrap();
            let rhs = rb.apply_p(&rb.reduce(&rb.phi.b_at(&u, &v)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn apply_p_examples() {
        let rb = alg("rota-baxter");
        assert_eq!(rb.apply_p(&p("x")), p("[x]"));
        assert_eq!(rb.apply_p(&p("[x] + y")), p("[[x]] + [y]"));
        assert!(rb.apply_p(&Poly::zero()).is_zero());
    }

    #[test]
    fn double_product_examples() {
        let rb = alg("rota-baxter");
        assert_eq!(rb.double_product(&p("x"), &p("y")), p("x [y] + [x] y + lam*x y"));
        let nij = alg("nijenhuis");
        assert_eq!(nij.double_product(&p("x"), &p("y")), p("x [y] + [x] y - [x y]"));
    }

    #[test]
    fn double_product_associative_sample() {
        for key in ["average", "nijenhuis", "rota-baxter", "endomorphism"] {
            let alg = alg(key);
            let (a, b, c) = (p("x + [y]"), p("z"), p("[x y]"));
            let lhs = alg.double_product(&alg.double_product(&a, &b), &c);
            let rhs = alg.double_product(&a, &alg.double_product(&b, &c));
            assert_eq!(lhs, rhs, "entry {}", key);
        }
    }

    #[test]
    fn reduce_commutes_with_bracket() {
        let rb = alg("rota-baxter");
        let f = p("[x][y] + z [u][v]");
        assert_eq!(rb.reduce(&f.apply_p()), rb.reduce(&f).apply_p());
    }
}
