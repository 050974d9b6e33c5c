use num_traits::One;

use super::{groebner, Ideal, MonomialOrder};
use crate::poly::{Polynomial, Rational};

/// Greatest common divisor in `Q[z1..zn]`, normalized to be primitive.
///
/// Monomial content is split off first; the remaining factors are handled
/// through `gcd = a·b / lcm(a, b)`, with the lcm generating `(a) ∩ (b)`,
/// obtained by eliminating `t` from `(t·a, (1−t)·b)`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(a.nvars(), b.nvars(), "ambient mismatch");
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = Polynomial::term(ma.gcd(&mb), Rational::one());
    let a1 = a.div_exact(&Polynomial::term(ma, Rational::one())).expect("monomial content divides");
    let b1 = b.div_exact(&Polynomial::term(mb, Rational::one())).expect("monomial content divides");
    if a1.is_constant() || b1.is_constant() {
        return mono;
    }
    if a1.primitive() == b1.primitive() {
        return (&mono * &a1).primitive();
    }
    if a1.div_exact(&b1).is_some() {
        return (&mono * &b1).primitive();
    }
    if b1.div_exact(&a1).is_some() {
        return (&mono * &a1).primitive();
    }
    let lcm = poly_lcm(&a1, &b1);
    let g = (&a1 * &b1).div_exact(&lcm).expect("lcm divides the product");
    (&mono * &g).primitive()
}

fn poly_lcm(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let n = a.nvars();
    let t = Polynomial::var(n + 1, 0);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let gens = vec![&t * &a.embed(n + 1, 1), &one_minus_t * &b.embed(n + 1, 1)];
    let ideal = Ideal::new(n + 1, gens).expect("same ambient");
    let gb = groebner(&ideal, MonomialOrder::Block { split: 1 }, false);
    let free: Vec<&Polynomial> = gb
        .basis()
        .iter()
        .filter(|g| g.terms().all(|(m, _)| m.exponents()[0] == 0))
        .collect();
    debug_assert_eq!(free.len(), 1, "intersection of principal ideals is principal");
    free[0].restrict(n, 1)
}

/// Gcd of a list, stopping early once it becomes constant.
pub fn poly_gcd_many<'a>(nvars: usize, polys: impl IntoIterator<Item = &'a Polynomial>) -> Polynomial {
    let mut g = Polynomial::zero(nvars);
    for p in polys {
        g = poly_gcd(&g, p);
        if !g.is_zero() && g.is_constant() {
            return Polynomial::one(nvars);
        }
    }
    g
}
