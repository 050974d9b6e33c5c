//! Buchberger's algorithm with the product and chain criteria, optional
//! cofactor tracking, and multivariate division.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_traits::Zero;

use super::MonomialOrder;
use crate::poly::{Monomial, Polynomial, Rational};

/// Terms sorted ascending under a fixed order; the leading term is last.
type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|a, b| order.cmp(&a.0, &b.0));
    t
}

fn from_terms(nvars: usize, t: Terms) -> Polynomial {
    Polynomial::from_terms(nvars, t)
}

/// `p − c·q·g`, all sorted ascending.
fn sub_mul(p: &[(Monomial, Rational)], c: &Rational, q: &Monomial, g: &[(Monomial, Rational)], order: &MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |k: usize| (g[k].0.mul(q), &g[k].1 * c);
    let mut gj = if g.is_empty() { None } else { Some(shifted(0)) };
    while i < p.len() || gj.is_some() {
        match (p.get(i), gj.as_ref()) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.0.clone(), -b.1.clone()));
                    j += 1;
                    gj = if j < g.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let s = &a.1 - &b.1;
                    if !s.is_zero() {
                        out.push((a.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    gj = if j < g.len() { Some(shifted(j)) } else { None };
                }
            },
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(b)) => {
                out.push((b.0.clone(), -b.1.clone()));
                j += 1;
                gj = if j < g.len() { Some(shifted(j)) } else { None };
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Element {
    terms: Terms,
    cof: Option<Vec<Polynomial>>,
}

impl Element {
    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero element").0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero element").1
    }
}

fn cof_sub_mul(cof: &mut [Polynomial], c: &Rational, q: &Monomial, g: &[Polynomial]) {
    for (a, b) in cof.iter_mut().zip(g) {
        if !b.is_zero() {
            *a = &*a - &b.mul_term(q, c);
        }
    }
}

/// Full reduction of `terms` by `basis`. Returns the remainder; when `quot` is
/// given, the quotient of each basis element is accumulated into it, and when
/// `cof` is given the cofactor vector is updated alongside.
fn reduce(
    mut p: Terms,
    basis: &[Element],
    order: &MonomialOrder,
    mut cof: Option<&mut Vec<Polynomial>>,
    mut quot: Option<&mut Vec<Polynomial>>,
) -> Terms {
    let mut rem: Terms = Vec::new();
    while let Some((lm, lc)) = p.last().cloned() {
        let hit = basis.iter().enumerate().find(|(_, g)| g.lm().divides(&lm));
        match hit {
            Some((k, g)) => {
                let q = g.lm().quotient_of(&lm).expect("divides");
                let c = &lc / g.lc();
                p = sub_mul(&p, &c, &q, &g.terms, order);
                if let (Some(cof), Some(gc)) = (cof.as_deref_mut(), g.cof.as_ref()) {
                    cof_sub_mul(cof, &c, &q, gc);
                }
                if let Some(quot) = quot.as_deref_mut() {
                    quot[k].add_term(q, c);
                }
            }
            None => {
                rem.push(p.pop().expect("nonempty"));
            }
        }
    }
    rem.reverse();
    rem
}

/// Output of [`buchberger`]: basis polynomials with optional cofactor rows
/// expressing each element in the input generators.
pub(crate) struct Computed {
    pub basis: Vec<Polynomial>,
    pub leading: Vec<Monomial>,
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

pub(crate) fn buchberger(nvars: usize, gens: &[Polynomial], order: &MonomialOrder, track: bool) -> Computed {
    let ngens = gens.len();
    let mut elems: Vec<Element> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let cof = track.then(|| {
            let mut v = vec![Polynomial::zero(nvars); ngens];
            v[j] = Polynomial::one(nvars);
            v
        });
        elems.push(Element { terms: to_terms(g, order), cof });
    }

    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..elems.len() {
        for i in 0..j {
            pending.push((i, j));
            pending_set.insert((i, j));
        }
    }

    while !pending.is_empty() {
        // normal selection strategy: smallest lcm first, ties by index
        let (best, _) = pending
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = elems[a.0].lm().lcm(elems[a.1].lm());
                let lb = elems[b.0].lm().lcm(elems[b.1].lm());
                order.cmp(&la, &lb).then((a.1, a.0).cmp(&(b.1, b.0)))
            })
            .expect("nonempty");
        let (i, j) = pending.remove(best);
        pending_set.remove(&(i, j));

        let (lmi, lmj) = (elems[i].lm().clone(), elems[j].lm().clone());
        if lmi.is_coprime(&lmj) {
            continue;
        }
        let lcm = lmi.lcm(&lmj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..elems.len()).any(|k| {
            k != i
                && k != j
                && elems[k].lm().divides(&lcm)
                && !pending_set.contains(&key(i, k))
                && !pending_set.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let qi = lmi.quotient_of(&lcm).expect("divides");
        let qj = lmj.quotient_of(&lcm).expect("divides");
        let ci = elems[i].lc().recip();
        let cj = elems[j].lc().recip();
        let a = sub_mul(&[], &-ci.clone(), &qi, &elems[i].terms, order);
        let s = sub_mul(&a, &cj, &qj, &elems[j].terms, order);
        let mut cof = if track {
            let mut v = vec![Polynomial::zero(nvars); ngens];
            cof_sub_mul(&mut v, &-ci, &qi, elems[i].cof.as_ref().expect("tracked"));
            cof_sub_mul(&mut v, &cj, &qj, elems[j].cof.as_ref().expect("tracked"));
            Some(v)
        } else {
            None
        };
        let h = reduce(s, &elems, order, cof.as_mut(), None);
        if h.is_empty() {
            continue;
        }
        let inv = h.last().expect("nonzero").1.recip();
        let h: Terms = h.into_iter().map(|(m, c)| (m, c * &inv)).collect();
        let cof = cof.map(|v| v.iter().map(|p| p.scale(&inv)).collect());
        let new = elems.len();
        elems.push(Element { terms: h, cof });
        for k in 0..new {
            pending.push((k, new));
            pending_set.insert((k, new));
        }
    }

    // minimize: keep an element unless an earlier-kept or other element's lm divides its lm
    let mut keep: Vec<usize> = Vec::new();
    for (idx, e) in elems.iter().enumerate() {
        let dominated = elems.iter().enumerate().any(|(o, f)| {
            o != idx && f.lm().divides(e.lm()) && (f.lm() != e.lm() || o < idx)
        });
        if !dominated {
            keep.push(idx);
        }
    }
    let mut minimal: Vec<Element> = keep.into_iter().map(|i| elems[i].clone()).collect();
    minimal.sort_by(|a, b| order.cmp(b.lm(), a.lm()));

    // interreduce and normalize
    let mut reduced: Vec<Element> = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Element> = minimal.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, e)| e.clone()).collect();
        let mut cof = minimal[idx].cof.clone();
        let lead = minimal[idx].terms.last().cloned().expect("nonzero");
        let tail: Terms = minimal[idx].terms[..minimal[idx].terms.len() - 1].to_vec();
        let mut r = reduce(tail, &others, order, cof.as_mut(), None);
        r.push(lead);
        let inv = r.last().expect("nonzero").1.recip();
        let terms: Terms = r.into_iter().map(|(m, c)| (m, c * &inv)).collect();
        let cof = cof.map(|v| v.iter().map(|p| p.scale(&inv)).collect());
        reduced.push(Element { terms, cof });
    }
    // leading monomials are unchanged, so one pass against the unreduced others suffices

    let leading = reduced.iter().map(|e| e.lm().clone()).collect();
    let cofactors = track.then(|| reduced.iter().map(|e| e.cof.clone().expect("tracked")).collect());
    let basis = reduced.into_iter().map(|e| from_terms(nvars, e.terms)).collect();
    Computed { basis, leading, cofactors }
}

/// Remainder of `p` modulo `basis` (assumed sorted as returned by [`buchberger`]),
/// with quotients per basis element.
pub(crate) fn divide(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> (Vec<Polynomial>, Polynomial) {
    let nvars = p.nvars();
    let elems: Vec<Element> = basis.iter().map(|g| Element { terms: to_terms(g, order), cof: None }).collect();
    let mut quot = vec![Polynomial::zero(nvars); basis.len()];
    let rem = reduce(to_terms(p, order), &elems, order, None, Some(&mut quot));
    (quot, from_terms(nvars, rem))
}

/// Convenience for callers that only need the remainder.
pub(crate) fn remainder(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let nvars = p.nvars();
    let elems: Vec<Element> = basis.iter().map(|g| Element { terms: to_terms(g, order), cof: None }).collect();
    from_terms(nvars, reduce(to_terms(p, order), &elems, order, None, None))
}
