//! A small Buchberger engine: reduced Groebner bases, normal forms, and
//! quotient dimensions by standard-monomial counting.

use super::poly::{exp_div, exp_divides, exp_lcm, Exponents, MonomialOrder, MultiPoly};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Normal form of `p` modulo `basis` under `order` (full reduction).
pub fn reduce(p: &MultiPoly, basis: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let leads: Vec<(Exponents, Scalar)> =
        basis.iter().filter_map(|g| g.leading(order)).collect();
    let mut rem = MultiPoly::zero(p.nvars(), p.field());
    let mut work = p.clone();
    'outer: while let Some((e, c)) = work.leading(order) {
        for (g, (ge, gc)) in basis.iter().zip(&leads) {
            if exp_divides(ge, &e) {
                let factor = &c / gc;
                work = work.sub(&g.mul_term(&exp_div(&e, ge), &factor));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        rem = rem.add(&MultiPoly::monomial(p.nvars(), e, c.clone()));
        work = work.sub(&MultiPoly::monomial(p.nvars(), e, c));
    }
    rem
}

/// Reduced Groebner basis of the ideal generated by `gens`.
///
/// Elements are monic and pairwise fully reduced; the result is independent
/// of generator order (a property the test suite exercises).
pub fn groebner_basis(gens: &[MultiPoly], order: MonomialOrder) -> Result<Vec<MultiPoly>> {
    let nonzero: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(Vec::new());
    }
    let field = nonzero[0].field();
    let nvars = nonzero[0].nvars();
    if nonzero.iter().any(|g| g.field() != field) {
        return Err(Error::MixedFields);
    }
    if nonzero.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::Input("generators disagree on variable count".into()));
    }

    let mut basis: Vec<MultiPoly> = nonzero.iter().map(|g| g.make_monic(order)).collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    while let Some((i, j)) = pairs.pop() {
        let (ei, _) = basis[i].leading(order).unwrap();
        let (ej, _) = basis[j].leading(order).unwrap();
        // Buchberger's first criterion: coprime leading monomials
        if exp_lcm(&ei, &ej) == std::array::from_fn(|k| ei[k] + ej[k]) {
            continue;
        }
        let l = exp_lcm(&ei, &ej);
        let one = Scalar::one(field);
        let spair = basis[i]
            .mul_term(&exp_div(&l, &ei), &one)
            .sub(&basis[j].mul_term(&exp_div(&l, &ej), &one));
        let r = reduce(&spair, &basis, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(r);
        }
    }

    // minimalize: drop elements whose leading term is divisible by another's
    let leads: Vec<Exponents> = basis.iter().map(|g| g.leading(order).unwrap().0).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && exp_divides(&leads[j], &leads[i])
                    && (leads[j] != leads[i] || j < i)
            })
        })
        .collect();
    let minimal: Vec<MultiPoly> = basis
        .iter()
        .zip(&keep)
        .filter(|&(_, &k)| k)
        .map(|(g, _)| g.clone())
        .collect();

    // inter-reduce to the unique reduced basis
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce(&minimal[i], &others, order);
        if !r.is_zero() {
            reduced.push(r.make_monic(order));
        }
    }
    reduced.sort_by(|a, b| {
        order.cmp(&a.leading(order).unwrap().0, &b.leading(order).unwrap().0)
    });
    Ok(reduced)
}

/// Ideal membership via normal form against a Groebner basis.
pub fn ideal_contains(basis: &[MultiPoly], p: &MultiPoly, order: MonomialOrder) -> bool {
    reduce(p, basis, order).is_zero()
}

/// Dimension of k[x..]/I as a k-vector space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientDim {
    Finite(u64),
    Infinite,
}

/// Counts standard monomials under a grlex Groebner basis.
///
/// The quotient is finite iff every variable has some pure power among the
/// leading terms; in that case standard monomials live in the box bounded by
/// those powers.
pub fn quotient_dimension(gens: &[MultiPoly]) -> Result<QuotientDim> {
    if gens.is_empty() {
        return Err(Error::Input("empty generator list".into()));
    }
    let nvars = gens[0].nvars();
    let basis = groebner_basis(gens, MonomialOrder::GrLex)?;
    if basis.iter().any(|g| g.total_degree() == Some(0)) {
        return Ok(QuotientDim::Finite(0)); // unit ideal
    }
    let leads: Vec<Exponents> =
        basis.iter().map(|g| g.leading(MonomialOrder::GrLex).unwrap().0).collect();
    // bound per variable from pure-power leading terms
    let mut bound = [0u16; 4];
    for v in 0..nvars {
        let pure = leads
            .iter()
            .filter(|e| (0..nvars).all(|w| w == v || e[w] == 0))
            .map(|e| e[v])
            .min();
        match pure {
            Some(b) => bound[v] = b,
            None => return Ok(QuotientDim::Infinite),
        }
    }
    let mut count = 0u64;
    // enumerate the box [0,bound) ^ nvars and test divisibility
    let mut exps = [0u16; 4];
    loop {
        let standard = !leads.iter().any(|l| exp_divides(l, &exps));
        if standard {
            count += 1;
        }
        // increment mixed-radix counter
        let mut v = 0;
        loop {
            if v == nvars {
                return Ok(QuotientDim::Finite(count));
            }
            exps[v] += 1;
            if exps[v] < bound[v] {
                break;
            }
            exps[v] = 0;
            v += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::Field;

    fn vars2(field: Field) -> (MultiPoly, MultiPoly) {
        (MultiPoly::var(2, 0, field), MultiPoly::var(2, 1, field))
    }

    fn c(field: Field, n: i64) -> MultiPoly {
        MultiPoly::constant(2, Scalar::from_i64(field, n))
    }

    #[test]
    fn already_a_basis() {
        let f = Field::Rational;
        let (x, y) = vars2(f);
        let gb = groebner_basis(&[x.clone(), y.clone()], MonomialOrder::GrLex).unwrap();
        assert_eq!(gb, vec![y, x]);
    }

    #[test]
    fn circle_hyperbola() {
        // {x^2 - 1, xy - 1}: reduced grlex basis is {y^2 - 1, x - y}
        let f = Field::Rational;
        let (x, y) = vars2(f);
        let g1 = x.mul(&x).sub(&c(f, 1));
        let g2 = x.mul(&y).sub(&c(f, 1));
        let gb = groebner_basis(&[g1, g2], MonomialOrder::GrLex).unwrap();
        let expect_1 = x.sub(&y);
        let expect_2 = y.mul(&y).sub(&c(f, 1));
        assert_eq!(gb, vec![expect_1, expect_2]);
    }

    #[test]
    fn single_var_gf2() {
        let f = Field::Fp(2);
        let (x, _) = vars2(f);
        let gb = groebner_basis(&[x.clone()], MonomialOrder::GrLex).unwrap();
        assert_eq!(gb, vec![x]);
    }

    #[test]
    fn lex_is_already_triangular() {
        // {x + y^3, y^4 + 1} is its own lex basis
        let f = Field::Rational;
        let (x, y) = vars2(f);
        let g1 = x.add(&y.pow(3));
        let g2 = y.pow(4).add(&c(f, 1));
        let gb = groebner_basis(&[g1.clone(), g2.clone()], MonomialOrder::Lex).unwrap();
        assert_eq!(gb, vec![g2, g1]);
    }

    #[test]
    fn quotient_dimensions() {
        let f = Field::Rational;
        let (x, y) = vars2(f);
        assert_eq!(
            quotient_dimension(&[x.clone(), y.clone()]).unwrap(),
            QuotientDim::Finite(1)
        );
        assert_eq!(
            quotient_dimension(&[x.pow(2), y.pow(3)]).unwrap(),
            QuotientDim::Finite(6)
        );
        assert_eq!(quotient_dimension(&[x.clone()]).unwrap(), QuotientDim::Infinite);
        // unit ideal
        assert_eq!(
            quotient_dimension(&[x.add(&c(f, 1)), x.clone()]).unwrap(),
            QuotientDim::Finite(0)
        );
    }

    #[test]
    fn membership() {
        let f = Field::Rational;
        let (x, y) = vars2(f);
        let gb = groebner_basis(
            &[x.mul(&x).sub(&c(f, 1)), x.mul(&y).sub(&c(f, 1))],
            MonomialOrder::GrLex,
        )
        .unwrap();
        // y - x is in the ideal; x - 2 is not
        assert!(ideal_contains(&gb, &y.sub(&x), MonomialOrder::GrLex));
        assert!(!ideal_contains(&gb, &x.sub(&c(f, 2)), MonomialOrder::GrLex));
    }
}
