//! Sparse multivariate polynomials in at most four variables.

use super::scalar::{Field, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector; entries beyond the variable count are always zero.
pub type Exponents = [u16; 4];

pub const MAX_VARS: usize = 4;

/// Monomial orders used by the Groebner engine.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    /// Graded lexicographic: total degree first, ties by lex with x0 > x1 > ...
    GrLex,
    /// Pure lexicographic with x0 > x1 > ...; eliminates leading variables.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Exponents, b: &Exponents) -> Ordering {
        match self {
            MonomialOrder::GrLex => {
                let (da, db): (u32, u32) =
                    (a.iter().map(|&e| e as u32).sum(), b.iter().map(|&e| e as u32).sum());
                da.cmp(&db).then_with(|| a.cmp(b))
            }
            MonomialOrder::Lex => a.cmp(b),
        }
    }
}

pub fn exp_mul(a: &Exponents, b: &Exponents) -> Exponents {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn exp_divides(a: &Exponents, b: &Exponents) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn exp_div(a: &Exponents, b: &Exponents) -> Exponents {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn exp_lcm(a: &Exponents, b: &Exponents) -> Exponents {
    std::array::from_fn(|i| a[i].max(b[i]))
}

/// A polynomial with nonzero coefficients only; the invariant is maintained
/// by every constructor and operation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Exponents, Scalar>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, field: Field) -> Self {
        assert!(nvars <= MAX_VARS);
        MultiPoly { nvars, field, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(nvars, c.field());
        if !c.is_zero() {
            p.terms.insert([0; 4], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize, field: Field) -> Self {
        assert!(i < nvars);
        let mut e = [0u16; 4];
        e[i] = 1;
        MultiPoly::from_terms(nvars, field, vec![(e, Scalar::one(field))])
    }

    pub fn monomial(nvars: usize, e: Exponents, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(nvars, c.field());
        if !c.is_zero() {
            assert!(e[nvars..].iter().all(|&x| x == 0));
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, field: Field, terms: Vec<(Exponents, Scalar)>) -> Self {
        let mut p = MultiPoly::zero(nvars, field);
        for (e, c) in terms {
            p.add_term(&e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponents) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| Scalar::zero(self.field))
    }

    fn add_term(&mut self, e: &Exponents, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(e) {
            Some(existing) => {
                let sum = &*existing + c;
                if sum.is_zero() {
                    self.terms.remove(e);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(*e, c.clone());
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.field, other.field);
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars, self.field);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.field, other.field);
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars, self.field);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(&exp_mul(ea, eb), &(ca * cb));
            }
        }
        out
    }

    pub fn mul_term(&self, e: &Exponents, c: &Scalar) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars, self.field);
        for (ea, ca) in &self.terms {
            out.add_term(&exp_mul(ea, e), &(ca * c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.nvars, Scalar::one(self.field));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Leading (exponents, coefficient) under the given order.
    pub fn leading(&self, order: MonomialOrder) -> Option<(Exponents, Scalar)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .map(|(e, c)| (*e, c.clone()))
    }

    pub fn make_monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Scalar::zero(self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().take(self.nvars).enumerate() {
                if exp > 0 {
                    t = &t * &point[i].pow(exp as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Formal partial derivative; valid in every characteristic.
    pub fn partial(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars, self.field);
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            let k = Scalar::from_i64(self.field, e[var] as i64);
            out.add_term(&e2, &(c * &k));
        }
        out
    }

    /// Substitute a polynomial for one variable.
    pub fn substitute(&self, var: usize, value: &MultiPoly) -> MultiPoly {
        assert_eq!(self.field, value.field);
        assert_eq!(self.nvars, value.nvars);
        let maxdeg = self.degree_in(var);
        // precompute powers of the replacement
        let mut powers = Vec::with_capacity(maxdeg as usize + 1);
        powers.push(MultiPoly::constant(self.nvars, Scalar::one(self.field)));
        for k in 1..=maxdeg {
            powers.push(powers[(k - 1) as usize].mul(value));
        }
        let mut out = MultiPoly::zero(self.nvars, self.field);
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[var];
            e2[var] = 0;
            out = out.add(&powers[k as usize].mul_term(&e2, c));
        }
        out
    }

    /// Substitute a scalar for one variable.
    pub fn substitute_scalar(&self, var: usize, value: &Scalar) -> MultiPoly {
        self.substitute(var, &MultiPoly::constant(self.nvars, value.clone()))
    }

    /// True if the variable occurs in some term.
    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e[var] > 0)
    }

    /// The set of variables that occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.uses_var(v)).collect()
    }

    /// Drop one variable from the ring, shifting higher indices down.
    /// The variable must not occur in any term.
    pub fn remove_var(&self, var: usize) -> crate::error::Result<MultiPoly> {
        if self.uses_var(var) {
            return Err(crate::error::Error::Input(format!(
                "variable {var} still occurs"
            )));
        }
        let mut out = MultiPoly::zero(self.nvars - 1, self.field);
        for (e, c) in &self.terms {
            let mut e2 = [0u16; MAX_VARS];
            let mut k = 0;
            for (v, &exp) in e.iter().enumerate().take(self.nvars) {
                if v != var {
                    e2[k] = exp;
                    k += 1;
                }
            }
            out.add_term(&e2, c);
        }
        Ok(out)
    }

    /// Map this polynomial into another field with the same variable count.
    /// Fails when a denominator vanishes in the target field.
    pub fn map_field(&self, target: Field) -> Option<MultiPoly> {
        if self.field == target {
            return Some(self.clone());
        }
        let mut out = MultiPoly::zero(self.nvars, target);
        for (e, c) in &self.terms {
            let r = c.as_rational()?;
            let img = Scalar::embed_ratio(target, r.numer(), r.denom())?;
            out.add_term(e, &img);
        }
        Some(out)
    }

    /// Display with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [&'a str]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a MultiPoly,
    names: &'a [&'a str],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        // descending grlex reads most naturally
        let mut terms: Vec<_> = self.poly.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::GrLex.cmp(b.0, a.0));
        for (i, (e, c)) in terms.iter().enumerate() {
            let c_str = c.to_string();
            let (sign, mag) = match c_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", c_str),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if mag != "1" || is_const {
                factors.push(mag);
            }
            for (v, &exp) in e.iter().take(self.poly.nvars).enumerate() {
                match exp {
                    0 => {}
                    1 => factors.push(self.names[v].to_string()),
                    _ => factors.push(format!("{}^{}", self.names[v], exp)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
