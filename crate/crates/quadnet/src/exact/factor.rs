//! Univariate factorization: Berlekamp over GF(p), Zassenhaus over Q
//! (square-free decomposition, Hensel lifting, subset recombination).

use super::poly::MultiPoly;
use super::scalar::{inv_mod, mul_mod, Field, Scalar};
use crate::error::{Error, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `unit * prod(factors[i]^mult[i]) = input`, factors monic irreducible.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub unit: Scalar,
    pub factors: Vec<(MultiPoly, usize)>,
}

impl Factorization {
    /// Re-expand the factorization (used to validate round trips).
    pub fn expand(&self, nvars: usize) -> MultiPoly {
        let mut acc = MultiPoly::constant(nvars, self.unit.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m as u32));
        }
        acc
    }
}

/// Factor a polynomial in one variable into irreducibles over its field.
pub fn factor_univariate(p: &MultiPoly) -> Result<Factorization> {
    let (var, dense) = to_dense(p)?;
    if dense.len() == 1 {
        return Ok(Factorization {
            unit: dense[0].clone(),
            factors: Vec::new(),
        });
    }
    let field = p.field();
    let mut factors: Vec<(Vec<Scalar>, usize)> = Vec::new();
    match field {
        Field::Rational => {
            let qx: Vec<BigRational> =
                dense.iter().map(|c| c.as_rational().unwrap().clone()).collect();
            for (part, mult) in yun_squarefree(&qx_monic(&qx)) {
                let (zx, _) = qx_clear_denoms(&part);
                for fz in zassenhaus(&zx) {
                    let monic = zx_to_monic_scalars(&fz);
                    factors.push((monic, mult));
                }
            }
        }
        Field::Fp(p_char) => {
            let px: Vec<u64> = dense
                .iter()
                .map(|c| match c {
                    Scalar::Fp { val, .. } => *val,
                    Scalar::Rat(_) => unreachable!("field tag mismatch"),
                })
                .collect();
            for (part, mult) in fp_squarefree(&px_monic(&px, p_char), p_char) {
                for g in berlekamp(&part, p_char) {
                    let monic = g
                        .iter()
                        .map(|&v| Scalar::from_i64(field, v as i64))
                        .collect();
                    factors.push((monic, mult));
                }
            }
        }
    }
    factors.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let unit = dense.last().unwrap().clone();
    Ok(Factorization {
        unit,
        factors: factors
            .into_iter()
            .map(|(coeffs, m)| (from_dense(p.nvars(), var, &coeffs, p.field()), m))
            .collect(),
    })
}

/// Monic square-free parts with multiplicities:
/// `lc * prod(part_i ^ mult_i) = input`. Roots within one part are simple.
pub fn squarefree_decomposition(p: &MultiPoly) -> Result<Vec<(MultiPoly, usize)>> {
    let (var, dense) = to_dense(p)?;
    if dense.len() == 1 {
        return Ok(Vec::new());
    }
    let parts: Vec<(Vec<Scalar>, usize)> = match p.field() {
        Field::Rational => {
            let qx: Vec<BigRational> =
                dense.iter().map(|c| c.as_rational().unwrap().clone()).collect();
            yun_squarefree(&qx_monic(&qx))
                .into_iter()
                .map(|(part, m)| {
                    (part.iter().map(|c| Scalar::Rat(c.clone())).collect(), m)
                })
                .collect()
        }
        Field::Fp(p_char) => {
            let px: Vec<u64> = dense
                .iter()
                .map(|c| match c {
                    Scalar::Fp { val, .. } => *val,
                    Scalar::Rat(_) => unreachable!("field tag mismatch"),
                })
                .collect();
            fp_squarefree(&px_monic(&px, p_char), p_char)
                .into_iter()
                .map(|(part, m)| {
                    (
                        part.iter()
                            .map(|&v| Scalar::from_i64(p.field(), v as i64))
                            .collect(),
                        m,
                    )
                })
                .collect()
        }
    };
    Ok(parts
        .into_iter()
        .map(|(coeffs, m)| (from_dense(p.nvars(), var, &coeffs, p.field()), m))
        .collect())
}

/// Roots in the coefficient field, with multiplicities.
pub fn rational_roots(p: &MultiPoly) -> Result<Vec<(Scalar, usize)>> {
    let fac = factor_univariate(p)?;
    let mut roots = Vec::new();
    for (f, m) in &fac.factors {
        if f.total_degree() == Some(1) {
            // monic x + c has root -c
            let (_, dense) = to_dense(f)?;
            roots.push((-&dense[0], *m));
        }
    }
    Ok(roots)
}

/// Dense coefficient list `[c0, c1, ...]` in the unique used variable.
fn to_dense(p: &MultiPoly) -> Result<(usize, Vec<Scalar>)> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let used = p.used_vars();
    if used.len() > 1 {
        return Err(Error::Input(format!(
            "expected a univariate polynomial, found {} variables",
            used.len()
        )));
    }
    let var = used.first().copied().unwrap_or(0);
    let deg = p.degree_in(var) as usize;
    let mut dense = vec![Scalar::zero(p.field()); deg + 1];
    for (e, c) in p.terms() {
        dense[e[var] as usize] = c.clone();
    }
    Ok((var, dense))
}

fn from_dense(nvars: usize, var: usize, coeffs: &[Scalar], field: Field) -> MultiPoly {
    let mut acc = MultiPoly::zero(nvars, field);
    for (i, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            let mut e = [0u16; 4];
            e[var] = i as u16;
            acc = acc.add(&MultiPoly::monomial(nvars, e, c.clone()));
        }
    }
    acc
}

// ---------------------------------------------------------------- Q[x] ----

type QX = Vec<BigRational>;

fn qx_trim(a: &mut QX) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn qx_deg(a: &QX) -> usize {
    a.len().saturating_sub(1)
}

fn qx_monic(a: &QX) -> QX {
    let lc = a.last().expect("nonzero polynomial");
    a.iter().map(|c| c / lc).collect()
}

fn qx_derivative(a: &QX) -> QX {
    let mut d: QX = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
        .collect();
    qx_trim(&mut d);
    d
}

fn qx_divrem(a: &QX, b: &QX) -> (QX, QX) {
    let db = qx_deg(b);
    let lc = b.last().expect("division by zero polynomial");
    let mut rem = a.clone();
    qx_trim(&mut rem);
    let mut quot: QX = vec![BigRational::zero(); a.len()];
    while !rem.is_empty() && qx_deg(&rem) >= db {
        let dr = qx_deg(&rem);
        let c = rem.last().unwrap() / lc;
        quot[dr - db] = c.clone();
        for i in 0..=db {
            let t = &rem[dr - db + i] - &(&c * &b[i]);
            rem[dr - db + i] = t;
        }
        qx_trim(&mut rem);
    }
    qx_trim(&mut quot);
    (quot, rem)
}

fn qx_divexact(a: &QX, b: &QX) -> QX {
    let (q, r) = qx_divrem(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

fn qx_gcd(a: &QX, b: &QX) -> QX {
    let (mut x, mut y) = (a.clone(), b.clone());
    qx_trim(&mut x);
    qx_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = qx_divrem(&x, &y);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        qx_monic(&x)
    }
}

fn qx_sub(a: &QX, b: &QX) -> QX {
    let mut out = vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    qx_trim(&mut out);
    out
}

/// Yun's square-free decomposition in characteristic zero; input monic.
fn yun_squarefree(f: &QX) -> Vec<(QX, usize)> {
    let df = qx_derivative(f);
    let g = qx_gcd(f, &df);
    if qx_deg(&g) == 0 {
        return vec![(f.clone(), 1)];
    }
    let mut out = Vec::new();
    let mut b = qx_divexact(f, &g);
    let mut d = qx_sub(&qx_divexact(&df, &g), &qx_derivative(&b));
    let mut i = 1;
    while qx_deg(&b) > 0 {
        let a = qx_gcd(&b, &d);
        if qx_deg(&a) > 0 {
            out.push((a.clone(), i));
        }
        b = qx_divexact(&b, &a);
        let c = qx_divexact(&d, &a);
        d = qx_sub(&c, &qx_derivative(&b));
        i += 1;
    }
    out
}

/// Scale a rational polynomial to a primitive integer polynomial with
/// positive leading coefficient; returns (primitive poly, applied scale).
fn qx_clear_denoms(a: &QX) -> (Vec<BigInt>, BigRational) {
    let mut den = BigInt::one();
    for c in a {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = a.iter().map(|c| (c * BigRational::from(den.clone())).to_integer()).collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
    (prim, BigRational::new(den, content))
}

// ---------------------------------------------------------------- Z[x] ----

type ZX = Vec<BigInt>;

fn zx_trim(a: &mut ZX) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn zx_deg(a: &ZX) -> usize {
    a.len().saturating_sub(1)
}

fn zx_mul(a: &ZX, b: &ZX) -> ZX {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = &out[i + j] + x * y;
            out[i + j] = t;
        }
    }
    out
}

/// Exact division in Z[x]; None when b does not divide a.
fn zx_divexact(a: &ZX, b: &ZX) -> Option<ZX> {
    let db = zx_deg(b);
    let lc = b.last()?;
    let mut rem = a.clone();
    zx_trim(&mut rem);
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if zx_deg(&rem) < db {
        return None;
    }
    let mut quot: ZX = vec![BigInt::zero(); zx_deg(&rem) - db + 1];
    while !rem.is_empty() && zx_deg(&rem) >= db {
        let dr = zx_deg(&rem);
        let (c, r) = rem.last().unwrap().div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        quot[dr - db] = c.clone();
        for i in 0..=db {
            let t = &rem[dr - db + i] - &c * &b[i];
            rem[dr - db + i] = t;
        }
        zx_trim(&mut rem);
    }
    if rem.is_empty() {
        Some(quot)
    } else {
        None
    }
}

fn zx_primitive(a: &ZX) -> ZX {
    let mut content = BigInt::zero();
    for c in a {
        content = content.gcd(c);
    }
    if content.is_zero() {
        return a.clone();
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    a.iter().map(|c| c / &content).collect()
}

fn zx_to_monic_scalars(a: &ZX) -> Vec<Scalar> {
    let lc = BigRational::from(a.last().unwrap().clone());
    a.iter()
        .map(|c| Scalar::Rat(BigRational::from(c.clone()) / &lc))
        .collect()
}

// ------------------------------------------------------------- GF(p)[x] ----

type PX = Vec<u64>;

fn px_trim(a: &mut PX) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn px_deg(a: &PX) -> usize {
    a.len().saturating_sub(1)
}

fn px_monic(a: &PX, p: u64) -> PX {
    let mut t: PX = a.iter().map(|&c| c % p).collect();
    px_trim(&mut t);
    let lc_inv = inv_mod(*t.last().expect("nonzero polynomial"), p);
    t.iter().map(|&c| mul_mod(c, lc_inv, p)).collect()
}

fn px_mul(a: &PX, b: &PX, p: u64) -> PX {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    px_trim(&mut out);
    out
}

fn px_divrem(a: &PX, b: &PX, p: u64) -> (PX, PX) {
    let db = px_deg(b);
    let lc_inv = inv_mod(*b.last().expect("division by zero polynomial"), p);
    let mut rem = a.clone();
    px_trim(&mut rem);
    let mut quot = vec![0u64; rem.len()];
    while !rem.is_empty() && px_deg(&rem) >= db {
        let dr = px_deg(&rem);
        let c = mul_mod(*rem.last().unwrap(), lc_inv, p);
        quot[dr - db] = c;
        for i in 0..=db {
            let sub = mul_mod(c, b[i], p);
            rem[dr - db + i] = (rem[dr - db + i] + p - sub) % p;
        }
        px_trim(&mut rem);
    }
    px_trim(&mut quot);
    (quot, rem)
}

fn px_gcd(a: &PX, b: &PX, p: u64) -> PX {
    let (mut x, mut y) = (a.clone(), b.clone());
    px_trim(&mut x);
    px_trim(&mut y);
    while !y.is_empty() {
        let (_, r) = px_divrem(&x, &y, p);
        x = y;
        y = r;
    }
    if x.is_empty() {
        x
    } else {
        px_monic(&x, p)
    }
}

fn px_derivative(a: &PX, p: u64) -> PX {
    let mut d: PX = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mul_mod(i as u64 % p, c, p))
        .collect();
    px_trim(&mut d);
    d
}

fn px_sub(a: &PX, b: &PX, p: u64) -> PX {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c % p;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c % p) % p;
    }
    px_trim(&mut out);
    out
}

/// x^e mod f over GF(p) by binary exponentiation.
fn px_pow_x_mod(e: u64, f: &PX, p: u64) -> PX {
    let mut result: PX = vec![1];
    let mut base: PX = vec![0, 1];
    let mut e = e;
    // reduce base once in case deg f == 1
    base = px_divrem(&base, f, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = px_divrem(&px_mul(&result, &base, p), f, p).1;
        }
        e >>= 1;
        if e > 0 {
            base = px_divrem(&px_mul(&base, &base, p), f, p).1;
        }
    }
    result
}

/// Square-free decomposition over GF(p), including the p-th-power case
/// (a vanishing derivative means f = g(x^p) with the same coefficients).
fn fp_squarefree(f: &PX, p: u64) -> Vec<(PX, usize)> {
    fn go(f: &PX, p: u64, base_mult: usize, out: &mut Vec<(PX, usize)>) {
        if px_deg(f) == 0 {
            return;
        }
        let df = px_derivative(f, p);
        if df.is_empty() {
            // pure p-th power: take the p-th root coefficientwise
            let root: PX = f.iter().step_by(p as usize).copied().collect();
            go(&px_monic(&root, p), p, base_mult * p as usize, out);
            return;
        }
        let mut c = px_gcd(f, &df, p);
        let mut w = px_divrem(f, &c, p).0;
        let mut i = 1;
        while px_deg(&w) > 0 {
            let y = px_gcd(&w, &c, p);
            let z = px_divrem(&w, &y, p).0;
            if px_deg(&z) > 0 {
                out.push((z, i * base_mult));
            }
            c = px_divrem(&c, &y, p).0;
            w = y;
            i += 1;
        }
        if px_deg(&c) > 0 {
            let root: PX = c.iter().step_by(p as usize).copied().collect();
            go(&px_monic(&root, p), p, base_mult * p as usize, out);
        }
    }
    let mut out = Vec::new();
    go(f, p, 1, &mut out);
    out.sort_by(|a, b| (a.1, &a.0).cmp(&(b.1, &b.0)));
    out
}

/// Berlekamp factorization of a monic square-free polynomial over GF(p).
fn berlekamp(f: &PX, p: u64) -> Vec<PX> {
    let n = px_deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    // Frobenius matrix: row i holds x^(i*p) mod f
    let xp = px_pow_x_mod(p, f, p);
    let mut rows: Vec<PX> = Vec::with_capacity(n);
    rows.push(vec![1]);
    for i in 1..n {
        let prev = rows[i - 1].clone();
        rows.push(px_divrem(&px_mul(&prev, &xp, p), f, p).1);
    }
    // nullspace basis of (Q - I)^T over GF(p)
    let mut mat = vec![vec![0u64; n]; n];
    for (i, row) in rows.iter().enumerate() {
        for j in 0..n {
            let q = row.get(j).copied().unwrap_or(0);
            let delta = if i == j { 1 } else { 0 };
            mat[j][i] = (q + p - delta) % p;
        }
    }
    let basis = fp_nullspace(&mut mat, p);
    let r = basis.len();
    let mut work = vec![f.clone()];
    for v in &basis {
        if work.len() == r {
            break;
        }
        // skip the constant vector
        if v.iter().skip(1).all(|&c| c == 0) {
            continue;
        }
        let mut vpoly: PX = v.clone();
        px_trim(&mut vpoly);
        let mut next = Vec::new();
        for u in &work {
            if px_deg(u) <= 1 {
                next.push(u.clone());
                continue;
            }
            let mut rem = u.clone();
            for c in 0..p {
                if px_deg(&rem) == 0 {
                    break;
                }
                let shifted = px_sub(&vpoly, &vec![c], p);
                let g = px_gcd(&rem, &shifted, p);
                if px_deg(&g) > 0 && px_deg(&g) < px_deg(&rem) {
                    rem = px_divrem(&rem, &g, p).0;
                    next.push(g);
                }
            }
            if px_deg(&rem) > 0 {
                next.push(rem);
            }
        }
        work = next;
    }
    work.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    work
}

/// Nullspace basis of a square matrix over GF(p) (destroys the input).
fn fp_nullspace(mat: &mut [Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(pr) = (rank..n).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pr);
        let inv = inv_mod(mat[rank][col], p);
        for x in mat[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for r in 0..n {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in 0..n {
                    let sub = mul_mod(factor, mat[rank][c], p);
                    mat[r][c] = (mat[r][c] + p - sub) % p;
                }
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
        if rank == n {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - mat[row][free] % p) % p;
        }
        basis.push(v);
    }
    basis
}

// ------------------------------------------------------- Hensel lifting ----

/// Canonical residues in [0, m).
fn zmx_normalize(a: &ZX, m: &BigInt) -> ZX {
    let mut out: ZX = a.iter().map(|c| c.mod_floor(m)).collect();
    zx_trim(&mut out);
    out
}

fn zmx_mul(a: &ZX, b: &ZX, m: &BigInt) -> ZX {
    zmx_normalize(&zx_mul(a, b), m)
}

fn zmx_sub(a: &ZX, b: &ZX, m: &BigInt) -> ZX {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    zmx_normalize(&out, m)
}

fn zmx_add(a: &ZX, b: &ZX, m: &BigInt) -> ZX {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    zmx_normalize(&out, m)
}

/// Division by a monic polynomial in (Z/m)[x].
fn zmx_divrem_monic(a: &ZX, h: &ZX, m: &BigInt) -> (ZX, ZX) {
    debug_assert!(h.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let dh = zx_deg(h);
    let mut rem = zmx_normalize(a, m);
    let mut quot: ZX = vec![BigInt::zero(); rem.len()];
    while !rem.is_empty() && zx_deg(&rem) >= dh {
        let dr = zx_deg(&rem);
        let c = rem.last().unwrap().clone();
        quot[dr - dh] = c.clone();
        for i in 0..=dh {
            let t = (&rem[dr - dh + i] - &c * &h[i]).mod_floor(m);
            rem[dr - dh + i] = t;
        }
        zx_trim(&mut rem);
    }
    (zmx_normalize(&quot, m), rem)
}

fn bigint_inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "residue not invertible");
    e.x.mod_floor(m)
}

/// One Hensel step: from f = g*h (mod m) with Bezout data to modulus m^2.
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &ZX,
    g: &ZX,
    h: &ZX,
    s: &ZX,
    t: &ZX,
    m: &BigInt,
) -> (ZX, ZX, ZX, ZX) {
    let m2 = m * m;
    let e = zmx_sub(&zmx_normalize(f, &m2), &zmx_mul(g, h, &m2), &m2);
    let (q, r) = zmx_divrem_monic(&zmx_mul(s, &e, &m2), h, &m2);
    let g1 = zmx_add(&zmx_add(g, &zmx_mul(t, &e, &m2), &m2), &zmx_mul(&q, g, &m2), &m2);
    let h1 = zmx_add(h, &r, &m2);
    let one: ZX = vec![BigInt::one()];
    let b = zmx_sub(
        &zmx_add(&zmx_mul(s, &g1, &m2), &zmx_mul(t, &h1, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = zmx_divrem_monic(&zmx_mul(s, &b, &m2), &h1, &m2);
    let s1 = zmx_sub(s, &d, &m2);
    let t1 = zmx_sub(&zmx_sub(t, &zmx_mul(t, &b, &m2), &m2), &zmx_mul(&c, &g1, &m2), &m2);
    (g1, h1, s1, t1)
}

/// Bezout pair for coprime g, h over GF(p) with deg s < deg h, deg t < deg g.
fn fp_bezout(g: &PX, h: &PX, p: u64) -> (PX, PX) {
    // extended Euclid tracking only the g-side coefficient
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1): (PX, PX) = (vec![1], vec![]);
    while !r1.is_empty() {
        let (q, r) = px_divrem(&r0, &r1, p);
        let s_next = px_sub(&s0, &px_mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_next;
    }
    assert_eq!(px_deg(&r0), 0, "factors share a common divisor");
    let scale = inv_mod(r0[0], p);
    let mut s: PX = s0.iter().map(|&c| mul_mod(c, scale, p)).collect();
    px_trim(&mut s);
    // enforce deg s < deg h, then t = (1 - s*g)/h keeps deg t < deg g
    if !s.is_empty() && px_deg(&s) >= px_deg(h) {
        s = px_divrem(&s, h, p).1;
    }
    let num = px_sub(&vec![1], &px_mul(&s, g, p), p);
    let (t, tr) = px_divrem(&num, h, p);
    assert!(tr.is_empty(), "bezout identity failed");
    (s, t)
}

fn px_to_zx(a: &PX) -> ZX {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zx_mod_p(a: &ZX, p: u64) -> PX {
    let bp = BigInt::from(p);
    let mut out: PX = a
        .iter()
        .map(|c| {
            let r: BigInt = c.mod_floor(&bp);
            u64::try_from(r).unwrap()
        })
        .collect();
    px_trim(&mut out);
    out
}

/// Lift the factorization f = lc(f) * prod(leaves) from mod p to mod m_final,
/// returning monic factors mod m_final. f is exact mod m_final.
fn lift_tree(f: &ZX, leaves: &[PX], p: u64, m_final: &BigInt) -> Vec<ZX> {
    if leaves.len() == 1 {
        let lc_inv = bigint_inv_mod(f.last().unwrap(), m_final);
        let monic: ZX = f.iter().map(|c| (c * &lc_inv).mod_floor(m_final)).collect();
        return vec![monic];
    }
    let mid = leaves.len() / 2;
    let (left, right) = leaves.split_at(mid);
    let lc_mod_p = zx_mod_p(&vec![f.last().unwrap().clone()], p);
    let mut g0 = lc_mod_p;
    for leaf in left {
        g0 = px_mul(&g0, leaf, p);
    }
    let mut h0: PX = vec![1];
    for leaf in right {
        h0 = px_mul(&h0, leaf, p);
    }
    let (s0, t0) = fp_bezout(&g0, &h0, p);
    let mut g = px_to_zx(&g0);
    let mut h = px_to_zx(&h0);
    let mut s = px_to_zx(&s0);
    let mut t = px_to_zx(&t0);
    let mut m = BigInt::from(p);
    while &m < m_final {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let mut out = lift_tree(&g, left, p, m_final);
    out.extend(lift_tree(&h, right, p, m_final));
    out
}

// ----------------------------------------------------------- Zassenhaus ----

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Balanced representative in (-m/2, m/2].
fn balanced(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Factor a primitive square-free integer polynomial into irreducible
/// primitive integer polynomials.
fn zassenhaus(f: &ZX) -> Vec<ZX> {
    let n = zx_deg(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();

    // a prime where f stays square-free with full degree
    let mut p = 3u64;
    let (p, modular): (u64, Vec<PX>) = loop {
        if is_prime_u64(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = zx_mod_p(f, p);
            let dfp = px_derivative(&fp, p);
            if !dfp.is_empty() && px_deg(&px_gcd(&fp, &dfp, p)) == 0 {
                let monic = px_monic(&fp, p);
                break (p, berlekamp(&monic, p));
            }
        }
        p += 2;
    };
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // coefficient bound for any factor, with lc folded in
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let bound = (norm_sq.sqrt() + 1) * (BigInt::one() << n) * lc.abs() * (n as i64 + 1);
    let two_bound = &bound * 2;
    let mut m_final = BigInt::from(p);
    while m_final <= two_bound {
        m_final = &m_final * &m_final;
    }

    let f_mod = zmx_normalize(f, &m_final);
    let lifted = lift_tree(&f_mod, &modular, p, &m_final);

    // subset recombination
    let mut alive: Vec<usize> = (0..lifted.len()).collect();
    let mut current = f.clone();
    let mut result = Vec::new();
    let mut size = 1;
    while 2 * size <= alive.len() {
        let mut found = None;
        'search: for combo in alive.iter().copied().combinations(size) {
            let mut cand: ZX = vec![current.last().unwrap().mod_floor(&m_final)];
            for &i in &combo {
                cand = zmx_mul(&cand, &lifted[i], &m_final);
            }
            let bal: ZX = cand.iter().map(|c| balanced(c, &m_final)).collect();
            let prim = zx_primitive(&bal);
            if let Some(quot) = zx_divexact(&current, &prim) {
                found = Some((combo, prim, quot));
                break 'search;
            }
        }
        match found {
            Some((combo, prim, quot)) => {
                result.push(prim);
                current = quot;
                alive.retain(|i| !combo.contains(i));
            }
            None => size += 1,
        }
    }
    if zx_deg(&current) > 0 || result.is_empty() {
        result.push(zx_primitive(&current));
    }
    result
}
