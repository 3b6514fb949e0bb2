//! Sparse multivariate polynomials with rational or prime-field coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Coefficients live in ℚ when `p == 0`, otherwise they are integers in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    p: u64,
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

pub(crate) fn reduce_coeff(p: u64, c: BigRational) -> BigRational {
    if p == 0 {
        return c;
    }
    let m = BigInt::from(p);
    let n = c.numer().mod_floor(&m);
    let d = c.denom().mod_floor(&m);
    assert!(!d.is_zero(), "denominator divisible by the characteristic");
    let inv = d.modpow(&BigInt::from(p - 2), &m);
    BigRational::from_integer((n * inv).mod_floor(&m))
}

pub(crate) fn inv_coeff(p: u64, c: &BigRational) -> BigRational {
    assert!(!c.is_zero(), "inverse of zero coefficient");
    reduce_coeff(p, c.recip())
}

impl Poly {
    pub fn zero(p: u64, nvars: usize) -> Self {
        Poly { p, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(p: u64, nvars: usize, c: BigRational) -> Self {
        let mut out = Poly::zero(p, nvars);
        out.add_term(Monomial::one(nvars), c);
        out
    }

    pub fn one(p: u64, nvars: usize) -> Self {
        Poly::constant(p, nvars, BigRational::one())
    }

    pub fn var(p: u64, nvars: usize, i: usize) -> Self {
        let mut out = Poly::zero(p, nvars);
        out.add_term(Monomial::var(nvars, i), BigRational::one());
        out
    }

    pub fn from_terms(p: u64, nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = Poly::zero(p, nvars);
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&i| self.degree_in(i) > 0).collect()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        let c = reduce_coeff(self.p, c);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = reduce_coeff(self.p, o.get() + c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check(&self, other: &Poly) {
        assert_eq!((self.p, self.nvars), (other.p, other.nvars), "polynomial ring mismatch");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly::from_terms(self.p, self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), -c)))
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::from_terms(self.p, self.nvars, self.terms.iter().map(|(m, d)| (m.clone(), d * c)))
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        Poly::from_terms(self.p, self.nvars, self.terms.iter().map(|(n, d)| (n.mul(m), d * c)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.check(other);
        let mut out = Poly::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.p, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        self.check(d);
        let (dm, dc) = d.leading()?;
        let dinv = inv_coeff(self.p, dc);
        let mut r = self.clone();
        let mut q = Poly::zero(self.p, self.nvars);
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(dm)?;
            let c = reduce_coeff(self.p, rc * &dinv);
            r = r.sub(&d.mul_term(&m, &c));
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&inv_coeff(self.p, c)),
        }
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e > 0 {
                let mut n = m.clone();
                n.0[var] -= 1;
                out.add_term(n, c * BigRational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Coefficients with respect to `var`, lowest power first.
    pub fn to_univariate(&self, var: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.p, self.nvars); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut n = m.clone();
            let e = std::mem::take(&mut n.0[var]) as usize;
            out[e].add_term(n, c.clone());
        }
        out
    }

    fn lc_in(&self, var: usize) -> Poly {
        self.to_univariate(var).pop().unwrap()
    }

    fn var_pow(&self, var: usize, e: u32) -> Monomial {
        let mut m = Monomial::one(self.nvars);
        m.0[var] = e;
        m
    }

    /// Pseudo-remainder with respect to `var`.
    fn prem(&self, b: &Poly, var: usize) -> Poly {
        let db = b.degree_in(var);
        let lcb = b.lc_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lcr = r.lc_in(var);
            let shift = b.mul(&lcr).mul_term(&self.var_pow(var, dr - db), &BigRational::one());
            r = r.mul(&lcb).sub(&shift);
        }
        r
    }

    fn content_in(&self, var: usize) -> Poly {
        self.to_univariate(var)
            .iter()
            .fold(Poly::zero(self.p, self.nvars), |g, c| g.gcd(c))
    }

    fn primitive_in(&self, var: usize) -> Poly {
        self.div_exact(&self.content_in(var)).expect("content divides").monic()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.as_constant().is_some() || other.as_constant().is_some() {
            return Poly::one(self.p, self.nvars);
        }
        let mut vars = self.variables();
        for v in other.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        if vars.len() == 1 {
            return self.gcd_univariate(other);
        }
        let y = *vars.last().unwrap();
        self.gcd_interpolate(other, y).unwrap_or_else(|| self.gcd_prs(other, vars[0]))
    }

    fn gcd_univariate(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem_by(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    /// Remainder of division by leading terms.
    fn rem_by(&self, d: &Poly) -> Poly {
        let (dm, dc) = d.leading().unwrap();
        let dinv = inv_coeff(self.p, dc);
        let mut r = self.clone();
        let mut out = Poly::zero(self.p, self.nvars);
        while let Some((rm, rc)) = r.leading() {
            let (rm, rc) = (rm.clone(), rc.clone());
            match rm.div(dm) {
                Some(m) => r = r.sub(&d.mul_term(&m, &reduce_coeff(self.p, &rc * &dinv))),
                None => {
                    r.terms.remove(&rm);
                    out.add_term(rm, rc);
                }
            }
        }
        out
    }

    /// Coefficients in `k[y]` of the monomials in the remaining variables.
    fn split_off(&self, y: usize) -> BTreeMap<Monomial, Poly> {
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let e = std::mem::take(&mut rest.0[y]);
            out.entry(rest)
                .or_insert_with(|| Poly::zero(self.p, self.nvars))
                .add_term(self.var_pow(y, e), c.clone());
        }
        out
    }

    fn content_over(&self, y: usize) -> Poly {
        self.split_off(y).values().fold(Poly::zero(self.p, self.nvars), |g, c| g.gcd(c))
    }

    fn eval_at(&self, y: usize, v: &BigRational) -> Poly {
        let mut vals = vec![None; self.nvars];
        vals[y] = Some(v.clone());
        self.partial_eval(&vals)
    }

    /// Gcd by specializing `y` at enough points and interpolating the images.
    fn gcd_interpolate(&self, other: &Poly, y: usize) -> Option<Poly> {
        let (ca, cb) = (self.content_over(y), other.content_over(y));
        let content = ca.gcd(&cb);
        let a = self.div_exact(&ca)?;
        let b = other.div_exact(&cb)?;
        if a.as_constant().is_some() || b.as_constant().is_some() {
            return Some(content);
        }
        let lead = |p: &Poly| p.split_off(y).into_iter().next_back().unwrap();
        let (lma, la) = lead(&a);
        let (lmb, lb) = lead(&b);
        let gamma = la.gcd(&lb);
        let mut needed = gamma.degree_in(y) as usize + a.degree_in(y).min(b.degree_in(y)) as usize + 1;
        let mut points: Vec<(BigRational, Poly)> = Vec::new();
        let mut best: Option<Monomial> = None;
        for k in 0..(needed as i64 + 40) {
            let v = BigRational::from_integer(BigInt::from(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }));
            let v = reduce_coeff(self.p, v);
            if self.p > 0 && points.iter().any(|(w, _)| *w == v) {
                if k as u64 >= 2 * self.p {
                    return None;
                }
                continue;
            }
            let (ia, ib) = (a.eval_at(y, &v), b.eval_at(y, &v));
            if ia.leading().map(|l| l.0) != Some(&lma) || ib.leading().map(|l| l.0) != Some(&lmb) {
                continue;
            }
            let g = ia.gcd(&ib);
            if g.as_constant().is_some() {
                return Some(content);
            }
            let lm = g.leading().unwrap().0.clone();
            match &best {
                Some(b) if lm > *b => continue,
                Some(b) if lm < *b => points.clear(),
                _ => {}
            }
            best = Some(lm);
            let scale = gamma.eval_at(y, &v).as_constant().unwrap();
            points.push((v, g.scale(&scale)));
            if points.len() >= needed {
                let h = interpolate(&points, y, self.p, self.nvars);
                let g = h.div_exact(&h.content_over(y))?;
                if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g.mul(&content).monic());
                }
                needed += 1;
            }
        }
        None
    }

    /// Subresultant remainder sequence in `var`; every division is exact.
    fn gcd_prs(&self, other: &Poly, var: usize) -> Poly {
        let (ca, cb) = (self.content_in(var), other.content_in(var));
        let content = ca.gcd(&cb);
        let mut a = self.div_exact(&ca).unwrap();
        let mut b = other.div_exact(&cb).unwrap();
        if a.degree_in(var) < b.degree_in(var) {
            std::mem::swap(&mut a, &mut b);
        }
        let one = Poly::one(self.p, self.nvars);
        let (mut g, mut h) = (one.clone(), one.clone());
        let last = loop {
            if b.degree_in(var) == 0 {
                break one;
            }
            let d = a.degree_in(var) - b.degree_in(var);
            let r = a.prem(&b, var);
            if r.is_zero() {
                break b.primitive_in(var);
            }
            a = b;
            b = r.div_exact(&g.mul(&h.pow(d))).expect("subresultant division");
            g = a.lc_in(var);
            h = if d == 0 { h } else { g.pow(d).div_exact(&h.pow(d - 1)).expect("subresultant division") };
        };
        last.mul(&content).monic()
    }

    /// Product of the factors of odd multiplicity, as a monic polynomial.
    ///
    /// Uses the gcd with all partial derivatives, so in characteristic p factors
    /// whose multiplicity is a multiple of p are not detected.
    pub fn odd_part(&self) -> Poly {
        let one = Poly::one(self.p, self.nvars);
        if self.as_constant().is_some() {
            return one;
        }
        let g = self.monic();
        let mut a = g.clone();
        for v in g.variables() {
            a = a.gcd(&g.derivative(v));
        }
        let mut b = g.div_exact(&a).unwrap();
        let mut out = one;
        let mut i = 1;
        while b.as_constant().is_none() {
            let y = b.gcd(&a);
            let z = b.div_exact(&y).unwrap();
            if i % 2 == 1 {
                out = out.mul(&z);
            }
            a = a.div_exact(&y).unwrap();
            b = y;
            i += 1;
        }
        out.monic()
    }

    /// A square root in characteristic 0, if `self` is a square.
    pub fn sqrt(&self) -> Option<Poly> {
        if self.p != 0 {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (m, c) = self.leading()?;
        let half = Monomial(m.0.iter().map(|&e| if e % 2 == 0 { Some(e / 2) } else { None }).collect::<Option<_>>()?);
        let lead = (half, rational_sqrt(c)?);
        let two_lead = lead.1.clone() * BigRational::from_integer(2.into());
        let mut r = Poly::from_terms(0, self.nvars, [lead.clone()]);
        loop {
            let rem = self.sub(&r.mul(&r));
            let Some((rm, rc)) = rem.leading() else { return Some(r) };
            let q = rm.div(&lead.0)?;
            if q >= lead.0 {
                return None;
            }
            r = r.add(&Poly::from_terms(0, self.nvars, [(q, rc / &two_lead)]));
        }
    }

    /// Evaluates each variable at the given constant, or keeps it when `None`.
    pub fn partial_eval(&self, values: &[Option<BigRational>]) -> Poly {
        let mut out = Poly::zero(self.p, self.nvars);
        for (m, c) in &self.terms {
            let mut n = m.clone();
            let mut c = c.clone();
            for (i, v) in values.iter().enumerate() {
                if let Some(v) = v {
                    c *= num_traits::pow(v.clone(), m.0[i] as usize);
                    n.0[i] = 0;
                }
            }
            out.add_term(n, c);
        }
        out
    }

    /// Moves coefficients to a ring with a different variable list.
    pub fn remap(&self, nvars: usize, index: &[Option<usize>]) -> Option<Poly> {
        let mut out = Poly::zero(self.p, nvars);
        for (m, c) in &self.terms {
            let mut n = Monomial::one(nvars);
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    n.0[index[i]?] += e;
                }
            }
            out.add_term(n, c.clone());
        }
        Some(out)
    }

    /// Formats with the given variable names, printing prime-field
    /// coefficients in the symmetric range.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

/// Newton interpolation of polynomial values at distinct points of `y`.
fn interpolate(points: &[(BigRational, Poly)], y: usize, p: u64, nvars: usize) -> Poly {
    let xs: Vec<&BigRational> = points.iter().map(|(v, _)| v).collect();
    let mut coeffs: Vec<Poly> = points.iter().map(|(_, g)| g.clone()).collect();
    for j in 1..coeffs.len() {
        for i in (j..coeffs.len()).rev() {
            let d = inv_coeff(p, &reduce_coeff(p, xs[i] - xs[i - j]));
            coeffs[i] = coeffs[i].sub(&coeffs[i - 1]).scale(&d);
        }
    }
    let yv = Poly::var(p, nvars, y);
    let mut out = Poly::zero(p, nvars);
    for i in (0..coeffs.len()).rev() {
        let shift = yv.sub(&Poly::constant(p, nvars, xs[i].clone()));
        out = out.mul(&shift).add(&coeffs[i]);
    }
    out
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.nvars)
            .cmp(&(other.p, other.nvars))
            .then_with(|| self.terms.iter().rev().cmp(other.terms.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn symmetric(p: u64, c: &BigRational) -> BigRational {
    if p == 0 {
        return c.clone();
    }
    let m = BigInt::from(p);
    if c.numer() * 2 > m {
        BigRational::from_integer(c.numer() - m)
    } else {
        c.clone()
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let c = symmetric(self.poly.p, c);
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(a.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[i].clone()),
                    _ => factors.push(format!("{}^{}", self.names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

/// Square root of a nonnegative rational that is a perfect square.
pub fn rational_sqrt(c: &BigRational) -> Option<BigRational> {
    if c.is_negative() {
        return None;
    }
    let (n, d) = (c.numer().sqrt(), c.denom().sqrt());
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| BigRational::new(n, d))
}
