use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::tableaux::Tableau;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `x_i ↦ x_{σ(i)}`.
    pub fn permute(&self, sigma: &[usize]) -> Monomial {
        let mut out = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[sigma[i]] = e;
        }
        Monomial(out)
    }

    /// Sorted exponents.
    pub fn content(&self) -> Vec<u32> {
        let mut c = self.0.clone();
        c.sort_unstable();
        c
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Monomial(e), Rational::one())
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn permute(&self, sigma: &[usize]) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.permute(sigma), c.clone())).collect(),
        }
    }

    pub fn substitute_last_zero(&self) -> MultiPoly {
        let n = self.nvars - 1;
        MultiPoly {
            nvars: n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[n] == 0)
                .map(|(m, c)| (Monomial(m.0[..n].to_vec()), c.clone()))
                .collect(),
        }
    }

    /// Same polynomial regarded in `nvars` variables.
    pub fn extend_vars(&self, nvars: usize) -> MultiPoly {
        assert!(nvars >= self.nvars);
        MultiPoly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Lex-order division by a single divisor; the remainder must vanish.
    pub fn divide_exact(&self, g: &MultiPoly) -> Result<MultiPoly> {
        let (lm, lc) = match g.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return domain("division by zero polynomial"),
        };
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision);
            }
            let t = MultiPoly::monomial(m.div(&lm), c / &lc);
            rem = &rem - &(&t * g);
            q = &q + &t;
        }
        Ok(q)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: format!("{}/{}", c.numer(), c.denom()),
                exps: m.0.clone(),
            })
            .collect()
    }

    /// Text form with the common monomial factor pulled out, e.g. `(x2^2 - x1^2)*x3^2*x4^2`.
    pub fn factored(&self) -> String {
        if self.terms.len() < 2 {
            return self.to_string();
        }
        let g = self.monomial_content();
        if g.degree() == 0 {
            return self.to_string();
        }
        let q = MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.div(&g), c.clone())).collect(),
        };
        format!("({q})*{g}")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let is_one = m.degree() == 0;
            if a.is_one() {
                write!(f, "{m}")?;
            } else if is_one {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }
}

/// Parses expressions such as `2*(x2^2 - x1^2)*x3^2 + x4`.
pub fn parse_poly(s: &str, nvars: usize) -> Result<MultiPoly> {
    let tokens: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { tokens, pos: 0, nvars };
    let out = p.sum()?;
    if p.pos != p.tokens.len() {
        return domain(format!("trailing input at {} in {s:?}", p.pos));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<char>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.tokens[start..self.pos].iter().collect();
        text.parse().or_else(|_| domain(format!("expected a number at {start}")))
    }

    fn sum(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.nvars);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some('+') if !first => {
                    self.pos += 1;
                    false
                }
                _ if first => false,
                _ => break,
            };
            let t = self.product()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.power()?;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.number()?;
            return Ok(base.pow(e as usize));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return domain(format!("unbalanced parenthesis at {}", self.pos));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('x') => {
                self.pos += 1;
                let i = self.number()? as usize;
                if i == 0 || i > self.nvars {
                    return domain(format!("variable x{i} outside 1..{}", self.nvars));
                }
                Ok(MultiPoly::variable(i - 1, self.nvars))
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.number()?;
                Ok(MultiPoly::constant(self.nvars, Rational::from_integer(BigInt::from(k))))
            }
            other => domain(format!("unexpected {other:?} at {}", self.pos)),
        }
    }
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn elementary_symmetric(r: usize, n: usize) -> Result<MultiPoly> {
    if r > n {
        return domain(format!("e_{r} requested in {n} variables"));
    }
    let mut p = MultiPoly::zero(n);
    for subset in crate::combinat::multisets(r, 0, n.saturating_sub(1)) {
        if subset.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let mut e = vec![0; n];
        for i in subset {
            e[i] = 1;
        }
        p.add_term(Monomial(e), Rational::one());
    }
    Ok(p)
}

/// `∏ e_r^{h_r}` with `h[0]` the exponent of `e_1`.
pub fn elementary_product(h: &[usize], n: usize) -> Result<MultiPoly> {
    let mut acc = MultiPoly::one(n);
    for (i, &e) in h.iter().enumerate() {
        if e > 0 {
            acc = &acc * &elementary_symmetric(i + 1, n)?.pow(e);
        }
    }
    Ok(acc)
}

/// Exponent of `x_i` is the entry of `M` in the box of `T` holding `i`.
pub fn monomial_from_pair(m: &Tableau, t: &Tableau) -> Result<Monomial> {
    if m.shape() != t.shape() {
        return domain(format!("shapes of {m} and {t} differ"));
    }
    if !t.is_bijective_filling() {
        return domain(format!("{t} does not have content 1..n"));
    }
    let mut e = vec![0; t.size()];
    for c in t.cells() {
        e[t.entry(c) - 1] = m.entry(c) as u32;
    }
    Ok(Monomial(e))
}

pub fn column_degree(y: &Monomial, t: &Tableau) -> Vec<u32> {
    let mut out = vec![0; t.shape().first()];
    for c in t.cells() {
        out[c.col] += y.0[t.entry(c) - 1];
    }
    out
}

/// Reverse lexicographic comparison of column-degree vectors: the last column decides first.
pub fn cmp_t(y: &Monomial, z: &Monomial, t: &Tableau) -> Ordering {
    let a = column_degree(y, t);
    let b = column_degree(z, t);
    a.iter().rev().cmp(b.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    fn poly(n: usize, terms: &[(i64, &[u32])]) -> MultiPoly {
        MultiPoly::from_terms(n, terms.iter().map(|(c, e)| (mono(e), rational(*c))))
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn elementary() {
        assert_eq!(elementary_symmetric(1, 2).unwrap(), poly(2, &[(1, &[1, 0]), (1, &[0, 1])]));
        assert_eq!(elementary_symmetric(2, 3).unwrap().len(), 3);
        assert_eq!(elementary_symmetric(4, 4).unwrap(), poly(4, &[(1, &[1, 1, 1, 1])]));
        assert_eq!(elementary_symmetric(0, 3).unwrap(), MultiPoly::one(3));
        assert!(elementary_symmetric(4, 3).is_err());
    }

    #[test]
    fn monomial_pairs() {
        let m = t(&[&[2, 4, 5], &[4]]);
        let tt = t(&[&[1, 3, 4], &[2]]);
        assert_eq!(monomial_from_pair(&m, &tt).unwrap(), mono(&[2, 4, 4, 5]));
        let m2 = t(&[&[0, 2, 4, 5], &[4]]);
        let t2 = t(&[&[1, 3, 4, 5], &[2]]);
        assert_eq!(monomial_from_pair(&m2, &t2).unwrap(), mono(&[0, 4, 2, 4, 5]));
        assert_eq!(monomial_from_pair(&t(&[&[0, 0]]), &t(&[&[2, 1]])).unwrap(), mono(&[0, 0]));
        assert!(monomial_from_pair(&t(&[&[0, 0]]), &t(&[&[1], &[2]])).is_err());
    }

    #[test]
    fn column_order() {
        let tt = t(&[&[1, 3, 4], &[2]]);
        assert_eq!(column_degree(&mono(&[1, 0, 1, 3]), &tt), vec![1, 1, 3]);
        assert_eq!(column_degree(&mono(&[0, 3, 1, 1]), &tt), vec![3, 1, 1]);
        assert_eq!(cmp_t(&mono(&[0, 3, 1, 1]), &mono(&[1, 0, 1, 3]), &tt), Ordering::Less);
        // 113 > 131 > 311
        let a = mono(&[1, 0, 1, 3]);
        let b = mono(&[1, 0, 3, 1]);
        let c = mono(&[3, 0, 1, 1]);
        assert_eq!(cmp_t(&a, &b, &tt), Ordering::Greater);
        assert_eq!(cmp_t(&b, &c, &tt), Ordering::Greater);
        assert_eq!(cmp_t(&mono(&[0, 0, 0, 0]), &c, &tt), Ordering::Less);
    }

    #[test]
    fn substitution_and_division() {
        let f = poly(4, &[(1, &[0, 2, 2, 2]), (-1, &[2, 0, 2, 2])]);
        let g = poly(4, &[(1, &[0, 1, 0, 0]), (-1, &[1, 0, 0, 0])]);
        let q = f.divide_exact(&g).unwrap();
        assert_eq!(q, poly(4, &[(1, &[1, 0, 2, 2]), (1, &[0, 1, 2, 2])]));
        assert_eq!(f.factored(), "(x2^2 - x1^2)*x3^2*x4^2");
        assert_eq!(
            poly(4, &[(1, &[1, 0, 0, 0])]).divide_exact(&g),
            Err(Error::InexactDivision)
        );
        let h = poly(3, &[(1, &[1, 0, 1]), (2, &[1, 1, 0])]);
        assert_eq!(h.substitute_last_zero(), poly(2, &[(2, &[1, 1])]));
        assert_eq!(h.permute(&[0, 1, 2]), h);
    }

    #[test]
    fn parser() {
        let p = parse_poly("x2^2*(x1^2*x3^2 + x1^2*x4^2 + x3^2*x4^2)", 4).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(parse_poly("-(x1 - x2)^2", 2).unwrap(), poly(2, &[(-1, &[2, 0]), (2, &[1, 1]), (-1, &[0, 2])]));
        assert_eq!(parse_poly("2*x1 - 3", 1).unwrap(), poly(1, &[(2, &[1]), (-3, &[0])]));
        assert!(parse_poly("x3", 2).is_err());
        assert!(parse_poly("(x1", 2).is_err());
        let f = poly(4, &[(1, &[0, 2, 2, 2]), (-1, &[2, 0, 2, 2]), (3, &[1, 1, 1, 0])]);
        assert_eq!(parse_poly(&f.to_string(), 4).unwrap(), f);
        assert_eq!(parse_poly(&f.factored(), 4).unwrap(), f);
    }

    #[test]
    fn json_and_display() {
        let p = poly(2, &[(3, &[1, 0]), (-1, &[0, 2]), (1, &[0, 0])]);
        let j = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            j,
            r#"[{"coeff":"1/1","exps":[0,0]},{"coeff":"-1/1","exps":[0,2]},{"coeff":"3/1","exps":[1,0]}]"#
        );
        assert_eq!(p.to_string(), "1 - x2^2 + 3*x1");
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..3, 3)), 0..5)
            .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(c, e)| (Monomial(e), rational(c)))))
    }

    fn arb_homogeneous() -> impl Strategy<Value = MultiPoly> {
        (0u32..4, prop::collection::vec((-5i64..=5, 0u32..4, 0u32..4), 0..5)).prop_map(|(d, ts)| {
            MultiPoly::from_terms(
                3,
                ts.into_iter().map(|(c, a, b)| {
                    let a = a.min(d);
                    let b = b.min(d - a);
                    (Monomial(vec![a, b, d - a - b]), rational(c))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert!((&(&a - &b) + &b) == a);
        }

        #[test]
        fn homogeneity_and_degree(a in arb_homogeneous(), b in arb_homogeneous(), s in 0usize..6) {
            let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
            prop_assert!(a.permute(&perms[s]).is_homogeneous());
            let p = &a * &b;
            prop_assert!(p.is_homogeneous());
            if !p.is_zero() {
                prop_assert_eq!(p.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
            }
        }

        #[test]
        fn exact_division_round_trip(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = &a * &b;
            prop_assert_eq!(p.divide_exact(&b).unwrap(), a);
        }
    }
}
