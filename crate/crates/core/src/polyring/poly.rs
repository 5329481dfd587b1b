use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded reverse lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
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

    pub fn times_variable(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `x^a` divides `self`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // the last differing exponent decides; smaller exponent is larger
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `nvars` variables, largest first.
#[derive(Debug, Clone)]
pub struct MonomialBasis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, d: u32) -> Self {
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; nvars];
        fill(&mut cur, 0, d, &mut monomials);
        monomials.sort_by(|a, b| b.cmp(a));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        MonomialBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

fn fill(cur: &mut Vec<u32>, pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Monomial(Vec::new()));
        }
        return;
    }
    if pos == cur.len() - 1 {
        cur[pos] = left;
        out.push(Monomial(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for e in 0..=left {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// Multivariate polynomial over `F` in variables `x1..xn`.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.field == other.field && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Polynomial {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        Self::term(field, nvars, Monomial::one(nvars), c)
    }

    pub fn term(field: F, nvars: usize, m: Monomial, c: F::Elem) -> Self {
        assert_eq!(m.nvars(), nvars);
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial {
            field,
            nvars,
            terms,
        }
    }

    pub fn variable(field: F, nvars: usize, i: usize) -> Self {
        let one = field.one();
        Self::term(field, nvars, Monomial::variable(nvars, i), one)
    }

    /// Builds from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(field: F, nvars: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars);
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &F::Elem) {
        let field = &self.field;
        match self.terms.get_mut(&m) {
            Some(old) => {
                let sum = field.add(old, c);
                if field.is_zero(&sum) {
                    self.terms.remove(&m);
                } else {
                    *old = sum;
                }
            }
            None => {
                if !field.is_zero(c) {
                    self.terms.insert(m, c.clone());
                }
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from largest to smallest monomial.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().next_back()
    }

    /// Degree of every term, or `None` for zero and inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch(format!(
                "{} variables vs {}",
                self.nvars, other.nvars
            )));
        }
        if self.field != other.field {
            return Err(Error::RingMismatch(format!(
                "characteristic {} vs {}",
                self.field.characteristic(),
                other.field.characteristic()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.neg(&self.field.one()))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.field.clone(), self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &self.field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
        Polynomial {
            field: self.field.clone(),
            nvars: self.nvars,
            terms,
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&self.field.inv(c)),
            None => self.clone(),
        }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (m, c)) in self.terms().enumerate() {
            let neg = self.field.is_negative(c);
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = self.field.format_abs(c);
            let is_const = m.degree() == 0;
            if is_const {
                f.write_str(&abs)?;
            } else if abs == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
