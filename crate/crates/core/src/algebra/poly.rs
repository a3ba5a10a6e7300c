//! Multivariate polynomials over exact rationals.
//!
//! Variables carry a role tag. Simplex coordinates x_1..x_p live in the ring
//! with x_0 already eliminated through x_0 = 1 - sum x_i, so canonical forms
//! are unique and equality is syntactic. Nilpotent variables carry an
//! exponent cap; terms over the cap are dropped at construction, which makes
//! the quotient by (eps^{cap+1}) free during multiplication.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Role of a variable inside a polynomial universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    /// Barycentric coordinate x_i, index i >= 1 (x_0 is eliminated).
    Simplex(u32),
    /// Homotopy coordinate (t, s, ...); carries a differential.
    Interval,
    /// Fiber parameter (y_j); carries a differential.
    Parameter,
    /// Formal nilpotent with exponent cap; no differential.
    Nilpotent { cap: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSpec {
    pub name: String,
    pub kind: VarKind,
}

#[derive(Debug, PartialEq, Eq)]
struct UniverseInner {
    vars: Vec<VarSpec>,
}

/// Ordered list of named, tagged variables. The declared order is the
/// graded-lexicographic tiebreak order for canonical forms.
#[derive(Clone, Debug)]
pub struct VarUniverse(Arc<UniverseInner>);

impl PartialEq for VarUniverse {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarUniverse {}

impl VarUniverse {
    pub fn new(vars: Vec<VarSpec>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for v in &vars {
            if !seen.insert(v.name.clone()) {
                return Err(Error::UniverseMismatch(format!(
                    "duplicate variable name `{}`",
                    v.name
                )));
            }
            if let VarKind::Simplex(0) = v.kind {
                return Err(Error::UniverseMismatch(
                    "x_0 is eliminated and may not be declared".into(),
                ));
            }
        }
        Ok(VarUniverse(Arc::new(UniverseInner { vars })))
    }

    /// Universe with no variables (constants only).
    pub fn scalar() -> Self {
        VarUniverse(Arc::new(UniverseInner { vars: Vec::new() }))
    }

    pub fn len(&self) -> usize {
        self.0.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.vars.is_empty()
    }

    pub fn vars(&self) -> &[VarSpec] {
        &self.0.vars
    }

    pub fn spec(&self, idx: usize) -> &VarSpec {
        &self.0.vars[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v.name == name)
    }

    /// Index of the simplex coordinate x_i (i >= 1).
    pub fn simplex_index(&self, i: u32) -> Option<usize> {
        self.0
            .vars
            .iter()
            .position(|v| v.kind == VarKind::Simplex(i))
    }

    /// Indices of all simplex coordinates in increasing coordinate order.
    pub fn simplex_indices(&self) -> Vec<usize> {
        let mut out: Vec<(u32, usize)> = self
            .0
            .vars
            .iter()
            .enumerate()
            .filter_map(|(idx, v)| match v.kind {
                VarKind::Simplex(i) => Some((i, idx)),
                _ => None,
            })
            .collect();
        out.sort();
        out.into_iter().map(|(_, idx)| idx).collect()
    }

    pub fn cap(&self, idx: usize) -> Option<u32> {
        match self.0.vars[idx].kind {
            VarKind::Nilpotent { cap } => Some(cap),
            _ => None,
        }
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    fn constant(n: usize) -> Self {
        Monomial(vec![0; n].into_boxed_slice())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in canonical form: graded-lex sorted terms, no zero
/// coefficients, nilpotency caps enforced.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyElement {
    universe: VarUniverse,
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyElement {
    pub fn zero(universe: &VarUniverse) -> Self {
        PolyElement {
            universe: universe.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(universe: &VarUniverse, c: Rational) -> Self {
        let mut p = Self::zero(universe);
        if !c.is_zero() {
            p.terms.insert(Monomial::constant(universe.len()), c);
        }
        p
    }

    pub fn one(universe: &VarUniverse) -> Self {
        Self::constant(universe, Rational::one())
    }

    pub fn var(universe: &VarUniverse, idx: usize) -> Self {
        assert!(idx < universe.len());
        let mut exps = vec![0u32; universe.len()];
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps.into_boxed_slice()), Rational::one());
        PolyElement {
            universe: universe.clone(),
            terms,
        }
    }

    pub fn var_named(universe: &VarUniverse, name: &str) -> Result<Self> {
        match universe.index_of(name) {
            Some(idx) => Ok(Self::var(universe, idx)),
            None => Err(Error::UniverseMismatch(format!("unknown variable `{name}`"))),
        }
    }

    /// Barycentric coordinate x_i. For i = 0 this returns the eliminated
    /// combination 1 - sum_{i>=1} x_i.
    pub fn simplex_coord(universe: &VarUniverse, i: u32) -> Result<Self> {
        if i == 0 {
            let mut p = Self::one(universe);
            for idx in universe.simplex_indices() {
                p = &p - &Self::var(universe, idx);
            }
            Ok(p)
        } else {
            universe
                .simplex_index(i)
                .map(|idx| Self::var(universe, idx))
                .ok_or_else(|| Error::UniverseMismatch(format!("no coordinate x{i} in universe")))
        }
    }

    pub fn universe(&self) -> &VarUniverse {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.total_degree() == 0 && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    /// Constant term (the whole value if `is_constant`).
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::constant(self.universe.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The value as a rational, erroring when the polynomial is not constant.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.is_constant() {
            Ok(self.constant_term())
        } else {
            Err(Error::Domain("polynomial is not constant".into()))
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Minimal p-adic valuation over all coefficients; None for zero.
    pub fn min_valuation(&self, p: u64) -> Option<i64> {
        self.terms.values().filter_map(|c| c.valuation(p)).min()
    }

    fn insert_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        for (idx, &e) in mono.0.iter().enumerate() {
            if let Some(cap) = self.universe.cap(idx) {
                if e > cap {
                    return; // nilpotent cap: term vanishes in the quotient
                }
            }
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn from_terms(
        universe: &VarUniverse,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(universe);
        for (exps, c) in terms {
            if exps.len() != universe.len() {
                return Err(Error::UniverseMismatch(
                    "exponent vector length does not match universe".into(),
                ));
            }
            p.insert_term(Monomial(exps.into_boxed_slice()), c);
        }
        Ok(p)
    }

    fn check_same_universe(&self, other: &Self) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch(
                "operands live in different variable universes".into(),
            ))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_universe(other)?;
        let n = self.universe.len();
        let mut out = Self::zero(&self.universe);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut exps = vec![0u32; n];
                for i in 0..n {
                    exps[i] = ma.0[i] + mb.0[i];
                }
                out.insert_term(Monomial(exps.into_boxed_slice()), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.universe);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same universe");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same universe");
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `idx`.
    pub fn partial(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.to_vec();
            exps[idx] = e - 1;
            out.insert_term(
                Monomial(exps.into_boxed_slice()),
                c * &Rational::from_int(e as i64),
            );
        }
        out
    }

    /// Substitute a rational value for variable `idx`, staying in the same
    /// universe (the variable simply no longer occurs).
    pub fn eval_var(&self, idx: usize, value: &Rational) -> Self {
        let mut out = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut exps = m.0.to_vec();
            exps[idx] = 0;
            out.insert_term(Monomial(exps.into_boxed_slice()), c * &value.pow(e as i64));
        }
        out
    }

    /// Coefficient of `var^k`, with the `var` exponent zeroed out.
    pub fn coeff_of_power(&self, idx: usize, k: u32) -> Self {
        let mut out = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            if m.0[idx] == k {
                let mut exps = m.0.to_vec();
                exps[idx] = 0;
                out.insert_term(Monomial(exps.into_boxed_slice()), c.clone());
            }
        }
        out
    }

    /// Exact integral over the unit interval in variable `idx`:
    /// t^k -> 1/(k+1). The variable no longer occurs in the result.
    pub fn integrate_unit_interval(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.universe);
        for (m, c) in &self.terms {
            let k = m.0[idx];
            let mut exps = m.0.to_vec();
            exps[idx] = 0;
            out.insert_term(
                Monomial(exps.into_boxed_slice()),
                c * &Rational::new(1, k as i64 + 1),
            );
        }
        out
    }

    /// Generic substitution: `images[i]` replaces variable i. All images
    /// must live in `target`.
    pub fn substitute(&self, target: &VarUniverse, images: &[PolyElement]) -> Result<Self> {
        if images.len() != self.universe.len() {
            return Err(Error::UniverseMismatch(
                "one image required per source variable".into(),
            ));
        }
        for img in images {
            if img.universe() != target {
                return Err(Error::UniverseMismatch(
                    "substitution image in wrong universe".into(),
                ));
            }
        }
        // Power cache per variable.
        let mut powers: Vec<Vec<PolyElement>> = images
            .iter()
            .map(|img| vec![PolyElement::one(target), img.clone()])
            .collect();
        let mut power = |v: usize, e: u32| -> PolyElement {
            while powers[v].len() <= e as usize {
                let last = powers[v].last().unwrap().clone();
                let base = powers[v][1].clone();
                powers[v].push(last.mul(&base).expect("same universe"));
            }
            powers[v][e as usize].clone()
        };
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Self::constant(target, c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    acc = acc.mul(&power(v, e))?;
                    if acc.is_zero() {
                        break;
                    }
                }
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// Re-express in `target`, matching variables by name. Errors if a
    /// variable actually occurring has no counterpart of the same kind.
    pub fn transfer_to(&self, target: &VarUniverse) -> Result<Self> {
        let src = &self.universe;
        let mapping: Vec<Option<usize>> = src
            .vars()
            .iter()
            .map(|v| target.index_of(&v.name))
            .collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut exps = vec![0u32; target.len()];
            for (v, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match mapping[v] {
                    Some(tv) => {
                        if target.spec(tv).kind != src.spec(v).kind {
                            return Err(Error::UniverseMismatch(format!(
                                "variable `{}` changes kind between universes",
                                src.spec(v).name
                            )));
                        }
                        exps[tv] = e;
                    }
                    None => {
                        return Err(Error::UniverseMismatch(format!(
                            "variable `{}` missing from target universe",
                            src.spec(v).name
                        )))
                    }
                }
            }
            out.insert_term(Monomial(exps.into_boxed_slice()), c.clone());
        }
        Ok(out)
    }

    /// Pullback along the affine map of simplices induced by a weakly
    /// increasing phi: [p] -> [q]. The input lives on the Delta^q side
    /// (simplex coordinates x_1..x_q); the result lives on Delta^p. The
    /// coordinate images are x_i -> sum_{j: phi(j)=i} x_j with x_0 read as
    /// 1 - sum x_j on both sides; non-simplex variables pass through by
    /// name.
    pub fn simplex_substitute(&self, target: &VarUniverse, phi: &[usize]) -> Result<Self> {
        check_monotone(phi)?;
        let images: Vec<PolyElement> = self
            .universe
            .vars()
            .iter()
            .map(|spec| match spec.kind {
                VarKind::Simplex(i) => coface_image(target, phi, i),
                _ => PolyElement::var_named(target, &spec.name),
            })
            .collect::<Result<_>>()?;
        self.substitute(target, &images)
    }
}

/// Image of the coordinate x_i (i >= 1) on Delta^q under the affine map of
/// phi: [p] -> [q]: sum of x_j over j in [p] with phi(j) = i, where j = 0
/// contributes the eliminated 1 - sum x_k.
pub(crate) fn coface_image(target: &VarUniverse, phi: &[usize], i: u32) -> Result<PolyElement> {
    let mut img = PolyElement::zero(target);
    for (j, &pj) in phi.iter().enumerate() {
        if pj == i as usize {
            let xj = PolyElement::simplex_coord(target, j as u32)?;
            img = img.add(&xj)?;
        }
    }
    Ok(img)
}

pub(crate) fn check_monotone(phi: &[usize]) -> Result<()> {
    if phi.is_empty() {
        return Err(Error::Domain("empty map of ordinals".into()));
    }
    if phi.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Domain(format!("map {phi:?} is not increasing")));
    }
    Ok(())
}

impl fmt::Display for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                pieces.push(mag.to_string());
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    pieces.push(self.universe.spec(v).name.clone());
                } else if e > 1 {
                    pieces.push(format!("{}^{}", self.universe.spec(v).name, e));
                }
            }
            write!(f, "{}", pieces.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PolyElement {
    /// Parse a polynomial in canonical monomial-string form, e.g.
    /// `3/2 x1^2 y1 - x2 + 1`. `*` may separate factors instead of spaces.
    /// The symbol `x0` is accepted and expands to 1 - sum x_i.
    pub fn parse(universe: &VarUniverse, input: &str) -> Result<Self> {
        let mut out = Self::zero(universe);
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut rest = s;
        let mut sign = Rational::one();
        // Leading sign.
        if let Some(r) = rest.strip_prefix('-') {
            sign = -Rational::one();
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            // Split off the next term at a top-level +/- surrounded by the
            // end of a token (no parentheses in the grammar).
            let (term_str, next) = split_term(rest);
            let term = parse_term(universe, term_str)?;
            out = out.add(&term.scale(&sign))?;
            match next {
                None => break,
                Some((next_sign, tail)) => {
                    sign = next_sign;
                    rest = tail;
                }
            }
        }
        Ok(out)
    }
}

fn split_term(s: &str) -> (&str, Option<(Rational, &str)>) {
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            // `^-` or `/-` never occur; +/- inside a term only as separators.
            let sign = if ch == '+' {
                Rational::one()
            } else {
                -Rational::one()
            };
            return (s[..i].trim(), Some((sign, s[i + 1..].trim_start())));
        }
    }
    (s.trim(), None)
}

fn parse_term(universe: &VarUniverse, term: &str) -> Result<PolyElement> {
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut acc = PolyElement::one(universe);
    for tok in term.split(|c: char| c.is_whitespace() || c == '*') {
        if tok.is_empty() {
            continue;
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => {
                let exp: u32 = e
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?;
                (b, exp)
            }
            None => (tok, 1),
        };
        let factor = if base
            .chars()
            .next()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            let c: Rational = base.parse()?;
            PolyElement::constant(universe, c)
        } else if base == "x0" {
            PolyElement::simplex_coord(universe, 0)?
        } else {
            PolyElement::var_named(universe, base)?
        };
        acc = acc.mul(&factor.pow(exp))?;
    }
    Ok(acc)
}

impl std::ops::Add for &PolyElement {
    type Output = PolyElement;
    fn add(self, rhs: &PolyElement) -> PolyElement {
        PolyElement::add(self, rhs).expect("universe mismatch in +")
    }
}

impl std::ops::Sub for &PolyElement {
    type Output = PolyElement;
    fn sub(self, rhs: &PolyElement) -> PolyElement {
        PolyElement::sub(self, rhs).expect("universe mismatch in -")
    }
}

impl std::ops::Mul for &PolyElement {
    type Output = PolyElement;
    fn mul(self, rhs: &PolyElement) -> PolyElement {
        PolyElement::mul(self, rhs).expect("universe mismatch in *")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn universe() -> VarUniverse {
        VarUniverse::new(vec![
            VarSpec {
                name: "x1".into(),
                kind: VarKind::Simplex(1),
            },
            VarSpec {
                name: "x2".into(),
                kind: VarKind::Simplex(2),
            },
            VarSpec {
                name: "y1".into(),
                kind: VarKind::Parameter,
            },
            VarSpec {
                name: "e1".into(),
                kind: VarKind::Nilpotent { cap: 1 },
            },
        ])
        .unwrap()
    }

    #[test]
    fn nilpotent_square_vanishes() {
        let u = universe();
        let e = PolyElement::var_named(&u, "e1").unwrap();
        let y = PolyElement::var_named(&u, "y1").unwrap();
        let ey = &e * &y;
        assert!((&ey * &ey).is_zero());
    }

    #[test]
    fn one_minus_x_plus_x_is_one() {
        let u = universe();
        let x1 = PolyElement::var_named(&u, "x1").unwrap();
        let one = PolyElement::one(&u);
        assert!((&(&one - &x1) + &x1).is_one());
    }

    #[test]
    fn binomial_square() {
        let u = universe();
        let x1 = PolyElement::var_named(&u, "x1").unwrap();
        let x2 = PolyElement::var_named(&u, "x2").unwrap();
        let s = (&x1 + &x2).pow(2);
        let expect = PolyElement::parse(&u, "x1^2 + 2 x1 x2 + x2^2").unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn x0_elimination_sums_to_one() {
        let u = universe();
        let x0 = PolyElement::simplex_coord(&u, 0).unwrap();
        let x1 = PolyElement::var_named(&u, "x1").unwrap();
        let x2 = PolyElement::var_named(&u, "x2").unwrap();
        assert!((&(&x0 + &x1) + &x2).is_one());
    }

    #[test]
    fn display_parse_round_trip() {
        let u = universe();
        let p = PolyElement::parse(&u, "3/2 x1^2 y1 - x2 + 1").unwrap();
        let q = PolyElement::parse(&u, &p.to_string()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn faces_on_the_interval() {
        // delta^0: [0] -> [1] misses 0, so the target vertex is e_1 where
        // x1 = 1. delta^1 misses 1, the vertex e_0 where x1 = 0.
        let u1 = VarUniverse::new(vec![VarSpec {
            name: "x1".into(),
            kind: VarKind::Simplex(1),
        }])
        .unwrap();
        let u0 = VarUniverse::scalar();
        let x1 = PolyElement::var_named(&u1, "x1").unwrap();
        let at_e1 = x1.simplex_substitute(&u0, &[1]).unwrap();
        assert!(at_e1.is_one());
        let at_e0 = x1.simplex_substitute(&u0, &[0]).unwrap();
        assert!(at_e0.is_zero());
    }

    #[test]
    fn degeneracy_section_identities() {
        // sigma^0 followed by either of its sections delta^0, delta^1 is the
        // identity on coordinates of Delta^1.
        let u1 = VarUniverse::new(vec![VarSpec {
            name: "x1".into(),
            kind: VarKind::Simplex(1),
        }])
        .unwrap();
        let u2 = VarUniverse::new(vec![
            VarSpec {
                name: "x1".into(),
                kind: VarKind::Simplex(1),
            },
            VarSpec {
                name: "x2".into(),
                kind: VarKind::Simplex(2),
            },
        ])
        .unwrap();
        let x1 = PolyElement::var_named(&u1, "x1").unwrap();
        // sigma^0: [2] -> [1] with values (0,0,1); pullback sends x1 to x2.
        let up = x1.simplex_substitute(&u2, &[0, 0, 1]).unwrap();
        assert_eq!(up, PolyElement::var_named(&u2, "x2").unwrap());
        // delta^0: [1] -> [2] with values (1,2); delta^1: (0,2).
        let back0 = up.simplex_substitute(&u1, &[1, 2]).unwrap();
        assert_eq!(back0, x1);
        let back1 = up.simplex_substitute(&u1, &[0, 2]).unwrap();
        assert_eq!(back1, x1);
    }

    #[test]
    fn non_monotone_rejected() {
        let u1 = VarUniverse::new(vec![VarSpec {
            name: "x1".into(),
            kind: VarKind::Simplex(1),
        }])
        .unwrap();
        let x1 = PolyElement::var_named(&u1, "x1").unwrap();
        assert!(x1.simplex_substitute(&VarUniverse::scalar(), &[1, 0]).is_err());
    }
}
