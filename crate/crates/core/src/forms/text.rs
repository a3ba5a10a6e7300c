//! Human-readable monomial-string serialization of forms. The printed form
//! is canonical (components in mask order, terms in graded-lex order) and
//! parsing is an exact inverse.

use std::fmt;

use crate::algebra::{PolyElement, Rational};
use crate::error::{Error, Result};
use crate::forms::{Chart, DifferentialForm};

impl fmt::Display for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (mask, poly) in self.components() {
            for (mono, coeff) in poly.terms() {
                let neg = coeff.is_negative();
                let mag = coeff.abs();
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if neg {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mut pieces: Vec<String> = Vec::new();
                if !mag.is_one() || (mono.total_degree() == 0 && mask == 0) {
                    pieces.push(mag.to_string());
                }
                for (v, &e) in mono.exponents().iter().enumerate() {
                    let name = &self.chart().universe().spec(v).name;
                    if e == 1 {
                        pieces.push(name.clone());
                    } else if e > 1 {
                        pieces.push(format!("{name}^{e}"));
                    }
                }
                let mut mm = mask;
                while mm != 0 {
                    let slot = mm.trailing_zeros() as usize;
                    pieces.push(format!("d{}", self.chart().generator_name(slot)));
                    mm &= mm - 1;
                }
                write!(f, "{}", pieces.join(" "))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for DifferentialForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.chart(), self)
    }
}

impl DifferentialForm {
    /// Parse the canonical monomial-string syntax, e.g.
    /// `x1 y1 dx1 dy1 - 1/2 dx2 + 3`. Generator tokens are `d<var>`; their
    /// listed order is honoured, so `dx2 dx1` parses as -dx1^dx2.
    pub fn parse(chart: &Chart, input: &str) -> Result<Self> {
        let s = input.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty form".into()));
        }
        if s == "0" {
            return Ok(Self::zero(chart));
        }
        let mut out = Self::zero(chart);
        let mut rest = s;
        let mut sign = Rational::one();
        if let Some(r) = rest.strip_prefix('-') {
            sign = -Rational::one();
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let (term, next) = split_top_level(rest);
            out = out.add(&parse_form_term(chart, term)?.scale(&sign))?;
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

fn split_top_level(s: &str) -> (&str, Option<(Rational, &str)>) {
    for (i, ch) in s.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
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

fn parse_form_term(chart: &Chart, term: &str) -> Result<DifferentialForm> {
    let universe = chart.universe();
    let mut coeff = PolyElement::one(universe);
    // Generator tokens in listed order; "x0" stands for the eliminated dx0.
    let mut gen_order: Vec<String> = Vec::new();
    for tok in term.split(|c: char| c.is_whitespace() || c == '*') {
        if tok.is_empty() {
            continue;
        }
        // Generator tokens win over variables: `d` + variable name.
        if let Some(var) = tok.strip_prefix('d') {
            if var == "x0" || chart.generator_slot_named(var).is_some() {
                gen_order.push(var.to_string());
                continue;
            }
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (
                b,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?,
            ),
            None => (tok, 1),
        };
        let factor = if base
            .chars()
            .next()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            PolyElement::constant(universe, base.parse()?)
        } else if base == "x0" {
            PolyElement::simplex_coord(universe, 0)?
        } else {
            PolyElement::var_named(universe, base)?
        };
        coeff = coeff.mul(&factor.pow(exp))?;
    }
    let mut acc = DifferentialForm::from_poly(chart, coeff)?;
    for name in &gen_order {
        acc = acc.wedge(&DifferentialForm::generator(chart, name)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let c = Chart::new(2, &["t"], &["y1"], &[("e1", 1)]).unwrap();
        let w = DifferentialForm::parse(&c, "x1 y1 dx1 dy1 - 1/2 t dx2 + e1 dt + 3").unwrap();
        let back = DifferentialForm::parse(&c, &w.to_string()).unwrap();
        assert_eq!(w, back);
    }

    #[test]
    fn generator_order_sign() {
        let c = Chart::simplex(2);
        let a = DifferentialForm::parse(&c, "dx2 dx1").unwrap();
        let b = DifferentialForm::parse(&c, "dx1 dx2").unwrap();
        assert_eq!(a, b.neg());
    }

    #[test]
    fn zero_round_trip() {
        let c = Chart::simplex(1);
        let z = DifferentialForm::parse(&c, "0").unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
    }
}
