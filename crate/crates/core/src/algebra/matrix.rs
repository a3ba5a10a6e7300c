//! Square matrices over a commutative coefficient ring, with Neumann-series
//! inversion for certified-small perturbations of the identity.

use crate::error::{Error, Result};

/// The minimal ring surface the matrix layer needs. Context-carrying rings
/// (polynomials know their universe) derive zero and one from an existing
/// element rather than from thin air.
pub trait RingElem: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for crate::algebra::Rational {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn is_zero(&self) -> bool {
        crate::algebra::Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

impl RingElem for crate::algebra::PolyElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.universe())
    }
    fn one_like(&self) -> Self {
        Self::one(self.universe())
    }
    fn is_zero(&self) -> bool {
        crate::algebra::PolyElement::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        crate::algebra::PolyElement::add(self, other).expect("universe mismatch")
    }
    fn sub(&self, other: &Self) -> Self {
        crate::algebra::PolyElement::sub(self, other).expect("universe mismatch")
    }
    fn mul(&self, other: &Self) -> Self {
        crate::algebra::PolyElement::mul(self, other).expect("universe mismatch")
    }
    fn neg(&self) -> Self {
        crate::algebra::PolyElement::neg(self)
    }
}

/// r x r matrix over a coefficient ring; r >= 1.
#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<T> {
    size: usize,
    entries: Vec<T>,
}

/// Smallness witness for `neumann_inverse`: writes m = 1 - h and promises
/// the series over h terminates or may be truncated.
#[derive(Clone, Copy, Debug)]
pub enum NeumannCertificate {
    /// h is nilpotent in the coefficient ring; the sum is finite and exact.
    /// `max_order` bounds the search for the vanishing power.
    Nilpotent { max_order: usize },
    /// Sum the series to the given truncation order (inclusive); exactness
    /// modulo a prime power is the caller's contract.
    Truncated { order: usize },
}

impl<T: RingElem> RingMatrix<T> {
    pub fn from_entries(size: usize, entries: Vec<T>) -> Result<Self> {
        if size == 0 || entries.len() != size * size {
            return Err(Error::DimensionMismatch(format!(
                "expected {size}x{size} entries"
            )));
        }
        Ok(RingMatrix { size, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        Ok(RingMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity_like(sample: &T, size: usize) -> Self {
        let mut entries = vec![sample.zero_like(); size * size];
        for i in 0..size {
            entries[i * size + i] = sample.one_like();
        }
        RingMatrix { size, entries }
    }

    pub fn zero_like(sample: &T, size: usize) -> Self {
        RingMatrix {
            size,
            entries: vec![sample.zero_like(); size * size],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entry(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.size + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn sample(&self) -> &T {
        &self.entries[0]
    }

    pub fn map<U: RingElem>(&self, f: impl Fn(&T) -> U) -> RingMatrix<U> {
        RingMatrix {
            size: self.size,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity_like(self.sample(), self.size)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(RingMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(RingMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        RingMatrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        RingMatrix {
            size: self.size,
            entries: self.entries.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let n = self.size;
        let zero = self.sample().zero_like();
        let mut entries = vec![zero; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = self.sample().zero_like();
                for k in 0..n {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                entries[i * n + j] = acc;
            }
        }
        Ok(RingMatrix { size: n, entries })
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity_like(self.sample(), self.size);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base).expect("same size");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base).expect("same size");
            }
        }
        acc
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> T {
        let mut acc = self.sample().zero_like();
        for i in 0..self.size {
            acc = acc.add(self.entry(i, i));
        }
        acc
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Partial Neumann sum 1 + h + ... + h^order.
    pub fn neumann_series(h: &Self, order: usize) -> Self {
        let mut acc = Self::identity_like(h.sample(), h.size);
        let mut power = Self::identity_like(h.sample(), h.size);
        for _ in 1..=order {
            power = power.mul(h).expect("same size");
            if power.is_zero_matrix() {
                break;
            }
            acc = acc.add(&power).expect("same size");
        }
        acc
    }

    /// Invert m = 1 - h via the Neumann series, per the certificate. In
    /// nilpotent mode the result is exact and is verified against the
    /// identity on both sides; in truncated mode the partial sum is
    /// returned as-is.
    pub fn neumann_inverse(&self, certificate: NeumannCertificate) -> Result<Self> {
        let one = Self::identity_like(self.sample(), self.size);
        let h = one.sub(self)?;
        match certificate {
            NeumannCertificate::Nilpotent { max_order } => {
                let mut acc = one.clone();
                let mut power = one.clone();
                let mut vanished = false;
                for _ in 1..=max_order {
                    power = power.mul(&h)?;
                    if power.is_zero_matrix() {
                        vanished = true;
                        break;
                    }
                    acc = acc.add(&power)?;
                }
                if !vanished {
                    return Err(Error::Certificate(format!(
                        "h = 1 - m not nilpotent within order {max_order}"
                    )));
                }
                if self.mul(&acc)? != one || acc.mul(self)? != one {
                    return Err(Error::Certificate(
                        "nilpotent Neumann inverse failed exact verification".into(),
                    ));
                }
                Ok(acc)
            }
            NeumannCertificate::Truncated { order } => Ok(Self::neumann_series(&h, order)),
        }
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.size == other.size {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "matrix sizes {} and {} differ",
                self.size, other.size
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PolyElement, Rational, VarKind, VarSpec, VarUniverse};

    #[test]
    fn trace_of_identity_and_strict_upper() {
        let id: RingMatrix<Rational> = RingMatrix::identity_like(&Rational::one(), 3);
        assert_eq!(id.trace(), Rational::from_int(3));
        let upper = RingMatrix::from_rows(vec![
            vec![Rational::zero(), Rational::from_int(5)],
            vec![Rational::zero(), Rational::zero()],
        ])
        .unwrap();
        assert_eq!(upper.trace(), Rational::zero());
    }

    #[test]
    fn neumann_with_nilpotent_scalar() {
        // m = 1 - e1*A over Q[e1]/(e1^2): inverse is 1 + e1*A.
        let u = VarUniverse::new(vec![VarSpec {
            name: "e1".into(),
            kind: VarKind::Nilpotent { cap: 1 },
        }])
        .unwrap();
        let e = PolyElement::var_named(&u, "e1").unwrap();
        let one = PolyElement::one(&u);
        let a = PolyElement::constant(&u, Rational::from_int(7));
        let m = RingMatrix::from_rows(vec![vec![PolyElement::sub(&one, &(&e * &a)).unwrap()]])
            .unwrap();
        let inv = m.neumann_inverse(NeumannCertificate::Nilpotent { max_order: 4 }).unwrap();
        let expect =
            RingMatrix::from_rows(vec![vec![PolyElement::add(&one, &(&e * &a)).unwrap()]]).unwrap();
        assert_eq!(inv, expect);
    }

    #[test]
    fn neumann_with_nilpotent_matrix() {
        // m = 1 - x1*E12; E12^2 = 0 so the inverse is 1 + x1*E12.
        let u = VarUniverse::new(vec![VarSpec {
            name: "x1".into(),
            kind: VarKind::Simplex(1),
        }])
        .unwrap();
        let zero = PolyElement::zero(&u);
        let one = PolyElement::one(&u);
        let x1 = PolyElement::var_named(&u, "x1").unwrap();
        let m = RingMatrix::from_rows(vec![
            vec![one.clone(), x1.neg()],
            vec![zero.clone(), one.clone()],
        ])
        .unwrap();
        let inv = m.neumann_inverse(NeumannCertificate::Nilpotent { max_order: 4 }).unwrap();
        let expect = RingMatrix::from_rows(vec![
            vec![one.clone(), x1.clone()],
            vec![zero, one],
        ])
        .unwrap();
        assert_eq!(inv, expect);
    }

    #[test]
    fn neumann_certificate_failure() {
        // m = 1 - 1 has h = 1, never nilpotent.
        let two = RingMatrix::from_rows(vec![vec![Rational::zero()]]).unwrap();
        assert!(two
            .neumann_inverse(NeumannCertificate::Nilpotent { max_order: 8 })
            .is_err());
    }

    #[test]
    fn padic_truncated_inverse_mod_p4() {
        // m = 1 - p*S with S the 2x2 swap; truncated inverse at order 3
        // satisfies m * n = 1 mod p^4 for p = 3.
        let p = Rational::from_int(3);
        let one = Rational::one();
        let zero = Rational::zero();
        let s = RingMatrix::from_rows(vec![
            vec![zero.clone(), one.clone()],
            vec![one.clone(), zero.clone()],
        ])
        .unwrap();
        let id: RingMatrix<Rational> = RingMatrix::identity_like(&one, 2);
        let m = id.sub(&s.scale(&p)).unwrap();
        let n = m
            .neumann_inverse(NeumannCertificate::Truncated { order: 3 })
            .unwrap();
        // Oracle: direct modular multiplication.
        let prod = m.mul(&n).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { Rational::one() } else { Rational::zero() };
                assert!(prod.entry(i, j).congruent_mod(&expect, 3, 4));
            }
        }
        // And the explicit closed form sum_{k<=3} p^k S^k.
        let mut expect = RingMatrix::zero_like(&one, 2);
        for k in 0..=3u32 {
            expect = expect
                .add(&s.pow(k).scale(&p.pow(k as i64)))
                .unwrap();
        }
        assert_eq!(n, expect);
    }

    #[test]
    fn trace_cyclic_property() {
        // Tr(AB) = Tr(BA) for sampled rational 3x3 matrices.
        let vals_a = [3, -1, 4, 1, -5, 9, 2, -6, 5];
        let vals_b = [-2, 7, 1, 8, 0, -3, 4, 4, -9];
        let a = RingMatrix::from_entries(
            3,
            vals_a.iter().map(|&v| Rational::from_int(v)).collect(),
        )
        .unwrap();
        let b = RingMatrix::from_entries(
            3,
            vals_b.iter().map(|&v| Rational::from_int(v)).collect(),
        )
        .unwrap();
        assert_eq!(a.mul(&b).unwrap().trace(), b.mul(&a).unwrap().trace());
    }
}
