//! Sparse integer polynomials in the variables (q,t) or (q,t,r), Schur
//! polynomials via semistandard tableau enumeration, and Schur
//! decompositions.
//!
//! Coefficients are machine integers with checked arithmetic: any overflow is
//! a hard error, never a silent wraparound.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partition::{enumerate_subpartitions, Partition};
use crate::tableau::{statistics, triangular_tableau, StandardTableau};

const VAR_NAMES: [&str; 3] = ["q", "t", "r"];

/// Sparse polynomial with a fixed variable arity (2 or 3). Terms map an
/// exponent vector of length `arity` to a nonzero coefficient. Canonical
/// term order (for printing and JSON) is total degree descending, then
/// lexicographically descending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl MultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!((1..=3).contains(&arity), "arity must be 1, 2, or 3");
        MultiPoly { arity, terms: BTreeMap::new() }
    }

    pub fn constant(arity: usize, value: i64) -> Self {
        let mut p = MultiPoly::zero(arity);
        if value != 0 {
            p.terms.insert(vec![0; arity], value);
        }
        p
    }

    pub fn one(arity: usize) -> Self {
        MultiPoly::constant(arity, 1)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &[u32]) -> i64 {
        self.terms.get(exp).copied().unwrap_or(0)
    }

    /// Adds `coef * monomial(exp)` in place, with overflow checking.
    pub fn add_term(&mut self, exp: Vec<u32>, coef: i64) -> Result<()> {
        if exp.len() != self.arity {
            return Err(Error::ArityMismatch);
        }
        if coef == 0 {
            return Ok(());
        }
        let entry = self.terms.entry(exp);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(coef)
                    .ok_or(Error::CoefficientOverflow)?;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// `self += factor * other`, with overflow checking.
    pub fn add_scaled(&mut self, other: &MultiPoly, factor: i64) -> Result<()> {
        if other.arity != self.arity {
            return Err(Error::ArityMismatch);
        }
        for (exp, &coef) in &other.terms {
            let scaled = coef.checked_mul(factor).ok_or(Error::CoefficientOverflow)?;
            self.add_term(exp.clone(), scaled)?;
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    /// Partial evaluation at integer values; `None` keeps a variable. The
    /// arity is preserved (evaluated variables appear with exponent 0).
    pub fn substitute(&self, values: &[Option<i64>]) -> Result<MultiPoly> {
        if values.len() != self.arity {
            return Err(Error::ArityMismatch);
        }
        let mut out = MultiPoly::zero(self.arity);
        for (exp, &coef) in &self.terms {
            let mut new_exp = exp.clone();
            let mut new_coef = coef;
            for (k, value) in values.iter().enumerate() {
                if let Some(v) = value {
                    new_coef = checked_pow_mul(new_coef, *v, exp[k])?;
                    new_exp[k] = 0;
                }
            }
            out.add_term(new_exp, new_coef)?;
        }
        Ok(out)
    }

    /// Drops trailing variables, which must not occur in any term.
    pub fn restrict_arity(&self, arity: usize) -> Result<MultiPoly> {
        assert!((1..=3).contains(&arity));
        if arity > self.arity {
            return Err(Error::ArityMismatch);
        }
        let mut out = MultiPoly::zero(arity);
        for (exp, &coef) in &self.terms {
            if exp[arity..].iter().any(|&e| e != 0) {
                return Err(Error::ArityMismatch);
            }
            out.add_term(exp[..arity].to_vec(), coef)?;
        }
        Ok(out)
    }

    /// Symmetry in the first two variables (q and t).
    pub fn is_qt_symmetric(&self) -> bool {
        self.terms.iter().all(|(exp, &coef)| {
            let mut swapped = exp.clone();
            swapped.swap(0, 1);
            self.coefficient(&swapped) == coef
        })
    }

    /// Terms in canonical order: total degree descending, then lex
    /// descending on the exponent vector.
    pub fn canonical_terms(&self) -> Vec<(&[u32], i64)> {
        let mut terms: Vec<(&[u32], i64)> = self
            .terms
            .iter()
            .map(|(exp, &coef)| (exp.as_slice(), coef))
            .collect();
        terms.sort_by(|a, b| {
            let da: u64 = a.0.iter().map(|&e| e as u64).sum();
            let db: u64 = b.0.iter().map(|&e| e as u64).sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        terms
    }

    /// JSON form, e.g. `{"vars":["q","t"],"terms":[{"exp":[4,1],"coef":1}]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        json!({
            "vars": VAR_NAMES[..self.arity],
            "terms": self
                .canonical_terms()
                .iter()
                .map(|(exp, coef)| json!({"exp": exp, "coef": coef}))
                .collect::<Vec<_>>(),
        })
    }
}

fn checked_pow_mul(coef: i64, base: i64, exp: u32) -> Result<i64> {
    let mut acc = coef;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(Error::CoefficientOverflow)?;
    }
    Ok(acc)
}

impl fmt::Display for MultiPoly {
    /// Canonical printing, e.g. `q^4*t + q^3*t^2 - 2*q*t`: exponent 1 bare,
    /// exponent 0 omitted, unit coefficients omitted except on constants.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (exp, coef)) in self.canonical_terms().into_iter().enumerate() {
            let magnitude = coef.unsigned_abs();
            if k == 0 {
                if coef < 0 {
                    write!(f, "-")?;
                }
            } else if coef < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors = Vec::new();
            for (v, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(VAR_NAMES[v].to_string()),
                    _ => factors.push(format!("{}^{}", VAR_NAMES[v], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", magnitude, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A semistandard Young tableau: entries weakly increase along rows and
/// strictly increase up columns. Rows stored bottom first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SSYTableau {
    rows: Vec<Vec<u32>>,
}

impl SSYTableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of occurrences of each entry `1..=max_entry`.
    pub fn content(&self, max_entry: usize) -> Vec<u32> {
        let mut counts = vec![0u32; max_entry];
        for row in &self.rows {
            for &e in row {
                counts[e as usize - 1] += 1;
            }
        }
        counts
    }
}

/// All semistandard fillings of `shape` with entries in `1..=max_entry`, by
/// cell-by-cell backtracking; empty when the shape has more rows than
/// `max_entry`.
pub fn enumerate_ssyt(shape: &Partition, max_entry: u32) -> Vec<SSYTableau> {
    assert!(max_entry >= 1);
    let mut rows: Vec<Vec<u32>> =
        shape.parts().iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Vec::new();
    if shape.len() > max_entry as usize {
        return out;
    }
    fill_cell(shape, max_entry, 0, 0, &mut rows, &mut out);
    out
}

fn fill_cell(
    shape: &Partition,
    max_entry: u32,
    row: usize,
    col: usize,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<SSYTableau>,
) {
    if row == shape.len() {
        out.push(SSYTableau { rows: rows.clone() });
        return;
    }
    if col == shape.part(row) as usize {
        fill_cell(shape, max_entry, row + 1, 0, rows, out);
        return;
    }
    let mut min = 1;
    if col > 0 {
        min = min.max(rows[row][col - 1]); // weakly increasing along the row
    }
    if row > 0 {
        min = min.max(rows[row - 1][col] + 1); // strictly increasing up the column
    }
    for entry in min..=max_entry {
        rows[row][col] = entry;
        fill_cell(shape, max_entry, row, col + 1, rows, out);
    }
    rows[row][col] = 0;
}

/// The Schur polynomial `s_shape` in `arity` variables: the sum of content
/// monomials over all semistandard fillings.
pub fn schur_polynomial(shape: &Partition, arity: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(arity);
    for ssyt in enumerate_ssyt(shape, arity as u32) {
        p.add_term(ssyt.content(arity), 1)
            .expect("SSYT counts stay far below overflow");
    }
    p
}

/// `A_theta(q,t) = sum over subpartitions mu of q^area t^sim`, statistics
/// taken with respect to `theta`. The shape must be triangular.
pub fn a_theta_polynomial(theta: &StandardTableau) -> Result<MultiPoly> {
    if !theta.shape().is_triangular() {
        return Err(Error::NotTriangular);
    }
    let mut p = MultiPoly::zero(2);
    for mu in enumerate_subpartitions(theta.shape()) {
        let s = statistics(theta, &mu)?;
        p.add_term(vec![s.area as u32, s.sim as u32], 1)?;
    }
    Ok(p)
}

/// `A_lambda(q,t)`: the statistics polynomial of the triangular tableau,
/// which by the deficit/non-similar correspondence is also the slope-similar
/// generating polynomial.
pub fn a_lambda_polynomial(p: &Partition) -> Result<MultiPoly> {
    a_theta_polynomial(&triangular_tableau(p)?)
}

/// An integer combination of Schur polynomials, indexed by shape.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    coefficients: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut e = SchurExpansion::new();
        for (shape, coef) in pairs {
            e.add(shape, coef);
        }
        e
    }

    pub fn add(&mut self, shape: Partition, coef: i64) {
        if coef == 0 {
            return;
        }
        match self.coefficients.entry(shape) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = *o.get() + coef;
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, shape: &Partition) -> i64 {
        self.coefficients.get(shape).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
        self.coefficients.iter().map(|(s, &c)| (s, c))
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// All multiplicities nonnegative (Schur positivity).
    pub fn is_positive(&self) -> bool {
        self.coefficients.values().all(|&c| c >= 0)
    }

    /// `sum of c_shape * s_shape` in the given number of variables.
    pub fn reconstruct(&self, arity: usize) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(arity);
        for (shape, &coef) in &self.coefficients {
            p.add_scaled(&schur_polynomial(shape, arity), coef)?;
        }
        Ok(p)
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<serde_json::Value> = self
            .coefficients
            .iter()
            .map(|(shape, coef)| json!({"shape": shape, "coef": coef}))
            .collect();
        entries.serialize(serializer)
    }
}

impl fmt::Display for SchurExpansion {
    /// E.g. `s_{1,1,1} + s_{3,1} + 2*s_{4,1}` (shapes in lexicographic
    /// order, matching the usual table layout).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (k, (shape, coef)) in self.coefficients.iter().enumerate() {
            if k == 0 {
                if *coef < 0 {
                    write!(f, "-")?;
                }
            } else if *coef < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = coef.unsigned_abs();
            if magnitude != 1 {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "s_{{{shape}}}")?;
        }
        Ok(())
    }
}

/// Schur decomposition of a q,t-symmetric polynomial, degree by degree: if
/// the degree-n slice has t-exponent coefficients `c_0..c_n`, the
/// multiplicity of `s_{n-a,a}` is `c_a - c_{a-1}`. Multiplicities may be
/// negative; positivity is a separate predicate on the expansion.
pub fn decompose_schur_2var(p: &MultiPoly) -> Result<SchurExpansion> {
    if p.arity() != 2 {
        return Err(Error::ArityMismatch);
    }
    if !p.is_qt_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut degrees: BTreeMap<u32, ()> = BTreeMap::new();
    for (exp, _) in p.canonical_terms() {
        degrees.insert(exp[0] + exp[1], ());
    }
    let mut expansion = SchurExpansion::new();
    for (&n, _) in &degrees {
        let mut previous = 0;
        for a in 0..=n / 2 {
            let c = p.coefficient(&[n - a, a]);
            let mult = c - previous;
            previous = c;
            if mult != 0 {
                expansion.add(two_row_shape(n - a, a), mult);
            }
        }
    }
    if expansion.reconstruct(2)? != *p {
        return Err(Error::Internal("2-variable Schur reconstruction mismatch"));
    }
    Ok(expansion)
}

fn two_row_shape(b: u32, a: u32) -> Partition {
    Partition::new(vec![b, a]).expect("b >= a")
}

/// Schur decomposition in three variables by iterated elimination of the
/// lexicographically greatest monomial, whose exponent vector must be a
/// partition at every step (otherwise the input is not symmetric).
pub fn decompose_schur_3var(p: &MultiPoly) -> Result<SchurExpansion> {
    if p.arity() != 3 {
        return Err(Error::ArityMismatch);
    }
    let mut remainder = p.clone();
    let mut expansion = SchurExpansion::new();
    while !remainder.is_zero() {
        // BTreeMap key order on fixed-length exponent vectors is the lex
        // order, so the leading monomial is the greatest key.
        let (exp, coef) = {
            let (exp, &coef) = remainder.terms.iter().next_back().expect("non-zero");
            (exp.clone(), coef)
        };
        if exp.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let shape = Partition::new(exp).expect("weakly decreasing");
        remainder.add_scaled(&schur_polynomial(&shape, 3), -coef)?;
        expansion.add(shape, coef);
    }
    if expansion.reconstruct(3)? != *p {
        return Err(Error::Internal("3-variable Schur reconstruction mismatch"));
    }
    Ok(expansion)
}

/// Turns `q^a t^b` into `q^a t^b r^{n-a-b}`; every term must have total
/// degree at most `n`.
pub fn homogenize(p: &MultiPoly, n: u32) -> Result<MultiPoly> {
    if p.arity() != 2 {
        return Err(Error::ArityMismatch);
    }
    let mut out = MultiPoly::zero(3);
    for (exp, coef) in p.canonical_terms() {
        let total = exp[0] + exp[1];
        if total > n {
            return Err(Error::DegreeOverflow);
        }
        out.add_term(vec![exp[0], exp[1], n - total], coef)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::rational;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly2(terms: &[([u32; 2], i64)]) -> MultiPoly {
        let mut out = MultiPoly::zero(2);
        for (exp, coef) in terms {
            out.add_term(exp.to_vec(), *coef).unwrap();
        }
        out
    }

    /// The nine-term polynomial A_{3,2}(q,t).
    fn a32() -> MultiPoly {
        poly2(&[
            ([5, 0], 1),
            ([4, 1], 1),
            ([3, 2], 1),
            ([2, 3], 1),
            ([1, 4], 1),
            ([0, 5], 1),
            ([3, 1], 1),
            ([2, 2], 1),
            ([1, 3], 1),
        ])
    }

    #[test]
    fn ssyt_counts() {
        assert_eq!(enumerate_ssyt(&p(&[3, 1]), 2).len(), 3);
        assert_eq!(enumerate_ssyt(&p(&[1, 1, 1]), 3).len(), 1);
        assert_eq!(enumerate_ssyt(&p(&[2, 1, 1, 1]), 3).len(), 0);
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_polynomial(&p(&[3, 1]), 2),
            poly2(&[([3, 1], 1), ([2, 2], 1), ([1, 3], 1)])
        );
        let s111 = schur_polynomial(&p(&[1, 1, 1]), 3);
        assert_eq!(s111.canonical_terms(), vec![(&[1u32, 1, 1][..], 1)]);
        assert!(schur_polynomial(&p(&[4, 1, 1, 1]), 3).is_zero());
        assert_eq!(schur_polynomial(&Partition::empty(), 2), MultiPoly::one(2));

        let s21 = schur_polynomial(&p(&[2, 1]), 3);
        let mut expected = MultiPoly::zero(3);
        for (exp, coef) in [
            ([2, 0, 1], 1),
            ([1, 0, 2], 1),
            ([2, 1, 0], 1),
            ([1, 1, 1], 2),
            ([0, 2, 1], 1),
            ([1, 2, 0], 1),
            ([0, 1, 2], 1),
        ] {
            expected.add_term(exp.to_vec(), coef).unwrap();
        }
        assert_eq!(s21, expected);
    }

    #[test]
    fn two_row_schur_closed_form() {
        for b in 0..=12u32 {
            for a in 0..=b {
                let shape = Partition::new(vec![b, a]).unwrap();
                let mut expected = MultiPoly::zero(2);
                for i in a..=b {
                    expected.add_term(vec![i, a + b - i], 1).unwrap();
                }
                assert_eq!(schur_polynomial(&shape, 2), expected, "({b},{a})");
            }
        }
    }

    #[test]
    fn a_theta_examples() {
        let theta = triangular_tableau(&p(&[3, 2])).unwrap();
        assert_eq!(a_theta_polynomial(&theta).unwrap(), a32());

        let skew: StandardTableau = "[1,2,3][4,5]".parse().unwrap();
        let atheta = a_theta_polynomial(&skew).unwrap();
        assert_eq!(atheta.coefficient(&[1, 2]), 1);
        assert!(!atheta.is_qt_symmetric());

        let single: StandardTableau = "[1]".parse().unwrap();
        assert_eq!(
            a_theta_polynomial(&single).unwrap(),
            poly2(&[([1, 0], 1), ([0, 1], 1)])
        );
    }

    #[test]
    fn a_lambda_examples() {
        assert_eq!(a_lambda_polynomial(&p(&[3, 2])).unwrap(), a32());
        assert_eq!(
            a_lambda_polynomial(&Partition::empty()).unwrap(),
            MultiPoly::one(2)
        );
        let a94 = a_lambda_polynomial(&p(&[9, 4])).unwrap();
        let expansion = decompose_schur_2var(&a94).unwrap();
        assert_eq!(
            expansion,
            SchurExpansion::from_pairs([
                (p(&[13]), 1),
                (p(&[11, 1]), 1),
                (p(&[9, 2]), 1),
                (p(&[7, 3]), 1),
                (p(&[5, 4]), 1),
            ])
        );
    }

    #[test]
    fn symmetry_predicate() {
        assert!(a32().is_qt_symmetric());
        assert!(MultiPoly::zero(2).is_qt_symmetric());
        assert!(!poly2(&[([2, 1], 1)]).is_qt_symmetric());
    }

    #[test]
    fn decompose_2var_examples() {
        assert_eq!(
            decompose_schur_2var(&a32()).unwrap(),
            SchurExpansion::from_pairs([(p(&[5]), 1), (p(&[3, 1]), 1)])
        );
        assert_eq!(
            decompose_schur_2var(&a_lambda_polynomial(&p(&[3, 2, 1])).unwrap()).unwrap(),
            SchurExpansion::from_pairs([(p(&[6]), 1), (p(&[4, 1]), 1), (p(&[3, 1]), 1)])
        );
        assert_eq!(
            decompose_schur_2var(&a_lambda_polynomial(&p(&[2, 2, 1])).unwrap()).unwrap(),
            SchurExpansion::from_pairs([(p(&[5]), 1), (p(&[3, 1]), 1)])
        );
        assert_eq!(
            decompose_schur_2var(&poly2(&[([1, 0], 1), ([0, 1], 1)])).unwrap(),
            SchurExpansion::from_pairs([(p(&[1]), 1)])
        );
        assert_eq!(
            decompose_schur_2var(&poly2(&[([2, 1], 1)])),
            Err(Error::NotSymmetric)
        );
    }

    #[test]
    fn decompose_3var_examples() {
        let s21 = schur_polynomial(&p(&[2, 1]), 3);
        assert_eq!(
            decompose_schur_3var(&s21).unwrap(),
            SchurExpansion::from_pairs([(p(&[2, 1]), 1)])
        );
        let mut asym = MultiPoly::zero(3);
        asym.add_term(vec![2, 1, 0], 1).unwrap();
        asym.add_term(vec![1, 2, 0], -1).unwrap();
        assert_eq!(decompose_schur_3var(&asym), Err(Error::NotSymmetric));
    }

    #[test]
    fn homogenize_examples() {
        let qt = poly2(&[([1, 0], 1), ([0, 1], 1)]);
        let h = homogenize(&qt, 1).unwrap();
        assert_eq!(h.coefficient(&[1, 0, 0]), 1);
        assert_eq!(h.coefficient(&[0, 1, 0]), 1);

        let mixed = poly2(&[([1, 1], 1), ([0, 0], 1)]);
        let h = homogenize(&mixed, 2).unwrap();
        assert_eq!(h.coefficient(&[1, 1, 0]), 1);
        assert_eq!(h.coefficient(&[0, 0, 2]), 1);

        assert_eq!(homogenize(&mixed, 1), Err(Error::DegreeOverflow));
    }

    #[test]
    fn substitute_examples() {
        let a21 = SchurExpansion::from_pairs([(p(&[3]), 1), (p(&[1, 1]), 1)])
            .reconstruct(3)
            .unwrap();
        // Displayed 13-term expansion of A_{2,1}(q,t,r).
        let mut expected = MultiPoly::zero(3);
        for exp in [
            [3, 0, 0], [2, 1, 0], [1, 2, 0], [0, 3, 0], [2, 0, 1], [1, 1, 1],
            [0, 2, 1], [1, 0, 2], [0, 1, 2], [0, 0, 3], [1, 1, 0], [1, 0, 1],
            [0, 1, 1],
        ] {
            expected.add_term(exp.to_vec(), 1).unwrap();
        }
        assert_eq!(a21, expected);

        let total = a21.substitute(&[Some(1), Some(1), Some(1)]).unwrap();
        assert_eq!(total, MultiPoly::constant(3, 13));

        let kept = a21.substitute(&[None, None, None]).unwrap();
        assert_eq!(kept, a21);
    }

    #[test]
    fn schur_r1_specialization() {
        // s_{1,1,1}(q,t,1) = qt.
        let s111 = schur_polynomial(&p(&[1, 1, 1]), 3)
            .substitute(&[None, None, Some(1)])
            .unwrap()
            .restrict_arity(2)
            .unwrap();
        assert_eq!(s111.canonical_terms(), vec![(&[1u32, 1][..], 1)]);
        // Shapes with more than three rows vanish in three variables.
        assert!(schur_polynomial(&p(&[2, 1, 1, 1]), 3).is_zero());
        // Setting r=1 in s_{b,a}(q,t,r) and truncating the third row
        // recovers more terms than s_{b,a}(q,t): the 2-variable polynomial
        // is the r-degree-0 slice.
        let s31_3 = schur_polynomial(&p(&[3, 1]), 3);
        let s31_2 = schur_polynomial(&p(&[3, 1]), 2);
        for (exp, coef) in s31_2.canonical_terms() {
            assert_eq!(s31_3.coefficient(&[exp[0], exp[1], 0]), coef);
        }
    }

    #[test]
    fn canonical_printing() {
        let mut poly = MultiPoly::zero(2);
        poly.add_term(vec![4, 1], 1).unwrap();
        poly.add_term(vec![3, 2], 1).unwrap();
        poly.add_term(vec![1, 1], -2).unwrap();
        poly.add_term(vec![0, 0], 1).unwrap();
        assert_eq!(poly.to_string(), "q^4*t + q^3*t^2 - 2*q*t + 1");
        assert_eq!(MultiPoly::zero(2).to_string(), "0");
        assert_eq!(
            a32().to_string(),
            "q^5 + q^4*t + q^3*t^2 + q^2*t^3 + q*t^4 + t^5 + q^3*t + q^2*t^2 + q*t^3"
        );
    }

    #[test]
    fn json_shape() {
        let mut poly = MultiPoly::zero(2);
        poly.add_term(vec![4, 1], 1).unwrap();
        let v = poly.to_json_value();
        assert_eq!(v["vars"], serde_json::json!(["q", "t"]));
        assert_eq!(v["terms"][0]["exp"], serde_json::json!([4, 1]));
        assert_eq!(v["terms"][0]["coef"], serde_json::json!(1));
    }

    #[test]
    fn overflow_is_detected() {
        let mut poly = MultiPoly::zero(2);
        poly.add_term(vec![0, 0], i64::MAX).unwrap();
        assert_eq!(poly.add_term(vec![0, 0], 1), Err(Error::CoefficientOverflow));
        let mut big = MultiPoly::one(2);
        assert_eq!(
            big.add_scaled(&MultiPoly::constant(2, i64::MAX), 2),
            Err(Error::CoefficientOverflow)
        );
        let mut tall = MultiPoly::zero(2);
        tall.add_term(vec![63, 0], 1).unwrap();
        assert_eq!(
            tall.substitute(&[Some(i64::MAX), None]),
            Err(Error::CoefficientOverflow)
        );
    }

    #[test]
    fn mean_slope_is_exact_probe() {
        // Exactness sanity: the (3,2) mean slope is 5/12, not a float.
        assert_eq!(p(&[3, 2]).mean_slope().unwrap(), rational(5, 12));
    }
}
