//! Finite groups given by multiplication tables, with their character tables.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::field::{rational_to_i64, Cyclotomic, CyclotomicField, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invariant factor {0} is smaller than 2")]
    BadFactor(u64),
    #[error("at least one invariant factor is required")]
    NoFactors,
    #[error("multiplication table: {0}")]
    BadTable(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("character table: {0}")]
    BadCharacters(String),
}

/// A finite group stored by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    size: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validate and build from a table where `table[a][b]` is the index of
    /// `a * b`.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let size = table.len();
        if size == 0 {
            return Err(GroupError::BadTable("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(GroupError::BadTable(format!(
                    "row {a} has length {}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= size) {
                return Err(GroupError::BadTable(format!(
                    "entry {bad} out of range in row {a}"
                )));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| flat[a * size + b];
        let identity = (0..size)
            .find(|&e| (0..size).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GroupError::BadTable("no two-sided identity".into()))?;
        let mut inverses = Vec::with_capacity(size);
        for x in 0..size {
            let inv = (0..size)
                .find(|&y| at(x, y) == identity && at(y, x) == identity)
                .ok_or_else(|| GroupError::BadTable(format!("element {x} has no inverse")))?;
            inverses.push(inv);
        }
        for a in 0..size {
            for b in 0..size {
                for c in 0..size {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::BadTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == size => l,
            Some(l) => {
                return Err(GroupError::BadTable(format!(
                    "{} labels for {size} elements",
                    l.len()
                )))
            }
            None => (0..size).map(|i| format!("x{i}")).collect(),
        };
        Ok(FiniteGroup {
            size,
            table: flat,
            identity,
            inverses,
            labels,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, x: usize, exponent: i64) -> usize {
        let base = if exponent < 0 { self.inv(x) } else { x };
        let mut acc = self.identity;
        for _ in 0..exponent.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Least `m >= 1` with `x^m = 1`.
    pub fn element_order(&self, x: usize) -> usize {
        let mut acc = x;
        let mut m = 1;
        while acc != self.identity {
            acc = self.mul(acc, x);
            m += 1;
        }
        m
    }

    pub fn exponent(&self) -> usize {
        (0..self.size)
            .map(|x| self.element_order(x))
            .fold(1, |a, b| a.lcm(&b))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with every element.
    pub fn center(&self) -> BTreeSet<usize> {
        (0..self.size)
            .filter(|&x| (0..self.size).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut classes = Vec::new();
        for x in 0..self.size {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = (0..self.size)
                .map(|y| self.mul(self.mul(y, x), self.inv(y)))
                .collect();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: BTreeSet<usize> = [self.identity].into_iter().collect();
        for x in 0..self.size {
            if span.contains(&x) {
                continue;
            }
            gens.push(x);
            // close the span under multiplication by all generators
            let mut frontier: Vec<usize> = span.iter().copied().collect();
            while let Some(y) = frontier.pop() {
                for &g in &gens {
                    for z in [self.mul(y, g), self.mul(g, y)] {
                        if span.insert(z) {
                            frontier.push(z);
                        }
                    }
                }
            }
        }
        gens
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FiniteGroup(order {}, elements {:?})",
            self.size, self.labels
        )
    }
}

/// A one-dimensional character, i.e. a homomorphism into roots of unity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    values: Vec<Cyclotomic>,
}

impl LinearCharacter {
    pub fn new(group: &FiniteGroup, values: Vec<Cyclotomic>) -> Result<Self, GroupError> {
        if values.len() != group.size() {
            return Err(GroupError::BadCharacters("wrong number of values".into()));
        }
        if !values[group.identity()].is_one() {
            return Err(GroupError::BadCharacters(
                "linear character is not 1 at identity".into(),
            ));
        }
        for a in 0..group.size() {
            for b in 0..group.size() {
                if values[group.mul(a, b)] != &values[a] * &values[b] {
                    return Err(GroupError::BadCharacters(format!(
                        "not multiplicative at ({}, {})",
                        group.label(a),
                        group.label(b)
                    )));
                }
            }
        }
        Ok(LinearCharacter { values })
    }

    pub fn value(&self, x: usize) -> &Cyclotomic {
        &self.values[x]
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_one)
    }

    /// Pointwise power, `chi^k`.
    pub fn pow(&self, k: i64) -> LinearCharacter {
        LinearCharacter {
            values: self.values.iter().map(|v| v.pow(k)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleCharacter {
    values: Vec<Cyclotomic>,
    degree: usize,
}

impl IrreducibleCharacter {
    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &Cyclotomic {
        &self.values[x]
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Irreducible characters of a group, one row per character.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    chars: Vec<IrreducibleCharacter>,
}

impl CharacterTable {
    /// Wrap user-supplied rows. Only shape and degrees are checked here; use
    /// [`validate_table`] for the orthogonality relations.
    pub fn new(group: Arc<FiniteGroup>, rows: Vec<Vec<Cyclotomic>>) -> Result<Self, GroupError> {
        let mut chars = Vec::with_capacity(rows.len());
        for (i, values) in rows.into_iter().enumerate() {
            if values.len() != group.size() {
                return Err(GroupError::BadCharacters(format!(
                    "row {i} has {} values for {} elements",
                    values.len(),
                    group.size()
                )));
            }
            let degree = values[group.identity()]
                .to_rational()
                .as_ref()
                .and_then(rational_to_i64)
                .filter(|&d| d >= 1)
                .ok_or_else(|| {
                    GroupError::BadCharacters(format!("row {i} has no positive integer degree"))
                })?;
            chars.push(IrreducibleCharacter {
                values,
                degree: degree as usize,
            });
        }
        Ok(CharacterTable { group, chars })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn character(&self, i: usize) -> &IrreducibleCharacter {
        &self.chars[i]
    }

    pub fn characters(&self) -> &[IrreducibleCharacter] {
        &self.chars
    }

    /// Smallest cyclotomic order holding the group exponent and every value.
    pub fn field_order(&self) -> u64 {
        let mut order = self.group.exponent() as u64;
        for c in &self.chars {
            for v in &c.values {
                order = order.lcm(&v.minimal_order());
            }
        }
        order
    }

    /// Row `i` as a linear character, if it has degree one.
    pub fn linear_character(&self, i: usize) -> Result<LinearCharacter, GroupError> {
        let c = self
            .chars
            .get(i)
            .ok_or_else(|| GroupError::BadCharacters(format!("no character with index {i}")))?;
        if c.degree != 1 {
            return Err(GroupError::BadCharacters(format!(
                "character {i} has degree {}, not 1",
                c.degree
            )));
        }
        LinearCharacter::new(&self.group, c.values.clone())
    }

    /// Index of the row equal to the given values, if any.
    pub fn find_row(&self, values: &[Cyclotomic]) -> Option<usize> {
        self.chars
            .iter()
            .position(|c| c.values.as_slice() == values)
    }
}

/// Direct product of cyclic groups `Z_{n1} x Z_{n2} x ...` with all of its
/// characters. Elements and characters are indexed in mixed radix with the
/// first factor most significant.
pub fn build_abelian(factors: &[u64]) -> Result<(Arc<FiniteGroup>, CharacterTable), GroupError> {
    build_abelian_named(factors, None)
}

/// As [`build_abelian`], naming the factor generators (default `a, b, c, ...`).
pub fn build_abelian_named(
    factors: &[u64],
    names: Option<&[String]>,
) -> Result<(Arc<FiniteGroup>, CharacterTable), GroupError> {
    if factors.is_empty() {
        return Err(GroupError::NoFactors);
    }
    if let Some(&bad) = factors.iter().find(|&&f| f < 2) {
        return Err(GroupError::BadFactor(bad));
    }
    let default_names: Vec<String> = (0..factors.len())
        .map(|i| ((b'a' + (i % 26) as u8) as char).to_string())
        .collect();
    let names = names.unwrap_or(&default_names);
    if names.len() != factors.len() {
        return Err(GroupError::BadTable(format!(
            "{} generator names for {} factors",
            names.len(),
            factors.len()
        )));
    }
    let size: usize = factors.iter().map(|&f| f as usize).product();
    let digits = |mut x: usize| -> Vec<usize> {
        let mut d = vec![0; factors.len()];
        for k in (0..factors.len()).rev() {
            d[k] = x % factors[k] as usize;
            x /= factors[k] as usize;
        }
        d
    };
    let index = |d: &[usize]| -> usize {
        d.iter()
            .zip(factors)
            .fold(0, |acc, (&x, &f)| acc * f as usize + x)
    };
    let table: Vec<Vec<usize>> = (0..size)
        .map(|a| {
            let da = digits(a);
            (0..size)
                .map(|b| {
                    let db = digits(b);
                    let sum: Vec<usize> = da
                        .iter()
                        .zip(&db)
                        .zip(factors)
                        .map(|((x, y), &f)| (x + y) % f as usize)
                        .collect();
                    index(&sum)
                })
                .collect()
        })
        .collect();
    let labels: Vec<String> = (0..size)
        .map(|x| {
            let parts: Vec<String> = digits(x)
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, name)| {
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("")
            }
        })
        .collect();
    let group = Arc::new(FiniteGroup::from_table(table, Some(labels))?);
    let exponent = factors.iter().fold(1u64, |a, &b| a.lcm(&b));
    let field = CyclotomicField::get(exponent);
    // chi_j(x) = prod_k zeta_{n_k}^{j_k x_k}
    let rows = (0..size)
        .map(|j| {
            let dj = digits(j);
            (0..size)
                .map(|x| {
                    let dx = digits(x);
                    let mut e: u64 = 0;
                    for k in 0..factors.len() {
                        let scale = exponent / factors[k];
                        e += (dj[k] * dx[k]) as u64 * scale;
                    }
                    let v = Cyclotomic::root_of_unity(exponent, (e % exponent) as i64);
                    debug_assert!(Arc::ptr_eq(v.field(), &field));
                    v
                })
                .collect()
        })
        .collect();
    let table = CharacterTable::new(group.clone(), rows)?;
    Ok((group, table))
}

/// Outcome of [`validate_table`]: every violated constraint, if any.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableValidation {
    pub issues: Vec<String>,
}

impl TableValidation {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Check class functions, degrees, both orthogonality relations, and the
/// row count against the number of conjugacy classes.
pub fn validate_table(table: &CharacterTable) -> TableValidation {
    let group = table.group();
    let size = group.size();
    let mut issues = Vec::new();
    let classes = group.conjugacy_classes();
    if table.len() != classes.len() {
        issues.push(format!(
            "{} characters but {} conjugacy classes",
            table.len(),
            classes.len()
        ));
    }
    for (i, c) in table.characters().iter().enumerate() {
        for class in &classes {
            let first = &c.values[class[0]];
            if class.iter().any(|&x| &c.values[x] != first) {
                issues.push(format!(
                    "character {i} is not constant on the class of {}",
                    group.label(class[0])
                ));
            }
        }
    }
    let degree_sq: usize = table.characters().iter().map(|c| c.degree * c.degree).sum();
    if degree_sq != size {
        issues.push(format!(
            "sum of squared degrees is {degree_sq}, expected {size}"
        ));
    }
    let order = Rational::from_integer(size.into());
    for i in 0..table.len() {
        for j in i..table.len() {
            let mut acc = Cyclotomic::zero(table.character(i).values[0].field());
            for h in 0..size {
                acc += &(table.character(i).value(h) * table.character(j).value(group.inv(h)));
            }
            let inner = acc.scale(&order.recip());
            let expected_one = i == j;
            let ok = if expected_one {
                inner.is_one()
            } else {
                inner.is_zero()
            };
            if !ok {
                issues.push(format!(
                    "row orthogonality fails for ({i}, {j}): got {inner}"
                ));
            }
        }
    }
    // column orthogonality: sum_i chi_i(x) chi_i(y^-1) = |C(x)| if x ~ y else 0
    for (a, ca) in classes.iter().enumerate() {
        for (b, cb) in classes.iter().enumerate().skip(a) {
            let x = ca[0];
            let y = cb[0];
            let mut acc = Cyclotomic::zero(table.character(0).values[0].field());
            for c in table.characters() {
                acc += &(c.value(x) * c.value(group.inv(y)));
            }
            let expected = if a == b { (size / ca.len()) as i64 } else { 0 };
            if acc.to_rational() != Some(Rational::from_integer(expected.into())) {
                issues.push(format!(
                    "column orthogonality fails for classes of {} and {}",
                    group.label(x),
                    group.label(y)
                ));
            }
        }
    }
    TableValidation { issues }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn klein_four_group() {
        let (g, t) = build_abelian(&[2, 2]).unwrap();
        assert_eq!(g.size(), 4);
        assert_eq!(t.len(), 4);
        assert!(validate_table(&t).is_valid());
        for c in t.characters() {
            for v in c.values() {
                let r = v.to_rational().unwrap();
                assert!(
                    r == Rational::from_integer(1.into())
                        || r == Rational::from_integer((-1).into())
                );
            }
        }
        assert_eq!(g.center().len(), 4);
        let b = g.index_of("a").unwrap();
        assert_eq!(g.element_order(b), 2);
        assert_eq!(g.element_order(g.identity()), 1);
    }

    #[test]
    fn cyclic_groups() {
        let (g, t) = build_abelian(&[2]).unwrap();
        let vals: Vec<String> = t
            .character(1)
            .values()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(vals, ["1", "-1"]);
        assert!(t.character(0).values().iter().all(Cyclotomic::is_one));
        assert_eq!(g.exponent(), 2);

        let (g, t) = build_abelian(&[4]).unwrap();
        let gen = g.index_of("a").unwrap();
        assert_eq!(g.element_order(gen), 4);
        assert_eq!(t.character(1).value(gen), &Cyclotomic::root_of_unity(4, 1));
        assert!(validate_table(&t).is_valid());
    }

    #[test]
    fn rejects_bad_factors() {
        assert_eq!(build_abelian(&[]).unwrap_err(), GroupError::NoFactors);
        assert_eq!(
            build_abelian(&[2, 1]).unwrap_err(),
            GroupError::BadFactor(1)
        );
    }

    #[test]
    fn duplicated_character_fails_validation() {
        let (g, t) = build_abelian(&[2, 2]).unwrap();
        let mut rows: Vec<Vec<Cyclotomic>> =
            t.characters().iter().map(|c| c.values().to_vec()).collect();
        rows[3] = rows[2].clone();
        let bad = CharacterTable::new(g, rows).unwrap();
        let report = validate_table(&bad);
        assert!(!report.is_valid());
        assert!(report.issues.iter().any(|m| m.contains("orthogonality")));
    }

    #[test]
    fn generators_generate() {
        let (g, _) = build_abelian(&[2, 3, 4]).unwrap();
        let gens = g.generators();
        assert!(gens.len() <= 3);
        let mut span: BTreeSet<usize> = [g.identity()].into();
        loop {
            let next: BTreeSet<usize> = span
                .iter()
                .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
                .map(|(x, y)| g.mul(x, y))
                .chain(span.iter().copied())
                .collect();
            if next.len() == span.len() {
                break;
            }
            span = next;
        }
        assert_eq!(span.len(), g.size());
    }
}
