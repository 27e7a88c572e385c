//! The ambient structure: a linearly ordered semilattice `L_l` with
//! elements `a_1 < a_2 < ... < a_l` and meet `a_i * a_j = a_min(i,j)`,
//! together with terms, points and equation satisfaction.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ambient structure: semilattice order `l` and variable count `n`.
///
/// Theorem-level operations additionally require `n <= l`; that check
/// lives at their call sites, not here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SemilatticeContext {
    l: u32,
    n: u32,
}

impl SemilatticeContext {
    pub fn new(l: u32, n: u32) -> Result<Self> {
        if l < 1 || n < 1 {
            return Err(Error::ContextViolation(format!(
                "l and n must be positive (got l={l}, n={n})"
            )));
        }
        Ok(Self { l, n })
    }

    /// Number of semilattice elements.
    pub fn order(&self) -> u32 {
        self.l
    }

    /// Ambient variable count.
    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn element(&self, index: u32) -> Result<Element> {
        if index < 1 || index > self.l {
            return Err(Error::ContextViolation(format!(
                "element index {index} outside [1, {}]",
                self.l
            )));
        }
        Ok(Element(index))
    }

    /// Meet of two elements: `a_i * a_j = a_min(i,j)`.
    pub fn meet(&self, a: Element, b: Element) -> Result<Element> {
        self.element(a.0)?;
        self.element(b.0)?;
        Ok(Element(a.0.min(b.0)))
    }

    /// `l^n`, the size of the full cube.
    pub fn point_count(&self) -> u128 {
        (self.l as u128).pow(self.n)
    }

    pub fn check_point(&self, p: &Point) -> Result<()> {
        if p.coords.len() != self.n as usize {
            return Err(Error::ContextViolation(format!(
                "point has {} coordinates, ambient n is {}",
                p.coords.len(),
                self.n
            )));
        }
        for &c in &p.coords {
            self.element(c)?;
        }
        Ok(())
    }

    /// All points of `L_l^n` in lexicographic order (first coordinate
    /// most significant).
    pub fn points(&self) -> PointIter {
        PointIter {
            l: self.l,
            next: Some(vec![1; self.n as usize]),
        }
    }
}

/// One semilattice element `a_index`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u32);

impl Element {
    pub fn index(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}", self.0)
    }
}

/// A point of `L_l^n`; `coords[i]` is the 1-based element index assigned
/// to variable `x_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<u32>,
}

impl Point {
    pub fn new(coords: Vec<u32>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn arity(&self) -> usize {
        self.coords.len()
    }

    /// Element index at variable `var` (1-based).
    pub fn coord(&self, var: u32) -> Result<u32> {
        self.coords
            .get((var - 1) as usize)
            .copied()
            .ok_or(Error::ArityMismatch {
                var,
                arity: self.coords.len(),
            })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "a{c}")?;
        }
        write!(f, ")")
    }
}

pub struct PointIter {
    l: u32,
    next: Option<Vec<u32>>,
}

impl Iterator for PointIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        // odometer increment, last coordinate fastest
        let mut i = succ.len();
        loop {
            if i == 0 {
                self.next = None;
                break;
            }
            i -= 1;
            if succ[i] < self.l {
                succ[i] += 1;
                for c in succ.iter_mut().skip(i + 1) {
                    *c = 1;
                }
                self.next = Some(succ);
                break;
            }
        }
        Some(Point::new(cur))
    }
}

/// A term is a commutative word in variables; since the multiplication is
/// idempotent and commutative, a word collapses to its variable set. Terms
/// are stored in that normal form: a nonempty set of 1-based variable
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term(BTreeSet<u32>);

impl Term {
    pub fn new<I: IntoIterator<Item = u32>>(vars: I) -> Result<Self> {
        let set: BTreeSet<u32> = vars.into_iter().collect();
        if set.is_empty() {
            return Err(Error::ContextViolation("term must be nonempty".into()));
        }
        if set.contains(&0) {
            return Err(Error::ContextViolation(
                "variable indices are 1-based; 0 is invalid".into(),
            ));
        }
        Ok(Self(set))
    }

    /// Term from a bitmask: bit `i` set means variable `x_{i+1}` occurs.
    pub fn from_mask(mask: u32) -> Result<Self> {
        Self::new((0..32).filter(|i| mask & (1 << i) != 0).map(|i| i + 1))
    }

    pub fn vars(&self) -> &BTreeSet<u32> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_var(&self) -> u32 {
        *self.0.iter().next_back().expect("terms are nonempty")
    }

    /// Product of terms, i.e. union of their variable sets.
    pub fn product(&self, other: &Term) -> Term {
        Term(self.0.union(&other.0).copied().collect())
    }

    /// Evaluation at a point: the minimum of the named coordinates.
    pub fn eval(&self, p: &Point) -> Result<Element> {
        let mut min = u32::MAX;
        for &v in &self.0 {
            min = min.min(p.coord(v)?);
        }
        Ok(Element(min))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// An equation `t(X) = s(X)`, kept as an ORDERED pair: `t = s` and
/// `s = t` are distinct values with equal solution sets.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equation {
    lhs: Term,
    rhs: Term,
}

impl Equation {
    pub fn new(lhs: Term, rhs: Term) -> Self {
        Self { lhs, rhs }
    }

    pub fn lhs(&self) -> &Term {
        &self.lhs
    }

    pub fn rhs(&self) -> &Term {
        &self.rhs
    }

    pub fn reversed(&self) -> Equation {
        Equation::new(self.rhs.clone(), self.lhs.clone())
    }

    /// `Var(t) ∪ Var(s)`.
    pub fn universe(&self) -> BTreeSet<u32> {
        self.lhs.vars().union(self.rhs.vars()).copied().collect()
    }

    pub fn max_var(&self) -> u32 {
        self.lhs.max_var().max(self.rhs.max_var())
    }

    /// `(k1, k2, n_used)`: exclusive-left count, exclusive-right count,
    /// size of the universe.
    pub fn classify(&self) -> (u32, u32, u32) {
        let k1 = self.lhs.vars().difference(self.rhs.vars()).count() as u32;
        let k2 = self.rhs.vars().difference(self.lhs.vars()).count() as u32;
        (k1, k2, self.universe().len() as u32)
    }

    /// A point satisfies the equation iff both sides evaluate to the same
    /// element.
    pub fn holds(&self, p: &Point) -> Result<bool> {
        Ok(self.lhs.eval(p)? == self.rhs.eval(p)?)
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}
