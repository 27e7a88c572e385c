//! Permutation-based irreducible decomposition of `V(t = s)`.
//!
//! A permutation sorting the variables defines a chain system: either a
//! full weakly increasing chain (first kind, the minimum position holds a
//! variable shared by both sides) or a chain whose first two variables
//! are glued by an equality, one exclusive variable from each side
//! (second kind). These chain systems are exactly the irreducible
//! components of the solution set, and there are
//! `(n-k1-k2)(n-1)! + k1*k2*(n-2)!` of them.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::engine::{solutions_of_system, AlgebraicSet, Caps};
use crate::error::{Error, Result};
use crate::semilattice::{Equation, Point, SemilatticeContext, Term};

/// A bijection on `{1..n}`; `mapping[i-1]` is `σ(i)`, the variable in
/// the i-th sorted position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    mapping: Vec<u32>,
}

impl Permutation {
    pub fn new(mapping: Vec<u32>) -> Result<Self> {
        let n = mapping.len() as u32;
        let seen: BTreeSet<u32> = mapping.iter().copied().collect();
        if seen.len() != mapping.len() || seen.iter().any(|&v| v < 1 || v > n) {
            return Err(Error::ContextViolation(format!(
                "{mapping:?} is not a permutation of 1..={n}"
            )));
        }
        Ok(Self { mapping })
    }

    pub fn len(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    /// `σ(i)`, 1-based.
    pub fn image(&self, i: u32) -> u32 {
        self.mapping[(i - 1) as usize]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.mapping
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    First,
    Second,
}

impl Kind {
    pub fn as_u8(&self) -> u8 {
        match self {
            Kind::First => 1,
            Kind::Second => 2,
        }
    }
}

/// One irreducible component of `V(t = s)`, encoded symbolically as a
/// permutation plus kind; the point set is materialized on demand.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ChainComponent {
    sigma: Permutation,
    kind: Kind,
}

/// A single chain link, `x_left = x_right` or `x_left <= x_right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Equal(u32, u32),
    LessEqual(u32, u32),
}

impl Constraint {
    pub fn render(&self) -> String {
        match self {
            Constraint::Equal(a, b) => format!("x{a} = x{b}"),
            Constraint::LessEqual(a, b) => format!("x{a} <= x{b}"),
        }
    }

    pub fn to_equation(&self) -> Equation {
        match self {
            // x_a = x_b as an equation of singleton terms
            Constraint::Equal(a, b) => Equation::new(
                Term::new([*a]).expect("singleton"),
                Term::new([*b]).expect("singleton"),
            ),
            // x_a <= x_b desugars to x_a*x_b = x_a
            Constraint::LessEqual(a, b) => Equation::new(
                Term::new([*a, *b]).expect("pair"),
                Term::new([*a]).expect("singleton"),
            ),
        }
    }
}

impl ChainComponent {
    pub fn new(sigma: Permutation, kind: Kind) -> Result<Self> {
        if kind == Kind::Second && sigma.len() < 2 {
            return Err(Error::ContextViolation(
                "second-kind components need at least 2 variables".into(),
            ));
        }
        Ok(Self { sigma, kind })
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// The chain system: kind 1 is `x_σ(1) <= ... <= x_σ(n)`; kind 2 is
    /// `x_σ(1) = x_σ(2) <= x_σ(3) <= ... <= x_σ(n)`.
    pub fn constraints(&self) -> Vec<Constraint> {
        let n = self.sigma.len() as u32;
        let mut out = Vec::new();
        match self.kind {
            Kind::First => {
                for i in 1..n {
                    out.push(Constraint::LessEqual(
                        self.sigma.image(i),
                        self.sigma.image(i + 1),
                    ));
                }
            }
            Kind::Second => {
                out.push(Constraint::Equal(self.sigma.image(1), self.sigma.image(2)));
                for i in 2..n {
                    out.push(Constraint::LessEqual(
                        self.sigma.image(i),
                        self.sigma.image(i + 1),
                    ));
                }
            }
        }
        out
    }

    /// Compact chain notation, e.g. `x2=x3<=x1`.
    pub fn chain_notation(&self) -> String {
        let n = self.sigma.len() as u32;
        let mut s = format!("x{}", self.sigma.image(1));
        for i in 2..=n {
            let sep = if self.kind == Kind::Second && i == 2 {
                "="
            } else {
                "<="
            };
            s.push_str(sep);
            s.push_str(&format!("x{}", self.sigma.image(i)));
        }
        s
    }

    /// Materialize the component's solution set.
    pub fn point_set(&self, ctx: SemilatticeContext, caps: &Caps) -> Result<AlgebraicSet> {
        if self.sigma.len() as u32 > ctx.arity() {
            return Err(Error::ContextViolation(format!(
                "component over {} variables, ambient n is {}",
                self.sigma.len(),
                ctx.arity()
            )));
        }
        let eqs: Vec<Equation> = self.constraints().iter().map(|c| c.to_equation()).collect();
        solutions_of_system(&eqs, ctx, caps)
    }

    /// The point that lies in this component and in no other component
    /// of the same equation: kind 1 puts `a_i` at position `σ(i)`;
    /// kind 2 does the same except position `σ(1)` gets `a_2`.
    pub fn witness_point(&self, ctx: &SemilatticeContext) -> Result<Point> {
        let n = self.sigma.len() as u32;
        if ctx.order() < n {
            return Err(Error::UnsupportedRegime {
                n,
                l: ctx.order(),
            });
        }
        let mut coords = vec![0u32; n as usize];
        for i in 1..=n {
            let value = if self.kind == Kind::Second && i == 1 { 2 } else { i };
            coords[(self.sigma.image(i) - 1) as usize] = value;
        }
        Ok(Point::new(coords))
    }
}

impl Serialize for ChainComponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ChainComponent", 3)?;
        s.serialize_field("sigma", self.sigma.as_slice())?;
        s.serialize_field("kind", &self.kind.as_u8())?;
        let constraints: Vec<String> = self.constraints().iter().map(|c| c.render()).collect();
        s.serialize_field("constraints", &constraints)?;
        s.end()
    }
}

fn require_full_universe(eq: &Equation) -> Result<u32> {
    let universe = eq.universe();
    let n = universe.len() as u32;
    let full: BTreeSet<u32> = (1..=n).collect();
    if universe != full {
        return Err(Error::UniverseMismatch(format!(
            "equation '{eq}' must use exactly the variables x1..x{n}"
        )));
    }
    Ok(n)
}

/// Kind of a permutation for the equation `t = s`, under the canonical
/// orientation: kind 1 if `x_σ(1)` is shared by both sides; kind 2 if
/// `x_σ(1)` is exclusive to `t` and `x_σ(2)` exclusive to `s`. All other
/// permutations define no component.
pub fn kind_of(sigma: &Permutation, eq: &Equation) -> Result<Option<Kind>> {
    let n = require_full_universe(eq)?;
    if sigma.len() as u32 != n {
        return Err(Error::UniverseMismatch(format!(
            "permutation over {} positions, equation over {n} variables",
            sigma.len()
        )));
    }
    let first = sigma.image(1);
    let in_t = eq.lhs().vars().contains(&first);
    let in_s = eq.rhs().vars().contains(&first);
    if in_t && in_s {
        return Ok(Some(Kind::First));
    }
    if n >= 2 && in_t && !in_s {
        let second = sigma.image(2);
        if eq.rhs().vars().contains(&second) && !eq.lhs().vars().contains(&second) {
            return Ok(Some(Kind::Second));
        }
    }
    Ok(None)
}

fn perms_of_kind(eq: &Equation, wanted: Kind) -> Result<Vec<Permutation>> {
    let n = require_full_universe(eq)?;
    let mut out = Vec::new();
    for mapping in (1..=n).permutations(n as usize) {
        let sigma = Permutation::new(mapping)?;
        if kind_of(&sigma, eq)? == Some(wanted) {
            out.push(sigma);
        }
    }
    Ok(out)
}

/// First-kind permutations in lexicographic order; there are
/// `(n-k1-k2)(n-1)!` of them.
pub fn first_kind_perms(eq: &Equation) -> Result<Vec<Permutation>> {
    perms_of_kind(eq, Kind::First)
}

/// Second-kind permutations in lexicographic order; there are
/// `k1*k2*(n-2)!` of them.
pub fn second_kind_perms(eq: &Equation) -> Result<Vec<Permutation>> {
    perms_of_kind(eq, Kind::Second)
}

/// The irreducible decomposition of `V(t = s)`: all first-kind
/// components in lexicographic `σ` order, then all second-kind ones.
///
/// Requires the equation to use all `n` ambient variables and `n <= l`;
/// the `n > l` regime needs a different construction and is rejected.
pub fn decompose(eq: &Equation, ctx: &SemilatticeContext) -> Result<Vec<ChainComponent>> {
    let n = require_full_universe(eq)?;
    if n != ctx.arity() {
        return Err(Error::UniverseMismatch(format!(
            "equation over {n} variables, ambient n is {}",
            ctx.arity()
        )));
    }
    if n > ctx.order() {
        return Err(Error::UnsupportedRegime {
            n,
            l: ctx.order(),
        });
    }
    let mut out = Vec::new();
    for sigma in first_kind_perms(eq)? {
        out.push(ChainComponent::new(sigma, Kind::First)?);
    }
    for sigma in second_kind_perms(eq)? {
        out.push(ChainComponent::new(sigma, Kind::Second)?);
    }
    Ok(out)
}

/// Number of irreducible components of `V(t = s)`.
pub fn irr_count(eq: &Equation, ctx: &SemilatticeContext) -> Result<usize> {
    Ok(decompose(eq, ctx)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::solutions;
    use crate::parse::parse_constraint;

    fn ctx(l: u32, n: u32) -> SemilatticeContext {
        SemilatticeContext::new(l, n).unwrap()
    }

    fn perm(mapping: &[u32]) -> Permutation {
        Permutation::new(mapping.to_vec()).unwrap()
    }

    fn eq(text: &str) -> Equation {
        parse_constraint(text).unwrap()
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 3, 1]).is_ok());
        assert!(Permutation::new(vec![1, 1, 2]).is_err());
        assert!(Permutation::new(vec![1, 2, 4]).is_err());
    }

    #[test]
    fn kinds_of_worked_example() {
        let e = eq("x1x2 = x1x3");
        assert_eq!(kind_of(&perm(&[1, 2, 3]), &e).unwrap(), Some(Kind::First));
        assert_eq!(kind_of(&perm(&[1, 3, 2]), &e).unwrap(), Some(Kind::First));
        assert_eq!(kind_of(&perm(&[2, 3, 1]), &e).unwrap(), Some(Kind::Second));
        // reversed orientation defines no component of its own
        assert_eq!(kind_of(&perm(&[3, 2, 1]), &e).unwrap(), None);
    }

    #[test]
    fn kind_counts_match_formulas() {
        let e = eq("x1x2 = x1x3");
        assert_eq!(first_kind_perms(&e).unwrap().len(), 2);
        assert_eq!(second_kind_perms(&e).unwrap().len(), 1);

        let e = eq("x1x2x3 = x1x2x3");
        assert_eq!(first_kind_perms(&e).unwrap().len(), 6);
        assert_eq!(second_kind_perms(&e).unwrap().len(), 0);

        let e = eq("x1 = x2x3");
        assert_eq!(first_kind_perms(&e).unwrap().len(), 0);
        assert_eq!(second_kind_perms(&e).unwrap().len(), 2);
    }

    #[test]
    fn component_point_sets() {
        let caps = Caps::default();
        let c3 = ctx(3, 3);
        let comp = ChainComponent::new(perm(&[2, 3, 1]), Kind::Second).unwrap();
        let want = crate::engine::solutions_of_system(
            &[eq("x2 = x3"), eq("x3 <= x1")],
            c3,
            &caps,
        )
        .unwrap();
        assert_eq!(comp.point_set(c3, &caps).unwrap(), want);

        let chain = ChainComponent::new(perm(&[1, 2, 3]), Kind::First).unwrap();
        assert_eq!(chain.point_set(c3, &caps).unwrap().len(), 10);

        // constant points lie in every component
        for k in [Kind::First, Kind::Second] {
            let comp = ChainComponent::new(perm(&[3, 1, 2]), k).unwrap();
            let set = comp.point_set(c3, &caps).unwrap();
            for i in 1..=3 {
                assert!(set.contains(&Point::new(vec![i, i, i])));
            }
        }
    }

    #[test]
    fn decompose_worked_example() {
        let comps = decompose(&eq("x1x2 = x1x3"), &ctx(3, 3)).unwrap();
        let notations: Vec<String> = comps.iter().map(|c| c.chain_notation()).collect();
        assert_eq!(notations, vec!["x1<=x2<=x3", "x1<=x3<=x2", "x2=x3<=x1"]);
    }

    #[test]
    fn decompose_counts_from_table() {
        let c = ctx(3, 3);
        assert_eq!(irr_count(&eq("x1x2x3 = x1"), &c).unwrap(), 2);
        assert_eq!(irr_count(&eq("x1 = x1x2x3"), &c).unwrap(), 2);
        assert_eq!(irr_count(&eq("x1x2 = x1x2x3"), &c).unwrap(), 4);
        assert_eq!(irr_count(&eq("x1x2x3 = x1x2x3"), &c).unwrap(), 6);
    }

    #[test]
    fn component_count_independent_of_l() {
        let over3 = decompose(&eq("x1x2 = x1x3"), &ctx(3, 3)).unwrap();
        let over5 = decompose(&eq("x1x2 = x1x3"), &ctx(5, 3)).unwrap();
        assert_eq!(over3, over5);
        assert_eq!(over5.len(), 3);
    }

    #[test]
    fn decompose_rejects_wrong_regime_and_universe() {
        assert!(matches!(
            decompose(&eq("x1x2x3 = x1x2x3"), &ctx(2, 3)),
            Err(Error::UnsupportedRegime { n: 3, l: 2 })
        ));
        assert!(matches!(
            decompose(&eq("x1 = x3"), &ctx(3, 3)),
            Err(Error::UniverseMismatch(_))
        ));
    }

    #[test]
    fn witness_points_from_worked_example() {
        let c = ctx(3, 3);
        let w = |mapping: &[u32], kind| {
            ChainComponent::new(perm(mapping), kind)
                .unwrap()
                .witness_point(&c)
                .unwrap()
        };
        assert_eq!(w(&[1, 2, 3], Kind::First), Point::new(vec![1, 2, 3]));
        assert_eq!(w(&[1, 3, 2], Kind::First), Point::new(vec![1, 3, 2]));
        assert_eq!(w(&[2, 3, 1], Kind::Second), Point::new(vec![3, 2, 2]));
    }

    #[test]
    fn witness_point_requires_large_enough_order() {
        let comp = ChainComponent::new(perm(&[1, 2, 3]), Kind::First).unwrap();
        assert!(comp.witness_point(&ctx(2, 3)).is_err());
    }

    #[test]
    fn witness_point_separates_components() {
        let c = ctx(3, 3);
        let caps = Caps::default();
        let comps = decompose(&eq("x1x2 = x1x3"), &c).unwrap();
        let sets: Vec<AlgebraicSet> = comps
            .iter()
            .map(|comp| comp.point_set(c, &caps).unwrap())
            .collect();
        for (i, comp) in comps.iter().enumerate() {
            let w = comp.witness_point(&c).unwrap();
            for (j, set) in sets.iter().enumerate() {
                assert_eq!(set.contains(&w), i == j);
            }
        }
    }

    #[test]
    fn union_of_components_is_solution_set() {
        let c = ctx(3, 3);
        let caps = Caps::default();
        for text in ["x1x2 = x1x3", "x1 = x2x3", "x1x2 = x1x2x3"] {
            let e = eq(text);
            let mut union = AlgebraicSet::empty(c);
            for comp in decompose(&e, &c).unwrap() {
                union = union.union(&comp.point_set(c, &caps).unwrap());
            }
            assert_eq!(union, solutions(&e, c, &caps).unwrap(), "{text}");
        }
    }

    #[test]
    fn component_json_shape() {
        let comp = ChainComponent::new(perm(&[2, 3, 1]), Kind::Second).unwrap();
        let json = serde_json::to_value(&comp).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "sigma": [2, 3, 1],
                "kind": 2,
                "constraints": ["x2 = x3", "x3 <= x1"],
            })
        );
    }
}
