//! Brute-force semantics: solution sets, the closure operator on point
//! sets, coordinate semilattices, and the definition-level irreducibility
//! and decomposition oracles.
//!
//! Everything here works by exhaustive enumeration over `L_l^n` and is
//! guarded accordingly; it exists to validate the permutation-based
//! decomposition in [`crate::chain`] at small sizes, and doubles as the
//! reference semantics for the CLI.

use std::collections::BTreeSet;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::semilattice::{Equation, Point, SemilatticeContext, Term};

/// Enumeration limits. Exceeding a cap is a clean error, never silent
/// truncation.
#[derive(Debug, Clone, Copy)]
pub struct Caps {
    /// Maximum number of points `l^n` any single enumeration may visit.
    pub max_points: u64,
    /// Maximum size of the closed-set family in [`enumerate_closed_sets`].
    pub max_family: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_points: 10_000_000,
            max_family: 100_000,
        }
    }
}

impl Caps {
    /// Default caps, with `LOSEMILAT_MAX_POINTS` honored when set.
    pub fn from_env() -> Self {
        let mut caps = Self::default();
        if let Ok(v) = std::env::var("LOSEMILAT_MAX_POINTS") {
            if let Ok(n) = v.trim().parse::<u64>() {
                caps.max_points = n;
            }
        }
        caps
    }

    fn check(&self, ctx: &SemilatticeContext) -> Result<()> {
        let points = ctx.point_count();
        if points > self.max_points as u128 {
            return Err(Error::InstanceTooLarge {
                points,
                cap: self.max_points,
            });
        }
        Ok(())
    }
}

/// An explicit finite set of points of `L_l^n`, deduplicated and kept in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlgebraicSet {
    ctx: SemilatticeContext,
    points: BTreeSet<Point>,
}

impl AlgebraicSet {
    pub fn new(ctx: SemilatticeContext, points: impl IntoIterator<Item = Point>) -> Result<Self> {
        let points: BTreeSet<Point> = points.into_iter().collect();
        for p in &points {
            ctx.check_point(p)?;
        }
        Ok(Self { ctx, points })
    }

    pub fn empty(ctx: SemilatticeContext) -> Self {
        Self {
            ctx,
            points: BTreeSet::new(),
        }
    }

    pub fn context(&self) -> &SemilatticeContext {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn is_subset(&self, other: &AlgebraicSet) -> bool {
        self.points.is_subset(&other.points)
    }

    pub fn union(&self, other: &AlgebraicSet) -> AlgebraicSet {
        AlgebraicSet {
            ctx: self.ctx,
            points: self.points.union(&other.points).cloned().collect(),
        }
    }

    pub fn intersection(&self, other: &AlgebraicSet) -> AlgebraicSet {
        AlgebraicSet {
            ctx: self.ctx,
            points: self.points.intersection(&other.points).cloned().collect(),
        }
    }
}

impl Serialize for AlgebraicSet {
    // JSON: array of points, each an array of 1-based element indices,
    // in lexicographic point order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.points.len()))?;
        for p in &self.points {
            seq.serialize_element(p.coords())?;
        }
        seq.end()
    }
}

/// The full cube `L_l^n`.
pub fn full_cube(ctx: SemilatticeContext, caps: &Caps) -> Result<AlgebraicSet> {
    caps.check(&ctx)?;
    Ok(AlgebraicSet {
        ctx,
        points: ctx.points().collect(),
    })
}

/// `V(t = s)`: the exact solution set by exhaustive enumeration.
pub fn solutions(eq: &Equation, ctx: SemilatticeContext, caps: &Caps) -> Result<AlgebraicSet> {
    solutions_of_system(std::slice::from_ref(eq), ctx, caps)
}

/// `V(S)` of a system: the intersection of the member solution sets.
/// The empty system yields the full cube.
pub fn solutions_of_system(
    eqs: &[Equation],
    ctx: SemilatticeContext,
    caps: &Caps,
) -> Result<AlgebraicSet> {
    caps.check(&ctx)?;
    for eq in eqs {
        if eq.max_var() > ctx.arity() {
            return Err(Error::UniverseMismatch(format!(
                "equation '{eq}' uses variable x{} but ambient n is {}",
                eq.max_var(),
                ctx.arity()
            )));
        }
    }
    let mut points = BTreeSet::new();
    'outer: for p in ctx.points() {
        for eq in eqs {
            if !eq.holds(&p)? {
                continue 'outer;
            }
        }
        points.insert(p);
    }
    Ok(AlgebraicSet { ctx, points })
}

/// All `(2^n - 1)^2` ordered pairs of nonempty terms over `{1..n}`, in
/// ascending (lhs-mask, rhs-mask) order. This is the equation universe
/// the closure operator quantifies over; unlike `Eq(n)` it does not
/// require full variable coverage.
pub fn all_ambient_equations(n: u32) -> Result<Vec<Equation>> {
    if n < 1 {
        return Err(Error::ContextViolation("n must be >= 1".into()));
    }
    if n > 16 {
        return Err(Error::GuardViolation(format!(
            "all_ambient_equations: n={n} exceeds guard of 16"
        )));
    }
    let full = 1u32 << n;
    let mut out = Vec::with_capacity(((full - 1) * (full - 1)) as usize);
    for tm in 1..full {
        for sm in 1..full {
            out.push(Equation::new(Term::from_mask(tm)?, Term::from_mask(sm)?));
        }
    }
    Ok(out)
}

/// The smallest algebraic superset of `points`: the intersection of
/// `V(e)` over every ambient equation `e` satisfied by all of `points`.
pub fn closure(
    ctx: SemilatticeContext,
    points: &BTreeSet<Point>,
    caps: &Caps,
) -> Result<AlgebraicSet> {
    if ctx.arity() > 6 {
        return Err(Error::GuardViolation(format!(
            "closure: n={} exceeds guard of 6",
            ctx.arity()
        )));
    }
    caps.check(&ctx)?;
    for p in points {
        ctx.check_point(p)?;
    }
    let mut satisfied = Vec::new();
    for eq in all_ambient_equations(ctx.arity())? {
        let mut all = true;
        for p in points {
            if !eq.holds(p)? {
                all = false;
                break;
            }
        }
        if all {
            satisfied.push(eq);
        }
    }
    solutions_of_system(&satisfied, ctx, caps)
}

/// Whether `set` equals its own closure.
pub fn is_algebraic(set: &AlgebraicSet, caps: &Caps) -> Result<bool> {
    Ok(&closure(set.ctx, &set.points, caps)? == set)
}

/// Terms over the ambient variables modulo pointwise equality on an
/// algebraic set, with the induced order. Classes are listed by their
/// least member term; `leq[i][j]` holds iff class `i` evaluates below
/// class `j` at every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateSemilattice {
    classes: Vec<Vec<Term>>,
    leq: Vec<Vec<bool>>,
}

impl CoordinateSemilattice {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<Term>] {
        &self.classes
    }

    /// Least member of each class, in class order.
    pub fn representatives(&self) -> Vec<&Term> {
        self.classes.iter().map(|c| &c[0]).collect()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Whether the class order is total.
    pub fn is_chain(&self) -> bool {
        for i in 0..self.classes.len() {
            for j in 0..self.classes.len() {
                if !self.leq[i][j] && !self.leq[j][i] {
                    return false;
                }
            }
        }
        true
    }
}

/// `Γ(Y)`: the coordinate semilattice of an algebraic set.
///
/// On the empty set all terms are equivalent, giving a single class.
pub fn coordinate_semilattice(set: &AlgebraicSet) -> Result<CoordinateSemilattice> {
    let n = set.ctx.arity();
    if n > 6 {
        return Err(Error::GuardViolation(format!(
            "coordinate_semilattice: n={n} exceeds guard of 6"
        )));
    }
    let pts: Vec<&Point> = set.points().collect();
    // key each term by its evaluation vector over the points of Y
    let mut groups: Vec<(Vec<u32>, Vec<Term>)> = Vec::new();
    for mask in 1..(1u32 << n) {
        let term = Term::from_mask(mask)?;
        let mut vector = Vec::with_capacity(pts.len());
        for p in &pts {
            vector.push(term.eval(p)?.index());
        }
        match groups.iter_mut().find(|(v, _)| *v == vector) {
            Some((_, members)) => members.push(term),
            None => groups.push((vector, vec![term])),
        }
    }
    for (_, members) in &mut groups {
        members.sort();
    }
    groups.sort_by(|a, b| a.1[0].cmp(&b.1[0]));
    let leq = groups
        .iter()
        .map(|(vi, _)| {
            groups
                .iter()
                .map(|(vj, _)| vi.iter().zip(vj).all(|(a, b)| a <= b))
                .collect()
        })
        .collect();
    Ok(CoordinateSemilattice {
        classes: groups.into_iter().map(|(_, members)| members).collect(),
        leq,
    })
}

/// Irreducibility via the coordinate semilattice: `Y` is irreducible iff
/// `Γ(Y)` embeds into `L_l`, i.e. its class order is total and has at
/// most `l` classes. Undefined for the empty set.
pub fn is_irreducible(set: &AlgebraicSet) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySetIrreducibility);
    }
    let gamma = coordinate_semilattice(set)?;
    Ok(gamma.is_chain() && gamma.class_count() <= set.ctx.order() as usize)
}

/// Definition-level irreducibility oracle, independent of the coordinate
/// semilattice: `Y` is reducible iff two proper closed subsets cover it.
/// Closed subsets are found as closures of proper subsets of `Y`.
pub fn is_irreducible_by_cover(set: &AlgebraicSet, caps: &Caps) -> Result<bool> {
    if set.is_empty() {
        return Err(Error::EmptySetIrreducibility);
    }
    if set.len() > 12 || set.ctx.arity() > 3 {
        return Err(Error::GuardViolation(format!(
            "is_irreducible_by_cover: |Y|={} (max 12), n={} (max 3)",
            set.len(),
            set.ctx.arity()
        )));
    }
    let pts: Vec<&Point> = set.points().collect();
    let mut proper_closed: Vec<BTreeSet<Point>> = Vec::new();
    for mask in 0..(1u64 << pts.len()) {
        if mask == (1u64 << pts.len()) - 1 {
            continue; // Z must be a proper subset
        }
        let subset: BTreeSet<Point> = pts
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, p)| (*p).clone())
            .collect();
        let closed = closure(set.ctx, &subset, caps)?;
        if closed.is_subset(set)
            && closed.len() < set.len()
            && !proper_closed.contains(&closed.points)
        {
            proper_closed.push(closed.points);
        }
    }
    for (i, a) in proper_closed.iter().enumerate() {
        for b in proper_closed.iter().skip(i + 1) {
            if a.union(b).count() == set.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The complete family of algebraic sets over `L_l^n`: every `V(e)` plus
/// the full cube, closed under pairwise intersection to a fixpoint.
pub fn enumerate_closed_sets(ctx: SemilatticeContext, caps: &Caps) -> Result<Vec<AlgebraicSet>> {
    if ctx.arity() > 3 || ctx.order() > 4 {
        return Err(Error::GuardViolation(format!(
            "enumerate_closed_sets: n={} (max 3), l={} (max 4)",
            ctx.arity(),
            ctx.order()
        )));
    }
    let mut family: BTreeSet<AlgebraicSet> = BTreeSet::new();
    family.insert(full_cube(ctx, caps)?);
    for eq in all_ambient_equations(ctx.arity())? {
        family.insert(solutions(&eq, ctx, caps)?);
    }
    loop {
        let snapshot: Vec<AlgebraicSet> = family.iter().cloned().collect();
        let before = family.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in snapshot.iter().skip(i + 1) {
                family.insert(a.intersection(b));
                if family.len() > caps.max_family {
                    return Err(Error::GuardViolation(format!(
                        "closed-set family exceeds cap of {}",
                        caps.max_family
                    )));
                }
            }
        }
        if family.len() == before {
            break;
        }
    }
    Ok(family.into_iter().collect())
}

/// Irreducible decomposition by exhaustion: the maximal irreducible
/// closed subsets of `Y`. Their union must give back `Y` and the
/// components are pairwise incomparable.
pub fn brute_decompose(set: &AlgebraicSet, caps: &Caps) -> Result<Vec<AlgebraicSet>> {
    let family = enumerate_closed_sets(set.ctx, caps)?;
    let mut candidates = Vec::new();
    for c in family {
        if !c.is_empty() && c.is_subset(set) && is_irreducible(&c)? {
            candidates.push(c);
        }
    }
    let mut components: Vec<AlgebraicSet> = Vec::new();
    'next: for c in &candidates {
        for other in &candidates {
            if c != other && c.is_subset(other) {
                continue 'next;
            }
        }
        components.push(c.clone());
    }
    let mut union = AlgebraicSet::empty(set.ctx);
    for c in &components {
        union = union.union(c);
    }
    if &union != set {
        return Err(Error::InternalInconsistency(format!(
            "union of maximal irreducible subsets has {} points, input has {}",
            union.len(),
            set.len()
        )));
    }
    for (i, a) in components.iter().enumerate() {
        for (j, b) in components.iter().enumerate() {
            if i != j && a.is_subset(b) {
                return Err(Error::InternalInconsistency(
                    "decomposition components are not pairwise incomparable".into(),
                ));
            }
        }
    }
    Ok(components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_constraint;

    fn ctx(l: u32, n: u32) -> SemilatticeContext {
        SemilatticeContext::new(l, n).unwrap()
    }

    fn caps() -> Caps {
        Caps::default()
    }

    fn solve(text: &str, l: u32, n: u32) -> AlgebraicSet {
        solutions(&parse_constraint(text).unwrap(), ctx(l, n), &caps()).unwrap()
    }

    fn pt(coords: &[u32]) -> Point {
        Point::new(coords.to_vec())
    }

    #[test]
    fn identity_equation_gives_full_cube() {
        assert_eq!(solve("x1x2x3 = x1x2x3", 3, 3).len(), 27);
    }

    #[test]
    fn lemma3_example_point_is_a_solution() {
        assert!(solve("x1x2 = x1x3", 3, 3).contains(&pt(&[2, 1, 1])));
    }

    #[test]
    fn witness_criterion_re_enumeration_agrees() {
        // independent count of V(x1 = x2x3): keep points where some pair
        // (i in lhs, j in rhs) shares the global minimum
        let eq = parse_constraint("x1 = x2x3").unwrap();
        let c = ctx(3, 3);
        let by_eval = solutions(&eq, c, &caps()).unwrap();
        let mut by_witness = Vec::new();
        for p in c.points() {
            let min = *p.coords().iter().min().unwrap();
            let ok = eq.lhs().vars().iter().any(|&i| {
                eq.rhs().vars().iter().any(|&j| {
                    p.coord(i).unwrap() == p.coord(j).unwrap() && p.coord(i).unwrap() == min
                })
            });
            if ok {
                by_witness.push(p);
            }
        }
        assert_eq!(by_eval.len(), by_witness.len());
        assert!(by_witness.iter().all(|p| by_eval.contains(p)));
    }

    #[test]
    fn system_solutions() {
        let chain = solutions_of_system(
            &[
                parse_constraint("x1 <= x2").unwrap(),
                parse_constraint("x2 <= x3").unwrap(),
            ],
            ctx(3, 3),
            &caps(),
        )
        .unwrap();
        // weakly increasing triples over 3 values: C(5,3) = 10
        assert_eq!(chain.len(), 10);

        let empty_system = solutions_of_system(&[], ctx(2, 2), &caps()).unwrap();
        assert_eq!(empty_system.len(), 4);

        let redundant = solutions_of_system(
            &[
                parse_constraint("x1 = x2").unwrap(),
                parse_constraint("x2 <= x1").unwrap(),
            ],
            ctx(3, 2),
            &caps(),
        )
        .unwrap();
        assert_eq!(redundant, solve("x1 = x2", 3, 2));
    }

    #[test]
    fn ambient_equation_counts() {
        assert_eq!(all_ambient_equations(1).unwrap().len(), 1);
        assert_eq!(all_ambient_equations(2).unwrap().len(), 9);
        assert_eq!(all_ambient_equations(3).unwrap().len(), 49);
    }

    #[test]
    fn enumeration_cap_is_enforced() {
        let tight = Caps {
            max_points: 8,
            ..Caps::default()
        };
        let err = solutions(&parse_constraint("x1 = x1").unwrap(), ctx(3, 2), &tight).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { points: 9, cap: 8 }));
    }

    #[test]
    fn closure_of_empty_set_is_the_diagonal() {
        // every equation holds at constant points, so the defining
        // intersection is exactly the diagonal
        let c = ctx(3, 3);
        let cl = closure(c, &BTreeSet::new(), &caps()).unwrap();
        assert_eq!(cl.len(), 3);
        for i in 1..=3 {
            assert!(cl.contains(&pt(&[i, i, i])));
        }
    }

    #[test]
    fn closure_of_single_point_regression() {
        let c = ctx(3, 3);
        let z: BTreeSet<Point> = [pt(&[1, 2, 3])].into_iter().collect();
        let cl = closure(c, &z, &caps()).unwrap();
        // frozen from the defining intersection; equals V(x1<=x2<=x3)
        let chain = solutions_of_system(
            &[
                parse_constraint("x1 <= x2").unwrap(),
                parse_constraint("x2 <= x3").unwrap(),
            ],
            c,
            &caps(),
        )
        .unwrap();
        assert_eq!(cl, chain);
        assert_eq!(cl.len(), 10);
    }

    #[test]
    fn solution_sets_are_closed() {
        let y = solve("x1x2 = x1x3", 3, 3);
        let cl = closure(y.ctx, &y.points, &caps()).unwrap();
        assert_eq!(cl, y);
        assert!(is_algebraic(&y, &caps()).unwrap());
    }

    #[test]
    fn antichain_pair_is_not_algebraic() {
        let c = ctx(2, 2);
        let z = AlgebraicSet::new(c, [pt(&[1, 2]), pt(&[2, 1])]).unwrap();
        assert!(!is_algebraic(&z, &caps()).unwrap());
        // its closure picks up the whole cube here
        let cl = closure(c, &z.points, &caps()).unwrap();
        assert_eq!(cl.len(), 4);
    }

    #[test]
    fn full_cube_is_algebraic() {
        let cube = full_cube(ctx(2, 2), &caps()).unwrap();
        assert!(is_algebraic(&cube, &caps()).unwrap());
    }

    #[test]
    fn closure_properties_exhaustive_n2_l2() {
        // extensive, monotone, idempotent over all 16 subsets of L_2^2
        let c = ctx(2, 2);
        let pts: Vec<Point> = c.points().collect();
        let subsets: Vec<BTreeSet<Point>> = (0..16u32)
            .map(|mask| {
                pts.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        for z in &subsets {
            let cl = closure(c, z, &caps()).unwrap();
            assert!(z.iter().all(|p| cl.contains(p)), "extensive");
            let again = closure(c, &cl.points, &caps()).unwrap();
            assert_eq!(again, cl, "idempotent");
            for w in &subsets {
                if z.is_subset(w) {
                    let clw = closure(c, w, &caps()).unwrap();
                    assert!(cl.is_subset(&clw), "monotone");
                }
            }
        }
    }

    #[test]
    fn gamma_of_chain_is_l3() {
        let y = solutions_of_system(
            &[
                parse_constraint("x1 <= x2").unwrap(),
                parse_constraint("x2 <= x3").unwrap(),
            ],
            ctx(3, 3),
            &caps(),
        )
        .unwrap();
        let gamma = coordinate_semilattice(&y).unwrap();
        assert_eq!(gamma.class_count(), 3);
        assert!(gamma.is_chain());
    }

    #[test]
    fn gamma_of_full_cube_n2_is_not_a_chain() {
        let cube = full_cube(ctx(2, 2), &caps()).unwrap();
        let gamma = coordinate_semilattice(&cube).unwrap();
        assert_eq!(gamma.class_count(), 3);
        assert!(!gamma.is_chain());
        let reps: Vec<String> = gamma.representatives().iter().map(|t| t.to_string()).collect();
        assert_eq!(reps, vec!["x1", "x1*x2", "x2"]);
        // x1*x2 lies below both projections
        assert!(gamma.leq(1, 0) && gamma.leq(1, 2));
    }

    #[test]
    fn gamma_of_single_point() {
        let c = ctx(2, 2);
        let y = AlgebraicSet::new(c, [pt(&[1, 2])]).unwrap();
        let gamma = coordinate_semilattice(&y).unwrap();
        // x1 and x1*x2 both evaluate to a_1; a 2-chain
        assert_eq!(gamma.class_count(), 2);
        assert!(gamma.is_chain());
    }

    #[test]
    fn irreducibility_via_gamma() {
        let chain = solutions_of_system(
            &[
                parse_constraint("x1 <= x2").unwrap(),
                parse_constraint("x2 <= x3").unwrap(),
            ],
            ctx(3, 3),
            &caps(),
        )
        .unwrap();
        assert!(is_irreducible(&chain).unwrap());
        assert!(!is_irreducible(&solve("x1x2 = x1x3", 3, 3)).unwrap());
        let glued = solutions_of_system(
            &[
                parse_constraint("x2 = x3").unwrap(),
                parse_constraint("x3 <= x1").unwrap(),
            ],
            ctx(3, 3),
            &caps(),
        )
        .unwrap();
        assert!(is_irreducible(&glued).unwrap());
    }

    #[test]
    fn empty_set_irreducibility_is_an_error() {
        let e = AlgebraicSet::empty(ctx(2, 2));
        assert!(matches!(
            is_irreducible(&e),
            Err(Error::EmptySetIrreducibility)
        ));
    }

    #[test]
    fn cover_oracle_examples() {
        assert!(is_irreducible_by_cover(&solve("x1 = x2", 2, 2), &caps()).unwrap());
        assert!(!is_irreducible_by_cover(&solve("x1x2 = x1x2", 2, 2), &caps()).unwrap());
    }

    #[test]
    fn cover_oracle_agrees_with_gamma_on_n2_l2_solution_sets() {
        let c = ctx(2, 2);
        for eq in all_ambient_equations(2).unwrap() {
            let y = solutions(&eq, c, &caps()).unwrap();
            if y.is_empty() {
                continue;
            }
            assert_eq!(
                is_irreducible(&y).unwrap(),
                is_irreducible_by_cover(&y, &caps()).unwrap(),
                "{eq}"
            );
        }
    }

    #[test]
    fn closed_set_family_small_cases() {
        let single = enumerate_closed_sets(ctx(2, 1), &caps()).unwrap();
        assert_eq!(single.len(), 1);

        let family = enumerate_closed_sets(ctx(2, 2), &caps()).unwrap();
        // regression fixture from the fixpoint construction: full cube,
        // the two one-inequality sets, and the diagonal
        assert_eq!(family.len(), 4);
        // closed under intersection
        for a in &family {
            for b in &family {
                assert!(family.contains(&a.intersection(b)));
            }
        }
    }

    #[test]
    fn brute_decompose_table_row() {
        let y = solve("x1x2 = x1x3", 3, 3);
        let comps = brute_decompose(&y, &caps()).unwrap();
        assert_eq!(comps.len(), 3);
        let c = ctx(3, 3);
        let expected: BTreeSet<AlgebraicSet> = [
            vec!["x1 <= x2", "x2 <= x3"],
            vec!["x1 <= x3", "x3 <= x2"],
            vec!["x2 = x3", "x3 <= x1"],
        ]
        .into_iter()
        .map(|sys| {
            let eqs: Vec<Equation> = sys.iter().map(|s| parse_constraint(s).unwrap()).collect();
            solutions_of_system(&eqs, c, &caps()).unwrap()
        })
        .collect();
        let got: BTreeSet<AlgebraicSet> = comps.into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn brute_decompose_irreducible_input() {
        let y = solve("x1 = x2", 2, 2);
        let comps = brute_decompose(&y, &caps()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0], y);
    }

    #[test]
    fn brute_decompose_identity_has_six_chains() {
        let y = solve("x1x2x3 = x1x2x3", 3, 3);
        assert_eq!(brute_decompose(&y, &caps()).unwrap().len(), 6);
    }

    #[test]
    fn solution_sets_symmetric_in_equation_order() {
        for n in 1..=3u32 {
            for l in 1..=3u32 {
                let c = ctx(l, n);
                for eq in all_ambient_equations(n).unwrap() {
                    assert_eq!(
                        solutions(&eq, c, &caps()).unwrap(),
                        solutions(&eq.reversed(), c, &caps()).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn algebraic_set_json_is_lexicographic() {
        let c = ctx(2, 2);
        let s = AlgebraicSet::new(c, [pt(&[2, 1]), pt(&[1, 2])]).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[1,2],[2,1]]");
    }
}
