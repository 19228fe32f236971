//! The four types of 6-point sets in the plane of order 3, classified two
//! independent ways, and the full census of all C(13,6) = 1716 sets.
//!
//! Writing S for a 6-set and a *trisecant* for a line meeting S in exactly
//! three points, the types are:
//!
//! * type 1 — a full line plus two further points (one trisecant);
//! * type 2 — the symmetric difference of two lines (two trisecants);
//! * type 3 — a triangle with an inscribed triangle: each vertex of the
//!   basic triangle is on two trisecants, each inscribed point on one;
//! * type 4 — the six vertices of a quadrilateral, i.e. the pairwise
//!   intersections of four lines no three concurrent (four trisecants).

use std::fmt;

use crate::error::Error;
use crate::plane::Plane;
use crate::subsets::for_each_subset;

/// A set of plane points as a membership bitmask (bit i = point i).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PointSet(pub u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_members(members: &[u8]) -> PointSet {
        PointSet(members.iter().fold(0, |m, &p| m | 1 << p))
    }

    /// All points of a plane.
    pub fn full(plane: &Plane) -> PointSet {
        PointSet((1 << plane.point_count()) - 1)
    }

    pub fn contains(self, p: u8) -> bool {
        self.0 >> p & 1 == 1
    }

    pub fn insert(self, p: u8) -> PointSet {
        PointSet(self.0 | 1 << p)
    }

    pub fn remove(self, p: u8) -> PointSet {
        PointSet(self.0 & !(1 << p))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending point indices.
    pub fn members(self) -> Vec<u8> {
        (0..64).filter(|&p| self.contains(p)).collect()
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (0..64).filter(move |&p| self.contains(p))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        write!(f, "{{")?;
        for p in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// The four classes of 6-sets; `TypeN` has exactly N trisecants.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SixSetType {
    Type1,
    Type2,
    Type3,
    Type4,
}

impl SixSetType {
    pub fn trisecant_count(self) -> usize {
        match self {
            SixSetType::Type1 => 1,
            SixSetType::Type2 => 2,
            SixSetType::Type3 => 3,
            SixSetType::Type4 => 4,
        }
    }

    pub fn index(self) -> usize {
        self.trisecant_count() - 1
    }
}

impl fmt::Display for SixSetType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "type{}", self.trisecant_count())
    }
}

/// Vertex roles of a type-3 set: `inscribed[i]` lies on the side joining
/// the two basic vertices other than `basic[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TriangleRoles {
    pub basic: [u8; 3],
    pub inscribed: [u8; 3],
}

/// Lines meeting `s` in exactly three points, ascending.
pub fn trisecants(plane: &Plane, s: PointSet) -> Vec<u8> {
    (0..plane.line_count() as u8)
        .filter(|&l| (plane.line_mask(l) & s.0).count_ones() == 3)
        .collect()
}

fn require_six_set(plane: &Plane, s: PointSet) -> Result<(), Error> {
    if plane.order() != 3 {
        return Err(Error::OrderThreeOnly { what: "six-set classification", q: plane.order() });
    }
    if s.len() != 6 || !s.is_subset_of(PointSet::full(plane)) {
        return Err(Error::WrongSetSize { expected: 6, got: s.len() });
    }
    Ok(())
}

/// Classifies a 6-set by its trisecant count.
pub fn classify_by_trisecants(plane: &Plane, s: PointSet) -> Result<SixSetType, Error> {
    require_six_set(plane, s)?;
    match trisecants(plane, s).len() {
        1 => Ok(SixSetType::Type1),
        2 => Ok(SixSetType::Type2),
        3 => Ok(SixSetType::Type3),
        4 => Ok(SixSetType::Type4),
        n => Err(Error::Invariant(format!("six-set {s} has {n} trisecants"))),
    }
}

/// True iff `s` contains a full line.
fn contains_line(plane: &Plane, s: PointSet) -> bool {
    (0..plane.line_count() as u8).any(|l| plane.line_mask(l) & !s.0 == 0)
}

/// The unique line pair with symmetric difference `s`, if one exists.
fn symmdiff_witness(plane: &Plane, s: PointSet) -> Option<(u8, u8)> {
    let n = plane.line_count() as u8;
    let mut found = None;
    for a in 0..n {
        for b in a + 1..n {
            if plane.line_mask(a) ^ plane.line_mask(b) == s.0 {
                debug_assert!(found.is_none(), "two symmetric-difference decompositions of {s}");
                found = Some((a, b));
            }
        }
    }
    found
}

/// True iff the trisecants of `s` are four lines, no three concurrent,
/// whose six pairwise intersections are exactly `s`.
fn is_quadrilateral(plane: &Plane, s: PointSet) -> bool {
    let tri = trisecants(plane, s);
    if tri.len() != 4 {
        return false;
    }
    let mut vertices = PointSet::EMPTY;
    let mut count = 0;
    for (i, &a) in tri.iter().enumerate() {
        for &b in &tri[i + 1..] {
            let m = plane.meet(a, b).expect("distinct trisecants");
            if vertices.contains(m) {
                return false; // three concurrent lines
            }
            vertices = vertices.insert(m);
            count += 1;
        }
    }
    count == 6 && vertices == s
}

/// Partitions `s` into basic/inscribed triangle roles by trisecant degree,
/// verifying the inscribed incidences. `None` if the pattern does not fit.
fn triangle_witness(plane: &Plane, s: PointSet) -> Option<TriangleRoles> {
    let tri = trisecants(plane, s);
    let mut basic = Vec::new();
    let mut inscribed_pool = Vec::new();
    for p in s.iter() {
        match tri.iter().filter(|&&l| plane.is_incident(p, l)).count() {
            2 => basic.push(p),
            1 => inscribed_pool.push(p),
            _ => return None,
        }
    }
    if basic.len() != 3 || inscribed_pool.len() != 3 {
        return None;
    }
    let basic: [u8; 3] = basic.try_into().unwrap();
    // The side opposite basic[i] joins the other two basic vertices; it
    // must carry exactly one inscribed point, and each inscribed point
    // must land on exactly one side.
    let mut inscribed = [u8::MAX; 3];
    for i in 0..3 {
        let side = plane.line_through(basic[(i + 1) % 3], basic[(i + 2) % 3]).ok()?;
        let on_side: Vec<u8> =
            inscribed_pool.iter().copied().filter(|&p| plane.is_incident(p, side)).collect();
        if on_side.len() != 1 {
            return None;
        }
        inscribed[i] = on_side[0];
    }
    let mut unique = inscribed;
    unique.sort_unstable();
    if unique.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(TriangleRoles { basic, inscribed })
}

/// Classifies a 6-set by structure alone, checking all four shape
/// predicates and insisting exactly one matches.
pub fn classify_structurally(plane: &Plane, s: PointSet) -> Result<SixSetType, Error> {
    require_six_set(plane, s)?;
    let mut matches = Vec::with_capacity(1);
    if contains_line(plane, s) {
        matches.push(SixSetType::Type1);
    }
    if symmdiff_witness(plane, s).is_some() {
        matches.push(SixSetType::Type2);
    }
    if is_quadrilateral(plane, s) {
        matches.push(SixSetType::Type4);
    }
    if triangle_witness(plane, s).is_some() {
        matches.push(SixSetType::Type3);
    }
    match matches[..] {
        [t] => Ok(t),
        _ => Err(Error::Invariant(format!("six-set {s} matches {} structural types", matches.len()))),
    }
}

/// Basic/inscribed roles of a type-3 set; errors on any other type.
pub fn triangle_roles(plane: &Plane, s: PointSet) -> Result<TriangleRoles, Error> {
    require_six_set(plane, s)?;
    triangle_witness(plane, s).ok_or(Error::NotType3)
}

/// Counts of the four types over all 1716 six-sets of PG(2,3).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CensusReport {
    /// counts[i] is the number of sets of type i+1.
    pub counts: [u64; 4],
    pub total: u64,
}

/// Classifies every 6-set of the order-3 plane by trisecant count.
pub fn census(plane: &Plane) -> Result<CensusReport, Error> {
    if plane.order() != 3 {
        return Err(Error::OrderThreeOnly { what: "six-set census", q: plane.order() });
    }
    let mut counts = [0u64; 4];
    let mut result = Ok(());
    for_each_subset(plane.point_count(), 6, |members| {
        if result.is_err() {
            return;
        }
        let s = PointSet(members.iter().fold(0, |m, &p| m | 1 << p));
        match classify_by_trisecants(plane, s) {
            Ok(t) => counts[t.index()] += 1,
            Err(e) => result = Err(e),
        }
    });
    result?;
    Ok(CensusReport { counts, total: counts.iter().sum() })
}
