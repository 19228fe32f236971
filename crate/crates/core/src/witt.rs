//! The small Witt design: 12 points, 132 six-point blocks, every 5-set in
//! exactly one block.
//!
//! Fix a point U of the order-3 plane and let W be the other 12 points.
//! Blocks are the 6-subsets of W of three kinds:
//!
//! * **A** — the symmetric difference of two lines, neither through U;
//! * **B** — (a ∪ b) ∖ {U} for two distinct lines with U ∈ a ∪ b;
//! * **C** — a quadrangle having U as a diagonal point, together with its
//!   other two diagonal points.
//!
//! [`WittDesign::block_containing`] finds the block through a given 5-set
//! constructively, by the geometry of the 6-set M ∪ {U} rather than by
//! scanning the block list.

use std::collections::HashMap;
use std::fmt;

use crate::census::{classify_by_trisecants, triangle_roles, trisecants, PointSet, SixSetType};
use crate::checker::Design;
use crate::error::Error;
use crate::plane::Plane;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BlockType {
    A,
    B,
    C,
}

impl fmt::Display for BlockType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BlockType::A => "A",
            BlockType::B => "B",
            BlockType::C => "C",
        })
    }
}

/// How a block arose, in plane indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Symmetric difference of two lines (type A).
    SymmDiff { lines: (u8, u8) },
    /// Union of two lines, minus U (type B).
    Union { lines: (u8, u8) },
    /// Quadrangle with diagonal point U plus its other two diagonal points
    /// (type C).
    Quad { vertices: [u8; 4], diagonals: [u8; 2] },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::SymmDiff { lines: (a, b) } => write!(f, "symmdiff({a},{b})"),
            Witness::Union { lines: (a, b) } => write!(f, "union({a},{b})"),
            Witness::Quad { vertices: [p, q, r, s], diagonals: [d, e] } => {
                write!(f, "quad({p},{q},{r},{s}|{d},{e})")
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Block {
    /// Plane point indices, ascending. U never appears.
    pub members: [u8; 6],
    pub set: PointSet,
    pub block_type: BlockType,
    pub witness: Witness,
}

/// Which case of the constructive cover argument produced a block, keyed
/// by the type of the 6-set M ∪ {U}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CoverCase {
    /// Type 1: S contains a line; join the two leftover points.
    LineAndPoints,
    /// Type 2: S is the symmetric difference of two lines.
    TwoLines,
    /// Type 3 with U an inscribed point.
    TriangleUInscribed,
    /// Type 3 with U a basic vertex.
    TriangleUBasic,
    /// Type 4: S is a quadrilateral with vertex U.
    Quadrilateral,
}

impl fmt::Display for CoverCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverCase::LineAndPoints => "line-and-points",
            CoverCase::TwoLines => "two-lines",
            CoverCase::TriangleUInscribed => "triangle-u-inscribed",
            CoverCase::TriangleUBasic => "triangle-u-basic",
            CoverCase::Quadrilateral => "quadrilateral",
        })
    }
}

/// The design: a fixed plane of order 3, a distinguished point `u`, and
/// the 132 blocks over the remaining 12 points, sorted by member list.
#[derive(Clone, Debug)]
pub struct WittDesign {
    plane: Plane,
    u: u8,
    /// The 12 points of W in ascending plane order; position = dense index.
    points: [u8; 12],
    blocks: Vec<Block>,
    index_by_set: HashMap<PointSet, usize>,
}

/// The three diagonal points of a quadrangle (four points, no three
/// collinear): intersections of the three pairs of opposite sides.
/// Returned ascending.
pub fn diagonal_points(plane: &Plane, vertices: [u8; 4]) -> Result<[u8; 3], Error> {
    {
        let mut v = vertices;
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DegenerateQuadrangle);
        }
    }
    let [a, b, c, d] = vertices;
    for (x, y, z) in [(a, b, c), (a, b, d), (a, c, d), (b, c, d)] {
        let l = plane.line_through(x, y)?;
        if plane.is_incident(z, l) {
            return Err(Error::DegenerateQuadrangle);
        }
    }
    let mut out = [0u8; 3];
    for (i, ((p1, p2), (p3, p4))) in
        [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))].into_iter().enumerate()
    {
        out[i] = plane.meet(plane.line_through(p1, p2)?, plane.line_through(p3, p4)?)?;
    }
    out.sort_unstable();
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]), "diagonal triangle degenerate");
    Ok(out)
}

impl WittDesign {
    /// Builds the design over `plane` (order 3) away from point `u`.
    pub fn build(plane: &Plane, u: u8) -> Result<WittDesign, Error> {
        if plane.order() != 3 {
            return Err(Error::OrderThreeOnly { what: "the Witt design", q: plane.order() });
        }
        if usize::from(u) >= plane.point_count() {
            return Err(Error::NotDesignPoint(u));
        }
        let w_set = PointSet::full(plane).remove(u);

        let lines_off_u: Vec<u8> =
            (0..13).filter(|&l| !plane.is_incident(u, l)).collect();
        let lines_thru_u: Vec<u8> =
            (0..13).filter(|&l| plane.is_incident(u, l)).collect();
        debug_assert_eq!((lines_off_u.len(), lines_thru_u.len()), (9, 4));

        let mut blocks = Vec::with_capacity(132);
        let mut push = |set: PointSet, block_type: BlockType, witness: Witness| -> Result<(), Error> {
            if set.len() != 6 || !set.is_subset_of(w_set) {
                return Err(Error::Invariant(format!("bad block {set} from {witness}")));
            }
            let members: [u8; 6] = set.members().try_into().unwrap();
            blocks.push(Block { members, set, block_type, witness });
            Ok(())
        };

        for (i, &a) in lines_off_u.iter().enumerate() {
            for &b in &lines_off_u[i + 1..] {
                let set = PointSet(plane.line_mask(a) ^ plane.line_mask(b));
                push(set, BlockType::A, Witness::SymmDiff { lines: (a, b) })?;
            }
        }
        for a in 0..13u8 {
            for b in a + 1..13 {
                let union = PointSet(plane.line_mask(a) | plane.line_mask(b));
                if union.contains(u) {
                    push(union.remove(u), BlockType::B, Witness::Union { lines: (a, b) })?;
                }
            }
        }
        for (i, &a) in lines_thru_u.iter().enumerate() {
            for &b in &lines_thru_u[i + 1..] {
                let pa: Vec<u8> = plane.points_on(a).iter().copied().filter(|&p| p != u).collect();
                let pb: Vec<u8> = plane.points_on(b).iter().copied().filter(|&p| p != u).collect();
                for (j, &p1) in pa.iter().enumerate() {
                    for &p2 in &pa[j + 1..] {
                        for (k, &q1) in pb.iter().enumerate() {
                            for &q2 in &pb[k + 1..] {
                                let mut vertices = [p1, p2, q1, q2];
                                vertices.sort_unstable();
                                let diag = diagonal_points(plane, vertices)?;
                                debug_assert!(diag.contains(&u));
                                let rest: Vec<u8> =
                                    diag.iter().copied().filter(|&d| d != u).collect();
                                let diagonals: [u8; 2] = rest.try_into().unwrap();
                                let set = PointSet::from_members(&vertices)
                                    .insert(diagonals[0])
                                    .insert(diagonals[1]);
                                push(set, BlockType::C, Witness::Quad { vertices, diagonals })?;
                            }
                        }
                    }
                }
            }
        }

        blocks.sort_by_key(|b| b.members);
        let mut index_by_set = HashMap::with_capacity(blocks.len());
        for (i, b) in blocks.iter().enumerate() {
            if index_by_set.insert(b.set, i).is_some() {
                return Err(Error::Invariant(format!("duplicate block {}", b.set)));
            }
        }
        if blocks.len() != 132 {
            return Err(Error::Invariant(format!("{} blocks generated, expected 132", blocks.len())));
        }

        let points: [u8; 12] =
            (0..13).filter(|&p| p != u).collect::<Vec<u8>>().try_into().unwrap();
        Ok(WittDesign { plane: plane.clone(), u, points, blocks, index_by_set })
    }

    pub fn plane(&self) -> &Plane {
        &self.plane
    }

    pub fn u(&self) -> u8 {
        self.u
    }

    /// The 12 points of W in ascending plane order.
    pub fn points(&self) -> &[u8; 12] {
        &self.points
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Dense index in [0,12) of a plane point of W.
    pub fn dense_index(&self, p: u8) -> Result<u8, Error> {
        if p == self.u || usize::from(p) >= self.plane.point_count() {
            return Err(Error::NotDesignPoint(p));
        }
        Ok(if p < self.u { p } else { p - 1 })
    }

    /// Plane point index of a dense index in [0,12).
    pub fn plane_index(&self, dense: u8) -> u8 {
        self.points[usize::from(dense)]
    }

    pub fn block_counts(&self) -> [usize; 3] {
        let mut counts = [0; 3];
        for b in &self.blocks {
            counts[b.block_type as usize] += 1;
        }
        counts
    }

    /// Looks up a block by its member set.
    pub fn block_by_set(&self, set: PointSet) -> Option<&Block> {
        self.index_by_set.get(&set).map(|&i| &self.blocks[i])
    }

    /// The block on the other 6 points of W. Always exists; its type is B
    /// for type-A blocks and vice versa — except that a type-B block made
    /// of two lines through U complements the type-B block on the other
    /// two lines through U — and type C pairs with type C.
    pub fn complement_block(&self, set: PointSet) -> Result<&Block, Error> {
        if self.block_by_set(set).is_none() {
            return Err(Error::NotABlock);
        }
        let w_set = PointSet::full(&self.plane).remove(self.u);
        let complement = w_set.difference(set);
        self.block_by_set(complement)
            .ok_or_else(|| Error::Invariant(format!("complement of block {set} is not a block")))
    }

    /// The 6-set P ∖ (B ∪ {U}) and its census type: 1, 2 or 4 according
    /// as the block's type is A, B or C.
    pub fn sixset_of_block(&self, set: PointSet) -> Result<(PointSet, SixSetType), Error> {
        if self.block_by_set(set).is_none() {
            return Err(Error::NotABlock);
        }
        let six = PointSet::full(&self.plane).remove(self.u).difference(set);
        let ty = classify_by_trisecants(&self.plane, six)?;
        Ok((six, ty))
    }

    /// The unique block containing a 5-set M of W, found constructively
    /// from the geometry of S = M ∪ {U}, together with the case used.
    pub fn block_containing(&self, m: &[u8; 5]) -> Result<(&Block, CoverCase), Error> {
        let mset = PointSet::from_members(m);
        if mset.len() != 5 {
            return Err(Error::WrongSetSize { expected: 5, got: mset.len() });
        }
        for &p in m {
            if p == self.u || usize::from(p) >= self.plane.point_count() {
                return Err(Error::NotDesignPoint(p));
            }
        }
        let s = mset.insert(self.u);
        let (set, case) = match classify_by_trisecants(&self.plane, s)? {
            SixSetType::Type1 => (self.cover_line_and_points(s)?, CoverCase::LineAndPoints),
            SixSetType::Type2 => (self.cover_two_lines(s)?, CoverCase::TwoLines),
            SixSetType::Type3 => {
                let roles = triangle_roles(&self.plane, s)?;
                if roles.inscribed.contains(&self.u) {
                    (self.cover_triangle_u_inscribed(s, roles)?, CoverCase::TriangleUInscribed)
                } else {
                    (self.cover_triangle_u_basic(roles)?, CoverCase::TriangleUBasic)
                }
            }
            SixSetType::Type4 => (self.cover_quadrilateral(s)?, CoverCase::Quadrilateral),
        };
        debug_assert!(mset.is_subset_of(set));
        let block = self
            .block_by_set(set)
            .ok_or_else(|| Error::Invariant(format!("constructed cover {set} is not a block")))?;
        Ok((block, case))
    }

    /// S ⊇ a full line a; the two leftover points span a line b, and
    /// U ∈ a ∪ b (U is on a or is itself a leftover), so (a ∪ b) ∖ {U}
    /// is a type-B block containing S ∖ {U}.
    fn cover_line_and_points(&self, s: PointSet) -> Result<PointSet, Error> {
        let a = (0..13u8)
            .find(|&l| PointSet(self.plane.line_mask(l)).is_subset_of(s))
            .ok_or_else(|| Error::Invariant(format!("type-1 set {s} contains no line")))?;
        let extras = s.difference(PointSet(self.plane.line_mask(a)));
        let [x, y]: [u8; 2] = extras.members().try_into().map_err(|_| {
            Error::Invariant(format!("type-1 set {s} has {} points off its line", extras.len()))
        })?;
        let b = self.plane.line_through(x, y)?;
        let union = PointSet(self.plane.line_mask(a) | self.plane.line_mask(b));
        if !union.contains(self.u) {
            return Err(Error::Invariant(format!("U off both lines covering type-1 set {s}")));
        }
        Ok(union.remove(self.u))
    }

    /// S = a △ b; U ∈ S ⊆ a ∪ b, so (a ∪ b) ∖ {U} is a type-B block.
    fn cover_two_lines(&self, s: PointSet) -> Result<PointSet, Error> {
        let tri = trisecants(&self.plane, s);
        let [a, b]: [u8; 2] = tri[..]
            .try_into()
            .map_err(|_| Error::Invariant(format!("type-2 set {s} with {} trisecants", tri.len())))?;
        let (am, bm) = (self.plane.line_mask(a), self.plane.line_mask(b));
        if am ^ bm != s.0 {
            return Err(Error::Invariant(format!("trisecants of type-2 set {s} do not decompose it")));
        }
        Ok(PointSet(am | bm).remove(self.u))
    }

    /// U inscribed: label the basic triangle A, B, C with U on side AB,
    /// P inscribed on BC, Q on CA. Then X := AP ∩ BQ lies on CU and
    /// {A,B,C,X,P,Q} is a type-C block (quadrangle A,B,P,Q with diagonal
    /// points C, X and U).
    fn cover_triangle_u_inscribed(
        &self,
        s: PointSet,
        roles: crate::census::TriangleRoles,
    ) -> Result<PointSet, Error> {
        let iu = (0..3)
            .find(|&i| roles.inscribed[i] == self.u)
            .ok_or_else(|| Error::Invariant("U not inscribed".into()))?;
        let c = roles.basic[iu];
        let a = roles.basic[(iu + 1) % 3];
        let b = roles.basic[(iu + 2) % 3];
        let p = roles.inscribed[(iu + 1) % 3]; // on the side opposite A = BC
        let q = roles.inscribed[(iu + 2) % 3]; // on CA
        let x = self.plane.meet(self.plane.line_through(a, p)?, self.plane.line_through(b, q)?)?;
        let cu = self.plane.line_through(c, self.u)?;
        if !self.plane.is_incident(x, cu) {
            return Err(Error::Invariant(format!("AP ∩ BQ misses CU for type-3 set {s}")));
        }
        let set = PointSet::from_members(&[a, b, c, p, q, x]);
        if set.len() != 6 || set.contains(self.u) {
            return Err(Error::Invariant(format!("degenerate inscribed cover of {s}")));
        }
        Ok(set)
    }

    /// U basic: with A, B the other basic vertices, P inscribed on BU and
    /// Q on UA, the lines AB and PQ avoid U, and AB △ PQ is a type-A
    /// block containing S ∖ {U}.
    fn cover_triangle_u_basic(&self, roles: crate::census::TriangleRoles) -> Result<PointSet, Error> {
        let iu = (0..3)
            .find(|&i| roles.basic[i] == self.u)
            .ok_or_else(|| Error::Invariant("U not basic".into()))?;
        let a = roles.basic[(iu + 1) % 3];
        let b = roles.basic[(iu + 2) % 3];
        let p = roles.inscribed[(iu + 1) % 3]; // on side opposite A, through B and U
        let q = roles.inscribed[(iu + 2) % 3]; // on side opposite B, through U and A
        let ab = self.plane.line_through(a, b)?;
        let pq = self.plane.line_through(p, q)?;
        if self.plane.is_incident(self.u, ab) || self.plane.is_incident(self.u, pq) {
            return Err(Error::Invariant("U on a spanning line of the basic cover".into()));
        }
        Ok(PointSet(self.plane.line_mask(ab) ^ self.plane.line_mask(pq)))
    }

    /// S is the six vertices of a quadrilateral with U among them. Exactly
    /// two of the four trisecants run through U; the vertex E opposite U
    /// is on neither. The other four vertices form a quadrangle whose
    /// diagonal points are U, E and one new point X, and M ∪ {X} is a
    /// type-C block.
    fn cover_quadrilateral(&self, s: PointSet) -> Result<PointSet, Error> {
        let tri = trisecants(&self.plane, s);
        let thru_u: Vec<u8> =
            tri.iter().copied().filter(|&l| self.plane.is_incident(self.u, l)).collect();
        if tri.len() != 4 || thru_u.len() != 2 {
            return Err(Error::Invariant(format!(
                "type-4 set {s}: {} trisecants, {} through U",
                tri.len(),
                thru_u.len()
            )));
        }
        let off: Vec<u8> = s
            .remove(self.u)
            .iter()
            .filter(|&p| thru_u.iter().all(|&l| !self.plane.is_incident(p, l)))
            .collect();
        let [e]: [u8; 1] = off[..]
            .try_into()
            .map_err(|_| Error::Invariant(format!("type-4 set {s} has no unique opposite vertex")))?;
        let quad: [u8; 4] = s.remove(self.u).remove(e).members().try_into().unwrap();
        let diag = diagonal_points(&self.plane, quad)?;
        if !diag.contains(&self.u) || !diag.contains(&e) {
            return Err(Error::Invariant(format!("diagonal points of {s} miss U or E")));
        }
        let x = diag
            .into_iter()
            .find(|&d| d != self.u && d != e)
            .ok_or_else(|| Error::Invariant(format!("no third diagonal point for {s}")))?;
        Ok(s.remove(self.u).insert(x))
    }

    /// The design over dense point indices 0..12, blocks sorted.
    pub fn to_design(&self) -> Design {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.members.iter().map(|&p| u16::from(self.dense_index(p).unwrap())).collect())
            .collect();
        Design::new(12, 6, blocks).expect("the generated blocks form a valid design")
    }
}
