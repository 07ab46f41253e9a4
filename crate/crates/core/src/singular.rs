//! Curves with one or two tangency or triple-point singularities, their
//! resolutions, classification by symbol, and the discrete derivatives
//! `f^(1)`, `f^(2)` of `F`.
//!
//! A singular curve is kept as a stable base code plus local edits. A tangency
//! edit inserts the two crossings of a finger move; a triple-point edit swaps
//! the letter pairs along the three sides of a triangular face.

use std::collections::{BTreeMap, BTreeSet};

use crate::codec::{Sign, SignedGaussCode};
use crate::curvemap::{CrossingId, CurveMap, FaceId, FaceTable, Side};
use crate::error::{Error, Result};
use crate::indices::region_labels_with_faces;
use crate::invariants::{f, XYVector};
use crate::symbols::Symbol;

/// A side of an edge: the edge is the one leaving visit `.0`.
pub type EdgeSide = (usize, Side);

/// Where to create a singular point on a stable curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SiteDescriptor {
    /// Push edge-side `p` through their common face until it touches `q`.
    /// `p == q` touches a later point of the same edge.
    Tangency { p: EdgeSide, q: EdgeSide },
    /// Collapse the triangular face beside `edge` onto `crossing`, its corner
    /// opposite that edge.
    Triple {
        crossing: CrossingId,
        edge: EdgeSide,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Resolution {
    Pos,
    Neg,
}

/// Antiparallel tangency inside a face lying left of both strands is `JA`.
const LEFT_FACE_IS_A: bool = false;

/// Hat count `h` of a triple point fixes `d(POS) − d(NEG)` on its triangle.
const TRIANGLE_JUMP: [i64; 4] = [-6, -2, 2, 6];

#[derive(Clone, Debug)]
enum Edit {
    Tangency {
        p_gap: usize,
        q_gap: usize,
        p_letters: [(u32, Sign); 2],
        q_letters: [(u32, Sign); 2],
    },
    Triple {
        gaps: [usize; 3],
        flip_is_pos: bool,
    },
}

impl Edit {
    fn gaps(&self) -> Vec<usize> {
        match self {
            Edit::Tangency { p_gap, q_gap, .. } => vec![*p_gap, *q_gap],
            Edit::Triple { gaps, .. } => gaps.to_vec(),
        }
    }

    fn active(&self, choice: Resolution) -> bool {
        match self {
            Edit::Tangency { .. } => choice == Resolution::Pos,
            Edit::Triple { flip_is_pos, .. } => *flip_is_pos == (choice == Resolution::Pos),
        }
    }
}

#[derive(Clone, Debug)]
struct Point {
    descriptor: SiteDescriptor,
    edit: Edit,
    symbol: Symbol,
}

/// A stable base curve with up to two singular points.
#[derive(Clone, Debug)]
pub struct SingularCurve {
    base: SignedGaussCode,
    points: Vec<Point>,
    /// Resolved maps indexed by the bitmask of applied edits.
    resolved: Vec<CurveMap>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidSite(msg.into())
}

/// Validated triangle of a triple site, in the frame of the given map.
fn triangle_gaps(
    map: &CurveMap,
    faces: &FaceTable,
    crossing: CrossingId,
    edge: EdgeSide,
) -> Result<[usize; 3]> {
    let len = 2 * map.n_crossings();
    if crossing >= map.n_crossings() || edge.0 >= len {
        return Err(invalid("triple site names a missing crossing or edge"));
    }
    let face = map.face_beside(faces, edge.0, edge.1);
    let boundary = map.face_boundary(faces, face);
    if boundary.len() != 3 {
        return Err(invalid(format!(
            "face beside edge {} is not a triangle",
            edge.0
        )));
    }
    let mut gaps: Vec<usize> = boundary.iter().map(|e| e.0).collect();
    gaps.sort_unstable();
    let mut positions = BTreeSet::new();
    let mut corners = BTreeSet::new();
    for &g in &gaps {
        for t in [g, (g + 1) % len] {
            positions.insert(t);
            corners.insert(map.crossing_at_visit(t));
        }
    }
    if positions.len() != 6 || corners.len() != 3 {
        return Err(invalid("triangle corners are not three distinct crossings"));
    }
    let on_edge = [
        map.crossing_at_visit(edge.0),
        map.crossing_at_visit((edge.0 + 1) % len),
    ];
    if !corners.contains(&crossing) || on_edge.contains(&crossing) {
        return Err(invalid(format!(
            "crossing {crossing} is not opposite edge {}",
            edge.0
        )));
    }
    Ok([gaps[0], gaps[1], gaps[2]])
}

fn check_tangency(map: &CurveMap, faces: &FaceTable, p: EdgeSide, q: EdgeSide) -> Result<FaceId> {
    let edges = map.n_edges();
    if p.0 >= edges || q.0 >= edges {
        return Err(invalid("tangency names a missing edge"));
    }
    let fp = map.face_beside(faces, p.0, p.1);
    let fq = map.face_beside(faces, q.0, q.1);
    if fp != fq {
        return Err(invalid(format!("edge-sides {p:?} and {q:?} share no face")));
    }
    if p.0 == q.0 && p.1 != q.1 {
        return Err(invalid("tangency across a single edge"));
    }
    Ok(fp)
}

/// Sum of crossing signs over crossings met twice by the visits
/// `start, start+1, …` (`count` of them, cyclically), each sign taken in the
/// order this stretch meets the two branches.
fn arc_index(map: &CurveMap, start: usize, count: usize) -> i64 {
    let len = 2 * map.n_crossings();
    if len == 0 || count == 0 {
        return 0;
    }
    let off = |t: usize| (t + len - start % len) % len;
    (0..map.n_crossings())
        .filter_map(|w| {
            let [s, t] = map.visits(w);
            if off(s) >= count || off(t) >= count {
                return None;
            }
            let sign = map.crossing_sign(w).value();
            Some(if off(s) < off(t) { sign } else { -sign })
        })
        .sum()
}

/// Position of each edge-side on a face boundary.
fn boundary_position(map: &CurveMap, faces: &FaceTable, face: FaceId, e: EdgeSide) -> usize {
    map.face_boundary(faces, face)
        .iter()
        .position(|&x| x == e)
        .expect("edge-side lies on the face")
}

fn interleaved(a: (usize, usize), b: (usize, usize), n: usize) -> bool {
    let between = |x: usize| {
        let span = (a.1 + n - a.0) % n;
        let off = (x + n - a.0) % n;
        off > 0 && off < span
    };
    a.0 != a.1 && between(b.0) != between(b.1)
}

impl SingularCurve {
    /// Builds the singular curve with the given singular points on `map`.
    pub fn new(map: &CurveMap, sites: &[SiteDescriptor]) -> Result<SingularCurve> {
        if sites.is_empty() || sites.len() > 2 {
            return Err(invalid("a singular curve has one or two singular points"));
        }
        let len = 2 * map.n_crossings();
        let faces = map.faces();
        let mut triangles = Vec::new();
        let mut tangency_faces = Vec::new();
        for site in sites {
            match *site {
                SiteDescriptor::Tangency { p, q } => {
                    let face = check_tangency(map, &faces, p, q)?;
                    tangency_faces.push((face, p, q));
                }
                SiteDescriptor::Triple { crossing, edge } => {
                    triangles.push(triangle_gaps(map, &faces, crossing, edge)?);
                }
            }
        }
        if sites.len() == 2 {
            Self::check_disjoint(map, &faces, sites, &triangles, &tangency_faces)?;
        }
        // Base point off every triangle side so that side swaps never wrap.
        let shift = (0..len.max(1))
            .find(|&r| {
                triangles
                    .iter()
                    .flatten()
                    .all(|&t| (t + len - r) % len != len - 1)
            })
            .expect("fewer triangle sides than visits");
        let base = map.to_code().rotated(shift);
        let local = |t: usize| if len == 0 { 0 } else { (t + len - shift) % len };
        let base_map = CurveMap::from_code(&base)?;
        let base_faces = base_map.faces();
        let mut next_label = base.word().iter().copied().max().unwrap_or(0) + 1;
        let mut points = Vec::new();
        let mut triangle_iter = triangles.iter();
        for site in sites {
            let (edit, symbol) = match *site {
                SiteDescriptor::Tangency { p, q } => {
                    let p = (local(p.0), p.1);
                    let q = (local(q.0), q.1);
                    let labels = (next_label, next_label + 1);
                    next_label += 2;
                    tangency_edit(&base_map, p, q, labels)
                }
                SiteDescriptor::Triple { .. } => {
                    let g = triangle_iter.next().unwrap();
                    let mut gaps = g.map(local);
                    gaps.sort_unstable();
                    triple_edit(&base, &base_map, &base_faces, gaps)?
                }
            };
            points.push(Point {
                descriptor: *site,
                edit,
                symbol,
            });
        }
        let mut curve = SingularCurve {
            base,
            points,
            resolved: Vec::new(),
        };
        for mask in 0..(1usize << curve.points.len()) {
            let code = curve.assemble(mask);
            let m = CurveMap::from_code(&code).map_err(|e| {
                Error::AssertionFailure(format!("resolution {mask} is not planar: {e}"))
            })?;
            curve.resolved.push(m);
        }
        Ok(curve)
    }

    fn check_disjoint(
        map: &CurveMap,
        faces: &FaceTable,
        sites: &[SiteDescriptor],
        triangles: &[[usize; 3]],
        tangency_faces: &[(FaceId, EdgeSide, EdgeSide)],
    ) -> Result<()> {
        let gaps_of =
            |s: &SiteDescriptor, tri: &mut std::slice::Iter<[usize; 3]>| -> BTreeSet<usize> {
                match s {
                    SiteDescriptor::Tangency { p, q } => [p.0, q.0].into(),
                    SiteDescriptor::Triple { .. } => tri.next().unwrap().iter().copied().collect(),
                }
            };
        let mut tri = triangles.iter();
        let a = gaps_of(&sites[0], &mut tri);
        let b = gaps_of(&sites[1], &mut tri);
        if !a.is_disjoint(&b) {
            return Err(invalid("singular points share an edge"));
        }
        let len = 2 * map.n_crossings();
        if triangles.len() == 2 {
            let corners = |g: &[usize; 3]| -> BTreeSet<CrossingId> {
                g.iter()
                    .flat_map(|&t| {
                        [
                            map.crossing_at_visit(t),
                            map.crossing_at_visit((t + 1) % len),
                        ]
                    })
                    .collect()
            };
            if !corners(&triangles[0]).is_disjoint(&corners(&triangles[1])) {
                return Err(invalid("triangles share a corner"));
            }
        }
        if let [(f1, p1, q1), (f2, p2, q2)] = tangency_faces {
            if f1 == f2 {
                let n = map.face_boundary(faces, *f1).len();
                let pos = |e| boundary_position(map, faces, *f1, e);
                let a = (pos(*p1), pos(*q1));
                let b = (pos(*p2), pos(*q2));
                if interleaved(a, b, n) || interleaved(b, a, n) {
                    return Err(invalid("tangency fingers cross inside their face"));
                }
            }
        }
        Ok(())
    }

    /// Base code with the edits in `mask` applied.
    fn assemble(&self, mask: usize) -> SignedGaussCode {
        let mut letters = self.base.letters();
        let mut inserts: BTreeMap<usize, Vec<(u32, Sign)>> = BTreeMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if mask >> i & 1 == 0 {
                continue;
            }
            match &p.edit {
                Edit::Triple { gaps, .. } => {
                    for &t in gaps {
                        letters.swap(t, t + 1);
                    }
                }
                Edit::Tangency {
                    p_gap,
                    q_gap,
                    p_letters,
                    q_letters,
                } => {
                    inserts.entry(*p_gap).or_default().extend(p_letters);
                    inserts.entry(*q_gap).or_default().extend(q_letters);
                }
            }
        }
        let mut out = Vec::new();
        if letters.is_empty() {
            out.extend(inserts.remove(&0).unwrap_or_default());
        }
        for (t, l) in letters.into_iter().enumerate() {
            out.push(l);
            out.extend(inserts.remove(&t).unwrap_or_default());
        }
        SignedGaussCode::from_letters(&out).expect("edits keep labels paired")
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn descriptors(&self) -> Vec<SiteDescriptor> {
        self.points.iter().map(|p| p.descriptor).collect()
    }

    /// The edge sets touched by each singular point, in the base frame.
    pub fn touched_edges(&self, at: usize) -> Vec<usize> {
        self.points[at].edit.gaps()
    }

    /// The stable curve obtained by resolving every singular point as chosen.
    pub fn resolve(&self, choices: &[Resolution]) -> CurveMap {
        assert_eq!(
            choices.len(),
            self.points.len(),
            "one choice per singular point"
        );
        let mask = self
            .points
            .iter()
            .zip(choices)
            .enumerate()
            .fold(
                0,
                |m, (i, (p, &c))| if p.edit.active(c) { m | 1 << i } else { m },
            );
        self.resolved[mask].clone()
    }

    pub fn classify(&self, at: usize) -> Symbol {
        self.points[at].symbol
    }

    /// `Σ_A (−1)^{|A|} F(c_A)` over sets `A` of points resolved negatively.
    pub fn derivative(&self) -> XYVector {
        let n = self.points.len();
        let mut total = XYVector::zero();
        for neg in 0..(1usize << n) {
            let choices: Vec<Resolution> = (0..n)
                .map(|i| {
                    if neg >> i & 1 == 1 {
                        Resolution::Neg
                    } else {
                        Resolution::Pos
                    }
                })
                .collect();
            let v = f(&self.resolve(&choices));
            if neg.count_ones() % 2 == 0 {
                total += &v;
            } else {
                total -= &v;
            }
        }
        total
    }

    pub fn f1(&self) -> XYVector {
        assert_eq!(self.points.len(), 1, "f1 needs exactly one singular point");
        self.derivative()
    }

    pub fn f2(&self) -> XYVector {
        assert_eq!(self.points.len(), 2, "f2 needs exactly two singular points");
        self.derivative()
    }
}

/// Finger move of edge-side `p` onto `q`, both in the local frame.
///
/// Along `q` the new crossings are met as `c1, c2`; along `p` in the same
/// order when the strands are parallel and reversed otherwise. The finger
/// crosses `q` away from the face first, then back.
fn tangency_edit(map: &CurveMap, p: EdgeSide, q: EdgeSide, labels: (u32, u32)) -> (Edit, Symbol) {
    let len = 2 * map.n_crossings();
    let parallel = p.1 != q.1;
    let s = if q.1 == Side::Left { 1 } else { -1 };
    let p_first = p.0 <= q.0;
    let (c1, c2) = labels;
    let p_order = if parallel { [c1, c2] } else { [c2, c1] };
    let p_dir = [-s, s];
    let sign_of = |c: u32| {
        let k = p_order.iter().position(|&x| x == c).unwrap();
        Sign::from_i64(if p_first { -p_dir[k] } else { p_dir[k] })
    };
    let p_letters = [
        (p_order[0], sign_of(p_order[0])),
        (p_order[1], sign_of(p_order[1])),
    ];
    let q_letters = [(c1, sign_of(c1)), (c2, sign_of(c2))];
    let forward = if len == 0 { 0 } else { (q.0 + len - p.0) % len };
    let a = arc_index(map, p.0 + 1, forward);
    let b = arc_index(map, q.0 + 1, len - forward);
    let symbol = if parallel {
        Symbol::j_plus(a, b)
    } else if (p.1 == Side::Left) == LEFT_FACE_IS_A {
        Symbol::j_a(a, b)
    } else {
        Symbol::j_b(a, b)
    };
    let edit = Edit::Tangency {
        p_gap: p.0,
        q_gap: q.0,
        p_letters,
        q_letters,
    };
    (edit, symbol)
}

/// Triangle face of `map` whose sides are exactly `gaps`.
fn triangle_face(map: &CurveMap, faces: &FaceTable, gaps: [usize; 3]) -> Option<FaceId> {
    [Side::Left, Side::Right].into_iter().find_map(|side| {
        let face = map.face_beside(faces, gaps[0], side);
        let mut b: Vec<usize> = map.face_boundary(faces, face).iter().map(|e| e.0).collect();
        b.sort_unstable();
        (b == gaps).then_some(face)
    })
}

/// Triple point on the triangle with sides `gaps` (sorted, none wrapping).
fn triple_edit(
    base: &SignedGaussCode,
    map: &CurveMap,
    faces: &FaceTable,
    gaps: [usize; 3],
) -> Result<(Edit, Symbol)> {
    let len = 2 * map.n_crossings();
    let word = base.word();
    let mut entries = [(0i64, false); 3];
    for i in 0..3 {
        let (t, u) = (gaps[i], gaps[(i + 1) % 3]);
        let shared = [word[t], word[t + 1]]
            .into_iter()
            .find(|l| [word[u], word[u + 1]].contains(l))
            .ok_or_else(|| invalid("triangle sides do not meet pairwise"))?;
        // Orientation of (this strand, next strand) at their shared corner.
        let turn = base.sign(shared).value() * if i < 2 { 1 } else { -1 };
        let count = (u + len - t - 2) % len;
        entries[i] = (arc_index(map, t + 2, count), turn < 0);
    }
    let symbol = Symbol::s(entries);
    let mut flipped = base.letters();
    for &t in &gaps {
        flipped.swap(t, t + 1);
    }
    let flipped = SignedGaussCode::from_letters(&flipped).expect("swaps keep labels paired");
    let flipped_map = CurveMap::from_code(&flipped)
        .map_err(|e| Error::AssertionFailure(format!("triangle flip is not planar: {e}")))?;
    let flipped_faces = flipped_map.faces();
    let before =
        triangle_face(map, faces, gaps).ok_or_else(|| invalid("no triangle on these sides"))?;
    let after = triangle_face(&flipped_map, &flipped_faces, gaps)
        .ok_or_else(|| Error::AssertionFailure("flip lost the triangle".into()))?;
    let d0 = region_labels_with_faces(map, faces, 0).d[before];
    let d1 = region_labels_with_faces(&flipped_map, &flipped_faces, 0).d[after];
    let target = TRIANGLE_JUMP[symbol.hats().unwrap()];
    let flip_is_pos = if d1 - d0 == target {
        true
    } else if d0 - d1 == target {
        false
    } else {
        return Err(Error::AssertionFailure(format!(
            "triangle labels {d0} -> {d1} do not match {symbol}"
        )));
    };
    Ok((Edit::Triple { gaps, flip_is_pos }, symbol))
}

/// One singular point on a stable curve.
pub fn make_singular(map: &CurveMap, site: SiteDescriptor) -> Result<SingularCurve> {
    SingularCurve::new(map, &[site])
}

/// Every tangency site: unordered pairs of edge-sides on a common face,
/// including each edge-side paired with itself.
pub fn tangency_sites(map: &CurveMap) -> Vec<SiteDescriptor> {
    let faces = map.faces();
    let mut out = Vec::new();
    for face in 0..faces.len() {
        let boundary = map.face_boundary(&faces, face);
        for (i, &p) in boundary.iter().enumerate() {
            for &q in &boundary[i..] {
                out.push(SiteDescriptor::Tangency { p, q });
            }
        }
    }
    out
}

/// Every triple site: one per triangular face with three distinct corners.
pub fn triple_sites(map: &CurveMap) -> Vec<SiteDescriptor> {
    let faces = map.faces();
    let len = 2 * map.n_crossings();
    let mut out = Vec::new();
    for face in 0..faces.len() {
        let boundary = map.face_boundary(&faces, face);
        if boundary.len() != 3 {
            continue;
        }
        let edge = boundary[0];
        let on_edge = [
            map.crossing_at_visit(edge.0),
            map.crossing_at_visit((edge.0 + 1) % len),
        ];
        let opposite = boundary[1..]
            .iter()
            .flat_map(|e| {
                [
                    map.crossing_at_visit(e.0),
                    map.crossing_at_visit((e.0 + 1) % len),
                ]
            })
            .find(|c| !on_edge.contains(c));
        if let Some(crossing) = opposite {
            let site = SiteDescriptor::Triple { crossing, edge };
            if triangle_gaps(map, &faces, crossing, edge).is_ok() {
                out.push(site);
            }
        }
    }
    out
}

pub fn all_sites(map: &CurveMap) -> Vec<SiteDescriptor> {
    let mut s = tangency_sites(map);
    s.extend(triple_sites(map));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_gauss;
    use crate::symbols::f1_of_symbol;

    fn map(text: &str) -> CurveMap {
        CurveMap::from_code(&parse_gauss(text).unwrap()).unwrap()
    }

    #[test]
    fn circle_tangencies_give_both_antiparallel_types() {
        let c = CurveMap::circle();
        let mut syms = Vec::new();
        for side in [Side::Left, Side::Right] {
            let s = make_singular(
                &c,
                SiteDescriptor::Tangency {
                    p: (0, side),
                    q: (0, side),
                },
            )
            .unwrap();
            assert_eq!(s.resolve(&[Resolution::Neg]).n_crossings(), 0);
            assert_eq!(s.resolve(&[Resolution::Pos]).n_crossings(), 2);
            assert_eq!(s.f1(), f1_of_symbol(&s.classify(0)), "{side:?}");
            syms.push(s.classify(0));
        }
        syms.sort();
        assert_eq!(syms, vec![Symbol::j_a(0, 0), Symbol::j_b(0, 0)]);
    }

    #[test]
    fn two_curl_curve_is_a_jump_of_type_a() {
        let c = CurveMap::circle();
        let two = map("gc: 1+ 1+ 2+ 2+");
        let found = [Side::Left, Side::Right].into_iter().any(|side| {
            let s = make_singular(
                &c,
                SiteDescriptor::Tangency {
                    p: (0, side),
                    q: (0, side),
                },
            )
            .unwrap();
            s.resolve(&[Resolution::Pos]).canonical_form() == two.canonical_form()
                && s.classify(0) == Symbol::j_a(0, 0)
        });
        assert!(found);
    }

    #[test]
    fn every_site_on_small_curves_matches_its_symbol() {
        for text in [
            "gc: 1+ 1+",
            "gc: 1+ 2+ 2+ 1+",
            "gc: 1+ 2- 3+ 1+ 2- 3+",
            "gc: 1- 2+ 3+ 3+ 2+ 1-",
        ] {
            let m = map(text);
            let sites = all_sites(&m);
            assert!(!sites.is_empty());
            for site in sites {
                let s = make_singular(&m, site).unwrap();
                let sym = s.classify(0);
                assert_eq!(s.f1(), f1_of_symbol(&sym), "{text} {site:?} {sym}");
                let p = s.resolve(&[Resolution::Pos]);
                let n = s.resolve(&[Resolution::Neg]);
                let extra = if sym.is_j() { 2 } else { 0 };
                assert_eq!(p.n_crossings(), n.n_crossings() + extra);
            }
        }
    }

    #[test]
    fn trefoil_triangle_is_a_triple_site() {
        let m = map("gc: 1+ 2- 3+ 1+ 2- 3+");
        assert!(!triple_sites(&m).is_empty());
    }

    #[test]
    fn triple_on_a_curve_without_triangles_is_rejected() {
        let m = map("gc: 1+ 1+ 2+ 2+");
        assert!(triple_sites(&m).is_empty());
        let err = make_singular(
            &m,
            SiteDescriptor::Triple {
                crossing: 0,
                edge: (1, Side::Left),
            },
        );
        assert!(matches!(err, Err(Error::InvalidSite(_))));
    }

    #[test]
    fn faces_must_match_for_tangency() {
        let c = CurveMap::circle();
        let err = make_singular(
            &c,
            SiteDescriptor::Tangency {
                p: (0, Side::Left),
                q: (0, Side::Right),
            },
        );
        assert!(matches!(err, Err(Error::InvalidSite(_))));
    }

    #[test]
    fn curl_against_opposite_strand_has_zero_indices() {
        let m = map("gc: 1+ 1+");
        let faces = m.faces();
        let outer = (0..faces.len())
            .find(|&f| m.face_boundary(&faces, f).len() == 2)
            .unwrap();
        let b = m.face_boundary(&faces, outer);
        let s = make_singular(&m, SiteDescriptor::Tangency { p: b[0], q: b[1] }).unwrap();
        let sym = s.classify(0);
        let (a, bb) = match sym {
            Symbol::JPlus(a, b) | Symbol::JA(a, b) | Symbol::JB(a, b) => (a, b),
            Symbol::S(_) => panic!("tangency classified as triple point"),
        };
        assert_eq!((a, bb), (0, 0), "{sym}");
    }

    #[test]
    fn disjoint_pairs_have_zero_second_derivative() {
        let m = map("gc: 1+ 2+ 2+ 1+");
        let sites = all_sites(&m);
        let mut checked = 0;
        for (i, &a) in sites.iter().enumerate() {
            for &b in &sites[i + 1..] {
                if let Ok(s) = SingularCurve::new(&m, &[a, b]) {
                    assert!(s.f2().is_zero(), "{a:?} {b:?}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 10);
    }
}
