//! Oriented combinatorial maps of spherical curve diagrams.
//!
//! Darts are laid out along the traversal: visit `t` owns the outgoing dart
//! `2t` and the incoming dart `2t + 1`. `rotation` is the counterclockwise
//! successor of a dart around its crossing and `pairing` joins the two ends of
//! each edge. The edge (or "gap") `t` runs from the outgoing dart of visit `t`
//! to the incoming dart of visit `t + 1`.

use std::collections::BTreeMap;

use crate::codec::{Sign, SignedGaussCode};
use crate::error::{Error, Result};

pub type Dart = usize;
pub type FaceId = usize;
pub type CrossingId = usize;

/// Side of a directed edge, relative to the direction of travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomotopyClass {
    Ev,
    Od,
}

impl HomotopyClass {
    pub fn as_str(self) -> &'static str {
        match self {
            HomotopyClass::Ev => "ev",
            HomotopyClass::Od => "od",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveMap {
    rotation: Vec<Dart>,
    pairing: Vec<Dart>,
    crossing_of: Vec<CrossingId>,
    crossing_visits: Vec<[usize; 2]>,
}

/// Orbits of the face permutation `rotation ∘ pairing`.
///
/// The face containing dart `x` lies to the right of the edge leaving the
/// crossing along `x`. Face ids are indices ordered by the lowest dart of each
/// orbit. The embedded circle has two dartless faces: 0 on the left of the
/// curve and 1 on the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTable {
    pub faces: Vec<Vec<Dart>>,
    pub face_of: Vec<FaceId>,
}

impl FaceTable {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

pub fn out_dart(t: usize) -> Dart {
    2 * t
}

pub fn in_dart(t: usize) -> Dart {
    2 * t + 1
}

pub fn visit_of(d: Dart) -> usize {
    d / 2
}

pub fn is_out(d: Dart) -> bool {
    d.is_multiple_of(2)
}

impl CurveMap {
    /// The embedded circle.
    pub fn circle() -> CurveMap {
        CurveMap {
            rotation: Vec::new(),
            pairing: Vec::new(),
            crossing_of: Vec::new(),
            crossing_visits: Vec::new(),
        }
    }

    /// Builds the map spelled by a signed code and rejects codes without a
    /// sphere embedding.
    pub fn from_code(code: &SignedGaussCode) -> Result<CurveMap> {
        let map = Self::from_code_unchecked(code);
        let genus = map.genus();
        if genus != 0 {
            return Err(Error::NotRealizable { genus });
        }
        Ok(map)
    }

    /// Builds the oriented map of a signed code on whatever surface it lives.
    ///
    /// Sign `+` orders the darts counterclockwise as (first out, second out,
    /// first in, second in); sign `-` is the reversed cyclic order.
    pub fn from_code_unchecked(code: &SignedGaussCode) -> CurveMap {
        let word = code.word();
        let len = word.len();
        let mut ids: BTreeMap<u32, CrossingId> = BTreeMap::new();
        let mut crossing_of_visit = Vec::with_capacity(len);
        for &l in word {
            let next = ids.len();
            crossing_of_visit.push(*ids.entry(l).or_insert(next));
        }
        let n = ids.len();
        let mut crossing_visits = vec![[usize::MAX; 2]; n];
        for (t, &v) in crossing_of_visit.iter().enumerate() {
            let slot = &mut crossing_visits[v];
            if slot[0] == usize::MAX {
                slot[0] = t;
            } else {
                slot[1] = t;
            }
        }
        let mut labels = vec![0u32; n];
        for (&l, &v) in &ids {
            labels[v] = l;
        }
        let mut rotation = vec![0; len * 2];
        for (v, &[t1, t2]) in crossing_visits.iter().enumerate() {
            let cycle = match code.sign(labels[v]) {
                Sign::Pos => [out_dart(t1), out_dart(t2), in_dart(t1), in_dart(t2)],
                Sign::Neg => [out_dart(t1), in_dart(t2), in_dart(t1), out_dart(t2)],
            };
            for i in 0..4 {
                rotation[cycle[i]] = cycle[(i + 1) % 4];
            }
        }
        let mut pairing = vec![0; len * 2];
        for t in 0..len {
            let next = (t + 1) % len;
            pairing[out_dart(t)] = in_dart(next);
            pairing[in_dart(next)] = out_dart(t);
        }
        let crossing_of = (0..len * 2)
            .map(|d| crossing_of_visit[visit_of(d)])
            .collect();
        CurveMap {
            rotation,
            pairing,
            crossing_of,
            crossing_visits,
        }
    }

    /// Accepts arbitrary rotation and pairing permutations, validates them, and
    /// relabels darts along the straight-through traversal starting at dart 0.
    pub fn from_permutations(rotation: &[Dart], pairing: &[Dart]) -> Result<CurveMap> {
        let m = rotation.len();
        if pairing.len() != m || !m.is_multiple_of(4) {
            return Err(Error::InvalidMap(
                "dart count must be a multiple of 4".into(),
            ));
        }
        if m == 0 {
            return Ok(CurveMap::circle());
        }
        let is_perm = |p: &[Dart]| {
            let mut seen = vec![false; m];
            p.iter()
                .all(|&x| x < m && !std::mem::replace(&mut seen[x], true))
        };
        if !is_perm(rotation) || !is_perm(pairing) {
            return Err(Error::InvalidMap("not a permutation".into()));
        }
        for d in 0..m {
            let mut x = d;
            for _ in 0..4 {
                x = rotation[x];
            }
            if x != d || rotation[d] == d || rotation[rotation[d]] == d {
                return Err(Error::InvalidMap(
                    "rotation cycles must have length 4".into(),
                ));
            }
            if pairing[d] == d || pairing[pairing[d]] != d {
                return Err(Error::InvalidMap(
                    "pairing must be a fixed-point-free involution".into(),
                ));
            }
        }
        let opposite = |d: Dart| rotation[rotation[d]];
        // Walk the traversal: out -> pairing -> in -> opposite -> out.
        let mut relabel = vec![usize::MAX; m];
        let mut out = 0;
        let mut t = 0;
        loop {
            let inn = opposite(out);
            if relabel[out] != usize::MAX || relabel[inn] != usize::MAX {
                return Err(Error::InvalidMap("traversal revisits a dart".into()));
            }
            relabel[out] = out_dart(t);
            relabel[inn] = in_dart(t);
            t += 1;
            out = opposite(pairing[out]);
            if out == 0 {
                break;
            }
        }
        if 2 * t != m {
            return Err(Error::InvalidMap(
                "straight-through traversal is not a single circuit".into(),
            ));
        }
        let mut new_rotation = vec![0; m];
        for d in 0..m {
            new_rotation[relabel[d]] = relabel[rotation[d]];
        }
        let mut new_pairing = vec![0; m];
        for d in 0..m {
            new_pairing[relabel[d]] = relabel[pairing[d]];
        }
        for t in 0..m / 2 {
            if new_pairing[out_dart(t)] != in_dart((t + 1) % (m / 2)) {
                return Err(Error::InvalidMap("pairing disagrees with traversal".into()));
            }
        }
        // Crossings numbered by first visit.
        let mut crossing_of = vec![usize::MAX; m];
        let mut crossing_visits: Vec<[usize; 2]> = Vec::new();
        for t in 0..m / 2 {
            let d = out_dart(t);
            if crossing_of[d] != usize::MAX {
                crossing_visits[crossing_of[d]][1] = t;
                continue;
            }
            let v = crossing_visits.len();
            crossing_visits.push([t, usize::MAX]);
            let mut x = d;
            for _ in 0..4 {
                crossing_of[x] = v;
                x = new_rotation[x];
            }
        }
        let map = CurveMap {
            rotation: new_rotation,
            pairing: new_pairing,
            crossing_of,
            crossing_visits,
        };
        Ok(map)
    }

    pub fn n_crossings(&self) -> usize {
        self.crossing_visits.len()
    }

    pub fn n_darts(&self) -> usize {
        self.rotation.len()
    }

    /// Number of edges; the embedded circle counts as one edge.
    pub fn n_edges(&self) -> usize {
        (2 * self.n_crossings()).max(1)
    }

    pub fn rotation(&self) -> &[Dart] {
        &self.rotation
    }

    pub fn pairing(&self) -> &[Dart] {
        &self.pairing
    }

    pub fn crossing_of(&self, d: Dart) -> CrossingId {
        self.crossing_of[d]
    }

    pub fn crossing_at_visit(&self, t: usize) -> CrossingId {
        self.crossing_of[out_dart(t)]
    }

    /// The two visit indices of a crossing, in traversal order.
    pub fn visits(&self, v: CrossingId) -> [usize; 2] {
        self.crossing_visits[v]
    }

    pub fn other_visit(&self, t: usize) -> usize {
        let [a, b] = self.crossing_visits[self.crossing_at_visit(t)];
        if a == t {
            b
        } else {
            a
        }
    }

    pub fn faces(&self) -> FaceTable {
        let m = self.n_darts();
        if m == 0 {
            return FaceTable {
                faces: vec![Vec::new(), Vec::new()],
                face_of: Vec::new(),
            };
        }
        let mut face_of = vec![usize::MAX; m];
        let mut faces = Vec::new();
        for start in 0..m {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut orbit = Vec::new();
            let mut x = start;
            loop {
                face_of[x] = id;
                orbit.push(x);
                x = self.rotation[self.pairing[x]];
                if x == start {
                    break;
                }
            }
            faces.push(orbit);
        }
        FaceTable { faces, face_of }
    }

    pub fn genus(&self) -> i64 {
        let n = self.n_crossings() as i64;
        if n == 0 {
            return 0;
        }
        let f = self.faces().len() as i64;
        (2 - n + 2 * n - f) / 2
    }

    pub fn regular_homotopy_class(&self) -> HomotopyClass {
        if self.n_crossings() % 2 == 1 {
            HomotopyClass::Ev
        } else {
            HomotopyClass::Od
        }
    }

    /// Face on the given side of edge `t`, following the curve direction.
    pub fn face_beside(&self, faces: &FaceTable, t: usize, side: Side) -> FaceId {
        let len = 2 * self.n_crossings();
        if len == 0 {
            return match side {
                Side::Left => 0,
                Side::Right => 1,
            };
        }
        match side {
            Side::Right => faces.face_of[out_dart(t)],
            Side::Left => faces.face_of[in_dart((t + 1) % len)],
        }
    }

    /// Edge-sides bounding a face, in face-boundary order.
    pub fn face_boundary(&self, faces: &FaceTable, f: FaceId) -> Vec<(usize, Side)> {
        if self.n_darts() == 0 {
            return vec![(0, if f == 0 { Side::Left } else { Side::Right })];
        }
        faces.faces[f]
            .iter()
            .map(|&d| {
                if is_out(d) {
                    (visit_of(d), Side::Right)
                } else {
                    let len = 2 * self.n_crossings();
                    ((visit_of(d) + len - 1) % len, Side::Left)
                }
            })
            .collect()
    }

    /// Orientation sign of a crossing: `+` iff the outgoing tangents of the first
    /// and second visits form a positive frame.
    pub fn crossing_sign(&self, v: CrossingId) -> Sign {
        let [t1, t2] = self.crossing_visits[v];
        if self.rotation[out_dart(t1)] == out_dart(t2) {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }

    /// Mirror image: every rotation cycle reversed.
    pub fn mirror(&self) -> CurveMap {
        let mut rotation = vec![0; self.rotation.len()];
        for (d, &e) in self.rotation.iter().enumerate() {
            rotation[e] = d;
        }
        CurveMap {
            rotation,
            ..self.clone()
        }
    }

    /// Signed code read from a starting visit in either direction, with labels
    /// numbered by first occurrence.
    pub fn code_from(&self, start: usize, reversed: bool) -> SignedGaussCode {
        let len = 2 * self.n_crossings();
        if len == 0 {
            return SignedGaussCode::empty();
        }
        let order: Vec<usize> = (0..len)
            .map(|i| {
                if reversed {
                    (start + len - i) % len
                } else {
                    (start + i) % len
                }
            })
            .collect();
        // Outgoing darts in reading direction.
        let reading_out = |t: usize| if reversed { in_dart(t) } else { out_dart(t) };
        let mut label: Vec<u32> = vec![0; self.n_crossings()];
        let mut first_out: Vec<Dart> = vec![0; self.n_crossings()];
        let mut next = 1;
        let mut letters = Vec::with_capacity(len);
        let mut signs: Vec<Option<Sign>> = vec![None; self.n_crossings()];
        for &t in &order {
            let v = self.crossing_at_visit(t);
            if label[v] == 0 {
                label[v] = next;
                next += 1;
                first_out[v] = reading_out(t);
            } else {
                let s = if self.rotation[first_out[v]] == reading_out(t) {
                    Sign::Pos
                } else {
                    Sign::Neg
                };
                signs[v] = Some(s);
            }
            letters.push(v);
        }
        let letters: Vec<(u32, Sign)> = letters
            .into_iter()
            .map(|v| (label[v], signs[v].expect("every crossing visited twice")))
            .collect();
        SignedGaussCode::from_letters(&letters).expect("map traversal yields a valid code")
    }

    pub fn to_code(&self) -> SignedGaussCode {
        self.code_from(0, false)
    }

    /// Lexicographically least code over all base points and both directions.
    pub fn canonical_form(&self) -> SignedGaussCode {
        self.min_code(true)
    }

    /// Least code over base points only (direction kept).
    pub fn rotation_canonical_form(&self) -> SignedGaussCode {
        self.min_code(false)
    }

    fn min_code(&self, both_directions: bool) -> SignedGaussCode {
        let len = 2 * self.n_crossings();
        if len == 0 {
            return SignedGaussCode::empty();
        }
        let dirs: &[bool] = if both_directions {
            &[false, true]
        } else {
            &[false]
        };
        let mut best: Option<(Vec<(u32, Sign)>, SignedGaussCode)> = None;
        for &rev in dirs {
            for start in 0..len {
                let c = self.code_from(start, rev);
                let key = c.letters();
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((key, c));
                }
            }
        }
        best.unwrap().1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_gauss;

    fn map(text: &str) -> CurveMap {
        CurveMap::from_code(&parse_gauss(text).unwrap()).unwrap()
    }

    pub(crate) fn gamma(k: usize) -> CurveMap {
        let mut s = String::from("gc:");
        for i in 1..=k {
            s.push_str(&format!(" {i}+ {i}+"));
        }
        map(&s)
    }

    #[test]
    fn circle_has_two_faces() {
        let m = map("gc:");
        assert_eq!(m.n_darts(), 0);
        assert_eq!(m.faces().len(), 2);
        assert_eq!(m.genus(), 0);
        assert_eq!(m.regular_homotopy_class(), HomotopyClass::Od);
    }

    #[test]
    fn gamma_family_face_counts() {
        for k in 1..=6 {
            let m = gamma(k);
            assert_eq!(m.n_darts(), 4 * k);
            assert_eq!(m.faces().len(), k + 2);
            assert_eq!(m.genus(), 0);
        }
        assert_eq!(gamma(1).regular_homotopy_class(), HomotopyClass::Ev);
        assert_eq!(gamma(4).regular_homotopy_class(), HomotopyClass::Od);
    }

    #[test]
    fn interleaved_two_crossing_word_has_no_sphere_embedding() {
        for text in [
            "gc: 1+ 2+ 1+ 2+",
            "gc: 1+ 2- 1+ 2-",
            "gc: 1- 2+ 1- 2+",
            "gc: 1- 2- 1- 2-",
        ] {
            let code = parse_gauss(text).unwrap();
            assert_eq!(CurveMap::from_code_unchecked(&code).genus(), 1, "{text}");
            assert_eq!(
                CurveMap::from_code(&code),
                Err(Error::NotRealizable { genus: 1 })
            );
        }
    }

    #[test]
    fn declared_signs_are_recovered() {
        let m = map("gc: 1+ 2- 3+ 1+ 2- 3+");
        let code = m.to_code();
        assert_eq!(code.to_text(), "gc: 1+ 2- 3+ 1+ 2- 3+");
        assert_eq!(m.crossing_sign(1), Sign::Neg);
    }

    #[test]
    fn mirror_negates_signs() {
        let m = gamma(3);
        let w = m.mirror();
        for v in 0..3 {
            assert_eq!(w.crossing_sign(v), m.crossing_sign(v).flip());
        }
        assert_eq!(w.genus(), 0);
    }

    #[test]
    fn both_curls_are_the_same_curve() {
        assert_eq!(
            map("gc: 1+ 1+").canonical_form(),
            map("gc: 1- 1-").canonical_form()
        );
    }

    #[test]
    fn canonical_form_ignores_relabeling_and_base_point() {
        let a = map("gc: 1+ 1+ 2+ 2+");
        let b = map("gc: 2+ 2+ 1+ 1+");
        assert_eq!(a.canonical_form(), b.canonical_form());
        let c = parse_gauss("gc: 1+ 1+ 2+ 2+").unwrap().rotated(3);
        assert_eq!(
            CurveMap::from_code(&c).unwrap().canonical_form(),
            a.canonical_form()
        );
    }

    #[test]
    fn permutation_constructor_round_trips() {
        let m = map("gc: 1+ 2- 3+ 1+ 2- 3+");
        // Scramble dart ids.
        let k = m.n_darts();
        let perm: Vec<usize> = (0..k).map(|d| (d * 7 + 3) % k).collect();
        let mut rot = vec![0; k];
        let mut pair = vec![0; k];
        for d in 0..k {
            rot[perm[d]] = perm[m.rotation()[d]];
            pair[perm[d]] = perm[m.pairing()[d]];
        }
        let back = CurveMap::from_permutations(&rot, &pair).unwrap();
        assert_eq!(back.canonical_form(), m.canonical_form());
        assert!(CurveMap::from_permutations(&[1, 0, 3, 2], &[1, 0, 3, 2]).is_err());
    }
}

#[cfg(test)]
mod rotation_tests {
    use super::*;
    use crate::codec::parse_gauss;

    #[test]
    fn rotated_code_spells_the_same_map() {
        let code = parse_gauss("gc: 1+ 2- 3+ 1+ 2- 3+").unwrap();
        let base = CurveMap::from_code(&code)
            .unwrap()
            .rotation_canonical_form();
        for k in 0..6 {
            let m = CurveMap::from_code(&code.rotated(k)).unwrap();
            assert_eq!(m.rotation_canonical_form(), base);
        }
    }
}
