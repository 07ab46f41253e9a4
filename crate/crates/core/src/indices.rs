//! Crossing signs, exterior-arc indices, region labels and the oriented smoothing.

use std::collections::BTreeMap;

use crate::codec::Sign;
use crate::curvemap::{in_dart, is_out, out_dart, CrossingId, CurveMap, FaceId, FaceTable};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingInfo {
    pub id: CrossingId,
    pub sign: Sign,
    pub ab: (i64, i64),
    /// Faces at the four corners, counterclockwise, starting with the corner
    /// between the two outgoing branches.
    pub adjacent_faces: [FaceId; 4],
}

/// `d` value of every face, indexed by face id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionLabels {
    pub d: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothRegion {
    pub faces: Vec<FaceId>,
    pub chi: i64,
    pub d: i64,
}

/// Result of smoothing every crossing along the orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmoothedArrangement {
    /// Each circle as the list of edges it runs through.
    pub circles: Vec<Vec<usize>>,
    pub regions: Vec<SmoothRegion>,
    pub region_of_face: Vec<usize>,
    pub circle_left: Vec<usize>,
    pub circle_right: Vec<usize>,
}

pub fn crossing_sign(map: &CurveMap, v: CrossingId) -> Sign {
    map.crossing_sign(v)
}

/// Sum of crossing signs over the crossings visited twice strictly inside the
/// cyclic visit range `(from, to)`, each sign taken in the order the range
/// visits the two branches.
pub(crate) fn loop_index(map: &CurveMap, from: usize, to: usize) -> i64 {
    let len = 2 * map.n_crossings();
    let off = |t: usize| (t + len - from) % len;
    let span = (to + len - from) % len;
    let inside = |t: usize| off(t) > 0 && off(t) < span;
    (0..map.n_crossings())
        .filter(|&w| {
            let [s, t] = map.visits(w);
            inside(s) && inside(t)
        })
        .map(|w| {
            let [s, t] = map.visits(w);
            let sign = map.crossing_sign(w).value();
            if off(s) < off(t) {
                sign
            } else {
                -sign
            }
        })
        .sum()
}

/// Indices `(a, b)` of the exterior arcs at a crossing.
///
/// The loop from the first departure to the second arrival is `c1` for a
/// positive crossing and `c2` for a negative one.
pub fn exterior_indices(map: &CurveMap, v: CrossingId) -> (i64, i64) {
    let [t1, t2] = map.visits(v);
    let first = loop_index(map, t1, t2);
    let second = loop_index(map, t2, t1);
    match map.crossing_sign(v) {
        Sign::Pos => (first, second),
        Sign::Neg => (second, first),
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

/// Dart `y` at crossing `v` such that `y` and its counterclockwise successor
/// are both outgoing (or both incoming when `outgoing` is false).
fn corner_dart(map: &CurveMap, v: CrossingId, outgoing: bool) -> usize {
    let [t1, _] = map.visits(v);
    let mut y = out_dart(t1);
    for _ in 0..4 {
        let z = map.rotation()[y];
        if is_out(y) == outgoing && is_out(z) == outgoing {
            return y;
        }
        y = z;
    }
    unreachable!("every crossing has a corner between its two outgoing darts")
}

pub fn smooth(map: &CurveMap) -> SmoothedArrangement {
    smooth_with_faces(map, &map.faces())
}

pub fn smooth_with_faces(map: &CurveMap, faces: &FaceTable) -> SmoothedArrangement {
    let n = map.n_crossings();
    if n == 0 {
        return SmoothedArrangement {
            circles: vec![vec![0]],
            regions: vec![
                SmoothRegion {
                    faces: vec![0],
                    chi: 1,
                    d: 1,
                },
                SmoothRegion {
                    faces: vec![1],
                    chi: 1,
                    d: -1,
                },
            ],
            region_of_face: vec![0, 1],
            circle_left: vec![0],
            circle_right: vec![1],
        };
    }
    let len = 2 * n;
    let rot = map.rotation();
    let mut uf = UnionFind::new(faces.len());
    for v in 0..n {
        let y_out = corner_dart(map, v, true);
        let y_in = corner_dart(map, v, false);
        uf.union(faces.face_of[rot[y_out]], faces.face_of[rot[y_in]]);
    }
    let mut root_to_region: BTreeMap<usize, usize> = BTreeMap::new();
    let mut region_of_face = vec![0; faces.len()];
    for f in 0..faces.len() {
        let r = uf.find(f);
        let next = root_to_region.len();
        region_of_face[f] = *root_to_region.entry(r).or_insert(next);
    }
    let n_regions = root_to_region.len();

    // Smoothing sends the arrival at a crossing onto the departure of the other visit.
    let mut circle_of_gap = vec![usize::MAX; len];
    let mut circles = Vec::new();
    for start in 0..len {
        if circle_of_gap[start] != usize::MAX {
            continue;
        }
        let id = circles.len();
        let mut cyc = Vec::new();
        let mut t = start;
        while circle_of_gap[t] == usize::MAX {
            circle_of_gap[t] = id;
            cyc.push(t);
            t = map.other_visit((t + 1) % len);
        }
        circles.push(cyc);
    }
    let side_region = |t: usize, right: bool| {
        let d = if right {
            out_dart(t)
        } else {
            in_dart((t + 1) % len)
        };
        region_of_face[faces.face_of[d]]
    };
    let circle_left: Vec<usize> = circles.iter().map(|c| side_region(c[0], false)).collect();
    let circle_right: Vec<usize> = circles.iter().map(|c| side_region(c[0], true)).collect();
    for (i, c) in circles.iter().enumerate() {
        for &t in c {
            debug_assert_eq!(side_region(t, false), circle_left[i]);
            debug_assert_eq!(side_region(t, true), circle_right[i]);
        }
    }

    // Regions and circles form a tree; a region is on the left of a circle iff it
    // is reached from the circle's left region without crossing that circle.
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_regions];
    for i in 0..circles.len() {
        adjacency[circle_left[i]].push((circle_right[i], i));
        adjacency[circle_right[i]].push((circle_left[i], i));
    }
    let mut d = vec![0i64; n_regions];
    for c in 0..circles.len() {
        let mut on_left = vec![false; n_regions];
        let mut stack = vec![circle_left[c]];
        on_left[circle_left[c]] = true;
        while let Some(r) = stack.pop() {
            for &(s, via) in &adjacency[r] {
                if via != c && !on_left[s] {
                    on_left[s] = true;
                    stack.push(s);
                }
            }
        }
        // A circle winds +1 around the puncture when the puncture is on its right.
        for (r, &left) in on_left.iter().enumerate() {
            d[r] += if left { 1 } else { -1 };
        }
    }
    let mut regions: Vec<SmoothRegion> = (0..n_regions)
        .map(|r| SmoothRegion {
            faces: Vec::new(),
            chi: 2 - adjacency[r].len() as i64,
            d: d[r],
        })
        .collect();
    for (f, &r) in region_of_face.iter().enumerate() {
        regions[r].faces.push(f);
    }
    SmoothedArrangement {
        circles,
        regions,
        region_of_face,
        circle_left,
        circle_right,
    }
}

/// Labels of all faces, anchored at face 0.
pub fn region_labels(map: &CurveMap) -> RegionLabels {
    let faces = map.faces();
    region_labels_with_faces(map, &faces, 0)
}

/// Computes `d` exactly at `anchor` from the smoothing, then propagates across
/// edges: the face right of an edge has `d` two less than the face on its left.
pub fn region_labels_with_faces(map: &CurveMap, faces: &FaceTable, anchor: FaceId) -> RegionLabels {
    let smoothing = smooth_with_faces(map, faces);
    let anchor_d = smoothing.regions[smoothing.region_of_face[anchor]].d;
    let n_faces = faces.len();
    let len = 2 * map.n_crossings();
    if len == 0 {
        let mut d = vec![1, -1];
        d[anchor] = anchor_d;
        d[1 - anchor] = -anchor_d;
        return RegionLabels { d };
    }
    let mut adjacency: Vec<Vec<(FaceId, i64)>> = vec![Vec::new(); n_faces];
    for t in 0..len {
        let right = faces.face_of[out_dart(t)];
        let left = faces.face_of[in_dart((t + 1) % len)];
        adjacency[left].push((right, -2));
        adjacency[right].push((left, 2));
    }
    let mut d: Vec<Option<i64>> = vec![None; n_faces];
    d[anchor] = Some(anchor_d);
    let mut queue = std::collections::VecDeque::from([anchor]);
    while let Some(f) = queue.pop_front() {
        let df = d[f].unwrap();
        for &(g, delta) in &adjacency[f] {
            match d[g] {
                None => {
                    d[g] = Some(df + delta);
                    queue.push_back(g);
                }
                Some(dg) => debug_assert_eq!(dg, df + delta, "inconsistent region labels"),
            }
        }
    }
    RegionLabels {
        d: d.into_iter()
            .map(|x| x.expect("face graph is connected"))
            .collect(),
    }
}

pub fn crossing_infos(map: &CurveMap, faces: &FaceTable) -> Vec<CrossingInfo> {
    let rot = map.rotation();
    (0..map.n_crossings())
        .map(|v| {
            let mut y = corner_dart(map, v, true);
            let mut adjacent_faces = [0; 4];
            for slot in adjacent_faces.iter_mut() {
                y = rot[y];
                *slot = faces.face_of[y];
            }
            CrossingInfo {
                id: v,
                sign: map.crossing_sign(v),
                ab: exterior_indices(map, v),
                adjacent_faces,
            }
        })
        .collect()
}

/// The `d` labels around each crossing type, read counterclockwise from the
/// corner between the outgoing branches. Fails if one type shows two patterns.
pub fn figure1b_table<'a, I>(corpus: I) -> Result<BTreeMap<(i64, i64), [i64; 4]>>
where
    I: IntoIterator<Item = &'a CurveMap>,
{
    let mut table: BTreeMap<(i64, i64), [i64; 4]> = BTreeMap::new();
    for map in corpus {
        let faces = map.faces();
        let labels = region_labels_with_faces(map, &faces, 0);
        for info in crossing_infos(map, &faces) {
            let tuple = info.adjacent_faces.map(|f| labels.d[f]);
            match table.get(&info.ab) {
                Some(&prev) if prev != tuple => {
                    return Err(Error::InconsistentTable {
                        a: info.ab.0,
                        b: info.ab.1,
                        first: prev,
                        second: tuple,
                    })
                }
                Some(_) => {}
                None => {
                    table.insert(info.ab, tuple);
                }
            }
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codec::parse_gauss;

    fn map(text: &str) -> CurveMap {
        CurveMap::from_code(&parse_gauss(text).unwrap()).unwrap()
    }

    fn gamma(k: usize) -> CurveMap {
        let mut s = String::from("gc:");
        for i in 1..=k {
            s.push_str(&format!(" {i}+ {i}+"));
        }
        map(&s)
    }

    fn sorted(mut v: Vec<i64>) -> Vec<i64> {
        v.sort();
        v
    }

    #[test]
    fn gamma_crossings_have_type_zero_k_minus_one() {
        for k in 1..=7 {
            let m = gamma(k);
            for v in 0..k {
                assert_eq!(m.crossing_sign(v), Sign::Pos);
                assert_eq!(exterior_indices(&m, v), (0, k as i64 - 1), "k={k}");
            }
        }
    }

    #[test]
    fn circle_and_figure_eight_labels() {
        assert_eq!(sorted(region_labels(&map("gc:")).d), vec![-1, 1]);
        assert_eq!(sorted(region_labels(&map("gc: 1+ 1+")).d), vec![-2, 0, 2]);
        assert_eq!(sorted(region_labels(&map("gc: 1- 1-")).d), vec![-2, 0, 2]);
    }

    #[test]
    fn gamma_labels_match_closed_form() {
        for k in 2..=7i64 {
            let d = sorted(region_labels(&gamma(k as usize)).d);
            let mut expected = vec![k - 3; k as usize];
            expected.push(k - 1);
            expected.push(k + 1);
            assert_eq!(d, sorted(expected), "k={k}");
        }
    }

    #[test]
    fn smoothing_of_small_curves() {
        let s = smooth(&map("gc:"));
        assert_eq!(s.circles.len(), 1);
        assert_eq!(
            s.regions.iter().map(|r| r.chi).collect::<Vec<_>>(),
            vec![1, 1]
        );

        let s = smooth(&map("gc: 1+ 1+"));
        assert_eq!(s.circles.len(), 2);
        assert_eq!(
            sorted(s.regions.iter().map(|r| r.chi).collect()),
            vec![0, 1, 1]
        );
        assert_eq!(s.regions.iter().map(|r| r.chi).sum::<i64>(), 2);
    }

    #[test]
    fn anchor_choice_does_not_matter() {
        let m = map("gc: 1+ 2- 3+ 1+ 2- 3+");
        let faces = m.faces();
        let base = region_labels_with_faces(&m, &faces, 0);
        for a in 1..faces.len() {
            assert_eq!(region_labels_with_faces(&m, &faces, a), base);
        }
    }

    #[test]
    fn mirror_negates_labels_and_swaps_indices() {
        let m = map("gc: 1+ 2+ 2+ 3- 3- 1+");
        let w = m.mirror();
        let (fm, fw) = (m.faces(), w.faces());
        let (lm, lw) = (
            region_labels_with_faces(&m, &fm, 0),
            region_labels_with_faces(&w, &fw, 0),
        );
        assert_eq!(
            sorted(lm.d.iter().map(|x| -x).collect()),
            sorted(lw.d.clone())
        );
        for v in 0..m.n_crossings() {
            let (a, b) = exterior_indices(&m, v);
            assert_eq!(exterior_indices(&w, v), (-b, -a));
        }
    }

    #[test]
    fn figure_eight_table_entry() {
        let t = figure1b_table([&map("gc: 1+ 1+")]).unwrap();
        assert_eq!(sorted(t[&(0, 0)].to_vec()), vec![-2, 0, 0, 2]);
    }
}
