//! The X ⊕ Y invariant `F`, the functionals evaluated on it, and Arnold's
//! three invariants.

pub mod functionals;
pub mod xy;

pub use functionals::{apply, Functional, HForm, Named, ETA, PSI};
pub use xy::{phi, z_basis, XYVector};

use num_traits::Zero;

use crate::codec::{format_q, ReportJson};
use crate::curvemap::{CurveMap, FaceTable, HomotopyClass};
use crate::error::{Error, Result};
use crate::indices::{crossing_infos, region_labels_with_faces, smooth_with_faces};
use crate::rational::{q, qf, Q};

pub fn f_x_with_faces(map: &CurveMap, faces: &FaceTable) -> XYVector {
    let mut v = XYVector::zero();
    for info in crossing_infos(map, faces) {
        v.add_x(info.ab.0, info.ab.1, q(1));
    }
    v
}

pub fn f_y_with_faces(map: &CurveMap, faces: &FaceTable) -> XYVector {
    let mut v = XYVector::zero();
    for d in region_labels_with_faces(map, faces, 0).d {
        v.add_y(d, q(1));
    }
    v
}

/// `f^X`: one `X_{a,b}` per crossing.
pub fn f_x(map: &CurveMap) -> XYVector {
    f_x_with_faces(map, &map.faces())
}

/// `f^Y`: one `Y_d` per complementary region.
pub fn f_y(map: &CurveMap) -> XYVector {
    f_y_with_faces(map, &map.faces())
}

pub fn f(map: &CurveMap) -> XYVector {
    let faces = map.faces();
    f_x_with_faces(map, &faces) + f_y_with_faces(map, &faces)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arnold {
    JPlus,
    JMinus,
    St,
}

/// Arnold invariant evaluated on an already computed `F`, with normalization
/// constants `k1`, `k2` on the two regular homotopy classes.
pub fn arnold_of(fv: &XYVector, which: Arnold, k1: Q, k2: Q) -> Q {
    let main = match which {
        Arnold::JPlus => Named::PhiPlus.apply(fv) * qf(1, 4),
        Arnold::JMinus => Named::PhiMinus.apply(fv) * qf(1, 4),
        Arnold::St => Named::PhiSt.apply(fv) * qf(1, 24),
    };
    main + k1 * Named::Psi(1).apply(fv) + k2 * Named::Psi(2).apply(fv)
}

pub fn arnold(map: &CurveMap, which: Arnold, k1: Q, k2: Q) -> Q {
    arnold_of(&f(map), which, k1, k2)
}

/// Both sides of `H∘F(c) = Σ_E χ(E) h(d(E))` over the regions of the smoothing.
pub fn h_form(map: &CurveMap, h: impl Fn(i64) -> Q) -> (Q, Q) {
    let faces = map.faces();
    let fv = f_x_with_faces(map, &faces) + f_y_with_faces(map, &faces);
    let lhs = HForm(&h).apply(&fv);
    let rhs = smooth_with_faces(map, &faces)
        .regions
        .iter()
        .fold(Q::zero(), |acc, r| acc + q(r.chi) * h(r.d));
    (lhs, rhs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub crossings: usize,
    pub class: HomotopyClass,
    pub f: XYVector,
    pub psi: [Q; 6],
    pub eta: [Q; 6],
    pub j_plus: Q,
    pub j_minus: Q,
    pub st: Q,
}

impl InvariantReport {
    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            code: None,
            crossings: self.crossings,
            class: self.class.as_str().to_string(),
            x: self
                .f
                .x_part()
                .iter()
                .map(|(&(a, b), c)| (a, b, format_q(c)))
                .collect(),
            y: self
                .f
                .y_part()
                .iter()
                .map(|(&d, c)| (d, format_q(c)))
                .collect(),
            psi: self.psi.iter().map(format_q).collect(),
            eta: self.eta.iter().map(format_q).collect(),
            j_plus: format_q(&self.j_plus),
            j_minus: format_q(&self.j_minus),
            st: format_q(&self.st),
        }
    }
}

/// Evaluates everything on `F(map)` and checks the identities every stable
/// curve satisfies; a violation means an implementation bug.
pub fn universal_report(map: &CurveMap, k1: Q, k2: Q) -> Result<InvariantReport> {
    let fv = f(map);
    let psi = PSI.map(|p| p.apply(&fv));
    let eta = ETA.map(|e| e.apply(&fv));
    let class = map.regular_homotopy_class();
    for (i, v) in psi.iter().enumerate().skip(2) {
        if !v.is_zero() {
            return Err(Error::AssertionFailure(format!(
                "psi{} = {v} on {}",
                i + 1,
                map.to_code()
            )));
        }
    }
    let expected = match class {
        HomotopyClass::Od => (q(2), q(0)),
        HomotopyClass::Ev => (q(0), q(2)),
    };
    if (psi[0], psi[1]) != expected {
        return Err(Error::AssertionFailure(format!(
            "(psi1, psi2) = ({}, {}) on {} curve {}",
            psi[0],
            psi[1],
            class.as_str(),
            map.to_code()
        )));
    }
    Ok(InvariantReport {
        crossings: map.n_crossings(),
        class,
        j_plus: arnold_of(&fv, Arnold::JPlus, k1, k2),
        j_minus: arnold_of(&fv, Arnold::JMinus, k1, k2),
        st: arnold_of(&fv, Arnold::St, k1, k2),
        f: fv,
        psi,
        eta,
    })
}
