//! Singularity symbols, their `F^(1)` values, the relations between them, and
//! reduction to the basis `{J+_{a,b}} ∪ {JA_{a,b}} ∪ {S_{â,0,0}}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::curvemap::HomotopyClass;
use crate::error::{Error, Result};
use crate::invariants::XYVector;
use crate::rational::{q, Q};

/// One exterior-arc entry of a triple-point symbol: index and hat flag.
pub type SEntry = (i64, bool);

/// Equivalence class label of a once-singular curve.
///
/// J indices are unordered and stored ascending. S entries are a cyclic
/// triple stored in its lexicographically least rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    JPlus(i64, i64),
    JA(i64, i64),
    JB(i64, i64),
    S([SEntry; 3]),
}

fn sorted(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn rotate(e: [SEntry; 3], k: usize) -> [SEntry; 3] {
    [e[k % 3], e[(k + 1) % 3], e[(k + 2) % 3]]
}

impl Symbol {
    pub fn j_plus(a: i64, b: i64) -> Symbol {
        let (a, b) = sorted(a, b);
        Symbol::JPlus(a, b)
    }

    pub fn j_a(a: i64, b: i64) -> Symbol {
        let (a, b) = sorted(a, b);
        Symbol::JA(a, b)
    }

    pub fn j_b(a: i64, b: i64) -> Symbol {
        let (a, b) = sorted(a, b);
        Symbol::JB(a, b)
    }

    /// Triple-point symbol from entries in cyclic order along the curve.
    pub fn s(entries: [SEntry; 3]) -> Symbol {
        let best = (0..3).map(|k| rotate(entries, k)).min().unwrap();
        Symbol::S(best)
    }

    /// Shorthand: `s3((a, true), (b, false), (c, false))` is `S_{â,b,c}`.
    pub fn s3(a: SEntry, b: SEntry, c: SEntry) -> Symbol {
        Symbol::s([a, b, c])
    }

    pub fn is_j(&self) -> bool {
        !matches!(self, Symbol::S(_))
    }

    pub fn hats(&self) -> Option<usize> {
        match self {
            Symbol::S(e) => Some(e.iter().filter(|x| x.1).count()),
            _ => None,
        }
    }

    /// The S entries rotated so that one hat comes first, two hats leave the
    /// unhatted entry last; zero or three hats keep the stored rotation.
    pub fn aligned(&self) -> Option<[SEntry; 3]> {
        let Symbol::S(e) = *self else { return None };
        let rot = match self.hats().unwrap() {
            1 => (0..3).find(|&k| e[k].1).unwrap(),
            2 => (0..3).find(|&k| !e[(k + 2) % 3].1).unwrap(),
            _ => 0,
        };
        Some(rotate(e, rot))
    }

    /// Index sum of an S symbol.
    pub fn index_sum(&self) -> Option<i64> {
        match self {
            Symbol::S(e) => Some(e.iter().map(|x| x.0).sum()),
            _ => None,
        }
    }

    /// Reflection: indices negated, JA and JB swapped, every hat flipped.
    pub fn mirrored(&self) -> Symbol {
        match *self {
            Symbol::JPlus(a, b) => Symbol::j_plus(-a, -b),
            Symbol::JA(a, b) => Symbol::j_b(-a, -b),
            Symbol::JB(a, b) => Symbol::j_a(-a, -b),
            Symbol::S(e) => Symbol::s(e.map(|(i, h)| (-i, !h))),
        }
    }

    pub fn is_basis(&self) -> bool {
        match *self {
            Symbol::JPlus(..) | Symbol::JA(..) => true,
            Symbol::JB(..) => false,
            Symbol::S(_) => {
                self.hats() == Some(1) && {
                    let e = self.aligned().unwrap();
                    e[1].0 == 0 && e[2].0 == 0
                }
            }
        }
    }

    /// `S_{â,0,0}`.
    pub fn s_basis(a: i64) -> Symbol {
        Symbol::s([(a, true), (0, false), (0, false)])
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::JPlus(a, b) => write!(f, "J+[{a},{b}]"),
            Symbol::JA(a, b) => write!(f, "JA[{a},{b}]"),
            Symbol::JB(a, b) => write!(f, "JB[{a},{b}]"),
            Symbol::S(e) => {
                let parts: Vec<String> = e
                    .iter()
                    .map(|&(i, h)| if h { format!("{i}^") } else { i.to_string() })
                    .collect();
                write!(f, "S[{}]", parts.join(","))
            }
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(text: &str) -> Result<Symbol> {
        let bad = || Error::BadSymbol(text.to_string());
        let t = text.trim();
        let open = t.find('[').ok_or_else(bad)?;
        let body = t[open + 1..].strip_suffix(']').ok_or_else(bad)?;
        let head = &t[..open];
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        let int = |s: &str| s.parse::<i64>().map_err(|_| bad());
        match head {
            "J+" | "JA" | "JB" => {
                let [a, b] = fields[..] else {
                    return Err(bad());
                };
                let (a, b) = (int(a)?, int(b)?);
                Ok(match head {
                    "J+" => Symbol::j_plus(a, b),
                    "JA" => Symbol::j_a(a, b),
                    _ => Symbol::j_b(a, b),
                })
            }
            "S" => {
                let [a, b, c] = fields[..] else {
                    return Err(bad());
                };
                let entry = |s: &str| -> Result<SEntry> {
                    match s.strip_suffix('^') {
                        Some(i) => Ok((int(i.trim())?, true)),
                        None => Ok((int(s)?, false)),
                    }
                };
                Ok(Symbol::s([entry(a)?, entry(b)?, entry(c)?]))
            }
            _ => Err(bad()),
        }
    }
}

fn vec_of(terms: &[((i64, i64), i64)], ys: &[(i64, i64)]) -> XYVector {
    let mut v = XYVector::zero();
    for &((a, b), c) in terms {
        v.add_x(a, b, q(c));
    }
    for &(d, c) in ys {
        v.add_y(d, q(c));
    }
    v
}

/// `F^(1)` of a symbol.
pub fn f1_of_symbol(s: &Symbol) -> XYVector {
    match *s {
        Symbol::JPlus(a, b) => vec_of(&[((a, b), 1), ((b, a), 1)], &[(a + b, 2)]),
        Symbol::JA(a, b) => vec_of(
            &[((a, b + 1), 1), ((b, a + 1), 1)],
            &[(a + b - 1, 1), (a + b + 3, 1)],
        ),
        Symbol::JB(a, b) => vec_of(
            &[((a - 1, b), 1), ((b - 1, a), 1)],
            &[(a + b - 3, 1), (a + b + 1, 1)],
        ),
        Symbol::S(_) => {
            let e = s.aligned().unwrap();
            let (a, b, c) = (e[0].0, e[1].0, e[2].0);
            let k = a + b + c;
            match s.hats().unwrap() {
                0 => vec_of(
                    &[
                        ((a, b + c + 2), -1),
                        ((b, c + a + 2), -1),
                        ((c, a + b + 2), -1),
                        ((a, b + c), 1),
                        ((b, c + a), 1),
                        ((c, a + b), 1),
                    ],
                    &[(k + 4, -1), (k - 2, 1)],
                ),
                1 => vec_of(
                    &[
                        ((c, a + b + 1), -1),
                        ((b + c - 1, a), -1),
                        ((b, c + a + 1), -1),
                        ((b + c + 1, a), 1),
                        ((b, c + a - 1), 1),
                        ((c, a + b - 1), 1),
                    ],
                    &[(k + 1, -1), (k - 1, 1)],
                ),
                2 => vec_of(
                    &[
                        ((c, a + b + 1), -1),
                        ((c + a - 1, b), -1),
                        ((b + c - 1, a), -1),
                        ((b + c + 1, a), 1),
                        ((c, a + b - 1), 1),
                        ((c + a + 1, b), 1),
                    ],
                    &[(k - 1, -1), (k + 1, 1)],
                ),
                _ => vec_of(
                    &[
                        ((b + c - 2, a), -1),
                        ((c + a - 2, b), -1),
                        ((a + b - 2, c), -1),
                        ((a + b, c), 1),
                        ((b + c, a), 1),
                        ((c + a, b), 1),
                    ],
                    &[(k - 4, -1), (k + 2, 1)],
                ),
            }
        }
    }
}

/// Regular homotopy class of the curves carrying a symbol.
pub fn symbol_class(s: &Symbol) -> HomotopyClass {
    let even = |n: i64| n.rem_euclid(2) == 0;
    let ev = match *s {
        Symbol::JPlus(a, b) => even(a + b),
        Symbol::JA(a, b) | Symbol::JB(a, b) => !even(a + b),
        Symbol::S(_) => {
            let k = s.index_sum().unwrap();
            match s.hats().unwrap() {
                0 | 3 => even(k),
                _ => !even(k),
            }
        }
    };
    if ev {
        HomotopyClass::Ev
    } else {
        HomotopyClass::Od
    }
}

/// Sparse rational coordinates over basis symbols.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BasisCoords(pub BTreeMap<Symbol, Q>);

impl BasisCoords {
    fn add(&mut self, s: Symbol, c: Q) {
        let e = self.0.entry(s).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&s);
        }
    }

    fn add_all(&mut self, other: &BasisCoords) {
        for (&s, &c) in &other.0 {
            self.add(s, c);
        }
    }

    /// Evaluates `F^(1)` on the linear combination.
    pub fn f1(&self) -> XYVector {
        let mut v = XYVector::zero();
        for (s, &c) in &self.0 {
            v += &f1_of_symbol(s).scaled(c);
        }
        v
    }
}

/// J-combination `Σ c·sym` used as a relation correction.
fn corr(terms: &[(Symbol, i64)]) -> BasisCoords {
    let mut b = BasisCoords::default();
    for &(s, c) in terms {
        b.add(s, q(c));
    }
    b
}

fn jp(a: i64, b: i64) -> Symbol {
    Symbol::j_plus(a, b)
}

fn ja(a: i64, b: i64) -> Symbol {
    Symbol::j_a(a, b)
}

/// One-hat symbol `S_{x̂,y,z}` being reduced, together with the J terms
/// accumulated so far: original = current + acc.
struct OneHat {
    x: i64,
    y: i64,
    z: i64,
    acc: BasisCoords,
}

impl OneHat {
    /// `S_{x̂,y,z} = S_{ŷ,z,x} + c`, through the two-hat symbol `S_{x̂,ŷ,z}`.
    fn rotate(&mut self) {
        let (x, y, z) = (self.x, self.y, self.z);
        self.acc.add_all(&corr(&[
            (jp(z + x - 1, y), 1),
            (jp(z + x + 1, y), -1),
            (jp(y + z - 1, x), -1),
            (jp(y + z + 1, x), 1),
        ]));
        (self.x, self.y, self.z) = (y, z, x);
    }

    /// `S_{x̂,y,z} = S_{\widehat{z+1},x-1,y} + c`, via the unhatted
    /// symbol `S_{z,x-1,y}`.
    fn transfer(&mut self) {
        let (x, y, z) = (self.x, self.y, self.z);
        self.acc.add_all(&corr(&[
            (ja(x + y - 2, z), 1),
            (ja(x + y, z), -1),
            (ja(y + z - 1, x - 1), -1),
            (ja(y + z + 1, x - 1), 1),
        ]));
        (self.x, self.y, self.z) = (z + 1, x - 1, y);
    }

    /// Inverse of `transfer`.
    fn untransfer(&mut self) {
        // Current is S_{x̂,y,z} = transfer-image of S_{\widehat{y+1}, z, x-1}.
        let (px, py, pz) = (self.y + 1, self.z, self.x - 1);
        let mut prev = OneHat {
            x: px,
            y: py,
            z: pz,
            acc: BasisCoords::default(),
        };
        prev.transfer();
        for (s, c) in prev.acc.0 {
            self.acc.add(s, -c);
        }
        (self.x, self.y, self.z) = (px, py, pz);
    }

    fn unrotate(&mut self) {
        let (px, py, pz) = (self.z, self.x, self.y);
        let mut prev = OneHat {
            x: px,
            y: py,
            z: pz,
            acc: BasisCoords::default(),
        };
        prev.rotate();
        for (s, c) in prev.acc.0 {
            self.acc.add(s, -c);
        }
        (self.x, self.y, self.z) = (px, py, pz);
    }

    /// Moves one unit between the hatted entry and the last entry:
    /// `S_{x̂,y,z} -> S_{\widehat{x-1},y,z+1}`.
    fn shift_down(&mut self) {
        self.transfer();
        self.rotate();
    }

    /// `S_{x̂,y,z} -> S_{\widehat{x+1},y,z-1}`.
    fn shift_up(&mut self) {
        self.unrotate();
        self.untransfer();
    }

    fn drain_last(&mut self) {
        while self.z > 0 {
            self.shift_up();
        }
        while self.z < 0 {
            self.shift_down();
        }
    }

    /// Walks to `S_{\widehat{k},0,0}`: empty the last entry into the hat,
    /// rotate the middle entry into last position, empty it too.
    fn reduce(mut self) -> BasisCoords {
        self.drain_last();
        // (x; y, 0) -> (0; x, y)
        self.rotate();
        self.rotate();
        self.drain_last();
        // (y; x, 0) -> (x; 0, y)
        self.rotate();
        self.drain_last();
        debug_assert_eq!((self.y, self.z), (0, 0));
        let mut out = self.acc;
        out.add(Symbol::s_basis(self.x), q(1));
        out
    }
}

/// Coordinates of a symbol in the basis `A^J ∪ A^S`.
///
/// `JB_{a,b}` becomes `JA_{a-1,b-1}`. Triple-point symbols are first brought
/// to a single hat, then walked to `S_{\widehat{k},0,0}` one index unit at a
/// time; every step applies one of the four triple-point/tangency relations
/// and records its J terms.
pub fn reduce_to_basis(s: &Symbol) -> BasisCoords {
    let mut out = BasisCoords::default();
    match *s {
        Symbol::JPlus(..) | Symbol::JA(..) => out.add(*s, q(1)),
        Symbol::JB(a, b) => out.add(Symbol::j_a(a - 1, b - 1), q(1)),
        Symbol::S(_) => {
            let e = s.aligned().unwrap();
            let (a, b, c) = (e[0].0, e[1].0, e[2].0);
            let start = match s.hats().unwrap() {
                0 => {
                    // S_{a,b,c} = S_{\widehat{b+1},c,a} + JA_{c+a-1,b} - JA_{c+a+1,b}
                    out.add_all(&corr(&[(ja(c + a - 1, b), 1), (ja(c + a + 1, b), -1)]));
                    (b + 1, c, a)
                }
                3 => {
                    // S_{x̂,ŷ,ẑ} = S_{ẑ,x̂,y-1} - JA_{z+x-2,y-1} + JA_{z+x,y-1}
                    out.add_all(&corr(&[(ja(c + a - 2, b - 1), -1), (ja(c + a, b - 1), 1)]));
                    // now two hats: S_{ĉ,â,b-1}
                    out.add_all(&two_to_one(c, a, b - 1));
                    (a, b - 1, c)
                }
                2 => {
                    out.add_all(&two_to_one(a, b, c));
                    (b, c, a)
                }
                _ => (a, b, c),
            };
            let walk = OneHat {
                x: start.0,
                y: start.1,
                z: start.2,
                acc: BasisCoords::default(),
            };
            out.add_all(&walk.reduce());
        }
    }
    out
}

/// Correction for `S_{p̂,q̂,r} = S_{q̂,r,p} + c`.
fn two_to_one(p: i64, q_: i64, r: i64) -> BasisCoords {
    corr(&[(jp(q_ + r - 1, p), -1), (jp(q_ + r + 1, p), 1)])
}

/// A linear relation between symbols: `Σ lhs = Σ rhs`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: &'static str,
    pub indices: Vec<i64>,
    pub lhs: Vec<(Symbol, i64)>,
    pub rhs: Vec<(Symbol, i64)>,
}

fn combo(terms: &[(Symbol, i64)]) -> XYVector {
    let mut v = XYVector::zero();
    for (s, c) in terms {
        v += &f1_of_symbol(s).scaled(q(*c));
    }
    v
}

impl Relation {
    pub fn holds_under_f1(&self) -> bool {
        combo(&self.lhs) == combo(&self.rhs)
    }

    /// Every symbol in the relation lives in one regular homotopy class.
    pub fn parity_compatible(&self) -> bool {
        let mut classes = self
            .lhs
            .iter()
            .chain(&self.rhs)
            .map(|(s, _)| symbol_class(s));
        let first = classes.next().unwrap();
        classes.all(|c| c == first)
    }
}

/// All relations with indices in `[-range, range]`.
pub fn relations(range: i64) -> Vec<Relation> {
    let h = |i: i64| (i, true);
    let u = |i: i64| (i, false);
    let mut out = Vec::new();
    let span = -range..=range;
    for a in span.clone() {
        for b in span.clone() {
            // The J+ symbol is unordered; ordered construction must agree.
            out.push(Relation {
                name: "J+ symmetry",
                indices: vec![a, b],
                lhs: vec![(Symbol::j_plus(a, b), 1)],
                rhs: vec![(Symbol::j_plus(b, a), 1)],
            });
            out.push(Relation {
                name: "JB shift",
                indices: vec![a, b],
                lhs: vec![(Symbol::j_b(a + 1, b), 1)],
                rhs: vec![(Symbol::j_a(a, b - 1), 1)],
            });
            for c in span.clone() {
                let idx = vec![a, b, c];
                out.push(Relation {
                    name: "S relation 1",
                    indices: idx.clone(),
                    lhs: vec![
                        (Symbol::s3(h(a), u(b), u(c)), 1),
                        (Symbol::s3(h(a), h(b), u(c)), -1),
                    ],
                    rhs: vec![(jp(c + a - 1, b), 1), (jp(c + a + 1, b), -1)],
                });
                out.push(Relation {
                    name: "S relation 2",
                    indices: idx.clone(),
                    lhs: vec![
                        (Symbol::s3(u(a), u(b), h(c)), 1),
                        (Symbol::s3(u(a), h(b), h(c)), -1),
                    ],
                    rhs: vec![(jp(c + a - 1, b), 1), (jp(c + a + 1, b), -1)],
                });
                out.push(Relation {
                    name: "S relation 3",
                    indices: idx.clone(),
                    lhs: vec![
                        (Symbol::s3(h(a), u(b), h(c)), 1),
                        (Symbol::s3(h(a), h(b + 1), h(c)), -1),
                    ],
                    rhs: vec![(ja(c + a - 2, b), 1), (ja(c + a, b), -1)],
                });
                out.push(Relation {
                    name: "S relation 4",
                    indices: idx,
                    lhs: vec![
                        (Symbol::s3(u(a), u(b), u(c)), 1),
                        (Symbol::s3(u(a), h(b + 1), u(c)), -1),
                    ],
                    rhs: vec![(ja(c + a - 1, b), 1), (ja(c + a + 1, b), -1)],
                });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub checked: usize,
}

/// Checks every relation as an identity of `F^(1)` values and for parity
/// compatibility; reports the first failure.
pub fn verify_relations(range: i64) -> Result<RelationReport> {
    let rels = relations(range);
    for r in &rels {
        if !r.holds_under_f1() || !r.parity_compatible() {
            return Err(Error::RelationFailure {
                relation: r.name.to_string(),
                indices: r.indices.clone(),
            });
        }
    }
    Ok(RelationReport {
        checked: rels.len(),
    })
}
