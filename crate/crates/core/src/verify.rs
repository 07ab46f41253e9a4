//! Corpus-wide verification suites. A suite sweeps every instance and records
//! each failure; nothing stops early.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::codec::SignedGaussCode;
use crate::curvemap::{CurveMap, HomotopyClass};
use crate::enumerate::{enumerate_curves, enumerate_sites, realizable_codes};
use crate::error::Error;
use crate::indices::figure1b_table;
use crate::invariants::{f, h_form, z_basis, Functional, Named, XYVector, ETA, PSI};
use crate::rational::{q, Q};
use crate::singular::{make_singular, Resolution, SingularCurve};
use crate::symbols::{f1_of_symbol, reduce_to_basis, relations, symbol_class, Symbol};

/// Index bound for the symbol relation sweep.
pub const RELATION_RANGE: i64 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Main,
    Image,
    Fin,
    Symbols,
    Order2,
    Smoothing,
    Fig1b,
    Relations,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Main,
        Suite::Image,
        Suite::Fin,
        Suite::Symbols,
        Suite::Order2,
        Suite::Smoothing,
        Suite::Fig1b,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Image => "image",
            Suite::Fin => "fin",
            Suite::Symbols => "symbols",
            Suite::Order2 => "order2",
            Suite::Smoothing => "smoothing",
            Suite::Fig1b => "fig1b",
            Suite::Relations => "relations",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Instance counts per category, where a suite distinguishes any.
    pub tally: BTreeMap<String, usize>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checked: 0,
            failures: Vec::new(),
            tally: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        for (k, v) in other.tally {
            *self.tally.entry(k).or_default() += v;
        }
        self
    }

    fn check(
        &mut self,
        instance: impl FnOnce() -> String,
        expected: impl fmt::Display,
        got: impl fmt::Display,
        ok: bool,
    ) {
        if !ok {
            self.failures.push(Failure {
                instance: instance(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn count(&mut self, key: impl Into<String>) {
        *self.tally.entry(key.into()).or_default() += 1;
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checked, {} failed",
            self.suite,
            self.checked,
            self.failures.len()
        )?;
        for (k, v) in &self.tally {
            write!(f, "\n  {k}: {v}")?;
        }
        for x in self.failures.iter().take(20) {
            write!(
                f,
                "\n  FAIL {}: expected {}, got {}",
                x.instance, x.expected, x.got
            )?;
        }
        Ok(())
    }
}

/// Left sides of the two finiteness identities, with the number of basis
/// terms of `v` each one reads.
pub fn fin_identities_with_terms(v: &XYVector) -> ((Q, usize), (Q, usize)) {
    let odd = |n: i64| n.rem_euclid(2) == 1;
    let mut first = (Q::zero(), 0);
    let mut second = (Q::zero(), 0);
    for (&d, &c) in v.y_part() {
        if odd(d) {
            first.0 += c / q(d);
            first.1 += 1;
        }
        if d == 0 {
            second.0 += c;
            second.1 += 1;
        }
    }
    for (&(a, b), &c) in v.x_part() {
        let s = a + b;
        if odd(s) {
            first.0 += c * Q::new(4 * (a - b + 1) - s * s, s * (s * s - 4));
            first.1 += 1;
        }
        if s == 0 {
            second.0 += c * q(b - a - 1);
            second.1 += 1;
        }
        if s == 2 || s == -2 {
            second.0 += c * Q::new(a - b, 2);
            second.1 += 1;
        }
    }
    (first, second)
}

pub fn fin_identities(v: &XYVector) -> (Q, Q) {
    let (first, second) = fin_identities_with_terms(v);
    (first.0, second.0)
}

/// Expected `(η1, …, η6)` of `F^(1)` on a symbol; zero on triple points.
pub fn eta_on_j(s: &Symbol) -> [i64; 6] {
    let even = |n: i64| n.rem_euclid(2) == 0;
    // Rows η1..η6 against columns J+eo, JAee, JAoo, J+ee, J+oo, JAeo.
    const TABLE: [[i64; 6]; 6] = [
        [0, -8, -8, 0, 0, 0],
        [0, 0, 0, 0, 0, -8],
        [1, 2, 0, 0, 0, 0],
        [0, 0, 0, 2, 0, 1],
        [1, 0, 2, 0, 0, 0],
        [0, 0, 0, 0, 2, 1],
    ];
    let column = match *s {
        Symbol::JPlus(a, b) => match (even(a), even(b)) {
            (true, true) => 3,
            (false, false) => 4,
            _ => 0,
        },
        Symbol::JA(a, b) | Symbol::JB(a, b) => {
            let (a, b) = if matches!(s, Symbol::JB(..)) {
                (a - 1, b - 1)
            } else {
                (a, b)
            };
            match (even(a), even(b)) {
                (true, true) => 1,
                (false, false) => 2,
                _ => 5,
            }
        }
        Symbol::S(_) => return [0; 6],
    };
    TABLE.map(|row| row[column])
}

pub fn family(s: &Symbol) -> String {
    match s {
        Symbol::JPlus(..) => "J+".into(),
        Symbol::JA(..) => "JA".into(),
        Symbol::JB(..) => "JB".into(),
        Symbol::S(_) => format!("S{}hat", s.hats().unwrap()),
    }
}

fn curve_suite(
    suite: Suite,
    codes: &[(SignedGaussCode, CurveMap)],
    body: impl Fn(&SignedGaussCode, &CurveMap, &mut SuiteReport) + Sync,
) -> SuiteReport {
    codes
        .par_iter()
        .map(|(code, map)| {
            let mut r = SuiteReport::new(suite);
            r.checked = 1;
            body(code, map, &mut r);
            r
        })
        .reduce(|| SuiteReport::new(suite), SuiteReport::merge)
}

fn raw_corpus(n: usize) -> Vec<(SignedGaussCode, CurveMap)> {
    (0..=n).flat_map(realizable_codes).collect()
}

fn main_suite(n: usize) -> SuiteReport {
    curve_suite(Suite::Main, &raw_corpus(n), |code, map, r| {
        let fv = f(map);
        for p in &PSI[2..] {
            let v = p.apply(&fv);
            r.check(
                || format!("{} {}", code.to_text(), p.name()),
                0,
                v,
                v.is_zero(),
            );
        }
    })
}

fn image_suite(n: usize) -> SuiteReport {
    curve_suite(Suite::Image, &raw_corpus(n), |code, map, r| {
        let fv = f(map);
        let class = map.regular_homotopy_class();
        r.count(class.as_str());
        let got = (PSI[0].apply(&fv), PSI[1].apply(&fv));
        let expected = match class {
            HomotopyClass::Od => (q(2), q(0)),
            HomotopyClass::Ev => (q(0), q(2)),
        };
        r.check(
            || format!("{} (psi1,psi2)", code.to_text()),
            format!("{expected:?}"),
            format!("{got:?}"),
            got == expected,
        );
        let parity = (map.n_crossings() as i64 + 1).rem_euclid(2);
        for &(a, b) in fv.x_part().keys() {
            r.check(
                || format!("{} X[{a},{b}]", code.to_text()),
                format!("a+b = {parity} mod 2"),
                a + b,
                (a + b).rem_euclid(2) == parity,
            );
        }
        for &d in fv.y_part().keys() {
            r.check(
                || format!("{} Y[{d}]", code.to_text()),
                format!("d = {parity} mod 2"),
                d,
                d.rem_euclid(2) == parity,
            );
        }
    })
}

fn fin_suite(n: usize) -> SuiteReport {
    curve_suite(Suite::Fin, &raw_corpus(n), |code, map, r| {
        let (first, second) = fin_identities_with_terms(&f(map));
        r.check(
            || format!("{} identity 1", code.to_text()),
            0,
            first.0,
            first.0.is_zero(),
        );
        r.check(
            || format!("{} identity 2", code.to_text()),
            0,
            second.0,
            second.0.is_zero(),
        );
        // Each identity reads no term at all on the class where it is trivial.
        let (trivial, terms) = match map.regular_homotopy_class() {
            HomotopyClass::Ev => ("identity 1 trivially 0=0", first.1),
            HomotopyClass::Od => ("identity 2 trivially 0=0", second.1),
        };
        r.count(trivial);
        r.check(
            || format!("{} {trivial}", code.to_text()),
            0,
            terms,
            terms == 0,
        );
    })
}

fn smoothing_suite(n: usize) -> SuiteReport {
    type H = fn(i64) -> Q;
    let hs: [(&str, H); 5] = [
        ("1", |_| q(1)),
        ("d", q),
        ("d^2", |d| q(d * d)),
        ("odd", |d| q(d.rem_euclid(2))),
        ("even", |d| q(1 - d.rem_euclid(2))),
    ];
    curve_suite(Suite::Smoothing, &raw_corpus(n), |code, map, r| {
        for (name, h) in hs {
            let (lhs, rhs) = h_form(map, h);
            r.check(
                || format!("{} h={name}", code.to_text()),
                rhs,
                lhs,
                lhs == rhs,
            );
        }
    })
}

fn fig1b_suite(n: usize) -> SuiteReport {
    let corpus = raw_corpus(n);
    let mut r = SuiteReport::new(Suite::Fig1b);
    r.checked = corpus.len();
    match figure1b_table(corpus.iter().map(|e| &e.1)) {
        Ok(table) => {
            r.tally.insert("crossing types".into(), table.len());
        }
        Err(Error::InconsistentTable {
            a,
            b,
            first,
            second,
        }) => r.failures.push(Failure {
            instance: format!("type ({a},{b})"),
            expected: format!("{first:?}"),
            got: format!("{second:?}"),
        }),
        Err(e) => r.failures.push(Failure {
            instance: "table".into(),
            expected: "a table".into(),
            got: e.to_string(),
        }),
    }
    r
}

/// Checks a one-point singular curve against everything its symbol predicts.
pub fn check_site(s: &SingularCurve, label: &str, r: &mut SuiteReport) {
    let sym = s.classify(0);
    r.count(family(&sym));
    let v = s.f1();
    let expected = f1_of_symbol(&sym);
    r.check(|| format!("{label} {sym} f1"), &expected, &v, v == expected);
    let class = symbol_class(&sym);
    for (side, choice) in [("pos", Resolution::Pos), ("neg", Resolution::Neg)] {
        let m = s.resolve(&[choice]);
        let c = m.regular_homotopy_class();
        r.check(
            || format!("{label} {sym} class of {side}"),
            class.as_str(),
            c.as_str(),
            c == class,
        );
    }
    let (plus, minus, st) = match sym {
        Symbol::JPlus(..) => (8, 0, 0),
        Symbol::JA(..) | Symbol::JB(..) => (0, -8, 0),
        Symbol::S(_) => (0, 0, 24),
    };
    for (functional, want) in [
        (Named::PhiPlus, plus),
        (Named::PhiMinus, minus),
        (Named::PhiSt, st),
    ] {
        let got = functional.apply(&v);
        r.check(
            || format!("{label} {sym} {}", functional.name()),
            want,
            got,
            got == q(want),
        );
    }
    let want = eta_on_j(&sym);
    for (i, e) in ETA.iter().enumerate() {
        let got = e.apply(&v);
        r.check(
            || format!("{label} {sym} {}", e.name()),
            want[i],
            got,
            got == q(want[i]),
        );
    }
    for p in PSI {
        let got = p.apply(&v);
        r.check(
            || format!("{label} {sym} {}", p.name()),
            0,
            got,
            got.is_zero(),
        );
    }
}

fn symbols_suite(n: usize) -> SuiteReport {
    let corpus = enumerate_curves(n, true);
    let mut report = corpus
        .entries
        .par_iter()
        .map(|(code, map)| {
            let mut r = SuiteReport::new(Suite::Symbols);
            for site in enumerate_sites(map) {
                r.checked += 1;
                let label = format!("{} {site:?}", code.to_text());
                match make_singular(map, site) {
                    Ok(s) => check_site(&s, &label, &mut r),
                    Err(e) => r.check(|| label.clone(), "a singular curve", e, false),
                }
            }
            r
        })
        .reduce(|| SuiteReport::new(Suite::Symbols), SuiteReport::merge);
    // Equal symbols must give equal jumps across the whole corpus.
    let mut by_symbol: BTreeMap<Symbol, XYVector> = BTreeMap::new();
    for (code, map) in &corpus.entries {
        for site in enumerate_sites(map) {
            let Ok(s) = make_singular(map, site) else {
                continue;
            };
            let v = s.f1();
            let sym = s.classify(0);
            let first = by_symbol.entry(sym).or_insert_with(|| v.clone());
            report.check(
                || format!("{} {site:?} {sym} soundness", code.to_text()),
                &*first,
                &v,
                *first == v,
            );
        }
    }
    report
        .tally
        .insert("distinct symbols".into(), by_symbol.len());
    report
}

/// Every pair of sites on one curve that can be realized together.
pub fn site_pairs(map: &CurveMap) -> Vec<SingularCurve> {
    let sites = enumerate_sites(map);
    let mut out = Vec::new();
    for (i, &a) in sites.iter().enumerate() {
        for &b in &sites[i + 1..] {
            if let Ok(s) = SingularCurve::new(map, &[a, b]) {
                out.push(s);
            }
        }
    }
    out
}

fn order2_suite(n: usize) -> SuiteReport {
    let corpus = enumerate_curves(n, true);
    corpus
        .entries
        .par_iter()
        .map(|(code, map)| {
            let mut r = SuiteReport::new(Suite::Order2);
            for s in site_pairs(map) {
                r.checked += 1;
                let kinds: Vec<String> = (0..2).map(|i| family(&s.classify(i))).collect();
                r.count(kinds.join("+"));
                let v = s.f2();
                r.check(
                    || format!("{} {:?}", code.to_text(), s.descriptors()),
                    "0",
                    &v,
                    v.is_zero(),
                );
            }
            r
        })
        .reduce(|| SuiteReport::new(Suite::Order2), SuiteReport::merge)
}

/// All symbols with indices in `[-range, range]`.
pub fn all_symbols(range: i64) -> Vec<Symbol> {
    let span = || -range..=range;
    let mut out = Vec::new();
    for a in span() {
        for b in span() {
            out.extend([Symbol::j_plus(a, b), Symbol::j_a(a, b), Symbol::j_b(a, b)]);
            for c in span() {
                for mask in 0..8 {
                    out.push(Symbol::s([
                        (a, mask & 1 != 0),
                        (b, mask & 2 != 0),
                        (c, mask & 4 != 0),
                    ]));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn relations_suite() -> SuiteReport {
    let rels = relations(RELATION_RANGE);
    let mut r = rels
        .par_iter()
        .map(|rel| {
            let mut r = SuiteReport::new(Suite::Relations);
            r.checked = 1;
            r.count(rel.name);
            r.check(
                || format!("{} {:?}", rel.name, rel.indices),
                "equal F^(1)",
                "different",
                rel.holds_under_f1(),
            );
            r.check(
                || format!("{} {:?} parity", rel.name, rel.indices),
                "one class",
                "mixed",
                rel.parity_compatible(),
            );
            r
        })
        .reduce(|| SuiteReport::new(Suite::Relations), SuiteReport::merge);
    let reduction = all_symbols(3)
        .par_iter()
        .map(|s| {
            let mut r = SuiteReport::new(Suite::Relations);
            r.checked = 1;
            r.count("reduction");
            let coords = reduce_to_basis(s);
            let basis = coords.0.keys().all(Symbol::is_basis);
            r.check(
                || format!("reduce {s}"),
                "basis symbols only",
                "non-basis term",
                basis,
            );
            let (want, got) = (f1_of_symbol(s), coords.f1());
            r.check(|| format!("reduce {s}"), &want, &got, want == got);
            r
        })
        .reduce(|| SuiteReport::new(Suite::Relations), SuiteReport::merge);
    r = r.merge(reduction);
    let vanish = (-12..=12i64)
        .flat_map(|a| (-12..=12i64).map(move |b| (a, b)))
        .fold(SuiteReport::new(Suite::Relations), |mut r, (a, b)| {
            r.checked += 1;
            r.count("psi on Z");
            let z = z_basis(a, b);
            for p in PSI {
                let v = p.apply(&z);
                r.check(|| format!("{} on Z[{a},{b}]", p.name()), 0, v, v.is_zero());
            }
            r
        });
    r.merge(vanish)
}

pub fn run_suite(suite: Suite, n: usize) -> SuiteReport {
    match suite {
        Suite::Main => main_suite(n),
        Suite::Image => image_suite(n),
        Suite::Fin => fin_suite(n),
        Suite::Symbols => symbols_suite(n),
        Suite::Order2 => order2_suite(n),
        Suite::Smoothing => smoothing_suite(n),
        Suite::Fig1b => fig1b_suite(n),
        Suite::Relations => relations_suite(),
    }
}
