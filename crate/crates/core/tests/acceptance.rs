//! Acceptance gate: ten corpus-level criteria, checked with exact rational
//! arithmetic. Prints one PASS/FAIL line per criterion and exits non-zero if
//! any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use orderone::codec::SignedGaussCode;
use orderone::enumerate::{enumerate_curves, enumerate_sites, realizable_codes};
use orderone::indices::figure1b_table;
use orderone::invariants::{f, h_form, phi, Functional, Named, XYVector, ETA, PSI};
use orderone::rational::{q, Q};
use orderone::singular::{make_singular, SingularCurve};
use orderone::symbols::{f1_of_symbol, reduce_to_basis, relations, Symbol};
use orderone::verify::{fin_identities_with_terms, site_pairs};
use orderone::{parse_gauss, CurveMap, HomotopyClass};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn corpus(n: usize) -> Vec<(SignedGaussCode, CurveMap)> {
    (0..=n).flat_map(realizable_codes).collect()
}

fn gamma(k: usize) -> CurveMap {
    let letters: Vec<String> = (1..=k)
        .flat_map(|i| [format!("{i}+"), format!("{i}+")])
        .collect();
    CurveMap::from_code(&parse_gauss(&format!("gc: {}", letters.join(" "))).unwrap()).unwrap()
}

fn gamma_closed_form() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for k in 0..=10usize {
        let ki = k as i64;
        let mut expected = XYVector::zero();
        expected.add_x(0, ki - 1, q(ki));
        expected.add_y(ki - 3, q(ki));
        expected.add_y(ki - 1, q(1));
        expected.add_y(ki + 1, q(1));
        let got = if k == 0 {
            f(&CurveMap::circle())
        } else {
            f(&gamma(k))
        };
        if got != expected {
            bad.push(format!("k={k}: {got} vs {expected}"));
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(1);
    outcome(
        bad.is_empty() && fast,
        format!("k = 0..10 in {elapsed:?}; mismatches {bad:?}"),
    )
}

fn main_and_fin(codes: &[(SignedGaussCode, CurveMap)]) -> Outcome {
    let mut failures = 0;
    let mut trivial = [0usize; 2];
    for (_, map) in codes {
        let v = f(map);
        failures += PSI[2..].iter().filter(|p| !p.apply(&v).is_zero()).count();
        let (first, second) = fin_identities_with_terms(&v);
        failures += usize::from(!first.0.is_zero()) + usize::from(!second.0.is_zero());
        match map.regular_homotopy_class() {
            HomotopyClass::Ev => {
                failures += usize::from(first.1 != 0);
                trivial[0] += 1;
            }
            HomotopyClass::Od => {
                failures += usize::from(second.1 != 0);
                trivial[1] += 1;
            }
        }
    }
    outcome(
        failures == 0 && codes.len() > 1000,
        format!(
            "{} codes; psi3..psi6 and both identities; (1) is 0=0 on {} ev, (2) is 0=0 on {} od; {failures} failures",
            codes.len(),
            trivial[0],
            trivial[1]
        ),
    )
}

fn image(codes: &[(SignedGaussCode, CurveMap)]) -> Outcome {
    let mut failures = 0;
    for (_, map) in codes {
        let v = f(map);
        let want = match map.regular_homotopy_class() {
            HomotopyClass::Od => (q(2), q(0)),
            HomotopyClass::Ev => (q(0), q(2)),
        };
        failures += usize::from((PSI[0].apply(&v), PSI[1].apply(&v)) != want);
        let parity = (map.n_crossings() as i64 + 1).rem_euclid(2);
        failures += v
            .x_part()
            .keys()
            .filter(|(a, b)| (a + b).rem_euclid(2) != parity)
            .count();
        failures += v
            .y_part()
            .keys()
            .filter(|d| d.rem_euclid(2) != parity)
            .count();
    }
    outcome(
        failures == 0,
        format!("{} codes; {failures} failures", codes.len()),
    )
}

fn family(s: &Symbol) -> String {
    match s {
        Symbol::JPlus(..) => "J+".into(),
        Symbol::JA(..) => "JA".into(),
        Symbol::JB(..) => "JB".into(),
        Symbol::S(_) => format!("S{}", s.hats().unwrap()),
    }
}

/// Every one-point singular curve over the rotation-level corpus.
fn all_singular(n: usize) -> (Vec<SingularCurve>, usize) {
    let mut out = Vec::new();
    let mut errors = 0;
    for (_, map) in enumerate_curves(n, false).entries {
        for site in enumerate_sites(&map) {
            match make_singular(&map, site) {
                Ok(s) => out.push(s),
                Err(_) => errors += 1,
            }
        }
    }
    (out, errors)
}

fn symbol_formulas(sites: &[SingularCurve], errors: usize) -> Outcome {
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = errors;
    for s in sites {
        let sym = s.classify(0);
        *seen.entry(family(&sym)).or_default() += 1;
        failures += usize::from(s.f1() != f1_of_symbol(&sym));
    }
    let families = ["J+", "JA", "JB", "S0", "S1", "S2", "S3"];
    let missing: Vec<&str> = families
        .iter()
        .copied()
        .filter(|k| !seen.contains_key(*k))
        .collect();
    outcome(
        failures == 0 && missing.is_empty(),
        format!(
            "{} sites {seen:?}; missing families {missing:?}; {failures} failures",
            sites.len()
        ),
    )
}

fn order_one() -> Outcome {
    let mut pairs = 0;
    let mut mixed = 0;
    let mut failures = 0;
    for (_, map) in enumerate_curves(3, true).entries {
        for s in site_pairs(&map) {
            pairs += 1;
            if s.classify(0).is_j() != s.classify(1).is_j() {
                mixed += 1;
            }
            failures += usize::from(!s.f2().is_zero());
        }
    }
    outcome(
        failures == 0 && pairs >= 1000 && mixed > 0,
        format!("{pairs} pairs ({mixed} tangency+triple); {failures} nonzero"),
    )
}

/// Columns: J+ {e,o}, JA {e,e}, JA {o,o}, J+ {e,e}, J+ {o,o}, JA {e,o}.
const ETA_ROWS: [[i64; 6]; 6] = [
    [0, -8, -8, 0, 0, 0],
    [0, 0, 0, 0, 0, -8],
    [1, 2, 0, 0, 0, 0],
    [0, 0, 0, 2, 0, 1],
    [1, 0, 2, 0, 0, 0],
    [0, 0, 0, 0, 2, 1],
];

fn parity_column(s: &Symbol) -> Option<usize> {
    let e = |n: i64| n.rem_euclid(2) == 0;
    match *s {
        Symbol::JPlus(a, b) if e(a) && e(b) => Some(3),
        Symbol::JPlus(a, b) if !e(a) && !e(b) => Some(4),
        Symbol::JPlus(..) => Some(0),
        // JB_{a,b} is JA_{a-1,b-1}.
        Symbol::JB(a, b) => parity_column(&Symbol::j_a(a - 1, b - 1)),
        Symbol::JA(a, b) if e(a) && e(b) => Some(1),
        Symbol::JA(a, b) if !e(a) && !e(b) => Some(2),
        Symbol::JA(..) => Some(5),
        Symbol::S(_) => None,
    }
}

fn jumps(sites: &[SingularCurve]) -> Outcome {
    let mut failures = Vec::new();
    let mut eta_cells: BTreeMap<usize, usize> = BTreeMap::new();
    for s in sites {
        let sym = s.classify(0);
        let v = s.f1();
        let want: [(Named, i64); 3] = match sym {
            Symbol::JPlus(..) => [(Named::PhiPlus, 8), (Named::PhiMinus, 0), (Named::PhiSt, 0)],
            Symbol::JA(..) | Symbol::JB(..) => [
                (Named::PhiPlus, 0),
                (Named::PhiMinus, -8),
                (Named::PhiSt, 0),
            ],
            Symbol::S(_) => [
                (Named::PhiPlus, 0),
                (Named::PhiMinus, 0),
                (Named::PhiSt, 24),
            ],
        };
        for (func, value) in want {
            if func.apply(&v) != q(value) {
                failures.push(format!("{sym} {}", func.name()));
            }
        }
        let etas: Vec<Q> = ETA.iter().map(|e| e.apply(&v)).collect();
        let expected: [i64; 6] = match parity_column(&sym) {
            Some(col) => {
                *eta_cells.entry(col).or_default() += 1;
                ETA_ROWS.map(|row| row[col])
            }
            None => [0; 6],
        };
        if etas.iter().zip(expected).any(|(g, w)| *g != q(w)) {
            failures.push(format!("{sym} eta {etas:?}"));
        }
    }
    outcome(
        failures.is_empty() && eta_cells.len() == 6,
        format!(
            "{} sites; parity columns hit {:?}; failures {:?}",
            sites.len(),
            eta_cells,
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

fn random_symbol(rng: &mut StdRng) -> Symbol {
    let mut i = || rng.gen_range(-9i64..=9);
    let (a, b, c) = (i(), i(), i());
    match rng.gen_range(0..4) {
        0 => Symbol::j_plus(a, b),
        1 => Symbol::j_a(a, b),
        2 => Symbol::j_b(a, b),
        _ => Symbol::s([(a, rng.gen()), (b, rng.gen()), (c, rng.gen())]),
    }
}

fn relation_sweep() -> Outcome {
    let rels = relations(6);
    let bad: Vec<String> = rels
        .iter()
        .filter(|r| !r.holds_under_f1() || !r.parity_compatible())
        .map(|r| format!("{} {:?}", r.name, r.indices))
        .collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut reduce_bad = 0;
    for _ in 0..500 {
        let s = random_symbol(&mut rng);
        let coords = reduce_to_basis(&s);
        let basis = coords.0.keys().all(Symbol::is_basis);
        reduce_bad += usize::from(!basis || coords.f1() != f1_of_symbol(&s));
    }
    outcome(
        bad.is_empty() && reduce_bad == 0,
        format!(
            "{} relation instances, {} failing {:?}; 500 reductions, {reduce_bad} failing",
            rels.len(),
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    )
}

fn smoothing(codes: &[(SignedGaussCode, CurveMap)]) -> Outcome {
    type H = fn(i64) -> Q;
    let hs: [H; 5] = [
        |_| q(1),
        q,
        |d| q(d * d),
        |d| q(d.rem_euclid(2)),
        |d| q(1 - d.rem_euclid(2)),
    ];
    let mut failures = 0;
    for (_, map) in codes {
        for h in hs {
            let (lhs, rhs) = h_form(map, h);
            failures += usize::from(lhs != rhs);
        }
    }
    outcome(
        failures == 0,
        format!("{} codes x 5 weights; {failures} failures", codes.len()),
    )
}

fn vanishing() -> Outcome {
    let mut failures = 0;
    let mut count = 0;
    for a in -12..=12 {
        for b in -12..=12 {
            let z = XYVector::x_unit(a, b) - phi(a, b);
            for p in PSI {
                count += 1;
                failures += usize::from(!p.apply(&z).is_zero());
            }
        }
    }
    outcome(
        failures == 0,
        format!("{count} evaluations; {failures} nonzero"),
    )
}

fn figure_table(codes: &[(SignedGaussCode, CurveMap)]) -> Outcome {
    match figure1b_table(codes.iter().map(|e| &e.1)) {
        Ok(t) => outcome(
            true,
            format!(
                "{} codes, {} crossing types, single-valued",
                codes.len(),
                t.len()
            ),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn main() -> ExitCode {
    let five = corpus(5);
    let four = corpus(4);
    let (sites, site_errors) = all_singular(4);
    let results = [
        ("1 closed form on the curl family", gamma_closed_form()),
        (
            "2 psi3..psi6 vanish, finiteness identities",
            main_and_fin(&five),
        ),
        ("3 image classes and support parity", image(&five)),
        (
            "4 symbol formulas on all sites",
            symbol_formulas(&sites, site_errors),
        ),
        ("5 second derivative vanishes", order_one()),
        ("6 jump constants and eta table", jumps(&sites)),
        ("7 symbol relations and reduction", relation_sweep()),
        ("8 smoothing identity", smoothing(&four)),
        ("9 psi vanish on Z basis", vanishing()),
        ("10 adjacent-label table single-valued", figure_table(&five)),
    ];
    let mut all = true;
    for (name, o) in &results {
        println!(
            "{} criterion {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
        all &= o.ok;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
