//! Exhaustive slices of the space of stable spherical curves, the singular
//! sites over them, and the per-class census.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::codec::{emit_json, ReportJson, Sign, SignedGaussCode};
use crate::curvemap::CurveMap;
use crate::error::Result;
use crate::invariants::universal_report;
use crate::rational::q;
use crate::singular::{all_sites, SiteDescriptor};

/// Largest crossing number enumerated in reasonable time.
pub const PRACTICAL_MAX_CROSSINGS: usize = 6;

#[derive(Clone, Debug)]
pub struct Corpus {
    pub n_max: usize,
    pub dedup: bool,
    /// Sorted by crossing number, then by code.
    pub entries: Vec<(SignedGaussCode, CurveMap)>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn maps(&self) -> impl Iterator<Item = &CurveMap> {
        self.entries.iter().map(|e| &e.1)
    }
}

/// Double-occurrence words on `n` labels with labels introduced in increasing
/// order.
pub fn normal_words(n: usize) -> Vec<Vec<u32>> {
    fn extend(
        word: &mut Vec<u32>,
        open: &mut Vec<u32>,
        next: u32,
        n: u32,
        out: &mut Vec<Vec<u32>>,
    ) {
        if next > n && open.is_empty() {
            out.push(word.clone());
            return;
        }
        if next <= n {
            word.push(next);
            open.push(next);
            extend(word, open, next + 1, n, out);
            open.pop();
            word.pop();
        }
        for i in 0..open.len() {
            let l = open.remove(i);
            word.push(l);
            extend(word, open, next, n, out);
            word.pop();
            open.insert(i, l);
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut Vec::new(), 1, n as u32, &mut out);
    out
}

fn signed(word: &[u32], mask: u32) -> SignedGaussCode {
    let letters: Vec<(u32, Sign)> = word
        .iter()
        .map(|&l| {
            (
                l,
                if mask >> (l - 1) & 1 == 1 {
                    Sign::Neg
                } else {
                    Sign::Pos
                },
            )
        })
        .collect();
    SignedGaussCode::from_letters(&letters).expect("normal words are valid")
}

/// Every realizable signed code on `n` crossings whose labels appear in
/// increasing order, with its map. No identification by rotation.
pub fn realizable_codes(n: usize) -> Vec<(SignedGaussCode, CurveMap)> {
    if n == 0 {
        return vec![(SignedGaussCode::empty(), CurveMap::circle())];
    }
    normal_words(n)
        .into_par_iter()
        .flat_map_iter(|word| {
            (0u32..1 << n).filter_map(move |mask| {
                let code = signed(&word, mask);
                let map = CurveMap::from_code(&code).ok()?;
                Some((code, map))
            })
        })
        .collect()
}

/// Realizable codes on exactly `n` crossings, in the chosen normal form.
fn realizable(n: usize, dedup: bool) -> BTreeSet<SignedGaussCode> {
    realizable_codes(n)
        .into_par_iter()
        .map(|(_, map)| {
            if dedup {
                map.canonical_form()
            } else {
                map.rotation_canonical_form()
            }
        })
        .collect()
}

/// All stable curves with at most `n` crossings: up to word rotation, or up to
/// isomorphism of oriented curves on the oriented sphere when `dedup` is set.
pub fn enumerate_curves(n: usize, dedup: bool) -> Corpus {
    let mut entries = Vec::new();
    for k in 0..=n {
        let codes: Vec<SignedGaussCode> = realizable(k, dedup).into_iter().collect();
        entries.par_extend(codes.into_par_iter().map(|c| {
            let m = CurveMap::from_code(&c).expect("normal form of a realizable code");
            (c, m)
        }));
    }
    Corpus {
        n_max: n,
        dedup,
        entries,
    }
}

pub fn enumerate_sites(map: &CurveMap) -> Vec<SiteDescriptor> {
    all_sites(map)
}

/// One census row per curve of the deduplicated corpus, with Arnold
/// normalizations `k1 = k2 = 0`.
pub fn census_rows(n: usize) -> Result<Vec<ReportJson>> {
    let corpus = enumerate_curves(n, true);
    corpus
        .entries
        .par_iter()
        .map(|(code, map)| {
            let mut row = universal_report(map, q(0), q(0))?.to_json();
            row.code = Some(code.to_text());
            Ok(row)
        })
        .collect()
}

/// The census as JSON lines.
pub fn census(n: usize) -> Result<String> {
    let mut out = String::new();
    for row in census_rows(n)? {
        out.push_str(&emit_json(&row));
        out.push('\n');
    }
    Ok(out)
}
