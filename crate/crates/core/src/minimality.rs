//! Certifying minimal vanishing sorou via the subsidiary decomposition at the
//! top prime, with a definition-level brute force kept as an oracle.

use std::collections::HashSet;

use crate::arith::{is_squarefree, lcm};
use crate::cyclotomic::{is_vanishing, residue_at};
use crate::error::{Error, Result};
use crate::sorou::{Root, Sorou, SUBSET_GUARD};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FailingCondition {
    ValueZeroF0,
    InnerVanishingSubsorou,
    CommonSubvalue,
    NotVanishing,
}

impl FailingCondition {
    pub fn tag(self) -> &'static str {
        match self {
            FailingCondition::ValueZeroF0 => "value-zero-f0",
            FailingCondition::InnerVanishingSubsorou => "inner-vanishing-subsorou",
            FailingCondition::CommonSubvalue => "common-subvalue",
            FailingCondition::NotVanishing => "not-vanishing",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinimalityVerdict {
    pub vanishing: bool,
    pub minimal: bool,
    pub failing_condition: Option<FailingCondition>,
}

impl MinimalityVerdict {
    const MINIMAL: MinimalityVerdict = MinimalityVerdict {
        vanishing: true,
        minimal: true,
        failing_condition: None,
    };

    fn failed(vanishing: bool, condition: FailingCondition) -> Self {
        MinimalityVerdict {
            vanishing,
            minimal: false,
            failing_condition: Some(condition),
        }
    }
}

/// Largest prime factor of the (squarefree) relative order.
pub fn top_prime(s: &Sorou) -> Result<u64> {
    s.top_prime()
}

/// Residue row of every distinct term of `s` at modulus `m`.
pub(crate) fn term_rows(s: &Sorou, m: u64) -> Vec<Vec<i64>> {
    s.distinct()
        .iter()
        .map(|&(r, _)| residue_at(&Sorou::from_roots([r]), m).coefficients().to_vec())
        .collect()
}

/// Visits every sub-multiset of `terms` (empty and full included) with the
/// running residue accumulator. Returning `false` from `visit` stops early.
pub(crate) fn for_each_submultiset<F>(terms: &[(Root, u32)], rows: &[Vec<i64>], width: usize, mut visit: F)
where
    F: FnMut(&[u32], &[i64]) -> bool,
{
    fn go<F: FnMut(&[u32], &[i64]) -> bool>(
        i: usize,
        terms: &[(Root, u32)],
        rows: &[Vec<i64>],
        counts: &mut Vec<u32>,
        acc: &mut Vec<i64>,
        visit: &mut F,
    ) -> bool {
        if i == terms.len() {
            return visit(counts, acc);
        }
        let mult = terms[i].1;
        for c in 0..=mult {
            counts[i] = c;
            if !go(i + 1, terms, rows, counts, acc, visit) {
                for (a, r) in acc.iter_mut().zip(&rows[i]) {
                    *a -= c as i64 * r;
                }
                counts[i] = 0;
                return false;
            }
            if c < mult {
                for (a, r) in acc.iter_mut().zip(&rows[i]) {
                    *a += r;
                }
            }
        }
        for (a, r) in acc.iter_mut().zip(&rows[i]) {
            *a -= mult as i64 * r;
        }
        counts[i] = 0;
        true
    }
    let mut counts = vec![0u32; terms.len()];
    let mut acc = vec![0i64; width];
    go(0, terms, rows, &mut counts, &mut acc, &mut visit);
}

/// Residues of all proper nonempty subsorou of `f` at modulus `m`, and
/// whether any of them is zero.
fn proper_subsorou_values(f: &Sorou, m: u64) -> Result<(bool, HashSet<Vec<i64>>)> {
    let w = f.weight();
    if w > SUBSET_GUARD {
        return Err(Error::SubsetExplosion {
            weight: w,
            limit: SUBSET_GUARD,
        });
    }
    let rows = term_rows(f, m);
    let width = rows.first().map_or(0, Vec::len);
    let mut zero = false;
    let mut values = HashSet::new();
    for_each_submultiset(f.distinct(), &rows, width, |counts, acc| {
        let size: u32 = counts.iter().sum();
        if size == 0 || size as usize == w {
            return true;
        }
        if acc.iter().all(|&a| a == 0) {
            zero = true;
            return false;
        }
        values.insert(acc.to_vec());
        true
    });
    Ok((zero, values))
}

/// Minimality by the subsidiary criterion: the parts must share one nonzero
/// value, none may contain a vanishing proper subsorou, and no single value
/// may be attained by a proper nonempty subsorou of every part.
pub fn is_minimal_vanishing(s: &Sorou) -> Result<MinimalityVerdict> {
    let r = s.relative_order()?;
    if r == 1 {
        return Ok(MinimalityVerdict::failed(false, FailingCondition::NotVanishing));
    }
    if !is_squarefree(r) {
        // Minimal vanishing sorou have squarefree relative order.
        let vanishing = is_vanishing(s)?;
        let tag = if vanishing {
            FailingCondition::InnerVanishingSubsorou
        } else {
            FailingCondition::NotVanishing
        };
        return Ok(MinimalityVerdict::failed(vanishing, tag));
    }
    let d = s.to_subsidiary()?;
    subsidiary_verdict(&d.parts)
}

/// The subsidiary criterion applied directly to parts `f_0..f_{p-1}`. The
/// verdict is invariant under permuting the parts.
pub fn subsidiary_verdict(parts: &[Sorou]) -> Result<MinimalityVerdict> {
    let m = parts
        .iter()
        .filter(|f| !f.is_empty())
        .try_fold(1u64, |acc, f| f.order().map(|o| lcm(acc, o)))?;
    let mut distinct: Vec<&Sorou> = parts.iter().collect();
    distinct.sort_by_key(|f| (f.weight(), (*f).clone()));
    distinct.dedup();

    let values: Vec<_> = distinct.iter().map(|f| residue_at(f, m)).collect();
    if values.windows(2).any(|w| w[0] != w[1]) {
        return Ok(MinimalityVerdict::failed(false, FailingCondition::NotVanishing));
    }
    if values[0].is_zero() {
        return Ok(MinimalityVerdict::failed(true, FailingCondition::ValueZeroF0));
    }

    let mut common: Option<HashSet<Vec<i64>>> = None;
    for f in &distinct {
        let (zero, set) = proper_subsorou_values(f, m)?;
        if zero {
            return Ok(MinimalityVerdict::failed(
                true,
                FailingCondition::InnerVanishingSubsorou,
            ));
        }
        common = Some(match common {
            None => set,
            Some(c) => c.into_iter().filter(|v| set.contains(v)).collect(),
        });
    }
    if common.is_some_and(|c| !c.is_empty()) {
        return Ok(MinimalityVerdict::failed(true, FailingCondition::CommonSubvalue));
    }
    Ok(MinimalityVerdict::MINIMAL)
}

/// Definition-level check: vanishing, and no proper nonempty subsorou
/// vanishes.
pub fn is_minimal_vanishing_bruteforce(s: &Sorou) -> Result<bool> {
    if !is_vanishing(s)? {
        return Ok(false);
    }
    for sub in s.proper_nonempty_subsorous()? {
        if is_vanishing(&sub)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits a vanishing sorou into minimal vanishing pieces by repeatedly
/// removing a lightest vanishing subsorou (ties broken by rendered text).
pub fn decompose_into_minimal(s: &Sorou) -> Result<Vec<Sorou>> {
    if !is_vanishing(s)? {
        return Err(Error::NotVanishing);
    }
    let w = s.weight();
    if w > SUBSET_GUARD {
        return Err(Error::SubsetExplosion {
            weight: w,
            limit: SUBSET_GUARD,
        });
    }
    let mut rest = s.clone();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let piece = lightest_vanishing_subsorou(&rest)?;
        rest = rest.remove(&piece).expect("piece is a subsorou");
        out.push(piece);
    }
    Ok(out)
}

fn lightest_vanishing_subsorou(s: &Sorou) -> Result<Sorou> {
    let m = s.order()?;
    let rows = term_rows(s, m);
    let width = rows.first().map_or(0, Vec::len);
    let terms = s.distinct();
    let mut best: Option<(usize, String, Sorou)> = None;
    for_each_submultiset(terms, &rows, width, |counts, acc| {
        let size: usize = counts.iter().map(|&c| c as usize).sum();
        if size == 0 || acc.iter().any(|&a| a != 0) {
            return true;
        }
        if best.as_ref().is_some_and(|b| b.0 < size) {
            return true;
        }
        let sub = Sorou::from_terms(terms.iter().zip(counts).map(|(t, &c)| (t.0, c)));
        let text = sub.to_string();
        if best.as_ref().is_none_or(|b| (size, &text) < (b.0, &b.1)) {
            best = Some((size, text, sub));
        }
        true
    });
    best.map(|b| b.2).ok_or(Error::NotVanishing)
}
