//! Generation of all minimal vanishing types of a given weight from the
//! complete list of lighter types, and the closed-form list for relative
//! orders dividing `2pq`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::arith::{primes_up_to, primorial_below, units_mod};
use crate::cyclotomic::is_vanishing;
use crate::enumerate::{find_minimal_parts, SorouCache};
use crate::error::Result;
use crate::minimality::is_minimal_vanishing;
use crate::sorou::{Root, Sorou};
use crate::types::{galois_class_rep, galois_orbit, representative_sorou, MinVanType, TypeSum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationConfig {
    pub target_weight: usize,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
    pub enable_minvan_subtype_filter: bool,
    pub enable_conjugate_collapse: bool,
    pub allow_repeated_f0_terms: bool,
}

impl GenerationConfig {
    pub fn new(target_weight: usize) -> GenerationConfig {
        GenerationConfig {
            target_weight,
            threads: 0,
            enable_minvan_subtype_filter: true,
            enable_conjugate_collapse: true,
            allow_repeated_f0_terms: false,
        }
    }
}

/// Nonincreasing `k`-tuples of positive integers summing to `n`.
pub fn partitions_into_parts(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if n < k {
            return;
        }
        let hi = max.min(n - (k - 1));
        let lo = n.div_ceil(k);
        for first in (lo..=hi).rev() {
            cur.push(first);
            go(n - first, k - 1, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 1 && k <= n {
        go(n, k, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `f0` candidates of weight `w` for head prime `p`: `1` plus `w - 1` terms
/// `nu_Q^e`, `Q` the product of the primes below `p`, with no vanishing
/// subsorou, one per rotation class (one per Galois class when collapsing).
pub fn candidate_f0s(w: usize, p: u64, cfg: &GenerationConfig) -> Vec<Sorou> {
    if w == 0 {
        return Vec::new();
    }
    let q = primorial_below(p);
    let lo = if cfg.allow_repeated_f0_terms { 0 } else { 1 };
    let mut out = Vec::new();
    let mut exps: Vec<u64> = Vec::with_capacity(w - 1);
    fn go(
        start: u64,
        left: usize,
        q: u64,
        repeat: bool,
        exps: &mut Vec<u64>,
        out: &mut Vec<Sorou>,
    ) {
        if left == 0 {
            let f = Sorou::from_roots(
                std::iter::once(Root::ONE).chain(exps.iter().map(|&e| Root::nu(q, e as i64))),
            );
            out.push(f);
            return;
        }
        for e in start..q {
            exps.push(e);
            go(if repeat { e } else { e + 1 }, left - 1, q, repeat, exps, out);
            exps.pop();
        }
    }
    go(lo, w - 1, q, cfg.allow_repeated_f0_terms, &mut exps, &mut out);
    let mut keep: Vec<Sorou> = out
        .into_iter()
        .filter(|f| !has_vanishing_subsorou(f))
        .map(|f| f.canonicalize())
        .collect();
    keep.sort();
    keep.dedup();
    if cfg.enable_conjugate_collapse {
        keep = keep
            .into_iter()
            .map(|f| galois_f0_rep(&f, q))
            .collect();
        keep.sort();
        keep.dedup();
    }
    keep
}

/// Least canonical form among the Galois conjugates of `f`.
fn galois_f0_rep(f: &Sorou, q: u64) -> Sorou {
    units_mod(q)
        .into_iter()
        .map(|k| f.galois(k as i64).canonicalize())
        .min()
        .unwrap()
}

fn has_vanishing_subsorou(f: &Sorou) -> bool {
    if is_vanishing(f).unwrap_or(true) {
        return true;
    }
    match f.proper_nonempty_subsorous() {
        Ok(mut subs) => subs.any(|s| is_vanishing(&s).unwrap_or(true)),
        Err(_) => true,
    }
}

/// Minimal types indexed by weight.
#[derive(Clone, Debug, Default)]
pub struct TypeIndex {
    by_weight: BTreeMap<usize, Vec<MinVanType>>,
}

impl TypeIndex {
    /// Indexes `known`, adding every Galois conjugate when `expand`.
    pub fn new<'a, I: IntoIterator<Item = &'a MinVanType>>(known: I, expand: bool) -> TypeIndex {
        let mut by_weight: BTreeMap<usize, Vec<MinVanType>> = BTreeMap::new();
        for t in known {
            let members: Vec<MinVanType> = if expand {
                galois_orbit(&t.as_sum())
                    .into_iter()
                    .map(|s| s.components()[0].clone())
                    .collect()
            } else {
                vec![t.clone()]
            };
            by_weight.entry(t.weight()).or_default().extend(members);
        }
        for v in by_weight.values_mut() {
            v.sort();
            v.dedup();
        }
        TypeIndex { by_weight }
    }

    pub fn of_weight(&self, w: usize) -> &[MinVanType] {
        self.by_weight.get(&w).map_or(&[], Vec::as_slice)
    }
}

/// Sums of exactly `total` weight built from known minimal types whose head
/// prime is below `p`, with at most `max_components` components.
pub fn typesum_pool(total: usize, p: u64, max_components: usize, index: &TypeIndex) -> Vec<TypeSum> {
    let mut atoms: Vec<&MinVanType> = index
        .by_weight
        .values()
        .flatten()
        .filter(|t| t.p() < p && t.weight() <= total)
        .collect();
    atoms.sort();
    let mut out = Vec::new();
    fn go<'a>(
        left: usize,
        upto: usize,
        slots: usize,
        atoms: &[&'a MinVanType],
        cur: &mut Vec<&'a MinVanType>,
        out: &mut Vec<TypeSum>,
    ) {
        if left == 0 {
            if !cur.is_empty() {
                out.push(TypeSum::new(cur.iter().map(|t| (*t).clone()).collect()));
            }
            return;
        }
        if slots == 0 {
            return;
        }
        for i in 0..upto {
            let w = atoms[i].weight();
            if w <= left {
                cur.push(atoms[i]);
                go(left - w, i + 1, slots - 1, atoms, cur, out);
                cur.pop();
            }
        }
    }
    go(total, atoms.len(), max_components, &atoms, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Every candidate type of the target weight before the minimality check.
pub fn candidate_types(index: &TypeIndex, cfg: &GenerationConfig) -> Vec<MinVanType> {
    let w = cfg.target_weight;
    let mut out = Vec::new();
    for p in primes_up_to(w as u64) {
        if p as usize == w {
            out.push(MinVanType::r_p(p));
            continue;
        }
        for partition in partitions_into_parts(w, p as usize) {
            let x0 = *partition.last().unwrap();
            // (part value, count), largest first
            let mut groups: Vec<(usize, usize)> = Vec::new();
            for &x in &partition {
                match groups.last_mut() {
                    Some((v, c)) if *v == x => *c += 1,
                    _ => groups.push((x, 1)),
                }
            }
            let pools: Vec<Vec<TypeSum>> = groups
                .iter()
                .map(|&(x, _)| {
                    typesum_pool(x + x0, p, x0, index)
                        .into_iter()
                        .filter(|t| !t.is_pure_r2())
                        .collect()
                })
                .collect();
            if groups
                .iter()
                .zip(&pools)
                .any(|(&(x, _), pool)| x != x0 && pool.is_empty())
            {
                continue;
            }
            let f0s = candidate_f0s(x0, p, cfg);
            if f0s.is_empty() {
                continue;
            }
            for subtypes in subtype_choices(&groups, &pools, x0) {
                if subtypes.is_empty() {
                    continue;
                }
                if cfg.enable_minvan_subtype_filter && !subtypes.iter().any(TypeSum::is_minimal) {
                    continue;
                }
                for f0 in &f0s {
                    out.push(MinVanType::new(p, f0.clone(), subtypes.clone()));
                }
            }
        }
    }
    out
}

/// Lists of nontrivial subtypes, one per way of filling the slots. In the
/// group of smallest parts one slot is reserved for `f0` itself and the
/// others may stay trivial (`f_j = f0`).
fn subtype_choices(groups: &[(usize, usize)], pools: &[Vec<TypeSum>], x0: usize) -> Vec<Vec<TypeSum>> {
    let mut acc: Vec<Vec<TypeSum>> = vec![Vec::new()];
    for (&(x, count), pool) in groups.iter().zip(pools) {
        let (picks, with_trivial) = if x == x0 { (count - 1, true) } else { (count, false) };
        let n = pool.len() + usize::from(with_trivial);
        let mut next = Vec::new();
        for combo in multisets(n, picks) {
            let chosen: Vec<TypeSum> = combo
                .iter()
                .filter_map(|&i| {
                    if with_trivial {
                        i.checked_sub(1).map(|j| pool[j].clone())
                    } else {
                        Some(pool[i].clone())
                    }
                })
                .collect();
            for base in &acc {
                let mut v = base.clone();
                v.extend(chosen.iter().cloned());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Whether some sorou of type `t` is minimal vanishing: first the cheap
/// representative, then every combination of subsidiary parts.
pub fn has_minimal_realization(t: &MinVanType, cache: &SorouCache) -> Result<bool> {
    if let Ok(rep) = representative_sorou(&t.as_sum()) {
        if rep.weight() == t.weight() && is_minimal_vanishing(&rep)?.minimal {
            return Ok(true);
        }
    }
    Ok(find_minimal_parts(t, cache)?.is_some())
}

/// All minimal types of `cfg.target_weight`, given every minimal type of
/// smaller weight in `known`. Sorted, deduplicated, Galois-collapsed when
/// configured.
pub fn generate_weight(
    known: &[MinVanType],
    cfg: &GenerationConfig,
    cache: &SorouCache,
) -> Result<Vec<MinVanType>> {
    let index = TypeIndex::new(known, cfg.enable_conjugate_collapse);
    let candidates = candidate_types(&index, cfg);
    let run = || -> Result<Vec<MinVanType>> {
        let verdicts: Vec<Result<bool>> = candidates
            .par_iter()
            .map(|t| has_minimal_realization(t, cache))
            .collect();
        let mut out = Vec::new();
        for (t, ok) in candidates.iter().zip(verdicts) {
            if ok? {
                out.push(if cfg.enable_conjugate_collapse {
                    galois_class_rep(&t.as_sum()).components()[0].clone()
                } else {
                    t.clone()
                });
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    };
    if cfg.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.threads)
            .build()
            .map_err(|e| crate::error::Error::Io(e.to_string()))?
            .install(run)
    } else {
        run()
    }
}

/// Closed-form list of minimal types whose relative order divides `2pq`
/// (`p < q` odd primes), up to `weight_cap`, Galois-collapsed.
pub fn types_2pq_oracle(p: u64, q: u64, weight_cap: usize) -> Vec<MinVanType> {
    let mut out: Vec<MinVanType> = [2, p, q]
        .into_iter()
        .filter(|&r| r as usize <= weight_cap)
        .map(MinVanType::r_p)
        .collect();
    let cache = SorouCache::new();
    let max_i = ((p - 1) / 2) as usize;
    // subsets I of {1..p-1}; 0 is always in I
    for mask in 0u64..(1 << (p - 1)) {
        let size = mask.count_ones() as usize + 1;
        if size > max_i {
            continue;
        }
        let f0 = Sorou::from_roots(
            std::iter::once(Root::ONE)
                .chain((1..p).filter(|i| mask >> (i - 1) & 1 == 1).map(|i| Root::nu(p, i as i64))),
        );
        for k in 1..q as usize {
            let weight = (q as usize - k) * size + k * (p as usize - size);
            if weight > weight_cap {
                continue;
            }
            let subtypes = vec![TypeSum::single(MinVanType::r_p(p)); k];
            let t = MinVanType::new(q, f0.clone(), subtypes);
            if has_minimal_realization(&t, &cache).unwrap_or(false) {
                out.push(galois_class_rep(&t.as_sum()).components()[0].clone());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_partitions(n: usize, k: usize) -> usize {
        fn go(n: usize, k: usize, max: usize) -> usize {
            if k == 0 {
                return usize::from(n == 0);
            }
            (1..=max.min(n)).map(|f| go(n - f, k - 1, f)).sum()
        }
        go(n, k, n)
    }

    #[test]
    fn partitions() {
        assert_eq!(partitions_into_parts(3, 2), vec![vec![2, 1]]);
        assert_eq!(
            partitions_into_parts(6, 3),
            vec![vec![4, 1, 1], vec![3, 2, 1], vec![2, 2, 2]]
        );
        assert_eq!(partitions_into_parts(13, 7).len(), 11);
        assert_eq!(partitions_into_parts(13, 6).len(), 14);
        assert!(partitions_into_parts(2, 3).is_empty());
        for n in 1..16 {
            for k in 1..=n {
                assert_eq!(partitions_into_parts(n, k).len(), brute_partitions(n, k));
            }
        }
    }

    #[test]
    fn f0_candidates() {
        let cfg = GenerationConfig::new(16);
        assert_eq!(candidate_f0s(1, 7, &cfg), vec![Sorou::one()]);
        let raw = GenerationConfig {
            enable_conjugate_collapse: false,
            ..cfg.clone()
        };
        let all = candidate_f0s(2, 7, &raw);
        let has = |text: &str| all.contains(&text.parse::<Sorou>().unwrap().canonicalize());
        assert!(has("1:0+5:1") && has("1:0+3:1"));
        assert!(has("1:0+30:17"));
        assert!(!has("1:0+2:1"));
        assert_eq!(all.len(), 14);
        assert_eq!(candidate_f0s(2, 7, &cfg).len(), 6);
    }

    #[test]
    fn pools() {
        let known: Vec<MinVanType> = [2u64, 3, 5].into_iter().map(MinVanType::r_p).collect();
        let mut known = known;
        known.push("(R5;1:0;(R3;1:0))".parse::<TypeSum>().unwrap().components()[0].clone());
        let index = TypeIndex::new(&known, true);
        let render = |v: Vec<TypeSum>| v.iter().map(|t| t.to_string()).collect::<Vec<_>>();
        assert_eq!(render(typesum_pool(3, 7, 1, &index)), vec!["(R3;1:0)"]);
        assert_eq!(
            render(typesum_pool(5, 7, 2, &index)),
            vec!["(R5;1:0)", "(R3;1:0)&(R2;1:0)"]
        );
        assert_eq!(render(typesum_pool(6, 7, 1, &index)), vec!["(R5;1:0;(R3;1:0))"]);
    }

    #[test]
    fn oracle_small() {
        let render = |v: Vec<MinVanType>| v.iter().map(|t| t.to_string()).collect::<Vec<_>>();
        assert_eq!(render(types_2pq_oracle(3, 5, 2)), vec!["(R2;1:0)"]);
        assert_eq!(
            render(types_2pq_oracle(3, 5, 9)),
            vec![
                "(R2;1:0)",
                "(R3;1:0)",
                "(R5;1:0)",
                "(R5;1:0;(R3;1:0))",
                "(R5;1:0;(R3;1:0);(R3;1:0))",
                "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0))",
                "(R5;1:0;(R3;1:0);(R3;1:0);(R3;1:0);(R3;1:0))",
            ]
        );
    }

    #[test]
    fn first_weights() {
        let cache = SorouCache::new();
        let mut known: Vec<MinVanType> = Vec::new();
        let mut counts = Vec::new();
        for w in 2..=9 {
            let new = generate_weight(&known, &GenerationConfig::new(w), &cache).unwrap();
            counts.push(new.len());
            known.extend(new);
        }
        assert_eq!(counts, vec![1, 1, 0, 1, 1, 2, 2, 2]);
    }
}
