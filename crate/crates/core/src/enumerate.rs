//! Enumeration of every sorou of a given type up to rotation, and the
//! statistics (parities, heights, relative orders) of a type.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::minimality::subsidiary_verdict;
use crate::sorou::Sorou;
use crate::types::{
    anchored_realizations, assemble, assemble_parts, slot_options, MinVanType, TypeRecord, TypeSum,
};

type Slot = Arc<OnceLock<Result<Arc<Vec<Sorou>>>>>;

/// Memo of minimal realizations per type, keyed by machine text. Each
/// type is computed at most once even under concurrent access.
#[derive(Default)]
pub struct SorouCache {
    map: Mutex<HashMap<String, Slot>>,
}

impl SorouCache {
    pub fn new() -> SorouCache {
        SorouCache::default()
    }

    fn slot(&self, key: &str) -> Slot {
        self.map
            .lock()
            .unwrap()
            .entry(key.to_string())
            .or_default()
            .clone()
    }

    pub fn get(&self, key: &str) -> Option<Arc<Vec<Sorou>>> {
        let slot = self.map.lock().unwrap().get(key).cloned()?;
        slot.get().and_then(|r| r.as_ref().ok().cloned())
    }

    /// Seeds an entry; existing entries are kept.
    pub fn insert(&self, key: &str, sorou: Vec<Sorou>) {
        let _ = self.slot(key).set(Ok(Arc::new(sorou)));
    }

    /// Completed entries, sorted by key.
    pub fn entries(&self) -> Vec<(String, Arc<Vec<Sorou>>)> {
        let map = self.map.lock().unwrap();
        let mut out: Vec<_> = map
            .iter()
            .filter_map(|(k, v)| Some((k.clone(), v.get()?.as_ref().ok()?.clone())))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn len(&self) -> usize {
        self.entries().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All minimal vanishing sorou of type `t`, one canonical representative
/// per rotation class, sorted.
pub fn sorou_of_minvan_type(t: &MinVanType, cache: &SorouCache) -> Result<Arc<Vec<Sorou>>> {
    let key = t.to_string();
    let slot = cache.slot(&key);
    slot.get_or_init(|| enumerate_classes(t, cache, true).map(Arc::new))
        .clone()
}

/// Realizations of `t` jointly containing `f0`, each component covering a
/// term of `f0`; exact multisets, not rotation classes.
pub fn sorou_of_typesum_anchored(t: &TypeSum, f0: &Sorou, cache: &SorouCache) -> Result<Vec<Sorou>> {
    let reals = component_realizations(t, cache)?;
    Ok(anchored_realizations(&reals, f0))
}

fn component_realizations(t: &TypeSum, cache: &SorouCache) -> Result<Vec<Vec<Sorou>>> {
    t.components()
        .iter()
        .map(|c| sorou_of_minvan_type(c, cache).map(|v| v.as_ref().clone()))
        .collect()
}

/// Candidate subsidiary parts for each subtype of `t`.
pub fn subtype_options(t: &MinVanType, cache: &SorouCache) -> Result<Vec<Vec<Sorou>>> {
    t.subtypes()
        .iter()
        .map(|s| Ok(slot_options(&component_realizations(s, cache)?, t.f0())))
        .collect()
}

/// Full enumeration over slot arrangements. With `anchor`, the first
/// subtype is pinned to slot 0.
pub fn enumerate_classes(t: &MinVanType, cache: &SorouCache, anchor: bool) -> Result<Vec<Sorou>> {
    let p = t.p() as usize;
    if t.subtypes().is_empty() {
        let h = assemble(t.p(), vec![t.f0().clone(); p]);
        let minimal = subsidiary_verdict(&vec![t.f0().clone(); p])?.minimal;
        return Ok(if minimal { vec![h.canonicalize()] } else { Vec::new() });
    }
    let options = subtype_options(t, cache)?;
    if options.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let labels = group_labels(t.subtypes());
    let mut verdicts: HashMap<Vec<(usize, usize)>, bool> = HashMap::new();
    let mut classes: HashSet<Sorou> = HashSet::new();
    for arrangement in arrangements(&labels, p, anchor) {
        // arrangement[slot] = Some(subtype index)
        let placed: Vec<(usize, usize)> = arrangement
            .iter()
            .enumerate()
            .filter_map(|(slot, s)| s.map(|i| (slot, i)))
            .collect();
        let mut idx = vec![0usize; placed.len()];
        loop {
            let mut key: Vec<(usize, usize)> = placed
                .iter()
                .zip(&idx)
                .map(|(&(_, i), &k)| (labels[i], k))
                .collect();
            key.sort_unstable();
            let mut parts = vec![t.f0().clone(); p];
            for (&(slot, i), &k) in placed.iter().zip(&idx) {
                parts[slot] = options[i][k].clone();
            }
            let minimal = match verdicts.get(&key) {
                Some(&v) => v,
                None => {
                    let v = subsidiary_verdict(&parts)?.minimal;
                    verdicts.insert(key, v);
                    v
                }
            };
            if minimal {
                let h = assemble(t.p(), parts);
                if h.weight() == t.weight() {
                    classes.insert(h.canonicalize());
                }
            }
            if !advance(&mut idx, |j| options[placed[j].1].len()) {
                break;
            }
        }
    }
    let mut out: Vec<Sorou> = classes.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Label per subtype; equal subtypes share a label.
fn group_labels(subtypes: &[TypeSum]) -> Vec<usize> {
    let mut labels = Vec::with_capacity(subtypes.len());
    for (i, s) in subtypes.iter().enumerate() {
        let l = subtypes[..i].iter().position(|x| x == s).map_or(i, |j| labels[j]);
        labels.push(l);
    }
    labels
}

/// Placements of subtypes into `p` slots, one per distinct labelled
/// arrangement. Equal labels are interchangeable.
fn arrangements(labels: &[usize], p: usize, anchor: bool) -> Vec<Vec<Option<usize>>> {
    let n = labels.len();
    let mut out = Vec::new();
    let mut slots: Vec<Option<usize>> = vec![None; p];
    fn place(
        i: usize,
        labels: &[usize],
        slots: &mut Vec<Option<usize>>,
        min_slot: &[usize],
        anchor: bool,
        out: &mut Vec<Vec<Option<usize>>>,
    ) {
        if i == labels.len() {
            out.push(slots.clone());
            return;
        }
        // Equal labels fill slots in increasing order.
        let lo = if i > 0 && labels[i - 1] == labels[i] { min_slot[i - 1] + 1 } else { 0 };
        let candidates: Vec<usize> = if anchor && i == 0 { vec![0] } else { (lo..slots.len()).collect() };
        for s in candidates {
            if slots[s].is_some() || s < lo {
                continue;
            }
            slots[s] = Some(i);
            let mut ms = min_slot.to_vec();
            ms.push(s);
            place(i + 1, labels, slots, &ms, anchor, out);
            slots[s] = None;
        }
    }
    if n <= p {
        place(0, labels, &mut slots, &[], anchor, &mut out);
    }
    out
}

fn advance(idx: &mut [usize], len: impl Fn(usize) -> usize) -> bool {
    for j in 0..idx.len() {
        idx[j] += 1;
        if idx[j] < len(j) {
            return true;
        }
        idx[j] = 0;
    }
    false
}

/// Nondecreasing `k`-tuples over `0..n`.
fn multichoose(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return if k == 0 { vec![Vec::new()] } else { out };
    }
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + 1 < n {
                let v = cur[i] + 1;
                for c in &mut cur[i..] {
                    *c = v;
                }
                break;
            }
        }
    }
}

/// Visits every multiset of subsidiary parts `f0, ..., f0, f_1, ..., f_n`
/// realizing `t`, in slot order (`f0` first). Arrangements are not
/// distinguished: minimality, parity, height and relative order do not
/// depend on them. Stops when `visit` returns `false`.
pub fn for_each_part_multiset<F>(t: &MinVanType, cache: &SorouCache, mut visit: F) -> Result<()>
where
    F: FnMut(&[Sorou]) -> Result<bool>,
{
    let p = t.p();
    if t.subtypes().is_empty() {
        visit(&vec![t.f0().clone(); p as usize])?;
        return Ok(());
    }
    let options = subtype_options(t, cache)?;
    if options.iter().any(Vec::is_empty) {
        return Ok(());
    }
    // (first subtype index, count) per group of equal subtypes
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for (i, s) in t.subtypes().iter().enumerate() {
        match groups.last_mut() {
            Some((first, count)) if t.subtypes()[*first] == *s => *count += 1,
            _ => groups.push((i, 1)),
        }
    }
    let per_group: Vec<Vec<Vec<usize>>> = groups
        .iter()
        .map(|&(first, count)| multichoose(options[first].len(), count))
        .collect();
    let mut idx = vec![0usize; groups.len()];
    loop {
        let mut chosen: Vec<&Sorou> = Vec::with_capacity(t.subtypes().len());
        for (g, &(first, _)) in groups.iter().enumerate() {
            chosen.extend(per_group[g][idx[g]].iter().map(|&k| &options[first][k]));
        }
        let parts = assemble_parts(p, t.f0(), &chosen);
        if !visit(&parts)? {
            return Ok(());
        }
        if !advance(&mut idx, |j| per_group[j].len()) {
            return Ok(());
        }
    }
}

/// Some minimal vanishing choice of subsidiary parts for `t`, if any.
pub fn find_minimal_parts(t: &MinVanType, cache: &SorouCache) -> Result<Option<Vec<Sorou>>> {
    let mut found = None;
    for_each_part_multiset(t, cache, |parts| {
        if subsidiary_verdict(parts)?.minimal {
            found = Some(parts.to_vec());
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(found)
}

/// Statistics over all minimal vanishing realizations of `t`.
pub fn type_statistics(t: &MinVanType, cache: &SorouCache) -> Result<TypeRecord> {
    let mut parities = BTreeSet::new();
    let mut heights = BTreeSet::new();
    let mut relorders = BTreeSet::new();
    for_each_part_multiset(t, cache, |parts| {
        if subsidiary_verdict(parts)?.minimal {
            let h = assemble(t.p(), parts.to_vec());
            if h.weight() == t.weight() {
                parities.insert(h.parity()?);
                heights.insert(h.height());
                relorders.insert(h.relative_order()?);
            }
        }
        Ok(true)
    })?;
    if parities.is_empty() {
        return Err(Error::NoMinimalRealization(t.to_string()));
    }
    Ok(record_from_sets(t, parities, heights, relorders))
}

/// Statistics computed from explicit rotation classes.
pub fn statistics_of_classes(t: &MinVanType, classes: &[Sorou]) -> Result<TypeRecord> {
    let mut parities = BTreeSet::new();
    let mut heights = BTreeSet::new();
    let mut relorders = BTreeSet::new();
    for h in classes {
        parities.insert(h.parity()?);
        heights.insert(h.height());
        relorders.insert(h.relative_order()?);
    }
    if parities.is_empty() {
        return Err(Error::NoMinimalRealization(t.to_string()));
    }
    Ok(record_from_sets(t, parities, heights, relorders))
}

fn record_from_sets(
    t: &MinVanType,
    parities: BTreeSet<(usize, usize)>,
    heights: BTreeSet<u32>,
    relorders: BTreeSet<u64>,
) -> TypeRecord {
    let parities: Vec<(usize, usize)> = parities.into_iter().rev().collect();
    TypeRecord {
        ty: t.as_sum(),
        weight: t.weight(),
        top_prime: t.p(),
        weight_partition: t.weight_partition(),
        relative_orders: relorders.into_iter().collect(),
        equisigned: parities.iter().any(|(a, b)| a == b),
        parities,
        heights: heights.into_iter().collect(),
    }
}
