//! Types of minimal vanishing sorou: `(R_p : f_0 : T_1, ..., T_n)` and
//! their direct sums, with weights, ordering, text forms, Galois action,
//! representative construction and type inference.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::arith::{is_prime, lcm, primorial_below, units_mod};
use crate::error::{Error, Result};
use crate::minimality::{decompose_into_minimal, is_minimal_vanishing, subsidiary_verdict};
use crate::sorou::{parse_sorou_at, Root, Sorou, SubsidiaryDecomposition};

/// Combination budget when searching for a minimal representative.
const REPRESENTATIVE_SEARCH_LIMIT: usize = 20_000;

/// A minimal type `(R_p : f_0 : T_1, ..., T_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinVanType {
    p: u64,
    f0: Sorou,
    subtypes: Vec<TypeSum>,
}

/// `T_1 ⊕ ... ⊕ T_k`; a singleton denotes a minimal type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeSum {
    components: Vec<MinVanType>,
}

impl MinVanType {
    /// Builds a type, canonicalizing `f0` and sorting subtypes.
    pub fn new(p: u64, f0: Sorou, mut subtypes: Vec<TypeSum>) -> MinVanType {
        subtypes.sort_by(|a, b| compare_types(b, a));
        MinVanType {
            p,
            f0: f0.canonicalize(),
            subtypes,
        }
    }

    /// `R_p`.
    pub fn r_p(p: u64) -> MinVanType {
        MinVanType {
            p,
            f0: Sorou::one(),
            subtypes: Vec::new(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f0(&self) -> &Sorou {
        &self.f0
    }

    /// Subtypes, non-increasing.
    pub fn subtypes(&self) -> &[TypeSum] {
        &self.subtypes
    }

    pub fn is_r_p(&self) -> bool {
        self.subtypes.is_empty() && self.f0 == Sorou::one()
    }

    pub fn weight(&self) -> usize {
        let x0 = self.f0.weight();
        let n = self.subtypes.len();
        let sub: usize = self.subtypes.iter().map(|t| t.weight() - x0).sum();
        sub + (self.p as usize).saturating_sub(n) * x0
    }

    /// Subsidiary weights, nondecreasing, of length `p`.
    pub fn weight_partition(&self) -> Vec<usize> {
        let x0 = self.f0.weight();
        let mut parts: Vec<usize> = self.subtypes.iter().map(|t| t.weight() - x0).collect();
        parts.resize(self.p as usize, x0);
        parts.sort_unstable();
        parts
    }

    pub fn as_sum(&self) -> TypeSum {
        TypeSum {
            components: vec![self.clone()],
        }
    }

    /// Checks the structural invariants of a minimal type.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Unrealizable(format!("{self}: {msg}")));
        if !is_prime(self.p) {
            return bad("head is not prime");
        }
        if self.f0.is_empty() || !self.f0.contains(Root::ONE) {
            return bad("f0 must contain 1");
        }
        if self.f0 != self.f0.canonicalize() {
            return bad("f0 is not in canonical form");
        }
        if primorial_below(self.p) % self.f0.order()? != 0 {
            return bad("f0 order must divide the product of smaller primes");
        }
        if self.subtypes.len() >= self.p as usize {
            return bad("too many subtypes");
        }
        let x0 = self.f0.weight();
        for t in &self.subtypes {
            if t.weight() < 2 * x0 {
                return bad("subtype lighter than twice the weight of f0");
            }
            if t.components.len() > x0 {
                return bad("subtype has more components than f0 has terms");
            }
            for c in &t.components {
                if c.p >= self.p {
                    return bad("subtype top prime is not below the head");
                }
                c.validate()?;
            }
        }
        if self.f0.weight() > 1 {
            for sub in self.f0.proper_nonempty_subsorous()?.chain([self.f0.clone()]) {
                if crate::cyclotomic::is_vanishing(&sub)? {
                    return bad("f0 has a vanishing subsorou");
                }
            }
        }
        Ok(())
    }
}

impl TypeSum {
    pub fn new(mut components: Vec<MinVanType>) -> TypeSum {
        assert!(!components.is_empty(), "a type sum needs a component");
        components.sort_by(|a, b| compare_minvan(b, a));
        TypeSum { components }
    }

    pub fn single(t: MinVanType) -> TypeSum {
        TypeSum {
            components: vec![t],
        }
    }

    /// Components, non-increasing.
    pub fn components(&self) -> &[MinVanType] {
        &self.components
    }

    pub fn is_minimal(&self) -> bool {
        self.components.len() == 1
    }

    /// The sole component of a minimal type.
    pub fn minimal(&self) -> Option<&MinVanType> {
        match self.components.as_slice() {
            [t] => Some(t),
            _ => None,
        }
    }

    pub fn weight(&self) -> usize {
        self.components.iter().map(MinVanType::weight).sum()
    }

    /// `R_2 ⊕ ... ⊕ R_2`.
    pub fn is_pure_r2(&self) -> bool {
        self.components.iter().all(|c| c.p == 2 && c.is_r_p())
    }

    /// Largest top prime among the components.
    pub fn top_prime(&self) -> u64 {
        self.components.iter().map(|c| c.p).max().unwrap()
    }
}

impl From<MinVanType> for TypeSum {
    fn from(t: MinVanType) -> TypeSum {
        TypeSum::single(t)
    }
}

/// A minimal type with the statistics of its realizations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeRecord {
    pub ty: TypeSum,
    pub weight: usize,
    pub top_prime: u64,
    /// Nondecreasing.
    pub weight_partition: Vec<usize>,
    /// Ascending.
    pub relative_orders: Vec<u64>,
    /// Each pair `(larger, smaller)`; pairs in descending order.
    pub parities: Vec<(usize, usize)>,
    /// Ascending.
    pub heights: Vec<u32>,
    pub equisigned: bool,
}

impl TypeRecord {
    pub fn minvan(&self) -> &MinVanType {
        self.ty.minimal().expect("records hold minimal types")
    }
}

pub fn type_weight(t: &TypeSum) -> usize {
    t.weight()
}

pub fn weight_partition(t: &MinVanType) -> Vec<usize> {
    t.weight_partition()
}

fn compare_phases(a: &Sorou, b: &Sorou) -> Ordering {
    let phase = |r: Root| (r.power() as u128, r.order() as u128);
    for (x, y) in a.roots().zip(b.roots()) {
        let ((px, ox), (py, oy)) = (phase(x), phase(y));
        match (px * oy).cmp(&(py * ox)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.weight().cmp(&b.weight())
}

/// Componentwise rule: head prime, `w(f0)`, phases of `f0`, subtype count,
/// then subtypes in order.
fn compare_component(a: &MinVanType, b: &MinVanType) -> Ordering {
    a.p.cmp(&b.p)
        .then_with(|| a.f0.weight().cmp(&b.f0.weight()))
        .then_with(|| compare_phases(&a.f0, &b.f0))
        .then_with(|| a.subtypes.len().cmp(&b.subtypes.len()))
        .then_with(|| {
            a.subtypes
                .iter()
                .zip(&b.subtypes)
                .map(|(x, y)| compare_types(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

fn compare_minvan(a: &MinVanType, b: &MinVanType) -> Ordering {
    a.weight()
        .cmp(&b.weight())
        .then_with(|| compare_component(a, b))
}

/// Total order on types: weight, number of components, then componentwise.
pub fn compare_types(a: &TypeSum, b: &TypeSum) -> Ordering {
    a.weight()
        .cmp(&b.weight())
        .then_with(|| a.components.len().cmp(&b.components.len()))
        .then_with(|| {
            a.components
                .iter()
                .zip(&b.components)
                .map(|(x, y)| compare_component(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
}

impl Ord for TypeSum {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_types(self, other)
    }
}

impl PartialOrd for TypeSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MinVanType {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_minvan(self, other)
    }
}

impl PartialOrd for MinVanType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MinVanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(R{};{}", self.p, self.f0)?;
        for t in &self.subtypes {
            write!(f, ";{t}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for TypeSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("&")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

pub fn render_type(t: &TypeSum) -> String {
    t.to_string()
}

pub fn parse_type(text: &str) -> Result<TypeSum> {
    let mut parser = TypeParser { text, pos: 0 };
    let t = parser.typesum()?;
    if parser.pos != text.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(t)
}

impl FromStr for TypeSum {
    type Err = Error;

    fn from_str(text: &str) -> Result<TypeSum> {
        parse_type(text)
    }
}

struct TypeParser<'a> {
    text: &'a str,
    pos: usize,
}

impl TypeParser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, token: &str) -> Result<()> {
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn typesum(&mut self) -> Result<TypeSum> {
        let mut components = vec![self.minvan()?];
        while self.peek() == Some(b'&') {
            self.pos += 1;
            components.push(self.minvan()?);
        }
        Ok(TypeSum::new(components))
    }

    fn minvan(&mut self) -> Result<MinVanType> {
        self.eat("(R")?;
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let p: u64 = self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::Parse {
                position: start,
                message: "expected a prime".into(),
            })?;
        if !is_prime(p) {
            return Err(Error::Parse {
                position: start,
                message: format!("{p} is not prime"),
            });
        }
        self.eat(";")?;
        let start = self.pos;
        while self.peek().is_some_and(|b| b != b';' && b != b')') {
            self.pos += 1;
        }
        let f0 = parse_sorou_at(&self.text[start..self.pos], start)?;
        let mut subtypes = Vec::new();
        while self.peek() == Some(b';') {
            self.pos += 1;
            subtypes.push(self.typesum()?);
        }
        self.eat(")")?;
        Ok(MinVanType::new(p, f0, subtypes))
    }
}

/// Output flavor for the human-readable notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    Latex,
    /// ASCII, free of commas so it can sit in a CSV cell.
    Plain,
}

fn render_root(r: Root, notation: Notation) -> String {
    if r == Root::ONE {
        return "1".into();
    }
    let braced = |n: u64| match notation {
        Notation::Latex if n >= 10 => format!("{{{n}}}"),
        _ => n.to_string(),
    };
    let base = match notation {
        Notation::Latex => format!("\\nu_{}", braced(r.order())),
        Notation::Plain => format!("nu_{}", r.order()),
    };
    if r.power() == 1 {
        base
    } else {
        format!("{base}^{}", braced(r.power()))
    }
}

fn render_f0(f0: &Sorou, notation: Notation) -> String {
    f0.roots()
        .map(|r| render_root(r, notation))
        .collect::<Vec<_>>()
        .join("+")
}

fn render_minvan_notation(t: &MinVanType, notation: Notation) -> String {
    let head = match notation {
        Notation::Latex if t.p >= 10 => format!("R_{{{}}}", t.p),
        _ => format!("R_{}", t.p),
    };
    if t.is_r_p() {
        return head;
    }
    let mut out = format!("({head}:");
    if t.f0 != Sorou::one() {
        out += &render_f0(&t.f0, notation);
        if !t.subtypes.is_empty() {
            out.push(':');
        }
    }
    // Sums first, then lightest first.
    let mut order: Vec<&TypeSum> = t.subtypes.iter().collect();
    order.sort_by(|a, b| {
        b.components
            .len()
            .cmp(&a.components.len())
            .then_with(|| a.weight().cmp(&b.weight()))
            .then_with(|| compare_types(b, a))
    });
    let mut groups: Vec<(usize, &TypeSum)> = Vec::new();
    for s in order {
        match groups.last_mut() {
            Some((k, last)) if *last == s => *k += 1,
            _ => groups.push((1, s)),
        }
    }
    let sep = match notation {
        Notation::Latex => ",",
        Notation::Plain => ";",
    };
    let rendered: Vec<String> = groups
        .into_iter()
        .map(|(k, s)| {
            let body = render_sum_notation(s, notation);
            match k {
                1 => body,
                _ if s.is_minimal() => format!("{k}{body}"),
                _ => format!("{k}({body})"),
            }
        })
        .collect();
    out += &rendered.join(sep);
    out.push(')');
    out
}

fn render_sum_notation(t: &TypeSum, notation: Notation) -> String {
    let sep = match notation {
        Notation::Latex => "\\oplus ",
        Notation::Plain => "(+)",
    };
    t.components
        .iter()
        .rev()
        .map(|c| render_minvan_notation(c, notation))
        .collect::<Vec<_>>()
        .join(sep)
}

/// Human-readable notation: `f0` omitted when it is 1, repeated subtypes
/// written with a multiplicity.
pub fn render_type_notation(t: &TypeSum, notation: Notation) -> String {
    render_sum_notation(t, notation)
}

pub fn render_type_latex(t: &TypeSum) -> String {
    render_type_notation(t, Notation::Latex)
}

/// Lcm of the orders of every `f0` in the type tree.
fn f0_modulus(t: &TypeSum) -> u64 {
    t.components.iter().fold(1, |acc, c| {
        let own = c.f0.order().unwrap_or(1);
        c.subtypes
            .iter()
            .fold(lcm(acc, own), |a, s| lcm(a, f0_modulus(s)))
    })
}

/// Applies `nu_n -> nu_n^k` throughout the type; `k` must be a unit modulo
/// the orders involved.
pub fn galois_conjugate(t: &TypeSum, k: i64) -> TypeSum {
    TypeSum::new(
        t.components
            .iter()
            .map(|c| {
                MinVanType::new(
                    c.p,
                    c.f0.galois(k),
                    c.subtypes.iter().map(|s| galois_conjugate(s, k)).collect(),
                )
            })
            .collect(),
    )
}

/// Complex conjugate type.
pub fn conjugate_type(t: &TypeSum) -> TypeSum {
    galois_conjugate(t, -1)
}

/// Least member of the Galois orbit of `t`.
pub fn galois_class_rep(t: &TypeSum) -> TypeSum {
    galois_orbit(t).into_iter().min().unwrap()
}

/// Distinct Galois conjugates of `t`, sorted.
pub fn galois_orbit(t: &TypeSum) -> Vec<TypeSum> {
    let m = f0_modulus(t);
    if m <= 2 {
        return vec![t.clone()];
    }
    let mut orbit: Vec<TypeSum> = units_mod(m)
        .into_iter()
        .map(|k| galois_conjugate(t, k as i64))
        .collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// Realizations of `components` summed so that they jointly contain `f0`,
/// each component covering at least one term of `f0`. Results are exact
/// multisets (no rotation identification), sorted and deduplicated.
pub fn anchored_realizations(components: &[Vec<Sorou>], f0: &Sorou) -> Vec<Sorou> {
    let terms: Vec<Root> = f0.roots().collect();
    let m = components.len();
    let mut out = Vec::new();
    if m == 0 || m > terms.len() {
        return out;
    }
    let mut assignment = vec![0usize; terms.len()];
    loop {
        let mut covered = vec![false; m];
        for &a in &assignment {
            covered[a] = true;
        }
        if covered.iter().all(|&c| c) {
            let parts: Vec<Sorou> = (0..m)
                .map(|c| {
                    Sorou::from_roots(
                        terms
                            .iter()
                            .zip(&assignment)
                            .filter(|(_, &a)| a == c)
                            .map(|(&r, _)| r),
                    )
                })
                .collect();
            let choices: Vec<Vec<Sorou>> = parts
                .iter()
                .zip(components)
                .map(|(part, reals)| embeddings(part, reals))
                .collect();
            if choices.iter().all(|c| !c.is_empty()) {
                let mut idx = vec![0usize; m];
                loop {
                    let sum = idx
                        .iter()
                        .zip(&choices)
                        .fold(Sorou::empty(), |acc, (&i, c)| acc.concat(&c[i]));
                    out.push(sum);
                    if !odometer(&mut idx, &choices) {
                        break;
                    }
                }
            }
        }
        // next assignment in base m
        let mut i = 0;
        loop {
            if i == assignment.len() {
                out.sort();
                out.dedup();
                return out;
            }
            assignment[i] += 1;
            if assignment[i] < m {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

fn odometer(idx: &mut [usize], choices: &[Vec<Sorou>]) -> bool {
    for (i, c) in idx.iter_mut().zip(choices) {
        *i += 1;
        if *i < c.len() {
            return true;
        }
        *i = 0;
    }
    false
}

/// Rotations `z * v` of the given sorou that contain `part`, deduplicated.
fn embeddings(part: &Sorou, reals: &[Sorou]) -> Vec<Sorou> {
    let tau = part.first().expect("parts are nonempty");
    let mut out = Vec::new();
    for v in reals {
        for &(w, _) in v.distinct() {
            let rotated = v.rotate(tau.mul(w.inverse()));
            if part.is_subsorou_of(&rotated) {
                out.push(rotated);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Possible subsidiary parts `f = f0 - V` for realizations `V ⊇ f0` of a
/// subtype. `f = f0` itself is excluded.
pub fn slot_options(components: &[Vec<Sorou>], f0: &Sorou) -> Vec<Sorou> {
    let mut out: Vec<Sorou> = anchored_realizations(components, f0)
        .into_iter()
        .map(|v| v.remove(f0).expect("realization contains f0").negate())
        .filter(|f| f != f0)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Subsidiary parts in slot order: `f0` in the first `p - n` slots, then
/// the chosen parts.
pub fn assemble_parts(p: u64, f0: &Sorou, chosen: &[&Sorou]) -> Vec<Sorou> {
    let free = p as usize - chosen.len();
    std::iter::repeat_n(f0.clone(), free)
        .chain(chosen.iter().map(|f| (*f).clone()))
        .collect()
}

pub fn assemble(p: u64, parts: Vec<Sorou>) -> Sorou {
    Sorou::from_subsidiary(&SubsidiaryDecomposition {
        top_prime: p,
        parts,
    })
}

/// One sorou of the given type, built from representatives of the
/// subtypes. Prefers an assembly that is minimal vanishing but does not
/// guarantee one.
pub fn representative_sorou(t: &TypeSum) -> Result<Sorou> {
    t.components
        .iter()
        .try_fold(Sorou::empty(), |acc, c| Ok(acc.concat(&minvan_representative(c)?)))
}

fn minvan_representative(t: &MinVanType) -> Result<Sorou> {
    let p = t.p;
    if t.subtypes.is_empty() {
        return Ok(assemble(p, vec![t.f0.clone(); p as usize]).canonicalize());
    }
    let mut options: Vec<Vec<Sorou>> = Vec::new();
    for s in &t.subtypes {
        let reals = s
            .components
            .iter()
            .map(|c| minvan_representative(c).map(|v| vec![v]))
            .collect::<Result<Vec<_>>>()?;
        let opts = slot_options(&reals, &t.f0);
        if opts.is_empty() {
            return Err(Error::Unrealizable(t.to_string()));
        }
        options.push(opts);
    }
    let mut idx = vec![0usize; options.len()];
    let first = choose(&options, &idx);
    for _ in 0..REPRESENTATIVE_SEARCH_LIMIT {
        let chosen = choose(&options, &idx);
        let parts = assemble_parts(p, &t.f0, &chosen);
        if subsidiary_verdict(&parts)?.minimal {
            return Ok(assemble(p, parts).canonicalize());
        }
        if !odometer(&mut idx, &options) {
            break;
        }
    }
    Ok(assemble(p, assemble_parts(p, &t.f0, &first)).canonicalize())
}

fn choose<'a>(options: &'a [Vec<Sorou>], idx: &[usize]) -> Vec<&'a Sorou> {
    idx.iter().zip(options).map(|(&i, o)| &o[i]).collect()
}

/// A type of a minimal vanishing sorou, determined by its subsidiary
/// decomposition and the deterministic minimal decomposition of each
/// `f0 - f_j`.
pub fn infer_type(s: &Sorou) -> Result<TypeSum> {
    Ok(TypeSum::single(infer_minvan(s)?))
}

fn infer_minvan(s: &Sorou) -> Result<MinVanType> {
    if !is_minimal_vanishing(s)?.minimal {
        return Err(Error::NotMinimal);
    }
    let d = s.to_subsidiary()?;
    let f0 = &d.parts[0];
    let mut subtypes = Vec::new();
    for f in d.parts.iter().skip(1).filter(|f| *f != f0) {
        let diff = f0.subtract(f);
        let comps = decompose_into_minimal(&diff)?
            .iter()
            .map(infer_minvan)
            .collect::<Result<Vec<_>>>()?;
        subtypes.push(TypeSum::new(comps));
    }
    Ok(MinVanType::new(d.top_prime, f0.clone(), subtypes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(text: &str) -> TypeSum {
        text.parse().unwrap()
    }

    fn nu(n: u64, k: i64) -> Root {
        Root::nu(n, k)
    }

    #[test]
    fn weights_and_partitions() {
        assert_eq!(t("(R5;1:0)").weight(), 5);
        assert_eq!(t("(R5;1:0;(R3;1:0))").weight(), 6);
        let fam = t("(R7;1:0+5:1;(R5;1:0))");
        assert_eq!(fam.weight(), 15);
        assert_eq!(fam.components()[0].weight_partition(), vec![2, 2, 2, 2, 2, 2, 3]);
        let nested = t("(R7;1:0;(R5;1:0;(R3;1:0)))");
        assert_eq!(nested.components()[0].weight_partition(), vec![1, 1, 1, 1, 1, 1, 5]);
        assert_eq!(MinVanType::r_p(7).weight_partition(), vec![1; 7]);
    }

    #[test]
    fn ordering() {
        let a = t("(R5;1:0;(R3;1:0))");
        assert_eq!(compare_types(&a, &a), Ordering::Equal);
        assert_eq!(compare_types(&t("(R3;1:0)"), &t("(R2;1:0)")), Ordering::Greater);
        let r5_2r3 = t("(R5;1:0;(R3;1:0);(R3;1:0))");
        assert_eq!(compare_types(&r5_2r3, &t("(R7;1:0)")), Ordering::Less);
    }

    #[test]
    fn machine_text() {
        assert_eq!(t("(R3;1:0)").to_string(), "(R3;1:0)");
        assert_eq!(
            t("(R5;1:0;(R3;1:0))").to_string(),
            "(R5;1:0;(R3;1:0))"
        );
        let two = TypeSum::single(MinVanType::new(
            5,
            Sorou::one(),
            vec![MinVanType::r_p(3).into(), MinVanType::r_p(3).into()],
        ));
        assert_eq!(two.to_string(), "(R5;1:0;(R3;1:0);(R3;1:0))");
        let sum = t("(R2;1:0)&(R3;1:0)");
        assert_eq!(sum.to_string(), "(R3;1:0)&(R2;1:0)");
        for bad in ["", "(R4;1:0)", "(R3;1:0", "(R3;)", "(R3;1:0)x", "(R3;1:0;)"] {
            assert!(bad.parse::<TypeSum>().is_err(), "{bad}");
        }
        match "(R3;1:0+3:x)".parse::<TypeSum>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 10),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn notation_rendering() {
        assert_eq!(render_type_latex(&t("(R5;1:0;(R3;1:0))")), "(R_5:R_3)");
        assert_eq!(
            render_type_latex(&t("(R7;1:0;(R3;1:0);(R3;1:0))")),
            "(R_7:2R_3)"
        );
        assert_eq!(render_type_latex(&t("(R11;1:0)")), "R_{11}");
        assert_eq!(render_type_notation(&t("(R11;1:0)"), Notation::Plain), "R_11");
        assert_eq!(
            render_type_latex(&t("(R7;1:0;(R5;1:0);(R3;1:0))")),
            "(R_7:R_3,R_5)"
        );
        assert_eq!(
            render_type_latex(&t("(R7;1:0+5:1;(R5;1:0);(R3;1:0)&(R2;1:0))")),
            "(R_7:1+\\nu_5:R_2\\oplus R_3,R_5)"
        );
        assert_eq!(
            render_type_notation(&t("(R7;1:0;(R5;1:0;(R3;1:0));(R5;1:0;(R3;1:0)))"), Notation::Plain),
            "(R_7:2(R_5:R_3))"
        );
        assert_eq!(
            render_type_latex(&t("(R7;1:0+15:2;(R5;1:0;(R3;1:0);(R3;1:0));(R5;1:0)&(R3;1:0))")),
            "(R_7:1+\\nu_{15}^2:R_3\\oplus R_5,(R_5:2R_3))"
        );
    }

    #[test]
    fn conjugation() {
        let fam = t("(R7;1:0+5:1;(R5;1:0))");
        assert_eq!(conjugate_type(&fam), fam);
        let fam2 = t("(R7;1:0+5:2;(R5;1:0))");
        assert_eq!(galois_conjugate(&fam, 2), fam2);
        assert_eq!(galois_class_rep(&fam2), fam);
        assert_eq!(conjugate_type(&conjugate_type(&fam2)), fam2);
        let minus = t("(R7;1:0+30:17;(R5;1:0;(R3;1:0)))");
        assert_eq!(galois_orbit(&minus).len(), 4);
    }

    #[test]
    fn representatives() {
        assert_eq!(representative_sorou(&t("(R5;1:0)")).unwrap(), Sorou::r_p(5));
        let h = Sorou::from_roots([nu(5, 1), nu(5, 2), nu(5, 3), nu(5, 4), nu(6, 1), nu(6, 5)]);
        let rep = representative_sorou(&t("(R5;1:0;(R3;1:0))")).unwrap();
        assert!(rep.equivalent(&h));
        let fam = t("(R7;1:0+5:1;(R5;1:0))");
        let rep = representative_sorou(&fam).unwrap();
        assert_eq!(rep.weight(), 15);
        assert!(is_minimal_vanishing(&rep).unwrap().minimal);
    }

    #[test]
    fn inference() {
        assert_eq!(infer_type(&Sorou::r_p(7)).unwrap(), t("(R7;1:0)"));
        let h = Sorou::from_roots([nu(5, 1), nu(5, 2), nu(5, 3), nu(5, 4), nu(6, 1), nu(6, 5)]);
        assert_eq!(infer_type(&h).unwrap(), t("(R5;1:0;(R3;1:0))"));
        assert_eq!(infer_type(&Sorou::one().concat(&Sorou::one())), Err(Error::NotMinimal));
    }
}
