//! Brute-force ground truth over explicit permutation words.
//!
//! Everything here works letter by letter on words and never touches the
//! polynomial machinery, so it can be used to check it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::combinat::multinomial;
use crate::error::Error;
use crate::par::{self, Strategy};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermutationKind {
    Linear,
    /// Stored rotated so the smallest letter comes first.
    Circular,
    /// Starts with the smallest and ends with the largest letter.
    AtomicRising,
    /// Starts with the largest and ends with the smallest letter.
    AtomicFalling,
}

impl PermutationKind {
    pub fn name(self) -> &'static str {
        match self {
            PermutationKind::Linear => "linear",
            PermutationKind::Circular => "circular",
            PermutationKind::AtomicRising => "atomic-rising",
            PermutationKind::AtomicFalling => "atomic-falling",
        }
    }
}

impl fmt::Display for PermutationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
    kind: PermutationKind,
}

impl Permutation {
    pub fn new(word: Vec<u32>, kind: PermutationKind) -> Result<Self, Error> {
        if word.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut seen = BTreeSet::new();
        for &l in &word {
            if !seen.insert(l) {
                return Err(Error::DuplicateLetter(l));
            }
        }
        let min = *seen.first().expect("nonempty");
        let max = *seen.last().expect("nonempty");
        let invalid = |reason| Error::InvalidWord {
            word: word.clone(),
            kind: kind.name(),
            reason,
        };
        let word = match kind {
            PermutationKind::Linear => word,
            PermutationKind::Circular => {
                if word.len() < 2 {
                    return Err(invalid("circular words need at least two letters"));
                }
                let pos = word.iter().position(|&l| l == min).expect("min is present");
                let mut w = word.clone();
                w.rotate_left(pos);
                w
            }
            PermutationKind::AtomicRising => {
                if word[0] != min || word[word.len() - 1] != max {
                    return Err(invalid("must start with its minimum and end with its maximum"));
                }
                word
            }
            PermutationKind::AtomicFalling => {
                if word[0] != max || word[word.len() - 1] != min {
                    return Err(invalid("must start with its maximum and end with its minimum"));
                }
                word
            }
        };
        Ok(Permutation { word, kind })
    }

    pub fn linear(word: Vec<u32>) -> Result<Self, Error> {
        Self::new(word, PermutationKind::Linear)
    }

    pub fn circular(word: Vec<u32>) -> Result<Self, Error> {
        Self::new(word, PermutationKind::Circular)
    }

    /// Parses a word of single digits such as `52364178`, or a
    /// space/comma separated list for letters above 9.
    pub fn parse(s: &str, kind: PermutationKind) -> Result<Self, Error> {
        let s = s.trim();
        let word: Option<Vec<u32>> = if s.contains([' ', ',']) {
            s.split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().ok())
                .collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let word = word.ok_or_else(|| Error::Parse(format!("bad permutation word {s:?}")))?;
        Self::new(word, kind)
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn kind(&self) -> PermutationKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    fn is_cyclic(&self) -> bool {
        self.kind == PermutationKind::Circular
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.word.iter().any(|&l| l > 9) { " " } else { "" };
        let letters: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
        f.write_str(&letters.join(sep))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// A maximal monotone interval `[start ..= end]` of 1-based positions.
/// For circular words `end` may exceed `n`, meaning the interval wraps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub direction: Direction,
}

impl Run {
    pub fn length(&self) -> usize {
        self.end - self.start
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition {
    pub runs: Vec<Run>,
    pub structure: Partition,
}

fn step_directions(word: &[u32], cyclic: bool) -> Vec<Direction> {
    let n = word.len();
    let steps = if cyclic { n } else { n.saturating_sub(1) };
    (0..steps)
        .map(|i| {
            if word[i] < word[(i + 1) % n] {
                Direction::Up
            } else {
                Direction::Down
            }
        })
        .collect()
}

fn runs_of_word(word: &[u32], cyclic: bool) -> Vec<Run> {
    let dirs = step_directions(word, cyclic);
    if dirs.is_empty() {
        return Vec::new();
    }
    // for cyclic words, start at a direction change so no block wraps
    let offset = if cyclic {
        (0..dirs.len())
            .find(|&i| dirs[i] != dirs[(i + dirs.len() - 1) % dirs.len()])
            .unwrap_or(0)
    } else {
        0
    };
    let mut runs = Vec::new();
    let mut block_start = offset;
    for t in 1..=dirs.len() {
        let idx = offset + t;
        let at_end = t == dirs.len();
        if at_end || dirs[idx % dirs.len()] != dirs[block_start % dirs.len()] {
            runs.push(Run {
                start: block_start + 1,
                end: idx + 1,
                direction: dirs[block_start % dirs.len()],
            });
            block_start = idx;
        }
    }
    runs
}

/// Maximal alternating runs and the resulting run structure.
pub fn run_structure(p: &Permutation) -> RunDecomposition {
    let runs = runs_of_word(&p.word, p.is_cyclic());
    let structure = Partition::new(runs.iter().map(|r| r.length() as u32).collect())
        .expect("run lengths are positive");
    RunDecomposition { runs, structure }
}

/// Run structure of a raw distinct-letter word, skipping validation.
fn structure_of(word: &[u32], cyclic: bool, scratch: &mut Vec<u32>) -> Partition {
    scratch.clear();
    let n = word.len();
    let steps = if cyclic { n } else { n.saturating_sub(1) };
    if steps == 0 {
        return Partition::empty();
    }
    let up = |i: usize| word[i] < word[(i + 1) % n];
    // cyclic words handed to the tally always start at their minimum,
    // so step 0 rises and step n-1 falls: no run wraps around
    let mut len = 1u32;
    for i in 1..steps {
        if up(i) == up(i - 1) {
            len += 1;
        } else {
            scratch.push(len);
            len = 1;
        }
    }
    scratch.push(len);
    scratch.sort_unstable_by(|a, b| b.cmp(a));
    Partition::from_sorted_unchecked(scratch.clone())
}

/// Positions `i` with `sigma(i) > sigma(i+1)`, wrapping for circular words.
pub fn descent_set(p: &Permutation) -> BTreeSet<usize> {
    let w = &p.word;
    let n = w.len();
    let steps = if p.is_cyclic() { n } else { n - 1 };
    (0..steps)
        .filter(|&i| w[i] > w[(i + 1) % n])
        .map(|i| i + 1)
        .collect()
}

/// Number of permutations of `[n]` whose descent set is exactly `s`, by
/// inclusion-exclusion over subsets `T` of `s`.
pub fn beta(s: &BTreeSet<usize>, n: usize) -> Result<BigInt, Error> {
    if let Some(&bad) = s.iter().find(|&&i| i == 0 || i >= n.max(1)) {
        return Err(Error::Precondition(format!(
            "descent position {bad} is outside [1, {}]",
            n.saturating_sub(1)
        )));
    }
    let elems: Vec<usize> = s.iter().copied().collect();
    let k = elems.len();
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << k) {
        let mut blocks = Vec::with_capacity(k + 1);
        let mut prev = 0usize;
        for (b, &e) in elems.iter().enumerate() {
            if mask & (1 << b) != 0 {
                blocks.push((e - prev) as u64);
                prev = e;
            }
        }
        blocks.push((n - prev) as u64);
        let term = BigInt::from(multinomial(&blocks));
        if (k - mask.count_ones() as usize).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

fn is_atomic_word(w: &[u32]) -> bool {
    if w.len() <= 2 {
        return true;
    }
    let min = *w.iter().min().expect("nonempty");
    let max = *w.iter().max().expect("nonempty");
    let (first, last) = (w[0], w[w.len() - 1]);
    (first == min && last == max) || (first == max && last == min)
}

fn split_atoms(w: &[u32], out: &mut Vec<Vec<u32>>) {
    if is_atomic_word(w) {
        out.push(w.to_vec());
        return;
    }
    let last = w.len() - 1;
    let max_pos = (0..w.len()).max_by_key(|&i| w[i]).expect("nonempty");
    let pivot = if max_pos > 0 && max_pos < last {
        max_pos
    } else {
        // the maximum sits at an end, so a non-atomic word has an interior minimum
        (1..last).min_by_key(|&i| w[i]).expect("interior exists")
    };
    split_atoms(&w[..=pivot], out);
    split_atoms(&w[pivot..], out);
}

fn atom_from_word(w: Vec<u32>) -> Permutation {
    let kind = if w.len() < 2 || w[0] < w[w.len() - 1] {
        PermutationKind::AtomicRising
    } else {
        PermutationKind::AtomicFalling
    };
    Permutation { word: w, kind }
}

/// Splits a word into its inextendible atoms; consecutive atoms share their
/// boundary letter. Circular permutations are closed with their minimum
/// first, e.g. circular `14532` is read as `145321`.
pub fn decompose_atoms(p: &Permutation) -> Result<Vec<Permutation>, Error> {
    let mut word = p.word.clone();
    if p.is_cyclic() {
        word.push(word[0]);
    }
    if word.len() < 2 {
        return Err(Error::Precondition(
            "atomic decomposition needs at least two letters".into(),
        ));
    }
    let mut out = Vec::new();
    split_atoms(&word, &mut out);
    Ok(out.into_iter().map(atom_from_word).collect())
}

/// Principal atom `pi` with flanks `alpha`, `omega` (`sigma = alpha pi omega`)
/// and the residual permutation `alpha . e . rho(omega)`, where `e` is the
/// first letter of the atom (the minimum when rising, the maximum when falling).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalAtom {
    pub atom: Permutation,
    pub prefix: Vec<u32>,
    pub suffix: Vec<u32>,
    pub residual: Permutation,
}

/// Letterwise order-reversing involution on the letter set of `w`.
pub fn reverse_letters(w: &[u32]) -> Vec<u32> {
    let mut sorted = w.to_vec();
    sorted.sort_unstable();
    let n = sorted.len();
    w.iter()
        .map(|l| {
            let rank = sorted.binary_search(l).expect("letter present");
            sorted[n - 1 - rank]
        })
        .collect()
}

pub fn principal_atom(p: &Permutation) -> Result<PrincipalAtom, Error> {
    if p.is_cyclic() || p.len() < 2 {
        return Err(Error::Precondition(
            "principal atom needs a linear word of length >= 2".into(),
        ));
    }
    let w = &p.word;
    let min_pos = (0..w.len()).min_by_key(|&i| w[i]).expect("nonempty");
    let max_pos = (0..w.len()).max_by_key(|&i| w[i]).expect("nonempty");
    let (lo, hi) = (min_pos.min(max_pos), min_pos.max(max_pos));
    let atom = atom_from_word(w[lo..=hi].to_vec());
    let prefix = w[..lo].to_vec();
    let suffix = w[hi + 1..].to_vec();
    let mut residual = prefix.clone();
    residual.push(w[lo]);
    residual.extend(reverse_letters(&suffix));
    Ok(PrincipalAtom {
        atom,
        prefix,
        suffix,
        residual: Permutation::linear(residual)?,
    })
}

/// Interior positions with `sigma(i-1) > sigma(i) < sigma(i+1)`.
pub fn count_valleys(p: &Permutation) -> Result<usize, Error> {
    if p.is_cyclic() {
        return Err(Error::Precondition(
            "valleys are counted on linear words".into(),
        ));
    }
    Ok(valleys_of(&p.word))
}

fn valleys_of(w: &[u32]) -> usize {
    w.windows(3).filter(|t| t[0] > t[1] && t[1] < t[2]).count()
}

/// Brute-force limits; above these the polynomial route should be used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub linear_ceiling: usize,
    pub circular_ceiling: usize,
    pub atomic_ceiling: usize,
    pub strategy: Strategy,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            linear_ceiling: 8,
            circular_ceiling: 9,
            atomic_ceiling: 9,
            strategy: Strategy::default(),
        }
    }
}

impl OracleConfig {
    fn check(&self, kind: PermutationKind, n: usize) -> Result<(), Error> {
        let ceiling = match kind {
            PermutationKind::Linear => self.linear_ceiling,
            PermutationKind::Circular => self.circular_ceiling,
            PermutationKind::AtomicRising | PermutationKind::AtomicFalling => self.atomic_ceiling,
        };
        if n > ceiling {
            return Err(Error::CeilingExceeded {
                kind: kind.name(),
                n,
                ceiling,
            });
        }
        Ok(())
    }
}

/// Rearranges `v` into the next lexicographic permutation; false at the last one.
pub fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Visits every word of the given kind on `[n]`, split into independent
/// blocks by the first free letter.
fn for_each_word<A, F, M>(
    kind: PermutationKind,
    n: usize,
    strategy: Strategy,
    init: impl Fn() -> A + Sync + Send,
    visit: F,
    merge: M,
) -> A
where
    A: Send,
    F: Fn(&mut A, &[u32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let n32 = n as u32;
    let (prefix, suffix): (Vec<u32>, Vec<u32>) = match kind {
        PermutationKind::Linear => (vec![], vec![]),
        PermutationKind::Circular => (vec![1], vec![]),
        PermutationKind::AtomicRising if n >= 2 => (vec![1], vec![n32]),
        PermutationKind::AtomicFalling if n >= 2 => (vec![n32], vec![1]),
        _ => (vec![], vec![]),
    };
    let free: Vec<u32> = (1..=n32)
        .filter(|l| !prefix.contains(l) && !suffix.contains(l))
        .collect();
    if free.is_empty() {
        let mut acc = init();
        let mut word = prefix.clone();
        word.extend(&suffix);
        if !word.is_empty() {
            visit(&mut acc, &word);
        }
        return acc;
    }
    let blocks = par::map_range(free.len(), strategy, |b| {
        let mut acc = init();
        let lead = free[b];
        let mut rest: Vec<u32> = free.iter().copied().filter(|&l| l != lead).collect();
        let mut word = Vec::with_capacity(n);
        loop {
            word.clear();
            word.extend(&prefix);
            word.push(lead);
            word.extend(&rest);
            word.extend(&suffix);
            visit(&mut acc, &word);
            if !next_permutation(&mut rest) {
                break;
            }
        }
        acc
    });
    blocks.into_iter().fold(init(), merge)
}

/// Exhaustive count of run structures over all words of `kind` on `[n]`.
pub fn tally_run_structures(
    kind: PermutationKind,
    n: usize,
    config: &OracleConfig,
) -> Result<BTreeMap<Partition, u64>, Error> {
    config.check(kind, n)?;
    let min_len = match kind {
        PermutationKind::Linear => 1,
        _ => 2,
    };
    if n < min_len {
        return Err(Error::Precondition(format!(
            "{kind} permutations need n >= {min_len}"
        )));
    }
    let cyclic = kind == PermutationKind::Circular;
    let map = for_each_word(
        kind,
        n,
        config.strategy,
        || (FxHashMap::<Partition, u64>::default(), Vec::new()),
        |(acc, scratch), w| {
            *acc.entry(structure_of(w, cyclic, scratch)).or_insert(0) += 1;
        },
        |(mut a, s), (b, _)| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            (a, s)
        },
    )
    .0;
    Ok(map.into_iter().collect())
}

/// `counts[k]` = number of permutations of `[n]` with `k` valleys.
pub fn tally_valleys(n: usize, config: &OracleConfig) -> Result<Vec<u64>, Error> {
    config.check(PermutationKind::Linear, n)?;
    if n == 0 {
        return Ok(vec![1]);
    }
    let mut counts = for_each_word(
        PermutationKind::Linear,
        n,
        config.strategy,
        || vec![0u64; n / 2 + 1],
        |acc, w| acc[valleys_of(w)] += 1,
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

/// Exhaustive count of descent sets over the linear permutations of `[n]`.
pub fn tally_descent_sets(
    n: usize,
    config: &OracleConfig,
) -> Result<BTreeMap<BTreeSet<usize>, u64>, Error> {
    config.check(PermutationKind::Linear, n)?;
    let map = for_each_word(
        PermutationKind::Linear,
        n,
        config.strategy,
        BTreeMap::<BTreeSet<usize>, u64>::new,
        |acc, w| {
            let d: BTreeSet<usize> = (0..w.len() - 1)
                .filter(|&i| w[i] > w[i + 1])
                .map(|i| i + 1)
                .collect();
            *acc.entry(d).or_insert(0) += 1;
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(s: &str) -> Permutation {
        Permutation::parse(s, PermutationKind::Linear).unwrap()
    }

    fn circ(s: &str) -> Permutation {
        Permutation::parse(s, PermutationKind::Circular).unwrap()
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn run_structure_examples() {
        let d = run_structure(&lin("52364178"));
        assert_eq!(d.structure, part(&[1, 2, 2, 2]));
        let starts: Vec<(usize, usize)> = d.runs.iter().map(|r| (r.start, r.end)).collect();
        assert_eq!(starts, vec![(1, 2), (2, 4), (4, 6), (6, 8)]);

        let c = run_structure(&circ("14536782"));
        let lens: Vec<usize> = c.runs.iter().map(Run::length).collect();
        assert_eq!(lens, vec![2, 1, 3, 2]);
        let spans: Vec<(usize, usize)> = c.runs.iter().map(|r| (r.start, r.end)).collect();
        assert_eq!(spans, vec![(1, 3), (3, 4), (4, 7), (7, 9)]);

        assert_eq!(run_structure(&lin("12")).structure, part(&[1]));
        assert_eq!(run_structure(&lin("1")).structure, Partition::empty());
    }

    #[test]
    fn runs_alternate() {
        let d = run_structure(&lin("52364178"));
        for w in d.runs.windows(2) {
            assert_ne!(w[0].direction, w[1].direction);
        }
    }

    #[test]
    fn circular_rotation_is_canonical() {
        let a = circ("45321");
        assert_eq!(a.word(), &[1, 4, 5, 3, 2]);
        assert_eq!(run_structure(&a), run_structure(&circ("14532")));
    }

    #[test]
    fn invalid_words() {
        assert!(matches!(
            Permutation::linear(vec![1, 2, 1]),
            Err(Error::DuplicateLetter(1))
        ));
        assert!(matches!(Permutation::linear(vec![]), Err(Error::EmptyWord)));
        assert!(Permutation::new(vec![2, 1, 3], PermutationKind::AtomicRising).is_err());
        assert!(Permutation::new(vec![3, 2, 1], PermutationKind::AtomicFalling).is_ok());
        assert!(Permutation::circular(vec![1]).is_err());
    }

    #[test]
    fn descent_examples() {
        let d: Vec<usize> = descent_set(&lin("52364178")).into_iter().collect();
        assert_eq!(d, vec![1, 4, 5]);
        let c: Vec<usize> = descent_set(&circ("14536782")).into_iter().collect();
        assert_eq!(c, vec![3, 7, 8]);
        assert!(descent_set(&lin("123")).is_empty());
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&BTreeSet::new(), 5).unwrap(), BigInt::from(1));
        assert_eq!(beta(&BTreeSet::from([1]), 3).unwrap(), BigInt::from(2));
        assert_eq!(beta(&BTreeSet::from([1, 2]), 3).unwrap(), BigInt::from(1));
        assert!(beta(&BTreeSet::from([3]), 3).is_err());
    }

    #[test]
    fn atom_examples() {
        let atoms = decompose_atoms(&circ("14532")).unwrap();
        let words: Vec<&[u32]> = atoms.iter().map(Permutation::word).collect();
        assert_eq!(words, vec![&[1, 4, 5][..], &[5, 3, 2, 1][..]]);
        let atoms = decompose_atoms(&lin("12")).unwrap();
        assert_eq!(atoms.len(), 1);
        let atoms = decompose_atoms(&lin("231")).unwrap();
        let words: Vec<&[u32]> = atoms.iter().map(Permutation::word).collect();
        assert_eq!(words, vec![&[2, 3][..], &[3, 1][..]]);
        assert_eq!(atoms[0].kind(), PermutationKind::AtomicRising);
        assert_eq!(atoms[1].kind(), PermutationKind::AtomicFalling);
    }

    #[test]
    fn principal_atom_examples() {
        let pa = principal_atom(&lin("3142")).unwrap();
        assert_eq!(pa.atom.word(), &[1, 4]);
        assert_eq!(pa.prefix, vec![3]);
        assert_eq!(pa.suffix, vec![2]);
        assert_eq!(pa.residual.word(), &[3, 1, 2]);

        let pa = principal_atom(&lin("12345")).unwrap();
        assert_eq!(pa.atom.word(), &[1, 2, 3, 4, 5]);
        assert!(pa.prefix.is_empty() && pa.suffix.is_empty());
    }

    #[test]
    fn reverse_letters_is_involution() {
        let w = vec![7, 2, 9, 4];
        assert_eq!(reverse_letters(&w), vec![4, 9, 2, 7]);
        assert_eq!(reverse_letters(&reverse_letters(&w)), w);
    }

    #[test]
    fn valley_examples() {
        assert_eq!(count_valleys(&lin("12345")).unwrap(), 0);
        assert_eq!(count_valleys(&lin("213")).unwrap(), 1);
        let t = tally_valleys(4, &OracleConfig::default()).unwrap();
        assert_eq!(t, vec![8, 16]);
    }

    #[test]
    fn tally_examples() {
        let cfg = OracleConfig::default();
        let c4 = tally_run_structures(PermutationKind::Circular, 4, &cfg).unwrap();
        assert_eq!(
            c4,
            BTreeMap::from([(part(&[2, 2]), 2), (part(&[3, 1]), 2), (part(&[1, 1, 1, 1]), 2)])
        );
        let a5 = tally_run_structures(PermutationKind::AtomicRising, 5, &cfg).unwrap();
        assert_eq!(a5, BTreeMap::from([(part(&[4]), 1), (part(&[2, 1, 1]), 5)]));
        let f5 = tally_run_structures(PermutationKind::AtomicFalling, 5, &cfg).unwrap();
        assert_eq!(a5, f5);
        let l3 = tally_run_structures(PermutationKind::Linear, 3, &cfg).unwrap();
        assert_eq!(l3, BTreeMap::from([(part(&[2]), 2), (part(&[1, 1]), 4)]));
    }

    #[test]
    fn ceiling_is_enforced() {
        let cfg = OracleConfig {
            linear_ceiling: 5,
            ..OracleConfig::default()
        };
        match tally_run_structures(PermutationKind::Linear, 6, &cfg) {
            Err(Error::CeilingExceeded { n: 6, ceiling: 5, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn next_permutation_visits_all() {
        let mut v = vec![1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(v, vec![4, 3, 2, 1]);
    }
}
