//! Natural merge sort seeded by the monotone blocks already present in the input.
//!
//! Two run conventions appear here. The sorter splits the input into disjoint
//! maximal monotone blocks (`542368719` becomes `542 | 368 | 71 | 9`), while
//! [`run_profile`] reports alternating runs as intervals that share their
//! endpoints (`542368719` has runs `542`, `2368`, `871`, `19` of lengths
//! 2, 3, 2, 1). Equal neighbours never end a run in either convention.

use std::cmp::Ordering;

use serde::Serialize;

use crate::partition::Partition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SortStats {
    /// Number of disjoint monotone blocks found in the input.
    pub initial_runs: usize,
    pub merge_passes: usize,
    /// Key comparisons, including those spent on block detection.
    pub comparisons: u64,
    /// Elements written into merge buffers.
    pub element_moves: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Block {
    start: usize,
    end: usize,
    descending: bool,
}

struct Counter(u64);

impl Counter {
    fn cmp<T: Ord>(&mut self, a: &T, b: &T) -> Ordering {
        self.0 += 1;
        a.cmp(b)
    }
}

fn blocks<T: Ord>(input: &[T], counter: &mut Counter) -> Vec<Block> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < input.len() {
        let mut end = start + 1;
        let mut direction = Ordering::Equal;
        while end < input.len() {
            let step = counter.cmp(&input[end - 1], &input[end]);
            if step != Ordering::Equal && direction != Ordering::Equal && step != direction {
                break;
            }
            if direction == Ordering::Equal {
                direction = step;
            }
            end += 1;
        }
        out.push(Block {
            start,
            end,
            descending: direction == Ordering::Greater,
        });
        start = end;
    }
    out
}

/// Merges two ascending sequences into `out`.
fn merge_into<'a, T, I, J>(a: I, b: J, out: &mut Vec<T>, counter: &mut Counter)
where
    T: Ord + Clone + 'a,
    I: Iterator<Item = &'a T>,
    J: Iterator<Item = &'a T>,
{
    let mut a = a.peekable();
    let mut b = b.peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => {
                if counter.cmp(*y, *x) == Ordering::Less {
                    out.push((*y).clone());
                    b.next();
                } else {
                    out.push((*x).clone());
                    a.next();
                }
            }
            (Some(_), None) => out.extend(a.by_ref().cloned()),
            (None, Some(_)) => out.extend(b.by_ref().cloned()),
            (None, None) => break,
        }
    }
}

fn ascending<'a, T>(input: &'a [T], block: Block) -> Box<dyn Iterator<Item = &'a T> + 'a> {
    let slice = &input[block.start..block.end];
    if block.descending {
        Box::new(slice.iter().rev())
    } else {
        Box::new(slice.iter())
    }
}

/// Sorts ascending by balanced pairwise merging of the input's monotone blocks.
///
/// Descending blocks are read back to front instead of being reversed first.
/// The sort is not stable.
pub fn natural_merge_sort<T: Ord + Clone>(input: &[T]) -> (Vec<T>, SortStats) {
    let mut counter = Counter(0);
    let found = blocks(input, &mut counter);
    let mut stats = SortStats {
        initial_runs: found.len(),
        ..SortStats::default()
    };
    if found.len() <= 1 {
        let out: Vec<T> = match found.first() {
            Some(&b) => ascending(input, b).cloned().collect(),
            None => Vec::new(),
        };
        stats.comparisons = counter.0;
        stats.element_moves = out.len() as u64;
        return (out, stats);
    }

    // first pass reads straight from the input
    let mut buf: Vec<T> = Vec::with_capacity(input.len());
    let mut bounds: Vec<usize> = vec![0];
    for pair in found.chunks(2) {
        match pair {
            [x, y] => merge_into(ascending(input, *x), ascending(input, *y), &mut buf, &mut counter),
            [x] => buf.extend(ascending(input, *x).cloned()),
            _ => unreachable!(),
        }
        bounds.push(buf.len());
    }
    stats.merge_passes = 1;

    while bounds.len() > 2 {
        let mut next: Vec<T> = Vec::with_capacity(buf.len());
        let mut next_bounds = vec![0];
        for i in (0..bounds.len() - 1).step_by(2) {
            let (lo, mid) = (bounds[i], bounds[i + 1]);
            match bounds.get(i + 2) {
                Some(&hi) => merge_into(
                    buf[lo..mid].iter(),
                    buf[mid..hi].iter(),
                    &mut next,
                    &mut counter,
                ),
                None => next.extend(buf[lo..mid].iter().cloned()),
            }
            next_bounds.push(next.len());
        }
        buf = next;
        bounds = next_bounds;
        stats.merge_passes += 1;
    }
    stats.comparisons = counter.0;
    stats.element_moves = (input.len() * stats.merge_passes) as u64;
    (buf, stats)
}

/// Multiset of alternating-run lengths, runs measured as intervals `j - i`.
///
/// The lengths sum to `len - 1`. Equal neighbours extend the current run.
pub fn run_profile<T: Ord>(input: &[T]) -> Partition {
    let mut lengths = Vec::new();
    let mut direction = Ordering::Equal;
    let mut current = 0u32;
    for w in input.windows(2) {
        let step = w[0].cmp(&w[1]);
        if step != Ordering::Equal && direction != Ordering::Equal && step != direction {
            lengths.push(current);
            current = 0;
        }
        if step != Ordering::Equal {
            direction = step;
        }
        current += 1;
    }
    if current > 0 {
        lengths.push(current);
    }
    Partition::new(lengths).expect("run lengths are positive")
}
