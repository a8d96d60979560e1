//! Gray-code subset scan with incremental boundary and volume.
//!
//! Flipping vertex `v` into `S` changes `|∂S|` by `deg(v) - 2|N(v) ∩ S|`, so
//! each step costs a popcount. The free vertices are split into a high part
//! that indexes independent chunks and a low part walked in Gray-code order
//! inside each chunk.

use crate::exec::{fold_chunks, Exec};
use crate::graph::Graph;

/// Number of free vertices below which a scan is never split.
const MIN_PARALLEL_FREE: usize = 14;
/// Free vertices walked inside one chunk when splitting.
const CHUNK_FREE: usize = 12;

/// What a scan sees at each subset.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Visit {
    #[allow(dead_code)]
    pub mask: u64,
    pub size: u32,
    pub boundary: u32,
    pub volume: u32,
}

/// A minimisation objective over subsets. `ratio` returns the candidate value
/// as `num / den` (den > 0) or `None` if the subset is out of range;
/// `admissible` is only consulted for subsets that would improve the incumbent.
pub(crate) trait Objective: Sync {
    fn ratio(&self, v: &Visit) -> Option<(u64, u64)>;
    fn admissible(&self, _mask: u64) -> bool {
        true
    }
}

/// Incumbent. Ordered by value, then by mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Best {
    pub num: u64,
    pub den: u64,
    pub mask: u64,
    pub boundary: u32,
    pub found: bool,
    pub scanned: u64,
}

impl Best {
    pub const NONE: Best = Best { num: 0, den: 1, mask: 0, boundary: 0, found: false, scanned: 0 };

    #[inline]
    fn beats(&self, num: u64, den: u64, mask: u64) -> bool {
        if !self.found {
            return true;
        }
        // numerators and denominators stay below 2^16 for n <= 64
        let lhs = num * self.den;
        let rhs = self.num * den;
        lhs < rhs || (lhs == rhs && mask < self.mask)
    }

    pub fn merge(a: Best, b: Best) -> Best {
        let scanned = a.scanned + b.scanned;
        let mut out = match (a.found, b.found) {
            (false, _) => b,
            (_, false) => a,
            _ if a.beats(b.num, b.den, b.mask) => b,
            _ => a,
        };
        out.scanned = scanned;
        out
    }
}

/// Minimises `obj` over all subsets `fixed ∪ T` with `T ⊆ free`.
pub(crate) fn scan_min<O: Objective>(exec: Exec, g: &Graph, free: &[usize], fixed: u64, obj: &O) -> Best {
    let split = if exec.is_parallel() && free.len() >= MIN_PARALLEL_FREE {
        free.len() - CHUNK_FREE
    } else {
        0
    };
    let (low, high) = free.split_at(free.len() - split);
    let run = |range: std::ops::Range<u64>| {
        let mut best = Best::NONE;
        for code in range {
            let mut base = fixed;
            for (k, &v) in high.iter().enumerate() {
                if code >> k & 1 == 1 {
                    base |= 1 << v;
                }
            }
            walk_dispatch(g, low, base, obj, &mut best);
        }
        best
    };
    fold_chunks(exec, 1u64 << high.len(), 1, Best::NONE, run, Best::merge)
}

/// Uses a copy of `walk` compiled with hardware popcount when the CPU has it.
#[inline]
fn walk_dispatch<O: Objective>(g: &Graph, free: &[usize], base: u64, obj: &O, best: &mut Best) {
    #[cfg(target_arch = "x86_64")]
    if std::is_x86_feature_detected!("popcnt") {
        // SAFETY: the feature was detected at runtime.
        unsafe { walk_popcnt(g, free, base, obj, best) };
        return;
    }
    walk(g, free, base, obj, best);
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "popcnt")]
unsafe fn walk_popcnt<O: Objective>(g: &Graph, free: &[usize], base: u64, obj: &O, best: &mut Best) {
    walk(g, free, base, obj, best);
}

#[inline(always)]
fn walk<O: Objective>(g: &Graph, free: &[usize], base: u64, obj: &O, best: &mut Best) {
    let mut mask = base;
    let mut boundary = 0u32;
    let mut volume = 0u32;
    for v in crate::graph::bits(base) {
        volume += g.degree(v) as u32;
        boundary += (g.neighbors(v) & !base).count_ones();
    }
    let mut size = base.count_ones();
    let consider = |mask: u64, size: u32, boundary: u32, volume: u32, best: &mut Best| {
        let visit = Visit { mask, size, boundary, volume };
        if let Some((num, den)) = obj.ratio(&visit) {
            if best.beats(num, den, mask) && obj.admissible(mask) {
                *best = Best { num, den, mask, boundary, found: true, scanned: best.scanned };
            }
        }
    };
    consider(mask, size, boundary, volume, best);
    let steps = 1u64 << free.len();
    for i in 1..steps {
        let v = free[i.trailing_zeros() as usize];
        let bit = 1u64 << v;
        let nb = g.neighbors(v);
        let deg = nb.count_ones();
        if mask & bit == 0 {
            boundary = boundary + deg - 2 * (nb & mask).count_ones();
            volume += deg;
            size += 1;
        } else {
            boundary = boundary + 2 * (nb & mask).count_ones() - deg;
            volume -= deg;
            size -= 1;
        }
        mask ^= bit;
        consider(mask, size, boundary, volume, best);
    }
    best.scanned += steps;
}
