// Gray-code walk over vertex subsets that always contain vertex 0.
//
// Rank k in [0, 2^(n-1)) maps to the mask 1 | gray(k) << 1. Consecutive ranks
// differ in one vertex, so the crossing weight of the cut and the sum of a
// per-vertex quantity over the subset update in O(n).

const RESYNC_EVERY: u64 = 4096;

#[inline]
pub(crate) fn mask_at(rank: u64) -> u64 {
    1 | ((rank ^ (rank >> 1)) << 1)
}

/// Crossing weight `sum_{i in X, j not in X} w_ij` computed from scratch.
pub(crate) fn fresh_cut(n: usize, w: &[f64], mask: u64) -> f64 {
    let mut cut = 0.0;
    for i in 0..n {
        if mask >> i & 1 == 0 {
            continue;
        }
        for j in 0..n {
            if mask >> j & 1 == 0 {
                cut += w[i * n + j];
            }
        }
    }
    cut
}

pub(crate) fn fresh_side_sum(n: usize, per_vertex: &[f64], mask: u64) -> f64 {
    (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| per_vertex[i]).sum()
}

/// Lexicographic order of the ascending member lists of two masks.
pub(crate) fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let d = (a ^ b).trailing_zeros();
    let above = |m: u64| d < 63 && (m >> (d + 1)) != 0;
    if a >> d & 1 == 1 {
        above(b)
    } else {
        !above(a)
    }
}

pub(crate) struct CutWalker<'a> {
    n: usize,
    w: &'a [f64],
    per_vertex: &'a [f64],
    rank: u64,
    pub mask: u64,
    pub cut: f64,
    pub side_sum: f64,
}

impl<'a> CutWalker<'a> {
    pub fn new(n: usize, w: &'a [f64], per_vertex: &'a [f64], rank: u64) -> Self {
        let mask = mask_at(rank);
        Self {
            n,
            w,
            per_vertex,
            rank,
            mask,
            cut: fresh_cut(n, w, mask),
            side_sum: fresh_side_sum(n, per_vertex, mask),
        }
    }

    pub fn advance(&mut self) {
        self.rank += 1;
        let v = (self.rank.trailing_zeros() + 1) as usize;
        if self.rank.is_multiple_of(RESYNC_EVERY) {
            self.mask = mask_at(self.rank);
            self.cut = fresh_cut(self.n, self.w, self.mask);
            self.side_sum = fresh_side_sum(self.n, self.per_vertex, self.mask);
            return;
        }
        let row = &self.w[v * self.n..(v + 1) * self.n];
        let (mut inside, mut outside) = (0.0, 0.0);
        for (j, &wj) in row.iter().enumerate() {
            if j == v || wj == 0.0 {
                continue;
            }
            if self.mask >> j & 1 == 1 {
                inside += wj;
            } else {
                outside += wj;
            }
        }
        if self.mask >> v & 1 == 1 {
            self.cut += inside - outside;
            self.side_sum -= self.per_vertex[v];
        } else {
            self.cut += outside - inside;
            self.side_sum += self.per_vertex[v];
        }
        self.mask ^= 1 << v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn members(m: u64) -> Vec<u32> {
        (0..64).filter(|&i| m >> i & 1 == 1).collect()
    }

    #[test]
    fn lex_order_matches_lists() {
        for a in 1u64..256 {
            for b in 1u64..256 {
                assert_eq!(lex_less(a, b), members(a) < members(b), "{a:b} vs {b:b}");
            }
        }
    }

    #[test]
    fn walker_visits_every_subset_with_correct_cut() {
        let n = 7;
        let w: Vec<f64> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                ((i * 7 + j * 7 + i * j) % 5) as f64 * 0.25
            })
            .collect();
        let per: Vec<f64> = (0..n).map(|i| i as f64 + 0.5).collect();
        let mut seen = Vec::new();
        let mut walker = CutWalker::new(n, &w, &per, 0);
        for rank in 0..1u64 << (n - 1) {
            if rank > 0 {
                walker.advance();
            }
            assert_eq!(walker.mask, mask_at(rank));
            assert!((walker.cut - fresh_cut(n, &w, walker.mask)).abs() < 1e-12);
            assert!((walker.side_sum - fresh_side_sum(n, &per, walker.mask)).abs() < 1e-12);
            seen.push(walker.mask);
        }
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len(), 1 << (n - 1));
        assert!(seen.iter().all(|m| m & 1 == 1));
    }
}
