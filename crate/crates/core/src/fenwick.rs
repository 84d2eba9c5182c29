//! Order-statistics set over vertex labels, backed by a Fenwick tree.
//!
//! The codec needs three queries on the set of not-yet-drawn labels:
//! rank of a member, k-th smallest member, and removal. All are O(log n).

pub(crate) struct LabelSet {
    bit: Vec<u32>,
    present: Vec<bool>,
    len: usize,
    mask: usize,
}

impl LabelSet {
    /// Set containing every label in 1..=n.
    pub(crate) fn full(n: usize) -> Self {
        let mut set = LabelSet {
            bit: vec![0; n + 1],
            present: vec![false; n + 1],
            len: 0,
            mask: usize::MAX >> (n + 1).leading_zeros(),
        };
        for v in 1..=n {
            set.present[v] = true;
            set.len += 1;
            let mut i = v;
            while i < set.bit.len() {
                set.bit[i] += 1;
                i += i & i.wrapping_neg();
            }
        }
        set
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn contains(&self, v: usize) -> bool {
        self.present[v]
    }

    pub(crate) fn remove(&mut self, v: usize) {
        debug_assert!(self.present[v]);
        self.present[v] = false;
        self.len -= 1;
        let mut i = v;
        while i < self.bit.len() {
            self.bit[i] -= 1;
            i += i & i.wrapping_neg();
        }
    }

    /// 1-based rank of a member among the present labels in ascending order.
    pub(crate) fn rank(&self, v: usize) -> usize {
        debug_assert!(self.present[v]);
        let mut i = v;
        let mut sum = 0usize;
        while i > 0 {
            sum += self.bit[i] as usize;
            i -= i & i.wrapping_neg();
        }
        sum
    }

    /// k-th smallest present label, 1-based. Requires 1 <= k <= len.
    pub(crate) fn select(&self, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.len);
        let mut pos = 0usize;
        let mut remaining = k;
        let mut step = (self.mask + 1) >> 1;
        while step > 0 {
            let next = pos + step;
            if next < self.bit.len() && (self.bit[next] as usize) < remaining {
                pos = next;
                remaining -= self.bit[next] as usize;
            }
            step >>= 1;
        }
        pos + 1
    }

    /// Smallest present label. Requires a non-empty set.
    pub(crate) fn min(&self) -> usize {
        self.select(1)
    }
}
