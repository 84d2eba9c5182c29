//! The path-construction codec: a bijection between labeled trees on n
//! vertices and codewords of length n-2 over the alphabet {0, ..., n-1}.
//!
//! A tree is built as a sequence of paths. The first path runs from vertex 1
//! to vertex 2; every later path attaches to an already-drawn vertex and ends
//! at the lowest label not yet drawn (the *reserved terminal*). A codeword
//! records, position by position, which choice was taken:
//!
//! * at position s, a value in {0, ..., s} is a **branch event**: the open
//!   path closes at its reserved terminal and a new path starts at the
//!   (value+1)-th drawn vertex (draw order);
//! * a value in {s+1, ..., n-1} is a **label event**: the open path extends
//!   by the (value-s)-th smallest label that is neither drawn nor reserved.
//!
//! Every value in [0, n) is valid at every position, so the code space is a
//! product set of size n^(n-2), and decoding is total on it.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fenwick::LabelSet;
use crate::tree::LabeledTree;

/// A codeword: max(n-2, 0) values, each in [0, n). One tree per code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    n: usize,
    values: Vec<usize>,
}

impl Code {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidVertexCount { got: n, min: 1 });
        }
        let expected = n.saturating_sub(2);
        if values.len() != expected {
            return Err(Error::MalformedCode(format!(
                "expected {expected} values for n = {n}, got {}",
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= n) {
            return Err(Error::MalformedCode(format!(
                "value {v} out of range [0, {n})"
            )));
        }
        Ok(Code { n, values })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

/// One step of the construction, as replayed by the decoder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Close the open path and start a new one at the `attach_index`-th
    /// drawn vertex (1-based draw order). At position s, 1 <= attach_index <= s+1.
    Branch { attach_index: usize },
    /// Extend the open path by `label`, which must be neither drawn nor
    /// the currently reserved terminal.
    Label { label: usize },
}

/// The decoded step sequence of a code: n-2 branch/label events.
/// Branch events at position s carry the construction's path-closing sizes
/// s+1; their positions are exactly where the open path changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    n: usize,
    steps: Vec<Step>,
}

impl ConstructionTrace {
    pub fn new(n: usize, steps: Vec<Step>) -> Result<Self> {
        let trace = ConstructionTrace { n, steps };
        trace.replay()?;
        Ok(trace)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The path-closing sizes s+1 at branch positions s, ascending.
    /// (The final close at n is implied and not listed.)
    pub fn branch_values(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter_map(|(i, step)| match step {
                Step::Branch { .. } => Some(i + 2),
                Step::Label { .. } => None,
            })
            .collect()
    }

    /// Validates the steps by simulating the construction, returning the
    /// code values they correspond to.
    fn replay(&self) -> Result<Vec<usize>> {
        let n = self.n;
        if n < 1 {
            return Err(Error::InvalidVertexCount { got: n, min: 1 });
        }
        if self.steps.len() != n.saturating_sub(2) {
            return Err(Error::MalformedTrace(format!(
                "expected {} steps for n = {n}, got {}",
                n.saturating_sub(2),
                self.steps.len()
            )));
        }
        let mut values = Vec::with_capacity(self.steps.len());
        if n <= 2 {
            return Ok(values);
        }
        let mut undrawn = LabelSet::full(n);
        undrawn.remove(1);
        for (i, step) in self.steps.iter().enumerate() {
            let s = i + 1;
            match *step {
                Step::Branch { attach_index } => {
                    if attach_index < 1 || attach_index > s + 1 {
                        return Err(Error::MalformedTrace(format!(
                            "branch at position {s} attaches at {attach_index}, \
                             want 1..={}",
                            s + 1
                        )));
                    }
                    let reserved = undrawn.min();
                    undrawn.remove(reserved);
                    values.push(attach_index - 1);
                }
                Step::Label { label } => {
                    // the reserved terminal is the minimum undrawn label
                    if label > n || !undrawn.contains(label) || label == undrawn.min() {
                        return Err(Error::MalformedTrace(format!(
                            "label {label} at position {s} is drawn, reserved, \
                             or out of range"
                        )));
                    }
                    let rank_in_pool = undrawn.rank(label) - 1;
                    undrawn.remove(label);
                    values.push(s + rank_in_pool);
                }
            }
        }
        Ok(values)
    }
}

/// Runs the construction a code describes and returns the resulting tree.
pub fn decode(code: &Code) -> LabeledTree {
    let n = code.n;
    if n == 1 {
        return LabeledTree::new(1, []).expect("single-vertex tree");
    }
    let mut edges = Vec::with_capacity(n - 1);
    // draw order; vertex 1 is drawn first
    let mut drawn = Vec::with_capacity(n);
    drawn.push(1);
    let mut undrawn = LabelSet::full(n);
    undrawn.remove(1);
    let mut tip = 1;
    // invariant: the reserved terminal is the minimum undrawn label
    for (i, &v) in code.values.iter().enumerate() {
        let s = i + 1;
        if v <= s {
            // branch: close the open path at the reserved terminal, then
            // re-open at the (v+1)-th drawn vertex
            let reserved = undrawn.min();
            edges.push((tip, reserved));
            undrawn.remove(reserved);
            drawn.push(reserved);
            tip = drawn[v];
        } else {
            // label: extend by the (v-s)-th smallest undrawn non-reserved
            // label; skip rank 1, the reserved terminal itself
            let label = undrawn.select(v - s + 1);
            edges.push((tip, label));
            undrawn.remove(label);
            drawn.push(label);
            tip = label;
        }
    }
    edges.push((tip, undrawn.min()));
    LabeledTree::new(n, edges).expect("decoded edge set is a tree")
}

/// Decomposes a tree into the unique code that reconstructs it.
pub fn encode(tree: &LabeledTree) -> Code {
    let n = tree.vertex_count();
    if n <= 2 {
        return Code::new(n, Vec::new()).expect("empty code");
    }
    // parent pointers toward vertex 1; the drawn set always contains 1 and
    // stays connected, so the walk from any undrawn vertex up its ancestor
    // chain meets the drawn set exactly at the attachment vertex
    let adj = tree.adjacency();
    let mut parent = vec![0usize; n + 1];
    parent[1] = 1;
    let mut stack = vec![1];
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if parent[w] == 0 {
                parent[w] = u;
                stack.push(w);
            }
        }
    }

    let mut drawn = vec![false; n + 1];
    let mut draw_index = vec![0usize; n + 1];
    drawn[1] = true;
    draw_index[1] = 1;
    let mut drawn_count = 1;
    let mut undrawn = LabelSet::full(n);
    undrawn.remove(1);

    // interior of the path from the drawn set down to `target`, ordered
    // attachment-side first, plus the attachment vertex itself
    let walk_up = |target: usize, drawn: &[bool]| -> (Vec<usize>, usize) {
        let mut interior = Vec::new();
        let mut w = parent[target];
        while !drawn[w] {
            interior.push(w);
            w = parent[w];
        }
        interior.reverse();
        (interior, w)
    };

    let mut draw = |label: usize,
                    drawn: &mut Vec<bool>,
                    draw_index: &mut Vec<usize>,
                    undrawn: &mut LabelSet| {
        drawn[label] = true;
        drawn_count += 1;
        draw_index[label] = drawn_count;
        undrawn.remove(label);
    };

    let (first_interior, _) = walk_up(2, &drawn);
    let mut pending = first_interior.into_iter();
    let mut values = Vec::with_capacity(n - 2);
    for s in 1..=n - 2 {
        if let Some(label) = pending.next() {
            // label event: rank among undrawn excluding the reserved
            // terminal, which is the minimum undrawn label
            values.push(s + undrawn.rank(label) - 1);
            draw(label, &mut drawn, &mut draw_index, &mut undrawn);
        } else {
            // the open path is exhausted: close it at the reserved terminal
            let reserved = undrawn.min();
            draw(reserved, &mut drawn, &mut draw_index, &mut undrawn);
            let next_terminal = undrawn.min();
            let (interior, attachment) = walk_up(next_terminal, &drawn);
            values.push(draw_index[attachment] - 1);
            pending = interior.into_iter();
        }
    }
    Code::new(n, values).expect("encoder emits in-range values")
}

/// Replays a code and records each step with its concrete outcome.
pub fn trace_of_code(code: &Code) -> ConstructionTrace {
    let n = code.n;
    let mut steps = Vec::with_capacity(code.values.len());
    if n > 2 {
        let mut undrawn = LabelSet::full(n);
        undrawn.remove(1);
        for (i, &v) in code.values.iter().enumerate() {
            let s = i + 1;
            if v <= s {
                undrawn.remove(undrawn.min());
                steps.push(Step::Branch {
                    attach_index: v + 1,
                });
            } else {
                let label = undrawn.select(v - s + 1);
                undrawn.remove(label);
                steps.push(Step::Label { label });
            }
        }
    }
    ConstructionTrace { n, steps }
}

/// Inverse of [`trace_of_code`].
pub fn code_of_trace(trace: &ConstructionTrace) -> Result<Code> {
    Code::new(trace.n, trace.replay()?)
}

/// Position of a code in the lexicographic order of all codes for its n:
/// the code read as a big-endian base-n numeral.
pub fn code_rank(code: &Code) -> BigUint {
    let n = BigUint::from(code.n);
    let mut rank = BigUint::from(0u32);
    for &v in &code.values {
        rank = rank * &n + BigUint::from(v);
    }
    rank
}

/// Rank of a tree under the codec's canonical order: `code_rank(encode(t))`.
pub fn rank(tree: &LabeledTree) -> BigUint {
    code_rank(&encode(tree))
}

/// Number of codes (hence trees) for a given n: n^(n-2), with the n <= 2
/// degenerate cases both 1.
pub fn code_space_size(n: usize) -> BigUint {
    if n <= 2 {
        BigUint::from(1u32)
    } else {
        BigUint::from(n).pow(n as u32 - 2)
    }
}

/// Inverse of [`rank`]: the tree at position `r` in the canonical order.
pub fn unrank(n: usize, r: &BigUint) -> Result<LabeledTree> {
    if n < 1 {
        return Err(Error::InvalidVertexCount { got: n, min: 1 });
    }
    let bound = code_space_size(n);
    if *r >= bound {
        return Err(Error::RankOutOfRange {
            rank: r.clone(),
            bound,
        });
    }
    let len = n.saturating_sub(2);
    let mut values = vec![0usize; len];
    let base = BigUint::from(n);
    let mut rest = r.clone();
    for slot in values.iter_mut().rev() {
        let digit = &rest % &base;
        rest /= &base;
        *slot = digit.to_usize().expect("digit < n fits usize");
    }
    Ok(decode(&Code::new(n, values)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(n: usize, edges: &[(usize, usize)]) -> LabeledTree {
        LabeledTree::new(n, edges.iter().copied()).unwrap()
    }

    fn code(n: usize, values: &[usize]) -> Code {
        Code::new(n, values.to_vec()).unwrap()
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&code(3, &[0])), tree(3, &[(1, 2), (1, 3)]));
        assert_eq!(decode(&code(3, &[2])), tree(3, &[(1, 3), (2, 3)]));
        assert_eq!(decode(&code(2, &[])), tree(2, &[(1, 2)]));
        assert_eq!(
            decode(&code(4, &[2, 2])),
            tree(4, &[(1, 3), (2, 3), (2, 4)])
        );
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&tree(3, &[(1, 2), (2, 3)])).values(), &[1]);
        assert_eq!(encode(&tree(4, &[(1, 2), (1, 3), (1, 4)])).values(), &[0, 0]);
        assert_eq!(encode(&tree(4, &[(1, 2), (2, 3), (3, 4)])).values(), &[1, 2]);
        assert_eq!(encode(&tree(1, &[])).values(), &[] as &[usize]);
    }

    #[test]
    fn malformed_codes_rejected() {
        assert!(matches!(
            Code::new(3, vec![]),
            Err(Error::MalformedCode(_))
        ));
        assert!(matches!(
            Code::new(3, vec![3]),
            Err(Error::MalformedCode(_))
        ));
        assert!(matches!(
            Code::new(0, vec![]),
            Err(Error::InvalidVertexCount { .. })
        ));
    }

    #[test]
    fn trace_examples() {
        let tr = trace_of_code(&code(3, &[1]));
        assert_eq!(tr.steps(), &[Step::Branch { attach_index: 2 }]);
        let tr = trace_of_code(&code(3, &[2]));
        assert_eq!(tr.steps(), &[Step::Label { label: 3 }]);
        // round trip on the n=4 example
        let c = code(4, &[2, 2]);
        assert_eq!(code_of_trace(&trace_of_code(&c)).unwrap(), c);
    }

    #[test]
    fn trace_validation() {
        // attach index too large at position 1
        let err = ConstructionTrace::new(3, vec![Step::Branch { attach_index: 3 }]);
        assert!(matches!(err, Err(Error::MalformedTrace(_))));
        // label 2 is the reserved terminal at position 1
        let err = ConstructionTrace::new(3, vec![Step::Label { label: 2 }]);
        assert!(matches!(err, Err(Error::MalformedTrace(_))));
        // wrong number of steps
        let err = ConstructionTrace::new(4, vec![Step::Branch { attach_index: 1 }]);
        assert!(matches!(err, Err(Error::MalformedTrace(_))));
    }

    #[test]
    fn round_trips_exhaustive_small() {
        for n in 1..=6 {
            let mut seen = std::collections::HashSet::new();
            for values in all_codes(n) {
                let c = code(n, &values);
                let t = decode(&c);
                assert!(seen.insert(t.clone()), "n={n} collision at {values:?}");
                assert_eq!(encode(&t), c, "n={n} values={values:?}");
                assert_eq!(code_of_trace(&trace_of_code(&c)).unwrap(), c);
            }
            let expected = if n <= 2 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(seen.len(), expected);
        }
    }

    #[test]
    fn branch_positions_strictly_increase() {
        for values in all_codes(6) {
            let tr = trace_of_code(&code(6, &values));
            let ks = tr.branch_values();
            for pair in ks.windows(2) {
                assert!(pair[0] < pair[1]);
            }
            for &k in &ks {
                assert!((2..6).contains(&k));
            }
        }
    }

    #[test]
    fn labels_exceed_reserved_terminal() {
        // the reserved terminal is the minimum undrawn label, so every
        // label event must pick something larger
        for values in all_codes(6) {
            let c = code(6, &values);
            let mut min_undrawn = 2;
            let mut drawn = vec![false; 7];
            drawn[1] = true;
            for step in trace_of_code(&c).steps() {
                match *step {
                    Step::Label { label } => {
                        assert!(label > min_undrawn);
                        drawn[label] = true;
                    }
                    Step::Branch { .. } => {
                        drawn[min_undrawn] = true;
                        min_undrawn = (1..=6).find(|&v| !drawn[v]).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn rank_unrank_examples() {
        assert_eq!(
            unrank(3, &BigUint::from(0u32)).unwrap(),
            tree(3, &[(1, 2), (1, 3)])
        );
        assert_eq!(unrank(2, &BigUint::from(0u32)).unwrap(), tree(2, &[(1, 2)]));
        let t = unrank(4, &BigUint::from(11u32)).unwrap();
        assert_eq!(rank(&t), BigUint::from(11u32));
        assert!(matches!(
            unrank(3, &BigUint::from(3u32)),
            Err(Error::RankOutOfRange { .. })
        ));
    }

    #[test]
    fn rank_unrank_exhaustive_and_monotone() {
        for n in 1..=5 {
            let total = if n <= 2 { 1u32 } else { (n as u32).pow(n as u32 - 2) };
            let mut previous_code: Option<Vec<usize>> = None;
            for r in 0..total {
                let t = unrank(n, &BigUint::from(r)).unwrap();
                assert_eq!(rank(&t), BigUint::from(r));
                // rank order is the lexicographic order of codes
                let c = encode(&t).values().to_vec();
                if let Some(prev) = previous_code {
                    assert!(prev < c);
                }
                previous_code = Some(c);
            }
        }
    }

    fn all_codes(n: usize) -> Vec<Vec<usize>> {
        let len = n.saturating_sub(2);
        let mut out = Vec::new();
        let mut current = vec![0usize; len];
        loop {
            out.push(current.clone());
            let mut i = len;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                current[i] += 1;
                if current[i] < n {
                    break;
                }
                current[i] = 0;
            }
        }
    }
}
