//! Enumeration of non-increasing integer sequences of fixed length.

use crate::sequence::DegreeSequence;

/// All non-increasing sequences of length `len` with entries in
/// `min..=max` and total `sum`, in lexicographically descending order.
pub fn with_sum(len: usize, sum: usize, min: usize, max: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if len == 0 || min > max {
        return out;
    }
    let mut buf = Vec::with_capacity(len);
    fill(len, sum, min, max, &mut buf, &mut |v| {
        out.push(DegreeSequence::from_sorted(v.to_vec()).expect("generated non-increasing"))
    });
    out
}

/// All non-increasing sequences of length `len` with entries in `0..=max`,
/// in lexicographically descending order.
pub fn bounded(len: usize, max: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    if len == 0 {
        return out;
    }
    let mut buf = Vec::with_capacity(len);
    all(len, max, &mut buf, &mut out);
    out
}

fn all(len: usize, cap: usize, buf: &mut Vec<usize>, out: &mut Vec<DegreeSequence>) {
    if buf.len() == len {
        out.push(DegreeSequence::from_sorted(buf.clone()).expect("generated non-increasing"));
        return;
    }
    for v in (0..=cap).rev() {
        buf.push(v);
        all(len, v, buf, out);
        buf.pop();
    }
}

fn fill(len: usize, sum: usize, min: usize, cap: usize, buf: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    let left = len - buf.len();
    if left == 0 {
        if sum == 0 {
            emit(buf);
        }
        return;
    }
    // the remaining `left` slots hold between `left * min` and `left * cap`
    if sum < left * min || sum > left * cap {
        return;
    }
    let hi = cap.min(sum - (left - 1) * min);
    let lo = min.max(sum.div_ceil(left));
    for v in (lo..=hi).rev() {
        buf.push(v);
        fill(len, sum - v, min, v, buf, emit);
        buf.pop();
    }
}
