use crate::sequence::DegreeSequence;

/// Even sum and, for every `k`, `S_k <= k(k-1) + ∑_{i>k} min(x_i, k)`.
pub fn erdos_gallai(x: &DegreeSequence) -> bool {
    if !x.sum().is_multiple_of(2) {
        return false;
    }
    let v = x.values();
    let mut prefix = 0;
    for k in 1..=v.len() {
        prefix += v[k - 1];
        let tail: usize = v[k..].iter().map(|&t| t.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}
