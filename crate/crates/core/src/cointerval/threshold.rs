use alloc::vec::Vec;

use crate::graph::Graph;

/// Peels isolated and universal vertices until nothing is left.
///
/// Removing a universal vertex lowers every remaining degree by one and
/// removing an isolated vertex changes nothing, so the degree order never
/// changes and two pointers over the sorted degrees suffice.
pub fn is_threshold(h: &Graph) -> bool {
    let mut degrees: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    degrees.sort_unstable();
    let (mut lo, mut hi) = (0usize, degrees.len());
    let mut peeled_universal = 0usize;
    while lo < hi {
        let remaining = hi - lo;
        if degrees[lo] == peeled_universal {
            lo += 1;
        } else if degrees[hi - 1] - peeled_universal == remaining - 1 {
            hi -= 1;
            peeled_universal += 1;
        } else {
            return false;
        }
    }
    true
}
