use crate::error::{Error, Result};

/// Default size limit for [`ordered_partition_counts`].
pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// `counts[k]` is the number of ordered set partitions of `{1..n}` into exactly
/// `k` blocks, found by enumerating every unordered partition (as a restricted
/// growth string) and weighting it by the `k!` orderings of its blocks.
pub fn ordered_partition_counts(n: usize, cap: usize) -> Result<Vec<u64>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut unordered = vec![0u64; n + 1];
    let mut labels = vec![0usize; n];
    assign(0, 0, &mut labels, &mut unordered);
    let mut block_orders = 1u64;
    Ok(unordered
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                block_orders *= k as u64;
            }
            c * block_orders
        })
        .collect())
}

fn assign(i: usize, blocks: usize, labels: &mut [usize], counts: &mut [u64]) {
    if i == labels.len() {
        counts[blocks] += 1;
        return;
    }
    // element i joins an existing block or opens block number `blocks`
    for b in 0..=blocks {
        labels[i] = b;
        assign(i + 1, blocks.max(b + 1), labels, counts);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(ordered_partition_counts(0, 10).unwrap(), vec![1]);
        assert_eq!(ordered_partition_counts(2, 10).unwrap(), vec![0, 1, 2]);
        assert_eq!(ordered_partition_counts(3, 10).unwrap(), vec![0, 1, 6, 6]);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            ordered_partition_counts(11, DEFAULT_ENUMERATION_CAP),
            Err(Error::CapExceeded { n: 11, cap: 10 })
        );
    }
}
