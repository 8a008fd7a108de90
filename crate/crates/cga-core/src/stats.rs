//! Small statistics helpers: means, average ranks, Spearman correlation.

pub fn mean(xs: &[f64]) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// 1-based ranks; tied values share the average of their rank block.
pub fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| xs[a].partial_cmp(&xs[b]).unwrap_or(std::cmp::Ordering::Equal));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        // positions i..=j(0-based) share the average of ranks i+1..=j+1
        let avg = (i + j + 2) as f64 / 2.0;
        for k in i..=j {
            ranks[idx[k]] = avg;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(a: &[f64], b: &[f64]) -> f64 {
    let n = a.len() as f64;
    let ma = mean(a);
    let mb = mean(b);
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        let dx = x - ma;
        let dy = y - mb;
        cov += dx * dy;
        va += dx * dx;
        vb += dy * dy;
    }
    if va <= 0.0 || vb <= 0.0 || n < 2.0 {
        return 0.0;
    }
    // sqrt(va * vb) keeps perfect correlations at exactly +-1 (cov == +-va
    // and sqrt of a rounded square is exact); clamp guards the rest
    (cov / (va * vb).sqrt()).clamp(-1.0, 1.0)
}

/// Spearman rank correlation with average ranks for ties. Zero-variance
/// inputs yield 0 by convention.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len(), "paired samples required");
    if xs.len() < 2 {
        return 0.0;
    }
    pearson(&average_ranks(xs), &average_ranks(ys))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_without_ties_are_a_permutation() {
        let r = average_ranks(&[10.0, -4.0, 7.0]);
        assert_eq!(r, vec![3.0, 1.0, 2.0]);
    }

    #[test]
    fn tie_blocks_share_the_average() {
        let r = average_ranks(&[5.0, 5.0, 5.0]);
        assert_eq!(r, vec![2.0, 2.0, 2.0]);
        let r = average_ranks(&[1.0, 3.0, 3.0, 3.0, 9.0]);
        assert_eq!(r, vec![1.0, 3.0, 3.0, 3.0, 5.0]);
    }

    #[test]
    fn spearman_is_insensitive_to_monotone_warps() {
        let xs: [f64; 5] = [0.1, 0.7, 2.0, 5.0, 9.0];
        let warped: Vec<f64> = xs.iter().map(|v| v.exp()).collect();
        assert_eq!(spearman(&xs, &warped), 1.0);
    }

    #[test]
    fn mean_of_empty_is_zero() {
        assert_eq!(mean(&[]), 0.0);
    }
}
