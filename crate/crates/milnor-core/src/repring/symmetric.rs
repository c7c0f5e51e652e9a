//! Partitions, cycle types and Murnaghan-Nakayama character values for the
//! symmetric groups.

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
pub type Partition = Vec<u32>;

/// All partitions of `n` in lexicographically decreasing order, so `(n)`
/// comes first and `(1^n)` last.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = max.min(n);
        for k in (1..=top).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(vec![]);
    } else {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn factorial(n: u32) -> u64 {
    (2..=n as u64).product::<u64>().max(1)
}

/// Size of the conjugacy class in S_n with the given cycle type:
/// n! / prod(k^{a_k} a_k!).
pub fn class_size(ct: &[u32], n: u32) -> u64 {
    debug_assert_eq!(ct.iter().sum::<u32>(), n);
    let mut z = 1u64;
    let mut run = 1u64;
    for (i, &k) in ct.iter().enumerate() {
        z *= k as u64;
        if i > 0 && ct[i - 1] == k {
            run += 1;
            z *= run;
        } else {
            run = 1;
        }
    }
    factorial(n) / z
}

/// Cycle type of the j-th power of a permutation with cycle type `ct`: a
/// k-cycle raised to the j-th power splits into gcd(k,j) cycles of length
/// k/gcd(k,j).
pub fn power_cycle_type(ct: &[u32], j: u32) -> Partition {
    let mut out = Vec::new();
    for &k in ct {
        let g = num::integer::gcd(k, j.max(1));
        let g = if j == 0 { k } else { g };
        for _ in 0..g {
            out.push(k / g);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

pub fn conjugate_partition(p: &[u32]) -> Partition {
    if p.is_empty() {
        return vec![];
    }
    (1..=p[0]).map(|i| p.iter().filter(|&&x| x >= i).count() as u32).collect()
}

/// Sign of a permutation of cycle type `ct`.
pub fn sign_of_cycle_type(ct: &[u32]) -> i64 {
    let transpositions: u32 = ct.iter().map(|&k| k - 1).sum();
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Murnaghan-Nakayama evaluation of the irreducible character chi^lambda on
/// the class of cycle type `ct`. Works with the beta-set (first-column hook
/// length) encoding: removing a rim hook of length k moves a beta number
/// down by k, with sign given by the number of beta numbers jumped over.
pub fn mn_value(lambda: &[u32], ct: &[u32]) -> Result<i64> {
    let n: u32 = lambda.iter().sum();
    let m: u32 = ct.iter().sum();
    if n != m {
        return Err(Error::ShapeMismatch(format!(
            "partition of {n} evaluated on cycle type of {m}"
        )));
    }
    let len = lambda.len();
    let mut beta: Vec<i64> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part as i64 + (len - 1 - i) as i64)
        .collect();
    beta.sort_unstable();
    let mut cycles: Vec<u32> = ct.to_vec();
    cycles.sort_unstable();
    Ok(mn_rec(&beta, &cycles))
}

fn mn_rec(beta: &[i64], cycles: &[u32]) -> i64 {
    let Some((&k, rest)) = cycles.split_last() else {
        return 1;
    };
    let k = k as i64;
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        let target = b - k;
        if target < 0 || beta.binary_search(&target).is_ok() {
            continue;
        }
        // count beta numbers strictly between target and b
        let lo = beta.partition_point(|&x| x <= target);
        let jumped = pos - lo;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<i64> = beta.to_vec();
        next[pos] = target;
        next.sort_unstable();
        total += sign * mn_rec(&next, rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(partitions(4)[0], vec![4]);
        assert_eq!(partitions(4)[4], vec![1, 1, 1, 1]);
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=7 {
            let total: u64 = partitions(n).iter().map(|ct| class_size(ct, n)).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn trivial_and_sign_characters() {
        for ct in partitions(6) {
            assert_eq!(mn_value(&[6], &ct).unwrap(), 1);
            assert_eq!(mn_value(&[1; 6], &ct).unwrap(), sign_of_cycle_type(&ct));
        }
    }

    #[test]
    fn hook_dimension() {
        // chi^{(2,1)} at the identity = 2
        assert_eq!(mn_value(&[2, 1], &[1, 1, 1]).unwrap(), 2);
        // reflection character of S_4 at (2,2) = fixed points - 1 = -1
        assert_eq!(mn_value(&[3, 1], &[2, 2]).unwrap(), -1);
    }

    #[test]
    fn power_cycle_types() {
        assert_eq!(power_cycle_type(&[4, 1], 2), vec![2, 2, 1]);
        assert_eq!(power_cycle_type(&[3, 3], 3), vec![1; 6]);
        assert_eq!(power_cycle_type(&[5], 0), vec![1; 5]);
        assert_eq!(power_cycle_type(&[5], 2), vec![5]);
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate_partition(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate_partition(&[2, 2]), vec![2, 2]);
    }
}
