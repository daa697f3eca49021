use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::structures::Label;

/// A set monoid ν: N·N → N whose structures are label sequences.
///
/// For the set monoid the sequence is kept sorted; for the list monoid it is
/// the linear order itself.
pub trait Monoid: Send + Sync {
    fn name(&self) -> &'static str;

    fn nu(&self, left: &[Label], right: &[Label]) -> Vec<Label>;

    /// Every N-structure on `labels`.
    fn enumerate(&self, labels: &[Label]) -> Vec<Vec<Label>>;
}

/// E: disjoint union.
pub struct SetMonoid;

/// L: concatenation of linear orders.
pub struct ListMonoid;

impl Monoid for SetMonoid {
    fn name(&self) -> &'static str {
        "E"
    }

    fn nu(&self, left: &[Label], right: &[Label]) -> Vec<Label> {
        let mut v: Vec<Label> = left.iter().chain(right).copied().collect();
        v.sort_unstable();
        v
    }

    fn enumerate(&self, labels: &[Label]) -> Vec<Vec<Label>> {
        let mut v = labels.to_vec();
        v.sort_unstable();
        vec![v]
    }
}

impl Monoid for ListMonoid {
    fn name(&self) -> &'static str {
        "L"
    }

    fn nu(&self, left: &[Label], right: &[Label]) -> Vec<Label> {
        left.iter().chain(right).copied().collect()
    }

    fn enumerate(&self, labels: &[Label]) -> Vec<Vec<Label>> {
        labels.iter().copied().permutations(labels.len()).collect()
    }
}

/// ν̄(n₁, …, n_k) = ν(n₁, ν̄(n₂, …, n_k)), with ν̄(n) = n.
pub fn nu_bar(monoid: &dyn Monoid, parts: &[Vec<Label>]) -> Result<Vec<Label>> {
    let mut seen = BTreeSet::new();
    for u in parts.iter().flatten() {
        if !seen.insert(*u) {
            return Err(Error::LabelOverlap(format!("label {u} appears in two parts")));
        }
    }
    let Some((last, rest)) = parts.split_last() else {
        return Ok(vec![]);
    };
    Ok(rest.iter().rev().fold(last.clone(), |acc, n| monoid.nu(n, &acc)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn folds() {
        assert_eq!(nu_bar(&SetMonoid, &[vec![2, 1], vec![3]]).unwrap(), vec![1, 2, 3]);
        assert_eq!(nu_bar(&ListMonoid, &[vec![1, 2], vec![3]]).unwrap(), vec![1, 2, 3]);
        assert_eq!(nu_bar(&ListMonoid, &[vec![3], vec![1, 2], vec![0]]).unwrap(), vec![3, 1, 2, 0]);
        assert_eq!(nu_bar(&ListMonoid, &[vec![5, 4]]).unwrap(), vec![5, 4]);
        assert!(nu_bar(&SetMonoid, &[vec![1], vec![1]]).is_err());
    }

    #[test]
    fn associative() {
        let (a, b, c) = (vec![4, 1], vec![2], vec![5, 3]);
        for m in [&SetMonoid as &dyn Monoid, &ListMonoid] {
            assert_eq!(m.nu(&m.nu(&a, &b), &c), m.nu(&a, &m.nu(&b, &c)));
        }
        assert_eq!(ListMonoid.enumerate(&[1, 2, 3]).len(), 6);
    }
}
