//! Partial Bell polynomials and the closed antipode formulas for sets and
//! pointed sets.

use super::{binomial, factorial, PowerSeries};
use crate::algebra::{rat, Coeff, Polynomial};
use crate::error::{Error, Result};
use crate::structures::Structure;

/// `t_n` in the Hopf algebra of sets; `t_1 = 1`.
pub fn set_generator(n: usize) -> Polynomial {
    if n == 1 {
        Polynomial::one()
    } else {
        Polynomial::generator(Structure::set(1..=n as u32).key())
    }
}

/// `t_n` in the Hopf algebra of pointed sets; `t_1 = 1`.
pub fn pointed_generator(n: usize) -> Polynomial {
    if n == 1 {
        Polynomial::one()
    } else {
        Polynomial::generator(Structure::pointed_set(1..=n as u32, 1).key())
    }
}

/// `B_{n,k}` by the recurrence on the block holding the first element.
/// Arguments past `args.len()` count as zero.
fn bell(n: usize, k: usize, args: &[Polynomial]) -> Polynomial {
    let mut table = vec![vec![Polynomial::zero(); k + 1]; n + 1];
    table[0][0] = Polynomial::one();
    for m in 1..=n {
        for j in 1..=k.min(m) {
            let mut c = Polynomial::zero();
            for i in 1..=m - j + 1 {
                let Some(x) = args.get(i - 1) else { break };
                if x.is_zero() || table[m - i][j - 1].is_zero() {
                    continue;
                }
                c += (x * &table[m - i][j - 1]).scale(&binomial(m - 1, i - 1));
            }
            table[m][j] = c;
        }
    }
    table[n][k].clone()
}

/// Partial Bell polynomial `B_{n,k}(x₁, x₂, …)`, the inventory of partitions
/// of `[n]` into `k` blocks where a block of size `i` weighs `xᵢ`.
pub fn bell_partial(n: usize, k: usize, args: &[Polynomial]) -> Result<Polynomial> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("B_{{{n},{k}}} needs 1 ≤ k ≤ n")));
    }
    Ok(bell(n, k, args))
}

/// `(0, t₂, t₃, …, t_len)` for sets.
fn set_args(len: usize) -> Vec<Polynomial> {
    (1..=len).map(|i| if i == 1 { Polynomial::zero() } else { set_generator(i) }).collect()
}

/// `S(t_n) = Σ_{k=1}^{n−1} (−1)^k B_{n+k−1,k}(0, t₂, t₃, …)`.
pub fn haiman_schmitt(n: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::Range("the closed formula starts at n = 2".into()));
    }
    let mut s = Polynomial::zero();
    for k in 1..n {
        let b = bell(n + k - 1, k, &set_args(n + k - 1));
        s += if k % 2 == 1 { -b } else { b };
    }
    Ok(s)
}

fn range_check(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Range("the pointed formulas start at n = 2".into()));
    }
    Ok(())
}

/// `Σ_k (−1)^k (n+k−1)_k B_{n−1,k}(t₂, t₃, …)` over pointed-set generators,
/// which equals `n·S(t_n)`.
pub fn falling_factorial_bell_sum(n: usize) -> Result<Polynomial> {
    range_check(n)?;
    let args: Vec<Polynomial> = (2..=n).map(pointed_generator).collect();
    let mut s = Polynomial::zero();
    for k in 1..n {
        // (n+k−1)_k = (n+k−1)!/(n−1)!
        let falling = factorial(n + k - 1) / factorial(n - 1);
        let sign = if k % 2 == 1 { rat(-1) } else { rat(1) };
        s += bell(n - 1, k, &args).scale(&(sign * falling));
    }
    Ok(s)
}

/// `[x^{n−1}/(n−1)!] ((E•)^I(x)/x)^{−n}`, which equals `n·S(t_n)`.
pub fn lagrange_pointed(n: usize) -> Result<Polynomial> {
    range_check(n)?;
    let series = PowerSeries::from_coeffs(
        (0..=n).map(|i| if i == 0 { Polynomial::zero() } else { pointed_generator(i).scale(&rat(i as i64)) }).collect(),
        n,
    );
    Ok(series.div_x()?.powi(-(n as i64))?.coeff(n - 1))
}

/// Both sides of `B_{n,k}(0, 2t₂, 3t₃, …) = C(n,k) k! B_{n−k,k}(t₂, t₃, …)`.
pub fn pointed_bell_sides(n: usize, k: usize) -> Result<(Polynomial, Polynomial)> {
    if k < 1 || k > n {
        return Err(Error::Range(format!("B_{{{n},{k}}} needs 1 ≤ k ≤ n")));
    }
    let weighted: Vec<Polynomial> =
        (1..=n).map(|i| if i == 1 { Polynomial::zero() } else { set_generator(i).scale(&rat(i as i64)) }).collect();
    let shifted: Vec<Polynomial> = (2..=n + 1).map(set_generator).collect();
    let left = bell(n, k, &weighted);
    let right = if n - k >= k { bell(n - k, k, &shifted) } else { Polynomial::zero() };
    let c: Coeff = binomial(n, k) * factorial(k);
    Ok((left, right.scale(&c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{partitions, PartitionFilter};

    fn by_enumeration(n: usize, k: usize, args: &[Polynomial]) -> Polynomial {
        let labels: Vec<u32> = (1..=n as u32).collect();
        let filter = PartitionFilter { min_blocks: Some(k), max_blocks: Some(k), block_min_size: None };
        let mut s = Polynomial::zero();
        for p in partitions(&labels, filter) {
            let mut term = Polynomial::one();
            for b in p.iter() {
                term = term * args.get(b.len() - 1).cloned().unwrap_or_else(Polynomial::zero);
            }
            s += term;
        }
        s
    }

    #[test]
    fn bell_matches_enumeration() {
        let args: Vec<Polynomial> = (1..=7).map(set_generator).collect();
        for n in 1..=7 {
            for k in 1..=n {
                assert_eq!(bell_partial(n, k, &args).unwrap(), by_enumeration(n, k, &args), "B_{n},{k}");
            }
        }
        assert!(matches!(bell_partial(3, 0, &args), Err(Error::Range(_))));
        assert!(matches!(bell_partial(3, 4, &args), Err(Error::Range(_))));
    }

    #[test]
    fn bell_examples() {
        let t2 = set_generator(2);
        assert_eq!(bell_partial(3, 2, &[Polynomial::one(), t2.clone()]).unwrap(), t2.scale(&rat(3)));
        assert_eq!(bell_partial(4, 2, &set_args(3)).unwrap(), t2.pow(2).scale(&rat(3)));
        assert_eq!(bell_partial(5, 1, &set_args(5)).unwrap(), set_generator(5));
    }

    #[test]
    fn closed_formulas_small_cases() {
        let (t2, t3) = (set_generator(2), set_generator(3));
        assert_eq!(haiman_schmitt(2).unwrap(), -t2.clone());
        assert_eq!(haiman_schmitt(3).unwrap(), -t3 + t2.pow(2).scale(&rat(3)));
        assert!(haiman_schmitt(1).is_err());
        let p2 = pointed_generator(2);
        assert_eq!(lagrange_pointed(2).unwrap(), p2.scale(&rat(-2)));
        assert_eq!(falling_factorial_bell_sum(2).unwrap(), p2.scale(&rat(-2)));
        let (l, r) = pointed_bell_sides(4, 2).unwrap();
        assert_eq!(l, t2.pow(2).scale(&rat(12)));
        assert_eq!(l, r);
    }
}
