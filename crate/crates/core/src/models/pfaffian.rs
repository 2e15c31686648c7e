use std::collections::HashMap;

use num_traits::{One, Zero};

use super::SkewMatrix;
use crate::polyalg::GaussianRational;

/// Pfaffian by expansion along the first remaining row:
///
/// `Pf(A) = Σ_{t ≥ 1} (-1)^(t+1) a_{s0 s_t} Pf(A without rows/cols s0, s_t)`,
///
/// memoized on the set of remaining indices.
pub fn pfaffian(a: &SkewMatrix) -> GaussianRational {
    let n = a.size();
    assert!(n <= 64, "pfaffian supports sizes up to 64");
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo = HashMap::new();
    expand(a, full, &mut memo)
}

fn expand(a: &SkewMatrix, set: u64, memo: &mut HashMap<u64, GaussianRational>) -> GaussianRational {
    if set == 0 {
        return GaussianRational::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let m = a.matrix();
    let first = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << first);
    let mut acc = GaussianRational::zero();
    let mut bits = rest;
    let mut t = 1usize;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let entry = &m[(first, j)];
        if !entry.is_zero() {
            let minor = expand(a, rest & !(1u64 << j), memo);
            let term = entry * &minor;
            if t % 2 == 1 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        t += 1;
    }
    memo.insert(set, acc.clone());
    acc
}

/// `det(A) = Pf(A)²`.
pub fn det_via_pfaffian(a: &SkewMatrix) -> GaussianRational {
    let p = pfaffian(a);
    &p * &p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::canonical_j;

    #[test]
    fn canonical_values() {
        assert_eq!(pfaffian(&canonical_j(1)), GaussianRational::from(-1));
        for m in 1..=6 {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(pfaffian(&canonical_j(m)), GaussianRational::from(sign));
            assert_eq!(canonical_j(m).det(), GaussianRational::one());
        }
    }

    #[test]
    fn four_by_four_formula() {
        // Pf = a12 a34 - a13 a24 + a14 a23
        let v = |x: i64| GaussianRational::from(x);
        let (a12, a13, a14, a23, a24, a34) = (v(2), v(3), v(5), v(7), v(11), v(13));
        let rows = vec![
            vec![v(0), a12.clone(), a13.clone(), a14.clone()],
            vec![-&a12, v(0), a23.clone(), a24.clone()],
            vec![-&a13, -&a23, v(0), a34.clone()],
            vec![-&a14, -&a24, -&a34, v(0)],
        ];
        let a = SkewMatrix::from_rows(rows).unwrap();
        let want = &(&(&a12 * &a34) - &(&a13 * &a24)) + &(&a14 * &a23);
        assert_eq!(pfaffian(&a), want);
    }
}
