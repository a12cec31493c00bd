//! Integer partitions in the English (matrix) convention: cell `(i, j)` lies in
//! row `i` and column `j`, both counted from 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// A box of a Young diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "{parts:?} is not a weakly decreasing list of positive integers"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// Sorts an exponent vector and drops zeros.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut parts: Vec<usize> = exps.iter().copied().filter(|&e| e > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Self::empty();
        };
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, s: Cell) -> bool {
        s.row >= 1 && s.col >= 1 && s.col <= self.part(s.row)
    }

    /// Cells row by row, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell::new(i + 1, j)))
    }

    /// `m_i(λ)` for `i = 1..=λ_1` (index 0 unused).
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_λ = prod_i i^{m_i} m_i!`
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for r in 1..=m {
                z *= BigInt::from(i) * BigInt::from(r);
            }
        }
        z
    }

    /// `n(λ) = sum (i-1) λ_i`
    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    fn check_cell(&self, s: Cell) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::CellOutOfDiagram {
                row: s.row,
                col: s.col,
                partition: self.to_string(),
            })
        }
    }

    /// `a_λ(s) = λ_i - j`
    pub fn arm(&self, s: Cell) -> Result<usize> {
        self.check_cell(s)?;
        Ok(self.part(s.row) - s.col)
    }

    /// `l_λ(s) = λ'_j - i`
    pub fn leg(&self, s: Cell) -> Result<usize> {
        self.check_cell(s)?;
        let col_len = self.0.iter().take_while(|&&p| p >= s.col).count();
        Ok(col_len - s.row)
    }
}

/// Arm length of `s` in `λ`.
pub fn arm(lambda: &Partition, s: Cell) -> Result<usize> {
    lambda.arm(s)
}

/// Leg length of `s` in `λ`.
pub fn leg(lambda: &Partition, s: Cell) -> Result<usize> {
    lambda.leg(s)
}

/// All partitions of `k` in reverse lexicographic order: `(k)` first, `(1^k)`
/// last.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// `μ ≤ λ` in dominance order.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            expected: lambda.weight(),
            got: mu.weight(),
        });
    }
    let (mut sm, mut sl) = (0, 0);
    for r in 1..=mu.len().max(lambda.len()) {
        sm += mu.part(r);
        sl += lambda.part(r);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1,1]`, `3,1,1`, `(3,1,1)` and `[]`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')'])
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the enumerator.
    fn partition_numbers(max: usize) -> Vec<u64> {
        let mut pn = vec![0i64; max + 1];
        pn[0] = 1;
        for n in 1..=max {
            let mut acc = 0i64;
            for k in 1.. {
                let k = k as i64;
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > n {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * pn[n - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= n {
                    acc += sign * pn[n - g2];
                }
            }
            pn[n] = acc;
        }
        pn.into_iter().map(|x| x as u64).collect()
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn counts_match_pentagonal_recurrence() {
        let pn = partition_numbers(40);
        for k in 0..=40 {
            let parts = partitions_of(k);
            assert_eq!(parts.len() as u64, pn[k], "k = {k}");
            if k <= 12 {
                let mut sorted = parts.clone();
                sorted.dedup();
                assert_eq!(sorted.len(), parts.len());
                assert!(parts.iter().all(|l| l.weight() == k));
            }
        }
    }

    #[test]
    fn arms_and_legs() {
        let l = p(&[2, 1]);
        assert_eq!(l.arm(Cell::new(1, 1)).unwrap(), 1);
        assert_eq!(l.leg(Cell::new(1, 1)).unwrap(), 1);
        let row = p(&[5]);
        for j in 1..=5 {
            assert_eq!(row.arm(Cell::new(1, j)).unwrap(), 5 - j);
            assert_eq!(row.leg(Cell::new(1, j)).unwrap(), 0);
        }
        let l = p(&[3, 2]);
        assert_eq!(l.conjugate(), p(&[2, 2, 1]));
        assert_eq!(l.arm(Cell::new(1, 2)).unwrap(), 1);
        assert_eq!(l.leg(Cell::new(1, 2)).unwrap(), 1);
        assert!(matches!(
            l.arm(Cell::new(2, 3)),
            Err(Error::CellOutOfDiagram { .. })
        ));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&p(&[1, 1, 1]), &p(&[3])).unwrap());
        assert!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap());
        assert!(!dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap());
        assert!(!dominance_leq(&p(&[3, 3]), &p(&[4, 1, 1])).unwrap());
        assert!(!dominance_leq(&p(&[4, 1, 1]), &p(&[3, 3])).unwrap());
        assert!(dominance_leq(&p(&[2]), &p(&[1, 1, 1])).is_err());
    }

    #[test]
    fn conjugation_and_hook_sums() {
        for k in 0..=10 {
            for l in partitions_of(k) {
                let c = l.conjugate();
                assert_eq!(c.conjugate(), l);
                let mut hooks = 0;
                for s in l.cells() {
                    let t = Cell::new(s.col, s.row);
                    assert_eq!(l.arm(s).unwrap(), c.leg(t).unwrap());
                    hooks += l.arm(s).unwrap() + l.leg(s).unwrap() + 1;
                }
                assert_eq!(hooks, l.n() + c.n() + l.weight(), "{l}");
            }
        }
    }

    #[test]
    fn text_form() {
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
    }
}
