//! Dense linear algebra over a prime field `F_l` with `l < 2^31`.

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub l: u64,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.l {
            s - self.l
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.l - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }

    pub fn pow(self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.l;
        b %= self.l;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.l != 0);
        self.pow(a, self.l - 2)
    }

    /// Reduces the rows of `m` (width `w`) to reduced row echelon form in
    /// place, drops zero rows and returns the pivot columns.
    pub fn rref(self, m: &mut Vec<Vec<u64>>, w: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..w {
            if row == m.len() {
                break;
            }
            let Some(p) = (row..m.len()).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, p);
            let inv = self.inv(m[row][col]);
            for x in m[row].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[row].clone();
            for (r, other) in m.iter_mut().enumerate() {
                if r == row || other[col] == 0 {
                    continue;
                }
                let f = other[col];
                for c in col..w {
                    if pivot_row[c] != 0 {
                        other[c] = self.sub(other[c], self.mul(f, pivot_row[c]));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        m.truncate(row);
        pivots
    }

    /// Basis of the right null space `{x : A x = 0}` of a square matrix.
    pub fn null_space(self, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = a.len();
        let mut m = a.to_vec();
        let pivots = self.rref(&mut m, n);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; n];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.sub(0, m[r][f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)`, low degree first, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for k in 0..n.saturating_sub(2) {
            let Some(p) = (k + 1..n).find(|&r| h[r][k] != 0) else {
                continue;
            };
            if p != k + 1 {
                h.swap(p, k + 1);
                for row in h.iter_mut() {
                    row.swap(p, k + 1);
                }
            }
            let inv = self.inv(h[k + 1][k]);
            for r in k + 2..n {
                if h[r][k] == 0 {
                    continue;
                }
                let f = self.mul(h[r][k], inv);
                for c in 0..n {
                    let d = self.mul(f, h[k + 1][c]);
                    h[r][c] = self.sub(h[r][c], d);
                }
                for row in h.iter_mut() {
                    let d = self.mul(f, row[r]);
                    row[k + 1] = self.add(row[k + 1], d);
                }
            }
        }
        // p[i] = charpoly of the leading i×i block
        let mut p: Vec<Vec<u64>> = vec![vec![1]];
        for i in 1..=n {
            let mut next = vec![0; i + 1];
            // (x - h[i-1][i-1]) p[i-1]
            for (d, &c) in p[i - 1].iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[i - 1][i - 1], c));
            }
            let mut t = 1;
            for m in (1..i).rev() {
                t = self.mul(t, h[m][m - 1]);
                let f = self.mul(t, h[m - 1][i - 1]);
                for (d, &c) in p[m - 1].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(f, c));
                }
            }
            p.push(next);
        }
        p.pop().unwrap()
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in increasing order.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.l).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_and_nullspace() {
        let f = Fp { l: 13 };
        // companion-like matrix with eigenvalues 1, 2, 3
        let a = vec![vec![1, 5, 7], vec![0, 2, 4], vec![0, 0, 3]];
        let p = f.charpoly(&a);
        assert_eq!(f.roots(&p), vec![1, 2, 3]);
        let b = vec![vec![2, 1, 0], vec![1, 2, 0], vec![0, 0, 3]];
        let p = f.charpoly(&b);
        // eigenvalues 1, 3, 3
        assert_eq!(f.roots(&p), vec![1, 3]);
        let shifted: Vec<Vec<u64>> = b
            .iter()
            .enumerate()
            .map(|(i, r)| r.iter().enumerate().map(|(j, &x)| if i == j { f.sub(x, 3) } else { x }).collect())
            .collect();
        assert_eq!(f.null_space(&shifted).len(), 2);
        assert_eq!(f.mul(f.inv(5), 5), 1);
    }
}
