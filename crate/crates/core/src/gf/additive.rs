use super::{FieldContext, FieldElement};

/// A linearized polynomial `L(Y) = sum c_i * Y^(p^i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveOperator {
    pub terms: Vec<(FieldElement, u32)>,
}

impl AdditiveOperator {
    pub fn new(terms: Vec<(FieldElement, u32)>) -> Self {
        AdditiveOperator { terms }
    }

    /// `sum_{i<m} Y^(p^i)`.
    pub fn partial_trace(m: u32) -> Self {
        AdditiveOperator::new((0..m).map(|i| (FieldElement::ONE, i)).collect())
    }

    pub fn eval(&self, ctx: &FieldContext, y: FieldElement) -> FieldElement {
        self.terms.iter().fold(FieldElement::ZERO, |acc, &(c, i)| {
            ctx.add(acc, ctx.mul(c, ctx.frobenius(y, i)))
        })
    }
}

/// Row-reduced form of an additive operator viewed as a k x k matrix over
/// F_p, reusable across right-hand sides.
#[derive(Clone, Debug)]
pub struct AdditiveSolver {
    k: usize,
    p: u32,
    /// T with T * M in reduced row echelon form.
    transform: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    /// Every element of ker L.
    kernel: Vec<FieldElement>,
}

impl AdditiveSolver {
    pub fn new(ctx: &FieldContext, op: &AdditiveOperator) -> Self {
        let k = ctx.degree();
        let p = ctx.p();
        let p64 = p as u64;
        // column j holds the coordinates of L(X^j)
        let mut m = vec![vec![0u32; k]; k];
        for j in 0..k {
            let basis = FieldElement(ctx.pow_p[j]);
            let image = ctx.coeffs(op.eval(ctx, basis));
            for i in 0..k {
                m[i][j] = image[i];
            }
        }
        let mut t: Vec<Vec<u32>> = (0..k)
            .map(|i| (0..k).map(|j| u32::from(i == j)).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..k {
            let Some(pr) = (row..k).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(row, pr);
            t.swap(row, pr);
            let inv = super::poly::inv_mod_p(m[row][col], p) as u64;
            for j in 0..k {
                m[row][j] = (m[row][j] as u64 * inv % p64) as u32;
                t[row][j] = (t[row][j] as u64 * inv % p64) as u32;
            }
            for r in 0..k {
                if r != row && m[r][col] != 0 {
                    let f = m[r][col] as u64;
                    for j in 0..k {
                        m[r][j] = ((m[r][j] as u64 + p64 - f * m[row][j] as u64 % p64) % p64) as u32;
                        t[r][j] = ((t[r][j] as u64 + p64 - f * t[row][j] as u64 % p64) % p64) as u32;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }

        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        let basis: Vec<FieldElement> = free
            .iter()
            .map(|&f| {
                let mut v = vec![0u32; k];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - m[r][f]) % p;
                }
                ctx.element(&v).expect("residues are reduced")
            })
            .collect();
        let mut kernel = vec![FieldElement::ZERO];
        for b in basis {
            let mut next = Vec::with_capacity(kernel.len() * p as usize);
            for &e in &kernel {
                let mut cur = e;
                for _ in 0..p {
                    next.push(cur);
                    cur = ctx.add(cur, b);
                }
            }
            kernel = next;
        }
        AdditiveSolver {
            k,
            p,
            transform: t,
            pivots,
            kernel,
        }
    }

    pub fn kernel(&self) -> &[FieldElement] {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// One solution of `L(y) = c`, if any.
    pub fn particular(&self, ctx: &FieldContext, c: FieldElement) -> Option<FieldElement> {
        let p64 = self.p as u64;
        let cv = ctx.coeffs(c);
        let reduced: Vec<u32> = self
            .transform
            .iter()
            .map(|row| (row.iter().zip(&cv).map(|(&a, &b)| a as u64 * b as u64).sum::<u64>() % p64) as u32)
            .collect();
        if reduced[self.pivots.len()..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut y = vec![0u32; self.k];
        for (r, &pc) in self.pivots.iter().enumerate() {
            y[pc] = reduced[r];
        }
        Some(ctx.element(&y).expect("residues are reduced"))
    }

    /// All solutions of `L(y) = c`, sorted lexicographically.
    pub fn solve(&self, ctx: &FieldContext, c: FieldElement) -> Vec<FieldElement> {
        let Some(y0) = self.particular(ctx, c) else {
            return Vec::new();
        };
        let mut out: Vec<FieldElement> = self.kernel.iter().map(|&z| ctx.add(y0, z)).collect();
        out.sort_by_key(|&e| ctx.lex_key(e));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    #[test]
    fn identity_operator_is_bijective() {
        let f = make_field(5, 2).unwrap();
        let id = AdditiveOperator::new(vec![(f.one(), 0)]);
        for c in f.elements() {
            assert_eq!(f.additive_solve(&id, c), vec![c]);
        }
    }

    #[test]
    fn artin_schreier_kernel_is_prime_field() {
        for p in [5u32, 7] {
            let f = make_field(p, 2).unwrap();
            let minus_one = f.neg(f.one());
            let op = AdditiveOperator::new(vec![(f.one(), 1), (minus_one, 0)]);
            let roots = f.additive_solve(&op, f.zero());
            assert_eq!(roots.len(), p as usize);
            assert!(roots.iter().all(|&r| f.in_subfield(r, 1)));
        }
    }

    #[test]
    fn inconsistent_right_hand_side_has_no_solution() {
        // y^p - y only hits trace-zero elements
        let f = make_field(7, 2).unwrap();
        let op = AdditiveOperator::new(vec![(f.one(), 1), (f.neg(f.one()), 0)]);
        let unreachable = f.elements().find(|&c| !f.trace_to_prime(c).is_zero()).unwrap();
        assert!(f.additive_solve(&op, unreachable).is_empty());
    }
}
