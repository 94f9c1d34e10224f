//! Exact sparse linear algebra over the rationals, plus a modular rank
//! fast path.
//!
//! [`Echelon`] keeps one monic pivot row per leading column. An incoming row
//! is reduced in a dense buffer against every pivot column in ascending
//! order, so entries stay at the size of solution data (ratios of minors)
//! instead of growing multiplicatively. Ranks, residues, and nullspace bases
//! are canonical: they do not depend on insertion order.
//!
//! [`modular`] runs the same elimination over the prime field with
//! p = 2^61 - 1. A modular rank never exceeds the rational rank, which gives
//! one-sided certificates: full rank mod p proves full rank over Q. Callers
//! fall back to the exact path whenever the certificate does not close.

use crate::ring::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Online row-echelon form over Q with monic pivot rows.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<u32, Vec<(u32, Rational)>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<u32> {
        self.rows.keys().copied().collect()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.rows.contains_key(&col)
    }

    /// Stored pivot rows, ascending lead column. Each row is monic and its
    /// entries sit at columns not below its lead.
    pub fn stored_rows(&self) -> Vec<Vec<(u32, Rational)>> {
        self.rows.values().cloned().collect()
    }

    /// Scatter `entries` into a dense buffer and eliminate against every
    /// pivot column, ascending. Pivot rows only touch columns at or beyond
    /// their lead, so a single ascending pass is complete.
    fn reduce_buffer(&self, entries: &[(u32, Rational)], buf: &mut [Rational]) {
        for (c, v) in entries {
            buf[*c as usize] += v;
        }
        for (&lead, row) in &self.rows {
            let coef = std::mem::take(&mut buf[lead as usize]);
            if coef.is_zero() {
                continue;
            }
            for (c, v) in row.iter().skip(1) {
                let delta = &coef * v;
                buf[*c as usize] -= delta;
            }
        }
    }

    /// Insert a row given by sparse rational coordinates. Returns true if
    /// the rank grew.
    pub fn insert_rational(&mut self, entries: &[(u32, Rational)]) -> bool {
        if entries.iter().all(|(_, v)| v.is_zero()) {
            return false;
        }
        let mut buf = vec![Rational::zero(); self.ncols];
        self.reduce_buffer(entries, &mut buf);
        let Some(lead) = buf.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let lead_val = buf[lead].clone();
        let row: Vec<(u32, Rational)> = buf
            .iter()
            .enumerate()
            .skip(lead)
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c as u32, v / &lead_val))
            .collect();
        self.rows.insert(lead as u32, row);
        true
    }

    /// Canonical normal form: the unique representative of `v + rowspace`
    /// supported away from the pivot columns, as sparse coordinates.
    pub fn reduce(&self, v: &[(u32, Rational)]) -> BTreeMap<u32, Rational> {
        let mut buf = vec![Rational::zero(); self.ncols];
        self.reduce_buffer(v, &mut buf);
        buf.into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (c as u32, v))
            .collect()
    }

    pub fn contains(&self, v: &[(u32, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Basis of the right nullspace: one canonical vector per free column,
    /// with a unit at that column and zeros at the other free columns.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let free: Vec<u32> = (0..self.ncols as u32)
            .filter(|c| !self.rows.contains_key(c))
            .collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Rational::zero(); self.ncols];
            v[fc as usize] = Rational::from_integer(1.into());
            for (&lead, row) in self.rows.iter().rev() {
                let mut acc = Rational::zero();
                for (c, x) in row.iter().skip(1) {
                    if !v[*c as usize].is_zero() {
                        acc += x * &v[*c as usize];
                    }
                }
                if !acc.is_zero() {
                    v[lead as usize] = -acc;
                }
            }
            basis.push(v);
        }
        basis
    }
}

pub mod modular {
    //! Rank computation over the prime field F_p, p = 2^61 - 1.

    use crate::ring::Rational;
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    use std::collections::BTreeMap;

    pub const PRIME: u64 = (1 << 61) - 1;

    #[inline]
    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % PRIME as u128) as u64
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn inv(a: u64) -> u64 {
        pow(a, PRIME - 2)
    }

    /// Image of an exact rational in F_p; `None` when the denominator
    /// vanishes mod p (callers then fall back to the exact path).
    pub fn rational_mod_p(q: &Rational) -> Option<u64> {
        let p = BigInt::from(PRIME);
        let n = q.numer().mod_floor(&p).to_u64().expect("reduced below p");
        let d = q.denom().mod_floor(&p).to_u64().expect("reduced below p");
        if d == 0 {
            return None;
        }
        Some(mul(n, inv(d)))
    }

    /// Row echelon over F_p with the same dense-buffer reduction as the
    /// exact path.
    pub struct ModEchelon {
        ncols: usize,
        rows: BTreeMap<u32, Vec<(u32, u64)>>,
    }

    impl ModEchelon {
        pub fn new(ncols: usize) -> Self {
            ModEchelon {
                ncols,
                rows: BTreeMap::new(),
            }
        }

        pub fn rank(&self) -> usize {
            self.rows.len()
        }

        pub fn is_full_rank(&self) -> bool {
            self.rows.len() == self.ncols
        }

        pub fn insert(&mut self, entries: &[(u32, u64)]) -> bool {
            if self.is_full_rank() {
                // every further row reduces to zero
                return false;
            }
            let mut buf = vec![0u64; self.ncols];
            for (c, v) in entries {
                buf[*c as usize] = (buf[*c as usize] + v) % PRIME;
            }
            for (&lead, row) in &self.rows {
                let coef = std::mem::take(&mut buf[lead as usize]);
                if coef == 0 {
                    continue;
                }
                for (c, v) in row.iter().skip(1) {
                    let cell = &mut buf[*c as usize];
                    *cell = (*cell + PRIME - mul(coef, *v)) % PRIME;
                }
            }
            let Some(lead) = buf.iter().position(|&v| v != 0) else {
                return false;
            };
            let scale = inv(buf[lead]);
            let row: Vec<(u32, u64)> = buf
                .iter()
                .enumerate()
                .skip(lead)
                .filter(|(_, &v)| v != 0)
                .map(|(c, &v)| (c as u32, mul(v, scale)))
                .collect();
            self.rows.insert(lead as u32, row);
            true
        }

        /// Insert rational coordinates; false return may also mean a
        /// denominator vanished mod p, so this is only used where a
        /// certificate check follows.
        pub fn insert_rational(&mut self, entries: &[(u32, Rational)]) -> Option<bool> {
            let mut row = Vec::with_capacity(entries.len());
            for (c, q) in entries {
                row.push((*c, rational_mod_p(q)?));
            }
            Some(self.insert(&row))
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn dense_to_sparse(v: &[i64]) -> Vec<(u32, Rational)> {
        v.iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i as u32, rat(x)))
            .collect()
    }

    #[test]
    fn rank_of_simple_matrix() {
        let mut e = Echelon::new(3);
        e.insert_rational(&dense_to_sparse(&[1, 0, -1]));
        e.insert_rational(&dense_to_sparse(&[0, 1, 0]));
        e.insert_rational(&dense_to_sparse(&[1, 1, -1]));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn reduce_gives_canonical_residue() {
        let mut e = Echelon::new(3);
        e.insert_rational(&dense_to_sparse(&[1, 0, -1]));
        e.insert_rational(&dense_to_sparse(&[0, 1, 0]));
        // x1^2 ≡ x2^2 modulo (x1^2 - x2^2, x1x2)
        let res = e.reduce(&dense_to_sparse(&[1, 0, 0]));
        assert_eq!(res.len(), 1);
        assert_eq!(res[&2], rat(1));
        assert!(e.contains(&dense_to_sparse(&[0, 1, 0])));
        assert!(e.reduce(&[]).is_empty());
    }

    #[test]
    fn nullspace_solves_the_system() {
        // x + y + z = 0, y - z = 0  →  one free column
        let mut e = Echelon::new(3);
        e.insert_rational(&dense_to_sparse(&[1, 1, 1]));
        e.insert_rational(&dense_to_sparse(&[0, 1, -1]));
        let ns = e.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(&v[0] + &v[1] + &v[2], rat(0));
        assert_eq!(&v[1] - &v[2], rat(0));
        assert_eq!(v[2], rat(1));
    }

    #[test]
    fn modular_rank_agrees_on_small_integers() {
        let rows: Vec<Vec<i64>> = vec![
            vec![2, 4, 6, 1],
            vec![1, 2, 3, 0],
            vec![0, 0, 0, 5],
            vec![3, 6, 9, 6],
        ];
        let mut exact = Echelon::new(4);
        let mut modp = modular::ModEchelon::new(4);
        for r in &rows {
            exact.insert_rational(&dense_to_sparse(r));
            modp.insert_rational(&dense_to_sparse(r)).unwrap();
        }
        assert_eq!(exact.rank(), modp.rank());
    }

    proptest! {
        #[test]
        fn rank_matches_dense_oracle(
            entries in proptest::collection::vec(
                proptest::collection::vec(-5i64..6, 6), 0..8)
        ) {
            let mut e = Echelon::new(6);
            for row in &entries {
                e.insert_rational(&dense_to_sparse(row));
            }
            let dense: Vec<Vec<Rational>> =
                entries.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
            prop_assert_eq!(e.rank(), naive::rank(dense));
        }

        #[test]
        fn modular_rank_never_exceeds_exact_rank(
            entries in proptest::collection::vec(
                proptest::collection::vec(-9i64..10, 5), 0..8)
        ) {
            let mut e = Echelon::new(5);
            let mut m = modular::ModEchelon::new(5);
            for row in &entries {
                e.insert_rational(&dense_to_sparse(row));
                m.insert_rational(&dense_to_sparse(row)).unwrap();
            }
            prop_assert!(m.rank() <= e.rank());
            // with entries this small the prime is never unlucky
            prop_assert_eq!(m.rank(), e.rank());
        }

        #[test]
        fn nullspace_vectors_annihilate_all_rows(
            entries in proptest::collection::vec(
                proptest::collection::vec(-4i64..5, 5), 1..6)
        ) {
            let mut e = Echelon::new(5);
            for row in &entries {
                e.insert_rational(&dense_to_sparse(row));
            }
            for v in e.nullspace() {
                for row in &entries {
                    let dot = row.iter().zip(&v)
                        .fold(Rational::zero(), |acc, (&a, b)| acc + &(rat(a) * b));
                    prop_assert!(dot.is_zero());
                }
            }
            prop_assert_eq!(e.rank() + e.nullspace().len(), 5);
        }

        #[test]
        fn residue_is_insertion_order_independent(
            entries in proptest::collection::vec(
                proptest::collection::vec(-4i64..5, 5), 2..6),
            probe in proptest::collection::vec(-4i64..5, 5),
        ) {
            let mut fwd = Echelon::new(5);
            for row in &entries {
                fwd.insert_rational(&dense_to_sparse(row));
            }
            let mut rev = Echelon::new(5);
            for row in entries.iter().rev() {
                rev.insert_rational(&dense_to_sparse(row));
            }
            prop_assert_eq!(fwd.reduce(&dense_to_sparse(&probe)),
                            rev.reduce(&dense_to_sparse(&probe)));
        }
    }
}
