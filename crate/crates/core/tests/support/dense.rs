//! Degreewise dense linear algebra for `dim_k M_d`, independent of the
//! Groebner machinery: `M_d = F_d / (relations + I F)_d`, ranks by
//! Gaussian elimination over BigRational (or residues mod p).

use std::collections::HashMap;

use homograde_core::{FieldSpec, GModule, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Copy)]
struct Field(Option<u64>);

impl Field {
    fn of(f: FieldSpec) -> Field {
        match f {
            FieldSpec::Rationals => Field(None),
            FieldSpec::Prime(p) => Field(Some(p as u64)),
        }
    }

    fn norm(&self, x: BigRational) -> BigRational {
        match self.0 {
            None => x,
            Some(p) => {
                let p = BigInt::from(p);
                let num = ((x.numer() % &p) + &p) % &p;
                let den = ((x.denom() % &p) + &p) % &p;
                let inv = den.modpow(&(&p - 2u32), &p);
                BigRational::from_integer((num * inv) % p)
            }
        }
    }

    fn scalar(&self, s: &Scalar) -> BigRational {
        let (n, d) = s.to_fraction();
        self.norm(BigRational::new(n, d))
    }

    fn inv(&self, x: &BigRational) -> BigRational {
        match self.0 {
            None => x.recip(),
            Some(p) => {
                let p = BigInt::from(p);
                BigRational::from_integer(x.numer().modpow(&(&p - 2u32), &p))
            }
        }
    }
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn exponents(n: usize, d: i32) -> Vec<Vec<u32>> {
    if d < 0 {
        return vec![];
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in (0..=d as u32).rev() {
        for mut rest in exponents(n - 1, d - a as i32) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

type Vector = HashMap<(u32, Vec<u32>), BigRational>;

fn rank(field: Field, rows: Vec<Vector>, index: &HashMap<(u32, Vec<u32>), usize>) -> usize {
    let width = index.len();
    let mut mat: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| {
            let mut row = vec![BigRational::zero(); width];
            for (k, c) in r {
                let j = index[&k];
                row[j] = field.norm(&row[j] + c);
            }
            row
        })
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..mat.len()).find(|&i| !mat[i][col].is_zero()) else { continue };
        mat.swap(rank, p);
        let inv = field.inv(&mat[rank][col]);
        let pivot: Vec<BigRational> = mat[rank].iter().map(|c| field.norm(c * &inv)).collect();
        for row in mat.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *c = field.norm(&*c - &f * p);
                }
            }
        }
        mat[rank] = pivot;
        rank += 1;
    }
    rank
}

fn shifted(e: &[u32], m: &[u32]) -> Vec<u32> {
    e.iter().zip(m).map(|(a, b)| a + b).collect()
}

/// `dim_k M_d` by dense ranks.
pub fn hilbert(m: &GModule, d: i32) -> u64 {
    let ring = m.ring();
    let field = Field::of(ring.field());
    let n = ring.variables().len();
    let twists = m.twists();
    let mut index = HashMap::new();
    for (j, &a) in twists.iter().enumerate() {
        for e in exponents(n, d - a) {
            let next = index.len();
            index.insert((j as u32, e), next);
        }
    }
    let mut rows: Vec<Vector> = Vec::new();
    for rel in m.relations() {
        let Some(deg) = rel.degree(twists) else { continue };
        for mono in exponents(n, d - deg) {
            let mut v = Vector::new();
            for t in rel.terms() {
                let e: Vec<u32> = t.mon.exponents().collect();
                v.insert((t.comp, shifted(&e, &mono)), field.scalar(&t.coef));
            }
            rows.push(v);
        }
    }
    for g in ring.defining_ideal().generators() {
        let Some(dg) = g.degree() else { continue };
        for (j, &a) in twists.iter().enumerate() {
            for mono in exponents(n, d - a - dg as i32) {
                let mut v = Vector::new();
                for (mon, c) in g.terms() {
                    let e: Vec<u32> = mon.exponents().collect();
                    v.insert((j as u32, shifted(&e, &mono)), field.scalar(c));
                }
                rows.push(v);
            }
        }
    }
    (index.len() - rank(field, rows, &index)) as u64
}
