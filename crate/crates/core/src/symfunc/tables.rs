use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{int, Rat};
use crate::partition::{partitions_of, Partition};

static DEGREE_CAP: AtomicU32 = AtomicU32::new(12);

/// Largest degree for which change-of-basis tables will be built.
pub fn degree_cap() -> u32 {
    DEGREE_CAP.load(Ordering::Relaxed)
}

pub fn set_degree_cap(cap: u32) {
    DEGREE_CAP.store(cap, Ordering::Relaxed);
}

pub(crate) fn check_degree(degree: u32) -> Result<()> {
    let cap = degree_cap();
    if degree > cap {
        Err(Error::DegreeCap { degree, cap })
    } else {
        Ok(())
    }
}

/// Change-of-basis matrices between power sums and monomials in one degree.
#[derive(Debug)]
pub struct BasisTables {
    pub degree: u32,
    /// Partitions of `degree`, decreasing lexicographic order.
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row λ holds the monomial coefficients of p_λ.
    pub p_in_m: Vec<Vec<Rat>>,
    /// Row μ holds the power-sum coefficients of m_μ.
    pub m_in_p: Vec<Vec<Rat>>,
    /// α-independent part of the power-sum scalar product: z_ρ.
    pub z: Vec<Rat>,
}

impl BasisTables {
    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

/// Multiplies a monomial-basis expansion by p_k.
///
/// The coefficient of x^ν in p_k·m_μ counts positions i with ν_i ≥ k and
/// sort(ν − k e_i) = μ; all positions carrying the same value contribute
/// the same μ.
pub(crate) fn mul_by_power_sum(f: &BTreeMap<Partition, Rat>, k: u32) -> BTreeMap<Partition, Rat> {
    let mut out: BTreeMap<Partition, Rat> = BTreeMap::new();
    for (mu, c) in f {
        let mut values: Vec<u32> = mu.parts().to_vec();
        values.push(0);
        values.dedup();
        for v in values {
            let mut nu: Vec<u32> = mu.parts().to_vec();
            if v == 0 {
                nu.push(k);
            } else {
                let pos = nu.iter().position(|&x| x == v).unwrap();
                nu[pos] += k;
            }
            nu.sort_unstable_by(|a, b| b.cmp(a));
            let mult = nu.iter().filter(|&&x| x == v + k).count() as i64;
            let nu = Partition::new(nu).unwrap();
            let e = out.entry(nu).or_insert_with(Rat::zero);
            *e += c * int(mult);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Monomial expansion of p_λ.
pub fn power_sum_in_monomials(lambda: &Partition) -> BTreeMap<Partition, Rat> {
    let mut f = BTreeMap::new();
    f.insert(Partition::empty(), Rat::one());
    for &k in lambda.parts() {
        f = mul_by_power_sum(&f, k);
    }
    f
}

fn build(degree: u32) -> BasisTables {
    let parts = partitions_of(degree);
    let n = parts.len();
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut p_in_m = vec![vec![Rat::zero(); n]; n];
    for (i, lam) in parts.iter().enumerate() {
        for (mu, c) in power_sum_in_monomials(lam) {
            p_in_m[i][index[&mu]] = c;
        }
    }
    let m_in_p = invert(&p_in_m);
    let z = parts.iter().map(|p| Rat::from_integer(p.z())).collect();
    BasisTables { degree, parts, index, p_in_m, m_in_p, z }
}

/// Exact Gauss–Jordan inverse of a nonsingular square matrix.
fn invert(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut inv: Vec<Vec<Rat>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero()).expect("singular change of basis");
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].recip();
        for j in 0..n {
            m[col][j] *= &p;
            inv[col][j] *= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let (a, b) = (&m[col][j] * &f, &inv[col][j] * &f);
                    m[r][j] -= a;
                    inv[r][j] -= b;
                }
            }
        }
    }
    inv
}

type TableMap = RwLock<HashMap<u32, Arc<BasisTables>>>;

/// Shared tables for one degree, built on first use.
pub fn tables(degree: u32) -> Result<Arc<BasisTables>> {
    check_degree(degree)?;
    static CACHE: OnceLock<TableMap> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&degree) {
        return Ok(t.clone());
    }
    let t = Arc::new(build(degree));
    Ok(cache.write().unwrap().entry(degree).or_insert(t).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn small_power_sums() {
        // p_1^2 = m_2 + 2 m_11
        let f = power_sum_in_monomials(&part(&[1, 1]));
        assert_eq!(f[&part(&[2])], int(1));
        assert_eq!(f[&part(&[1, 1])], int(2));
        // p_2 p_1 = m_3 + m_21
        let f = power_sum_in_monomials(&part(&[2, 1]));
        assert_eq!(f.len(), 2);
        assert_eq!(f[&part(&[2, 1])], int(1));
        // p_1^3 has m_111 coefficient 6
        assert_eq!(power_sum_in_monomials(&part(&[1, 1, 1]))[&part(&[1, 1, 1])], int(6));
    }

    #[test]
    fn tables_invert() {
        let t = tables(5).unwrap();
        let n = t.parts.len();
        for i in 0..n {
            for j in 0..n {
                let s: Rat = (0..n).map(|k| &t.p_in_m[i][k] * &t.m_in_p[k][j]).sum();
                assert_eq!(s, if i == j { Rat::one() } else { Rat::zero() });
            }
        }
    }
}
