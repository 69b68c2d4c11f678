use std::collections::{BTreeMap, HashMap};
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::tables::{tables, BasisTables};
use super::{Basis, SymFunc};
use crate::error::Result;
use crate::exact::{parse_rat, rat_pow, Rat};
use crate::partition::Partition;

/// Environment variable naming a directory for the on-disk Jack memo.
pub const CACHE_DIR_ENV: &str = "BETADUAL_JACK_CACHE";

/// One Jack polynomial P_λ^{(α)} in both bases, with its squared norm.
#[derive(Debug, Clone)]
pub struct JackEntry {
    pub lambda: Partition,
    pub alpha: Rat,
    pub m: BTreeMap<Partition, Rat>,
    /// Power-sum coefficients in the order of [`super::tables`].
    pub p: Vec<Rat>,
    pub norm: Rat,
}

impl JackEntry {
    pub fn to_symfunc(&self, basis: Basis) -> SymFunc {
        let t = tables(self.lambda.weight()).expect("degree already validated");
        let coeffs: Vec<(Partition, Rat)> = match basis {
            Basis::PowerSum => t.parts.iter().cloned().zip(self.p.iter().cloned()).collect(),
            Basis::Monomial => self.m.iter().map(|(p, c)| (p.clone(), c.clone())).collect(),
            Basis::Jack => vec![(self.lambda.clone(), Rat::one())],
        };
        SymFunc::from_coeffs(basis, self.alpha.clone(), self.lambda.weight(), coeffs).unwrap()
    }
}

/// All Jack polynomials of one degree for one α.
#[derive(Debug)]
pub struct JackDegree {
    pub entries: Vec<Arc<JackEntry>>,
    pub index: HashMap<Partition, usize>,
}

fn sp(t: &BasisTables, alpha: &Rat, a: &[Rat], b: &[Rat]) -> Rat {
    (0..a.len())
        .filter(|&i| !a[i].is_zero() && !b[i].is_zero())
        .map(|i| &a[i] * &b[i] * &t.z[i] * rat_pow(alpha, t.parts[i].len() as i32))
        .sum()
}

fn p_from_m(t: &BasisTables, m: &BTreeMap<Partition, Rat>) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); t.parts.len()];
    for (mu, c) in m {
        for (j, r) in t.m_in_p[t.idx(mu)].iter().enumerate() {
            v[j] += c * r;
        }
    }
    v
}

/// Gram–Schmidt from the bottom of dominance order: P_λ is m_λ minus its
/// projection onto the span of P_μ, μ < λ.
fn gram_schmidt(degree: u32, alpha: &Rat) -> Result<Vec<JackEntry>> {
    let t = tables(degree)?;
    let n = t.parts.len();
    let mut built: Vec<Option<JackEntry>> = vec![None; n];
    for i in (0..n).rev() {
        let lam = &t.parts[i];
        let mlam = &t.m_in_p[i];
        let mut p = mlam.clone();
        let mut m = BTreeMap::from([(lam.clone(), Rat::one())]);
        for (j, e) in built.iter().enumerate().skip(i + 1) {
            let e = e.as_ref().unwrap();
            if !t.parts[j].dominated_by(lam) {
                continue;
            }
            let c = sp(&t, alpha, mlam, &e.p) / &e.norm;
            if c.is_zero() {
                continue;
            }
            for (k, v) in e.p.iter().enumerate() {
                p[k] -= &c * v;
            }
            for (mu, v) in &e.m {
                let x = m.entry(mu.clone()).or_insert_with(Rat::zero);
                *x -= &c * v;
            }
        }
        m.retain(|_, c| !c.is_zero());
        let norm = sp(&t, alpha, &p, &p);
        built[i] = Some(JackEntry { lambda: lam.clone(), alpha: alpha.clone(), m, p, norm });
    }
    Ok(built.into_iter().map(Option::unwrap).collect())
}

#[derive(Serialize, Deserialize)]
struct DiskEntry {
    partition: Partition,
    alpha: String,
    coeffs: BTreeMap<String, String>,
}

/// Concurrent memo of Jack polynomials keyed by (λ, α), filled one degree
/// at a time. Optionally mirrored to `$BETADUAL_JACK_CACHE/jack.jsonl`.
pub struct JackCache {
    degrees: RwLock<HashMap<(u32, Rat), Arc<JackDegree>>>,
    disk: Option<(PathBuf, Mutex<HashMap<(Partition, Rat), BTreeMap<Partition, Rat>>>)>,
}

impl JackCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        let disk = dir.map(|d| {
            let path = d.join("jack.jsonl");
            let loaded = load_disk(&path);
            (path, Mutex::new(loaded))
        });
        Self { degrees: RwLock::new(HashMap::new()), disk }
    }

    /// Process-wide cache, configured from the environment on first use.
    pub fn global() -> &'static JackCache {
        static G: OnceLock<JackCache> = OnceLock::new();
        G.get_or_init(|| JackCache::new(std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from)))
    }

    pub fn degree(&self, degree: u32, alpha: &Rat) -> Result<Arc<JackDegree>> {
        let key = (degree, alpha.clone());
        if let Some(d) = self.degrees.read().unwrap().get(&key) {
            return Ok(d.clone());
        }
        let entries = match self.from_disk(degree, alpha)? {
            Some(e) => e,
            None => {
                let e = gram_schmidt(degree, alpha)?;
                self.to_disk(&e);
                e
            }
        };
        let index = entries.iter().enumerate().map(|(i, e)| (e.lambda.clone(), i)).collect();
        let d = Arc::new(JackDegree { entries: entries.into_iter().map(Arc::new).collect(), index });
        Ok(self.degrees.write().unwrap().entry(key).or_insert(d).clone())
    }

    pub fn get(&self, lambda: &Partition, alpha: &Rat) -> Result<Arc<JackEntry>> {
        let d = self.degree(lambda.weight(), alpha)?;
        Ok(d.entries[d.index[lambda]].clone())
    }

    fn from_disk(&self, degree: u32, alpha: &Rat) -> Result<Option<Vec<JackEntry>>> {
        let Some((_, store)) = &self.disk else { return Ok(None) };
        let store = store.lock().unwrap();
        let t = tables(degree)?;
        let mut out = Vec::with_capacity(t.parts.len());
        for lam in &t.parts {
            let Some(m) = store.get(&(lam.clone(), alpha.clone())) else { return Ok(None) };
            let p = p_from_m(&t, m);
            let norm = sp(&t, alpha, &p, &p);
            out.push(JackEntry { lambda: lam.clone(), alpha: alpha.clone(), m: m.clone(), p, norm });
        }
        Ok(Some(out))
    }

    fn to_disk(&self, entries: &[JackEntry]) {
        let Some((path, store)) = &self.disk else { return };
        let mut store = store.lock().unwrap();
        let file = std::fs::OpenOptions::new().create(true).append(true).open(path);
        let Ok(mut file) = file else { return };
        for e in entries {
            let line = DiskEntry {
                partition: e.lambda.clone(),
                alpha: e.alpha.to_string(),
                coeffs: e.m.iter().map(|(p, c)| (p.to_string(), c.to_string())).collect(),
            };
            if let Ok(s) = serde_json::to_string(&line) {
                let _ = writeln!(file, "{s}");
            }
            store.insert((e.lambda.clone(), e.alpha.clone()), e.m.clone());
        }
    }
}

fn load_disk(path: &PathBuf) -> HashMap<(Partition, Rat), BTreeMap<Partition, Rat>> {
    let mut out = HashMap::new();
    let Ok(f) = std::fs::File::open(path) else { return out };
    for line in std::io::BufReader::new(f).lines().map_while(|l| l.ok()) {
        let Ok(d) = serde_json::from_str::<DiskEntry>(&line) else { continue };
        let Ok(alpha) = parse_rat(&d.alpha) else { continue };
        let coeffs: Option<BTreeMap<Partition, Rat>> =
            d.coeffs.iter().map(|(p, c)| Some((p.parse().ok()?, parse_rat(c).ok()?))).collect();
        if let Some(c) = coeffs {
            out.insert((d.partition, alpha), c);
        }
    }
    out
}

/// All Jack polynomials of a degree from the global cache.
pub fn jack_degree(degree: u32, alpha: &Rat) -> Result<Arc<JackDegree>> {
    JackCache::global().degree(degree, alpha)
}

/// P_λ^{(α)} in the monomial basis.
pub fn jack(lambda: &Partition, alpha: &Rat) -> Result<SymFunc> {
    Ok(JackCache::global().get(lambda, alpha)?.to_symfunc(Basis::Monomial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::partition::{part, partitions_of};

    #[test]
    fn jack_of_degree_two() {
        let a = rat(2, 3);
        let p2 = jack(&part(&[2]), &a).unwrap();
        // P_(2) = m_2 + 2/(1+α) m_11
        assert_eq!(p2.coeff(&part(&[1, 1])), int(2) / (int(1) + &a));
        assert_eq!(jack(&part(&[1, 1]), &a).unwrap().coeffs().len(), 1);
    }

    #[test]
    fn jacks_are_mutually_orthogonal() {
        let a = rat(3, 2);
        let t = tables(5).unwrap();
        let d = jack_degree(5, &a).unwrap();
        for (i, x) in d.entries.iter().enumerate() {
            for y in d.entries.iter().skip(i + 1) {
                assert!(sp(&t, &a, &x.p, &y.p).is_zero(), "{} {}", x.lambda, y.lambda);
            }
        }
        assert_eq!(d.entries.len(), partitions_of(5).len());
    }

    #[test]
    fn disk_memo_round_trip() {
        let dir = std::env::temp_dir().join(format!("betadual-jack-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let a = rat(1, 3);
        let first = JackCache::new(Some(dir.clone())).get(&part(&[2, 2]), &a).unwrap();
        let second = JackCache::new(Some(dir.clone())).get(&part(&[2, 2]), &a).unwrap();
        assert_eq!(first.m, second.m);
        assert_eq!(first.norm, second.norm);
        std::fs::remove_dir_all(dir).unwrap();
    }
}
