use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use super::{generate, Caps, PolyCache, UniversalError, UniversalId, UniversalPoly};
use crate::intpoly::Polynomial;

/// Cap-aware source of universal polynomials: memory, then disk cache, then
/// two-route generation.
#[derive(Debug)]
pub struct Generator {
    caps: Caps,
    cache: Option<PolyCache>,
    memo: Mutex<HashMap<UniversalId, UniversalPoly>>,
}

impl Generator {
    pub fn new(caps: Caps, cache: Option<PolyCache>) -> Generator {
        Generator { caps, cache, memo: Mutex::new(HashMap::new()) }
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn get(&self, id: UniversalId) -> Result<UniversalPoly, UniversalError> {
        self.caps.admit(id)?;
        if let Some(p) = self.memo.lock().expect("memo lock").get(&id) {
            return Ok(p.clone());
        }
        let cached = match &self.cache {
            Some(cache) => cache.get(id)?,
            None => None,
        };
        let poly = match cached {
            Some(p) => p,
            None => {
                let p = generate(id, &self.caps)?;
                if let Some(cache) = &self.cache {
                    cache.put(&p)?;
                }
                p
            }
        };
        self.memo.lock().expect("memo lock").insert(id, poly.clone());
        Ok(poly)
    }
}

/// Every universal polynomial admitted by a set of caps, ready for
/// evaluation.
#[derive(Clone, Debug)]
pub struct UniversalTable {
    caps: Caps,
    q: Vec<Polynomial>,
    p: Vec<Polynomial>,
    pnm: BTreeMap<(u32, u32), Polynomial>,
}

impl UniversalTable {
    pub fn build(generator: &Generator) -> Result<UniversalTable, UniversalError> {
        let caps = *generator.caps();
        let body = |id| generator.get(id).map(|u| u.body);
        let q = (1..=caps.newton).map(|n| body(UniversalId::Q(n))).collect::<Result<_, _>>()?;
        let p = (1..=caps.product).map(|n| body(UniversalId::P(n))).collect::<Result<_, _>>()?;
        let mut pnm = BTreeMap::new();
        for n in 1..=caps.composition {
            for m in 1..=caps.composition / n {
                pnm.insert((n, m), body(UniversalId::Pnm(n, m))?);
            }
        }
        Ok(UniversalTable { caps, q, p, pnm })
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    /// `Q_n`, if within the newton cap.
    pub fn q(&self, n: u32) -> Option<&Polynomial> {
        self.q.get((n as usize).checked_sub(1)?)
    }

    /// `P_n`, if within the product cap.
    pub fn p(&self, n: u32) -> Option<&Polynomial> {
        self.p.get((n as usize).checked_sub(1)?)
    }

    /// `P_{n,m}`, if `nm` is within the composition cap.
    pub fn pnm(&self, n: u32, m: u32) -> Option<&Polynomial> {
        self.pnm.get(&(n, m))
    }

    /// All `(n, m)` pairs available.
    pub fn pnm_params(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.pnm.keys().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_covers_caps() {
        let caps = Caps { product: 2, composition: 4, newton: 3 };
        let t = UniversalTable::build(&Generator::new(caps, None)).unwrap();
        assert!(t.q(3).is_some() && t.q(4).is_none() && t.q(0).is_none());
        assert!(t.p(2).is_some() && t.p(3).is_none());
        let pairs: Vec<_> = t.pnm_params().collect();
        assert_eq!(pairs, vec![(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (3, 1), (4, 1)]);
    }

    #[test]
    fn generator_enforces_caps_before_cache() {
        let g = Generator::new(Caps { product: 1, composition: 2, newton: 1 }, None);
        assert!(matches!(g.get(UniversalId::P(2)), Err(UniversalError::CapExceeded { .. })));
        assert!(g.get(UniversalId::Pnm(1, 2)).is_ok());
    }
}
