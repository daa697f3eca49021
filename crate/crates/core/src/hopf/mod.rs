//! The natural Hopf algebra 𝒩_M of a set operad.
//!
//! Generators are isomorphism types; Δ sums over factorizations of a fixed
//! representative, ε picks out the singleton type, and the antipode oracle
//! is the convolution-inverse recursion over proper factorizations.

mod weight;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

pub use weight::{convolve, Weight};

use crate::algebra::{Coeff, Monomial, Polynomial, Tensor2, Tensor3, TypeKey};
use crate::error::{Error, Result};
use crate::operads::{factorizations, FactorFilter, Operad};
use crate::structures::{Caps, Label, Species, Structure};

/// An operad together with memo tables for its Hopf algebra.
pub struct HopfContext {
    op: Arc<dyn Operad>,
    caps: Caps,
    reps: Mutex<HashMap<usize, Arc<BTreeMap<TypeKey, Structure>>>>,
    coproducts: Mutex<HashMap<TypeKey, Tensor2>>,
    antipodes: Mutex<HashMap<TypeKey, Polynomial>>,
}

impl HopfContext {
    pub fn new(op: Arc<dyn Operad>, caps: Caps) -> Arc<HopfContext> {
        Arc::new(HopfContext {
            op,
            caps,
            reps: Mutex::default(),
            coproducts: Mutex::default(),
            antipodes: Mutex::default(),
        })
    }

    pub fn operad(&self) -> &dyn Operad {
        self.op.as_ref()
    }

    pub fn operad_arc(&self) -> Arc<dyn Operad> {
        self.op.clone()
    }

    pub fn caps(&self) -> &Caps {
        &self.caps
    }

    pub fn species(&self) -> Species {
        self.op.species()
    }

    /// First structure of each type in enumeration order on `1..=n`.
    fn table(&self, n: usize) -> Result<Arc<BTreeMap<TypeKey, Structure>>> {
        self.caps.check(self.species(), n)?;
        if let Some(t) = self.reps.lock().expect("poisoned").get(&n) {
            return Ok(t.clone());
        }
        let labels: Vec<Label> = (1..=n as Label).collect();
        let mut table = BTreeMap::new();
        for s in self.op.enumerate(&labels, &self.caps)? {
            table.entry(s.key()).or_insert(s);
        }
        let table = Arc::new(table);
        self.reps.lock().expect("poisoned").insert(n, table.clone());
        Ok(table)
    }

    /// The isomorphism types of size `n`, in monomial order.
    pub fn types(&self, n: usize) -> Result<Vec<TypeKey>> {
        Ok(self.table(n)?.keys().cloned().collect())
    }

    pub fn representative(&self, key: &TypeKey) -> Result<Structure> {
        if key.tag() != self.species().tag() {
            return Err(Error::SpeciesMismatch {
                expected: self.species().tag().as_str().into(),
                found: key.tag().as_str().into(),
            });
        }
        self.table(key.size())?.get(key).cloned().ok_or_else(|| Error::UnknownType(key.wire()))
    }

    /// Capped type of a user-supplied structure of this operad's species.
    pub fn key_of(&self, m: &Structure) -> Result<TypeKey> {
        if m.species() != self.species() {
            return Err(Error::SpeciesMismatch {
                expected: self.species().tag().as_str().into(),
                found: m.species().tag().as_str().into(),
            });
        }
        m.validate()?;
        m.key_capped(&self.caps)
    }

    /// Δ(t_{τ(m)}) computed from `m` itself.
    pub fn coproduct_of(&self, m: &Structure) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for f in factorizations(self.operad(), m, FactorFilter::default(), &self.caps)? {
            out.add_term(f.assembly.monomial(), Monomial::generator(f.outer.key()), Coeff::one());
        }
        Ok(out)
    }

    pub fn coproduct(&self, key: &TypeKey) -> Result<Tensor2> {
        if key.is_singleton() {
            return Ok(Tensor2::one());
        }
        if let Some(d) = self.coproducts.lock().expect("poisoned").get(key) {
            return Ok(d.clone());
        }
        let d = self.coproduct_of(&self.representative(key)?)?;
        self.coproducts.lock().expect("poisoned").insert(key.clone(), d.clone());
        Ok(d)
    }

    /// Δ extended multiplicatively.
    pub fn coproduct_monomial(&self, m: &Monomial) -> Result<Tensor2> {
        let mut out = Tensor2::one();
        for k in m.factors() {
            out = out.mul(&self.coproduct(k)?);
        }
        Ok(out)
    }

    pub fn coproduct_poly(&self, p: &Polynomial) -> Result<Tensor2> {
        let mut out = Tensor2::zero();
        for (m, c) in p.terms() {
            out = out.add(&self.coproduct_monomial(m)?.scale(c));
        }
        Ok(out)
    }

    /// S(t_α) = −t_α − Σ S(t_{τ(a)}) t_{τ(m′)} over factorizations with 2 ≤ |π| ≤ |U| − 1.
    pub fn antipode_recursive(&self, key: &TypeKey) -> Result<Polynomial> {
        if key.is_singleton() {
            return Ok(Polynomial::one());
        }
        if let Some(s) = self.antipodes.lock().expect("poisoned").get(key) {
            return Ok(s.clone());
        }
        let m = self.representative(key)?;
        let mut s = -Polynomial::generator(key.clone());
        for f in factorizations(self.operad(), &m, FactorFilter::proper(), &self.caps)? {
            let left = self.antipode_monomial(&f.assembly.monomial())?;
            s = s - left * Polynomial::generator(f.outer.key());
        }
        self.antipodes.lock().expect("poisoned").insert(key.clone(), s.clone());
        Ok(s)
    }

    pub fn antipode_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        let mut out = Polynomial::one();
        for k in m.factors() {
            out = out * self.antipode_recursive(k)?;
        }
        Ok(out)
    }

    pub fn antipode_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in p.terms() {
            out += self.antipode_monomial(m)?.scale(c);
        }
        Ok(out)
    }

    /// (Δ ⊗ id)Δ and (id ⊗ Δ)Δ of a generator.
    pub fn coassociativity_sides(&self, key: &TypeKey) -> Result<(Tensor3, Tensor3)> {
        let d = self.coproduct(key)?;
        let mut left = Tensor3::default();
        let mut right = Tensor3::default();
        for ((l, r), c) in d.terms() {
            for ((ll, lr), c2) in self.coproduct_monomial(l)?.terms() {
                left.add_term(ll.clone(), lr.clone(), r.clone(), c * c2);
            }
            for ((rl, rr), c2) in self.coproduct_monomial(r)?.terms() {
                right.add_term(l.clone(), rl.clone(), rr.clone(), c * c2);
            }
        }
        Ok((left, right))
    }

    /// (ε ⊗ id)Δ and (id ⊗ ε)Δ of a generator.
    pub fn counit_sides(&self, key: &TypeKey) -> Result<(Polynomial, Polynomial)> {
        let d = self.coproduct(key)?;
        let mut left = Polynomial::zero();
        let mut right = Polynomial::zero();
        for ((l, r), c) in d.terms() {
            left.add_term(r.clone(), c * counit_monomial(l));
            right.add_term(l.clone(), c * counit_monomial(r));
        }
        Ok((left, right))
    }

    /// True when Δ(t_α) = t_α ⊗ 1 + 1 ⊗ t_α.
    pub fn is_primitive(&self, key: &TypeKey) -> Result<bool> {
        let d = self.coproduct(key)?;
        let t = Monomial::generator(key.clone());
        Ok(d.len() == 2 && d.coeff(&t, &Monomial::one()).is_one() && d.coeff(&Monomial::one(), &t).is_one())
    }
}

/// ε on a generator: 1 on the singleton type, 0 otherwise.
pub fn counit(key: &TypeKey) -> Coeff {
    if key.is_singleton() {
        Coeff::one()
    } else {
        Coeff::zero()
    }
}

pub fn counit_monomial(m: &Monomial) -> Coeff {
    m.factors().iter().map(counit).product()
}

/// ε extended as an algebra map.
pub fn counit_poly(p: &Polynomial) -> Coeff {
    p.terms().map(|(m, c)| c * counit_monomial(m)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, SpeciesTag};
    use crate::operads::operad_by_name;

    fn set_key(n: usize) -> TypeKey {
        TypeKey::new(SpeciesTag::Set, n, vec![])
    }

    #[test]
    fn faa_di_bruno_low_degrees() {
        let ctx = HopfContext::new(operad_by_name("e+").unwrap(), Caps::default());
        let d = ctx.coproduct(&set_key(3)).unwrap();
        let t2 = Monomial::generator(set_key(2));
        let t3 = Monomial::generator(set_key(3));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&t2, &t2), rat(3));
        assert_eq!(d.coeff(&Monomial::one(), &t3), rat(1));
        let s = ctx.antipode_recursive(&set_key(3)).unwrap();
        let expected = -Polynomial::generator(set_key(3)) + Polynomial::generator(set_key(2)).pow(2).scale(&rat(3));
        assert_eq!(s, expected);
        assert_eq!(ctx.antipode_recursive(&set_key(2)).unwrap(), -Polynomial::generator(set_key(2)));
    }

    #[test]
    fn counit_values() {
        assert_eq!(counit(&set_key(1)), rat(1));
        assert_eq!(counit(&set_key(2)), rat(0));
        let p = Polynomial::generator(set_key(2)) * Polynomial::generator(set_key(3));
        assert_eq!(counit_poly(&p), rat(0));
        assert_eq!(counit_poly(&Polynomial::one()), rat(1));
    }

    #[test]
    fn wrong_species_is_rejected() {
        let ctx = HopfContext::new(operad_by_name("gr").unwrap(), Caps::default());
        assert!(matches!(ctx.coproduct(&set_key(3)), Err(Error::SpeciesMismatch { .. })));
    }
}
