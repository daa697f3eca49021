use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::key::TypeKey;

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Commutative monomial: a sorted multiset of generators.
///
/// Constructors in the natural Hopf algebra drop singleton types (t_• = 1);
/// [`Monomial::from_keys_raw`] keeps them, for algebras where the one-vertex
/// type is a genuine generator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    factors: Vec<TypeKey>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(key: TypeKey) -> Self {
        Self::from_keys([key])
    }

    pub fn from_keys(keys: impl IntoIterator<Item = TypeKey>) -> Self {
        Self::from_keys_raw(keys.into_iter().filter(|k| !k.is_singleton()))
    }

    pub fn from_keys_raw(keys: impl IntoIterator<Item = TypeKey>) -> Self {
        let mut factors: Vec<TypeKey> = keys.into_iter().collect();
        factors.sort();
        Monomial { factors }
    }

    pub fn factors(&self) -> &[TypeKey] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            if self.factors[i] <= other.factors[j] {
                factors.push(self.factors[i].clone());
                i += 1;
            } else {
                factors.push(other.factors[j].clone());
                j += 1;
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }

    /// Generators with multiplicities, in monomial order.
    pub fn powers(&self) -> Vec<(&TypeKey, usize)> {
        let mut out: Vec<(&TypeKey, usize)> = Vec::new();
        for k in &self.factors {
            match out.last_mut() {
                Some((last, n)) if *last == k => *n += 1,
                _ => out.push((k, 1)),
            }
        }
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.factors.iter().map(|k| k.wire()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Element of the free commutative algebra over ℚ generated by type keys.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: Coeff, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(Coeff::one(), m)
    }

    /// `t_key`, which is 1 for a singleton type.
    pub fn generator(key: TypeKey) -> Self {
        Self::monomial(Monomial::generator(key))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> Coeff {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn pow(&self, e: usize) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies the algebra map sending each generator `k` to `f(k)`.
    pub fn map_generators(&self, f: &mut dyn FnMut(&TypeKey) -> Polynomial) -> Polynomial {
        let mut cache: BTreeMap<TypeKey, Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut value = Polynomial::constant(c.clone());
            for (k, e) in m.powers() {
                let image = cache.entry(k.clone()).or_insert_with(|| f(k)).clone();
                value = &value * &image.pow(e);
            }
            out += value;
        }
        out
    }

    /// Replaces one generator by a polynomial.
    pub fn substitute_generator(&self, key: &TypeKey, value: &Polynomial) -> Polynomial {
        self.map_generators(&mut |k| {
            if k == key {
                value.clone()
            } else {
                Polynomial::generator(k.clone())
            }
        })
    }

    /// Generators occurring in the polynomial.
    pub fn generators(&self) -> Vec<TypeKey> {
        let mut out: Vec<TypeKey> = self.terms.keys().flat_map(|m| m.factors().iter().cloned()).collect();
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

/// Element of the tensor square, stored on the monomial basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Monomial, Monomial), Coeff>,
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2::default()
    }

    /// 1 ⊗ 1
    pub fn one() -> Self {
        let mut t = Tensor2::zero();
        t.add_term(Monomial::one(), Monomial::one(), Coeff::one());
        t
    }

    pub fn add_term(&mut self, left: Monomial, right: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Monomial, right: &Monomial) -> Coeff {
        self.terms.get(&(left.clone(), right.clone())).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn tensor(left: &Polynomial, right: &Polynomial) -> Tensor2 {
        let mut t = Tensor2::zero();
        for (m1, c1) in left.terms() {
            for (m2, c2) in right.terms() {
                t.add_term(m1.clone(), m2.clone(), c1 * c2);
            }
        }
        t
    }

    pub fn add(&self, other: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l, r), x) in &self.terms {
            out.add_term(l.clone(), r.clone(), x * c);
        }
        out
    }

    /// Product in the tensor algebra: (a⊗b)(c⊗d) = ac⊗bd.
    pub fn mul(&self, other: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        out
    }

    /// (f ⊗ g) applied termwise, with f and g given on monomials.
    pub fn map(
        &self,
        f: &mut dyn FnMut(&Monomial) -> Polynomial,
        g: &mut dyn FnMut(&Monomial) -> Polynomial,
    ) -> Tensor2 {
        let mut out = Tensor2::zero();
        for ((l, r), c) in &self.terms {
            let fl = f(l);
            let gr = g(r);
            out = out.add(&Tensor2::tensor(&fl, &gr).scale(c));
        }
        out
    }

    /// μ: multiply the two tensor factors.
    pub fn contract(&self) -> Polynomial {
        let mut out = Polynomial::zero();
        for ((l, r), c) in &self.terms {
            out.add_term(l.mul(r), c.clone());
        }
        out
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, r), c)| format!("{c}*{l:?}⊗{r:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Element of the tensor cube, used for coassociativity checks.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), Coeff>,
}

impl Tensor3 {
    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Monomial, x: Coeff) {
        if x.is_zero() {
            return;
        }
        match self.terms.entry((a, b, c)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(x);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += x;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Formats a coefficient as `p/q`.
pub fn coeff_string(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_coeff(s: &str) -> Option<Coeff> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}
