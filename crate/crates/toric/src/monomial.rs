//! Monomials in at most [`MAX_VARS`] variables as dense exponent arrays.

use std::fmt;

use crate::ToricError;

pub const MAX_VARS: usize = 64;

/// A monomial `x^a` with a cached support mask and total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
    support: u64,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
            support: 0,
            degree: 0,
        }
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable {i} out of range");
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m.support = 1 << i;
        m.degree = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Result<Self, ToricError> {
        if exps.len() > MAX_VARS {
            return Err(ToricError::TooManyVariables(exps.len()));
        }
        let mut m = Monomial::one();
        for (i, &e) in exps.iter().enumerate() {
            let e = u8::try_from(e).map_err(|_| ToricError::ExponentOverflow)?;
            m.exps[i] = e;
            if e > 0 {
                m.support |= 1 << i;
                m.degree += e as u32;
            }
        }
        Ok(m)
    }

    /// Product of the listed variables, with repetition.
    pub fn product(vars: &[usize]) -> Self {
        vars.iter()
            .fold(Monomial::one(), |m, &v| m.mul(&Monomial::var(v)))
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    /// The first `d` exponents.
    pub fn exps(&self, d: usize) -> &[u8] {
        &self.exps[..d]
    }

    pub fn support(&self) -> u64 {
        self.support
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.support == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.support & !other.support != 0 || self.degree > other.degree {
            return false;
        }
        support_iter(self.support).all(|i| self.exps[i] <= other.exps[i])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support & other.support == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in support_iter(other.support) {
            m.exps[i] = m.exps[i]
                .checked_add(other.exps[i])
                .expect("exponent overflow");
        }
        m.support |= other.support;
        m.degree += other.degree;
        m
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut m = *self;
        for i in support_iter(other.support) {
            m.exps[i] -= other.exps[i];
            if m.exps[i] == 0 {
                m.support &= !(1 << i);
            }
        }
        m.degree -= other.degree;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in support_iter(other.support) {
            if other.exps[i] > m.exps[i] {
                m.degree += (other.exps[i] - m.exps[i]) as u32;
                m.exps[i] = other.exps[i];
            }
        }
        m.support |= other.support;
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in support_iter(self.support & other.support) {
            let e = self.exps[i].min(other.exps[i]);
            m.exps[i] = e;
            m.support |= 1 << i;
            m.degree += e as u32;
        }
        m
    }

    /// Variables with nonzero exponent, increasing.
    pub fn vars(&self) -> impl Iterator<Item = usize> {
        support_iter(self.support)
    }

    /// Renames variable `i` to `map[i]`; `None` if a used variable has no
    /// image.
    pub fn remap(&self, map: &[Option<usize>]) -> Option<Monomial> {
        let mut m = Monomial::one();
        for i in self.vars() {
            let j = (*map.get(i)?)?;
            m.exps[j] = self.exps[i];
            m.support |= 1 << j;
        }
        m.degree = self.degree;
        Some(m)
    }

    /// Renders the monomial with `name(i)` for variable `i`.
    pub fn display_with<F: Fn(usize) -> String>(&self, name: F) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.vars()
            .map(|i| match self.exps[i] {
                1 => name(i),
                e => format!("{}^{e}", name(i)),
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(|i| format!("x{i}")))
    }
}

pub(crate) fn support_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
