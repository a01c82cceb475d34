//! Exact Fibonacci numbers and the degree-to-weight maps built on them.
//!
//! `f_0 = 0`, `f_1 = f_2 = 1`, `f_i = f_{i-1} + f_{i-2}`. Values overflow a
//! `u64` at `f_94`, so everything here is arbitrary precision.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Append-only memo of Fibonacci numbers.
///
/// Extension takes `&mut self`; once warmed up with [`FibCache::up_to`] or
/// [`FibCache::ensure`] a cache can be shared immutably and read through
/// [`FibCache::get`].
#[derive(Debug, Clone)]
pub struct FibCache {
    values: Vec<BigUint>,
}

impl Default for FibCache {
    fn default() -> Self {
        Self::new()
    }
}

impl FibCache {
    pub fn new() -> Self {
        FibCache {
            values: vec![BigUint::zero(), BigUint::one(), BigUint::one()],
        }
    }

    /// A cache holding at least `f_0 ..= f_max`.
    pub fn up_to(max: usize) -> Self {
        let mut cache = Self::new();
        cache.extend_to(max);
        cache
    }

    /// Number of cached entries (highest cached index + 1).
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Makes sure `f_i` is cached, growing geometrically.
    pub fn ensure(&mut self, i: usize) {
        if i >= self.values.len() {
            let target = i.max(2 * self.values.len());
            self.extend_to(target);
        }
    }

    fn extend_to(&mut self, max: usize) {
        self.values.reserve((max + 1).saturating_sub(self.values.len()));
        while self.values.len() <= max {
            let n = self.values.len();
            let next = &self.values[n - 1] + &self.values[n - 2];
            self.values.push(next);
        }
    }

    /// Read-only lookup; `None` if `i` has not been cached yet.
    pub fn get(&self, i: usize) -> Option<&BigUint> {
        self.values.get(i)
    }

    /// `f_i`, extending the cache on demand.
    pub fn fib(&mut self, i: usize) -> &BigUint {
        self.ensure(i);
        &self.values[i]
    }

    /// Fibonacci weight of a vertex of degree `d`.
    pub fn weight(&mut self, d: usize) -> BigUint {
        self.fib(d).clone()
    }

    /// Signed weight: `-f_d` for odd `d`, `+f_d` for even `d`.
    pub fn signed_weight(&mut self, d: usize) -> BigInt {
        let w = BigInt::from(self.fib(d).clone());
        if d % 2 == 1 {
            -w
        } else {
            w
        }
    }
}

/// `f_i` by direct iteration, without a cache.
pub fn fib(i: usize) -> BigUint {
    let mut a = BigUint::zero();
    let mut b = BigUint::one();
    for _ in 0..i {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

pub fn weight_of_degree(d: usize) -> BigUint {
    fib(d)
}

pub fn signed_weight_of_degree(d: usize) -> BigInt {
    let w = BigInt::from(fib(d));
    if d % 2 == 1 {
        -w
    } else {
        w
    }
}

/// Walks `f_i` upward from `f_0` without storing the history.
#[derive(Debug, Clone)]
pub(crate) struct FibCursor {
    index: usize,
    current: BigUint,
    next: BigUint,
}

impl FibCursor {
    pub(crate) fn new() -> Self {
        FibCursor {
            index: 0,
            current: BigUint::zero(),
            next: BigUint::one(),
        }
    }

    /// Advances to `f_i`; `i` must not be behind the cursor.
    pub(crate) fn seek(&mut self, i: usize) -> &BigUint {
        debug_assert!(i >= self.index);
        while self.index < i {
            let after = &self.current + &self.next;
            self.current = std::mem::replace(&mut self.next, after);
            self.index += 1;
        }
        &self.current
    }
}
