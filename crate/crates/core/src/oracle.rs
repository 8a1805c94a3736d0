//! The value-oracle interface: black-box access to `f: 2^P → ℝ≥0`.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{ElementId, Subset};

/// A set function queried only through its values.
///
/// Implementations must be pure: equal subsets give equal values, and
/// concurrent calls are allowed.
pub trait ValueOracle: Send + Sync {
    fn ground_size(&self) -> usize;

    fn value(&self, set: &Subset) -> f64;

    fn name(&self) -> &str {
        "anonymous"
    }

    /// Upper bound on `f` over all subsets, used for Hoeffding widths.
    fn value_range(&self) -> Option<f64> {
        None
    }

    /// Known total curvature, when the instance family pins it down.
    fn curvature_hint(&self) -> Option<f64> {
        None
    }
}

impl<T: ValueOracle + ?Sized> ValueOracle for &T {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn value(&self, set: &Subset) -> f64 {
        (**self).value(set)
    }
    fn name(&self) -> &str {
        (**self).name()
    }
    fn value_range(&self) -> Option<f64> {
        (**self).value_range()
    }
    fn curvature_hint(&self) -> Option<f64> {
        (**self).curvature_hint()
    }
}

impl<T: ValueOracle + ?Sized> ValueOracle for Box<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn value(&self, set: &Subset) -> f64 {
        (**self).value(set)
    }
    fn name(&self) -> &str {
        (**self).name()
    }
    fn value_range(&self) -> Option<f64> {
        (**self).value_range()
    }
    fn curvature_hint(&self) -> Option<f64> {
        (**self).curvature_hint()
    }
}

impl<T: ValueOracle + ?Sized> ValueOracle for Arc<T> {
    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn value(&self, set: &Subset) -> f64 {
        (**self).value(set)
    }
    fn name(&self) -> &str {
        (**self).name()
    }
    fn value_range(&self) -> Option<f64> {
        (**self).value_range()
    }
    fn curvature_hint(&self) -> Option<f64> {
        (**self).curvature_hint()
    }
}

/// Wraps a closure as an oracle. Handy for decoys and ad-hoc functions.
pub struct FnOracle<F> {
    n: usize,
    name: String,
    func: F,
}

impl<F: Fn(&Subset) -> f64 + Send + Sync> FnOracle<F> {
    pub fn new(n: usize, name: impl Into<String>, func: F) -> Self {
        Self { n, name: name.into(), func }
    }
}

impl<F: Fn(&Subset) -> f64 + Send + Sync> ValueOracle for FnOracle<F> {
    fn ground_size(&self) -> usize {
        self.n
    }
    fn value(&self, set: &Subset) -> f64 {
        (self.func)(set)
    }
    fn name(&self) -> &str {
        &self.name
    }
}

/// Counts every evaluation passed through to the inner oracle.
pub struct CountingOracle<O> {
    inner: O,
    calls: AtomicU64,
}

impl<O: ValueOracle> CountingOracle<O> {
    pub fn new(inner: O) -> Self {
        Self { inner, calls: AtomicU64::new(0) }
    }

    pub fn calls(&self) -> u64 {
        self.calls.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.calls.store(0, Ordering::Relaxed);
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}

impl<O: ValueOracle> ValueOracle for CountingOracle<O> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn value(&self, set: &Subset) -> f64 {
        self.calls.fetch_add(1, Ordering::Relaxed);
        self.inner.value(set)
    }
    fn name(&self) -> &str {
        self.inner.name()
    }
    fn value_range(&self) -> Option<f64> {
        self.inner.value_range()
    }
    fn curvature_hint(&self) -> Option<f64> {
        self.inner.curvature_hint()
    }
}

/// `Δ_f(p | S) = f(S ∪ {p}) − f(S)`.
///
/// Returns 0 without querying the oracle when `p ∈ S`.
pub fn marginal_gain<O: ValueOracle + ?Sized>(f: &O, p: ElementId, set: &Subset) -> Result<f64> {
    let n = f.ground_size();
    if p >= n {
        return Err(Error::ElementOutOfRange { element: p, size: n });
    }
    set.check_width(n)?;
    if set.contains(p) {
        return Ok(0.0);
    }
    Ok(f.value(&set.with(p)) - f.value(set))
}

/// Every value of `f`, indexed by subset mask. Limited to `n ≤ 24`.
pub fn value_table<O: ValueOracle + ?Sized>(f: &O) -> Result<Vec<f64>> {
    const LIMIT: usize = 24;
    let n = f.ground_size();
    if n > LIMIT {
        return Err(Error::TooLargeForExhaustive { n, limit: LIMIT });
    }
    Ok((0..1u64 << n).map(|m| f.value(&Subset::from_mask(n, m))).collect())
}

/// Upper bound on `f`: metadata when present, otherwise `Σ_p f({p})`,
/// which bounds any normal monotone submodular function.
pub fn range_bound<O: ValueOracle + ?Sized>(f: &O) -> f64 {
    f.value_range().unwrap_or_else(|| {
        let n = f.ground_size();
        (0..n).map(|p| f.value(&Subset::singleton(n, p)).max(0.0)).sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn marginal_gain_matches_two_evaluations() {
        let f = FnOracle::new(4, "sq", |s: &Subset| (s.len() * s.len()) as f64);
        let s = Subset::from_elements(4, [1, 2]).unwrap();
        assert_eq!(marginal_gain(&f, 0, &s).unwrap(), 9.0 - 4.0);
        assert_eq!(marginal_gain(&f, 1, &s).unwrap(), 0.0);
        assert!(matches!(marginal_gain(&f, 7, &s), Err(Error::ElementOutOfRange { .. })));
        assert!(matches!(
            marginal_gain(&f, 0, &Subset::empty(5)),
            Err(Error::GroundSetMismatch { .. })
        ));
    }

    #[test]
    fn counting_wrapper_counts() {
        let f = CountingOracle::new(FnOracle::new(3, "card", |s: &Subset| s.len() as f64));
        let s = Subset::empty(3);
        marginal_gain(&f, 0, &s).unwrap();
        assert_eq!(f.calls(), 2);
        marginal_gain(&f, 0, &s.with(0)).unwrap();
        assert_eq!(f.calls(), 2);
    }
}
