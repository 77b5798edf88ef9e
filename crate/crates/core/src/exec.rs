//! Data-parallel driving loops with a sequential fallback.
//!
//! With the `parallel` feature (default) the mapping helpers fan out over
//! rayon; without it they run sequentially with identical results. Outputs
//! are always index-ordered and reductions happen sequentially over the
//! collected results, so verdicts and reports are byte-identical in both
//! modes. The `seq_*` variants are always sequential; benches use them as
//! the baseline.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map `f` over `0..n`, preserving index order.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`map_indexed`].
pub fn seq_map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// First `Some` produced over `0..n`, by index order.
///
/// rayon's `find_map_first` guarantees the leftmost match, which keeps
/// witness selection deterministic.
pub fn find_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_map_first(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find_map(f)
    }
}

/// Sequential twin of [`find_first`].
pub fn seq_find_first<T, F>(n: usize, f: F) -> Option<T>
where
    F: Fn(usize) -> Option<T>,
{
    (0..n).find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let v = map_indexed(100, |i| i * i);
        assert_eq!(v, seq_map_indexed(100, |i| i * i));
    }

    #[test]
    fn find_first_is_leftmost() {
        let hit = find_first(1000, |i| if i % 7 == 3 { Some(i) } else { None });
        assert_eq!(hit, Some(3));
    }
}
