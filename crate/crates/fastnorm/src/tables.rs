//! Per-dimension constant tables shared by the sorted-component norms.

use std::sync::{Arc, RwLock};

/// Returns a table with `table[t-1] = 1/sqrt(t)` for `t = 1..=n` (possibly
/// longer). Grown copy-on-write: published tables are immutable, so readers
/// on other threads are never invalidated, and regrowth always reproduces
/// identical entries.
pub(crate) fn inv_sqrt(n: usize) -> Arc<[f64]> {
    static CACHE: RwLock<Option<Arc<[f64]>>> = RwLock::new(None);

    if let Some(table) = CACHE.read().expect("inv_sqrt cache poisoned").as_ref() {
        if table.len() >= n {
            return Arc::clone(table);
        }
    }
    let mut guard = CACHE.write().expect("inv_sqrt cache poisoned");
    if let Some(table) = guard.as_ref() {
        if table.len() >= n {
            return Arc::clone(table);
        }
    }
    let len = n.max(64);
    let grown: Arc<[f64]> = (1..=len).map(|t| 1.0 / (t as f64).sqrt()).collect();
    *guard = Some(Arc::clone(&grown));
    grown
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_entries_are_exact() {
        let t = inv_sqrt(4);
        assert_eq!(t[0], 1.0);
        assert_eq!(t[1], 1.0 / 2f64.sqrt());
        assert_eq!(t[3], 0.5);
    }

    #[test]
    fn regrowth_preserves_prefix() {
        let small = inv_sqrt(8);
        let large = inv_sqrt(1000);
        assert!(large.len() >= 1000);
        assert_eq!(&small[..8], &large[..8]);
    }
}
