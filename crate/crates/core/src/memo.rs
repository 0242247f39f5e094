use std::sync::{Arc, PoisonError, RwLock};

/// Append-only memo of an integer-indexed sequence. Entry `i` is built from the
/// already computed prefix `0..i` exactly once, under the write lock.
pub(crate) struct Memo<T> {
    items: RwLock<Vec<Arc<T>>>,
}

impl<T> Memo<T> {
    pub(crate) const fn new() -> Self {
        Memo {
            items: RwLock::new(Vec::new()),
        }
    }

    pub(crate) fn get(&self, n: usize, build: impl Fn(usize, &[Arc<T>]) -> T) -> Arc<T> {
        {
            let items = self.items.read().unwrap_or_else(PoisonError::into_inner);
            if let Some(v) = items.get(n) {
                return Arc::clone(v);
            }
        }
        let mut items = self.items.write().unwrap_or_else(PoisonError::into_inner);
        while items.len() <= n {
            let next = build(items.len(), &items);
            items.push(Arc::new(next));
        }
        Arc::clone(&items[n])
    }
}
