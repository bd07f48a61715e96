use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use crate::suggestion::Suggestion;

type Slot = Arc<OnceLock<Arc<Vec<Suggestion>>>>;

/// Per-document memo of suggestion lists keyed by the misspelled word.
///
/// Each key is computed exactly once even when several workers ask for it at
/// the same time: the first caller creates the slot and fills it, later callers
/// count as hits and wait on the slot.
#[derive(Debug, Default)]
pub struct SuggestionCache {
    slots: Mutex<HashMap<String, Slot>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize)]
pub struct CacheStats {
    pub hits: u64,
    pub misses: u64,
    pub entries: usize,
}

impl SuggestionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get_or_compute<F>(&self, key: &str, compute: F) -> Arc<Vec<Suggestion>>
    where
        F: FnOnce() -> Vec<Suggestion>,
    {
        let slot = {
            let mut slots = self.slots.lock().unwrap_or_else(|e| e.into_inner());
            match slots.get(key) {
                Some(slot) => {
                    self.hits.fetch_add(1, Ordering::Relaxed);
                    slot.clone()
                }
                None => {
                    self.misses.fetch_add(1, Ordering::Relaxed);
                    let slot = Slot::default();
                    slots.insert(key.to_string(), slot.clone());
                    slot
                }
            }
        };
        slot.get_or_init(|| Arc::new(compute())).clone()
    }

    pub fn get(&self, key: &str) -> Option<Arc<Vec<Suggestion>>> {
        let slots = self.slots.lock().unwrap_or_else(|e| e.into_inner());
        slots.get(key).and_then(|s| s.get().cloned())
    }

    pub fn stats(&self) -> CacheStats {
        let entries = self.slots.lock().unwrap_or_else(|e| e.into_inner()).len();
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries,
        }
    }

    pub fn clear(&self) {
        self.slots.lock().unwrap_or_else(|e| e.into_inner()).clear();
        self.hits.store(0, Ordering::Relaxed);
        self.misses.store(0, Ordering::Relaxed);
    }
}
