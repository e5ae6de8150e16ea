//! Name-keyed registries of interchangeable strategies.
//!
//! Each family of algorithms (dominance orders, graphicality tests,
//! enumeration oracles) is a trait; concrete variants are registered under
//! a stable name and looked up at runtime, typically from a CLI flag.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

/// Implemented by every registrable strategy.
pub trait Named {
    fn name(&self) -> &'static str;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {family} {name:?}; expected one of: {}", known.join(", "))]
pub struct UnknownStrategy {
    pub family: &'static str,
    pub name: String,
    pub known: Vec<&'static str>,
}

pub struct Registry<T: ?Sized> {
    family: &'static str,
    entries: BTreeMap<&'static str, Arc<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(family: &'static str) -> Self {
        Registry {
            family,
            entries: BTreeMap::new(),
        }
    }

    /// Registers `strategy` under its own name, replacing any previous entry.
    pub fn register(&mut self, strategy: Arc<T>) -> &mut Self {
        self.entries.insert(strategy.name(), strategy);
        self
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>, UnknownStrategy> {
        self.entries.get(name).cloned().ok_or_else(|| UnknownStrategy {
            family: self.family,
            name: name.to_string(),
            known: self.names(),
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Arc<T>> {
        self.entries.values()
    }
}
