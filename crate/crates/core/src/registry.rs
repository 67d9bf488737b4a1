//! Name-keyed collections of interchangeable strategies.

use crate::error::{Error, Result};

/// Trait objects registered under a name, kept in registration order.
pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<(String, Box<T>)>,
}

impl<T: ?Sized> Registry<T> {
    /// `kind` names the family in error messages ("photonic variant", ...).
    pub fn new(kind: &'static str) -> Self {
        Self {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds or replaces the entry called `name`.
    pub fn register(&mut self, name: impl Into<String>, item: Box<T>) -> &mut Self {
        let name = name.into();
        match self.entries.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = item,
            None => self.entries.push((name, item)),
        }
        self
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, b)| b.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
            })
    }

    /// Keeps only the entries in `names`, in that order. Fails on the first
    /// unknown name and leaves the registry untouched.
    pub fn select(&mut self, names: &[impl AsRef<str>]) -> Result<()> {
        for n in names {
            self.get(n.as_ref())?;
        }
        let mut old = std::mem::take(&mut self.entries);
        for n in names {
            if let Some(i) = old.iter().position(|(k, _)| k == n.as_ref()) {
                self.entries.push(old.remove(i));
            }
        }
        Ok(())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(n, _)| n.as_str())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &T)> {
        self.entries.iter().map(|(n, b)| (n.as_str(), b.as_ref()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
