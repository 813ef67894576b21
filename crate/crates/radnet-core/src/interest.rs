//! Application interests and their 32-bit wire codes.

use alloc::borrow::ToOwned;
use alloc::collections::BTreeMap;
use alloc::string::String;
use core::fmt;

/// An application-meaningful term. Opaque to the network beyond equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Interest(String);

impl Interest {
    /// Interests are non-empty strings.
    pub fn new(name: impl Into<String>) -> Option<Interest> {
        let name = name.into();
        if name.is_empty() {
            None
        } else {
            Some(Interest(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Interest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Interest({:?})", self.0)
    }
}

impl fmt::Display for Interest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An interest registered in a node's network layer together with the
/// maximum number of hops messages carrying it may travel.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InterestRegistration {
    pub interest: Interest,
    pub max_hops: u8,
}

/// Bidirectional map between interest strings and the 32-bit codes carried
/// in message headers. Built once per run from the scenario configuration;
/// codes are assigned in sorted name order so the mapping is stable for a
/// given configuration.
#[derive(Clone, Debug, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct InterestCodebook {
    by_name: BTreeMap<String, u32>,
    by_code: BTreeMap<u32, String>,
}

impl InterestCodebook {
    pub fn build<I, S>(names: I) -> InterestCodebook
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut sorted: alloc::vec::Vec<String> =
            names.into_iter().map(Into::into).filter(|n| !n.is_empty()).collect();
        sorted.sort();
        sorted.dedup();
        let mut book = InterestCodebook::default();
        for (i, name) in sorted.into_iter().enumerate() {
            let code = i as u32 + 1;
            book.by_code.insert(code, name.clone());
            book.by_name.insert(name, code);
        }
        book
    }

    pub fn code(&self, name: &str) -> Option<u32> {
        self.by_name.get(name).copied()
    }

    pub fn name(&self, code: u32) -> Option<&str> {
        self.by_code.get(&code).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.by_name.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_name.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u32)> {
        self.by_name.iter().map(|(n, c)| (n.as_str(), *c))
    }

    /// Registers a name late (used by tests and ad hoc topologies);
    /// existing entries keep their codes.
    pub fn intern(&mut self, name: &str) -> u32 {
        if let Some(c) = self.code(name) {
            return c;
        }
        let code = self.by_code.keys().next_back().copied().unwrap_or(0) + 1;
        self.by_code.insert(code, name.to_owned());
        self.by_name.insert(name.to_owned(), code);
        code
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interests_must_be_non_empty() {
        assert!(Interest::new("").is_none());
        assert!(Interest::new("obstacle_req").is_some());
    }

    #[test]
    fn codebook_is_injective_both_ways() {
        let book = InterestCodebook::build(["b", "a", "c", "a"]);
        assert_eq!(book.len(), 3);
        let mut codes: alloc::vec::Vec<u32> =
            ["a", "b", "c"].iter().map(|n| book.code(n).unwrap()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), 3);
        for (name, code) in book.iter() {
            assert_eq!(book.name(code), Some(name));
        }
    }

    #[test]
    fn codebook_is_stable_for_a_configuration() {
        let a = InterestCodebook::build(["x", "y", "z"]);
        let b = InterestCodebook::build(["z", "y", "x"]);
        for name in ["x", "y", "z"] {
            assert_eq!(a.code(name), b.code(name));
        }
    }

    #[test]
    fn intern_appends_without_disturbing_existing_codes() {
        let mut book = InterestCodebook::build(["a", "b"]);
        let a = book.code("a").unwrap();
        let c = book.intern("c");
        assert_eq!(book.code("a"), Some(a));
        assert_eq!(book.code("c"), Some(c));
        assert_eq!(book.intern("c"), c);
    }
}
