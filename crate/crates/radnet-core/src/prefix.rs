//! Node prefixes: the probabilistic network-layer identity.
//!
//! A node prefix is an ordered list of `n` small integers, each drawn
//! uniformly from `[0, m)`. Concatenating the field values in order yields
//! the node identity; counting position-wise equal fields between two
//! prefixes yields the probabilistic forwarding filter.

use alloc::vec::Vec;
use core::fmt;

use crate::kernel::rng::SimRng;

/// Shape of all prefixes in one run: `field_count` fields with
/// `possibilities` admissible values each.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrefixScheme {
    pub field_count: u8,
    pub possibilities: u16,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrefixError {
    /// n or m is zero.
    EmptyScheme,
    /// The packed identity would not fit the 32-bit header field.
    TooWide { bits: u32 },
}

impl fmt::Display for PrefixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrefixError::EmptyScheme => write!(f, "prefix scheme needs n >= 1 and m >= 1"),
            PrefixError::TooWide { bits } => {
                write!(f, "prefix identity needs {bits} bits, the header field has 32")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for PrefixError {}

impl PrefixScheme {
    pub fn new(field_count: u8, possibilities: u16) -> Result<Self, PrefixError> {
        if field_count == 0 || possibilities == 0 {
            return Err(PrefixError::EmptyScheme);
        }
        let scheme = PrefixScheme { field_count, possibilities };
        let bits = scheme.field_count as u32 * scheme.bits_per_field();
        if bits > 32 {
            return Err(PrefixError::TooWide { bits });
        }
        Ok(scheme)
    }

    /// The default 8-field, 8-possibility scheme (24 identity bits).
    pub fn default_8x8() -> Self {
        PrefixScheme { field_count: 8, possibilities: 8 }
    }

    /// Bits needed to carry one field value.
    pub fn bits_per_field(&self) -> u32 {
        let m = self.possibilities as u32;
        if m <= 1 {
            1
        } else {
            32 - (m - 1).leading_zeros()
        }
    }

    /// Draws a fresh prefix, consuming exactly `field_count` values from the
    /// stream per attempt. The all-zero identity encodes the null
    /// destination sentinel, so it is rejected and redrawn (unless the
    /// scheme admits nothing else).
    pub fn generate(&self, rng: &mut SimRng) -> NodePrefix {
        loop {
            let fields: Vec<u16> = (0..self.field_count)
                .map(|_| rng.below(self.possibilities as u32) as u16)
                .collect();
            let prefix = NodePrefix { fields };
            if self.possibilities == 1 || !prefix.is_all_zero() {
                return prefix;
            }
        }
    }

    /// Unpacks a 32-bit header field into a prefix.
    pub fn decode_u32(&self, raw: u32) -> NodePrefix {
        let bpf = self.bits_per_field();
        let mask = if bpf == 32 { u32::MAX } else { (1u32 << bpf) - 1 };
        let fields = (0..self.field_count)
            .map(|i| {
                let shift = 32 - (i as u32 + 1) * bpf;
                ((raw >> shift) & mask) as u16
            })
            .collect();
        NodePrefix { fields }
    }
}

/// An ordered field vector identifying a node.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct NodePrefix {
    fields: Vec<u16>,
}

impl NodePrefix {
    pub fn from_fields(fields: Vec<u16>) -> Self {
        NodePrefix { fields }
    }

    pub fn fields(&self) -> &[u16] {
        &self.fields
    }

    pub fn len(&self) -> usize {
        self.fields.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fields.is_empty()
    }

    pub fn is_all_zero(&self) -> bool {
        self.fields.iter().all(|&f| f == 0)
    }

    /// Counts position-wise equal fields. All nodes in one run share the
    /// same scheme; a length mismatch is a configuration error.
    pub fn matching_fields(&self, other: &NodePrefix) -> usize {
        assert_eq!(
            self.fields.len(),
            other.fields.len(),
            "prefixes from different schemes compared"
        );
        self.fields
            .iter()
            .zip(other.fields.iter())
            .filter(|(a, b)| a == b)
            .count()
    }

    /// Packs the fields into the 32-bit header representation, first field
    /// in the most significant bits, zero-padded at the bottom.
    pub fn encode_u32(&self, scheme: &PrefixScheme) -> u32 {
        let bpf = scheme.bits_per_field();
        let mut raw = 0u32;
        for (i, &f) in self.fields.iter().enumerate() {
            let shift = 32 - (i as u32 + 1) * bpf;
            raw |= (f as u32) << shift;
        }
        raw
    }
}

// The identity string is the concatenation of the field values in order.
impl fmt::Display for NodePrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.fields {
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NodePrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NodePrefix({self})")
    }
}

/// Raw 32-bit prefix comparison helper used on hot paths where decoding
/// both prefixes is wasteful.
pub fn matching_fields_u32(a: u32, b: u32, scheme: &PrefixScheme) -> usize {
    let bpf = scheme.bits_per_field();
    let mask = if bpf == 32 { u32::MAX } else { (1u32 << bpf) - 1 };
    let mut count = 0;
    for i in 0..scheme.field_count as u32 {
        let shift = 32 - (i + 1) * bpf;
        if (a >> shift) & mask == (b >> shift) & mask {
            count += 1;
        }
    }
    count
}
