//! Partitions with strictly increasing parts and the three family
//! enumerators.
//!
//! A [`Partition`] stores its parts in strictly increasing order, so
//! distinctness is structural. Three families of a given weight `n` matter
//! here:
//!
//! - *distinct*: every partition representable by this type,
//! - *consecutive*: adjacent parts differ by exactly 1 (singletons count),
//! - *almost consecutive*: every adjacent gap equals 1 except possibly the
//!   gap directly above the smallest part (singletons and all two-part
//!   partitions qualify).
//!
//! Enumerators return ascending-lexicographic order on the part lists, which
//! keeps golden-file tests deterministic. The almost-consecutive family is
//! generated in O(n) candidates from [`AlmostConsecutiveForm`] rather than by
//! filtering the (exponentially large) distinct family.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Hard ceiling on weights accepted by the enumerators. Parts and weights
/// stay comfortably inside native integers below this bound.
pub const MAX_ENUM_WEIGHT: u64 = 1_000_000;

/// A partition into distinct positive parts, stored strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Build a partition from a part list, validating that parts are
    /// positive and strictly increasing.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("partition needs at least one part"));
        }
        if parts[0] == 0 {
            return Err(Error::InvalidInput("parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput("parts must be strictly increasing"));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(!parts.is_empty() && parts[0] >= 1);
        debug_assert!(parts.windows(2).all(|w| w[0] < w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts.
    pub fn length(&self) -> u64 {
        self.parts.len() as u64
    }

    /// The smallest part.
    pub fn smallest(&self) -> u64 {
        self.parts[0]
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Gap between the two largest parts; `None` for singletons.
    pub fn last_gap(&self) -> Option<u64> {
        let k = self.parts.len();
        (k >= 2).then(|| self.parts[k - 1] - self.parts[k - 2])
    }

    /// All adjacent gaps equal 1. Singletons are consecutive.
    pub fn is_consecutive(&self) -> bool {
        self.parts.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// All adjacent gaps equal 1 except possibly the lowest one.
    /// Singletons and every two-part partition qualify.
    pub fn is_almost_consecutive(&self) -> bool {
        self.parts[1..].windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// Both class memberships at once.
    pub fn classify(&self) -> ClassFlags {
        ClassFlags {
            consecutive: self.is_consecutive(),
            almost_consecutive: self.is_almost_consecutive(),
        }
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }
}

/// Family membership flags for one partition. `consecutive` implies
/// `almost_consecutive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassFlags {
    pub consecutive: bool,
    pub almost_consecutive: bool,
}

/// Parametric form of a multi-part almost-consecutive partition:
/// `smallest, (smallest+gap), (smallest+gap+1), ..., (smallest+gap+run-1)`.
///
/// The encoded weight is `smallest*(run+1) + gap*run + run*(run-1)/2`, and
/// the correspondence with multi-part almost-consecutive partitions is
/// one-to-one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlmostConsecutiveForm {
    /// Smallest part, `>= 1`.
    pub smallest: u64,
    /// Difference between the two smallest parts, `>= 1`.
    pub gap: u64,
    /// Number of consecutive upper parts, `>= 1`.
    pub run: u64,
}

impl AlmostConsecutiveForm {
    pub fn new(smallest: u64, gap: u64, run: u64) -> Result<Self> {
        if smallest < 1 || gap < 1 || run < 1 {
            return Err(Error::InvalidInput("form fields must all be >= 1"));
        }
        Ok(AlmostConsecutiveForm { smallest, gap, run })
    }

    /// Weight of the encoded partition.
    pub fn weight(&self) -> u64 {
        self.smallest * (self.run + 1) + self.gap * self.run + self.run * (self.run - 1) / 2
    }

    /// Number of parts of the encoded partition.
    pub fn length(&self) -> u64 {
        self.run + 1
    }

    /// Materialize the encoded partition.
    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.run as usize + 1);
        parts.push(self.smallest);
        let base = self.smallest + self.gap;
        for i in 0..self.run {
            parts.push(base + i);
        }
        Partition::from_sorted_unchecked(parts)
    }

    /// Recover the form from a multi-part almost-consecutive partition.
    pub fn of(p: &Partition) -> Option<Self> {
        if p.length() < 2 || !p.is_almost_consecutive() {
            return None;
        }
        let parts = p.parts();
        Some(AlmostConsecutiveForm {
            smallest: parts[0],
            gap: parts[1] - parts[0],
            run: (parts.len() - 1) as u64,
        })
    }
}

/// Which family an enumeration or weighted sum ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PartitionClass {
    Distinct,
    Consecutive,
    Almost,
}

fn check_weight(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("weight must be >= 1"));
    }
    if n > MAX_ENUM_WEIGHT {
        return Err(Error::Budget { limit: MAX_ENUM_WEIGHT, requested: n });
    }
    Ok(())
}

/// Visit every partition of `n` into distinct parts, ascending-lexicographic.
/// The callback receives the part slice; it must copy if it wants to keep it.
pub fn for_each_distinct<F: FnMut(&[u64])>(n: u64, mut f: F) -> Result<()> {
    check_weight(n)?;
    let mut prefix: Vec<u64> = Vec::new();
    descend(n, 1, &mut prefix, &mut f);
    return Ok(());

    fn descend<F: FnMut(&[u64])>(remaining: u64, min_part: u64, prefix: &mut Vec<u64>, f: &mut F) {
        let mut part = min_part;
        // Extensions with a strictly smaller next part come before finishing
        // with `remaining` itself, which is exactly ascending-lex order.
        while part < remaining {
            // A final part of `remaining - part` must exceed `part`, so stop
            // once 2*part >= remaining and no two further parts fit either.
            if 2 * part >= remaining {
                break;
            }
            prefix.push(part);
            descend(remaining - part, part + 1, prefix, f);
            prefix.pop();
            part += 1;
        }
        if remaining >= min_part {
            prefix.push(remaining);
            f(prefix);
            prefix.pop();
        }
    }
}

/// All partitions of `n` into distinct parts, ascending-lexicographic.
pub fn enumerate_distinct(n: u64) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for_each_distinct(n, |parts| {
        out.push(Partition::from_sorted_unchecked(parts.to_vec()));
    })?;
    Ok(out)
}

/// All partitions of `n` into consecutive parts, ascending-lexicographic.
/// Their number equals the number of odd divisors of `n`.
pub fn enumerate_consecutive(n: u64) -> Result<Vec<Partition>> {
    check_weight(n)?;
    let mut out = Vec::new();
    let mut len = 1u64;
    // a + (a+1) + ... + (a+len-1) = n  <=>  len*a = n - len*(len-1)/2
    while len * (len - 1) / 2 < n {
        let rem = n - len * (len - 1) / 2;
        if rem % len == 0 {
            let a = rem / len;
            out.push(Partition::from_sorted_unchecked((a..a + len).collect()));
        }
        len += 1;
    }
    out.sort();
    Ok(out)
}

/// Visit the parametric forms of every multi-part almost-consecutive
/// partition of `n` (the singleton is not visited). Order is by run length,
/// then smallest part.
pub fn for_each_almost_form<F: FnMut(AlmostConsecutiveForm)>(n: u64, mut f: F) -> Result<()> {
    check_weight(n)?;
    let mut run = 1u64;
    // Minimal weight for a given run is smallest=gap=1.
    while (run + 1) + run + run * (run - 1) / 2 <= n {
        let base = run * (run - 1) / 2;
        let mut smallest = 1u64;
        while smallest * (run + 1) + run + base <= n {
            let rem = n - smallest * (run + 1) - base;
            if rem % run == 0 {
                // rem / run >= 1 holds by the loop condition.
                f(AlmostConsecutiveForm { smallest, gap: rem / run, run });
            }
            smallest += 1;
        }
        run += 1;
    }
    Ok(())
}

/// All almost-consecutive partitions of `n`, ascending-lexicographic.
pub fn enumerate_almost_consecutive(n: u64) -> Result<Vec<Partition>> {
    check_weight(n)?;
    let mut out = vec![Partition::from_sorted_unchecked(vec![n])];
    for_each_almost_form(n, |form| out.push(form.to_partition()))?;
    out.sort();
    Ok(out)
}

/// Dispatch to the family enumerators.
pub fn enumerate_class(n: u64, class: PartitionClass) -> Result<Vec<Partition>> {
    match class {
        PartitionClass::Distinct => enumerate_distinct(n),
        PartitionClass::Consecutive => enumerate_consecutive(n),
        PartitionClass::Almost => enumerate_almost_consecutive(n),
    }
}

/// Counts of partitions in a family aggregated by (length, smallest part).
/// Sorted by key, so iteration order is deterministic.
#[derive(Debug, Clone, Default)]
pub struct StatProfile {
    entries: Vec<((u64, u64), u64)>,
}

impl StatProfile {
    pub fn entries(&self) -> &[((u64, u64), u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, c)| *c).sum()
    }

    /// Weighted total `sum count(k, s) * weight(k, s)`.
    pub fn apply<W: Fn(u64, u64) -> i64>(&self, weight: W) -> i128 {
        self.entries
            .iter()
            .map(|&((k, s), c)| weight(k, s) as i128 * c as i128)
            .sum()
    }

    fn from_unsorted(mut entries: Vec<((u64, u64), u64)>) -> Self {
        entries.sort_unstable();
        let mut merged: Vec<((u64, u64), u64)> = Vec::with_capacity(entries.len());
        for (key, c) in entries {
            match merged.last_mut() {
                Some((k, acc)) if *k == key => *acc += c,
                _ => merged.push((key, c)),
            }
        }
        StatProfile { entries: merged }
    }
}

/// Aggregate a family of weight `n` by (length, smallest part). This is the
/// enumeration side of every weighted-sum identity: family members are
/// visited one by one and only their statistics are retained.
pub fn stat_profile(n: u64, class: PartitionClass) -> Result<StatProfile> {
    let mut raw: Vec<((u64, u64), u64)> = Vec::new();
    match class {
        PartitionClass::Distinct => {
            for_each_distinct(n, |parts| {
                raw.push(((parts.len() as u64, parts[0]), 1));
            })?;
        }
        PartitionClass::Consecutive => {
            for p in enumerate_consecutive(n)? {
                raw.push(((p.length(), p.smallest()), 1));
            }
        }
        PartitionClass::Almost => {
            raw.push(((1, n), 1)); // the singleton
            for_each_almost_form(n, |form| {
                raw.push(((form.length(), form.smallest), 1));
            })?;
        }
    }
    Ok(StatProfile::from_unsorted(raw))
}
