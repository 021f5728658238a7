//! Permutations of `{0, .., n-1}`.
//!
//! Composition is left to right: `p.then(&q)` maps `x` to `q(p(x))`. Every
//! module in the crate relies on this, including conjugation
//! (`x^g = g⁻¹ x g`) and commutators (`[x, y] = x⁻¹ y⁻¹ x y`).

use std::fmt;

use crate::{GroupError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(GroupError::InvalidPermutation(format!(
                    "image list {images:?} is not a bijection"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles given as point lists.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {x} out of range for degree {degree}"
                    )));
                }
                if touched[x] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "point {x} appears twice in cycle notation"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses 0-based cycle notation such as `"(0 1 2)(3 4)"` or `"()"`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse_cycle_notation(text)
            .map_err(|e| GroupError::InvalidPermutation(e.to_string()))?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Left-to-right product: first `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: i64) -> Permutation {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (x, &gx) in g.images.iter().enumerate() {
            images[gx as usize] = g.images[self.images[x] as usize];
        }
        Permutation { images }
    }

    /// `[self, other] = self⁻¹ other⁻¹ self other`.
    pub fn commutator(&self, other: &Permutation) -> Permutation {
        self.inverse()
            .then(&other.inverse())
            .then(self)
            .then(other)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images
            .iter()
            .zip(&other.images)
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Order as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Places `self` on the points `offset..offset+degree` of a larger set.
    pub fn embed(&self, offset: usize, total: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// Restriction to `offset..offset+len`, which must be an invariant block.
    pub fn restrict(&self, offset: usize, len: usize) -> Permutation {
        Permutation {
            images: self.images[offset..offset + len]
                .iter()
                .map(|&x| x - offset as u32)
                .collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

/// Syntax error in cycle notation, with the byte offset where it was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSyntaxError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for CycleSyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cycle notation error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for CycleSyntaxError {}

/// Parses `"(0 1 2)(3 4)"` into point lists. Whitespace is allowed anywhere
/// between tokens, and commas are accepted as separators inside a cycle.
pub fn parse_cycle_notation(text: &str) -> std::result::Result<Vec<Vec<usize>>, CycleSyntaxError> {
    let err = |position: usize, message: &str| CycleSyntaxError {
        position,
        message: message.to_string(),
    };
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles = Vec::new();
    let mut saw_any = false;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(err(i, "expected '('"));
        }
        saw_any = true;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(err(i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            if !bytes[i].is_ascii_digit() {
                return Err(err(i, "expected a point or ')'"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value: usize = text[start..i]
                .parse()
                .map_err(|_| err(start, "point out of range"))?;
            cycle.push(value);
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }
    if !saw_any {
        return Err(err(0, "empty input; write \"()\" for the identity"));
    }
    Ok(cycles)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
