//! One-line signed permutations: the group elements every shuffle reduces to.

use std::fmt;

use crate::error::PermError;

/// A signed permutation in one-line form.
///
/// `images[q]` (0-based `q`) is a signed 1-based position: the card landing at
/// position `q + 1` comes from position `|images[q]|` and is flipped when the
/// entry is negative. The magnitudes form a permutation of `1..=n`.
///
/// The images vector doubles as the canonical encoding used to deduplicate
/// group elements and deck states.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (1..=n as i32).collect(),
        }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self, PermError> {
        if images.is_empty() {
            return Err(PermError::InvalidImages("no entries".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            let magnitude = v.unsigned_abs() as usize;
            if magnitude == 0 || magnitude > n {
                return Err(PermError::InvalidImages(format!(
                    "entry {v} out of range for length {n}"
                )));
            }
            if seen[magnitude - 1] {
                return Err(PermError::InvalidImages(format!(
                    "magnitude {magnitude} repeated"
                )));
            }
            seen[magnitude - 1] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<i32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        SignedPermutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Composition with `first` acting on the deck before `self`:
    /// `d.apply(&q)?.apply(&p)? == d.apply(&p.compose(&q)?)?` for every deck `d`.
    pub fn compose(&self, first: &SignedPermutation) -> Result<SignedPermutation, PermError> {
        if self.len() != first.len() {
            return Err(PermError::LengthMismatch {
                left: self.len(),
                right: first.len(),
            });
        }
        let images = self
            .images
            .iter()
            .map(|&outer| {
                let inner = first.images[outer.unsigned_abs() as usize - 1];
                if outer < 0 {
                    -inner
                } else {
                    inner
                }
            })
            .collect();
        Ok(SignedPermutation { images })
    }

    pub fn invert(&self) -> SignedPermutation {
        let mut images = vec![0; self.images.len()];
        for (q, &v) in self.images.iter().enumerate() {
            let magnitude = v.unsigned_abs() as usize;
            let signed_pos = q as i32 + 1;
            images[magnitude - 1] = if v < 0 { -signed_pos } else { signed_pos };
        }
        SignedPermutation { images }
    }

    /// Binary exponentiation; negative exponents go through the inverse.
    pub fn power(&self, exponent: i64) -> SignedPermutation {
        let mut base = if exponent < 0 {
            self.invert()
        } else {
            self.clone()
        };
        let mut remaining = exponent.unsigned_abs();
        let mut acc = SignedPermutation::identity(self.len());
        while remaining > 0 {
            if remaining & 1 == 1 {
                acc = base.compose(&acc).expect("equal lengths");
            }
            base = base.compose(&base).expect("equal lengths");
            remaining >>= 1;
        }
        acc
    }

    /// Canonical text: the deck this permutation produces from a fresh
    /// face-down deck, in deck text format.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if v < 0 {
                f.write_str("~")?;
            }
            write!(f, "{}", v.unsigned_abs())?;
        }
        Ok(())
    }
}
