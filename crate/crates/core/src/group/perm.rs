use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, …, degree-1}` stored by its image list.
///
/// Composition acts left to right: `a.then(b)` maps `p` to `b(a(p))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {img} repeated, not a bijection"
                )));
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p as usize >= degree || q as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                if std::mem::replace(&mut touched[p as usize], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} appears in two cycles"
                    )));
                }
                images[p as usize] = q;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    /// Writes `self.then(other)` into `out` without allocating.
    #[inline]
    pub fn then_into(&self, other: &Permutation, out: &mut Permutation) {
        for (o, &p) in out.images.iter_mut().zip(self.images.iter()) {
            *o = other.images[p as usize];
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i == p as usize)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", &self.images[..])
    }
}
