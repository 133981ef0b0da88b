//! Plain array-of-images permutations.

use crate::partition::Partition;

/// A permutation of `{0, …, n−1}` stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n as u8).collect(),
        }
    }

    pub fn from_images(images: Vec<u8>) -> Self {
        Self { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn apply(&self, x: u8) -> u8 {
        self.images[x as usize]
    }

    /// `(a b) ∘ self`: post-compose with a transposition, i.e. swap the
    /// values `a` and `b` in the image array.
    pub fn left_mul_transposition(&self, a: u8, b: u8) -> Perm {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Perm { images }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        let images = other
            .images
            .iter()
            .map(|&x| self.images[x as usize])
            .collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u8;
        }
        Perm { images }
    }

    /// Transposition `(a b)` on `n` points, 0-indexed.
    pub fn transposition(a: u8, b: u8, n: usize) -> Perm {
        let mut images: Vec<u8> = (0..n as u8).collect();
        images.swap(a as usize, b as usize);
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u8 == v)
    }

    /// Cycle type as a partition of `n`.
    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    /// Parity: true when the permutation is odd.
    pub fn is_odd(&self) -> bool {
        self.cycle_type().colength() % 2 == 1
    }
}

/// All `n!` permutations of `n` points.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..n as u8).collect();
    fn rec(images: &mut Vec<u8>, k: usize, out: &mut Vec<Perm>) {
        if k == images.len() {
            out.push(Perm::from_images(images.clone()));
            return;
        }
        for i in k..images.len() {
            images.swap(k, i);
            rec(images, k + 1, out);
            images.swap(k, i);
        }
    }
    rec(&mut images, 0, &mut out);
    out
}

/// The standard representative of a cycle type: cycles laid out on
/// consecutive points, e.g. `(3,2)` ↦ `(0 1 2)(3 4)`.
pub fn class_representative(mu: &Partition) -> Perm {
    let n = mu.weight() as usize;
    let mut images: Vec<u8> = (0..n as u8).collect();
    let mut base = 0u8;
    for &part in mu.parts() {
        for off in 0..part as u8 {
            let from = base + off;
            let to = base + (off + 1) % part as u8;
            images[from as usize] = to;
        }
        base += part as u8;
    }
    Perm { images }
}

/// Every element of the conjugacy class with the given cycle type.
pub fn class_elements(n: usize, mu: &Partition) -> Vec<Perm> {
    all_perms(n)
        .into_iter()
        .filter(|g| &g.cycle_type() == mu)
        .collect()
}

/// All transpositions `(a b)`, `a < b`, in lexicographic order of `(b, a)`.
pub fn all_transpositions(n: usize) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for b in 1..n as u8 {
        for a in 0..b {
            out.push((a, b));
        }
    }
    out
}
