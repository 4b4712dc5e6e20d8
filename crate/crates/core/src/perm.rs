//! Permutations of the four port labels of a true vertex.
//!
//! A gluing between port `p` of one vertex and port `q` of another is stored
//! as a single `Perm4` sending `p` to `q`; restricted to the three remaining
//! labels it is the slot bijection of the edge.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    /// Builds a permutation from its image table, or `None` if the table is not a bijection of `0..4`.
    pub fn new(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &x in &images {
            if x > 3 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm4(images))
    }

    /// Extends a slot bijection `slots(from) -> slots(to)` to the full permutation.
    ///
    /// `images` lists the images of the three labels other than `from`, in
    /// ascending order.
    pub fn from_slot_map(from: u8, to: u8, images: [u8; 3]) -> Option<Self> {
        let mut table = [0u8; 4];
        table[from as usize] = to;
        for (slot, img) in other_labels(from).into_iter().zip(images) {
            table[slot as usize] = img;
        }
        Perm4::new(table)
    }

    #[inline]
    pub fn apply(self, x: u8) -> u8 {
        self.0[x as usize]
    }

    pub fn images(self) -> [u8; 4] {
        self.0
    }

    /// Images of the three slots of port `from`, in ascending slot order.
    pub fn slot_images(self, from: u8) -> [u8; 3] {
        other_labels(from).map(|s| self.apply(s))
    }

    pub fn inverse(self) -> Self {
        let mut inv = [0u8; 4];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm4(inv)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm4) -> Self {
        Perm4(other.0.map(|x| self.apply(x)))
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(self) -> i32 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        (0..24u8).map(|mut idx| {
            let mut pool = vec![0u8, 1, 2, 3];
            let mut table = [0u8; 4];
            for (k, slot) in table.iter_mut().enumerate() {
                let radix = (4 - k) as u8;
                let pick = (idx % radix) as usize;
                idx /= radix;
                *slot = pool.remove(pick);
            }
            Perm4(table)
        })
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// The three labels of `0..4` other than `p`, ascending.
#[inline]
pub fn other_labels(p: u8) -> [u8; 3] {
    match p {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        _ => [0, 1, 2],
    }
}

/// The two labels of `0..4` outside `{p, q}`, ascending.
#[inline]
pub fn complement_pair(p: u8, q: u8) -> [u8; 2] {
    let mut out = [0u8; 2];
    let mut k = 0;
    for x in 0..4u8 {
        if x != p && x != q {
            out[k] = x;
            k += 1;
        }
    }
    out
}

/// Unordered pairs of ports, i.e. the six wings at a vertex, in a fixed order.
pub const WING_PAIRS: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[inline]
pub fn wing_index(p: u8, q: u8) -> usize {
    let (a, b) = if p < q { (p, q) } else { (q, p) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("wing_index: degenerate pair ({p}, {q})"),
    }
}
