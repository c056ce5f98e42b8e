use smallvec::SmallVec;

/// Sparse bitset over vertex indices.
///
/// Stored as sorted `(block, word)` pairs where `block` is `index / 64`. Rows of
/// small dense graphs collapse to a single inline word; rows of huge cluster
/// graphs only keep the blocks their clique actually touches.
#[derive(Clone, Default, PartialEq, Eq, Hash, Debug)]
pub struct NeighborSet {
    blocks: SmallVec<[(u32, u64); 1]>,
}

#[inline]
fn split(v: usize) -> (u32, u64) {
    ((v / 64) as u32, 1u64 << (v % 64))
}

impl NeighborSet {
    pub fn new() -> Self {
        Self::default()
    }

    fn find(&self, block: u32) -> Result<usize, usize> {
        // Single-block rows dominate; skip the binary search for them.
        if self.blocks.len() == 1 {
            let b = self.blocks[0].0;
            return match b.cmp(&block) {
                std::cmp::Ordering::Equal => Ok(0),
                std::cmp::Ordering::Less => Err(1),
                std::cmp::Ordering::Greater => Err(0),
            };
        }
        self.blocks.binary_search_by_key(&block, |&(b, _)| b)
    }

    pub fn contains(&self, v: usize) -> bool {
        let (block, bit) = split(v);
        match self.find(block) {
            Ok(i) => self.blocks[i].1 & bit != 0,
            Err(_) => false,
        }
    }

    /// Returns `true` if `v` was newly inserted.
    pub fn insert(&mut self, v: usize) -> bool {
        let (block, bit) = split(v);
        match self.find(block) {
            Ok(i) => {
                let w = &mut self.blocks[i].1;
                let fresh = *w & bit == 0;
                *w |= bit;
                fresh
            }
            Err(i) => {
                self.blocks.insert(i, (block, bit));
                true
            }
        }
    }

    /// Returns `true` if `v` was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let (block, bit) = split(v);
        match self.find(block) {
            Ok(i) => {
                let w = &mut self.blocks[i].1;
                let present = *w & bit != 0;
                *w &= !bit;
                if *w == 0 {
                    self.blocks.remove(i);
                }
                present
            }
            Err(_) => false,
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|&(_, w)| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Ascending iteration.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().flat_map(|&(block, word)| {
            let base = block as usize * 64;
            BitIter(word).map(move |b| base + b)
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.blocks
            .first()
            .map(|&(block, word)| block as usize * 64 + word.trailing_zeros() as usize)
    }

    /// Elements of `self` that are not in `other`, ascending.
    pub fn difference<'a>(&'a self, other: &'a NeighborSet) -> impl Iterator<Item = usize> + 'a {
        self.blocks.iter().flat_map(move |&(block, word)| {
            let mask = match other.find(block) {
                Ok(i) => other.blocks[i].1,
                Err(_) => 0,
            };
            let base = block as usize * 64;
            BitIter(word & !mask).map(move |b| base + b)
        })
    }

    /// Elements of both sets, ascending.
    pub fn intersection<'a>(&'a self, other: &'a NeighborSet) -> impl Iterator<Item = usize> + 'a {
        self.blocks.iter().flat_map(move |&(block, word)| {
            let mask = match other.find(block) {
                Ok(i) => other.blocks[i].1,
                Err(_) => 0,
            };
            let base = block as usize * 64;
            BitIter(word & mask).map(move |b| base + b)
        })
    }

    pub fn intersects(&self, other: &NeighborSet) -> bool {
        self.intersection(other).next().is_some()
    }

    /// In-place union.
    pub fn union_with(&mut self, other: &NeighborSet) {
        if other.blocks.is_empty() {
            return;
        }
        let mut out = SmallVec::with_capacity(self.blocks.len() + other.blocks.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.blocks, &other.blocks);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                out.push((a[i].0, a[i].1 | b[j].1));
                i += 1;
                j += 1;
            }
        }
        self.blocks = out;
    }

    pub fn max(&self) -> Option<usize> {
        self.blocks
            .last()
            .map(|&(block, word)| block as usize * 64 + 63 - word.leading_zeros() as usize)
    }
}

impl FromIterator<usize> for NeighborSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = NeighborSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(t)
    }
}
