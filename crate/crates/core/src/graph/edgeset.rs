//! Compact set of link indices, used for snapshots and packing bookkeeping.

/// Fixed-capacity bitset over link ids `0..capacity`.
#[derive(Clone, PartialEq, Eq)]
pub struct EdgeSet {
    blocks: Vec<u64>,
    capacity: usize,
}

impl EdgeSet {
    pub fn empty(capacity: usize) -> Self {
        EdgeSet {
            blocks: vec![0; capacity.div_ceil(64)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut set = EdgeSet::empty(capacity);
        for id in 0..capacity {
            set.insert(id);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, id: usize) {
        assert!(id < self.capacity, "edge id {id} out of range");
        self.blocks[id / 64] |= 1 << (id % 64);
    }

    pub fn remove(&mut self, id: usize) {
        assert!(id < self.capacity, "edge id {id} out of range");
        self.blocks[id / 64] &= !(1 << (id % 64));
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.capacity && self.blocks[id / 64] & (1 << (id % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.capacity, other.capacity);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    /// Removes every id in `other` from `self`.
    pub fn subtract(&mut self, other: &EdgeSet) {
        debug_assert_eq!(self.capacity, other.capacity);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity).filter(move |&id| self.contains(id))
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for EdgeSet {
    /// Collects ids into a set sized to the maximum id; mostly for tests.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let ids: Vec<usize> = iter.into_iter().collect();
        let capacity = ids.iter().max().map_or(0, |m| m + 1);
        let mut set = EdgeSet::empty(capacity);
        for id in ids {
            set.insert(id);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut set = EdgeSet::empty(130);
        set.insert(0);
        set.insert(64);
        set.insert(129);
        assert!(set.contains(0) && set.contains(64) && set.contains(129));
        assert_eq!(set.len(), 3);
        set.remove(64);
        assert!(!set.contains(64));
        assert_eq!(set.iter().collect::<Vec<_>>(), vec![0, 129]);
    }

    #[test]
    fn subtract_and_subset() {
        let full = EdgeSet::full(10);
        let mut some = EdgeSet::empty(10);
        some.insert(3);
        some.insert(7);
        assert!(some.is_subset_of(&full));
        let mut rest = full.clone();
        rest.subtract(&some);
        assert_eq!(rest.len(), 8);
        assert!(!rest.contains(3));
        assert!(!rest.intersects(&some));
    }
}
