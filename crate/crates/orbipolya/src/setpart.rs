//! Set partitions of `[m]` in canonical block form, with the lattice
//! operations join and meet, plus the cycle partition of a permutation and
//! block-size profiles.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("block element {point} out of range 1..={ground}")]
    PointOutOfRange { point: usize, ground: usize },
    #[error("point {0} appears in more than one block")]
    RepeatedPoint(usize),
    #[error("point {0} is not covered by any block")]
    MissingPoint(usize),
}

/// A partition of `{1, ..., m}` into disjoint nonempty blocks.
///
/// Canonical form: every block sorted ascending, blocks ordered by least
/// element, so equal partitions compare equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    ground_size: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validate and canonicalize 1-based blocks covering `{1..=ground_size}`.
    pub fn from_blocks(ground_size: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; ground_size];
        for block in &blocks {
            for &p in block {
                if p < 1 || p > ground_size {
                    return Err(PartitionError::PointOutOfRange {
                        point: p,
                        ground: ground_size,
                    });
                }
                if seen[p - 1] {
                    return Err(PartitionError::RepeatedPoint(p));
                }
                seen[p - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::MissingPoint(missing + 1));
        }
        let mut blocks: Vec<Vec<usize>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition {
            ground_size,
            blocks,
        })
    }

    /// The all-singletons partition (lattice bottom).
    pub fn discrete(ground_size: usize) -> Self {
        SetPartition {
            ground_size,
            blocks: (1..=ground_size).map(|p| vec![p]).collect(),
        }
    }

    /// The one-block partition (lattice top).
    pub fn full(ground_size: usize) -> Self {
        SetPartition {
            ground_size,
            blocks: vec![(1..=ground_size).collect()],
        }
    }

    /// Orbits of the cyclic group generated by `g`, as a partition of `[m]`.
    pub fn cycle_partition(g: &Permutation) -> Self {
        SetPartition {
            ground_size: g.degree(),
            blocks: g.orbits(),
        }
    }

    fn from_block_ids(ground_size: usize, id_of: impl Fn(usize) -> usize) -> Self {
        let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in 1..=ground_size {
            grouped.entry(id_of(p)).or_default().push(p);
        }
        let mut blocks: Vec<Vec<usize>> = grouped.into_values().collect();
        blocks.sort_unstable_by_key(|b| b[0]);
        SetPartition {
            ground_size,
            blocks,
        }
    }

    /// Finest partition coarser than both; the transitive closure of block
    /// co-membership, computed by union-find. Panics on ground mismatch.
    pub fn join(&self, other: &Self) -> Self {
        assert_eq!(
            self.ground_size, other.ground_size,
            "join: ground-size mismatch"
        );
        let mut uf = UnionFind::new(self.ground_size);
        for part in [self, other] {
            for block in &part.blocks {
                for pair in block.windows(2) {
                    uf.union(pair[0] - 1, pair[1] - 1);
                }
            }
        }
        Self::from_block_ids(self.ground_size, |p| uf.find(p - 1))
    }

    /// Blocks are all nonempty pairwise intersections. Panics on ground
    /// mismatch.
    pub fn meet(&self, other: &Self) -> Self {
        assert_eq!(
            self.ground_size, other.ground_size,
            "meet: ground-size mismatch"
        );
        let mine = self.block_id_table();
        let theirs = other.block_id_table();
        let mut ids: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for p in 1..=self.ground_size {
            let key = (mine[p - 1], theirs[p - 1]);
            let next = ids.len();
            ids.entry(key).or_insert(next);
        }
        let table: Vec<usize> = (1..=self.ground_size)
            .map(|p| ids[&(mine[p - 1], theirs[p - 1])])
            .collect();
        Self::from_block_ids(self.ground_size, |p| table[p - 1])
    }

    fn block_id_table(&self) -> Vec<usize> {
        let mut table = vec![0; self.ground_size];
        for (id, block) in self.blocks.iter().enumerate() {
            for &p in block {
                table[p - 1] = id;
            }
        }
        table
    }

    /// Map `k -> b_k`, the number of blocks of cardinality `k`; zero
    /// counts are omitted.
    pub fn block_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for block in &self.blocks {
            *profile.entry(block.len()).or_insert(0) += 1;
        }
        profile
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// True if the two 1-based points share a block.
    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.blocks
            .iter()
            .any(|block| block.contains(&a) && block.contains(&b))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            write!(f, "{{")?;
            for (i, p) in block.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cursor = x;
        while self.parent[cursor] != root {
            let next = self.parent[cursor];
            self.parent[cursor] = root;
            cursor = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermutationGroup;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn part(ground: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::from_blocks(ground, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn cycle_partition_reads_orbits() {
        let id = Permutation::identity(3);
        let p = SetPartition::cycle_partition(&id);
        assert_eq!(p, SetPartition::discrete(3));
        assert_eq!(p.block_profile()[&1], 3);

        let g = Permutation::parse("(1 2 3)(4 5)", 5).unwrap();
        let p = SetPartition::cycle_partition(&g);
        assert_eq!(p, part(5, &[&[1, 2, 3], &[4, 5]]));
        assert_eq!(p.block_profile()[&2], 1);
        assert_eq!(p.block_profile()[&3], 1);

        let h = Permutation::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(
            SetPartition::cycle_partition(&h).block_profile()[&2],
            2
        );
    }

    #[test]
    fn join_chains_co_membership() {
        let a = part(3, &[&[1, 2], &[3]]);
        let b = part(3, &[&[2, 3], &[1]]);
        assert_eq!(a.join(&b), SetPartition::full(3));
        assert_eq!(a.join(&SetPartition::discrete(3)), a);
    }

    #[test]
    fn join_of_cyclic_cycle_partitions() {
        // rotations by 2 and by 4 in the cyclic group on 6 points:
        // gcd(2, 4, 6) = 2 blocks of size 3.
        let g = PermutationGroup::cyclic(6).unwrap();
        let rho = &g.generators()[0];
        let rho2 = rho.compose(rho);
        let rho4 = rho2.compose(&rho2);
        let join = SetPartition::cycle_partition(&rho2).join(&SetPartition::cycle_partition(&rho4));
        assert_eq!(join.num_blocks(), 2);
        assert_eq!(join.block_profile()[&3], 2);
    }

    #[test]
    fn cyclic_join_block_structure_exhaustive() {
        // For rotations by x and y on n points the join has gcd(x, y, n)
        // blocks, all of size n / gcd(x, y, n).
        for n in 1..=12usize {
            let g = PermutationGroup::cyclic(n).unwrap();
            let rho = &g.generators()[0];
            let mut powers = vec![Permutation::identity(n)];
            for _ in 1..n {
                powers.push(rho.compose(powers.last().unwrap()));
            }
            for x in 0..n {
                for y in 0..n {
                    let join = SetPartition::cycle_partition(&powers[x])
                        .join(&SetPartition::cycle_partition(&powers[y]));
                    let d = x.gcd(&y).gcd(&n);
                    assert_eq!(join.num_blocks(), d);
                    assert!(join.blocks().iter().all(|b| b.len() == n / d));
                }
            }
        }
    }

    #[test]
    fn meet_intersects_blocks() {
        let a = part(3, &[&[1, 2], &[3]]);
        let b = part(3, &[&[2, 3], &[1]]);
        assert_eq!(a.meet(&b), SetPartition::discrete(3));
        assert_eq!(a.meet(&a), a);
        let top = SetPartition::full(4);
        let c = part(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(top.meet(&c), c);
    }

    #[test]
    fn profile_sums() {
        let p = part(5, &[&[1, 2, 3], &[4, 5]]);
        let profile = p.block_profile();
        let weighted: usize = profile.iter().map(|(k, b)| k * b).sum();
        let count: usize = profile.values().sum();
        assert_eq!(weighted, 5);
        assert_eq!(count, p.num_blocks());
    }

    #[test]
    fn rendering() {
        let p = part(5, &[&[4, 5], &[2, 1, 3]]);
        assert_eq!(p.to_string(), "{1,2,3}{4,5}");
    }

    #[test]
    fn from_blocks_errors() {
        assert_eq!(
            SetPartition::from_blocks(3, vec![vec![1, 2], vec![2, 3]]),
            Err(PartitionError::RepeatedPoint(2))
        );
        assert_eq!(
            SetPartition::from_blocks(3, vec![vec![1, 2]]),
            Err(PartitionError::MissingPoint(3))
        );
        assert_eq!(
            SetPartition::from_blocks(3, vec![vec![1, 2, 5], vec![3]]),
            Err(PartitionError::PointOutOfRange { point: 5, ground: 3 })
        );
    }

    fn arbitrary_partition(ground: usize, ids: &[usize]) -> SetPartition {
        SetPartition::from_block_ids(ground, |p| ids[(p - 1) % ids.len()] % ground)
    }

    proptest! {
        #[test]
        fn lattice_laws(
            ground in 1usize..=8,
            ids_a in proptest::collection::vec(0usize..8, 8),
            ids_b in proptest::collection::vec(0usize..8, 8),
        ) {
            let a = arbitrary_partition(ground, &ids_a);
            let b = arbitrary_partition(ground, &ids_b);
            prop_assert_eq!(a.join(&b), b.join(&a));
            prop_assert_eq!(a.meet(&b), b.meet(&a));
            prop_assert_eq!(a.join(&a), a.clone());
            prop_assert_eq!(a.meet(&a), a.clone());
            // absorption
            prop_assert_eq!(a.join(&a.meet(&b)), a.clone());
            prop_assert_eq!(a.meet(&a.join(&b)), a.clone());
        }

        #[test]
        fn lattice_associativity(
            ground in 1usize..=7,
            ids_a in proptest::collection::vec(0usize..7, 7),
            ids_b in proptest::collection::vec(0usize..7, 7),
            ids_c in proptest::collection::vec(0usize..7, 7),
        ) {
            let a = arbitrary_partition(ground, &ids_a);
            let b = arbitrary_partition(ground, &ids_b);
            let c = arbitrary_partition(ground, &ids_c);
            prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
            prop_assert_eq!(a.meet(&b).meet(&c), a.meet(&b.meet(&c)));
        }
    }
}
