//! Tremolo (alternating) permutations and their bijection with Joyce trees.
//!
//! A Joyce tree with `n` nodes corresponds to a tremolo permutation of
//! `0..=n+1` that begins with `1` and ends with `0`: label each node with its
//! level plus 2, read the labels in-order and wrap the word in `1 ... 0`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::joyce::{JoyceTree, Node};

/// Default upper bound on `n` for [`enumerate_anchored`].
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TremoloError {
    /// `index` repeats an earlier value or falls outside the permuted range.
    NotAPermutation { index: usize },
    /// The difference ending at `index` has the same sign as the one before it.
    NotTremolo { index: usize },
    /// The permutation does not start with 1 and end with 0.
    NotAnchored,
    /// The minimum-split decomposition does not produce a Joyce tree.
    NotInImage,
}

impl fmt::Display for TremoloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TremoloError::NotAPermutation { index } => {
                write!(
                    f,
                    "not a permutation: value at index {index} is repeated or out of range"
                )
            }
            TremoloError::NotTremolo { index } => {
                write!(
                    f,
                    "not tremolo: differences fail to alternate at index {index}"
                )
            }
            TremoloError::NotAnchored => f.write_str(
                "not anchored: a permutation of 0..=n+1 must start with 1 and end with 0",
            ),
            TremoloError::NotInImage => f.write_str("not in the image of the tree bijection"),
        }
    }
}

/// Checks that `values` are distinct and their consecutive differences
/// strictly alternate in sign. Lists of length two or less with distinct
/// entries pass.
pub fn check_tremolo<T: Ord>(values: &[T]) -> Result<(), TremoloError> {
    let mut seen = BTreeSet::new();
    for (index, v) in values.iter().enumerate() {
        if !seen.insert(v) {
            return Err(TremoloError::NotAPermutation { index });
        }
    }
    for index in 2..values.len() {
        let rising = values[index - 1] < values[index];
        let was_rising = values[index - 2] < values[index - 1];
        if rising == was_rising {
            return Err(TremoloError::NotTremolo { index });
        }
    }
    Ok(())
}

pub fn is_tremolo<T: Ord>(values: &[T]) -> bool {
    check_tremolo(values).is_ok()
}

/// A tremolo permutation of `0..=n+1` starting with 1 and ending with 0, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchoredTremolo(Vec<u32>);

impl AnchoredTremolo {
    pub fn new(values: Vec<u32>) -> Result<Self, TremoloError> {
        let len = values.len();
        let mut seen = alloc::vec![false; len];
        for (index, &v) in values.iter().enumerate() {
            match seen.get_mut(v as usize) {
                Some(slot) if !*slot => *slot = true,
                _ => return Err(TremoloError::NotAPermutation { index }),
            }
        }
        check_tremolo(&values)?;
        if len < 3 || values[0] != 1 || values[len - 1] != 0 {
            return Err(TremoloError::NotAnchored);
        }
        Ok(AnchoredTremolo(values))
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn into_values(self) -> Vec<u32> {
        self.0
    }

    /// Node count of the corresponding tree.
    pub fn n(&self) -> usize {
        self.0.len() - 2
    }
}

impl fmt::Display for AnchoredTremolo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteForceError {
    ZeroLength,
    AboveCap { n: usize, cap: usize },
}

impl fmt::Display for BruteForceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BruteForceError::ZeroLength => f.write_str("n must be at least 1"),
            BruteForceError::AboveCap { n, cap } => {
                write!(
                    f,
                    "refusing brute-force enumeration for n = {n} (cap is {cap})"
                )
            }
        }
    }
}

/// All anchored tremolo permutations of `0..=n+1`, found by testing every
/// arrangement of the middle values `2..=n+1` in lexicographic order.
pub fn enumerate_anchored(n: usize, cap: usize) -> Result<AnchoredPerms, BruteForceError> {
    if n == 0 {
        return Err(BruteForceError::ZeroLength);
    }
    if n > cap {
        return Err(BruteForceError::AboveCap { n, cap });
    }
    let mut word = Vec::with_capacity(n + 2);
    word.push(1);
    word.extend(2..=n as u32 + 1);
    word.push(0);
    Ok(AnchoredPerms {
        word,
        started: false,
    })
}

pub struct AnchoredPerms {
    word: Vec<u32>,
    started: bool,
}

impl Iterator for AnchoredPerms {
    type Item = AnchoredTremolo;

    fn next(&mut self) -> Option<AnchoredTremolo> {
        loop {
            if self.started {
                let len = self.word.len();
                if !next_permutation(&mut self.word[1..len - 1]) {
                    return None;
                }
            }
            self.started = true;
            if is_tremolo(&self.word) {
                return Some(AnchoredTremolo(self.word.clone()));
            }
        }
    }
}

/// All tremolo permutations of `0..len`, by filtering every permutation in
/// lexicographic order. Those starting with a descent are counted by the
/// zigzag number `Z(len)`.
pub fn enumerate_tremolo(len: usize, cap: usize) -> Result<TremoloPerms, BruteForceError> {
    if len > cap {
        return Err(BruteForceError::AboveCap { n: len, cap });
    }
    Ok(TremoloPerms {
        word: (0..len as u32).collect(),
        started: false,
    })
}

pub struct TremoloPerms {
    word: Vec<u32>,
    started: bool,
}

impl Iterator for TremoloPerms {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        loop {
            if self.started && !next_permutation(&mut self.word) {
                return None;
            }
            self.started = true;
            if is_tremolo(&self.word) {
                return Some(self.word.clone());
            }
        }
    }
}

/// Rearranges into the lexicographically next permutation; false after the last.
fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let Some(pivot) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let successor = items
        .iter()
        .rposition(|x| *x > items[pivot])
        .expect("pivot has a larger element to its right");
    items.swap(pivot, successor);
    items[pivot + 1..].reverse();
    true
}

/// Reads node labels (level + 2) in-order and wraps them in `1 ... 0`.
pub fn tree_to_perm(tree: &JoyceTree) -> AnchoredTremolo {
    let levels = tree.root().inorder_levels();
    let mut values = Vec::with_capacity(levels.len() + 2);
    values.push(1);
    values.extend(levels.into_iter().map(|level| level + 2));
    values.push(0);
    debug_assert!(AnchoredTremolo::new(values.clone()).is_ok());
    AnchoredTremolo(values)
}

/// Inverse of [`tree_to_perm`]: the minimum label of a word is the node, the
/// sub-words on either side are its subtrees.
pub fn perm_to_tree(perm: &AnchoredTremolo) -> Result<JoyceTree, TremoloError> {
    fn split(word: &[u32]) -> Result<Node, TremoloError> {
        let (at, &label) = word
            .iter()
            .enumerate()
            .min_by_key(|(_, &label)| label)
            .ok_or(TremoloError::NotInImage)?;
        let level = label.checked_sub(2).ok_or(TremoloError::NotInImage)?;
        let (left, right) = (&word[..at], &word[at + 1..]);
        match (left.is_empty(), right.is_empty()) {
            (true, true) => Ok(Node::Leaf(level)),
            (false, false) => Ok(Node::branch(level, split(left)?, split(right)?)),
            _ => Err(TremoloError::NotInImage),
        }
    }
    let values = perm.values();
    let node = split(&values[1..values.len() - 1])?;
    JoyceTree::validate(node).map_err(|_| TremoloError::NotInImage)
}

/// Whether every entry at an even 1-based position of `tree_to_perm(tree)`
/// labels a leaf of `tree`.
pub fn leaf_position_check(tree: &JoyceTree) -> bool {
    let leaves: BTreeSet<u32> = tree
        .root()
        .leaf_levels()
        .into_iter()
        .map(|level| level + 2)
        .collect();
    tree_to_perm(tree)
        .values()
        .iter()
        .skip(1)
        .step_by(2)
        .all(|label| leaves.contains(label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::joyce::{self, parse, DEFAULT_ENUMERATION_CAP};
    use alloc::string::ToString;
    use alloc::vec;

    fn anchored(values: &[u32]) -> AnchoredTremolo {
        AnchoredTremolo::new(values.to_vec()).unwrap()
    }

    #[test]
    fn tremolo_examples() {
        assert!(is_tremolo(&[6, 3, 5, 2, 4, 1]));
        assert_eq!(
            check_tremolo(&[1, 2, 3]),
            Err(TremoloError::NotTremolo { index: 2 })
        );
        assert!(is_tremolo(&[5]));
        assert!(is_tremolo::<i32>(&[]));
        assert!(is_tremolo(&[2, 1]));
        assert_eq!(
            check_tremolo(&[3, 1, 3]),
            Err(TremoloError::NotAPermutation { index: 2 })
        );
        assert_eq!(
            check_tremolo(&[1, 1]),
            Err(TremoloError::NotAPermutation { index: 1 })
        );
        assert_eq!(
            check_tremolo(&[-3, 4, -1, 2, 5]),
            Err(TremoloError::NotTremolo { index: 4 })
        );
    }

    #[test]
    fn anchored_construction() {
        assert_eq!(
            AnchoredTremolo::new(vec![1, 2, 3, 0]),
            Err(TremoloError::NotTremolo { index: 2 })
        );
        assert_eq!(
            AnchoredTremolo::new(vec![2, 0, 1]),
            Err(TremoloError::NotAnchored)
        );
        assert_eq!(
            AnchoredTremolo::new(vec![1, 0]),
            Err(TremoloError::NotAnchored)
        );
        assert_eq!(
            AnchoredTremolo::new(vec![1, 5, 0]),
            Err(TremoloError::NotAPermutation { index: 1 })
        );
        assert_eq!(
            AnchoredTremolo::new(vec![1, 2, 2, 0]),
            Err(TremoloError::NotAPermutation { index: 2 })
        );
        assert_eq!(anchored(&[1, 3, 2, 6, 4, 5, 0]).n(), 5);
    }

    #[test]
    fn brute_force_small() {
        let three: Vec<_> = enumerate_anchored(3, DEFAULT_BRUTE_FORCE_CAP)
            .unwrap()
            .collect();
        assert_eq!(
            three,
            vec![anchored(&[1, 3, 2, 4, 0]), anchored(&[1, 4, 2, 3, 0])]
        );
        assert_eq!(
            enumerate_anchored(5, DEFAULT_BRUTE_FORCE_CAP)
                .unwrap()
                .count(),
            16
        );
        assert_eq!(
            enumerate_anchored(2, DEFAULT_BRUTE_FORCE_CAP)
                .unwrap()
                .count(),
            0
        );
        assert_eq!(
            enumerate_anchored(0, DEFAULT_BRUTE_FORCE_CAP).err(),
            Some(BruteForceError::ZeroLength)
        );
        assert_eq!(
            enumerate_anchored(10, DEFAULT_BRUTE_FORCE_CAP).err(),
            Some(BruteForceError::AboveCap { n: 10, cap: 9 })
        );
    }

    #[test]
    fn tremolo_brute_force_counts_zigzag() {
        let z = crate::sequences::zigzag_numbers(9);
        for len in 0..=8 {
            let descending = enumerate_tremolo(len, DEFAULT_BRUTE_FORCE_CAP)
                .unwrap()
                .filter(|p| p.len() < 2 || p[0] > p[1])
                .count();
            assert_eq!(crate::Natural::from(descending as u32), z[len], "len {len}");
        }
        assert_eq!(
            enumerate_tremolo(4, DEFAULT_BRUTE_FORCE_CAP)
                .unwrap()
                .count(),
            10
        );
        assert!(enumerate_tremolo(10, DEFAULT_BRUTE_FORCE_CAP).is_err());
    }

    #[test]
    fn next_permutation_visits_all() {
        let mut items = [1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut items) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(items, [4, 3, 2, 1]);
    }

    #[test]
    fn bijection_examples() {
        let worked = parse("(0 1 (2 4 3))").unwrap();
        assert_eq!(tree_to_perm(&worked).to_string(), "1 3 2 6 4 5 0");
        assert_eq!(tree_to_perm(&JoyceTree::single()).values(), &[1, 2, 0]);
        let mirrored = parse("(0 (2 4 3) 1)").unwrap();
        assert_eq!(tree_to_perm(&mirrored).values(), &[1, 6, 4, 5, 2, 3, 0]);

        assert_eq!(
            perm_to_tree(&anchored(&[1, 3, 2, 6, 4, 5, 0])).unwrap(),
            worked
        );
        assert_eq!(perm_to_tree(&anchored(&[1, 2, 0])).unwrap().to_text(), "0");
        assert_eq!(
            perm_to_tree(&anchored(&[1, 4, 2, 3, 0])).unwrap().to_text(),
            "(0 2 1)"
        );
    }

    #[test]
    fn leaf_positions() {
        assert!(leaf_position_check(&parse("(0 1 (2 4 3))").unwrap()));
        assert!(leaf_position_check(&JoyceTree::single()));
        for tree in joyce::enumerate(5, DEFAULT_ENUMERATION_CAP).unwrap() {
            assert!(leaf_position_check(&tree), "{tree}");
        }
    }

    #[test]
    fn reversal_symmetry() {
        for n in 1..=7 {
            let mut count = 0;
            for perm in enumerate_anchored(n, DEFAULT_BRUTE_FORCE_CAP).unwrap() {
                let mut reversed = perm.into_values();
                reversed.reverse();
                assert!(is_tremolo(&reversed));
                assert_eq!((reversed[0], *reversed.last().unwrap()), (0, 1));
                count += 1;
            }
            assert_eq!(crate::Natural::from(count as u32), joyce::count(n));
        }
    }
}
