//! Joyce trees: binary trees in which no two nodes share a level and the
//! levels used are exactly `0..n` for a tree with `n` nodes.
//!
//! Text form: a leaf is its level, a branch is `(level left right)`, so the
//! tree with root 0, a leaf at level 1 on the left and a branch at level 2
//! with leaves 4 and 3 on the right reads `(0 1 (2 4 3))`.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::sequences::tangent_numbers;
use crate::Natural;

/// Default upper bound on the node count accepted by [`enumerate`].
pub const DEFAULT_ENUMERATION_CAP: usize = 13;

/// A planar binary tree with a level on every node; not necessarily valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Leaf(u32),
    Branch(u32, Box<Node>, Box<Node>),
}

impl Node {
    pub fn branch(level: u32, left: Node, right: Node) -> Node {
        Node::Branch(level, Box::new(left), Box::new(right))
    }

    pub fn level(&self) -> u32 {
        match self {
            Node::Leaf(level) | Node::Branch(level, _, _) => *level,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf(_))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Branch(_, l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Node::Leaf(_) => 1,
            Node::Branch(_, l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Node levels in pre-order.
    pub fn levels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.visit_preorder(&mut |node| out.push(node.level()));
        out
    }

    /// Levels of the leaves, left to right.
    pub fn leaf_levels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.visit_preorder(&mut |node| {
            if node.is_leaf() {
                out.push(node.level())
            }
        });
        out
    }

    /// Node levels in in-order (left subtree, node, right subtree).
    pub fn inorder_levels(&self) -> Vec<u32> {
        fn walk(node: &Node, out: &mut Vec<u32>) {
            match node {
                Node::Leaf(level) => out.push(*level),
                Node::Branch(level, l, r) => {
                    walk(l, out);
                    out.push(*level);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn visit_preorder<'a>(&'a self, f: &mut impl FnMut(&'a Node)) {
        f(self);
        if let Node::Branch(_, l, r) = self {
            l.visit_preorder(f);
            r.visit_preorder(f);
        }
    }

    fn map_levels(&self, f: &impl Fn(u32) -> u32) -> Node {
        match self {
            Node::Leaf(level) => Node::Leaf(f(*level)),
            Node::Branch(level, l, r) => Node::branch(f(*level), l.map_levels(f), r.map_levels(f)),
        }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Leaf(level) => write!(f, "{level}"),
            Node::Branch(level, l, r) => write!(f, "({level} {l} {r})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvalidTree {
    NonzeroRoot { level: u32 },
    ChildNotAbove { parent: u32, child: u32 },
    DuplicateLevel { level: u32 },
    NonContiguousLevels { missing: u32 },
}

impl fmt::Display for InvalidTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidTree::NonzeroRoot { level } => write!(f, "root level is {level}, expected 0"),
            InvalidTree::ChildNotAbove { parent, child } => {
                write!(f, "child level {child} is not above parent level {parent}")
            }
            InvalidTree::DuplicateLevel { level } => write!(f, "level {level} is used twice"),
            InvalidTree::NonContiguousLevels { missing } => {
                write!(f, "levels are not contiguous: level {missing} has no node")
            }
        }
    }
}

/// Checks every Joyce tree invariant, returning the violated rule together
/// with the pre-order index of the node it was detected at.
fn check(root: &Node) -> Result<(), (usize, InvalidTree)> {
    if root.level() != 0 {
        return Err((
            0,
            InvalidTree::NonzeroRoot {
                level: root.level(),
            },
        ));
    }
    let mut seen = BTreeSet::new();
    let mut order: Vec<&Node> = Vec::new();
    root.visit_preorder(&mut |node| order.push(node));
    // parent level per pre-order index
    let mut stack: Vec<(&Node, Option<u32>)> = alloc::vec![(root, None)];
    let mut index = 0;
    while let Some((node, parent)) = stack.pop() {
        let level = node.level();
        if let Some(parent) = parent {
            if level <= parent {
                return Err((
                    index,
                    InvalidTree::ChildNotAbove {
                        parent,
                        child: level,
                    },
                ));
            }
        }
        if !seen.insert(level) {
            return Err((index, InvalidTree::DuplicateLevel { level }));
        }
        if let Node::Branch(_, l, r) = node {
            stack.push((r, Some(level)));
            stack.push((l, Some(level)));
        }
        index += 1;
    }
    let n = order.len();
    if let Some(pos) = order.iter().position(|node| node.level() as usize >= n) {
        let missing = (0u32..).find(|l| !seen.contains(l)).unwrap_or(0);
        return Err((pos, InvalidTree::NonContiguousLevels { missing }));
    }
    Ok(())
}

/// A tree certified to satisfy the Joyce tree invariants.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JoyceTree(Node);

impl JoyceTree {
    pub fn validate(candidate: Node) -> Result<Self, InvalidTree> {
        check(&candidate).map_err(|(_, e)| e)?;
        Ok(JoyceTree(candidate))
    }

    pub fn single() -> Self {
        JoyceTree(Node::Leaf(0))
    }

    pub fn root(&self) -> &Node {
        &self.0
    }

    pub fn into_node(self) -> Node {
        self.0
    }

    pub fn node_count(&self) -> usize {
        self.0.node_count()
    }

    /// Leaf count `m`; the tree has `2m - 1` nodes.
    pub fn leaves(&self) -> usize {
        let m = self.0.leaf_count();
        debug_assert_eq!(self.node_count(), 2 * m - 1);
        m
    }

    /// Removes the two leaves above the highest non-leaf node, which becomes
    /// a leaf, then renumbers levels to close the gap. `None` for a single leaf.
    pub fn prune(&self) -> Option<JoyceTree> {
        let mut highest: Option<u32> = None;
        self.0.visit_preorder(&mut |node| {
            if !node.is_leaf() {
                highest = highest.max(Some(node.level()));
            }
        });
        let target = highest?;
        fn cut(node: &Node, target: u32) -> Node {
            match node {
                Node::Branch(level, _, _) if *level == target => Node::Leaf(*level),
                Node::Branch(level, l, r) => Node::branch(*level, cut(l, target), cut(r, target)),
                leaf => leaf.clone(),
            }
        }
        let mut remaining = cut(&self.0, target).levels();
        remaining.sort_unstable();
        let pruned = cut(&self.0, target)
            .map_levels(&|level| remaining.binary_search(&level).expect("level present") as u32);
        Some(JoyceTree(pruned))
    }

    pub fn to_text(&self) -> alloc::string::String {
        alloc::string::ToString::to_string(&self.0)
    }
}

impl fmt::Display for JoyceTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl core::str::FromStr for JoyceTree {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        parse(text)
    }
}

/// `J(n)`, the number of Joyce trees with `n` nodes.
pub fn count(n: usize) -> Natural {
    tangent_numbers(n + 1)
        .into_terms()
        .pop()
        .expect("count >= 1")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedEnd,
    UnexpectedChar(char),
    LevelOutOfRange,
    TrailingInput,
    Invalid(InvalidTree),
}

/// A parse failure at a byte offset into the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at column {}: ", self.position + 1)?;
        match self.kind {
            ParseErrorKind::UnexpectedEnd => f.write_str("unexpected end of input"),
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::LevelOutOfRange => f.write_str("level does not fit in 32 bits"),
            ParseErrorKind::TrailingInput => f.write_str("unexpected input after the tree"),
            ParseErrorKind::Invalid(e) => write!(f, "not a Joyce tree: {e}"),
        }
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    /// Byte offset of every node, in pre-order.
    starts: Vec<usize>,
}

impl Parser<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos,
            kind,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            None => self.error(ParseErrorKind::UnexpectedEnd),
            Some(_) => {
                // Report the full character, not a UTF-8 fragment.
                let rest = core::str::from_utf8(&self.bytes[self.pos..]).unwrap_or("");
                let c = rest.chars().next().unwrap_or(char::REPLACEMENT_CHARACTER);
                self.error(ParseErrorKind::UnexpectedChar(c))
            }
        }
    }

    fn level(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(b @ b'0'..=b'9') = self.peek() {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u32::from(b - b'0')))
                .ok_or(ParseError {
                    position: start,
                    kind: ParseErrorKind::LevelOutOfRange,
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.unexpected());
        }
        Ok(value)
    }

    fn node(&mut self) -> Result<Node, ParseError> {
        self.skip_ws();
        self.starts.push(self.pos);
        if self.peek() == Some(b'(') {
            self.pos += 1;
            self.skip_ws();
            let level = self.level()?;
            let left = self.node()?;
            let right = self.node()?;
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err(self.unexpected());
            }
            self.pos += 1;
            Ok(Node::branch(level, left, right))
        } else {
            Ok(Node::Leaf(self.level()?))
        }
    }
}

/// Parses the nested text form and validates the result.
pub fn parse(text: &str) -> Result<JoyceTree, ParseError> {
    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        starts: Vec::new(),
    };
    let node = parser.node()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.error(ParseErrorKind::TrailingInput));
    }
    check(&node).map_err(|(index, e)| ParseError {
        position: parser.starts[index],
        kind: ParseErrorKind::Invalid(e),
    })?;
    Ok(JoyceTree(node))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationError {
    /// Joyce trees have an odd number of nodes.
    EvenNodeCount(usize),
    AboveCap {
        n: usize,
        cap: usize,
    },
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::EvenNodeCount(n) => {
                write!(f, "no Joyce tree has {n} nodes (J_n = 0 for n even)")
            }
            EnumerationError::AboveCap { n, cap } => {
                write!(
                    f,
                    "refusing to enumerate trees with {n} nodes (cap is {cap})"
                )
            }
        }
    }
}

/// Every Joyce tree with `n` nodes, each exactly once.
///
/// On a level set the root takes the smallest level and the remaining levels
/// are split into a left and right part of odd size; splits are visited in
/// lexicographic order of the left part's sorted levels.
pub fn enumerate(n: usize, cap: usize) -> Result<Trees, EnumerationError> {
    if n.is_multiple_of(2) {
        return Err(EnumerationError::EvenNodeCount(n));
    }
    if n > cap {
        return Err(EnumerationError::AboveCap { n, cap });
    }
    Ok(Trees {
        inner: Subtrees::new((0..n as u32).collect()),
    })
}

/// Iterator returned by [`enumerate`].
pub struct Trees {
    inner: Subtrees,
}

impl Iterator for Trees {
    type Item = JoyceTree;

    fn next(&mut self) -> Option<JoyceTree> {
        self.inner.next().map(JoyceTree)
    }
}

/// All trees over a fixed sorted level set.
struct Subtrees {
    root: u32,
    rest: Vec<u32>,
    /// Indices into `rest` of the current left part; empty before the first split.
    subset: Vec<usize>,
    exhausted: bool,
    left: Option<Box<Subtrees>>,
    right: Option<Box<Subtrees>>,
    right_levels: Vec<u32>,
    current_left: Option<Node>,
}

impl Subtrees {
    fn new(levels: Vec<u32>) -> Self {
        let (root, rest) = levels.split_first().expect("nonempty level set");
        Subtrees {
            root: *root,
            rest: rest.to_vec(),
            subset: Vec::new(),
            exhausted: false,
            left: None,
            right: None,
            right_levels: Vec::new(),
            current_left: None,
        }
    }

    /// Steps to the next odd-size subset of `rest` in lexicographic order.
    fn advance_subset(&mut self) -> bool {
        let k = self.rest.len();
        loop {
            match self.subset.last().copied() {
                None if self.exhausted => return false,
                None => self.subset.push(0),
                Some(last) if last + 1 < k => self.subset.push(last + 1),
                Some(_) => {
                    self.subset.pop();
                    match self.subset.last_mut() {
                        Some(last) => *last += 1,
                        None => {
                            self.exhausted = true;
                            return false;
                        }
                    }
                }
            }
            if self.subset.len() % 2 == 1 && self.subset.len() < k {
                return true;
            }
        }
    }
}

impl Iterator for Subtrees {
    type Item = Node;

    fn next(&mut self) -> Option<Node> {
        if self.rest.is_empty() {
            if self.exhausted {
                return None;
            }
            self.exhausted = true;
            return Some(Node::Leaf(self.root));
        }
        loop {
            if let (Some(left), Some(right)) = (&self.current_left, &mut self.right) {
                if let Some(right) = right.next() {
                    return Some(Node::branch(self.root, left.clone(), right));
                }
            }
            if let Some(left) = self.left.as_mut().and_then(|it| it.next()) {
                self.current_left = Some(left);
                self.right = Some(Box::new(Subtrees::new(self.right_levels.clone())));
                continue;
            }
            if !self.advance_subset() {
                return None;
            }
            let mut left_levels = Vec::with_capacity(self.subset.len());
            let mut right_levels = Vec::with_capacity(self.rest.len() - self.subset.len());
            let mut chosen = self.subset.iter().peekable();
            for (i, level) in self.rest.iter().enumerate() {
                if chosen.peek() == Some(&&i) {
                    chosen.next();
                    left_levels.push(*level);
                } else {
                    right_levels.push(*level);
                }
            }
            self.left = Some(Box::new(Subtrees::new(left_levels)));
            self.right_levels = right_levels;
            self.current_left = None;
            self.right = None;
        }
    }
}
