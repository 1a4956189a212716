//! Binary prefix codes: exact Kraft sums, code tries, canonical construction
//! from lengths, and the depth-parity red/blue tree coloring.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactRational(BigRational);

impl ExactRational {
    /// Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `self <= 1`.
    pub fn within_unit(&self) -> bool {
        self.0 <= BigRational::one()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Sum of `radix^-l` over `lengths`, computed exactly.
pub fn kraft_sum(lengths: &[u32], radix: u32) -> Result<ExactRational> {
    if radix < 2 {
        return Err(Error::InvalidRadix(radix));
    }
    if let Some(i) = lengths.iter().position(|&l| l == 0) {
        return Err(Error::ZeroLength(i));
    }
    let Some(&deepest) = lengths.iter().max() else {
        return Ok(ExactRational::new(0, 1));
    };
    // Common denominator radix^deepest; each term contributes radix^(deepest - l).
    let radix = BigUint::from(radix);
    let numer: BigUint = lengths.iter().map(|&l| radix.pow(deepest - l)).sum();
    Ok(ExactRational::new(
        BigInt::from(numer),
        BigInt::from(radix.pow(deepest)),
    ))
}

/// A non-empty binary word, most significant bit first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(Vec<bool>);

impl Codeword {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::BadCodeword(String::new()));
        }
        Ok(Codeword(bits))
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether `self` is a proper prefix of `other`.
    pub fn is_proper_prefix_of(&self, other: &Codeword) -> bool {
        self.len() < other.len() && other.0.starts_with(&self.0)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::BadCodeword(s.to_owned())),
            })
            .collect::<Result<Vec<_>>>()?;
        Codeword::new(bits).map_err(|_| Error::BadCodeword(s.to_owned()))
    }
}

/// True iff no word is a prefix of another and no word repeats.
pub fn is_prefix_free(words: &[Codeword]) -> bool {
    first_conflict(words).is_none()
}

/// The first prefix or duplicate conflict in lexicographic order, if any.
pub fn first_conflict(words: &[Codeword]) -> Option<Error> {
    let mut sorted: Vec<&Codeword> = words.iter().collect();
    sorted.sort();
    // In sorted order a word's extensions directly follow it, so checking
    // neighbours suffices.
    sorted.windows(2).find_map(|w| {
        if w[0] == w[1] {
            Some(Error::DuplicateWord(w[0].clone()))
        } else if w[0].is_proper_prefix_of(w[1]) {
            Some(Error::PrefixViolation {
                prefix: w[0].clone(),
                word: w[1].clone(),
            })
        } else {
            None
        }
    })
}

/// Index of a node in a [`CodeTree`]; the root is `NodeId(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    children: [Option<NodeId>; 2],
    depth: u32,
    path: Vec<bool>,
    label: Option<usize>,
}

impl Node {
    /// Child reached by `bit` (false = upper branch 0, true = lower branch 1).
    pub fn child(&self, bit: bool) -> Option<NodeId> {
        self.children[bit as usize]
    }

    pub fn children(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.children.iter().flatten().copied()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.iter().all(Option::is_none)
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// Bit path from the root.
    pub fn path(&self) -> &[bool] {
        &self.path
    }

    /// Position of the codeword stored at this node, if any.
    pub fn label(&self) -> Option<usize> {
        self.label
    }

    /// Node name in the `n0`, `n00`, `n010`, ... style: `n0` is the root and
    /// each further digit is one branch.
    pub fn name(&self) -> String {
        let mut name = String::from("n0");
        name.extend(self.path.iter().map(|&b| if b { '1' } else { '0' }));
        name
    }
}

/// Binary trie whose labeled leaves spell the codewords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeTree {
    nodes: Vec<Node>,
    words: Vec<Codeword>,
}

impl CodeTree {
    /// Minimal trie holding exactly `words` at its leaves. Nodes are numbered
    /// in creation order, inserting words in the given order.
    pub fn build(words: &[Codeword]) -> Result<Self> {
        let mut tree = CodeTree {
            nodes: vec![Node {
                children: [None, None],
                depth: 0,
                path: Vec::new(),
                label: None,
            }],
            words: Vec::with_capacity(words.len()),
        };
        for (idx, word) in words.iter().enumerate() {
            let mut at = NodeId(0);
            for &bit in word.bits() {
                if let Some(l) = tree.nodes[at.0].label {
                    return Err(Error::PrefixViolation {
                        prefix: tree.words[l].clone(),
                        word: word.clone(),
                    });
                }
                at = match tree.nodes[at.0].child(bit) {
                    Some(next) => next,
                    None => tree.push_child(at, bit),
                };
            }
            if tree.nodes[at.0].label.is_some() {
                return Err(Error::DuplicateWord(word.clone()));
            }
            if let Some(l) = tree.first_label_below(at) {
                return Err(Error::PrefixViolation {
                    prefix: word.clone(),
                    word: tree.words[l].clone(),
                });
            }
            tree.nodes[at.0].label = Some(idx);
            tree.words.push(word.clone());
        }
        Ok(tree)
    }

    fn push_child(&mut self, parent: NodeId, bit: bool) -> NodeId {
        let id = NodeId(self.nodes.len());
        let mut path = self.nodes[parent.0].path.clone();
        path.push(bit);
        let depth = self.nodes[parent.0].depth + 1;
        self.nodes.push(Node {
            children: [None, None],
            depth,
            path,
            label: None,
        });
        self.nodes[parent.0].children[bit as usize] = Some(id);
        id
    }

    fn first_label_below(&self, at: NodeId) -> Option<usize> {
        let mut stack: Vec<NodeId> = self.nodes[at.0].children.iter().rev().flatten().copied().collect();
        while let Some(id) = stack.pop() {
            let node = &self.nodes[id.0];
            if node.label.is_some() {
                return node.label;
            }
            stack.extend(node.children.iter().rev().flatten());
        }
        None
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn node(&self, id: NodeId) -> &Node {
        &self.nodes[id.0]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (NodeId, &Node)> + '_ {
        self.nodes.iter().enumerate().map(|(i, n)| (NodeId(i), n))
    }

    /// Codewords in input order; word `i` is `C_{i+1}`.
    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    /// Labeled leaves in codeword order.
    pub fn labeled_leaves(&self) -> Vec<NodeId> {
        let mut leaves = vec![NodeId(0); self.words.len()];
        for (id, node) in self.nodes() {
            if let Some(l) = node.label {
                leaves[l] = id;
            }
        }
        leaves
    }

    /// Node ids in preorder, upper branch first.
    pub fn preorder(&self) -> Vec<NodeId> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![NodeId(0)];
        while let Some(id) = stack.pop() {
            out.push(id);
            stack.extend(self.nodes[id.0].children.iter().rev().flatten());
        }
        out
    }
}

/// Prefix code whose `i`-th word has length `lengths[i]`.
///
/// Lengths are visited in ascending order (ties by position); each word is
/// the running Kraft sum of the words before it, written in binary to its
/// length. Fails with the exact sum when it exceeds 1.
pub fn kraft_construct(lengths: &[u32]) -> Result<Vec<Codeword>> {
    let sum = kraft_sum(lengths, 2)?;
    if !sum.within_unit() {
        return Err(Error::KraftViolation(sum));
    }
    let mut order: Vec<usize> = (0..lengths.len()).collect();
    order.sort_by_key(|&i| lengths[i]);

    let mut words = vec![None; lengths.len()];
    // Running sum scaled by 2^scale.
    let mut acc = BigUint::zero();
    let mut scale = 0u32;
    for i in order {
        let len = lengths[i];
        acc <<= (len - scale) as usize;
        scale = len;
        let bits = (0..len as u64).rev().map(|b| acc.bit(b)).collect();
        words[i] = Some(Codeword(bits));
        acc += 1u32;
    }
    Ok(words.into_iter().map(|w| w.expect("every index visited")).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeColor {
    Red,
    Blue,
}

impl NodeColor {
    pub fn name(self) -> &'static str {
        match self {
            NodeColor::Red => "red",
            NodeColor::Blue => "blue",
        }
    }
}

/// Node colors indexed by [`NodeId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeColoring(Vec<NodeColor>);

impl TreeColoring {
    pub fn from_colors(colors: Vec<NodeColor>) -> Self {
        TreeColoring(colors)
    }

    pub fn color(&self, id: NodeId) -> NodeColor {
        self.0[id.0]
    }

    pub fn colors(&self) -> &[NodeColor] {
        &self.0
    }
}

/// Red root, alternating by level: a node is red iff its depth is even.
pub fn depth_two_coloring(t: &CodeTree) -> TreeColoring {
    TreeColoring(
        t.nodes
            .iter()
            .map(|n| {
                if n.depth % 2 == 0 {
                    NodeColor::Red
                } else {
                    NodeColor::Blue
                }
            })
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafEntry {
    /// Position in the word list; the display name is `C{index+1}`.
    pub index: usize,
    pub word: Codeword,
    pub node: NodeId,
    pub depth: u32,
    pub color: NodeColor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafColorReport {
    pub leaves: Vec<LeafEntry>,
    /// Every two labeled leaves whose depths agree mod 2 share a color.
    pub same_parity_same_color: bool,
}

/// Leaf report under [`depth_two_coloring`].
pub fn leaf_color_repetition(t: &CodeTree) -> LeafColorReport {
    leaf_color_report(t, &depth_two_coloring(t))
}

/// Leaf report under an arbitrary node coloring of `t`.
pub fn leaf_color_report(t: &CodeTree, colors: &TreeColoring) -> LeafColorReport {
    let leaves: Vec<LeafEntry> = t
        .labeled_leaves()
        .into_iter()
        .enumerate()
        .map(|(index, node)| LeafEntry {
            index,
            word: t.words[index].clone(),
            node,
            depth: t.node(node).depth,
            color: colors.color(node),
        })
        .collect();
    let mut parity_color: [Option<NodeColor>; 2] = [None, None];
    let same_parity_same_color = leaves.iter().all(|leaf| {
        let slot = &mut parity_color[(leaf.depth % 2) as usize];
        *slot.get_or_insert(leaf.color) == leaf.color
    });
    LeafColorReport {
        leaves,
        same_parity_same_color,
    }
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}
