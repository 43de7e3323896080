//! Binary decision trees over a finite alphabet.
//!
//! Internal nodes ask "is X in `query`?"; the left child holds the
//! candidates that answer yes. Leaves name a single outcome.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::decision_set::DecisionSet;
use crate::distribution::Distribution;
use crate::error::{Error, Result};
use crate::mass::Mass;
use crate::outcome::OutcomeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    candidates: OutcomeSet,
    kind: NodeKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    Split { left: Box<Node>, right: Box<Node> },
}

impl Node {
    pub fn leaf(outcome: usize) -> Self {
        Node { candidates: OutcomeSet::singleton(outcome), kind: NodeKind::Leaf(outcome) }
    }

    /// Joins two subtrees under a new parent whose query is `left`'s
    /// candidate set.
    pub fn join(left: Node, right: Node) -> Result<Self> {
        if !left.candidates.is_disjoint(&right.candidates) {
            return Err(Error::Overlap);
        }
        Ok(Node {
            candidates: left.candidates.union(&right.candidates),
            kind: NodeKind::Split { left: Box::new(left), right: Box::new(right) },
        })
    }

    pub fn candidates(&self) -> &OutcomeSet {
        &self.candidates
    }

    pub fn kind(&self) -> &NodeKind {
        &self.kind
    }

    pub fn mass<M: Mass>(&self, d: &Distribution<M>) -> M {
        d.mass(&self.candidates)
    }

    /// The question asked here, `None` at a leaf.
    pub fn query(&self) -> Option<&OutcomeSet> {
        match &self.kind {
            NodeKind::Leaf(_) => None,
            NodeKind::Split { left, .. } => Some(&left.candidates),
        }
    }

    pub fn children(&self) -> Option<(&Node, &Node)> {
        match &self.kind {
            NodeKind::Leaf(_) => None,
            NodeKind::Split { left, right } => Some((left, right)),
        }
    }

    fn walk<'a>(&'a self, depth: usize, path: &mut String, f: &mut impl FnMut(&'a Node, usize, &str)) {
        f(self, depth, path);
        if let Some((l, r)) = self.children() {
            path.push('L');
            l.walk(depth + 1, path, f);
            path.pop();
            path.push('R');
            r.walk(depth + 1, path, f);
            path.pop();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionTree {
    root: Node,
}

/// One node whose split no question in the family can produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `L`/`R` steps from the root; empty for the root itself.
    pub path: String,
    pub candidates: OutcomeSet,
    pub query: OutcomeSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_feasible(&self) -> bool {
        self.violations.is_empty()
    }
}

impl DecisionTree {
    /// Wraps a root node; its candidates must be exactly `0..n`.
    pub fn new(root: Node) -> Result<Self> {
        let n = root.candidates.len();
        if root.candidates != OutcomeSet::full(n) {
            return Err(Error::InvalidTree(format!("root candidates {:?} are not 0..{n}", root.candidates)));
        }
        Ok(DecisionTree { root })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn alphabet_size(&self) -> usize {
        self.root.candidates.len()
    }

    /// `(outcome, depth)` for every leaf, ordered by outcome.
    pub fn leaf_depths(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.alphabet_size());
        self.root.walk(0, &mut String::new(), &mut |node, depth, _| {
            if let NodeKind::Leaf(x) = node.kind {
                out.push((x, depth));
            }
        });
        out.sort_unstable();
        out
    }

    pub fn height(&self) -> usize {
        self.leaf_depths().iter().map(|&(_, d)| d).max().unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        2 * self.alphabet_size() - 1
    }

    /// `Σ p(x) · depth(x)` over the leaves.
    pub fn expected_depth<M: Mass>(&self, d: &Distribution<M>) -> Result<M> {
        if d.len() != self.alphabet_size() {
            return Err(Error::AlphabetMismatch { tree: self.alphabet_size(), dist: d.len() });
        }
        Ok(self.leaf_depths().into_iter().fold(M::zero(), |acc, (x, depth)| acc + d.p(x) * M::from_count(depth)))
    }

    /// Checks every internal node independently: its split must be
    /// realizable by some question in `family`.
    pub fn validate(&self, family: &DecisionSet) -> ValidationReport {
        let mut violations = Vec::new();
        self.root.walk(0, &mut String::new(), &mut |node, _, path| {
            if let Some(query) = node.query() {
                if !family.realizes(&node.candidates, query) {
                    violations.push(Violation {
                        path: path.to_owned(),
                        candidates: node.candidates.clone(),
                        query: query.clone(),
                    });
                }
            }
        });
        ValidationReport { violations }
    }

    /// Outcome reached by answering every query truthfully for `x`.
    pub fn locate(&self, x: usize) -> Option<(usize, usize)> {
        let mut node = &self.root;
        let mut depth = 0;
        loop {
            match &node.kind {
                NodeKind::Leaf(y) => return Some((*y, depth)),
                NodeKind::Split { left, right } => {
                    node = if left.candidates.contains(x) {
                        left
                    } else if right.candidates.contains(x) {
                        right
                    } else {
                        return None;
                    };
                    depth += 1;
                }
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tree serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Wire form: `{"outcome": i}` or `{"query": [...], "left": .., "right": ..}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
enum WireNode {
    Leaf { outcome: usize },
    Split { query: Vec<usize>, left: Box<WireNode>, right: Box<WireNode> },
}

impl From<&Node> for WireNode {
    fn from(n: &Node) -> Self {
        match &n.kind {
            NodeKind::Leaf(x) => WireNode::Leaf { outcome: *x },
            NodeKind::Split { left, right } => WireNode::Split {
                query: left.candidates.as_slice().to_vec(),
                left: Box::new(WireNode::from(&**left)),
                right: Box::new(WireNode::from(&**right)),
            },
        }
    }
}

impl TryFrom<WireNode> for Node {
    type Error = Error;

    fn try_from(w: WireNode) -> Result<Self> {
        match w {
            WireNode::Leaf { outcome } => Ok(Node::leaf(outcome)),
            WireNode::Split { query, left, right } => {
                let node = Node::join(Node::try_from(*left)?, Node::try_from(*right)?)?;
                let query = OutcomeSet::new(query);
                if node.query() != Some(&query) {
                    return Err(Error::InvalidTree(format!(
                        "query {query:?} does not match left candidates {:?}",
                        node.query().unwrap()
                    )));
                }
                Ok(node)
            }
        }
    }
}

impl Serialize for DecisionTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireNode::from(&self.root).serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecisionTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireNode::deserialize(d)?;
        Node::try_from(wire).and_then(DecisionTree::new).map_err(D::Error::custom)
    }
}
