use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumeration::DegreeProfile;
use crate::error::{Error, Result};

/// A black vertex and everything hanging below it.
///
/// Children are stored in cyclic order starting right after the parent edge
/// (for the root, starting at its special edge). At black vertices this is
/// the counterclockwise order of increasing labels.
///
/// `special` indexes the incident edges: for a non-root vertex the
/// sequence is `(parent, children...)`, so `0` is the parent edge; for the
/// root it indexes `children` and is always `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlackNode {
    pub special: usize,
    pub children: Vec<WhiteNode>,
}

/// A white vertex; children in clockwise order (increasing labels, read
/// cyclically) starting right after the parent edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WhiteNode {
    pub children: Vec<BlackNode>,
}

/// A rooted plane tree, properly two-coloured with a black root, with one
/// special edge at every black vertex. The root's special edge is its first
/// child, which fixes where the root's cyclic order is cut open.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FatTree {
    root: BlackNode,
}

/// Vertex and degree statistics of a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeProfile {
    /// Number of black vertices.
    pub m: usize,
    pub n_edges: usize,
    /// Degree histogram of white vertices.
    pub i: DegreeProfile,
    /// Degree histogram of black vertices.
    pub j: DegreeProfile,
}

impl BlackNode {
    pub fn leaf() -> Self {
        BlackNode {
            special: 0,
            children: Vec::new(),
        }
    }

    fn validate(&self, is_root: bool) -> Result<()> {
        let slots = self.children.len() + usize::from(!is_root);
        if is_root && self.children.is_empty() {
            return Err(Error::Validation("the root needs at least one edge".into()));
        }
        if is_root && self.special != 0 {
            return Err(Error::Validation("the root's special edge is its first child".into()));
        }
        if self.special >= slots {
            return Err(Error::Validation(format!(
                "special index {} out of range for degree {slots}",
                self.special
            )));
        }
        self.children.iter().try_for_each(WhiteNode::validate)
    }

    fn edges_below(&self) -> usize {
        self.children.iter().map(|w| 1 + w.edges_below()).sum()
    }
}

impl WhiteNode {
    pub fn leaf() -> Self {
        WhiteNode {
            children: Vec::new(),
        }
    }

    fn validate(&self) -> Result<()> {
        self.children.iter().try_for_each(|b| b.validate(false))
    }

    fn edges_below(&self) -> usize {
        self.children.iter().map(|b| 1 + b.edges_below()).sum()
    }
}

impl FatTree {
    pub fn new(root: BlackNode) -> Result<Self> {
        root.validate(true)?;
        Ok(FatTree { root })
    }

    pub(crate) fn new_unchecked(root: BlackNode) -> Self {
        debug_assert!(root.validate(true).is_ok());
        FatTree { root }
    }

    /// The single-edge tree.
    pub fn single_edge() -> Self {
        FatTree {
            root: BlackNode {
                special: 0,
                children: vec![WhiteNode::leaf()],
            },
        }
    }

    pub fn root(&self) -> &BlackNode {
        &self.root
    }

    pub fn n_edges(&self) -> usize {
        self.root.edges_below()
    }

    pub fn root_degree(&self) -> usize {
        self.root.children.len()
    }

    pub fn profile(&self) -> TreeProfile {
        fn black(b: &BlackNode, is_root: bool, p: &mut TreeProfile) {
            p.j.add(b.children.len() + usize::from(!is_root), 1);
            for w in &b.children {
                p.i.add(w.children.len() + 1, 1);
                for c in &w.children {
                    black(c, false, p);
                }
            }
        }
        let mut p = TreeProfile {
            m: 0,
            n_edges: self.n_edges(),
            i: DegreeProfile::default(),
            j: DegreeProfile::default(),
        };
        black(&self.root, true, &mut p);
        p.m = p.j.m();
        p
    }
}

/// Text form: `black := 'B' ['*'] ['(' item (',' item)* ')']`,
/// `item := ['*'] white`, `white := 'W' ['(' black (',' black)* ')']`.
///
/// A star after `B` marks the parent edge as special; a star before `W`
/// marks that child edge. The root is printed as `B*` and its first child
/// carries the special edge.
impl fmt::Display for FatTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn black(b: &BlackNode, is_root: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("B")?;
            if is_root || b.special == 0 {
                f.write_str("*")?;
            }
            if !b.children.is_empty() {
                f.write_str("(")?;
                for (k, w) in b.children.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    if !is_root && b.special == k + 1 {
                        f.write_str("*")?;
                    }
                    white(w, f)?;
                }
                f.write_str(")")?;
            }
            Ok(())
        }
        fn white(w: &WhiteNode, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str("W")?;
            if !w.children.is_empty() {
                f.write_str("(")?;
                for (k, b) in w.children.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    black(b, false, f)?;
                }
                f.write_str(")")?;
            }
            Ok(())
        }
        black(&self.root, true, f)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected '{}' at offset {}",
                c as char, self.pos
            )))
        }
    }

    fn black(&mut self, is_root: bool) -> Result<BlackNode> {
        self.expect(b'B')?;
        let mut marks = Vec::new();
        if self.eat(b'*') {
            marks.push(0);
        }
        let mut children = Vec::new();
        if self.eat(b'(') {
            loop {
                if self.eat(b'*') {
                    marks.push(children.len() + 1);
                }
                children.push(self.white()?);
                if !self.eat(b',') {
                    break;
                }
            }
            self.expect(b')')?;
        }
        let special = if is_root {
            // `B*`, `B(*W...)` and `B(W...)` all denote the canonical root.
            if marks.iter().any(|&k| k > 1) {
                return Err(Error::Parse("only the root's first child may be marked".into()));
            }
            0
        } else {
            match marks[..] {
                [k] => k,
                [] => return Err(Error::Parse("black vertex without a special edge".into())),
                _ => return Err(Error::Parse("black vertex with several special edges".into())),
            }
        };
        Ok(BlackNode { special, children })
    }

    fn white(&mut self) -> Result<WhiteNode> {
        self.expect(b'W')?;
        let mut children = Vec::new();
        if self.eat(b'(') {
            loop {
                children.push(self.black(false)?);
                if !self.eat(b',') {
                    break;
                }
            }
            self.expect(b')')?;
        }
        Ok(WhiteNode { children })
    }
}

impl FromStr for FatTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser {
            s: compact.as_bytes(),
            pos: 0,
        };
        let root = p.black(true)?;
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input at offset {}", p.pos)));
        }
        FatTree::new(root)
    }
}
