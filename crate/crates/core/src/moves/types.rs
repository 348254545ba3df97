//! Move and sequence types.

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    IsolatedVertex,
    Triangle,
    ThreeParallelEdges,
    K4,
}

impl Base {
    pub fn name(&self) -> &'static str {
        match self {
            Base::IsolatedVertex => "isolated-vertex",
            Base::Triangle => "triangle",
            Base::ThreeParallelEdges => "three-parallel-edges",
            Base::K4 => "k4",
        }
    }

    pub fn from_name(s: &str) -> Option<Base> {
        match s {
            "isolated-vertex" => Some(Base::IsolatedVertex),
            "triangle" => Some(Base::Triangle),
            "three-parallel-edges" => Some(Base::ThreeParallelEdges),
            "k4" => Some(Base::K4),
            _ => None,
        }
    }

    pub fn graph(&self) -> crate::graph::PlaneGraph {
        match self {
            Base::IsolatedVertex => crate::fixtures::single_vertex(),
            Base::Triangle => crate::fixtures::triangle(),
            Base::ThreeParallelEdges => crate::fixtures::parallel_edges(3),
            Base::K4 => crate::fixtures::k4(),
        }
    }
}

/// A construction move with parameters in the labels of the graph it is
/// applied to. Face ids use the canonical face ordering of that graph.
/// Corner hints pin down the exact face corner / rotation gap when a face
/// id alone is ambiguous (faces may touch a vertex several times).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// New degree-2 vertex inside `f` joined to `u` and `v`.
    H1 { f: usize, u: VertexId, v: VertexId, cu: Option<usize>, cv: Option<usize> },
    /// New degree-3 vertex inside `f` joined to the ends of `e` and to `w`;
    /// `e` is removed.
    H2 { f: usize, e: EdgeId, w: VertexId, cw: Option<usize> },
    /// Split the endpoint `v` of `e` into an edge, duplicating the contact
    /// with `e`'s other endpoint; `f` marks where the split opens.
    E3 { e: EdgeId, v: VertexId, f: usize, c: Option<usize> },
    /// Replace `u` by a plane K4; `f0,f1,f2` in clockwise order around `u`
    /// mark the three neighbor intervals.
    V4 {
        u: VertexId,
        f0: usize,
        f1: usize,
        f2: usize,
        c0: Option<usize>,
        c1: Option<usize>,
        c2: Option<usize>,
    },
    /// Replace `u` by two vertices joined by a doubled edge; `f0,f1` mark
    /// the two neighbor intervals.
    V22 { u: VertexId, f0: usize, f1: usize, c0: Option<usize>, c1: Option<usize> },
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::H1 { .. } => "H1",
            Move::H2 { .. } => "H2",
            Move::E3 { .. } => "E3",
            Move::V4 { .. } => "V4",
            Move::V22 { .. } => "V22",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub base: Base,
    pub moves: Vec<Move>,
}

/// Graph class generated by a move family from a base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphClass {
    /// (2,3)-tight simple plane graphs: H1/H2 from a triangle.
    Laman,
    /// Duals of plane Laman graphs: E3/V22 from three parallel edges.
    CoLaman,
    /// (2,2)-tight simple plane graphs: E3/V4 from a single vertex.
    Tight22,
    /// Laman plus one extra edge: E3 from K4.
    LamanPlusOne,
}

impl GraphClass {
    pub fn name(&self) -> &'static str {
        match self {
            GraphClass::Laman => "laman",
            GraphClass::CoLaman => "co_laman",
            GraphClass::Tight22 => "tight22",
            GraphClass::LamanPlusOne => "laman_plus_one",
        }
    }

    pub fn from_name(s: &str) -> Option<GraphClass> {
        match s {
            "laman" => Some(GraphClass::Laman),
            "co_laman" => Some(GraphClass::CoLaman),
            "tight22" => Some(GraphClass::Tight22),
            "laman_plus_one" => Some(GraphClass::LamanPlusOne),
            _ => None,
        }
    }
}
