use std::fmt;

use crate::graph::Vertex;

/// Errors produced by parsers, constructors and solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A text input could not be parsed; `line` is 1-based.
    Parse { line: usize, message: String },
    /// A vertex id outside 1..=n was supplied.
    VertexOutOfRange { vertex: Vertex, n: usize },
    /// `nearest_set` was called with an empty candidate set.
    EmptyCandidateSet,
    /// The graph (or a derived graph) is not connected.
    Disconnected,
    /// A tree solver was invoked on a graph with m != n - 1.
    NotATree { vertices: usize, edges: usize },
    /// The supplied vertex set is not a block of the graph.
    NotABlock { detail: String },
    /// The set-cover reduction is degenerate on a single-color graph.
    Monochromatic,
    /// A block exceeds the oracle's enumeration budget.
    BlockTooLarge {
        smallest_member: Vertex,
        size: usize,
        budget: usize,
    },
    /// Defensive: a universe element is covered by no set.
    UncoverableElement { element_source: Vertex },
    /// The assignment does not satisfy the formula.
    UnsatisfyingAssignment,
    /// A subset expected to be selective is not; `witness` violates the condition.
    NotSelective { witness: Vertex },
    /// A subset has the wrong cardinality for the requested conversion.
    WrongSubsetSize { expected: usize, actual: usize },
    /// A subset does not decompose into the canonical per-gadget pattern.
    NotDecomposable { detail: String },
    /// A generator spec cannot be satisfied (e.g. more colors than vertices).
    InfeasibleSpec { detail: String },
    /// The requested solver does not apply to the given instance.
    ClassMismatch { detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex id {vertex} out of range 1..={n}")
            }
            Error::EmptyCandidateSet => write!(f, "candidate set is empty"),
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::NotATree { vertices, edges } => {
                write!(f, "not a tree: {vertices} vertices but {edges} edges")
            }
            Error::NotABlock { detail } => write!(f, "not a block: {detail}"),
            Error::Monochromatic => {
                write!(f, "graph uses a single color; the set-cover reduction is degenerate")
            }
            Error::BlockTooLarge {
                smallest_member,
                size,
                budget,
            } => write!(
                f,
                "block containing vertex {smallest_member} has search space {size}, over budget {budget}"
            ),
            Error::UncoverableElement { element_source } => {
                write!(f, "universe element for vertex {element_source} is covered by no set")
            }
            Error::UnsatisfyingAssignment => {
                write!(f, "assignment does not satisfy the formula")
            }
            Error::NotSelective { witness } => {
                write!(f, "subset is not selective; vertex {witness} violates the condition")
            }
            Error::WrongSubsetSize { expected, actual } => {
                write!(f, "subset has size {actual}, expected {expected}")
            }
            Error::NotDecomposable { detail } => {
                write!(f, "subset does not match the gadget pattern: {detail}")
            }
            Error::InfeasibleSpec { detail } => write!(f, "infeasible generator spec: {detail}"),
            Error::ClassMismatch { detail } => write!(f, "solver does not apply: {detail}"),
        }
    }
}

impl std::error::Error for Error {}
