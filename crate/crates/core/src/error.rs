use core::fmt;

use crate::graph::Edge;
use crate::labelled::Status;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An edge `{v, v}` was supplied.
    LoopEdge(usize),
    VertexOutOfRange { vertex: usize, order: usize },
    DuplicateEdge(Edge),
    MissingEdge(Edge),
    /// Malformed graph6 input; `position` is a byte offset into the line.
    Graph6 { position: usize, reason: &'static str },
    /// The operation would exceed a documented exact-search or canonicalisation limit.
    OrderTooLarge { order: usize, limit: usize },
    OrderTooSmall { order: usize, min: usize },
    InvalidParameter(&'static str),
    NotInSet(usize),
    NotATree,
    NotDominating,
    NotAPartition,
    WrongStatus { vertex: usize, found: Status, op: &'static str },
    /// A labelling that breaks one of the structural laws of the tree family.
    InvalidLabelling(&'static str),
    /// Roman bondage is only defined when the maximum degree is at least two.
    MaxDegreeBelowTwo,
    /// No edge set of size at most `cap` raised the Roman domination number.
    BondageCapExhausted { cap: usize },
    /// A deletion lowered the Roman domination number by more than one.
    RemovalDropTooLarge { vertex: usize, before: usize, after: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopEdge(v) => write!(f, "loop edge at vertex {v}"),
            Error::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            Error::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            Error::MissingEdge(e) => write!(f, "edge {e} is not in the graph"),
            Error::Graph6 { position, reason } => {
                write!(f, "invalid graph6 at byte {position}: {reason}")
            }
            Error::OrderTooLarge { order, limit } => {
                write!(f, "order {order} exceeds the limit of {limit}")
            }
            Error::OrderTooSmall { order, min } => {
                write!(f, "order {order} is below the minimum of {min}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NotInSet(v) => write!(f, "vertex {v} is not a member of the given set"),
            Error::NotATree => f.write_str("graph is not a tree"),
            Error::NotDominating => f.write_str("set does not dominate the graph"),
            Error::NotAPartition => f.write_str("labels do not partition the vertex set"),
            Error::WrongStatus { vertex, found, op } => {
                write!(f, "{op} cannot attach at vertex {vertex} with status {found}")
            }
            Error::InvalidLabelling(msg) => write!(f, "invalid labelling: {msg}"),
            Error::MaxDegreeBelowTwo => f.write_str("Roman bondage needs maximum degree at least 2"),
            Error::BondageCapExhausted { cap } => {
                write!(f, "no edge set of size <= {cap} raises the Roman domination number")
            }
            Error::RemovalDropTooLarge { vertex, before, after } => write!(
                f,
                "deleting vertex {vertex} dropped the Roman domination number from {before} to {after}"
            ),
        }
    }
}

impl core::error::Error for Error {}
