//! The five construction moves (H1, H2, E3, V4, V22): forward application,
//! replay of recorded sequences, random generation of class corpora, and
//! reverse decomposition down to the base graphs.

mod types;
mod apply;
mod text;
mod gen;
mod classes;
mod decompose;

pub use apply::{apply_move, MoveOutcome};
pub use classes::{class_member, is_co_laman, laman_plus_one_witness};
pub use decompose::decompose;
pub use gen::{random_plane_graph, random_quadrangulation, random_sequence, GrowthConfig};
pub use text::{parse_sequence, write_sequence};
pub use types::{Base, GraphClass, Move, MoveSequence};

use crate::error::Result;
use crate::graph::PlaneGraph;

impl MoveSequence {
    /// Replay from the base fixture; move parameters refer to the
    /// intermediate graphs in replay label space.
    pub fn replay(&self) -> Result<PlaneGraph> {
        let mut g = self.base.graph();
        for m in &self.moves {
            g = apply_move(&g, m)?.graph;
        }
        Ok(g)
    }

    /// Replay keeping every intermediate graph (base first).
    pub fn replay_trace(&self) -> Result<Vec<PlaneGraph>> {
        let mut out = vec![self.base.graph()];
        for m in &self.moves {
            let next = apply_move(out.last().unwrap(), m)?.graph;
            out.push(next);
        }
        Ok(out)
    }
}
