//! Exact maximum clique solvers and their benchmark harness.
//!
//! Five solvers share one search skeleton: MC (plain binomial
//! backtracking), MCQ (greedy-colouring bound), MCSa (static colour
//! order), MCSb (static order plus colour repair) and BBMC (the MCSa tree
//! over bit strings). The styled solvers take one of three initial vertex
//! orderings. Node counts are deterministic by construction: every
//! ordering and tie-break is a strict total order, so two runs on the
//! same graph walk the same tree.

pub mod bbmc;
pub mod bitset;
pub mod colour;
pub mod graph;
pub mod harness;
pub mod ordering;
pub mod search;

pub use bbmc::{bb_colour, bbmc_search, build_bit_neighbourhoods, BitNeighbourhoods};
pub use bitset::BitString;
pub use colour::{mcq_search, mcsa_search, mcsb_search, number_sort, ColourClasses, ColourResult};
pub use graph::{
    gen_gnp, gen_k_regular, gen_small_world, parse_dimacs, write_dimacs, Graph, GraphError,
    GraphSource,
};
pub use harness::{
    brute_force_omega, run_batch_random, run_single, run_spec, AlgorithmSpec, BatchConfig,
    ExperimentRow,
};
pub use ordering::{min_width_order, order_by_style, OrderingStyle, VertexRecord};
pub use search::{mc_search, SearchBudget, SearchOutcome};
