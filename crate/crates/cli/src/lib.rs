//! IO, file formats, parallel verification and the command-line front end
//! for `mis-extremal-core`.

pub mod cli;
pub mod codec;
pub mod parallel;
pub mod report;

pub use codec::{
    graph6_decode, graph6_encode, read_edge_list, write_edge_list, Format, GraphStream,
};
pub use parallel::{verify_exhaustive, verify_stream, Targets, VerifyError, VerifyOptions};
