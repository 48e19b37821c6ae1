//! File formats and reports for the `derange` command-line tool.

pub mod io;
pub mod report;

pub use io::{
    parse_digraph, parse_group, parse_perm_set, write_digraph, write_graph, write_group,
    write_perm_set, ElementError, GroupFile, ParseError,
};
pub use report::Report;
