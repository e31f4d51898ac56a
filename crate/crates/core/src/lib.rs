pub mod cli;
pub mod endpoint_index;
pub mod error;
pub mod gather;
pub mod gen;
pub mod graph;
pub mod instance;
pub mod interval;
pub mod kclique;
pub mod lp;
pub mod oracle;
pub mod select;
pub mod squares;
