pub mod audit;
pub mod cli;
pub mod edgelist;
pub mod graph6;
pub mod random;
pub mod report;
pub mod spec;
