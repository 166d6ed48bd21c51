pub mod cli;
pub mod demazure;
pub mod error;
pub mod grouping;
pub mod paths;
pub mod pieri;
pub mod rootdata;
