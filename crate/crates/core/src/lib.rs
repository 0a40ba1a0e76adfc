pub mod cli;
pub mod cluster;
pub mod error;
pub mod exact;
pub mod inverse;
pub mod poly;
pub mod rational;
pub mod sim;
pub mod table;
pub mod trees;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
