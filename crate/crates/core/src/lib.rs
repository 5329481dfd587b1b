pub mod binomial;
pub mod error;
pub mod hvector;
pub mod polyring;
pub mod reference;
pub mod pfaffian;
pub mod resolution;

pub use error::{Error, Result};
