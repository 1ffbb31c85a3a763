pub mod alexander;
pub mod casson;
pub mod error;
pub mod laurent;
pub mod names;
pub mod obstruction;
pub mod rational;
pub mod slopes;

pub use error::{Error, Result};
