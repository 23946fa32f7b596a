pub mod combinat;
pub mod error;
pub mod golden;
pub mod poly;
pub mod reps;
pub mod specht;
pub mod stability;
pub mod tableaux;

pub use error::{Error, Result};
