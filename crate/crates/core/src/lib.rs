pub mod checks;
pub mod cli;
pub mod complexfn;
mod error;
pub mod fractional;
pub mod oracle;
pub mod quadrature;
pub mod scan;
pub mod table;

pub use error::{format_complex, Error, Result};
