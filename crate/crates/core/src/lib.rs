pub mod algebra;
pub mod amd;
pub mod code;
pub mod error;
pub mod fixtures;
pub mod gscore;
pub mod pipeline;
pub mod rothlempel;
pub mod specfile;
pub mod testkit;
pub mod twisted;

pub use error::{Error, Result};
