pub mod cli;
pub mod error;
pub mod gft;
pub mod holomorphic;
pub mod optimize;
pub mod series;
pub mod special;
pub mod theorems;

pub use error::{Error, Result};
pub use holomorphic::{ClosedForm, Holomorphic, Jet};
pub use series::{Alexander, PowerSeries};
pub use special::BesselParams;
