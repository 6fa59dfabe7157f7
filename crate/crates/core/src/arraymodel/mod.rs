//! Array geometries, OFDM subcarrier grid and the wideband channel model.

mod channel;
mod geometry;
mod grid;

pub use channel::{generate_channel, ChannelConfig, ChannelRealization, PathParams};
pub use geometry::{steering_uca, steering_ula, UcaGeometry, UlaGeometry};
pub use grid::FrequencyGrid;
