//! Beam defocus analysis for wideband uniform circular arrays (UCA).
//!
//! The crate covers the whole chain from array geometry to spectrum
//! efficiency:
//!
//! - [`specfun`]: Bessel functions of the first kind, the generalized
//!   hypergeometric series `1F2`/`2F3`, threshold inversion and adaptive
//!   quadrature.
//! - [`cxlinalg`]: dense complex matrices, one-sided Jacobi SVD, block-diagonal
//!   assembly and water-filling.
//! - [`arraymodel`]: UCA/ULA steering vectors, the OFDM subcarrier grid and a
//!   seeded Saleh-Valenzuela channel generator.
//! - [`precoding`]: phase-shifter-only hybrid precoding and delay-phase
//!   precoding (TTD network feeding a PS network).
//! - [`analysis`]: exact and closed-form beamforming gains, TTD sizing,
//!   band-averaged gain bounds and spectrum efficiency.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the aliases
//! at the crate root fix the scalar to `f64`, which is what the experiment
//! runner uses.

pub mod analysis;
pub mod arraymodel;
pub mod cxlinalg;
mod error;
pub mod precoding;
mod real;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use real::{Real, SPEED_OF_LIGHT};

pub use analysis::{GainAxis, GainProfile, SeProfile};
pub use arraymodel::{
    ChannelConfig, ChannelRealization, FrequencyGrid, PathParams, UcaGeometry, UlaGeometry,
};
pub use cxlinalg::{CxMatrix, SvdResult};
pub use precoding::{DppConfig, PrecoderSet, SubarrayReference, TtdSchedule};
pub use specfun::SeriesControl;

/// Complex sample in double precision.
pub type Cx = Complex<f64>;
/// Double-precision complex matrix.
pub type Matrix = CxMatrix<f64>;
/// Double-precision SVD output.
pub type Svd = SvdResult<f64>;
/// Double-precision circular array.
pub type Uca = UcaGeometry<f64>;
/// Double-precision linear array.
pub type Ula = UlaGeometry<f64>;
/// Double-precision subcarrier grid.
pub type Grid = FrequencyGrid<f64>;
/// Double-precision path parameters.
pub type Path = PathParams<f64>;
/// Double-precision channel realization.
pub type Channel = ChannelRealization<f64>;
/// Double-precision channel generator settings.
pub type ChannelCfg = ChannelConfig<f64>;
/// Double-precision precoder configuration.
pub type Dpp = DppConfig<f64>;
/// Double-precision precoder set.
pub type Precoders = PrecoderSet<f64>;
/// Double-precision TTD delays.
pub type Delays = TtdSchedule<f64>;
/// Double-precision series control.
pub type Series = SeriesControl<f64>;
