//! Stochastic geometry and fading layer.
//!
//! Nodes are placed uniformly on a disc of radius `D` centred at the relay,
//! fading is Rayleigh (unit-mean exponential power gain) and path loss is the
//! bounded form `1/(1 + d^alpha)`. For `alpha = 2` the composite variable
//! `x = |h|^2 / (1 + d^2)` has a closed-form distribution used throughout the
//! analytic layer.

use rand::Rng;
use rand_distr::Exp1;
use thiserror::Error;

/// Below this argument the closed-form CDF/pdf are evaluated by their Taylor
/// limits; the exact expressions are 0/0 at z = 0 and cancel badly nearby.
const SMALL_Z: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChannelError {
    #[error("cdf_x requires z >= 0, got {0}")]
    NegativeArgument(f64),
    #[error("pdf_x requires z > 0, got {0}")]
    NonPositiveArgument(f64),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
}

/// Geometry, fading, power, rate and efficiency parameters of the network.
///
/// Noise power is normalized to 1 at the relay and at every destination, so
/// `tx_power` is numerically the per-source transmit SNR. The frame duration
/// `T` cancels between harvested energy and relay power; it is carried for
/// completeness but never read by any computation.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkConfig {
    pub num_pairs: usize,
    pub disc_radius: f64,
    pub path_loss_alpha: f64,
    pub tx_power: f64,
    pub target_rate: f64,
    pub harvest_efficiency: f64,
    pub frame_duration: f64,
}

impl Default for NetworkConfig {
    fn default() -> Self {
        NetworkConfig {
            num_pairs: 1,
            disc_radius: 1.0,
            path_loss_alpha: 2.0,
            tx_power: 1e3,
            target_rate: 0.5,
            harvest_efficiency: 1.0,
            frame_duration: 1.0,
        }
    }
}

impl NetworkConfig {
    /// SNR threshold for correct decoding, `eps = 2^{2R} - 1`.
    pub fn decode_threshold(&self) -> f64 {
        (2f64).powf(2.0 * self.target_rate) - 1.0
    }

    pub fn validate(&self) -> Result<(), ChannelError> {
        if self.num_pairs < 1 {
            return Err(ChannelError::InvalidConfig("num_pairs must be >= 1".into()));
        }
        if !(self.disc_radius > 0.0) {
            return Err(ChannelError::InvalidConfig("disc_radius must be > 0".into()));
        }
        if !(self.path_loss_alpha >= 2.0) {
            return Err(ChannelError::InvalidConfig("path_loss_alpha must be >= 2".into()));
        }
        if !(self.tx_power > 0.0) {
            return Err(ChannelError::InvalidConfig("tx_power must be > 0".into()));
        }
        if !(self.target_rate > 0.0) {
            return Err(ChannelError::InvalidConfig("target_rate must be > 0".into()));
        }
        if !(self.harvest_efficiency > 0.0 && self.harvest_efficiency <= 1.0) {
            return Err(ChannelError::InvalidConfig(
                "harvest_efficiency must be in (0, 1]".into(),
            ));
        }
        if !(self.frame_duration > 0.0) {
            return Err(ChannelError::InvalidConfig("frame_duration must be > 0".into()));
        }
        Ok(())
    }
}

/// One channel realization: fading power gain, node distance and the
/// composite variable `x = |h|^2 / (1 + d^alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkDraw {
    pub fading_gain: f64,
    pub distance: f64,
    pub composite: f64,
}

/// Draws one link realization: radial distance with density `2r/D^2` on
/// `[0, D]` (uniform disc) and a unit-mean exponential fading gain.
pub fn sample_link<R: Rng + ?Sized>(config: &NetworkConfig, rng: &mut R) -> LinkDraw {
    let u: f64 = rng.gen();
    let distance = config.disc_radius * u.sqrt();
    let fading_gain: f64 = rng.sample(Exp1);
    let composite = fading_gain / (1.0 + distance.powf(config.path_loss_alpha));
    LinkDraw {
        fading_gain,
        distance,
        composite,
    }
}

/// CDF of the composite variable for `alpha = 2`:
/// `F(z) = 1 - e^{-z}/(D^2 z) + e^{-(1+D^2) z}/(D^2 z)`.
pub fn cdf_x(z: f64, disc_radius: f64) -> Result<f64, ChannelError> {
    if z < 0.0 {
        return Err(ChannelError::NegativeArgument(z));
    }
    let d2 = disc_radius * disc_radius;
    if z < SMALL_Z {
        return Ok(z * (d2 + 2.0) / 2.0);
    }
    // 1 - e^{-z} (1 - e^{-D^2 z}) / (D^2 z), written with expm1 so that the
    // small-z cancellation never amplifies rounding.
    let v = 1.0 + (-z).exp() * (-d2 * z).exp_m1() / (d2 * z);
    Ok(v.clamp(0.0, 1.0))
}

/// pdf of the composite variable for `alpha = 2`.
pub fn pdf_x(z: f64, disc_radius: f64) -> Result<f64, ChannelError> {
    if !(z > 0.0) {
        return Err(ChannelError::NonPositiveArgument(z));
    }
    let d2 = disc_radius * disc_radius;
    if z < SMALL_Z {
        return Ok(d2 / 2.0 + 1.0);
    }
    let v = ((1.0 + z) * (-z).exp() - (1.0 + z + z * d2) * (-(1.0 + d2) * z).exp())
        / (d2 * z * z);
    Ok(v.max(0.0))
}

/// Exponential surrogate for the pdf near zero, `a e^{-a z}` with
/// `a = (D^2 + 2)/2`; exact in value and slope at the origin.
pub fn pdf_x_exp_approx(z: f64, disc_radius: f64) -> f64 {
    let a = (disc_radius * disc_radius + 2.0) / 2.0;
    a * (-a * z).exp()
}
