//! Outage analysis and coalition-formation workbench for a cooperative
//! network in which several source-destination pairs communicate through a
//! single wireless-powered decode-and-forward relay.
//!
//! The crate has three layers:
//!
//! * a stochastic layer ([`channel`], [`sim`]) that places nodes uniformly on
//!   a disc around the relay, draws Rayleigh fading, and runs the two-phase
//!   cooperative protocol trial by trial;
//! * an analytic layer ([`bessel`], [`analytic`]) with the closed-form
//!   high-SNR outage approximation and its asymptotics;
//! * a game layer ([`game`]) that treats coalition formation as a
//!   transferable-utility coalitional game and checks superadditivity and
//!   core membership of the equal-split payoff.
//!
//! The `ehrelay` binary (see [`cli`]) drives SNR sweeps and emits CSV rows
//! suitable for external plotting.

pub mod analytic;
pub mod bessel;
pub mod channel;
pub mod cli;
pub mod game;
pub mod quad;
pub mod sim;
