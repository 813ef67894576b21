//! Interest-centric vehicular ad hoc networking, simulated.
//!
//! This crate implements the RAdNet-VE protocol (RVEP) together with three
//! baselines it is usually compared against: the original RAdNet protocol
//! (RP) and two content-centric schemes with non-cacheable data services,
//! one reactive (`CCN_R`) and one proactive (`CCN_P`). Around the protocols
//! it provides everything needed to run them: a deterministic discrete-event
//! kernel, road geometry with IDM car-following mobility, a unit-disk
//! CSMA/CA broadcast medium, the four scenario applications (traffic light
//! control, driver assistance, obstacle notification, cooperative cruise
//! control) and a metric pipeline.
//!
//! The crate is `no_std` compatible (`alloc` required); file formats, the
//! CLI and experiment orchestration live in the companion `radnet-sim`
//! crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod apps;
pub mod ccn;
pub mod engine;
pub mod geo;
pub mod interest;
pub mod kernel;
pub mod message;
pub mod metrics;
pub mod prefix;
pub mod radio;
pub mod roadnet;
pub mod rp;
pub mod rvep;
pub mod scenario;

pub use geo::{Direction, GeoPosition};
pub use interest::{Interest, InterestCodebook, InterestRegistration};
pub use message::{CodecError, RMessage, VeMessage};
pub use prefix::{NodePrefix, PrefixScheme};
pub use scenario::{ProtocolKind, RunConfig, ScenarioKind};
