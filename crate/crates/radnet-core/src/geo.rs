//! Positions and propagation directions as they appear in message headers.

use core::fmt;

/// Scale of the signed 32-bit fixed-point coordinate fields (Q16.16).
///
/// The simulation works in local planar meters; one unit is 1/65536 m,
/// giving a usable range of roughly +/-32 km per axis.
pub const COORD_SCALE: f64 = 65536.0;

/// A position carried in a message header: three 32-bit signed fixed-point
/// values (nominally longitude, latitude and altitude; the simulation maps
/// local planar x/y/z meters into them).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GeoPosition {
    pub longitude: i32,
    pub latitude: i32,
    pub altitude: i32,
}

impl GeoPosition {
    pub const ORIGIN: GeoPosition = GeoPosition { longitude: 0, latitude: 0, altitude: 0 };

    /// Quantizes planar meters into the fixed-point header fields.
    pub fn from_meters(x: f64, y: f64, z: f64) -> Self {
        GeoPosition {
            longitude: quantize(x),
            latitude: quantize(y),
            altitude: quantize(z),
        }
    }

    pub fn x_m(&self) -> f64 {
        self.longitude as f64 / COORD_SCALE
    }

    pub fn y_m(&self) -> f64 {
        self.latitude as f64 / COORD_SCALE
    }

    pub fn z_m(&self) -> f64 {
        self.altitude as f64 / COORD_SCALE
    }

    /// Euclidean distance in meters.
    pub fn distance_to(&self, other: &GeoPosition) -> f64 {
        let dx = self.x_m() - other.x_m();
        let dy = self.y_m() - other.y_m();
        let dz = self.z_m() - other.z_m();
        libm::sqrt(dx * dx + dy * dy + dz * dz)
    }
}

fn quantize(meters: f64) -> i32 {
    let v = meters * COORD_SCALE;
    // saturate rather than wrap on out-of-range coordinates
    if v >= i32::MAX as f64 {
        i32::MAX
    } else if v <= i32::MIN as f64 {
        i32::MIN
    } else {
        libm::round(v) as i32
    }
}

impl fmt::Debug for GeoPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.2}, {:.2}, {:.2})m", self.x_m(), self.y_m(), self.z_m())
    }
}

/// Propagation direction of a message relative to its source.
///
/// `Backward` restricts forwarding to nodes behind the source, `Forward`
/// to nodes in front of it, and `Omni` allows propagation both ways.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[repr(i8)]
pub enum Direction {
    Backward = -1,
    #[default]
    Omni = 0,
    Forward = 1,
}

impl Direction {
    /// The three admitted wire values are -1, 0 and 1.
    pub fn from_i8(v: i8) -> Option<Direction> {
        match v {
            -1 => Some(Direction::Backward),
            0 => Some(Direction::Omni),
            1 => Some(Direction::Forward),
            _ => None,
        }
    }

    pub fn as_i8(self) -> i8 {
        self as i8
    }

    /// True when a node with the given positioning (+/-1 relative to the
    /// message source) lies where this direction propagates.
    pub fn admits_positioning(self, positioning: i8) -> bool {
        self == Direction::Omni || self.as_i8() == positioning
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantization_round_trips_within_resolution() {
        let p = GeoPosition::from_meters(1234.5678, -300.25, 0.0);
        assert!((p.x_m() - 1234.5678).abs() < 1.0 / COORD_SCALE);
        assert!((p.y_m() + 300.25).abs() < 1.0 / COORD_SCALE);
        assert_eq!(p.z_m(), 0.0);
    }

    #[test]
    fn distance_matches_pythagoras() {
        let a = GeoPosition::from_meters(0.0, 0.0, 0.0);
        let b = GeoPosition::from_meters(3.0, 4.0, 0.0);
        assert!((a.distance_to(&b) - 5.0).abs() < 1e-3);
    }

    #[test]
    fn direction_admits_only_three_values() {
        assert_eq!(Direction::from_i8(-1), Some(Direction::Backward));
        assert_eq!(Direction::from_i8(0), Some(Direction::Omni));
        assert_eq!(Direction::from_i8(1), Some(Direction::Forward));
        assert_eq!(Direction::from_i8(2), None);
        assert_eq!(Direction::from_i8(-2), None);
    }

    #[test]
    fn omni_admits_both_positionings() {
        assert!(Direction::Omni.admits_positioning(1));
        assert!(Direction::Omni.admits_positioning(-1));
        assert!(Direction::Forward.admits_positioning(1));
        assert!(!Direction::Forward.admits_positioning(-1));
        assert!(Direction::Backward.admits_positioning(-1));
        assert!(!Direction::Backward.admits_positioning(1));
    }
}
