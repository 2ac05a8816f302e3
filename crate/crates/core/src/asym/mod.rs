//! Leading-order approximants of `F_n` in each regime.

mod phase;
mod plane;
mod segment;

pub use phase::{phase, phase_data, phase_derivative, PhaseBranch, PhaseData, StationaryPoint};
pub use plane::{exterior_approx, interior_approx};
pub use segment::{endpoint_approx, endpoint_coefficient, i_minus_approx, i_minus_endpoint_approx, segment_approx, segment_terms};

use num_rational::BigRational;

use crate::arith::rational::{int, rat};
use crate::arith::BigComplex;
use crate::geometry::RegimeTag;

/// An approximant together with the regime it was built for.
#[derive(Clone, Debug)]
pub struct AsymptoticResult {
    pub value: BigComplex,
    pub regime: RegimeTag,
    /// Power of `n` in front of the oscillating/exponential factor.
    pub leading_order: BigRational,
}

/// The power of `n` carried by each regime's formula.
pub fn leading_order(regime: RegimeTag, alpha: u32) -> Option<BigRational> {
    match regime {
        RegimeTag::Exterior => Some(int(alpha as i64) - rat(1, 2)),
        RegimeTag::Interior => Some(-int(alpha as i64)),
        RegimeTag::SegmentInterior => Some(rat(1, 2)),
        RegimeTag::SegmentEndpoint => Some(rat(2, 3)),
        RegimeTag::CurveOther => None,
    }
}

/// Bits of guard for quantities multiplied by `n`.
pub(crate) fn guard_for(n: u64) -> u32 {
    32 + (64 - n.leading_zeros())
}
