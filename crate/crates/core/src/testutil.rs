//! Shared fixtures for unit tests: the 3-Sasakian frame data and small
//! helpers. Compiled only for tests.

use crate::exterior::KForm;
use crate::frame::StructureConstants;
use crate::scalar::Exact;

pub(crate) fn q(n: i64) -> Exact {
    crate::scalar::Scalar::from_int(n)
}

pub(crate) fn qr(num: i64, den: i64) -> Exact {
    crate::scalar::Scalar::ratio(num, den)
}

/// Brackets of the 3-Sasakian frame: su(2) doubled on `e1..e3` plus the
/// mixed relations on `e4..e7`.
pub(crate) fn sasakian3_constants() -> StructureConstants<Exact> {
    StructureConstants::from_brackets(&[
        (0, 1, 2, q(2)),
        (1, 2, 0, q(2)),
        (0, 2, 1, q(-2)), // [e3,e1] = 2 e2
        (3, 4, 0, q(2)),
        (5, 6, 0, q(2)),
        (3, 5, 1, q(2)),
        (4, 6, 1, q(-2)),
        (3, 6, 2, q(2)),
        (4, 5, 2, q(2)),
    ])
}

/// Fundamental form of the 3-Sasakian frame:
/// `e^{123}-e^{145}-e^{167}+e^{246}-e^{257}+e^{347}+e^{356}`.
pub(crate) fn sasakian3_phi() -> KForm<Exact> {
    let mut phi = KForm::zero(3);
    for (idx, sign) in [
        ([0usize, 1, 2], 1i64),
        ([0, 3, 4], -1),
        ([0, 5, 6], -1),
        ([1, 3, 5], 1),
        ([1, 4, 6], -1),
        ([2, 3, 6], 1),
        ([2, 4, 5], 1),
    ] {
        phi.set(&idx, q(sign));
    }
    phi
}
