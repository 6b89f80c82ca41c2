pub(super) mod complexes;
pub(super) mod homs;
pub(super) mod modules;
pub(super) mod relative;
pub(super) mod sums;

use std::sync::Arc;

use crate::double::DoubleContext;
use crate::poly::PolyRing;

pub(super) fn ctx(ring: &Arc<PolyRing>) -> DoubleContext {
    DoubleContext::new(ring).expect("doubling a valid ring")
}
