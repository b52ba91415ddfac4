//! Built-in parameter sets with known component groups.

use crate::error::Result;
use crate::exactnum::rat;
use crate::gamma::SurfaceParams;
use crate::qfield::FieldDescriptor;
use crate::units::fundamental_unit;

/// A parameter set together with the structure of `Q` it must produce.
#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    pub params: SurfaceParams,
    pub expected_h_order: usize,
    pub expected_q_order: usize,
    /// Expected rendering of the classification.
    pub expected_q: &'static str,
}

/// `theta = 6, r = 6, I = <1, eta>, e = 0`.
pub fn theta6_r6_e0() -> Result<Preset> {
    let d = FieldDescriptor::plus(6)?;
    let params = SurfaceParams::with_zero_t(d, 6, d.one(), fundamental_unit(d), d.zero())?;
    Ok(Preset { name: "theta6-r6-e0", params, expected_h_order: 8, expected_q_order: 4, expected_q: "Z/2 x Z/2" })
}

/// `theta = 4, r = 6, I = Z[u], e = 1/(6(1-u))`.
pub fn theta4_r6_e_sixth() -> Result<Preset> {
    let d = FieldDescriptor::plus(4)?;
    let e = (d.one() - d.u()).inverse()?.scale(&rat(1, 6));
    let params = SurfaceParams::with_zero_t(d, 6, d.one(), d.u(), e)?;
    Ok(Preset { name: "theta4-r6-e-sixth", params, expected_h_order: 2, expected_q_order: 2, expected_q: "Z/2" })
}

/// `theta = 4, r = 6, I = Z[u], e = 0`.
pub fn theta4_r6_e0() -> Result<Preset> {
    let d = FieldDescriptor::plus(4)?;
    let params = SurfaceParams::with_zero_t(d, 6, d.one(), d.u(), d.zero())?;
    Ok(Preset { name: "theta4-r6-e0", params, expected_h_order: 2, expected_q_order: 1, expected_q: "trivial" })
}

/// `theta = 7, r = 10, I = <1, eta>, e = 0`.
pub fn theta7_r10_e0() -> Result<Preset> {
    let d = FieldDescriptor::plus(7)?;
    let params = SurfaceParams::with_zero_t(d, 10, d.one(), fundamental_unit(d), d.zero())?;
    Ok(Preset {
        name: "theta7-r10-e0",
        params,
        expected_h_order: 20,
        expected_q_order: 20,
        expected_q: "Z/4 ⋉ Z/5 (action [[3]])",
    })
}

pub fn all() -> Result<Vec<Preset>> {
    Ok(vec![theta6_r6_e0()?, theta4_r6_e_sixth()?, theta4_r6_e0()?, theta7_r10_e0()?])
}
