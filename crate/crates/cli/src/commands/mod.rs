//! The built-in commands.

mod check;
mod common;
mod deform;
mod gen;
pub mod matrix;

use crate::registry::Registry;

pub fn register_all(r: &mut Registry) {
    r.register(Box::new(check::Integrable));
    r.register(Box::new(check::Invariant));
    r.register(Box::new(check::Radial));
    r.register(Box::new(check::Transversal));
    r.register(Box::new(check::SimpleSing));
    r.register(Box::new(check::Isotropic));
    r.register(Box::new(check::Darboux));
    r.register(Box::new(gen::GenJ));
    r.register(Box::new(gen::GenPd));
    r.register(Box::new(gen::GenRemark));
    r.register(Box::new(matrix::Pfaffian));
    r.register(Box::new(matrix::PathCmd));
    r.register(Box::new(deform::Deform));
}
