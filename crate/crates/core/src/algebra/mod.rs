//! Finite fields and finite groups given by tables.

mod field;
mod group;

pub use field::{is_prime_power, largest_prime_power_le, prime_power, Fe, Field};
pub use group::{Ge, GroupTable};
