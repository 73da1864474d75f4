pub mod error;
pub mod polyalg;
pub mod tensor;
pub mod schemes;
pub mod degeneracy;
pub mod canonical;
pub mod classify;
