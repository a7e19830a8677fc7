//! Fixtures shared by the benchmarks in `benches/`.

use atlas_core::algebra::{AlgebraElement, ChevalleyAlgebra};
use atlas_core::CartanType;

pub fn algebra(s: &str) -> ChevalleyAlgebra {
    let t: CartanType = s.parse().expect("valid type");
    ChevalleyAlgebra::from_type(&t)
}

/// A highest root vector, spanning the minimal orbit.
pub fn highest_root_vector(a: &ChevalleyAlgebra) -> AlgebraElement {
    let theta = a.root_system().highest_root().clone();
    AlgebraElement::basis(a.dim(), a.root_vector(&theta).expect("highest root"))
}
