//! Shared inputs for the criterion benchmarks in `benches/`.

use sdiff_core::{
    enumerate_basis, BasisKind, FourierVector, KleinBasisElement, DEFAULT_TORUS_AREA,
};

/// `ξ_(20,10)`, the direction of the positive sequence.
pub fn blanket_direction() -> KleinBasisElement {
    KleinBasisElement::new(BasisKind::SinSin, (20, 10)).expect("admissible index")
}

/// Fourier vectors of every basis element with `‖l‖ ≤ radius`.
pub fn basis_vectors(radius: f64) -> Vec<FourierVector> {
    enumerate_basis(radius)
        .iter()
        .map(|(_, e)| e.to_fourier(DEFAULT_TORUS_AREA))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures() {
        assert_eq!(blanket_direction().kind(), Some(BasisKind::SinSin));
        assert_eq!(basis_vectors(2.0).len(), 6);
    }
}
