//! Minimal differentiable numeric kernel.
//!
//! Dense 64-bit tensors, a CSR sparse shift operator, graph convolution
//! and graph attention layers, graph maxpool, dense layers, tanh, squared
//! losses, an Adam-style optimizer, and a finite-difference gradient
//! checker. There is no tape: every layer ships a hand-derived backward
//! pass, and `gradcheck` verifies each of them against central finite
//! differences.

mod adam;
mod gradcheck;
mod layers;
mod sparse;
mod tensor;

pub use adam::Adam;
pub use gradcheck::{check_gradients, Fragment, GradReport};
pub use layers::{
    graph_maxpool, graph_maxpool_backward, tanh_backward, tanh_forward, DenseLayer, GatLayer,
    GraphConvLayer, Neighborhoods,
};
pub use sparse::CsrMatrix;
pub use tensor::Tensor;

/// Everything a graph layer needs to know about its support: the shift
/// operator, its transpose (for backward passes), and the neighbor lists
/// implied by the shift's sparsity pattern (for attention).
#[derive(Debug, Clone)]
pub struct ShiftContext {
    pub shift: CsrMatrix,
    pub shift_t: CsrMatrix,
    pub neighborhoods: Neighborhoods,
}

impl ShiftContext {
    pub fn new(shift: CsrMatrix) -> Self {
        let shift_t = shift.transpose();
        let neighborhoods = Neighborhoods::from_shift(&shift);
        ShiftContext { shift, shift_t, neighborhoods }
    }

    pub fn n_nodes(&self) -> usize {
        self.shift.n_rows()
    }
}
