use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid quantum number: {0}")]
    InvalidQuantumNumber(String),

    #[error("manifold mismatch: packet has N={packet}, spectrum has N={spectrum}")]
    ManifoldMismatch { packet: u32, spectrum: u32 },

    #[error("quadrature grid {n_theta}x{n_phi} is too coarse for polynomial degree {degree}")]
    GridTooCoarse {
        n_theta: usize,
        n_phi: usize,
        degree: usize,
    },

    #[error("distribution is not normalized (integral = {0})")]
    NotNormalized(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("constants file: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
