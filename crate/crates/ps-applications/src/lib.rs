//! Concrete specializations of the zeta inversion: hypersurface counts and
//! motives, inverse Pólya enumeration, character-variety measures,
//! product factorizations and the partition/type mass identity.

mod charvar;
mod factorization;
mod hypersurface;
mod mass;
mod polya;

use ps_algebra::AlgebraError;
use ps_arrangements::ArrError;
use ps_plethysm::PlethysmError;
use thiserror::Error;

pub use charvar::{sl_character_variety, sl_epoly, sl_euler, sl_limit_at_one, transitive_oracle, transitive_tuples, CharvarMode, CharvarValue};
pub use factorization::{cyclotomic, factorization_cases, real_euler_factorization, verify_factorization, FactorizationCase, FactorizationReport, RealEulerReport};
pub use hypersurface::{closed_class, geometric_count, irr_hypersurface, stratum_mass, HyperValue, HypersurfaceSpec, Measure};
pub use mass::{mass_identity, MassReport};
pub use polya::{inverse_polya, inverse_polya_symbolic};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AppError {
    #[error("{0}")]
    Argument(String),
    /// A value the theory guarantees (integrality, pole cancellation) failed.
    #[error("assertion: {0}")]
    Assertion(String),
    #[error(transparent)]
    Plethysm(#[from] PlethysmError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Arrangement(#[from] ArrError),
}

