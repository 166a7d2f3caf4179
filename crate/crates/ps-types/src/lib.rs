//! Splitting types b⃗^m⃗, integer partitions, enumeration by degree and the
//! elementary merge/forget moves generating the refinement order.

mod enumerate;
mod partition;
mod splitting;

pub use enumerate::{enumerate_types, hilbert_by_enumeration, hilbert_by_product, reachable_up, up_neighbors, MAX_ENUM_DEGREE};
pub use partition::{count_partitions_at_most, partitions, Partition};
pub use splitting::{SplittingType, TypeError, TypeStats};
