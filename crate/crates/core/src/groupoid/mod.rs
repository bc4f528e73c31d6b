//! Finite groupoids: the exact model for levels `-2..=1`, where fibers, levels,
//! factorizations and lifting properties are computed by enumeration.
mod checks;
mod constructions;
mod group;
mod groupoid;
mod implicit;
mod laws;
mod levels;
mod spec;

pub use checks::{
    gap_map_check, gap_report, gap_report_capped, is_local, orthogonality_check, GapReport,
};
pub use constructions::{
    all_functors, diagonal, homotopy_fiber, mapping_groupoid, mapping_groupoid_capped, pullback,
    skeleton, truncate0, FunctorGroupoid, Pullback, Skeleton, DEFAULT_SIZE_CAP,
};
pub use group::Group;
pub use groupoid::{Component, FiniteGroupoid, GroupoidFunctor, GroupoidTables, Mor};
pub use laws::{
    check_law, elementary_square, fully_faithful, universe, Law, LawOutcome, LAW_SIZE_CAP,
};
pub use levels::{
    conn_level, factorize, sub_restriction, trunc_level, ConnLevel, Factorization, SubRestriction,
};
pub use spec::GroupoidSpec;
