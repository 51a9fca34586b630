//! Building the permutation candidates, reducing them, and checking them.

mod build;
mod params;
mod periodicity;
mod sparse;
mod table;
mod verify;

pub use build::{build_poly, build_unreduced};
pub use params::{
    canonical_params, row_exclusion, theorem_predicate, ConstructionParams, Exclusion,
};
pub use periodicity::{unit_identity, UnitIdentityReport};
pub use sparse::{reduce_exponent, SparsePoly};
pub use table::{
    cells_from_json, cells_to_json, diff_tables, full_table, generate_table, qualifying_rows,
    CellRecord, CellStatus, TableCell,
};
pub use verify::{
    agw_commutation_failures, agw_is_permutation, brute_force_is_permutation, check_cap,
    exhaust_cap_from_env, DEFAULT_EXHAUST_CAP, EXHAUST_CAP_ENV,
};
