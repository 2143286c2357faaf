//! Ground-truth engines: exhaustive subsets, the column DP, and section cost tables.

mod columns;
mod subsets;
mod value_table;

pub use columns::{min_gda_columns, COLUMN_DP_MAX_M};
pub use subsets::{min_gda_subsets, SUBSETS_MAX_VERTICES};
pub use value_table::{compute_value_table, ValueTable, ValueTableFile, TOOL_VERSION};
