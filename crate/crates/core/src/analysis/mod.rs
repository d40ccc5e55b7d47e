//! Checks and reports built on the engine, the root machinery and the families.

mod existence;
mod reports;
mod scan;
mod signs;
mod tables;

pub use existence::{right_of_one, verify_root_existence_argument, ExistenceTrace};
pub use reports::{
    conjecture7_report, conjecture7_report_for, dong_koh_screen, roots_report, roots_report_for,
    DongKohScreen, RootFlags, RootReport, RootSource, ToughnessReport,
};
pub use scan::{scan_catalog, ScanFilters, ScanItem, ScanSummary};
pub use signs::{
    root_free_limit, verify_sign_theorem, verify_sign_theorem_for, MultiplicityCheck, SignCheck,
    SignReport,
};
pub use tables::{
    odd_sizes, reproduce_table, smallest_root_in_unit_interval, RootTable, MISSING_ROOT,
};
