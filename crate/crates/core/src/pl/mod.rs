//! PL surgery on spheres and balls, and the checks that go with it.

mod checks;
mod flip;
mod surgery;

pub use checks::{is_neighborly, is_stacked, neighborly_witness, shelling_failure, stacked_witness, verify_shelling};
pub use flip::{bistellar_flip, bistellar_flips, check_flip, FlipSpec};
pub use surgery::{flag_region, replace_ball, sew_vertex, FlagSpec, ReplaceGuard};
