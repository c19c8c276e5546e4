pub mod bench;
pub mod generate;
pub mod solve;
pub mod verify;

use std::path::Path;

use ossmax::instance::Instance;

use crate::failure::{Failure, IoContext};

/// Unreadable files are runtime failures; unparsable ones are invalid input.
pub fn load_instance(path: &Path) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path).io(format!("reading {}", path.display()))?;
    Instance::from_json(&text).map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}
