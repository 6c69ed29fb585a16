//! Example categories bundled with the crate.

use super::Category;
use crate::error::{Error, Result};

pub const Z2: &str = include_str!("../../data/z2.json");
pub const SWEEDLER: &str = include_str!("../../data/sweedler.json");
pub const Z3_BRAIDED: &str = include_str!("../../data/z3_braided.json");
pub const TRIVIAL: &str = include_str!("../../data/trivial.json");
pub const VEC_Z2: &str = include_str!("../../data/vec_z2.json");
pub const FIBONACCI: &str = include_str!("../../data/fibonacci.json");

/// Names accepted by [`load`], in a stable order.
pub const NAMES: [&str; 6] = ["z2", "sweedler", "z3_braided", "trivial", "vec_z2", "fibonacci"];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "z2" => Z2,
        "sweedler" => SWEEDLER,
        "z3_braided" => Z3_BRAIDED,
        "trivial" => TRIVIAL,
        "vec_z2" => VEC_Z2,
        "fibonacci" => FIBONACCI,
        _ => return None,
    })
}

pub fn load(name: &str) -> Result<Category> {
    let text = source(name).ok_or_else(|| Error::Io(format!("no shipped category named `{name}`")))?;
    Category::from_json_str(text)
}
