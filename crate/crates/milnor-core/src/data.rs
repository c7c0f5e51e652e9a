//! Access to the bundled data files. Each file is embedded at compile time
//! but can be overridden by pointing `MILNOR_DATA_DIR` at a directory
//! containing files with the same names, which is how modified or extended
//! catalogs (and deliberately corrupted golden data, in tests) are loaded.

use std::borrow::Cow;

use crate::error::{Error, Result};

pub const DATA_DIR_ENV: &str = "MILNOR_DATA_DIR";

const EMBEDDED: &[(&str, &str)] = &[
    ("catalog.toml", include_str!("../data/catalog.toml")),
    ("golden_sym.toml", include_str!("../data/golden_sym.toml")),
    ("golden_hodge.toml", include_str!("../data/golden_hodge.toml")),
];

pub fn data_text(name: &str) -> Result<Cow<'static, str>> {
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let path = std::path::Path::new(&dir).join(name);
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::DataError(format!("{}: {e}", path.display())))?;
        return Ok(Cow::Owned(text));
    }
    EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| Cow::Borrowed(*t))
        .ok_or_else(|| Error::DataError(format!("no bundled data file named {name}")))
}
