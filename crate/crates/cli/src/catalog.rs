//! Example structures shipped with the binary.

use crate::input::{parse_spec, Loaded};

pub struct Entry {
    pub name: &'static str,
    pub source: &'static str,
}

macro_rules! entry {
    ($name:literal) => {
        Entry {
            name: $name,
            source: include_str!(concat!("../catalog/", $name, ".json")),
        }
    };
}

pub const ENTRIES: &[Entry] = &[
    entry!("abelian"),
    entry!("su2su2u1_phi0"),
    entry!("su2su2u1_phi_pi4"),
    entry!("su2su2u1_phi_3pi4"),
    entry!("su2su2u1_standard_phi"),
    entry!("r3su2u1_standard_phi"),
    entry!("bi_su2su2u1"),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.name)
}

pub fn source(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|e| e.name == name).map(|e| e.source)
}

/// Loads a catalog entry. Catalog files are validated by the test suite.
pub fn load(name: &str) -> Option<Loaded> {
    let spec = parse_spec(source(name)?.as_bytes()).expect("catalog entry parses");
    Some(spec.load().expect("catalog entry is valid"))
}
