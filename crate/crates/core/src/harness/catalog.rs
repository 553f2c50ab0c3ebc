use rayon::prelude::*;

use crate::group::FiniteGroup;
use crate::limits::Limits;
use crate::spec_lang::{evaluate, parse};

/// Spec string and order of every catalog group, in catalog order.
#[rustfmt::skip]
const ENTRIES: &[(&str, usize)] = &[
    ("C2", 2), ("C3", 3), ("C4", 4), ("C5", 5), ("C6", 6), ("C7", 7), ("C8", 8), ("C9", 9),
    ("C10", 10), ("C11", 11), ("C12", 12), ("C13", 13), ("C14", 14), ("C15", 15), ("C16", 16),
    ("C17", 17), ("C18", 18), ("C19", 19), ("C20", 20), ("C21", 21), ("C22", 22), ("C23", 23),
    ("C24", 24), ("C25", 25), ("C26", 26), ("C27", 27), ("C28", 28), ("C29", 29), ("C30", 30),
    ("C31", 31), ("C32", 32),
    ("D6", 6), ("D8", 8), ("D10", 10), ("D12", 12), ("D14", 14), ("D16", 16), ("D18", 18),
    ("D20", 20), ("D22", 22), ("D24", 24), ("D26", 26), ("D28", 28), ("D30", 30), ("D32", 32),
    ("S3", 6), ("S4", 24), ("S5", 120), ("S6", 720),
    ("A4", 12), ("A5", 60), ("A6", 360),
    ("Q8", 8),
    ("E2^2", 4), ("E2^3", 8), ("E3^2", 9),
    ("sdp(5,4,2)", 20), ("sdp(7,3,2)", 21), ("sdp(9,3,4)", 27),
    ("C2 x C3", 6), ("C2 x C4", 8), ("C2 x C6", 12), ("C2 x S3", 12), ("C3 x S3", 18),
    ("C4 x C4", 16), ("C2 x D8", 16), ("C2 x Q8", 16), ("C2 x A4", 24), ("S3 x S3", 36),
    ("C2 x S4", 48), ("C2 x A5", 120),
    ("Hol(C2)", 2), ("Hol(C3)", 6), ("Hol(C5)", 20), ("Hol(C7)", 42), ("Hol(C11)", 110), ("Hol(C13)", 156),
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
}

/// Names of the catalog groups of order at most `max_order`.
pub fn catalog_names(max_order: usize) -> Vec<&'static str> {
    let bound = max_order.min(Limits::current().max_order);
    ENTRIES
        .iter()
        .filter(|&&(_, n)| n <= bound)
        .map(|&(s, _)| s)
        .collect()
}

/// The catalog groups of order at most `max_order`, in a fixed order.
pub fn catalog(max_order: usize) -> Vec<CatalogEntry> {
    catalog_names(max_order)
        .par_iter()
        .map(|&name| CatalogEntry {
            name: name.to_string(),
            group: build(name),
        })
        .collect()
}

pub(crate) fn build(spec: &str) -> FiniteGroup {
    let ast = parse(spec).expect("catalog spec parses");
    evaluate(&ast).unwrap_or_else(|e| panic!("catalog group {spec}: {e}"))
}
