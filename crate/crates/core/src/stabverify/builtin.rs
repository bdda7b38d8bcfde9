use super::StabilizerCode;

const REPETITION_3: &[&str] = &["ZZI", "IZZ"];

const STEANE_7: &[&str] = &["IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"];

// Z-pairs inside each trio catch bit flips; the two X6 checks compare trio
// phases.
const SHOR_9: &[&str] = &[
    "ZZIIIIIII",
    "IZZIIIIII",
    "IIIZZIIII",
    "IIIIZZIII",
    "IIIIIIZZI",
    "IIIIIIIZZ",
    "XXXXXXIII",
    "IIIXXXXXX",
];

// Stabilizer part only; the gauge operators are not modeled.
const BACON_SHOR_9: &[&str] = &["XXXXXXIII", "IIIXXXXXX", "ZZIZZIZZI", "IZZIZZIZZ"];

// 3x3 data grid, qubit r*3 + c. Bulk plaquettes alternate X/Z; X-type
// weight-2 checks sit on the top and bottom edges, Z-type on the sides.
const ROTATED_SURFACE_D3: &[&str] = &[
    "XXIXXIIII",
    "IIIIXXIXX",
    "IXXIIIIII",
    "IIIIIIXXI",
    "IZZIZZIII",
    "IIIZZIZZI",
    "ZIIZIIIII",
    "IIIIIZIIZ",
];

pub const BUILTIN_NAMES: [&str; 5] = ["repetition-3", "steane-7", "shor-9", "bacon-shor-9", "rotated-surface-d3"];

fn generators(name: &str) -> Option<&'static [&'static str]> {
    Some(match name {
        "repetition-3" => REPETITION_3,
        "steane-7" => STEANE_7,
        "shor-9" => SHOR_9,
        "bacon-shor-9" => BACON_SHOR_9,
        "rotated-surface-d3" => ROTATED_SURFACE_D3,
        _ => return None,
    })
}

/// Looks up one of the built-in small codes by name.
pub fn builtin_code(name: &str) -> Option<StabilizerCode> {
    let gens = generators(name)?;
    Some(StabilizerCode::from_strings(name, gens).expect("built-in generators are valid"))
}

/// All built-in codes, in [`BUILTIN_NAMES`] order.
pub fn builtin_codes() -> Vec<StabilizerCode> {
    BUILTIN_NAMES
        .iter()
        .map(|n| builtin_code(n).expect("listed"))
        .collect()
}
