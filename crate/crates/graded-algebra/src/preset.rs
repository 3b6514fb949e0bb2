use crate::error::{AlgebraError, Result};
use crate::presentation::AlgebraPresentation;

const PRESETS: &[(&str, &str)] = &[
    ("BGm", include_str!("../presets/BGm.toml")),
    ("Bmu", include_str!("../presets/Bmu.toml")),
    ("MbarEll", include_str!("../presets/MbarEll.toml")),
    ("MEll", include_str!("../presets/MEll.toml")),
    ("MbarEll_I", include_str!("../presets/MbarEll_I.toml")),
    ("BGm_I", include_str!("../presets/BGm_I.toml")),
    ("ChowBGm", include_str!("../presets/ChowBGm.toml")),
    ("ChowMbarEll", include_str!("../presets/ChowMbarEll.toml")),
    ("ChowMEll", include_str!("../presets/ChowMEll.toml")),
];

pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}

/// A built-in presentation. `Bmu(2n)` is spelled `Bmu(4)` etc.; `bmu(n)`
/// takes n directly.
pub fn preset(name: &str) -> Result<AlgebraPresentation> {
    if let Some(arg) = name.strip_prefix("Bmu(").and_then(|s| s.strip_suffix(')')) {
        let m: u32 = arg.trim().parse().map_err(|_| AlgebraError::UnknownPreset(name.into()))?;
        if m == 0 || m % 2 != 0 {
            return Err(AlgebraError::UnknownPreset(format!("{name}: the order must be even and positive")));
        }
        return bmu(m / 2);
    }
    let (_, text) = PRESETS
        .iter()
        .find(|(n, _)| *n == name && *n != "Bmu")
        .ok_or_else(|| AlgebraError::UnknownPreset(name.into()))?;
    AlgebraPresentation::parse_toml(text)
}

pub fn bmu(n: u32) -> Result<AlgebraPresentation> {
    if n == 0 {
        return Err(AlgebraError::UnknownPreset("Bmu(0)".into()));
    }
    let text = PRESETS.iter().find(|(p, _)| *p == "Bmu").unwrap().1;
    AlgebraPresentation::parse_toml(&text.replace("{2n}", &(2 * n).to_string()).replace("{n}", &n.to_string()))
}
