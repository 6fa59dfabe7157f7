use crate::{Scenario, XpError};

const SOURCES: [(&str, &str); 9] = [
    ("fig2", include_str!("../scenarios/fig2.toml")),
    ("fig3a", include_str!("../scenarios/fig3a.toml")),
    ("fig3b", include_str!("../scenarios/fig3b.toml")),
    ("fig5", include_str!("../scenarios/fig5.toml")),
    ("fig6", include_str!("../scenarios/fig6.toml")),
    ("fig7", include_str!("../scenarios/fig7.toml")),
    ("fig8", include_str!("../scenarios/fig8.toml")),
    ("fig9", include_str!("../scenarios/fig9.toml")),
    ("fig10", include_str!("../scenarios/fig10.toml")),
];

/// Built-in scenario names in listing order.
pub fn builtin_names() -> Vec<&'static str> {
    SOURCES.iter().map(|s| s.0).collect()
}

/// TOML text of a built-in scenario.
pub fn builtin_source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|s| s.0 == name).map(|s| s.1)
}

pub fn builtin(name: &str) -> Option<Scenario> {
    builtin_source(name).map(|text| {
        Scenario::from_toml_str(text, name).expect("built-in scenarios parse")
    })
}

/// `(name, "figure: description")` for every built-in.
pub fn list_scenarios() -> Vec<(String, String)> {
    SOURCES
        .iter()
        .map(|(name, _)| {
            let s = builtin(name).expect("built-in");
            (s.name.clone(), format!("[{}] {}", s.figure, s.description))
        })
        .collect()
}

/// A built-in name or a path to a scenario file.
pub fn load_scenario(spec: &str) -> Result<Scenario, XpError> {
    if let Some(s) = builtin(spec) {
        return Ok(s);
    }
    let text = std::fs::read_to_string(spec).map_err(|source| XpError::Io {
        path: spec.into(),
        source,
    })?;
    Scenario::from_toml_str(&text, spec)
}
