use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CfkError, Generator, KnotComplex};

/// On-disk JSON form of a [`KnotComplex`].
///
/// ```json
/// {
///   "name": "trefoil",
///   "generators": [{"name": "a", "alexander": 1, "maslov": 0}, ...],
///   "differential": [{"from": "b", "to": "a", "u_power": 1}, ...],
///   "involution": {"a": "c", "b": "b", "c": "a"}
/// }
/// ```
///
/// `involution` may be omitted. Unknown keys are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub name: String,
    pub generators: Vec<GeneratorEntry>,
    pub differential: Vec<DifferentialEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub involution: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    pub alexander: i32,
    pub maslov: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DifferentialEntry {
    pub from: String,
    pub to: String,
    pub u_power: u32,
}

impl From<&KnotComplex> for ComplexFile {
    fn from(c: &KnotComplex) -> Self {
        let name = |i: usize| c.generators()[i].name.clone();
        ComplexFile {
            name: c.name().to_string(),
            generators: c
                .generators()
                .iter()
                .map(|g| GeneratorEntry {
                    name: g.name.clone(),
                    alexander: g.alexander,
                    maslov: g.maslov,
                })
                .collect(),
            differential: c
                .arrows()
                .iter()
                .map(|a| DifferentialEntry {
                    from: name(a.from),
                    to: name(a.to),
                    u_power: a.u_power,
                })
                .collect(),
            involution: c.involution().map(|perm| {
                perm.iter()
                    .enumerate()
                    .map(|(i, &j)| (name(i), name(j)))
                    .collect()
            }),
        }
    }
}

impl TryFrom<ComplexFile> for KnotComplex {
    type Error = CfkError;

    fn try_from(f: ComplexFile) -> Result<Self, CfkError> {
        let generators = f
            .generators
            .into_iter()
            .map(|g| Generator::new(g.name, g.alexander, g.maslov))
            .collect();
        let arrows: Vec<_> = f
            .differential
            .iter()
            .map(|d| (d.from.as_str(), d.to.as_str(), d.u_power))
            .collect();
        let involution: Option<Vec<_>> = f
            .involution
            .as_ref()
            .map(|m| m.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect());
        KnotComplex::from_labels(f.name, generators, &arrows, involution.as_deref())
    }
}

impl KnotComplex {
    /// Parses the JSON form. Structural validity is not checked here.
    pub fn from_json(text: &str) -> Result<Self, CfkError> {
        let file: ComplexFile =
            serde_json::from_str(text).map_err(|e| CfkError::Format(e.to_string()))?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ComplexFile::from(self)).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{box_complex, staircase};
    use super::*;

    #[test]
    fn round_trip() {
        for c in [staircase(&[1, 2, 2, 1]).unwrap(), box_complex(2, 1)] {
            let back = KnotComplex::from_json(&c.to_json()).unwrap();
            assert_eq!(back, c);
        }
    }

    #[test]
    fn rejects_unknown_keys() {
        let text = r#"{"name":"u","generators":[{"name":"x","alexander":0,"maslov":0,"extra":1}],"differential":[]}"#;
        assert!(matches!(
            KnotComplex::from_json(text),
            Err(CfkError::Format(_))
        ));
        let text = r#"{"name":"u","generators":[],"differential":[],"comment":""}"#;
        assert!(matches!(
            KnotComplex::from_json(text),
            Err(CfkError::Format(_))
        ));
    }

    #[test]
    fn rejects_unresolved_labels() {
        let text = r#"{"name":"u","generators":[{"name":"x","alexander":0,"maslov":0}],
            "differential":[{"from":"x","to":"y","u_power":0}]}"#;
        assert_eq!(
            KnotComplex::from_json(text),
            Err(CfkError::UnknownGenerator("y".into()))
        );
    }

    #[test]
    fn rejects_negative_power() {
        let text = r#"{"name":"u","generators":[{"name":"x","alexander":0,"maslov":0}],
            "differential":[{"from":"x","to":"x","u_power":-1}]}"#;
        assert!(matches!(
            KnotComplex::from_json(text),
            Err(CfkError::Format(_))
        ));
    }
}
