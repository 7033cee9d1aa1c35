//! Serialization as ranks plus a sorted cover list.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::RankedPoset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub ranks: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&RankedPoset> for PosetJson {
    fn from(p: &RankedPoset) -> Self {
        Self { ranks: p.ranks().to_vec(), covers: p.covers(), labels: None }
    }
}

impl TryFrom<&PosetJson> for RankedPoset {
    type Error = Error;
    fn try_from(j: &PosetJson) -> Result<Self> {
        if let Some(labels) = &j.labels {
            if labels.len() != j.ranks.len() {
                return Err(Error::InvalidPoset("one label per element expected".into()));
            }
        }
        RankedPoset::new(j.ranks.clone(), &j.covers)
    }
}

impl RankedPoset {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PosetJson::from(self)).expect("poset serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: PosetJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        RankedPoset::try_from(&j)
    }
}

#[cfg(test)]
mod tests {
    use crate::poset::{butterfly, RankedPoset};

    #[test]
    fn round_trip() {
        let p = butterfly(3);
        let s = p.to_json();
        assert_eq!(RankedPoset::from_json(&s).unwrap(), p);
        assert!(s.starts_with("{\"ranks\":[0,1,1,2,2,3]"));
    }
}
