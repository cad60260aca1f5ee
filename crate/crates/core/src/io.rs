//! JSON documents for complexes and subdivision maps.
//!
//! A complex is `{"labels": [..], "facets": [[..], ..]}`; `labels` may be
//! omitted, in which case vertices are numbered by first appearance. A
//! subdivision is `{"base": .., "total": .., "carrier": {"a b": ["x", "y"]}}`
//! keyed by the sorted member names of each nonempty total face, joined by
//! single spaces. The empty face is always carried to itself and may be
//! left out.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::{Face, DEFAULT_GROUND_SET_LIMIT};
use crate::subdivision::SubdivisionMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexDoc {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexDoc {
            labels: Some(k.labels().to_vec()),
            facets: k.facets().iter().map(|f| k.sorted_names(*f)).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        self.to_complex_with_limit(DEFAULT_GROUND_SET_LIMIT)
    }

    pub fn to_complex_with_limit(&self, limit: usize) -> Result<SimplicialComplex> {
        let labels = match &self.labels {
            Some(l) => l.clone(),
            None => {
                let mut seen = HashSet::new();
                self.facets
                    .iter()
                    .flatten()
                    .filter(|v| seen.insert(v.as_str()))
                    .cloned()
                    .collect()
            }
        };
        SimplicialComplex::from_facets_with_limit(&labels, &self.facets, limit)
    }
}

/// Key of a face in a carrier table.
pub fn face_key(k: &SimplicialComplex, f: Face) -> String {
    k.sorted_names(f).join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionDoc {
    pub base: ComplexDoc,
    pub total: ComplexDoc,
    pub carrier: BTreeMap<String, Vec<String>>,
}

impl SubdivisionDoc {
    pub fn from_map(s: &SubdivisionMap) -> Self {
        let carrier = s
            .total()
            .faces()
            .iter()
            .zip(s.carriers())
            .filter(|(e, _)| !e.is_empty())
            .map(|(e, c)| (face_key(s.total(), *e), s.base().sorted_names(*c)))
            .collect();
        SubdivisionDoc {
            base: ComplexDoc::from_complex(s.base()),
            total: ComplexDoc::from_complex(s.total()),
            carrier,
        }
    }

    pub fn to_map(&self) -> Result<SubdivisionMap> {
        self.to_map_with_limit(DEFAULT_GROUND_SET_LIMIT)
    }

    /// Rebuilds and validates the carrier map (monotone, dimension-preserving
    /// and surjective); homology is not checked here.
    pub fn to_map_with_limit(&self, limit: usize) -> Result<SubdivisionMap> {
        let total = self.total.to_complex_with_limit(limit)?;
        let base = self.base.to_complex_with_limit(limit)?;
        let mut table: BTreeMap<Face, Face> = BTreeMap::new();
        for (key, carrier) in &self.carrier {
            let names: Vec<&str> = key.split_whitespace().collect();
            let e = total.face_by_names(&names)?;
            if !total.contains(e) {
                return Err(Error::NotAFace(total.names(e)));
            }
            let c = base.face_by_names(carrier)?;
            if table.insert(e, c).is_some() {
                return Err(Error::MalformedDocument(format!("carrier of `{key}` given twice")));
            }
        }
        let mut carriers = Vec::with_capacity(total.num_faces());
        for &e in total.faces() {
            if e.is_empty() {
                carriers.push(table.get(&e).copied().unwrap_or(Face::EMPTY));
                continue;
            }
            let c = table
                .get(&e)
                .ok_or_else(|| Error::MissingCarrier(total.sorted_names(e)))?;
            carriers.push(*c);
        }
        SubdivisionMap::from_carriers(total, base, carriers)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    parse::<ComplexDoc>(text)?.to_complex()
}

pub fn parse_subdivision(text: &str) -> Result<SubdivisionMap> {
    parse::<SubdivisionDoc>(text)?.to_map()
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    serde_json::to_string_pretty(&ComplexDoc::from_complex(k)).expect("plain data serializes")
}

pub fn subdivision_to_json(s: &SubdivisionMap) -> String {
    serde_json::to_string_pretty(&SubdivisionDoc::from_map(s)).expect("plain data serializes")
}
