//! Character tables with exact cyclotomic entries, their validation, and
//! the Frobenius-Schur screening used to rule out symplectic
//! representations of a given degree.
//!
//! Tables are data files, not code: each lists conjugacy classes (name,
//! size, element order, class of squares) and irreducible characters whose
//! values are sums of roots of unity at a fixed conductor. Validation
//! checks the full orthogonality contract, so a corrupted table cannot pass
//! silently.

use crate::cyclo::{CycloCtx, CycloNum};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawClass {
    name: String,
    size: u64,
    order: u32,
    square_class: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawIrrep {
    label: String,
    degree: u64,
    /// One value per class, each a list of [exponent, multiplicity] pairs
    /// meaning sum of mult * zeta^exp at the table's conductor.
    values: Vec<Vec<(u32, i64)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RawTable {
    group: String,
    order: u64,
    conductor: u32,
    classes: Vec<RawClass>,
    irreps: Vec<RawIrrep>,
}

#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub order: u32,
    pub square_class: usize,
}

#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: String,
    pub degree: u64,
    pub values: Vec<CycloNum>,
}

pub struct CharTable {
    pub group: String,
    pub order: u64,
    pub conductor: u32,
    pub classes: Vec<ClassInfo>,
    pub irreps: Vec<Irrep>,
    ctx: CycloCtx,
}

pub const A7_TABLE_JSON: &str = include_str!("../data/a7.json");
pub const TWO_A7_TABLE_JSON: &str = include_str!("../data/2a7.json");

/// Data-file name for a group key accepted by the command line.
pub fn table_file_name(group: &str) -> Result<&'static str> {
    match group {
        "a7" => Ok("a7.json"),
        "2a7" => Ok("2a7.json"),
        other => Err(Error::Input(format!(
            "unknown group {other:?}; expected \"a7\" or \"2a7\""
        ))),
    }
}

fn embedded_json(group: &str) -> Result<&'static str> {
    match group {
        "a7" => Ok(A7_TABLE_JSON),
        "2a7" => Ok(TWO_A7_TABLE_JSON),
        other => Err(Error::Input(format!(
            "unknown group {other:?}; expected \"a7\" or \"2a7\""
        ))),
    }
}

/// Loads a table for "a7" or "2a7". An explicit directory (or the
/// QUARTIC_FORGE_DATA_DIR environment variable) overrides the embedded
/// copies and must contain the file; without one the embedded data is used.
pub fn load_table(group: &str, data_dir: Option<&Path>) -> Result<CharTable> {
    let file = table_file_name(group)?;
    let env_dir = std::env::var_os("QUARTIC_FORGE_DATA_DIR").map(std::path::PathBuf::from);
    let dir = data_dir.map(Path::to_path_buf).or(env_dir);
    let text = match dir {
        Some(d) => std::fs::read_to_string(d.join(file))?,
        None => embedded_json(group)?.to_string(),
    };
    CharTable::from_json_str(&text)
}

impl CharTable {
    /// Parses and structurally checks a table. Numerical consistency is
    /// [`CharTable::validate`]'s job.
    pub fn from_json_str(text: &str) -> Result<CharTable> {
        let raw: RawTable = serde_json::from_str(text)?;
        let ctx = CycloCtx::new(raw.conductor)?;
        let index: BTreeMap<&str, usize> = raw
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name.as_str(), i))
            .collect();
        if index.len() != raw.classes.len() {
            return Err(Error::Data("duplicate class names".into()));
        }
        let classes = raw
            .classes
            .iter()
            .map(|c| {
                let square_class = *index.get(c.square_class.as_str()).ok_or_else(|| {
                    Error::Data(format!(
                        "class {} squares to unknown class {}",
                        c.name, c.square_class
                    ))
                })?;
                Ok(ClassInfo {
                    name: c.name.clone(),
                    size: c.size,
                    order: c.order,
                    square_class,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let irreps = raw
            .irreps
            .iter()
            .map(|r| {
                if r.values.len() != classes.len() {
                    return Err(Error::Data(format!(
                        "character {} has {} values for {} classes",
                        r.label,
                        r.values.len(),
                        classes.len()
                    )));
                }
                Ok(Irrep {
                    label: r.label.clone(),
                    degree: r.degree,
                    values: r.values.iter().map(|v| CycloNum::from_pairs(v)).collect(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharTable {
            group: raw.group,
            order: raw.order,
            conductor: raw.conductor,
            classes,
            irreps,
            ctx,
        })
    }

    pub fn ctx(&self) -> &CycloCtx {
        &self.ctx
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    fn identity_class(&self) -> Result<usize> {
        let ids: Vec<usize> = self
            .classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.order == 1)
            .map(|(i, _)| i)
            .collect();
        match ids.as_slice() {
            [i] => Ok(*i),
            _ => Err(Error::Validation(
                "table must have exactly one class of order 1".into(),
            )),
        }
    }

    /// Full consistency check: class sizes, degree and value sanity, the
    /// square map, both orthogonality relations, and the involution-count
    /// identity for the Frobenius-Schur indicators.
    pub fn validate(&self) -> Result<()> {
        let order = self.order as i64;
        if self.irreps.len() != self.classes.len() {
            return Err(Error::Validation(format!(
                "{} characters for {} classes",
                self.irreps.len(),
                self.classes.len()
            )));
        }

        let identity = self.identity_class()?;
        if self.classes[identity].size != 1 {
            return Err(Error::Validation("identity class must have size 1".into()));
        }
        let mut size_sum = 0u64;
        for c in &self.classes {
            if c.size == 0 || !self.order.is_multiple_of(c.size) {
                return Err(Error::Validation(format!(
                    "size of class {} does not divide the group order",
                    c.name
                )));
            }
            if c.order == 0 {
                return Err(Error::Validation(format!(
                    "class {} has element order 0",
                    c.name
                )));
            }
            size_sum += c.size;
            // order of g^2 = order(g) / gcd(order(g), 2)
            let expected = if c.order % 2 == 0 {
                c.order / 2
            } else {
                c.order
            };
            let got = self.classes[c.square_class].order;
            if got != expected {
                return Err(Error::Validation(format!(
                    "class {} of order {} squares into a class of order {got}, expected {expected}",
                    c.name, c.order
                )));
            }
        }
        if size_sum != self.order {
            return Err(Error::Validation(format!(
                "class sizes sum to {size_sum}, group order is {}",
                self.order
            )));
        }

        let mut degree_sq = 0u64;
        for irr in &self.irreps {
            if irr.degree == 0 {
                return Err(Error::Validation(format!(
                    "character {} has degree 0",
                    irr.label
                )));
            }
            degree_sq += irr.degree * irr.degree;
            if !self.ctx.eq_int(&irr.values[identity], irr.degree as i64) {
                return Err(Error::Validation(format!(
                    "character {} does not take its degree at the identity",
                    irr.label
                )));
            }
        }
        if degree_sq != self.order {
            return Err(Error::Validation(format!(
                "degrees squared sum to {degree_sq}, group order is {}",
                self.order
            )));
        }

        // First orthogonality: rows have norm |G| and are orthogonal.
        for (i, a) in self.irreps.iter().enumerate() {
            for (j, b) in self.irreps.iter().enumerate().skip(i) {
                let mut acc = CycloNum::zero();
                for (c, class) in self.classes.iter().enumerate() {
                    let prod = self.ctx.mul(&a.values[c], &self.ctx.conj(&b.values[c]));
                    acc = self
                        .ctx
                        .add(&acc, &self.ctx.scale(&prod, class.size as i64));
                }
                let expected = if i == j { order } else { 0 };
                if !self.ctx.eq_int(&acc, expected) {
                    return Err(Error::Validation(format!(
                        "row orthogonality fails for {} and {}",
                        a.label, b.label
                    )));
                }
            }
        }

        // Second orthogonality: columns are orthogonal with norm the
        // centralizer order.
        for c in 0..self.classes.len() {
            for d in c..self.classes.len() {
                let mut acc = CycloNum::zero();
                for irr in &self.irreps {
                    let prod = self.ctx.mul(&irr.values[c], &self.ctx.conj(&irr.values[d]));
                    acc = self.ctx.add(&acc, &prod);
                }
                let expected = if c == d {
                    (self.order / self.classes[c].size) as i64
                } else {
                    0
                };
                if !self.ctx.eq_int(&acc, expected) {
                    return Err(Error::Validation(format!(
                        "column orthogonality fails for {} and {}",
                        self.classes[c].name, self.classes[d].name
                    )));
                }
            }
        }

        // Indicators are defined and the involution-count identity holds:
        // sum of indicator * degree = #{g : g^2 = 1}.
        let mut indicator_sum = 0i64;
        for (i, irr) in self.irreps.iter().enumerate() {
            indicator_sum += self.frobenius_schur(i)? * irr.degree as i64;
        }
        let square_roots_of_identity: u64 = self
            .classes
            .iter()
            .filter(|c| c.order <= 2)
            .map(|c| c.size)
            .sum();
        if indicator_sum != square_roots_of_identity as i64 {
            return Err(Error::Validation(format!(
                "indicator identity gives {indicator_sum}, expected {square_roots_of_identity}"
            )));
        }
        Ok(())
    }

    /// Frobenius-Schur indicator of the i-th character: the averaged value
    /// of the character on squares. Must come out -1, 0 or +1.
    pub fn frobenius_schur(&self, irrep: usize) -> Result<i64> {
        let irr = &self.irreps[irrep];
        let mut acc = CycloNum::zero();
        for class in &self.classes {
            let v = &irr.values[class.square_class];
            acc = self.ctx.add(&acc, &self.ctx.scale(v, class.size as i64));
        }
        let total = self.ctx.as_int(&acc).ok_or_else(|| {
            Error::Validation(format!(
                "indicator of {} is not a rational integer",
                irr.label
            ))
        })?;
        let order = self.order as i64;
        if total % order != 0 {
            return Err(Error::Validation(format!(
                "indicator of {} is not an integer multiple of the group order",
                irr.label
            )));
        }
        let nu = total / order;
        if !(-1..=1).contains(&nu) {
            return Err(Error::Validation(format!(
                "indicator of {} is {nu}, outside -1..=1",
                irr.label
            )));
        }
        Ok(nu)
    }

    /// Labels of irreducible characters with the given degree and
    /// Frobenius-Schur indicator -1 (the quaternionic/symplectic ones).
    pub fn symplectic_irreps_of_degree(&self, degree: u64) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for (i, irr) in self.irreps.iter().enumerate() {
            if irr.degree == degree && self.frobenius_schur(i)? == -1 {
                out.push(irr.label.clone());
            }
        }
        Ok(out)
    }

    /// All indicators by label, in table order.
    pub fn indicators(&self) -> Result<Vec<(String, i64)>> {
        (0..self.irreps.len())
            .map(|i| Ok((self.irreps[i].label.clone(), self.frobenius_schur(i)?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a7() -> CharTable {
        CharTable::from_json_str(A7_TABLE_JSON).unwrap()
    }

    fn two_a7() -> CharTable {
        CharTable::from_json_str(TWO_A7_TABLE_JSON).unwrap()
    }

    #[test]
    fn both_embedded_tables_validate() {
        let t = a7();
        assert_eq!(t.order, 2520);
        assert_eq!(t.conductor, 420);
        assert_eq!(t.classes.len(), 9);
        t.validate().unwrap();

        let d = two_a7();
        assert_eq!(d.order, 5040);
        assert_eq!(d.conductor, 840);
        assert_eq!(d.classes.len(), 16);
        d.validate().unwrap();
    }

    #[test]
    fn frozen_indicators() {
        let t = a7();
        let ind: BTreeMap<String, i64> = t.indicators().unwrap().into_iter().collect();
        assert_eq!(ind["chi_1"], 1);
        assert_eq!(ind["chi_6"], 1);
        assert_eq!(ind["chi_10a"], 0);
        assert_eq!(ind["chi_10b"], 0);
        assert_eq!(ind["chi_14a"], 1);
        assert_eq!(ind["chi_14b"], 1);
        assert_eq!(ind["chi_15"], 1);
        assert_eq!(ind["chi_21"], 1);
        assert_eq!(ind["chi_35"], 1);

        let d = two_a7();
        let ind: BTreeMap<String, i64> = d.indicators().unwrap().into_iter().collect();
        assert_eq!(ind["chi_4a"], 0);
        assert_eq!(ind["chi_4b"], 0);
        assert_eq!(ind["chi_14c"], -1);
        assert_eq!(ind["chi_14d"], -1);
        assert_eq!(ind["chi_20a"], -1);
        assert_eq!(ind["chi_20b"], -1);
        assert_eq!(ind["chi_36"], -1);
        // Inflated characters keep their indicators.
        assert_eq!(ind["chi_6"], 1);
        assert_eq!(ind["chi_10a"], 0);
    }

    #[test]
    fn no_symplectic_degree_six_in_either_group() {
        assert!(a7().symplectic_irreps_of_degree(6).unwrap().is_empty());
        assert!(two_a7().symplectic_irreps_of_degree(6).unwrap().is_empty());
        // Positive controls: the quaternionic characters are found.
        assert_eq!(
            two_a7().symplectic_irreps_of_degree(36).unwrap(),
            vec!["chi_36"]
        );
        assert_eq!(
            two_a7().symplectic_irreps_of_degree(20).unwrap(),
            vec!["chi_20a", "chi_20b"]
        );
        // Degree 4 exists but with indicator 0, not -1.
        assert!(two_a7().symplectic_irreps_of_degree(4).unwrap().is_empty());
    }

    #[test]
    fn hand_planted_corruptions_are_caught() {
        let mut v: serde_json::Value = serde_json::from_str(A7_TABLE_JSON).unwrap();
        v["classes"][1]["size"] = serde_json::json!(106);
        let t = CharTable::from_json_str(&v.to_string()).unwrap();
        assert!(t.validate().is_err());

        let mut v: serde_json::Value = serde_json::from_str(A7_TABLE_JSON).unwrap();
        v["irreps"][1]["degree"] = serde_json::json!(7);
        let t = CharTable::from_json_str(&v.to_string()).unwrap();
        assert!(t.validate().is_err());

        // Retarget a square class to one of the wrong order.
        let mut v: serde_json::Value = serde_json::from_str(A7_TABLE_JSON).unwrap();
        v["classes"][4]["square_class"] = serde_json::json!("3a");
        let t = CharTable::from_json_str(&v.to_string()).unwrap();
        assert!(t.validate().is_err());

        // Bump a single character value term.
        let mut v: serde_json::Value = serde_json::from_str(TWO_A7_TABLE_JSON).unwrap();
        v["irreps"][10]["values"][2] = serde_json::json!([[0, 1]]);
        let t = CharTable::from_json_str(&v.to_string()).unwrap();
        assert!(t.validate().is_err());
    }

    #[test]
    fn structural_errors_are_rejected_at_parse_time() {
        let mut v: serde_json::Value = serde_json::from_str(A7_TABLE_JSON).unwrap();
        v["classes"][0]["square_class"] = serde_json::json!("9z");
        assert!(CharTable::from_json_str(&v.to_string()).is_err());

        let mut v: serde_json::Value = serde_json::from_str(A7_TABLE_JSON).unwrap();
        v["irreps"][0]["values"] = serde_json::json!([[[0, 1]]]);
        assert!(CharTable::from_json_str(&v.to_string()).is_err());
    }

    #[test]
    fn data_dir_override() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("a7.json"), A7_TABLE_JSON).unwrap();
        let t = load_table("a7", Some(dir.path())).unwrap();
        t.validate().unwrap();
        // Explicit directory without the file is an error, not a fallback.
        assert!(load_table("2a7", Some(dir.path())).is_err());
        assert!(load_table("b8", None).is_err());
    }
}
