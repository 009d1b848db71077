//! Machine-readable report structures. All rationals are serialised as
//! `p/q` strings so no precision is lost; every section is a fixed struct,
//! keeping the JSON schema stable for golden-file tests.

use serde::{Deserialize, Serialize};

use bhcr_core::atoms::{Atom, AtomicDecomposition};
use bhcr_core::rational;
use bhcr_core::symmetry::{DiagonalSymmetry, SymmetryGroup};
use bhcr_core::weights::{degrees_of_monomials, WeightSystem};
use bhcr_core::{atomic_decomposition, DelsartePolynomial};

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct AnalysisReport {
    pub input: InputSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub groups: Option<GroupsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transpose: Option<Box<TransposeSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub borcea_voisin: Option<BorceaVoisinSection>,
    pub verdicts: Verdicts,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Default)]
pub struct InputSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surface: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub variables: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub monomials: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub exponents: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct WeightsSection {
    pub charges: Vec<String>,
    pub weights: Vec<i64>,
    pub degree: i64,
    pub monomial_degrees: Vec<i64>,
    pub normalized: bool,
    pub calabi_yau: bool,
    pub decomposition: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct GroupsSection {
    pub aut_order: u64,
    pub sl_order: u64,
    /// Absent when the projective quotient is undefined (non-Calabi-Yau).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sl_tilde_order: Option<u64>,
    pub j_phases: Vec<String>,
    pub j_order: i64,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub sl_tilde_elements: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupSection>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SubgroupSection {
    pub generators: Vec<Vec<String>>,
    pub order: u64,
    pub elements: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TransposeSection {
    pub potential: String,
    pub weights: WeightsSection,
    pub groups: GroupsSection,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct BorceaVoisinSection {
    pub product: String,
    pub product_weights: Vec<i64>,
    pub product_degree: i64,
    pub transposed_product: String,
    pub transposed_weights: Vec<i64>,
    pub transposed_degree: i64,
    pub curve_group: Vec<Vec<String>>,
    pub surface_group: Vec<Vec<String>>,
    pub product_group: Vec<Vec<String>>,
    pub transposed_group: Vec<Vec<String>>,
    pub transposed_group_split: Vec<SplitPair>,
    pub splitting_identity: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triple: Option<TripleSection>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct SplitPair {
    pub curve: Vec<String>,
    pub surface: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TripleSection {
    pub r: i64,
    pub a: i64,
    pub delta: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rational_count: Option<i64>,
    pub h11: i64,
    pub h21: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror: Option<MirrorSection>,
    pub availability: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct MirrorSection {
    pub r: i64,
    pub a: i64,
    pub delta: u8,
    pub h11: i64,
    pub h21: i64,
    pub hodge_swap: bool,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Default)]
pub struct Verdicts {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub calabi_yau_required: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting_identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hodge_swap: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows_verified: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TableReport {
    pub rows: Vec<TableRowReport>,
    pub verdicts: Verdicts,
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct TableRowReport {
    pub index: usize,
    pub weights: Vec<i64>,
    pub potential: String,
    pub sl_order: u64,
    pub sl_tilde_order: u64,
    pub mirror_index: usize,
    pub verified: bool,
}

pub fn rat_strings(phases: &[bhcr_core::rational::Rat]) -> Vec<String> {
    phases.iter().map(|r| rational::to_string(*r)).collect()
}

pub fn element_strings(e: &DiagonalSymmetry) -> Vec<String> {
    rat_strings(e.phases())
}

pub fn group_elements(g: &SymmetryGroup) -> Vec<Vec<String>> {
    g.elements().iter().map(element_strings).collect()
}

/// Canonically ordered monomial texts and exponent rows.
pub fn canonical_monomials(p: &DelsartePolynomial) -> (Vec<String>, Vec<Vec<u64>>) {
    let rows = p.canonical_exponents();
    let texts = rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(j, &e)| {
                    if e == 1 {
                        p.var_names()[j].clone()
                    } else {
                        format!("{}^{}", p.var_names()[j], e)
                    }
                })
                .collect::<Vec<_>>()
                .join("*")
        })
        .collect();
    (texts, rows)
}

pub fn weights_section(p: &DelsartePolynomial, ws: &WeightSystem) -> WeightsSection {
    WeightsSection {
        charges: rat_strings(ws.charges()),
        weights: ws.weights().to_vec(),
        degree: ws.degree(),
        monomial_degrees: degrees_of_monomials(p, ws),
        normalized: ws.is_normalized(),
        calabi_yau: ws.is_calabi_yau(),
        decomposition: decomposition_strings(p),
    }
}

pub fn decomposition_strings(p: &DelsartePolynomial) -> Vec<String> {
    match atomic_decomposition(p) {
        AtomicDecomposition::Undetermined => vec!["undetermined".to_string()],
        AtomicDecomposition::Blocks(blocks) => blocks
            .iter()
            .map(|block| match block {
                Atom::Fermat { variable, exponent } => {
                    format!("fermat({}^{})", p.var_names()[*variable], exponent)
                }
                Atom::Chain {
                    variables,
                    exponents,
                } => format!(
                    "chain({})",
                    variables
                        .iter()
                        .zip(exponents)
                        .map(|(v, e)| format!("{}^{}", p.var_names()[*v], e))
                        .collect::<Vec<_>>()
                        .join(" -> ")
                ),
                Atom::Loop {
                    variables,
                    exponents,
                } => format!(
                    "loop({})",
                    variables
                        .iter()
                        .zip(exponents)
                        .map(|(v, e)| format!("{}^{}", p.var_names()[*v], e))
                        .collect::<Vec<_>>()
                        .join(" -> ")
                ),
            })
            .collect(),
    }
}
