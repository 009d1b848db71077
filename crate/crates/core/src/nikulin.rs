//! Arithmetic of the lattice invariants (r, a, delta) of a K3 non-symplectic
//! involution, the fixed-locus and Hodge-number formulas of the associated
//! Calabi-Yau threefolds, the lattice mirror, and the catalog of families
//! with product models.
//!
//! For a triple outside {(10,8,0), (10,10,0)} the fixed locus of the
//! involution is a genus-g curve plus k rational curves with
//! 2g = 22 - r - a and 2k = r - a. The threefold built from the involution
//! has h11 = 5 + 3r - 2a and h21 = 65 - 3r - 2a, and when r + a <= 20 and
//! (r,a,delta) != (14,6,0) the mirror family is the one polarised by
//! (20 - r, a, delta), which swaps the two Hodge numbers.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Lattice invariants of a non-symplectic involution: rank of the invariant
/// lattice, length of its discriminant group, and the integrality bit of the
/// discriminant form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NikulinTriple {
    r: i64,
    a: i64,
    delta: u8,
}

impl NikulinTriple {
    /// Validate and build a triple.
    ///
    /// # Errors
    /// `OutOfRange` or `ParityViolation` for values no 2-elementary
    /// hyperbolic sublattice of the K3 lattice can have.
    pub fn new(r: i64, a: i64, delta: u8) -> Result<Self> {
        if !(1..=20).contains(&r) {
            return Err(Error::OutOfRange(format!(
                "rank r = {r} must lie in 1..=20"
            )));
        }
        if a < 0 || a > r || a > 22 - r {
            return Err(Error::OutOfRange(format!(
                "discriminant length a = {a} must satisfy 0 <= a <= min(r, 22 - r)"
            )));
        }
        if delta > 1 {
            return Err(Error::OutOfRange(format!("delta = {delta} must be 0 or 1")));
        }
        if (r - a) % 2 != 0 {
            return Err(Error::ParityViolation(format!(
                "r = {r} and a = {a} must have the same parity"
            )));
        }
        Ok(Self { r, a, delta })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn delta(&self) -> u8 {
        self.delta
    }

    /// Genus and rational-curve count of the involution's fixed locus.
    ///
    /// # Errors
    /// `ExceptionalTriple` for (10,8,0) and (10,10,0), where the fixed locus
    /// is not of the generic curve shape.
    pub fn fixed_locus(&self) -> Result<FixedLocus> {
        if (self.r, self.a, self.delta) == (10, 8, 0) || (self.r, self.a, self.delta) == (10, 10, 0)
        {
            return Err(Error::ExceptionalTriple {
                r: self.r,
                a: self.a,
                delta: self.delta,
            });
        }
        let two_g = 22 - self.r - self.a;
        let two_k = self.r - self.a;
        if two_g % 2 != 0 || two_k % 2 != 0 || two_g < 0 || two_k < 0 {
            return Err(Error::ParityViolation(format!(
                "fixed locus undefined for ({}, {}, {})",
                self.r, self.a, self.delta
            )));
        }
        Ok(FixedLocus {
            genus: two_g / 2,
            rational_count: two_k / 2,
        })
    }

    /// Hodge numbers (h11, h21) of the associated Calabi-Yau threefold.
    pub fn hodge_numbers(&self) -> (i64, i64) {
        (5 + 3 * self.r - 2 * self.a, 65 - 3 * self.r - 2 * self.a)
    }

    /// The mirror triple (20 - r, a, delta).
    ///
    /// # Errors
    /// `MirrorUndefined` when r + a > 20 or the triple is (14,6,0).
    pub fn lattice_mirror(&self) -> Result<NikulinTriple> {
        if self.r + self.a > 20 || (self.r, self.a, self.delta) == (14, 6, 0) || self.r == 20 {
            return Err(Error::MirrorUndefined {
                r: self.r,
                a: self.a,
                delta: self.delta,
            });
        }
        NikulinTriple::new(20 - self.r, self.a, self.delta)
    }

    /// True when (h11, h21) of this triple equal (h21, h11) of its mirror.
    pub fn hodge_swap_check(&self) -> Result<bool> {
        let mirror = self.lattice_mirror()?;
        let (h11, h21) = self.hodge_numbers();
        let (m11, m21) = mirror.hodge_numbers();
        Ok(h11 == m21 && h21 == m11)
    }
}

impl fmt::Display for NikulinTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.a, self.delta)
    }
}

/// Fixed locus of the involution: one genus-`genus` curve and
/// `rational_count` rational curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedLocus {
    pub genus: i64,
    pub rational_count: i64,
}

/// Recover (r, a) from a fixed locus.
///
/// # Errors
/// `OutOfRange` when no valid triple has this fixed locus.
pub fn triple_from_fixed_locus(genus: i64, rational_count: i64) -> Result<(i64, i64)> {
    if genus < 0 || rational_count < 0 || genus + rational_count > 11 {
        return Err(Error::OutOfRange(format!(
            "no triple has fixed locus (g, k) = ({genus}, {rational_count})"
        )));
    }
    let r = 11 - genus + rational_count;
    let a = 11 - genus - rational_count;
    if r < 1 {
        return Err(Error::OutOfRange(format!(
            "fixed locus (g, k) = ({genus}, {rational_count}) forces rank {r} < 1"
        )));
    }
    Ok((r, a))
}

/// Whether a product model is available for a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Availability {
    /// A Delsarte-type model exists and the product construction applies.
    Available,
    /// A Delsarte-type model exists but every split weight is divisible
    /// by 6, so the construction fails.
    NotAvailable,
    /// The catalog records no Delsarte-type model for this triple.
    Unknown,
}

impl fmt::Display for Availability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            Availability::Available => "available",
            Availability::NotAvailable => "not-available",
            Availability::Unknown => "unknown",
        };
        write!(f, "{text}")
    }
}

/// One catalog record.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub triple: NikulinTriple,
    pub mirror_eligible: bool,
    pub has_model: bool,
    pub bad: bool,
}

impl CatalogEntry {
    pub fn availability(&self) -> Availability {
        if self.bad {
            Availability::NotAvailable
        } else if self.has_model {
            Availability::Available
        } else {
            Availability::Unknown
        }
    }
}

const CATALOG_DATA: &str = include_str!("../data/nikulin_families.txt");

/// The shipped catalog of involution families.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_DATA).expect("embedded catalog is well-formed"))
}

/// Availability flag for a triple, by catalog lookup.
pub fn model_availability(triple: &NikulinTriple) -> Availability {
    catalog()
        .iter()
        .find(|e| e.triple == *triple)
        .map(|e| e.availability())
        .unwrap_or(Availability::Unknown)
}

fn parse_catalog(data: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    for (lineno, line) in data.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let parse_int = |field: Option<&str>| -> Result<i64> {
            field
                .and_then(|f| f.parse().ok())
                .ok_or_else(|| Error::Internal(format!("catalog line {}: bad record", lineno + 1)))
        };
        let r = parse_int(fields.next())?;
        let a = parse_int(fields.next())?;
        let delta = parse_int(fields.next())? as u8;
        let mut entry = CatalogEntry {
            triple: NikulinTriple::new(r, a, delta)?,
            mirror_eligible: false,
            has_model: false,
            bad: false,
        };
        for flag in fields {
            match flag {
                "mirror" => entry.mirror_eligible = true,
                "model" => entry.has_model = true,
                "bad" => entry.bad = true,
                other => {
                    return Err(Error::Internal(format!(
                        "catalog line {}: unknown flag `{other}`",
                        lineno + 1
                    )))
                }
            }
        }
        entries.push(entry);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(r: i64, a: i64, d: u8) -> NikulinTriple {
        NikulinTriple::new(r, a, d).unwrap()
    }

    #[test]
    fn fixed_locus_values() {
        let fl = triple(1, 1, 1).fixed_locus().unwrap();
        assert_eq!((fl.genus, fl.rational_count), (10, 0));
        let fl = triple(19, 1, 1).fixed_locus().unwrap();
        assert_eq!((fl.genus, fl.rational_count), (1, 9));
        let fl = triple(11, 11, 1).fixed_locus().unwrap();
        assert_eq!((fl.genus, fl.rational_count), (0, 0));
    }

    #[test]
    fn exceptional_triples_have_no_fixed_locus_data() {
        for (r, a) in [(10, 8), (10, 10)] {
            let err = triple(r, a, 0).fixed_locus().unwrap_err();
            assert!(matches!(err, Error::ExceptionalTriple { .. }));
            // with delta = 1 the formulas do apply
            assert!(triple(r, a, 1).fixed_locus().is_ok());
        }
    }

    #[test]
    fn fixed_locus_inversion() {
        assert_eq!(triple_from_fixed_locus(10, 0).unwrap(), (1, 1));
        assert_eq!(triple_from_fixed_locus(1, 9).unwrap(), (19, 1));
        // the boundary case forces rank zero
        assert!(matches!(
            triple_from_fixed_locus(11, 0),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            triple_from_fixed_locus(6, 6),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn round_trip_through_fixed_locus() {
        for entry in catalog() {
            let t = entry.triple;
            if let Ok(fl) = t.fixed_locus() {
                assert_eq!(
                    triple_from_fixed_locus(fl.genus, fl.rational_count).unwrap(),
                    (t.r(), t.a())
                );
            }
        }
    }

    #[test]
    fn hodge_numbers_closed_forms() {
        assert_eq!(triple(1, 1, 1).hodge_numbers(), (6, 60));
        assert_eq!(triple(19, 1, 1).hodge_numbers(), (60, 6));
        assert_eq!(triple(10, 10, 0).hodge_numbers(), (15, 15));
    }

    #[test]
    fn lattice_mirror_and_exclusions() {
        assert_eq!(triple(1, 1, 1).lattice_mirror().unwrap(), triple(19, 1, 1));
        assert_eq!(triple(10, 4, 0).lattice_mirror().unwrap(), triple(10, 4, 0));
        assert!(matches!(
            triple(14, 6, 0).lattice_mirror(),
            Err(Error::MirrorUndefined {
                r: 14,
                a: 6,
                delta: 0
            })
        ));
        // the delta = 1 companion is fine
        assert!(triple(14, 6, 1).lattice_mirror().is_ok());
        assert!(matches!(
            triple(19, 3, 1).lattice_mirror(),
            Err(Error::MirrorUndefined { .. })
        ));
        // mirrors are involutive
        assert_eq!(
            triple(1, 1, 1)
                .lattice_mirror()
                .unwrap()
                .lattice_mirror()
                .unwrap(),
            triple(1, 1, 1)
        );
    }

    #[test]
    fn hodge_swap_holds_where_defined() {
        assert!(triple(1, 1, 1).hodge_swap_check().unwrap());
        assert!(triple(10, 10, 0).hodge_swap_check().unwrap());
    }

    #[test]
    fn invalid_triples_rejected() {
        assert!(matches!(
            NikulinTriple::new(0, 0, 0),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            NikulinTriple::new(21, 1, 1),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            NikulinTriple::new(2, 4, 0),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            NikulinTriple::new(3, 2, 1),
            Err(Error::ParityViolation(_))
        ));
        assert!(matches!(
            NikulinTriple::new(1, 1, 2),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn catalog_counts_match_the_classification() {
        let entries = catalog();
        assert_eq!(entries.len(), 75);
        assert_eq!(entries.iter().filter(|e| e.mirror_eligible).count(), 63);
        assert_eq!(entries.iter().filter(|e| e.has_model).count(), 29);
        assert_eq!(entries.iter().filter(|e| e.bad).count(), 4);
        assert_eq!(
            entries
                .iter()
                .filter(|e| e.availability() == Availability::Available)
                .count(),
            25
        );
    }

    #[test]
    fn bad_triples_are_not_available() {
        for (r, a, d) in [(2, 0, 0), (18, 0, 0), (4, 4, 1), (16, 4, 1)] {
            assert_eq!(
                model_availability(&triple(r, a, d)),
                Availability::NotAvailable
            );
        }
        assert_eq!(
            model_availability(&triple(1, 1, 1)),
            Availability::Available
        );
        assert_eq!(model_availability(&triple(3, 3, 1)), Availability::Unknown);
        // not in the catalog at all
        assert_eq!(model_availability(&triple(4, 2, 0)), Availability::Unknown);
    }

    #[test]
    fn mirror_flag_matches_the_mirror_predicate() {
        for entry in catalog() {
            assert_eq!(
                entry.triple.lattice_mirror().is_ok(),
                entry.mirror_eligible,
                "{}",
                entry.triple
            );
        }
    }
}
