//! The finite census of admissible holomorphic symplectic four-fold
//! invariants: Betti-number bounds, the derived Chern and characteristic
//! identities, and the enumeration of (b2, b3, d, deg Delta) for Lagrangian
//! fibrations by abelian surfaces with polarization of type (1, d).
//!
//! The census scans, for every admissible Betti pair with b2 >= 4, the
//! divisors d of rw = 1152 * sqrt-A-roof; with the integrality filter on,
//! only divisors with rw/d a perfect square survive and deg Delta is its
//! square root. Output order is always (b2, b3, d) ascending, regardless of
//! how the enumeration is executed.

use num_integer::Roots;
use serde::Serialize;

use crate::char_classes::{characteristic_number, sqrt_ahat_series, ChernNumbers};
use crate::error::{Error, Result};
use crate::fibration::divisors;
use crate::rational::Rational;

// ---- Betti pairs ----

/// An admissible (b2, b3) pair for an irreducible holomorphic symplectic
/// four-fold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BettiPair {
    pub b2: u32,
    pub b3: u32,
}

/// The full list of admissible Betti pairs, in the established order
/// (b2 descending, b3 ascending): (23,0); (8,0); (7,0|8); (6, 0..16);
/// (5, 0..36); (4, 0..60); (3, 0..68), all b3 in steps of four. 53 pairs.
pub fn guan_table() -> Vec<BettiPair> {
    let mut table = vec![
        BettiPair { b2: 23, b3: 0 },
        BettiPair { b2: 8, b3: 0 },
        BettiPair { b2: 7, b3: 0 },
        BettiPair { b2: 7, b3: 8 },
    ];
    for (b2, b3_max) in [(6u32, 16u32), (5, 36), (4, 60), (3, 68)] {
        for b3 in (0..=b3_max).step_by(4) {
            table.push(BettiPair { b2, b3 });
        }
    }
    table
}

// ---- Derived invariants ----

/// All numerical invariants of an admissible four-fold determined by its
/// Betti pair:
///
/// - b4 = 46 + 10 b2 - b3
/// - c4 = Euler characteristic = 48 + 12 b2 - 3 b3
/// - c2_squared from 3 c2^2 - c4 = 2160 (holomorphic Euler characteristic 3)
/// - rw = 1152 * sqrt-A-roof = 992 - 4 b2 + b3
/// - sqrt_ahat evaluated through the characteristic-class series (always
///   equal to rw / 1152; the redundancy ties the integer route to the series
///   route).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourfoldInvariants {
    pub betti: BettiPair,
    pub b4: u32,
    pub c4: i64,
    pub c2_squared: i64,
    pub sqrt_ahat: Rational,
    pub rw: i64,
}

/// Derive the invariants of an admissible Betti pair.
pub fn invariants_from_betti(betti: &BettiPair) -> Result<FourfoldInvariants> {
    if !guan_table().contains(betti) {
        return Err(Error::NotInGuanTable(betti.b2, betti.b3));
    }
    let b2 = i64::from(betti.b2);
    let b3 = i64::from(betti.b3);
    let b4 = 46 + 10 * b2 - b3;
    let c4 = 48 + 12 * b2 - 3 * b3;
    debug_assert_eq!(c4 % 3, 0);
    let c2_squared = (2160 + c4) / 3;
    let rw = 992 - 4 * b2 + b3;
    // series route for sqrt-A-roof; the tests assert it equals rw/1152
    let chern = ChernNumbers::new("", 4, &[("c2.c2", c2_squared), ("c4", c4)])?;
    let sqrt_ahat = characteristic_number(&sqrt_ahat_series(4), &chern)?;
    Ok(FourfoldInvariants {
        betti: *betti,
        b4: u32::try_from(b4).expect("b4 is positive on the admissible list"),
        c4,
        c2_squared,
        sqrt_ahat,
        rw,
    })
}

// ---- Census ----

/// One admissible combination of four-fold invariants with a polarization
/// type (1, d). `deg_delta` is the integer square root of rw/d when that
/// quotient is a perfect square, and `None` otherwise (rows with `None`
/// only appear when the integrality filter is off).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusRow {
    pub invariants: FourfoldInvariants,
    pub d: u64,
    pub deg_delta: Option<u64>,
}

/// Enumerate the census. For every admissible Betti pair with b2 >= 4 (the
/// base class of the fibration is isotropic, which needs at least four) and
/// every divisor d of rw: keep the row when rw/d is a perfect square,
/// recording deg Delta as its root; with `require_integer_degree = false`
/// keep every divisor row. Rows are sorted by (b2, b3, d).
pub fn census(require_integer_degree: bool) -> Vec<CensusRow> {
    let mut rows = Vec::new();
    for betti in guan_table() {
        if betti.b2 < 4 {
            continue;
        }
        let invariants =
            invariants_from_betti(&betti).expect("table pairs are admissible by construction");
        let rw = u64::try_from(invariants.rw).expect("rw is positive for b2 >= 4");
        for d in divisors(rw) {
            let quotient = rw / d;
            let root = quotient.sqrt();
            let deg_delta = (root * root == quotient).then_some(root);
            if deg_delta.is_some() || !require_integer_degree {
                rows.push(CensusRow {
                    invariants: invariants.clone(),
                    d,
                    deg_delta,
                });
            }
        }
    }
    rows.sort_by_key(|row| (row.invariants.betti.b2, row.invariants.betti.b3, row.d));
    rows
}

/// Maxima over a census: the largest admissible d, the largest degree bound,
/// and the largest rw.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundsSummary {
    pub max_d: u64,
    pub max_deg: u64,
    pub max_rw: i64,
}

/// Summarize the bounds of a census. For rows without an integer degree the
/// degree bound is the floor of sqrt(rw/d).
pub fn bounds_summary(rows: &[CensusRow]) -> Result<BoundsSummary> {
    if rows.is_empty() {
        return Err(Error::EmptyCensus);
    }
    let mut max_d = 0u64;
    let mut max_deg = 0u64;
    let mut max_rw = i64::MIN;
    for row in rows {
        max_d = max_d.max(row.d);
        max_rw = max_rw.max(row.invariants.rw);
        let rw = u64::try_from(row.invariants.rw).expect("census rows have positive rw");
        let deg = row.deg_delta.unwrap_or_else(|| (rw / row.d).sqrt());
        max_deg = max_deg.max(deg);
    }
    Ok(BoundsSummary {
        max_d,
        max_deg,
        max_rw,
    })
}

// ---- Export ----

/// Flat serialization mirror of a census row.
#[derive(Serialize)]
struct RowRecord {
    b2: u32,
    b3: u32,
    b4: u32,
    c4: i64,
    c2sq: i64,
    rw: i64,
    d: u64,
    deg_delta: Option<u64>,
}

impl From<&CensusRow> for RowRecord {
    fn from(row: &CensusRow) -> Self {
        RowRecord {
            b2: row.invariants.betti.b2,
            b3: row.invariants.betti.b3,
            b4: row.invariants.b4,
            c4: row.invariants.c4,
            c2sq: row.invariants.c2_squared,
            rw: row.invariants.rw,
            d: row.d,
            deg_delta: row.deg_delta,
        }
    }
}

/// CSV export with header `b2,b3,b4,c4,c2sq,rw,d,deg_delta`. A row without
/// an integer degree leaves the last field empty.
pub fn census_to_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("b2,b3,b4,c4,c2sq,rw,d,deg_delta\n");
    for row in rows {
        let r = RowRecord::from(row);
        let deg = r.deg_delta.map_or(String::new(), |v| v.to_string());
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.b2, r.b3, r.b4, r.c4, r.c2sq, r.rw, r.d, deg
        ));
    }
    out
}

/// JSON export: schema version, filter flag, rows (mirroring the CSV
/// fields; `deg_delta` is null when absent), and the bounds summary.
pub fn census_to_json(rows: &[CensusRow], require_integer_degree: bool) -> Result<String> {
    #[derive(Serialize)]
    struct Document {
        schema_version: u32,
        require_integer_degree: bool,
        rows: Vec<RowRecord>,
        summary: SummaryRecord,
    }
    #[derive(Serialize)]
    struct SummaryRecord {
        max_d: u64,
        max_deg_delta: u64,
        max_rw: i64,
        row_count: usize,
    }
    let bounds = bounds_summary(rows)?;
    let document = Document {
        schema_version: 1,
        require_integer_degree,
        rows: rows.iter().map(RowRecord::from).collect(),
        summary: SummaryRecord {
            max_d: bounds.max_d,
            max_deg_delta: bounds.max_deg,
            max_rw: bounds.max_rw,
            row_count: rows.len(),
        },
    };
    serde_json::to_string_pretty(&document).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn table_shape() {
        let table = guan_table();
        assert_eq!(table.len(), 53);
        assert_eq!(table[0], BettiPair { b2: 23, b3: 0 });
        let b2_4: Vec<u32> = table.iter().filter(|p| p.b2 == 4).map(|p| p.b3).collect();
        assert_eq!(b2_4.len(), 16);
        assert_eq!(b2_4[0], 0);
        assert_eq!(*b2_4.last().unwrap(), 60);
        assert!(b2_4.windows(2).all(|w| w[1] - w[0] == 4));
    }

    #[test]
    fn invariants_examples() {
        let top = invariants_from_betti(&BettiPair { b2: 23, b3: 0 }).unwrap();
        assert_eq!(top.b4, 276);
        assert_eq!(top.c4, 324);
        assert_eq!(top.c2_squared, 828);
        assert_eq!(top.rw, 900);
        assert_eq!(top.sqrt_ahat, rat(900, 1152));

        let kummer = invariants_from_betti(&BettiPair { b2: 7, b3: 8 }).unwrap();
        assert_eq!(kummer.b4, 108);
        assert_eq!(kummer.c4, 108);
        assert_eq!(kummer.c2_squared, 756);
        assert_eq!(kummer.rw, 972);

        let extreme = invariants_from_betti(&BettiPair { b2: 4, b3: 60 }).unwrap();
        assert_eq!(extreme.rw, 1036);

        assert!(matches!(
            invariants_from_betti(&BettiPair { b2: 9, b3: 0 }),
            Err(Error::NotInGuanTable(9, 0))
        ));
        assert!(matches!(
            invariants_from_betti(&BettiPair { b2: 7, b3: 6 }),
            Err(Error::NotInGuanTable(7, 6))
        ));
    }

    #[test]
    fn rw_identity_three_ways() {
        for betti in guan_table() {
            let inv = invariants_from_betti(&betti).unwrap();
            let via_betti = 992 - 4 * i64::from(betti.b2) + i64::from(betti.b3);
            let via_euler = 1008 - inv.c4 / 3;
            assert_eq!(inv.rw, via_betti);
            assert_eq!(inv.rw, via_euler);
            assert_eq!(inv.c4 % 3, 0);
            // series route
            assert_eq!(
                inv.sqrt_ahat * rat(1152, 1),
                rat(inv.rw, 1),
                "series route disagrees at (b2, b3) = ({}, {})",
                betti.b2,
                betti.b3
            );
        }
    }

    #[test]
    fn census_known_rows() {
        let rows = census(true);
        assert!(rows.iter().all(|r| r.invariants.betti.b2 >= 4));
        assert!(rows.iter().any(|r| {
            r.invariants.betti == BettiPair { b2: 23, b3: 0 } && r.d == 1 && r.deg_delta == Some(30)
        }));
        assert!(rows.iter().any(|r| {
            r.invariants.betti == BettiPair { b2: 7, b3: 8 } && r.d == 3 && r.deg_delta == Some(18)
        }));
        // every kept row satisfies deg^2 * d = rw exactly
        for row in &rows {
            let deg = row.deg_delta.expect("filtered census rows carry a degree");
            assert_eq!(deg * deg * row.d, u64::try_from(row.invariants.rw).unwrap());
        }
    }

    #[test]
    fn census_bounds() {
        let filtered = census(true);
        let bounds = bounds_summary(&filtered).unwrap();
        assert_eq!(bounds.max_rw, 1036);
        assert!(bounds.max_deg <= 32);
        assert_eq!(bounds.max_deg, 32);

        let unfiltered = census(false);
        let loose = bounds_summary(&unfiltered).unwrap();
        assert_eq!(loose.max_d, 1036);
        assert_eq!(loose.max_rw, 1036);
        assert_eq!(loose.max_deg, 32);

        // rw over the b2 >= 4 census spans exactly [900, 1036]
        let min_rw = filtered.iter().map(|r| r.invariants.rw).min().unwrap();
        assert_eq!(min_rw, 900);

        assert!(matches!(bounds_summary(&[]), Err(Error::EmptyCensus)));
    }

    #[test]
    fn census_b2_23_degrees() {
        // divisor scan of rw = 900: square quotients at
        // d in {1, 4, 9, 25, 36, 100, 225, 900}
        let rows = census(true);
        let mut b2_23: Vec<(u64, u64)> = rows
            .iter()
            .filter(|r| r.invariants.betti.b2 == 23)
            .map(|r| (r.d, r.deg_delta.unwrap()))
            .collect();
        b2_23.sort_unstable();
        assert_eq!(
            b2_23,
            vec![
                (1, 30),
                (4, 15),
                (9, 10),
                (25, 6),
                (36, 5),
                (100, 3),
                (225, 2),
                (900, 1)
            ]
        );
    }

    #[test]
    fn exports_are_consistent() {
        let rows = census(true);
        let csv = census_to_csv(&rows);
        assert!(csv.starts_with("b2,b3,b4,c4,c2sq,rw,d,deg_delta\n"));
        assert!(csv.contains("23,0,276,324,828,900,1,30\n"));
        assert_eq!(csv.lines().count(), rows.len() + 1);

        let json = census_to_json(&rows, true).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["schema_version"], 1);
        assert_eq!(parsed["rows"].as_array().unwrap().len(), rows.len());
        assert_eq!(parsed["summary"]["max_rw"], 1036);
    }
}
