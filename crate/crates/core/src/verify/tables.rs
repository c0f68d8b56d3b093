//! Weingarten tables against printed rows, and the structural checks on `Wg`.

use serde_json::json;

use super::report::{q, CheckReport, Provenance};
use crate::exact::ExactScalar;
use crate::symmetric::{
    acts_as_scalar, class_to_algebra, full_cycle_closed_form, partitions, phi_of_identity,
    weingarten, weingarten_scaled, Partition,
};

/// Printed `(d+1)!²·Wg(d+1, d)` rows, read literally.
pub const PRINTED_TABLES: [(usize, &[(&[usize], &str)]); 4] = [
    (2, &[(&[3], "-7/4"), (&[2, 1], "1/4"), (&[1, 1, 1], "17/4")]),
    (
        3,
        &[
            (&[4], "37/15"),
            (&[3, 1], "-3/5"),
            (&[2, 2], "-11/5"),
            (&[2, 1, 1], "-7/3"),
            (&[1, 1, 1, 1], "61/5"),
        ],
    ),
    (
        4,
        &[
            (&[5], "-533/168"),
            (&[4, 1], "-143/168"),
            (&[3, 2], "503/168"),
            (&[3, 1, 1], "61/24"),
            (&[2, 2, 1], "-53/168"),
            (&[2, 1, 1, 1], "-1417/168"),
            (&[1, 1, 1, 1, 1], "5227/168"),
        ],
    ),
    (
        5,
        &[
            (&[6], "1627/420"),
            (&[5, 1], "-451/420"),
            (&[4, 2], "-389/105"),
            (&[4, 1, 1], "-104/35"),
            (&[3, 3], "-1601/420"),
            (&[3, 2, 1], "151/210"),
            (&[3, 1, 1, 1], "991/105"),
            (&[2, 2, 2], "701/210"),
            (&[2, 2, 1, 1], "289/70"),
            (&[2, 1, 1, 1, 1], "-4649/210"),
            (&[1, 1, 1, 1, 1, 1], "5227/168"),
        ],
    ),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub partition: Partition,
    pub printed: ExactScalar,
    pub computed: ExactScalar,
}

impl TableEntry {
    pub fn matches(&self) -> bool {
        self.printed == self.computed
    }
}

/// Printed row for `d` beside the computed scaled values.
pub fn table_entries(d: usize) -> Option<Vec<TableEntry>> {
    let (_, row) = PRINTED_TABLES.iter().find(|(k, _)| *k == d)?;
    let w = weingarten_scaled(d + 1, d);
    Some(
        row.iter()
            .map(|(parts, printed)| {
                let partition = Partition::new(parts.to_vec());
                TableEntry {
                    computed: w.get(&partition).expect("partition of d+1").clone(),
                    printed: printed.parse().expect("literal"),
                    partition,
                }
            })
            .collect(),
    )
}

/// Row check; a disagreement with a printed entry is a finding.
pub fn weingarten_table(d: usize, seed: u64) -> CheckReport {
    let mut r = CheckReport::new(format!("weingarten.table.d{d}"), "tab:blambda", seed);
    let Some(rows) = table_entries(d) else {
        r.require(false, format!("no printed row for d = {d}"));
        return r;
    };
    r.require(
        rows.len() == partitions(d + 1).len(),
        "printed row covers every class",
    );
    for e in &rows {
        r.measure(&e.partition.label(), q(&e.computed));
        r.expect(&e.partition.label(), q(&e.printed), Provenance::Paper);
        r.compare(
            e.matches(),
            format!("c_{}: computed {} printed {}", e.partition.label(), e.computed, e.printed),
        );
    }
    r
}

/// Printed `d!²·Wg(d,d)` values at even `d`.
pub const EVEN_SCALED: [(&[usize], &str); 6] = [
    (&[2], "-2/3"),
    (&[4], "-4/7"),
    (&[6], "-6/11"),
    (&[1, 1], "4/3"),
    (&[2, 2], "22/35"),
    (&[3, 3], "300/539"),
];

pub fn even_scaled(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("weingarten.even-scaled", "sec:even-numerics", seed);
    for (parts, printed) in EVEN_SCALED {
        let p = Partition::new(parts.to_vec());
        let n = p.n();
        let v = weingarten_scaled(n, n).get(&p).expect("partition of n").clone();
        let want: ExactScalar = printed.parse().expect("literal");
        r.measure(&p.label(), q(&v));
        r.expect(&p.label(), printed, Provenance::Paper);
        r.require(v == want, format!("{}: {} vs {}", p.label(), v, want));
    }
    r
}

/// `Wg(d,d)` at the full cycle against `(−1)^{d−1} d / ((d!)²(2d−1))`, `2 ≤ d ≤ 8`.
pub fn full_cycle(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("weingarten.full-cycle", "thm:teF", seed);
    for d in 2..=8 {
        let v = weingarten(d, d).get(&Partition::new(vec![d])).expect("cycle").clone();
        let want = full_cycle_closed_form(d);
        r.measure(&format!("d{d}"), q(&v));
        r.expect(&format!("d{d}"), q(&want), Provenance::Paper);
        r.require(v == want, format!("d = {d}"));
    }
    r
}

/// `Φ(1) ⋆ Wg(n,d)` acts as the identity on `(F^d)^{⊗n}` for `n, d ≤ 5`.
pub fn inverse(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("weingarten.inverse", "eq:wein", seed);
    let mut done = vec![];
    for n in 1..=5 {
        for d in 1..=5 {
            let g = phi_of_identity(n, d).convolve(&class_to_algebra(&weingarten(n, d)));
            match acts_as_scalar(&g, d, &ExactScalar::one()) {
                Ok(ok) => r.require(ok, format!("n = {n}, d = {d}")),
                Err(e) => r.require(false, format!("n = {n}, d = {d}: {e}")),
            }
            done.push(json!([n, d]));
        }
    }
    r.measure("pairs", done);
    r.expect("operator", "identity", Provenance::Trivial);
    r
}

/// For `d ≥ n`, `a_μ ≠ 0` with the sign of the class.
pub fn novak_sign(seed: u64) -> CheckReport {
    let mut r = CheckReport::new("weingarten.novak-sign", "fact:novak", seed);
    let mut checked = 0usize;
    for n in 1..=5 {
        for d in n..=5 {
            let w = weingarten(n, d);
            for (mu, v) in w.iter() {
                r.require(
                    v.signum() == mu.sign(),
                    format!("n = {n}, d = {d}, μ = {}: {v}", mu.label()),
                );
                checked += 1;
            }
        }
    }
    r.measure("classes_checked", checked);
    r.expect("sign", "parity of the class", Provenance::Paper);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::Status;

    #[test]
    fn small_rows_pass() {
        assert_eq!(weingarten_table(2, 0).status, Status::Pass);
        assert_eq!(weingarten_table(3, 0).status, Status::Pass);
    }

    #[test]
    fn printed_typos_are_findings() {
        let bad = |d| -> Vec<String> {
            table_entries(d)
                .unwrap()
                .into_iter()
                .filter(|e| !e.matches())
                .map(|e| format!("{} {}", e.partition.label(), e.computed))
                .collect()
        };
        assert_eq!(bad(4), vec!["4,1 143/168"]);
        assert_eq!(bad(5), vec!["1,1,1,1,1,1 16577/210"]);
        assert_eq!(weingarten_table(5, 0).status, Status::Finding);
    }

    #[test]
    fn structural() {
        for r in [even_scaled(0), full_cycle(0), novak_sign(0)] {
            assert_eq!(r.status, Status::Pass, "{r:?}");
        }
    }
}
