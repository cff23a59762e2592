//! Product-level audit: one verdict line per claim group, printed as
//! `acceptance: PASS/FAIL — <claim>`. Run with
//! `cargo test --test acceptance -- --nocapture` to see every line.
//!
//! One claim is knowingly false and is reported as FAIL by design: the
//! closed-form maximum edge count for three-color graphs overshoots the
//! exhaustively computed maximum at orders 4, 6, and 7 (it is attained
//! exactly when the order is ≡ 1 mod 4, e.g. at order 5). The test for
//! that group pins the observed maxima instead, so it still catches any
//! regression in either direction.

use std::sync::OnceLock;

use rvdkit_core::audit::{
    audit, AuditOptions, AuditReport, CheckResult, CheckStatus, DEFAULT_SEED,
};

static REPORT: OnceLock<AuditReport> = OnceLock::new();

/// One exhaustive audit over the full order ≤ 7 catalog (853 classes at
/// order 7), shared by every verdict below.
fn report() -> &'static AuditReport {
    REPORT.get_or_init(|| {
        let opts = AuditOptions { n_max: 7, seed: DEFAULT_SEED, ..AuditOptions::default() };
        audit(&opts).expect("audit over the order ≤ 7 catalog")
    })
}

fn check(name: &str) -> &'static CheckResult {
    report()
        .checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check `{name}` missing from the audit"))
}

/// Print the verdict for one claim group and fail the test if any of its
/// checks did not pass outright (a skipped check is not a pass).
fn verdict(label: &str, names: &[&str]) {
    let failing: Vec<String> = names
        .iter()
        .map(|n| check(n))
        .filter(|c| c.status != CheckStatus::Pass)
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    if failing.is_empty() {
        println!("acceptance: PASS — {label}");
    } else {
        println!("acceptance: FAIL — {label} ({})", failing.join("; "));
    }
    assert!(failing.is_empty(), "{label}: {}", failing.join("; "));
}

#[test]
fn c1_family_formula_reproduction() {
    verdict(
        "family formulas: complete, cycle, wheel, and multipartite values, \
         with verified constructions",
        &["family-formulas", "wheel-parity", "family-colorings"],
    );
}

#[test]
fn c2_small_order_characterizations() {
    verdict(
        "characterizations over every connected graph through order 7: \
         value 1 ⟺ tree, value 2 ⟺ cactus with a cycle, full and near-full values",
        &[
            "tree-characterization",
            "cactus-characterization",
            "full-value-characterization",
            "near-full-implication",
        ],
    );
}

#[test]
fn c3_bound_chain_and_tightness() {
    verdict(
        "bounds: connectivity chain, girth and triangle-free upper bounds, \
         biclique tightness witnesses",
        &["bounds", "girth-bound", "triangle-free-bound", "bipartite-tightness"],
    );
}

#[test]
fn c4_extremal_edge_counts() {
    let min = check("min-size");
    let interval = check("max-size-interval");
    let exact = check("max-size-exact");
    let rest_pass = min.status == CheckStatus::Pass && interval.status == CheckStatus::Pass;

    if rest_pass && exact.status == CheckStatus::Pass {
        println!("acceptance: PASS — extremal edge counts at orders 4..7");
    } else {
        println!(
            "acceptance: FAIL — extremal edge counts at orders 4..7 \
             (three-color maximum: {}; minimum sizes and the wide-palette interval {})",
            exact.detail,
            if rest_pass { "hold" } else { "fail too" },
        );
    }

    assert!(rest_pass, "min-size: {} / max-size-interval: {}", min.detail, interval.detail);
    // The claimed three-color maximum ⌊2(n−1)⌋ is one edge too high except
    // when 4 divides n − 1; exhaustive search settles it at these orders.
    assert_eq!(exact.status, CheckStatus::Fail, "{}", exact.detail);
    assert_eq!(
        exact.detail,
        "(n=4, k=3): claimed max 6, observed 5; \
         (n=6, k=3): claimed max 10, observed 9; \
         (n=7, k=3): claimed max 12, observed 11"
    );
}

#[test]
fn c5_constructive_coloring_algorithms() {
    verdict(
        "constructive algorithms: sparse color budget, removable cycles in \
         min-degree-3 graphs, block-by-block composition",
        &["sparse-budget", "removable-cycle", "compose-blocks"],
    );
}

#[test]
fn c6_oracle_equivalence() {
    verdict(
        "oracle equivalence: rainbow-cut search vs the all-subsets sweep on \
         sampled colorings, block solver vs flat solver",
        &["cut-oracle", "block-law"],
    );
}
