//! Running the verification suite over the default small-groups catalog
//! and reading the report.
//!
//! Run with: cargo run --release --example verify_catalog

use autocomm::verifier::{default_catalog, run_catalog};

fn main() {
    let spec = default_catalog();
    println!(
        "catalog: {} groups, orders capped at {}",
        spec.entries.len(),
        spec.max_order
    );
    let report = run_catalog(&spec).unwrap();
    let s = &report.summary;
    println!(
        "checks: {}  passed: {}  failed: {}  skipped: {}",
        s.total_checks, s.passed, s.failed, s.skipped
    );
    assert!(report.all_pass(), "the default catalog verifies cleanly");

    // Per-family counts.
    let mut by_name = std::collections::BTreeMap::new();
    for c in &report.checks {
        *by_name.entry(c.name.as_str()).or_insert(0usize) += 1;
    }
    println!("\nrows per check family:");
    for (name, count) in &by_name {
        println!("  {:<36} {}", name, count);
    }

    // The orbit-count form of the identity probability is only valid for
    // subgroups stable under every automorphism; the report flags the
    // instances where it disagrees instead of failing them.
    println!(
        "\norbit-count-form observations: {} rows, {} mismatches",
        report.orbit_form_flags.len(),
        s.orbit_form_mismatches
    );
    for f in report.orbit_form_flags.iter().filter(|f| !f.agrees).take(5) {
        println!(
            "  {} H={}: value {} vs orbit count {}",
            f.group, f.subgroup, f.sigma_form, f.orbit_count_form
        );
    }

    println!("\nskips by reason: {:?}", report.skipped);
}
