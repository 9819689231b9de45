//! Randomized verification: generate instances, compute the operation,
//! and re-check the bound plus every structural invariant on each one.

use plgeom::{check_envelope_instance, random_plf, run_campaign, CampaignConfig, CampaignKind};

fn main() {
    // One instance by hand first. The report lists exactly which checks
    // ran, including the pointwise envelope oracle.
    let f1 = random_plf(11, 5, 2).unwrap();
    let f2 = random_plf(12, 4, 4).unwrap();
    let report = check_envelope_instance(&f1, &f2);
    println!(
        "single instance: status {:?}, n0 = {}, bound = {}, slack = {}",
        report.status, report.output.n, report.bound, report.slack
    );
    println!("checks run: {}", report.checks.join(", "));

    // Campaigns derive one seed per trial, so runs are reproducible and
    // order-independent.
    for (kind, trials) in [
        (CampaignKind::Envelope, 300),
        (CampaignKind::Union, 100),
        (CampaignKind::Intersection, 100),
    ] {
        let config = CampaignConfig {
            kind,
            trials,
            max_n: 8,
            seed: 7,
        };
        let summary = run_campaign(&config);
        println!(
            "{kind:?}: {} trials, {} ok, {} skipped, {} violations, min slack {:?}",
            summary.trials, summary.ok, summary.skipped, summary.violations, summary.min_slack
        );
        assert_eq!(summary.violations, 0);
        let rerun = run_campaign(&config);
        assert_eq!(rerun.slack_histogram, summary.slack_histogram);
    }
}
