//! Acceptance gate: one test per law, each printing a single PASS/FAIL
//! line with the law's stable identifier. Run with `--nocapture` to see
//! the lines for passing tests too.

use wtop_core::laws::{self, LawConfig, LawReport};

fn gate(report: LawReport) {
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    println!("{} {} - {}", verdict, report.id, report.detail);
    assert!(report.passed, "{}: {}", report.id, report.detail);
}

#[test]
fn law_2_13_l() {
    gate(laws::law_l_fixed_points(&LawConfig::default()));
}

#[test]
fn law_2_13_sep() {
    gate(laws::law_l_not_separated(&LawConfig::default()));
}

#[test]
fn law_2_8_idem() {
    gate(laws::law_ideal_idempotency(&LawConfig::default()));
}

#[test]
fn law_2_x_comp() {
    gate(laws::law_ideal_composition(&LawConfig::default()));
}

#[test]
fn law_2_4_im() {
    gate(laws::law_image_vs_fixed_points(&LawConfig::default()));
}

#[test]
fn law_eq4_classify() {
    gate(laws::law_classifying_bijections(&LawConfig::default()));
}

#[test]
fn law_4_1_residuated() {
    gate(laws::law_residuated_lattice(&LawConfig::default()));
}

#[test]
fn law_4_3_reflect() {
    gate(laws::law_topological_reflection(&LawConfig::default()));
}

#[test]
fn law_4_4_intersect() {
    gate(laws::law_sheaf_intersection(&LawConfig::default()));
}

#[test]
fn law_5_5_diag() {
    gate(laws::law_diagonal_closures(&LawConfig::default()));
}

#[test]
fn law_2_9_omegaj() {
    gate(laws::law_omega_j_is_sheaf(&LawConfig::default()));
}

#[test]
fn law_6_5_sheafify() {
    gate(laws::law_sheafification(&LawConfig::default()));
}

#[test]
fn law_3_6_central() {
    gate(laws::law_central_elements(&LawConfig::default()));
}

#[test]
fn law_dense_nocomp() {
    gate(laws::law_density_not_composable(&LawConfig::default()));
}
