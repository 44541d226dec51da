//! Running a CLI command in-process and inspecting its JSON report.

fn main() {
    let inv = pgcoh::cli::run(["verify-map", "--preset", "thm10-variant-stated"].map(String::from));
    let report: serde_json::Value = serde_json::from_str(&inv.stdout).expect("valid JSON");
    println!("exit code {}, status {}", inv.exit_code, report["status"]);
    for row in report["payload"]["order81_gysin_table"]["rows"].as_array().into_iter().flatten() {
        println!("  {} H^{}: order {} (expected {})", row["group"], row["degree"], row["order"], row["expected_order"]);
    }
}
