//! Runs the twelve acceptance criteria and prints one line per criterion.
//! Exits nonzero if any criterion fails.

use negabase::selftest::run_all;

fn main() {
    let reports = run_all();
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{} of {} criteria passed", reports.len() - failed.len(), reports.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
