//! Parallel execution of verification cases.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use commute_spectra_core::verify::{evaluate_case, CaseRecord, VerificationCase, VerificationReport};
use commute_spectra_core::Limits;

/// Runs `cases` on up to `jobs` threads. The report is ordered by case id,
/// so it does not depend on scheduling; runtimes line up with its records.
pub fn run_suite(cases: &[VerificationCase], limits: &Limits, jobs: usize) -> (VerificationReport, Vec<Duration>) {
    let next = AtomicUsize::new(0);
    let done: Mutex<Vec<(CaseRecord, Duration)>> = Mutex::new(Vec::with_capacity(cases.len()));
    let workers = jobs.clamp(1, cases.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(case) = cases.get(i) else { break };
                let start = Instant::now();
                let rec = evaluate_case(case, limits);
                done.lock().unwrap().push((rec, start.elapsed()));
            });
        }
    });
    let mut done = done.into_inner().unwrap();
    done.sort_by_key(|(r, _)| r.id);
    let runtimes = done.iter().map(|d| d.1).collect();
    let report = VerificationReport::from_records(done.into_iter().map(|d| d.0).collect());
    (report, runtimes)
}
