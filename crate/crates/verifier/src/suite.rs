//! Suite profiles and the worker pool that runs them.

use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use minorel_core::Variant;

use crate::config::Config;
use crate::report::{Report, Task, Verdict};
use crate::store::Store;
use crate::tasks::{resolve, run, Request};
use crate::VerifierError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
    Long,
}

impl FromStr for Profile {
    type Err = VerifierError;
    fn from_str(s: &str) -> Result<Self, VerifierError> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            "long" => Ok(Profile::Long),
            _ => Err(VerifierError::Usage(format!("unknown profile `{s}`"))),
        }
    }
}

/// The requests of a profile; each profile extends the previous one.
pub fn requests(profile: Profile) -> Vec<Request> {
    let mut v = vec![
        Request::new("thm-1.1", 2, 4).dmax(4),
        Request::new("thm-1.1", 3, 3).dmax(4),
        Request::new("thm-1.2", 3, 3).dmax(3),
        Request::new("sec-6-Tbar", 3, 3).dmax(3),
        Request::new("thm-3.1", 3, 3).dmax(5),
        Request::new("lem-4.3", 5, 5).dmax(4).r(3),
        Request::new("lem-4.4", 5, 5).dmax(4).r(2),
        Request::new("thm-4.1", 3, 3).r(1),
        Request::new("eq-tor1-Nr", 3, 3).r(1),
        Request::new("thm-5.1", 2, 2),
        Request::new("sec-6-U", 2, 2),
        Request::new("que-7.1", 2, 2),
        Request::new("que-7.1", 2, 3),
        Request::new("que-7.1", 2, 4),
        Request::new("que-7.1", 3, 3),
    ];
    if profile != Profile::Quick {
        v.extend([
            Request::new("thm-1.1", 3, 4).dmax(4),
            Request { variant: Some(Variant::Permanents), ..Request::new("thm-1.1", 3, 3).dmax(3) },
            Request::new("thm-3.1", 3, 3).dmax(6),
            Request::new("thm-3.2", 3, 3).dmax(6),
            Request::new("thm-4.1", 3, 3).r(2),
            Request::new("eq-tor1-Nr", 3, 3).r(2),
            Request::new("thm-5.1", 2, 3),
            Request::new("sec-6-U", 2, 3),
            Request::new("que-7.1", 3, 4),
        ]);
    }
    if profile == Profile::Long {
        v.push(Request::new("que-7.1", 5, 3));
    }
    v
}

/// Run tasks on up to `cfg.workers` threads, reusing stored reports unless
/// `fresh`. Reports come back in task order.
pub fn run_all(tasks: &[Task], cfg: &Config, store: Option<&Store>, fresh: bool) -> Result<Vec<Report>, VerifierError> {
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<Report>>> = tasks.iter().map(|_| Mutex::new(None)).collect();
    let first_err: Mutex<Option<VerifierError>> = Mutex::new(None);
    let workers = cfg.workers.clamp(1, tasks.len().max(1));
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(task) = tasks.get(i) else { break };
                let cached = if fresh { None } else { store.and_then(|st| st.load(task, cfg)) };
                let report = match cached {
                    Some(r) => r,
                    None => {
                        let r = run(task, cfg);
                        if let Some(st) = store {
                            if let Err(e) = st.save(&r, cfg) {
                                first_err.lock().unwrap().get_or_insert(e);
                            }
                        }
                        r
                    }
                };
                *slots[i].lock().unwrap() = Some(report);
            });
        }
    });
    if let Some(e) = first_err.into_inner().unwrap() {
        return Err(e);
    }
    Ok(slots.into_iter().map(|s| s.into_inner().unwrap().expect("every task ran")).collect())
}

/// Resolve and run one profile.
pub fn run_profile(profile: Profile, cfg: &Config, store: Option<&Store>, fresh: bool) -> Result<Vec<Report>, VerifierError> {
    let tasks = requests(profile).iter().map(|r| resolve(r, cfg)).collect::<Result<Vec<_>, _>>()?;
    run_all(&tasks, cfg, store, fresh)
}

/// 0 when everything passed, 1 on any failure, 2 on a capacity skip.
pub fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        1
    } else if reports.iter().any(|r| r.verdict == Verdict::SkippedCapacity) {
        2
    } else {
        0
    }
}
