use std::sync::Mutex;

use crate::outcome::Outcome;

pub type Job = Box<dyn FnOnce() -> anyhow::Result<Outcome> + Send>;

pub fn threads() -> usize {
    std::env::var("SPECHT_THREADS").ok().and_then(|v| v.parse().ok()).filter(|&t| t > 0).unwrap_or(1)
}

/// Runs the jobs on `threads` workers and returns the outcomes in job order.
pub fn run_all(jobs: Vec<Job>, threads: usize) -> anyhow::Result<Vec<Outcome>> {
    if threads <= 1 {
        return jobs.into_iter().map(|j| j()).collect();
    }
    let queue = Mutex::new(jobs.into_iter().enumerate().collect::<Vec<_>>().into_iter());
    let done = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let next = queue.lock().unwrap().next();
                let Some((idx, job)) = next else { break };
                let r = job();
                done.lock().unwrap().push((idx, r));
            });
        }
    });
    let mut done = done.into_inner().unwrap();
    done.sort_by_key(|(idx, _)| *idx);
    done.into_iter().map(|(_, r)| r).collect()
}
