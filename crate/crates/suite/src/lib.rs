//! Reporting harness for the acceptance criteria: each criterion runs once,
//! single-threaded, and prints one PASS/FAIL line with its timing.

use std::time::{Duration, Instant};

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct Line {
    pub id: u32,
    pub title: String,
    pub passed: bool,
    pub elapsed: Duration,
    pub limit: Duration,
    pub detail: String,
}

impl Line {
    pub fn render(&self) -> String {
        format!(
            "{} #{:02} {} [{:.3} s, limit {:.3} s] {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs_f64(),
            self.detail
        )
    }
}

#[derive(Debug)]
pub struct Runner {
    start: Instant,
    lines: Vec<Line>,
}

impl Default for Runner {
    fn default() -> Self {
        Self::new()
    }
}

impl Runner {
    pub fn new() -> Self {
        Runner { start: Instant::now(), lines: Vec::new() }
    }

    /// Runs `check`, which returns a detail string on success and a
    /// description of the violation on failure. Exceeding `limit` fails the
    /// criterion even when the check itself succeeds.
    pub fn run(&mut self, id: u32, title: &str, limit: Duration, check: impl FnOnce() -> Result<String, String>) {
        let t = Instant::now();
        let outcome = check();
        let elapsed = t.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if elapsed > limit {
            passed = false;
            detail = format!("time limit exceeded; {detail}");
        }
        let line = Line { id, title: title.to_string(), passed, elapsed, limit, detail };
        println!("{}", line.render());
        self.lines.push(line);
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    pub fn lines(&self) -> &[Line] {
        &self.lines
    }

    /// Prints the summary and returns the process exit code.
    pub fn finish(&self) -> i32 {
        let failed: Vec<String> =
            self.lines.iter().filter(|l| !l.passed).map(|l| format!("#{:02}", l.id)).collect();
        println!(
            "acceptance: {}/{} criteria pass{}",
            self.lines.len() - failed.len(),
            self.lines.len(),
            if failed.is_empty() { String::new() } else { format!("; failing: {}", failed.join(", ")) }
        );
        i32::from(!failed.is_empty())
    }
}
