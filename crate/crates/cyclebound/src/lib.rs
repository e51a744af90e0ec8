//! Certified bounds and exact enumeration for cycles and paths in sparse
//! multigraphs.
//!
//! The library has four layers:
//!
//! * [`cert`] and [`exact`] — certified interval arithmetic with
//!   arbitrary-precision dyadic endpoints, plus exact arithmetic in the
//!   quartic field ℚ(ρ), ρ = (4/3)^(1/4), for resolving ties that no
//!   interval refinement can separate;
//! * [`bounds`] — certified evaluation of the weight sequences b, a, α, λ,
//!   the funnel weight φ, and the closed-form path/cycle/permanent bounds
//!   built from them (q, q′, γ_d, the Brègman row-sum product);
//! * [`graph`], [`enumerate`], [`permanent`], [`census`],
//!   [`constructions`], [`sample`] — exact combinatorics: loopless
//!   multigraphs, path/cycle counting, Ryser permanents, exhaustive
//!   small-graph census, the extremal construction families, and seeded
//!   random instance generators;
//! * [`checks`] and [`verify`] — the certification surface: per-instance
//!   bound reports and the named verification suites producing
//!   machine-readable [`verify::VerificationReport`]s.
//!
//! Counting and scanning operations are data-parallel. The `parallel`
//! feature (on by default) pulls in rayon; every operation also has a
//! sequential path selected at runtime through [`Mode`], and results are
//! bit-identical across modes and thread counts.

pub mod bounds;
pub mod census;
pub mod cert;
pub mod checks;
pub mod constructions;
pub mod enumerate;
pub mod exact;
pub mod graph;
pub mod permanent;
pub mod sample;
pub mod verify;

pub use cert::{CertReal, Tri, DEFAULT_PREC, MAX_PREC};
pub use graph::Graph;

/// Execution strategy for the data-parallel operations.
///
/// `Parallel` uses the rayon thread pool when the `parallel` feature is
/// compiled in and degrades to sequential execution otherwise, so it is
/// always safe to request. All results are independent of the mode and of
/// the number of worker threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Map a task list, in parallel when requested and compiled in. The output
/// order always matches the input order.
pub(crate) fn map_tasks<T, R, F>(mode: Mode, tasks: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode == Mode::Parallel {
        use rayon::prelude::*;
        return tasks.into_par_iter().map(f).collect();
    }
    let _ = mode;
    tasks.into_iter().map(f).collect()
}
