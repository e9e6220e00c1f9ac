//! Seeded tabu search for good cyclic colorings.
//!
//! The state is a total assignment of distances `1..=n/2` to colors. Its
//! score is the number of monochromatic target cliques through vertex 0,
//! summed over colors; by vertex-transitivity this is zero exactly when the
//! coloring is good. Each iteration recolors one distance, choosing the
//! best non-tabu move (aspiration admits a tabu move that beats the best
//! score seen in the current restart).

use std::collections::{HashSet, VecDeque};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::{ColoringCertificate, DistanceSet};
use crate::circulant::CirculantGraph;
use crate::clique::{count_cliques_through_zero, for_each_clique_containing};
use crate::error::{Error, Result};
use crate::verifier::verify;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub targets: Vec<usize>,
    pub seed: u64,
    /// Tabu iterations per restart.
    pub max_iters: u64,
    pub restarts: u64,
    /// Iterations a reversed move stays forbidden.
    pub tabu_tenure: usize,
    pub workers: usize,
}

impl SearchConfig {
    pub const DEFAULT_MAX_ITERS: u64 = 10_000;
    pub const DEFAULT_RESTARTS: u64 = 10;

    pub fn new(n: usize, targets: Vec<usize>, seed: u64) -> Self {
        let tabu_tenure = default_tenure(n, targets.len());
        SearchConfig {
            n,
            targets,
            seed,
            max_iters: Self::DEFAULT_MAX_ITERS,
            restarts: Self::DEFAULT_RESTARTS,
            tabu_tenure,
            workers: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.n < 3 {
            return fail(format!("n = {} is below 3", self.n));
        }
        if self.targets.len() < 2 {
            return fail("need at least two targets".into());
        }
        if let Some(t) = self.targets.iter().find(|&&t| t < 2) {
            return fail(format!("target {t} is below 2"));
        }
        if self.max_iters < 1 {
            return fail("max_iters must be at least 1".into());
        }
        if self.workers < 1 {
            return fail("workers must be at least 1".into());
        }
        Ok(())
    }
}

/// Roughly a third of the neighborhood size, clamped to `1..=12`.
pub fn default_tenure(n: usize, colors: usize) -> usize {
    ((n / 2) * colors.saturating_sub(1) / 3).clamp(1, 12)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveRecord {
    pub distance: usize,
    /// 1-based colors.
    pub from: usize,
    pub to: usize,
    pub score_before: u64,
    pub score_after: u64,
    pub aspirated: bool,
}

#[derive(Clone, Copy, Debug)]
struct TabuEntry {
    distance: usize,
    color: usize,
    expires: u64,
}

/// Evolving assignment plus its incrementally maintained score.
#[derive(Clone, Debug)]
pub struct SearchState {
    n: usize,
    targets: Vec<usize>,
    /// `assignment[d - 1]` is the 0-based color of distance `d`.
    assignment: Vec<usize>,
    graphs: Vec<CirculantGraph>,
    score: u64,
    best_score: u64,
    best_assignment: Vec<usize>,
    tabu: VecDeque<TabuEntry>,
    tenure: usize,
    iter: u64,
}

impl SearchState {
    /// `assignment[d - 1]` is the 1-based color of distance `d`.
    pub fn new(n: usize, targets: Vec<usize>, assignment: &[usize], tenure: usize) -> Result<Self> {
        let m = targets.len();
        if assignment.len() != n / 2 {
            return Err(Error::Config(format!(
                "assignment covers {} distances, expected {}",
                assignment.len(),
                n / 2
            )));
        }
        if let Some(&c) = assignment.iter().find(|&&c| c == 0 || c > m) {
            return Err(Error::Config(format!("color {c} outside 1..={m}")));
        }
        let assignment: Vec<usize> = assignment.iter().map(|c| c - 1).collect();
        let graphs = (0..m)
            .map(|c| CirculantGraph::with_color(n, class_of(&assignment, c), c + 1))
            .collect::<Result<Vec<_>>>()?;
        let mut state = SearchState {
            n,
            targets,
            best_assignment: assignment.clone(),
            assignment,
            graphs,
            score: 0,
            best_score: 0,
            tabu: VecDeque::new(),
            tenure,
            iter: 0,
        };
        state.score = state.recompute_score();
        state.best_score = state.score;
        Ok(state)
    }

    pub fn from_certificate(cert: &ColoringCertificate, tenure: usize) -> Result<Self> {
        let assignment: Vec<usize> = (1..=cert.n / 2)
            .map(|d| cert.color_of_distance(d).unwrap_or(0))
            .collect();
        Self::new(cert.n, cert.targets.clone(), &assignment, tenure)
    }

    /// Uniformly random color per distance.
    pub fn random(
        n: usize,
        targets: Vec<usize>,
        tenure: usize,
        rng: &mut impl Rng,
    ) -> Result<Self> {
        let m = targets.len();
        let assignment: Vec<usize> = (0..n / 2).map(|_| rng.random_range(1..=m)).collect();
        Self::new(n, targets, &assignment, tenure)
    }

    pub fn score(&self) -> u64 {
        self.score
    }

    pub fn best_score(&self) -> u64 {
        self.best_score
    }

    /// 1-based color of each distance, `[d - 1]`.
    pub fn assignment(&self) -> Vec<usize> {
        self.assignment.iter().map(|c| c + 1).collect()
    }

    pub fn best_assignment(&self) -> Vec<usize> {
        self.best_assignment.iter().map(|c| c + 1).collect()
    }

    pub fn color_count(&self) -> usize {
        self.targets.len()
    }

    pub fn iteration(&self) -> u64 {
        self.iter
    }

    pub fn to_certificate(&self, name: Option<String>) -> ColoringCertificate {
        let colors = (0..self.targets.len())
            .map(|c| class_of(&self.assignment, c))
            .collect();
        ColoringCertificate::new(self.n, colors, self.targets.clone(), name)
            .expect("a total assignment is always a partition")
    }

    /// Score from scratch: cliques through 0 in every color.
    pub fn recompute_score(&self) -> u64 {
        self.graphs
            .iter()
            .zip(&self.targets)
            .map(|(g, &t)| count_cliques_through_zero(g, t))
            .sum()
    }

    fn graph_toggled(&self, color: usize, distance: usize, present: bool) -> CirculantGraph {
        let mut set = self.graphs[color].distances().clone();
        if present {
            set.insert(distance);
        } else {
            set.remove(distance);
        }
        CirculantGraph::with_color(self.n, set, color + 1).expect("distance in range")
    }

    /// Score after recoloring `distance` to 0-based `to`, without applying.
    fn score_if_moved(&self, distance: usize, to: usize, loss: u64) -> u64 {
        let grown = self.graph_toggled(to, distance, true);
        self.score - loss + cliques_through_zero_using(&grown, distance, self.targets[to])
    }

    fn loss_of(&self, distance: usize) -> u64 {
        let from = self.assignment[distance - 1];
        cliques_through_zero_using(&self.graphs[from], distance, self.targets[from])
    }

    fn is_tabu(&self, distance: usize, color: usize) -> bool {
        self.tabu
            .iter()
            .any(|e| e.distance == distance && e.color == color && e.expires >= self.iter)
    }

    /// Recolors `distance` to 1-based color `to`, updating the score
    /// incrementally. Does not touch the tabu list.
    pub fn apply_move(&mut self, distance: usize, to: usize) -> MoveRecord {
        assert!(
            (1..=self.n / 2).contains(&distance),
            "distance {distance} outside 1..={}",
            self.n / 2
        );
        assert!(
            (1..=self.color_count()).contains(&to),
            "color {to} out of range"
        );
        let to = to - 1;
        let from = self.assignment[distance - 1];
        let before = self.score;
        if from != to {
            let loss = self.loss_of(distance);
            let after = self.score_if_moved(distance, to, loss);
            self.graphs[from] = self.graph_toggled(from, distance, false);
            self.graphs[to] = self.graph_toggled(to, distance, true);
            self.assignment[distance - 1] = to;
            self.score = after;
            if after < self.best_score {
                self.best_score = after;
                self.best_assignment = self.assignment.clone();
            }
        }
        MoveRecord {
            distance,
            from: from + 1,
            to: to + 1,
            score_before: before,
            score_after: self.score,
            aspirated: false,
        }
    }

    /// One tabu step: the admissible recoloring with the lowest resulting
    /// score, ties to the smallest distance and then the smallest color.
    pub fn propose_and_apply_move(&mut self) -> MoveRecord {
        let m = self.color_count();
        assert!(m >= 2, "need at least two colors to move between");
        self.iter += 1;
        let iter = self.iter;
        self.tabu.retain(|e| e.expires >= iter);

        let half = self.n / 2;
        let mut scored = Vec::with_capacity(half * (m - 1));
        for d in 1..=half {
            let from = self.assignment[d - 1];
            let loss = self.loss_of(d);
            for c in (0..m).filter(|&c| c != from) {
                scored.push((self.score_if_moved(d, c, loss), d, c));
            }
        }

        loop {
            let mut choice: Option<(u64, usize, usize, bool)> = None;
            for &(score, d, c) in &scored {
                let tabu = self.is_tabu(d, c);
                if tabu && score >= self.best_score {
                    continue;
                }
                if choice.is_none_or(|(best, ..)| score < best) {
                    choice = Some((score, d, c, tabu));
                }
            }
            if let Some((_, d, c, aspirated)) = choice {
                let from = self.assignment[d - 1];
                let mut record = self.apply_move(d, c + 1);
                record.aspirated = aspirated;
                self.tabu.push_back(TabuEntry {
                    distance: d,
                    color: from,
                    expires: iter + self.tenure as u64,
                });
                return record;
            }
            // everything is tabu: drop the oldest entry and retry
            self.tabu
                .pop_front()
                .expect("some move is admissible once the tabu list is empty");
        }
    }
}

/// Exact score from scratch for a state.
pub fn objective(state: &SearchState) -> u64 {
    state.recompute_score()
}

fn class_of(assignment: &[usize], color: usize) -> DistanceSet {
    assignment
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == color)
        .map(|(i, _)| i + 1)
        .collect()
}

/// Number of `K_t` through vertex 0 in `g` having at least one edge at
/// circular distance `d`; `g` must contain `d`.
///
/// Such a clique `K` with a `d`-edge `{x, x + d}` shifts to `K - x`, a
/// clique containing `{0, d}`; conversely every clique `K'` containing
/// `{0, d}` and any `y` in it give the clique `K' - y` through 0. So the
/// wanted set is the image of the (much smaller) set of cliques on
/// `{0, d}` under all such shifts.
pub(crate) fn cliques_through_zero_using(g: &CirculantGraph, d: usize, t: usize) -> u64 {
    debug_assert!(g.distances().contains(d));
    let n = g.n();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for_each_clique_containing(g, &[0, d], t, |clique| {
        for &y in clique {
            let mut shifted: Vec<usize> = clique.iter().map(|&v| (v + n - y) % n).collect();
            shifted.sort_unstable();
            seen.insert(shifted);
        }
    });
    seen.len() as u64
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    /// A certificate that passed [`verify`], if one was found.
    pub certificate: Option<ColoringCertificate>,
    /// `iter=<i> restart=<r> score=<s> best=<b>` lines, then
    /// `result=found` or `result=exhausted`.
    pub log: Vec<String>,
}

impl SearchOutcome {
    pub fn found(&self) -> bool {
        self.certificate.is_some()
    }
}

struct WorkerResult {
    assignment: Option<Vec<usize>>,
    log: Vec<String>,
}

fn run_worker(config: &SearchConfig, seed: u64, stop: &AtomicBool) -> Result<WorkerResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut log = Vec::new();
    let mut global_best = u64::MAX;

    for restart in 0..config.restarts {
        if stop.load(Ordering::Relaxed) {
            break;
        }
        let mut state = SearchState::random(
            config.n,
            config.targets.clone(),
            config.tabu_tenure,
            &mut rng,
        )?;
        global_best = global_best.min(state.score());
        log.push(format!(
            "iter=0 restart={restart} score={} best={global_best}",
            state.score()
        ));
        if state.score() == 0 {
            return Ok(WorkerResult {
                assignment: Some(state.assignment()),
                log,
            });
        }
        for iter in 1..=config.max_iters {
            if stop.load(Ordering::Relaxed) {
                break;
            }
            let restart_best = state.best_score();
            state.propose_and_apply_move();
            if state.score() < restart_best {
                global_best = global_best.min(state.score());
                log.push(format!(
                    "iter={iter} restart={restart} score={} best={global_best}",
                    state.score()
                ));
            }
            if state.score() == 0 {
                return Ok(WorkerResult {
                    assignment: Some(state.assignment()),
                    log,
                });
            }
        }
    }
    Ok(WorkerResult {
        assignment: None,
        log,
    })
}

/// Runs `restarts` tabu runs of `max_iters` steps from seeded random
/// assignments. With one worker the outcome is a pure function of the
/// config. With `W > 1` workers, worker `w` uses seed `seed + w` and the
/// first to succeed wins, so which certificate comes back may vary between
/// runs.
pub fn search(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let stop = AtomicBool::new(false);

    let (winner, mut log) = if config.workers == 1 {
        let result = run_worker(config, config.seed, &stop)?;
        (result.assignment.map(|a| (config.seed, a)), result.log)
    } else {
        let slot: OnceLock<(u64, Vec<usize>)> = OnceLock::new();
        let results: Vec<Result<WorkerResult>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..config.workers)
                .map(|w| {
                    let seed = config.seed.wrapping_add(w as u64);
                    let (stop, slot) = (&stop, &slot);
                    scope.spawn(move || {
                        let result = run_worker(config, seed, stop)?;
                        if let Some(a) = &result.assignment {
                            if slot.set((seed, a.clone())).is_ok() {
                                stop.store(true, Ordering::Relaxed);
                            }
                        }
                        Ok(result)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("search worker panicked"))
                .collect()
        });
        let mut log = Vec::new();
        for (w, result) in results.into_iter().enumerate() {
            log.extend(result?.log.into_iter().map(|l| format!("worker={w} {l}")));
        }
        (slot.into_inner(), log)
    };

    let certificate = match winner {
        Some((seed, assignment)) => {
            let state = SearchState::new(config.n, config.targets.clone(), &assignment, 0)?;
            let cert = state.to_certificate(Some(format!("search_n{}_seed{seed}", config.n)));
            let report = verify(&cert)?;
            assert!(
                report.is_valid(),
                "search returned a coloring that fails verification"
            );
            Some(cert)
        }
        None => None,
    };
    log.push(format!(
        "result={}",
        if certificate.is_some() {
            "found"
        } else {
            "exhausted"
        }
    ));
    Ok(SearchOutcome { certificate, log })
}
