//! Brute-force oracles and instance generators shared by the integration tests.
//!
//! Everything here works on a dense 0/1 matrix and recomputes the scheduling
//! predicates straight from their definitions, without going through the library.

#![allow(dead_code)]

use argsched_core::{Assignment, FixedDecisions, Instance, Schedule};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub struct Matrix {
    pub m: usize,
    pub n: usize,
    /// `x[i][j]` for 0-based machine `i` and job `j`.
    pub x: Vec<Vec<bool>>,
    pub p: Vec<u64>,
}

impl Matrix {
    pub fn new(inst: &Instance, s: &Schedule) -> Self {
        let (m, n) = (inst.machines(), inst.jobs());
        let mut x = vec![vec![false; n]; m];
        for a in s.iter() {
            x[a.machine - 1][a.job - 1] = true;
        }
        Matrix {
            m,
            n,
            x,
            p: inst.processing_times().to_vec(),
        }
    }

    pub fn loads(&self) -> Vec<u64> {
        (0..self.m)
            .map(|i| {
                (0..self.n)
                    .filter(|&j| self.x[i][j])
                    .map(|j| self.p[j])
                    .sum()
            })
            .collect()
    }

    pub fn feasible(&self) -> bool {
        (0..self.n).all(|j| (0..self.m).filter(|&i| self.x[i][j]).count() == 1)
    }

    fn critical(&self) -> Vec<(usize, usize)> {
        let c = self.loads();
        let cmax = c.iter().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        for (i, row) in self.x.iter().enumerate() {
            for (j, &assigned) in row.iter().enumerate() {
                if assigned && c[i] == cmax {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `C_i - C_{i'} <= p_j` for every critical `(i, j)` and `i' != i`.
    pub fn sep_holds(&self) -> bool {
        let c = self.loads();
        self.critical().into_iter().all(|(i, j)| {
            (0..self.m)
                .filter(|&k| k != i)
                .all(|k| c[i] as i64 - c[k] as i64 <= self.p[j] as i64)
        })
    }

    /// No critical `(i, j)` with assigned `(k, l)`, `k != i`, `l != j`, `p_j > p_l` and
    /// `C_i + p_l > C_k + p_j`.
    pub fn pep_holds(&self) -> bool {
        let c = self.loads();
        for (i, j) in self.critical() {
            for k in (0..self.m).filter(|&k| k != i) {
                for l in (0..self.n).filter(|&l| l != j && self.x[k][l]) {
                    if self.p[j] > self.p[l] && c[i] + self.p[l] > c[k] + self.p[j] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn satisfies(&self, d: &FixedDecisions) -> bool {
        d.negative()
            .iter()
            .all(|a| !self.x[a.machine - 1][a.job - 1])
            && d.positive()
                .iter()
                .all(|a| self.x[a.machine - 1][a.job - 1])
    }

    pub fn cmax(&self) -> u64 {
        self.loads().into_iter().max().unwrap_or(0)
    }
}

/// Every job-to-machine map of the instance, as schedules.
pub fn all_maps(inst: &Instance) -> Vec<Schedule> {
    let (m, n) = (inst.machines(), inst.jobs());
    let total = m.pow(n as u32);
    (0..total)
        .map(|mut code| {
            let mut map = vec![0; n];
            for slot in map.iter_mut().rev() {
                *slot = code % m + 1;
                code /= m;
            }
            Schedule::from_machine_map(&map)
        })
        .collect()
}

/// Every subset of the `m x n` grid, as schedules.
pub fn all_relations(inst: &Instance) -> Vec<Schedule> {
    let cells: Vec<_> = (1..=inst.machines())
        .flat_map(|i| (1..=inst.jobs()).map(move |j| Assignment::new(i, j)))
        .collect();
    (0u64..1 << cells.len())
        .map(|bits| {
            cells
                .iter()
                .enumerate()
                .filter(|(k, _)| bits >> k & 1 == 1)
                .map(|(_, &a)| a)
                .collect()
        })
        .collect()
}

pub fn random_relation(rng: &mut StdRng, inst: &Instance) -> Schedule {
    let density = rng.gen_range(0.1..0.7);
    (1..=inst.machines())
        .flat_map(|i| (1..=inst.jobs()).map(move |j| Assignment::new(i, j)))
        .filter(|_| rng.gen_bool(density))
        .collect()
}

pub fn random_instance(rng: &mut StdRng, m: usize, n: usize, max_p: u64) -> Instance {
    Instance::new(m, (0..n).map(|_| rng.gen_range(1..=max_p)).collect()).unwrap()
}

/// The sampled desk grid: `per_shape` instances for each `m in 1..=3`, `n in 1..=5`.
pub fn desk_grid(seed: u64, per_shape: usize) -> Vec<Instance> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for m in 1..=3 {
        for n in 1..=5 {
            for _ in 0..per_shape {
                out.push(random_instance(&mut rng, m, n, 6));
            }
        }
    }
    out
}

/// A random well-formed decision pair: disjoint, at most one positive machine per job.
pub fn random_decisions(rng: &mut StdRng, inst: &Instance) -> FixedDecisions {
    let mut negative = Vec::new();
    let mut positive = Vec::new();
    for j in 1..=inst.jobs() {
        let pos_machine = rng
            .gen_bool(0.25)
            .then(|| rng.gen_range(1..=inst.machines()));
        if let Some(i) = pos_machine {
            positive.push(Assignment::new(i, j));
        }
        for i in 1..=inst.machines() {
            if Some(i) != pos_machine && rng.gen_bool(0.2) {
                negative.push(Assignment::new(i, j));
            }
        }
    }
    FixedDecisions::new(negative, positive).unwrap()
}
