//! Generational genetic algorithm over head-election chromosomes.
//!
//! Selection is fitness-proportionate (roulette wheel), recombination is
//! single-point crossover, variation is independent per-bit mutation, and a
//! configurable number of elites survives each generation unchanged. The
//! whole run consumes one deterministic RNG stream, so a trace is
//! reproducible byte-for-byte from `(deployment, params, seed)`.

use crate::clustering::{repair, Chromosome, FitnessBreakdown, FitnessKind};
use crate::energy::RadioModel;
use crate::error::{Error, Result};
use crate::network::Deployment;
use crate::rng::{self, STREAM_GA};
use rand_core::RngCore;
use serde::{Deserialize, Serialize};

/// Tuning knobs of one GA run.
///
/// Defaults: population 100, crossover 0.8, per-bit mutation 0.3, 200
/// generations, one elite, normalized fitness. The 0.3 mutation rate is kept
/// as the documented default even though per-bit semantics make it highly
/// disruptive on long chromosomes; lower it for runs that must converge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GaParams {
    pub population_size: usize,
    pub crossover_rate: f64,
    /// Probability that each individual bit flips during mutation.
    pub mutation_rate: f64,
    pub generations: usize,
    /// Individuals copied unchanged into the next generation.
    pub elitism_count: usize,
    pub fitness: FitnessKind,
}

impl Default for GaParams {
    fn default() -> Self {
        GaParams {
            population_size: 100,
            crossover_rate: 0.8,
            mutation_rate: 0.3,
            generations: 200,
            elitism_count: 1,
            fitness: FitnessKind::default(),
        }
    }
}

impl GaParams {
    pub fn validate(&self) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::InvalidConfig("population_size must be positive".into()));
        }
        if self.generations == 0 {
            return Err(Error::InvalidConfig("generations must be positive".into()));
        }
        for (name, rate) in [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
        ] {
            if !(0.0..=1.0).contains(&rate) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must lie in [0, 1], got {rate}"
                )));
            }
        }
        if self.elitism_count >= self.population_size {
            return Err(Error::InvalidConfig(format!(
                "elitism_count {} must be smaller than population_size {}",
                self.elitism_count, self.population_size
            )));
        }
        self.fitness.validate()
    }
}

/// A chromosome with its evaluated score.
#[derive(Debug, Clone, PartialEq)]
pub struct Individual {
    pub chromosome: Chromosome,
    pub breakdown: FitnessBreakdown,
}

impl Individual {
    fn evaluate(
        chromosome: Chromosome,
        deployment: &Deployment,
        radio: &RadioModel,
        fitness: &FitnessKind,
    ) -> Result<Self> {
        let breakdown = fitness.evaluate(&chromosome, deployment, radio)?;
        Ok(Individual {
            chromosome,
            breakdown,
        })
    }

    fn fitness(&self) -> f64 {
        self.breakdown.fitness
    }
}

/// Snapshot of one generation for the metrics trace.
///
/// `best_*` fields all describe the single best-scoring individual of the
/// generation (ties to the lexicographically lowest chromosome).
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationMetrics {
    pub generation: usize,
    pub best_fitness: f64,
    pub mean_fitness: f64,
    pub best_head_count: usize,
    pub best_rcsd: f64,
    pub best_transfer_energy: f64,
    pub best_chromosome: Chromosome,
}

/// Result of [`evolve`]: the per-generation trace and the best individual
/// ever evaluated.
#[derive(Debug, Clone)]
pub struct GaOutcome {
    /// One record per evaluated generation: index 0 is the initial random
    /// population, index `generations` the final one.
    pub history: Vec<GenerationMetrics>,
    pub best: Individual,
}

/// Selects one index with probability proportional to fitness.
///
/// When any score is non-positive, all scores are shifted by the minimum so
/// weights stay non-negative while ranking is preserved; if the weights then
/// sum to zero (all scores equal) the draw falls back to uniform.
pub fn roulette_select(fitness: &[f64], rng: &mut impl RngCore) -> usize {
    assert!(!fitness.is_empty(), "cannot select from an empty population");
    let min = fitness.iter().copied().fold(f64::INFINITY, f64::min);
    let shift = if min <= 0.0 { -min } else { 0.0 };
    let total: f64 = fitness.iter().map(|f| f + shift).sum();
    if total <= 0.0 || !total.is_finite() {
        return rng::below(rng, fitness.len() as u64) as usize;
    }
    let target = rng::unit(rng) * total;
    let mut acc = 0.0;
    for (i, f) in fitness.iter().enumerate() {
        acc += f + shift;
        if target < acc {
            return i;
        }
    }
    fitness.len() - 1
}

/// Single-point crossover.
///
/// With probability `rate` picks a cut uniformly in `[1, N-1]` and swaps the
/// suffixes; otherwise (and always for chromosomes shorter than 2 bits) the
/// children are copies of the parents.
pub fn single_point_crossover(
    a: &Chromosome,
    b: &Chromosome,
    rate: f64,
    rng: &mut impl RngCore,
) -> Result<(Chromosome, Chromosome)> {
    if a.len() != b.len() {
        return Err(Error::ChromosomeLength {
            got: b.len(),
            expected: a.len(),
        });
    }
    let n = a.len();
    let mut first = a.clone();
    let mut second = b.clone();
    if n >= 2 && rng::unit(rng) < rate {
        let cut = 1 + rng::below(rng, (n - 1) as u64) as usize;
        for i in cut..n {
            first.set(i, b.bit(i));
            second.set(i, a.bit(i));
        }
    }
    Ok((first, second))
}

/// Flips each bit independently with probability `rate`.
///
/// Callers that need a decodable result must [`repair`] afterwards; the GA
/// pipeline does so for every offspring.
pub fn mutate(chromosome: &mut Chromosome, rate: f64, rng: &mut impl RngCore) {
    for i in 0..chromosome.len() {
        if rng::unit(rng) < rate {
            chromosome.flip(i);
        }
    }
}

/// Random chromosome with each bit set with probability one half; dead
/// nodes' bits stay clear so a repair never resurrects them.
fn random_chromosome(deployment: &Deployment, rng: &mut impl RngCore) -> Chromosome {
    let mut c = Chromosome::new(
        deployment
            .nodes
            .iter()
            .map(|n| n.alive && rng::unit(rng) < 0.5)
            .collect(),
    );
    repair(&mut c, deployment);
    c
}

/// Clears head bits on dead nodes. Decoding ignores them anyway; masking
/// keeps every reported chromosome replayable bit-for-bit as a head set.
fn clear_dead_bits(chromosome: &mut Chromosome, deployment: &Deployment) {
    for node in deployment.nodes.iter().filter(|n| !n.alive) {
        chromosome.set(node.id, false);
    }
}

/// Population indices ordered best-first (fitness descending, then
/// lexicographically lowest chromosome).
fn rank(population: &[Individual]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..population.len()).collect();
    order.sort_by(|&i, &j| {
        population[j]
            .fitness()
            .total_cmp(&population[i].fitness())
            .then_with(|| population[i].chromosome.cmp(&population[j].chromosome))
    });
    order
}

fn snapshot(generation: usize, population: &[Individual]) -> GenerationMetrics {
    let best = &population[rank(population)[0]];
    let mean = population.iter().map(Individual::fitness).sum::<f64>() / population.len() as f64;
    GenerationMetrics {
        generation,
        best_fitness: best.fitness(),
        mean_fitness: mean,
        best_head_count: best.breakdown.head_count,
        best_rcsd: best.breakdown.rcsd,
        best_transfer_energy: best.breakdown.transfer_energy,
        best_chromosome: best.chromosome.clone(),
    }
}

/// Runs the GA to completion.
///
/// The trace has `generations + 1` records: the initial random population is
/// generation 0 and each transformation produces the next record. With at
/// least one elite the best fitness in the trace is non-decreasing.
pub fn evolve(
    deployment: &Deployment,
    radio: &RadioModel,
    params: &GaParams,
    seed: u64,
) -> Result<GaOutcome> {
    params.validate()?;
    radio.validate()?;
    if deployment.alive_count() == 0 {
        return Err(Error::InvalidDeployment(
            "cannot evolve clusters for a network with no living nodes".into(),
        ));
    }
    let mut rng = rng::stream(seed, STREAM_GA);

    let mut population: Vec<Individual> = (0..params.population_size)
        .map(|_| {
            let c = random_chromosome(deployment, &mut rng);
            Individual::evaluate(c, deployment, radio, &params.fitness)
        })
        .collect::<Result<_>>()?;

    let mut history = Vec::with_capacity(params.generations + 1);
    history.push(snapshot(0, &population));
    let mut best = population[rank(&population)[0]].clone();

    for generation in 1..=params.generations {
        population = next_generation(&population, deployment, radio, params, &mut rng)?;
        history.push(snapshot(generation, &population));
        let challenger = &population[rank(&population)[0]];
        let improves = challenger.fitness() > best.fitness()
            || (challenger.fitness() == best.fitness()
                && challenger.chromosome < best.chromosome);
        if improves {
            best = challenger.clone();
        }
    }
    Ok(GaOutcome { history, best })
}

fn next_generation(
    population: &[Individual],
    deployment: &Deployment,
    radio: &RadioModel,
    params: &GaParams,
    rng: &mut impl RngCore,
) -> Result<Vec<Individual>> {
    let order = rank(population);
    let mut next: Vec<Individual> = order
        .iter()
        .take(params.elitism_count)
        .map(|&i| population[i].clone())
        .collect();
    let fitness: Vec<f64> = population.iter().map(Individual::fitness).collect();

    while next.len() < params.population_size {
        let pa = roulette_select(&fitness, rng);
        let pb = roulette_select(&fitness, rng);
        let (mut first, mut second) = single_point_crossover(
            &population[pa].chromosome,
            &population[pb].chromosome,
            params.crossover_rate,
            rng,
        )?;
        mutate(&mut first, params.mutation_rate, rng);
        mutate(&mut second, params.mutation_rate, rng);
        clear_dead_bits(&mut first, deployment);
        clear_dead_bits(&mut second, deployment);
        repair(&mut first, deployment);
        repair(&mut second, deployment);
        next.push(Individual::evaluate(first, deployment, radio, &params.fitness)?);
        if next.len() < params.population_size {
            next.push(Individual::evaluate(second, deployment, radio, &params.fitness)?);
        }
    }
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::{generate_deployment, NetworkConfig};

    /// Replays a fixed tape of `next_u64` values.
    struct ScriptedRng {
        tape: Vec<u64>,
        cursor: usize,
    }

    impl ScriptedRng {
        fn new(tape: Vec<u64>) -> Self {
            ScriptedRng { tape, cursor: 0 }
        }
    }

    impl RngCore for ScriptedRng {
        fn next_u32(&mut self) -> u32 {
            self.next_u64() as u32
        }

        fn next_u64(&mut self) -> u64 {
            let v = self.tape[self.cursor];
            self.cursor += 1;
            v
        }

        fn fill_bytes(&mut self, dst: &mut [u8]) {
            for chunk in dst.chunks_mut(8) {
                let bytes = self.next_u64().to_le_bytes();
                chunk.copy_from_slice(&bytes[..chunk.len()]);
            }
        }
    }

    fn small_deployment(n: usize, seed: u64) -> Deployment {
        generate_deployment(&NetworkConfig {
            node_count: n,
            seed,
            ..NetworkConfig::default()
        })
        .unwrap()
    }

    #[test]
    fn mutation_flips_exactly_the_selected_bit() {
        // 16-bit chromosome; the tape makes only the draw at index 7 fall
        // under the rate, so only that bit flips.
        let mut c = Chromosome::from_bit_string("1100110110001110").unwrap();
        let mut tape = vec![u64::MAX; 16];
        tape[7] = 0;
        let mut rng = ScriptedRng::new(tape);
        mutate(&mut c, 0.3, &mut rng);
        assert_eq!(c.to_bit_string(), "1100110010001110");
    }

    #[test]
    fn mutation_rate_boundaries() {
        let mut rng = rng::stream(1, STREAM_GA);
        let original = Chromosome::from_bit_string("10110").unwrap();

        let mut untouched = original.clone();
        mutate(&mut untouched, 0.0, &mut rng);
        assert_eq!(untouched, original);

        let mut complemented = original.clone();
        mutate(&mut complemented, 1.0, &mut rng);
        assert_eq!(complemented.to_bit_string(), "01001");
    }

    #[test]
    fn crossover_swaps_the_suffix_at_the_drawn_cut() {
        let a = Chromosome::from_bit_string("11111111").unwrap();
        let b = Chromosome::from_bit_string("00000000").unwrap();
        // First draw 0 -> unit 0.0 < 0.8, crossover happens. Second draw
        // 2^63 -> below(7) = 3 -> cut after bit 4.
        let mut rng = ScriptedRng::new(vec![0, 1 << 63]);
        let (c1, c2) = single_point_crossover(&a, &b, 0.8, &mut rng).unwrap();
        assert_eq!(c1.to_bit_string(), "11110000");
        assert_eq!(c2.to_bit_string(), "00001111");
    }

    #[test]
    fn crossover_rate_zero_copies_parents() {
        let a = Chromosome::from_bit_string("1010").unwrap();
        let b = Chromosome::from_bit_string("0110").unwrap();
        let mut rng = rng::stream(2, STREAM_GA);
        for _ in 0..20 {
            let (c1, c2) = single_point_crossover(&a, &b, 0.0, &mut rng).unwrap();
            assert_eq!(c1, a);
            assert_eq!(c2, b);
        }
    }

    #[test]
    fn crossover_rejects_mismatched_lengths() {
        let a = Chromosome::zeros(4);
        let b = Chromosome::zeros(5);
        let mut rng = rng::stream(3, STREAM_GA);
        assert!(matches!(
            single_point_crossover(&a, &b, 1.0, &mut rng),
            Err(Error::ChromosomeLength { got: 5, expected: 4 })
        ));
    }

    #[test]
    fn crossover_conserves_bits_per_position() {
        let mut rng = rng::stream(4, STREAM_GA);
        for _ in 0..200 {
            let a = Chromosome::new((0..12).map(|_| rng::unit(&mut rng) < 0.5).collect());
            let b = Chromosome::new((0..12).map(|_| rng::unit(&mut rng) < 0.5).collect());
            let (c1, c2) = single_point_crossover(&a, &b, 1.0, &mut rng).unwrap();
            for i in 0..12 {
                // Each child bit comes from exactly one parent, and the two
                // children take opposite parents at every position.
                assert!(
                    (c1.bit(i) == a.bit(i) && c2.bit(i) == b.bit(i))
                        || (c1.bit(i) == b.bit(i) && c2.bit(i) == a.bit(i))
                );
            }
            // A prefix is preserved: bit 0 is never swapped.
            assert_eq!(c1.bit(0), a.bit(0));
            assert_eq!(c2.bit(0), b.bit(0));
        }
    }

    #[test]
    fn roulette_frequencies_match_probabilities() {
        let fitness = [1.0, 2.0, 3.0, 4.0, 10.0];
        let expected = [0.05, 0.10, 0.15, 0.20, 0.50];
        let mut rng = rng::stream(5, STREAM_GA);
        let draws = 100_000;
        let mut counts = [0u32; 5];
        for _ in 0..draws {
            counts[roulette_select(&fitness, &mut rng)] += 1;
        }
        for (c, p) in counts.iter().zip(expected) {
            let freq = *c as f64 / draws as f64;
            assert!(
                (freq - p).abs() < 0.01,
                "frequency {freq} deviates from {p}"
            );
        }
    }

    #[test]
    fn roulette_two_individuals_follow_one_three_split() {
        let fitness = [1.0, 3.0];
        let mut rng = rng::stream(6, STREAM_GA);
        let draws = 100_000;
        let mut first = 0u32;
        for _ in 0..draws {
            if roulette_select(&fitness, &mut rng) == 0 {
                first += 1;
            }
        }
        let freq = first as f64 / draws as f64;
        assert!((freq - 0.25).abs() < 0.01, "frequency {freq}");
    }

    #[test]
    fn roulette_uniform_fallback_on_equal_scores() {
        let fitness = [0.0, 0.0, 0.0];
        let mut rng = rng::stream(7, STREAM_GA);
        let mut counts = [0u32; 3];
        for _ in 0..30_000 {
            counts[roulette_select(&fitness, &mut rng)] += 1;
        }
        for &c in &counts {
            assert!((9_000..11_000).contains(&c), "count {c}");
        }
    }

    #[test]
    fn roulette_shifts_negative_scores() {
        // After shifting by the minimum, the worst individual has weight
        // zero and is never drawn.
        let fitness = [-1.0, 1.0];
        let mut rng = rng::stream(8, STREAM_GA);
        for _ in 0..1_000 {
            assert_eq!(roulette_select(&fitness, &mut rng), 1);
        }
    }

    #[test]
    fn evolve_is_deterministic_per_seed() {
        let d = small_deployment(20, 10);
        let radio = RadioModel::default();
        let params = GaParams {
            population_size: 12,
            generations: 15,
            ..GaParams::default()
        };
        let a = evolve(&d, &radio, &params, 42).unwrap();
        let b = evolve(&d, &radio, &params, 42).unwrap();
        assert_eq!(a.history, b.history);
        assert_eq!(a.best.chromosome, b.best.chromosome);

        let c = evolve(&d, &radio, &params, 43).unwrap();
        assert_ne!(a.history, c.history);
    }

    #[test]
    fn evolve_trace_has_one_record_per_generation_plus_initial() {
        let d = small_deployment(15, 11);
        let params = GaParams {
            population_size: 10,
            generations: 7,
            ..GaParams::default()
        };
        let out = evolve(&d, &RadioModel::default(), &params, 1).unwrap();
        assert_eq!(out.history.len(), 8);
        for (i, m) in out.history.iter().enumerate() {
            assert_eq!(m.generation, i);
            assert!(m.best_head_count >= 1);
            assert!(m.best_fitness.is_finite());
        }
    }

    #[test]
    fn elitism_makes_best_fitness_non_decreasing() {
        let d = small_deployment(30, 12);
        let params = GaParams {
            population_size: 20,
            generations: 40,
            mutation_rate: 0.1,
            ..GaParams::default()
        };
        let out = evolve(&d, &RadioModel::default(), &params, 9).unwrap();
        for pair in out.history.windows(2) {
            assert!(
                pair[1].best_fitness >= pair[0].best_fitness,
                "best fitness dropped between generations {} and {}",
                pair[0].generation,
                pair[1].generation
            );
        }
        let last = out.history.last().unwrap();
        assert_eq!(out.best.breakdown.fitness, last.best_fitness);
    }

    #[test]
    fn evolve_never_elects_dead_nodes() {
        let mut d = small_deployment(12, 13);
        for id in [0, 5, 11] {
            d.nodes[id].drain(1.0);
        }
        let params = GaParams {
            population_size: 8,
            generations: 10,
            ..GaParams::default()
        };
        let out = evolve(&d, &RadioModel::default(), &params, 3).unwrap();
        for m in &out.history {
            for id in [0, 5, 11] {
                assert!(!m.best_chromosome.bit(id), "dead node {id} elected");
            }
        }
    }

    #[test]
    fn evolve_rejects_invalid_params_and_dead_networks() {
        let d = small_deployment(10, 14);
        let radio = RadioModel::default();
        let bad = GaParams {
            elitism_count: 10,
            population_size: 10,
            ..GaParams::default()
        };
        assert!(evolve(&d, &radio, &bad, 0).is_err());
        let bad = GaParams {
            mutation_rate: 1.5,
            ..GaParams::default()
        };
        assert!(evolve(&d, &radio, &bad, 0).is_err());

        let mut dead = small_deployment(4, 15);
        for n in &mut dead.nodes {
            n.drain(1.0);
        }
        assert!(evolve(&dead, &radio, &GaParams::default(), 0).is_err());
    }

    #[test]
    fn mean_fitness_lies_within_population_range() {
        let d = small_deployment(18, 16);
        let params = GaParams {
            population_size: 14,
            generations: 6,
            ..GaParams::default()
        };
        let out = evolve(&d, &RadioModel::default(), &params, 21).unwrap();
        for m in &out.history {
            assert!(m.mean_fitness <= m.best_fitness + 1e-12);
        }
    }
}
