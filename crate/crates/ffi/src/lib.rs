//! C ABI for the clustering and lifetime simulation library.
//!
//! Conventions:
//! * Handles (`WsngaDeployment`, `WsngaGaResult`, `WsngaLifetime`) are
//!   opaque; create through the constructors, release through the matching
//!   `_free`. A `_free` accepts null.
//! * Every fallible call returns [`WsngaStatus`]; on anything but `Ok` the
//!   detail text is available from [`wsnga_last_error_message`] until the
//!   next failing call on the same thread.
//! * Returned strings are NUL-terminated, owned by the caller, and must be
//!   released with [`wsnga_string_free`].
//! * Out-parameters are written only on `Ok`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::num::NonZeroU32;
use std::panic::{catch_unwind, AssertUnwindSafe};

use wsnga::clustering::{FitnessKind, FitnessWeights};
use wsnga::energy::{RadioModel, ReceiveCount};
use wsnga::error::Error;
use wsnga::ga::{evolve, GaOutcome, GaParams};
use wsnga::leach::LeachParams;
use wsnga::lifetime::{run_lifetime, LifetimeConfig, LifetimeOutcome, Protocol};
use wsnga::network::{generate_deployment, Deployment, NetworkConfig, Point};
use wsnga::oracle::exhaustive_best;

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WsngaStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    Utf8 = 2,
    /// A configuration value violated its invariants.
    InvalidConfig = 3,
    /// The deployment was rejected (wrong ids, nothing alive, ...).
    InvalidDeployment = 4,
    /// The chromosome elects no living head.
    DegenerateChromosome = 5,
    /// A chromosome string had the wrong length or characters.
    BadChromosome = 6,
    /// The exhaustive search cap was exceeded.
    TooLarge = 7,
    /// Filesystem or serialization trouble.
    Io = 8,
    /// A defect: the library panicked and the unwind was contained.
    Panic = 9,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error message unavailable").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = message);
}

fn fail(error: Error) -> WsngaStatus {
    let status = match &error {
        Error::InvalidConfig(_) | Error::Json(_) | Error::ZeroBits => WsngaStatus::InvalidConfig,
        Error::InvalidDeployment(_) => WsngaStatus::InvalidDeployment,
        Error::DegenerateChromosome => WsngaStatus::DegenerateChromosome,
        Error::ChromosomeLength { .. } | Error::BadBitString(_) => WsngaStatus::BadChromosome,
        Error::ExhaustiveTooLarge { .. } => WsngaStatus::TooLarge,
        Error::Io(_) | Error::Csv(_) => WsngaStatus::Io,
    };
    set_error(error.to_string());
    status
}

fn null_pointer(name: &str) -> WsngaStatus {
    set_error(format!("{name} must not be null"));
    WsngaStatus::NullPointer
}

/// Runs an entry point with a panic fence.
fn guard(f: impl FnOnce() -> WsngaStatus) -> WsngaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic".into());
            WsngaStatus::Panic
        }
    }
}

/// Detail text of the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn wsnga_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Releases a string returned by this library. Accepts null.
#[no_mangle]
pub unsafe extern "C" fn wsnga_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn export_string(s: String, out: *mut *mut c_char) -> WsngaStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            WsngaStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL".into());
            WsngaStatus::Io
        }
    }
}

unsafe fn utf8_arg<'a>(ptr: *const c_char, name: &str) -> Result<&'a str, WsngaStatus> {
    if ptr.is_null() {
        return Err(null_pointer(name));
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error(format!("{name} is not valid UTF-8"));
        WsngaStatus::Utf8
    })
}

// ---------------------------------------------------------------------------
// Plain-data mirror types
// ---------------------------------------------------------------------------

/// First-order radio constants.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaRadio {
    pub electronics_j_per_bit: f64,
    pub amplifier_j_per_bit_m2: f64,
    pub aggregation_j_per_bit: f64,
    pub initial_node_energy_j: f64,
    /// Zero bills `members - 1` receptions per cluster, nonzero bills one
    /// per member.
    pub bill_per_member_receive: u8,
}

impl WsngaRadio {
    fn to_model(self) -> RadioModel {
        RadioModel {
            electronics_j_per_bit: self.electronics_j_per_bit,
            amplifier_j_per_bit_m2: self.amplifier_j_per_bit_m2,
            aggregation_j_per_bit: self.aggregation_j_per_bit,
            initial_node_energy: self.initial_node_energy_j,
            receive_count: if self.bill_per_member_receive == 0 {
                ReceiveCount::OneLessThanMembers
            } else {
                ReceiveCount::PerMember
            },
        }
    }
}

/// Which score formula to maximize.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WsngaFitnessTag {
    /// Raw mixed-unit sum.
    Unnormalized = 0,
    /// Normalized, energy-dominant form (the default).
    Normalized = 1,
    /// Normalized form with caller-chosen term weights.
    Weighted = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaFitness {
    pub tag: WsngaFitnessTag,
    /// Read only when `tag` is `Weighted`.
    pub energy_weight: f64,
    pub distance_weight: f64,
    pub head_weight: f64,
}

impl WsngaFitness {
    fn to_kind(self) -> FitnessKind {
        match self.tag {
            WsngaFitnessTag::Unnormalized => FitnessKind::Unnormalized,
            WsngaFitnessTag::Normalized => FitnessKind::Normalized,
            WsngaFitnessTag::Weighted => FitnessKind::Weighted(FitnessWeights {
                energy: self.energy_weight,
                distance: self.distance_weight,
                heads: self.head_weight,
            }),
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaGaConfig {
    pub population_size: u32,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    pub generations: u32,
    pub elitism_count: u32,
    pub fitness: WsngaFitness,
}

impl WsngaGaConfig {
    fn to_params(self) -> GaParams {
        GaParams {
            population_size: self.population_size as usize,
            crossover_rate: self.crossover_rate,
            mutation_rate: self.mutation_rate,
            generations: self.generations as usize,
            elitism_count: self.elitism_count as usize,
            fitness: self.fitness.to_kind(),
        }
    }
}

/// Score of one clustering.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaBreakdown {
    pub fitness: f64,
    pub transfer_energy_j: f64,
    pub total_distance_m: f64,
    pub rcsd_m: f64,
    pub head_count: u32,
    pub node_count: u32,
}

fn export_breakdown(b: &wsnga::clustering::FitnessBreakdown) -> WsngaBreakdown {
    WsngaBreakdown {
        fitness: b.fitness,
        transfer_energy_j: b.transfer_energy,
        total_distance_m: b.total_distance,
        rcsd_m: b.rcsd,
        head_count: b.head_count as u32,
        node_count: b.node_count as u32,
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaGenerationRow {
    pub generation: u32,
    pub best_fitness: f64,
    pub mean_fitness: f64,
    pub best_head_count: u32,
    pub best_rcsd_m: f64,
    pub best_transfer_energy_j: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaRoundRow {
    /// 1-based round number.
    pub round: u64,
    pub alive_count: u32,
    pub cumulative_energy_j: f64,
    pub head_count: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaLifetimeSummary {
    pub has_first_death: u8,
    pub first_death_round: u64,
    pub has_last_death: u8,
    pub last_death_round: u64,
    pub total_energy_j: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct WsngaLifetimeOptions {
    pub total_rounds: u64,
    pub rounds_per_configuration: u64,
    /// Zero clusters with the genetic search, nonzero with LEACH rotation.
    pub use_leach: u8,
    /// Read only when `use_leach` is nonzero.
    pub leach_head_probability: f64,
    /// Read only when `use_leach` is zero.
    pub ga: WsngaGaConfig,
}

// ---------------------------------------------------------------------------
// Defaults
// ---------------------------------------------------------------------------

fn default_radio() -> WsngaRadio {
    let m = RadioModel::default();
    WsngaRadio {
        electronics_j_per_bit: m.electronics_j_per_bit,
        amplifier_j_per_bit_m2: m.amplifier_j_per_bit_m2,
        aggregation_j_per_bit: m.aggregation_j_per_bit,
        initial_node_energy_j: m.initial_node_energy,
        bill_per_member_receive: 0,
    }
}

fn default_ga() -> WsngaGaConfig {
    let p = GaParams::default();
    WsngaGaConfig {
        population_size: p.population_size as u32,
        crossover_rate: p.crossover_rate,
        mutation_rate: p.mutation_rate,
        generations: p.generations as u32,
        elitism_count: p.elitism_count as u32,
        fitness: WsngaFitness {
            tag: WsngaFitnessTag::Normalized,
            energy_weight: 0.0,
            distance_weight: 0.0,
            head_weight: 0.0,
        },
    }
}

/// Writes the default radio constants.
#[no_mangle]
pub unsafe extern "C" fn wsnga_radio_default(out: *mut WsngaRadio) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        *out = default_radio();
        WsngaStatus::Ok
    })
}

/// Writes the default search parameters.
#[no_mangle]
pub unsafe extern "C" fn wsnga_ga_config_default(out: *mut WsngaGaConfig) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        *out = default_ga();
        WsngaStatus::Ok
    })
}

/// Writes the default lifetime options (genetic clustering).
#[no_mangle]
pub unsafe extern "C" fn wsnga_lifetime_options_default(
    out: *mut WsngaLifetimeOptions,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let c = LifetimeConfig::default();
        *out = WsngaLifetimeOptions {
            total_rounds: c.total_rounds,
            rounds_per_configuration: c.rounds_per_configuration,
            use_leach: 0,
            leach_head_probability: LeachParams::default().head_probability,
            ga: default_ga(),
        };
        WsngaStatus::Ok
    })
}

// ---------------------------------------------------------------------------
// Deployment handle
// ---------------------------------------------------------------------------

/// Opaque network deployment.
pub struct WsngaDeployment(Deployment);

unsafe fn deployment_ref<'a>(
    handle: *const WsngaDeployment,
) -> Result<&'a Deployment, WsngaStatus> {
    if handle.is_null() {
        return Err(null_pointer("deployment"));
    }
    Ok(&(*handle).0)
}

fn packet_bits_arg(packet_bits: u32) -> Result<NonZeroU32, WsngaStatus> {
    NonZeroU32::new(packet_bits).ok_or_else(|| fail(Error::ZeroBits))
}

/// Places `node_count` nodes uniformly at random in the centered field and
/// hands back an owning handle.
#[no_mangle]
pub unsafe extern "C" fn wsnga_deployment_generate(
    node_count: u32,
    field_width: f64,
    field_height: f64,
    sink_x: f64,
    sink_y: f64,
    packet_bits: u32,
    seed: u64,
    out: *mut *mut WsngaDeployment,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let packet_bits = match packet_bits_arg(packet_bits) {
            Ok(b) => b,
            Err(status) => return status,
        };
        let config = NetworkConfig {
            node_count: node_count as usize,
            field_width,
            field_height,
            sink_position: Point::new(sink_x, sink_y),
            seed,
            packet_bits,
        };
        match generate_deployment(&config) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(WsngaDeployment(d)));
                WsngaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Parses a deployment JSON document (same schema `wsnga deploy` writes).
#[no_mangle]
pub unsafe extern "C" fn wsnga_deployment_from_json(
    json: *const c_char,
    packet_bits: u32,
    out: *mut *mut WsngaDeployment,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let json = match utf8_arg(json, "json") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let packet_bits = match packet_bits_arg(packet_bits) {
            Ok(b) => b,
            Err(status) => return status,
        };
        match Deployment::from_json(json, packet_bits) {
            Ok(d) => {
                *out = Box::into_raw(Box::new(WsngaDeployment(d)));
                WsngaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Serializes the deployment; positions reparse bit-identically.
#[no_mangle]
pub unsafe extern "C" fn wsnga_deployment_to_json(
    deployment: *const WsngaDeployment,
    out: *mut *mut c_char,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        let deployment = match deployment_ref(deployment) {
            Ok(d) => d,
            Err(status) => return status,
        };
        match deployment.to_json() {
            Ok(json) => export_string(json, out),
            Err(e) => fail(e),
        }
    })
}

/// Node count, zero for null.
#[no_mangle]
pub unsafe extern "C" fn wsnga_deployment_node_count(
    deployment: *const WsngaDeployment,
) -> u32 {
    if deployment.is_null() {
        return 0;
    }
    (*deployment).0.node_count() as u32
}

/// Living node count, zero for null.
#[no_mangle]
pub unsafe extern "C" fn wsnga_deployment_alive_count(
    deployment: *const WsngaDeployment,
) -> u32 {
    if deployment.is_null() {
        return 0;
    }
    (*deployment).0.alive_count() as u32
}

#[no_mangle]
pub unsafe extern "C" fn wsnga_deployment_free(deployment: *mut WsngaDeployment) {
    if !deployment.is_null() {
        drop(Box::from_raw(deployment));
    }
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Scores one chromosome, given as a '0'/'1' string with one character per
/// node.
#[no_mangle]
pub unsafe extern "C" fn wsnga_evaluate(
    deployment: *const WsngaDeployment,
    radio: *const WsngaRadio,
    fitness: *const WsngaFitness,
    chromosome: *const c_char,
    out: *mut WsngaBreakdown,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if radio.is_null() {
            return null_pointer("radio");
        }
        if fitness.is_null() {
            return null_pointer("fitness");
        }
        let deployment = match deployment_ref(deployment) {
            Ok(d) => d,
            Err(status) => return status,
        };
        let bits = match utf8_arg(chromosome, "chromosome") {
            Ok(s) => s,
            Err(status) => return status,
        };
        let chromosome = match wsnga::clustering::Chromosome::from_bit_string(bits) {
            Ok(c) => c,
            Err(e) => return fail(e),
        };
        match (*fitness)
            .to_kind()
            .evaluate(&chromosome, deployment, &(*radio).to_model())
        {
            Ok(b) => {
                *out = export_breakdown(&b);
                WsngaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

// ---------------------------------------------------------------------------
// Evolution handle
// ---------------------------------------------------------------------------

/// Opaque evolution result: per-generation trace plus overall best.
pub struct WsngaGaResult(GaOutcome);

/// Runs the generational search. Deterministic in (deployment, radio,
/// config, seed).
#[no_mangle]
pub unsafe extern "C" fn wsnga_evolve(
    deployment: *const WsngaDeployment,
    radio: *const WsngaRadio,
    config: *const WsngaGaConfig,
    seed: u64,
    out: *mut *mut WsngaGaResult,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if radio.is_null() {
            return null_pointer("radio");
        }
        if config.is_null() {
            return null_pointer("config");
        }
        let deployment = match deployment_ref(deployment) {
            Ok(d) => d,
            Err(status) => return status,
        };
        match evolve(
            deployment,
            &(*radio).to_model(),
            &(*config).to_params(),
            seed,
        ) {
            Ok(outcome) => {
                *out = Box::into_raw(Box::new(WsngaGaResult(outcome)));
                WsngaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Number of recorded generations (the budget plus the initial population).
#[no_mangle]
pub unsafe extern "C" fn wsnga_ga_result_generation_count(result: *const WsngaGaResult) -> u32 {
    if result.is_null() {
        return 0;
    }
    (*result).0.history.len() as u32
}

/// Copies one generation record.
#[no_mangle]
pub unsafe extern "C" fn wsnga_ga_result_generation(
    result: *const WsngaGaResult,
    index: u32,
    out: *mut WsngaGenerationRow,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if result.is_null() {
            return null_pointer("result");
        }
        let history = &(*result).0.history;
        let Some(m) = history.get(index as usize) else {
            set_error(format!(
                "generation index {index} out of range ({} records)",
                history.len()
            ));
            return WsngaStatus::InvalidConfig;
        };
        *out = WsngaGenerationRow {
            generation: m.generation as u32,
            best_fitness: m.best_fitness,
            mean_fitness: m.mean_fitness,
            best_head_count: m.best_head_count as u32,
            best_rcsd_m: m.best_rcsd,
            best_transfer_energy_j: m.best_transfer_energy,
        };
        WsngaStatus::Ok
    })
}

/// Copies the overall best score.
#[no_mangle]
pub unsafe extern "C" fn wsnga_ga_result_best(
    result: *const WsngaGaResult,
    out: *mut WsngaBreakdown,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if result.is_null() {
            return null_pointer("result");
        }
        *out = export_breakdown(&(*result).0.best.breakdown);
        WsngaStatus::Ok
    })
}

/// Returns the overall best chromosome as a '0'/'1' string.
#[no_mangle]
pub unsafe extern "C" fn wsnga_ga_result_best_chromosome(
    result: *const WsngaGaResult,
    out: *mut *mut c_char,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if result.is_null() {
            return null_pointer("result");
        }
        export_string((*result).0.best.chromosome.to_bit_string(), out)
    })
}

#[no_mangle]
pub unsafe extern "C" fn wsnga_ga_result_free(result: *mut WsngaGaResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

// ---------------------------------------------------------------------------
// Oracle
// ---------------------------------------------------------------------------

/// Exhaustive search over every head election; only networks of at most 20
/// living nodes are accepted. `out_chromosome` may be null when only the
/// score is wanted.
#[no_mangle]
pub unsafe extern "C" fn wsnga_oracle_best(
    deployment: *const WsngaDeployment,
    radio: *const WsngaRadio,
    fitness: *const WsngaFitness,
    out_chromosome: *mut *mut c_char,
    out: *mut WsngaBreakdown,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if radio.is_null() {
            return null_pointer("radio");
        }
        if fitness.is_null() {
            return null_pointer("fitness");
        }
        let deployment = match deployment_ref(deployment) {
            Ok(d) => d,
            Err(status) => return status,
        };
        match exhaustive_best(deployment, &(*radio).to_model(), &(*fitness).to_kind()) {
            Ok((chromosome, breakdown)) => {
                if !out_chromosome.is_null() {
                    let status = export_string(chromosome.to_bit_string(), out_chromosome);
                    if status != WsngaStatus::Ok {
                        return status;
                    }
                }
                *out = export_breakdown(&breakdown);
                WsngaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

// ---------------------------------------------------------------------------
// Lifetime handle
// ---------------------------------------------------------------------------

/// Opaque lifetime simulation result.
pub struct WsngaLifetime(LifetimeOutcome);

/// Simulates round-based network lifetime under either protocol.
#[no_mangle]
pub unsafe extern "C" fn wsnga_lifetime_run(
    deployment: *const WsngaDeployment,
    radio: *const WsngaRadio,
    options: *const WsngaLifetimeOptions,
    seed: u64,
    out: *mut *mut WsngaLifetime,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if radio.is_null() {
            return null_pointer("radio");
        }
        if options.is_null() {
            return null_pointer("options");
        }
        let deployment = match deployment_ref(deployment) {
            Ok(d) => d,
            Err(status) => return status,
        };
        let options = *options;
        let protocol = if options.use_leach != 0 {
            Protocol::Leach(LeachParams {
                head_probability: options.leach_head_probability,
            })
        } else {
            Protocol::Ga(options.ga.to_params())
        };
        let config = LifetimeConfig {
            total_rounds: options.total_rounds,
            rounds_per_configuration: options.rounds_per_configuration,
            protocol,
        };
        match run_lifetime(deployment, &(*radio).to_model(), &config, seed) {
            Ok(outcome) => {
                *out = Box::into_raw(Box::new(WsngaLifetime(outcome)));
                WsngaStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Number of simulated round records.
#[no_mangle]
pub unsafe extern "C" fn wsnga_lifetime_round_count(lifetime: *const WsngaLifetime) -> u32 {
    if lifetime.is_null() {
        return 0;
    }
    (*lifetime).0.records.len() as u32
}

/// Copies one round record.
#[no_mangle]
pub unsafe extern "C" fn wsnga_lifetime_round(
    lifetime: *const WsngaLifetime,
    index: u32,
    out: *mut WsngaRoundRow,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if lifetime.is_null() {
            return null_pointer("lifetime");
        }
        let records = &(*lifetime).0.records;
        let Some(r) = records.get(index as usize) else {
            set_error(format!(
                "round index {index} out of range ({} records)",
                records.len()
            ));
            return WsngaStatus::InvalidConfig;
        };
        *out = WsngaRoundRow {
            round: r.round,
            alive_count: r.alive_count as u32,
            cumulative_energy_j: r.cumulative_energy,
            head_count: r.heads as u32,
        };
        WsngaStatus::Ok
    })
}

/// Copies the death rounds and energy total.
#[no_mangle]
pub unsafe extern "C" fn wsnga_lifetime_summary(
    lifetime: *const WsngaLifetime,
    out: *mut WsngaLifetimeSummary,
) -> WsngaStatus {
    guard(|| {
        if out.is_null() {
            return null_pointer("out");
        }
        if lifetime.is_null() {
            return null_pointer("lifetime");
        }
        let s = (*lifetime).0.summary();
        *out = WsngaLifetimeSummary {
            has_first_death: u8::from(s.first_death_round.is_some()),
            first_death_round: s.first_death_round.unwrap_or(0),
            has_last_death: u8::from(s.last_death_round.is_some()),
            last_death_round: s.last_death_round.unwrap_or(0),
            total_energy_j: s.total_energy,
        };
        WsngaStatus::Ok
    })
}

#[no_mangle]
pub unsafe extern "C" fn wsnga_lifetime_free(lifetime: *mut WsngaLifetime) {
    if !lifetime.is_null() {
        drop(Box::from_raw(lifetime));
    }
}
