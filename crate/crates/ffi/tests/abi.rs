//! Exercises the C surface from Rust: results must match the native API
//! bit for bit, and every documented error path must report the right
//! status code and a usable message.

use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use wsnga::clustering::FitnessKind;
use wsnga::energy::RadioModel;
use wsnga::ga::{evolve, GaParams};
use wsnga::network::{generate_deployment, NetworkConfig};

use wsnga_ffi::*;

fn radio() -> WsngaRadio {
    let mut r = std::mem::MaybeUninit::<WsngaRadio>::uninit();
    unsafe {
        assert_eq!(wsnga_radio_default(r.as_mut_ptr()), WsngaStatus::Ok);
        r.assume_init()
    }
}

fn ga_config() -> WsngaGaConfig {
    let mut c = std::mem::MaybeUninit::<WsngaGaConfig>::uninit();
    unsafe {
        assert_eq!(wsnga_ga_config_default(c.as_mut_ptr()), WsngaStatus::Ok);
        c.assume_init()
    }
}

fn normalized() -> WsngaFitness {
    WsngaFitness {
        tag: WsngaFitnessTag::Normalized,
        energy_weight: 0.0,
        distance_weight: 0.0,
        head_weight: 0.0,
    }
}

unsafe fn generate(node_count: u32, seed: u64) -> *mut WsngaDeployment {
    let mut handle = ptr::null_mut();
    let status = wsnga_deployment_generate(
        node_count,
        200.0,
        200.0,
        0.0,
        0.0,
        2000,
        seed,
        &mut handle,
    );
    assert_eq!(status, WsngaStatus::Ok);
    assert!(!handle.is_null());
    handle
}

fn last_error() -> String {
    unsafe {
        CStr::from_ptr(wsnga_last_error_message())
            .to_string_lossy()
            .into_owned()
    }
}

unsafe fn take_string(ptr: *mut c_char) -> String {
    let s = CStr::from_ptr(ptr).to_string_lossy().into_owned();
    wsnga_string_free(ptr);
    s
}

#[test]
fn evolve_through_ffi_matches_native() {
    unsafe {
        let handle = generate(16, 42);
        let mut config = ga_config();
        config.population_size = 20;
        config.generations = 30;
        config.mutation_rate = 0.05;

        let mut result = ptr::null_mut();
        assert_eq!(
            wsnga_evolve(handle, &radio(), &config, 42, &mut result),
            WsngaStatus::Ok
        );
        assert_eq!(wsnga_ga_result_generation_count(result), 31);

        let mut best = std::mem::MaybeUninit::<WsngaBreakdown>::uninit();
        assert_eq!(
            wsnga_ga_result_best(result, best.as_mut_ptr()),
            WsngaStatus::Ok
        );
        let best = best.assume_init();
        let mut bits_ptr = ptr::null_mut();
        assert_eq!(
            wsnga_ga_result_best_chromosome(result, &mut bits_ptr),
            WsngaStatus::Ok
        );
        let bits = take_string(bits_ptr);

        let deployment = generate_deployment(&NetworkConfig {
            node_count: 16,
            seed: 42,
            ..NetworkConfig::default()
        })
        .unwrap();
        let params = GaParams {
            population_size: 20,
            generations: 30,
            mutation_rate: 0.05,
            ..GaParams::default()
        };
        let native = evolve(&deployment, &RadioModel::default(), &params, 42).unwrap();
        assert_eq!(best.fitness, native.best.breakdown.fitness);
        assert_eq!(bits, native.best.chromosome.to_bit_string());
        assert_eq!(best.head_count as usize, native.best.breakdown.head_count);

        // The trace is addressable row by row and row 0 is the initial
        // population.
        let mut row = std::mem::MaybeUninit::<WsngaGenerationRow>::uninit();
        assert_eq!(
            wsnga_ga_result_generation(result, 0, row.as_mut_ptr()),
            WsngaStatus::Ok
        );
        assert_eq!(row.assume_init().generation, 0);
        assert_eq!(
            wsnga_ga_result_generation(result, 31, row.as_mut_ptr()),
            WsngaStatus::InvalidConfig
        );
        assert!(last_error().contains("out of range"));

        wsnga_ga_result_free(result);
        wsnga_deployment_free(handle);
    }
}

#[test]
fn deployment_json_round_trips() {
    unsafe {
        let handle = generate(12, 7);
        assert_eq!(wsnga_deployment_node_count(handle), 12);
        assert_eq!(wsnga_deployment_alive_count(handle), 12);

        let mut json_ptr = ptr::null_mut();
        assert_eq!(
            wsnga_deployment_to_json(handle, &mut json_ptr),
            WsngaStatus::Ok
        );
        let json = take_string(json_ptr);
        let json_c = CString::new(json.clone()).unwrap();

        let mut reparsed = ptr::null_mut();
        assert_eq!(
            wsnga_deployment_from_json(json_c.as_ptr(), 2000, &mut reparsed),
            WsngaStatus::Ok
        );
        let mut json2_ptr = ptr::null_mut();
        assert_eq!(
            wsnga_deployment_to_json(reparsed, &mut json2_ptr),
            WsngaStatus::Ok
        );
        assert_eq!(take_string(json2_ptr), json, "round trip changed bytes");

        wsnga_deployment_free(reparsed);
        wsnga_deployment_free(handle);
    }
}

#[test]
fn evaluate_matches_native_and_rejects_bad_strings() {
    unsafe {
        let handle = generate(10, 3);
        let deployment = generate_deployment(&NetworkConfig {
            node_count: 10,
            seed: 3,
            ..NetworkConfig::default()
        })
        .unwrap();
        let bits = CString::new("1001000001").unwrap();
        let mut out = std::mem::MaybeUninit::<WsngaBreakdown>::uninit();
        assert_eq!(
            wsnga_evaluate(handle, &radio(), &normalized(), bits.as_ptr(), out.as_mut_ptr()),
            WsngaStatus::Ok
        );
        let out = out.assume_init();
        let native = FitnessKind::Normalized
            .evaluate(
                &wsnga::clustering::Chromosome::from_bit_string("1001000001").unwrap(),
                &deployment,
                &RadioModel::default(),
            )
            .unwrap();
        assert_eq!(out.fitness, native.fitness);
        assert_eq!(out.rcsd_m, native.rcsd);
        assert_eq!(out.transfer_energy_j, native.transfer_energy);

        let mut sink = std::mem::MaybeUninit::<WsngaBreakdown>::uninit();
        let wrong_len = CString::new("101").unwrap();
        assert_eq!(
            wsnga_evaluate(handle, &radio(), &normalized(), wrong_len.as_ptr(), sink.as_mut_ptr()),
            WsngaStatus::BadChromosome
        );
        let alien = CString::new("10010000x1").unwrap();
        assert_eq!(
            wsnga_evaluate(handle, &radio(), &normalized(), alien.as_ptr(), sink.as_mut_ptr()),
            WsngaStatus::BadChromosome
        );
        let all_zero = CString::new("0000000000").unwrap();
        assert_eq!(
            wsnga_evaluate(handle, &radio(), &normalized(), all_zero.as_ptr(), sink.as_mut_ptr()),
            WsngaStatus::DegenerateChromosome
        );
        wsnga_deployment_free(handle);
    }
}

#[test]
fn error_paths_report_status_and_message() {
    unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            wsnga_deployment_generate(0, 200.0, 200.0, 0.0, 0.0, 2000, 1, &mut out),
            WsngaStatus::InvalidConfig
        );
        assert!(last_error().contains("node_count"), "{}", last_error());

        assert_eq!(
            wsnga_deployment_generate(10, 200.0, 200.0, 0.0, 0.0, 0, 1, &mut out),
            WsngaStatus::InvalidConfig,
            "zero packet bits"
        );

        assert_eq!(
            wsnga_deployment_generate(10, 200.0, 200.0, 0.0, 0.0, 2000, 1, ptr::null_mut()),
            WsngaStatus::NullPointer
        );
        assert!(last_error().contains("null"));

        let garbage = CString::new("{ not json").unwrap();
        assert_eq!(
            wsnga_deployment_from_json(garbage.as_ptr(), 2000, &mut out),
            WsngaStatus::InvalidConfig
        );

        let handle = generate(25, 1);
        let mut breakdown = std::mem::MaybeUninit::<WsngaBreakdown>::uninit();
        assert_eq!(
            wsnga_oracle_best(handle, &radio(), &normalized(), ptr::null_mut(), breakdown.as_mut_ptr()),
            WsngaStatus::TooLarge
        );
        assert!(last_error().contains("20"), "{}", last_error());
        wsnga_deployment_free(handle);

        // Frees tolerate null.
        wsnga_deployment_free(ptr::null_mut());
        wsnga_ga_result_free(ptr::null_mut());
        wsnga_lifetime_free(ptr::null_mut());
        wsnga_string_free(ptr::null_mut());
    }
}

#[test]
fn oracle_bounds_evolution() {
    unsafe {
        let handle = generate(12, 9);
        let mut chromosome = ptr::null_mut();
        let mut oracle = std::mem::MaybeUninit::<WsngaBreakdown>::uninit();
        assert_eq!(
            wsnga_oracle_best(handle, &radio(), &normalized(), &mut chromosome, oracle.as_mut_ptr()),
            WsngaStatus::Ok
        );
        let oracle = oracle.assume_init();
        let bits = take_string(chromosome);
        assert_eq!(bits.len(), 12);
        assert!(bits.contains('1'));

        let mut config = ga_config();
        config.population_size = 24;
        config.generations = 80;
        config.mutation_rate = 0.1;
        let mut result = ptr::null_mut();
        assert_eq!(
            wsnga_evolve(handle, &radio(), &config, 9, &mut result),
            WsngaStatus::Ok
        );
        let mut best = std::mem::MaybeUninit::<WsngaBreakdown>::uninit();
        assert_eq!(wsnga_ga_result_best(result, best.as_mut_ptr()), WsngaStatus::Ok);
        assert!(best.assume_init().fitness <= oracle.fitness);
        wsnga_ga_result_free(result);
        wsnga_deployment_free(handle);
    }
}

#[test]
fn lifetime_rows_and_summary_agree() {
    unsafe {
        let handle = generate(18, 5);
        let mut options = std::mem::MaybeUninit::<WsngaLifetimeOptions>::uninit();
        assert_eq!(
            wsnga_lifetime_options_default(options.as_mut_ptr()),
            WsngaStatus::Ok
        );
        let mut options = options.assume_init();
        options.total_rounds = 120;
        options.rounds_per_configuration = 10;
        options.ga.population_size = 10;
        options.ga.generations = 5;
        options.ga.mutation_rate = 0.05;

        for use_leach in [0u8, 1u8] {
            options.use_leach = use_leach;
            let mut lifetime = ptr::null_mut();
            assert_eq!(
                wsnga_lifetime_run(handle, &radio(), &options, 5, &mut lifetime),
                WsngaStatus::Ok
            );
            let rounds = wsnga_lifetime_round_count(lifetime);
            assert!(rounds > 0 && rounds <= 120);
            let mut prev_alive = u32::MAX;
            let mut prev_energy = 0.0;
            let mut last = std::mem::MaybeUninit::<WsngaRoundRow>::uninit();
            for i in 0..rounds {
                assert_eq!(
                    wsnga_lifetime_round(lifetime, i, last.as_mut_ptr()),
                    WsngaStatus::Ok
                );
                let row = last.assume_init();
                assert_eq!(row.round, u64::from(i) + 1);
                assert!(row.alive_count <= prev_alive);
                assert!(row.cumulative_energy_j >= prev_energy);
                prev_alive = row.alive_count;
                prev_energy = row.cumulative_energy_j;
            }
            let mut summary = std::mem::MaybeUninit::<WsngaLifetimeSummary>::uninit();
            assert_eq!(
                wsnga_lifetime_summary(lifetime, summary.as_mut_ptr()),
                WsngaStatus::Ok
            );
            let summary = summary.assume_init();
            assert_eq!(summary.total_energy_j, prev_energy);
            if summary.has_first_death == 0 {
                assert_eq!(prev_alive, 18);
            }
            wsnga_lifetime_free(lifetime);
        }
        wsnga_deployment_free(handle);
    }
}
