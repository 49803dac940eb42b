//! Compiles and runs a real C client against the generated header and the
//! static library, proving the exported ABI and the header agree.

use std::path::{Path, PathBuf};
use std::process::Command;

const C_CLIENT: &str = r#"
#include <stdio.h>
#include <string.h>
#include "wsnga.h"

static int fail(const char *where) {
    fprintf(stderr, "%s: %s\n", where, wsnga_last_error_message());
    return 1;
}

int main(void) {
    WsngaDeployment *deployment = NULL;
    if (wsnga_deployment_generate(14, 200.0, 200.0, 0.0, 0.0, 2000, 11, &deployment)
            != WSNGA_STATUS_OK)
        return fail("generate");
    if (wsnga_deployment_node_count(deployment) != 14)
        return fail("node count");

    WsngaRadio radio;
    WsngaGaConfig config;
    if (wsnga_radio_default(&radio) != WSNGA_STATUS_OK ||
        wsnga_ga_config_default(&config) != WSNGA_STATUS_OK)
        return fail("defaults");
    config.population_size = 24;
    config.generations = 40;
    config.mutation_rate = 0.1;

    WsngaGaResult *result = NULL;
    if (wsnga_evolve(deployment, &radio, &config, 11, &result) != WSNGA_STATUS_OK)
        return fail("evolve");
    if (wsnga_ga_result_generation_count(result) != 41)
        return fail("generation count");

    WsngaBreakdown best;
    if (wsnga_ga_result_best(result, &best) != WSNGA_STATUS_OK)
        return fail("best");

    WsngaBreakdown oracle;
    char *chromosome = NULL;
    if (wsnga_oracle_best(deployment, &radio, &config.fitness, &chromosome, &oracle)
            != WSNGA_STATUS_OK)
        return fail("oracle");
    if (strlen(chromosome) != 14)
        return fail("chromosome length");
    wsnga_string_free(chromosome);
    if (best.fitness > oracle.fitness)
        return fail("GA exceeded the exhaustive optimum");

    WsngaLifetimeOptions options;
    if (wsnga_lifetime_options_default(&options) != WSNGA_STATUS_OK)
        return fail("lifetime defaults");
    options.total_rounds = 80;
    options.rounds_per_configuration = 10;
    options.ga = config;
    WsngaLifetime *lifetime = NULL;
    if (wsnga_lifetime_run(deployment, &radio, &options, 11, &lifetime) != WSNGA_STATUS_OK)
        return fail("lifetime");
    WsngaLifetimeSummary summary;
    if (wsnga_lifetime_summary(lifetime, &summary) != WSNGA_STATUS_OK)
        return fail("summary");
    if (!(summary.total_energy_j > 0.0))
        return fail("no energy spent");

    /* Deliberate misuse must produce an error, not a crash. */
    if (wsnga_evolve(NULL, &radio, &config, 1, &result) != WSNGA_STATUS_NULL_POINTER)
        return fail("null deployment accepted");

    wsnga_lifetime_free(lifetime);
    wsnga_ga_result_free(result);
    wsnga_deployment_free(deployment);
    printf("C ABI OK best=%.17g oracle=%.17g energy=%.17g\n",
           best.fitness, oracle.fitness, summary.total_energy_j);
    return 0;
}
"#;

fn static_library() -> PathBuf {
    // Tests run from target/<profile>/deps/<name>-<hash>; the staticlib is
    // uplifted next to the deps directory.
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let uplifted = profile_dir.join("libwsnga_ffi.a");
    if uplifted.exists() {
        return uplifted;
    }
    let mut candidates: Vec<PathBuf> = std::fs::read_dir(profile_dir.join("deps"))
        .unwrap()
        .filter_map(|e| {
            let path = e.unwrap().path();
            let name = path.file_name()?.to_str()?;
            (name.starts_with("libwsnga_ffi") && name.ends_with(".a")).then_some(path)
        })
        .collect();
    candidates.sort_by_key(|p| std::fs::metadata(p).and_then(|m| m.modified()).ok());
    candidates
        .pop()
        .expect("staticlib produced by the lib target")
}

#[test]
fn c_client_compiles_links_and_runs() {
    let include_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    assert!(
        include_dir.join("wsnga.h").exists(),
        "header generated at build time"
    );

    let scratch = tempfile::tempdir().unwrap();
    let source = scratch.path().join("client.c");
    let binary = scratch.path().join("client");
    std::fs::write(&source, C_CLIENT).unwrap();

    let compile = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(&include_dir)
        .arg(&source)
        .arg(static_library())
        .args(["-lpthread", "-ldl", "-lm"])
        .arg("-o")
        .arg(&binary)
        .output()
        .expect("cc is available");
    assert!(
        compile.status.success(),
        "compile failed:\n{}",
        String::from_utf8_lossy(&compile.stderr)
    );

    let run = Command::new(&binary).output().unwrap();
    assert!(
        run.status.success(),
        "client failed:\n{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(stdout.contains("C ABI OK"), "unexpected output: {stdout}");
}
