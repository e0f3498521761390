// Command-line front end: runs the experiment families and emits CSV
// artifacts plus a JSON sidecar echoing the resolved configuration.
//
// Exit codes: 0 success, 2 config validation failure, 3 numerical-domain
// error surfaced from the library.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geomphase/hilbert.hpp"
#include "geomphase/io.hpp"
#include "geomphase/optics.hpp"
#include "geomphase/pancharatnam.hpp"
#include "geomphase/supercon.hpp"

namespace gp = geomphase;
using nlohmann::json;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

void write_sidecar(const std::filesystem::path& output, const json& config) {
    json doc = config;
    doc["output"] = output.string();
    gp::atomic_write(output.string() + ".config.json", doc.dump(2) + "\n");
}

std::filesystem::path jumps_path(const std::filesystem::path& output) {
    auto p = output;
    p.replace_extension();
    return p.string() + ".jumps.csv";
}

void emit_trace_artifacts(const gp::PhaseTrace& trace, const std::filesystem::path& output,
                          double jump_threshold, double dip_threshold, const json& config) {
    const auto jumps = gp::detect_pi_jump(trace, jump_threshold, dip_threshold);
    gp::atomic_write(output, gp::phase_trace_csv(trace));
    gp::atomic_write(jumps_path(output), gp::jump_reports_csv(jumps));
    write_sidecar(output, config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pancharatnam-phase experiments: polarization flips, Gouy phase, "
                 "and flux quantization in composite superconducting rings"};
    app.require_subcommand(1);

    std::string output;
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed echoed into the sidecar for reproducibility");

    double jump_threshold = 3.0 * std::numbers::pi / 4.0;
    double dip_threshold = 0.1;

    // trace: Pancharatnam trace of a path supplied as JSON
    auto* trace_cmd = app.add_subcommand("trace", "phase trace of a path read from JSON");
    std::string trace_input;
    trace_cmd->add_option("--input", trace_input, "path JSON file")->required();
    trace_cmd->add_option("--output", output, "trace CSV path")->required();
    trace_cmd->add_option("--jump-threshold-rad", jump_threshold, "jump detection threshold");
    trace_cmd->add_option("--dip-threshold", dip_threshold, "overlap dip threshold");

    // polarization: elliptical polarization rotation sweep
    auto* pol_cmd = app.add_subcommand("polarization", "polarization rotation sweep");
    double epsilon = 0.0;
    std::size_t steps = 2001;
    double theta_start = 0.0;
    double theta_end = std::numbers::pi;
    pol_cmd->add_option("--epsilon", epsilon, "signed ellipticity")->required();
    pol_cmd->add_option("--steps", steps, "number of path points");
    pol_cmd->add_option("--theta-start-rad", theta_start, "sweep start angle");
    pol_cmd->add_option("--theta-end-rad", theta_end, "sweep end angle");
    pol_cmd->add_option("--output", output, "trace CSV path")->required();
    pol_cmd->add_option("--jump-threshold-rad", jump_threshold, "jump detection threshold");
    pol_cmd->add_option("--dip-threshold", dip_threshold, "overlap dip threshold");

    // junction: s -> d -> -s crossing path (same engine as polarization)
    auto* junc_cmd = app.add_subcommand("junction", "s/d hetero-junction crossing path");
    double junc_epsilon = 0.0;
    std::size_t junc_steps = 2001;
    junc_cmd->add_option("--epsilon", junc_epsilon, "signed mixing perturbation")->required();
    junc_cmd->add_option("--steps", junc_steps, "number of path points");
    junc_cmd->add_option("--output", output, "trace CSV path")->required();
    junc_cmd->add_option("--jump-threshold-rad", jump_threshold, "jump detection threshold");
    junc_cmd->add_option("--dip-threshold", dip_threshold, "overlap dip threshold");

    // gouy: closed-form Gouy phase curve
    auto* gouy_cmd = app.add_subcommand("gouy", "analytic Gouy phase curve");
    unsigned dims = 2;
    std::vector<double> z_over_zr{-1000.0, 1000.0};
    std::size_t gouy_samples = 201;
    gouy_cmd->add_option("--dims", dims, "transverse dimensions (1 or 2)")
        ->check(CLI::Range(1u, 2u));
    gouy_cmd->add_option("--z-over-zr", z_over_zr, "z range in units of z_R")
        ->expected(2);
    gouy_cmd->add_option("--samples", gouy_samples, "number of z samples");
    gouy_cmd->add_option("--output", output, "CSV path")->required();

    // mode-gouy: Pancharatnam trace of the discretized Gaussian mode
    auto* mode_cmd = app.add_subcommand("mode-gouy", "Gouy phase from the mode path trace");
    double mode_zr = 1.0;
    std::vector<double> mode_range{-10.0, 10.0};
    std::size_t mode_samples = 401;
    std::size_t grid_points = 1024;
    double grid_half_width = 0.0;
    mode_cmd->add_option("--z-r", mode_zr, "Rayleigh range in waist units");
    mode_cmd->add_option("--z-over-zr", mode_range, "z range in units of z_R")->expected(2);
    mode_cmd->add_option("--samples", mode_samples, "number of z samples");
    mode_cmd->add_option("--grid-points", grid_points, "transverse grid points");
    mode_cmd->add_option("--grid-half-width", grid_half_width,
                         "grid half width in waist units (0 = auto)");
    mode_cmd->add_option("--output", output, "trace CSV path")->required();

    // ring-flux: allowed fluxoid states
    auto* flux_cmd = app.add_subcommand("ring-flux", "allowed fluxoid states of a ring");
    unsigned pi_junctions = 0;
    long n_min = -1, n_max = 1;
    std::string ring_json;
    flux_cmd->add_option("--pi-junctions", pi_junctions, "number of pi junctions");
    flux_cmd->add_option("--n-min", n_min, "lowest winding number");
    flux_cmd->add_option("--n-max", n_max, "highest winding number");
    flux_cmd->add_option("--ring-json", ring_json, "ring description JSON (overrides flags)");
    flux_cmd->add_option("--output", output, "CSV path")->required();

    // ring-energy: minima of the single-junction loop energy
    auto* energy_cmd = app.add_subcommand("ring-energy", "energy minima of a one-junction ring");
    double beta_l = 10.0;
    double external_flux = 0.0;
    double ej = 1.0;
    bool pi_junction = false;
    std::string energy_ring_json;
    energy_cmd->add_option("--beta-l", beta_l, "screening parameter");
    energy_cmd->add_option("--external-flux-phi0", external_flux, "external flux in Phi_0");
    energy_cmd->add_option("--ej", ej, "Josephson energy (normalized)");
    energy_cmd->add_flag("--pi-junction", pi_junction, "junction offset pi instead of 0");
    energy_cmd->add_option("--ring-json", energy_ring_json, "ring description JSON (overrides flags)");
    energy_cmd->add_option("--output", output, "CSV path")->required();

    // beta-sweep: spontaneous flux of the pi-ring vs beta_L
    auto* beta_cmd = app.add_subcommand("beta-sweep", "pi-ring spontaneous flux vs beta_L");
    std::vector<double> beta_values{2.0, 5.0, 10.0, 50.0, 100.0};
    beta_cmd->add_option("--beta-l-values", beta_values, "beta_L values (> 1)");
    beta_cmd->add_option("--output", output, "CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (trace_cmd->parsed()) {
            std::ifstream in(trace_input);
            if (!in) throw gp::InvalidConfig("cannot read --input file " + trace_input);
            json doc = json::parse(in);
            const auto path = gp::path_from_json(doc);
            const auto trace = gp::cumulative_pancharatnam(path);
            emit_trace_artifacts(trace, output, jump_threshold, dip_threshold,
                                 {{"subcommand", "trace"},
                                  {"input", trace_input},
                                  {"jump_threshold_rad", jump_threshold},
                                  {"dip_threshold", dip_threshold},
                                  {"seed", seed}});
        } else if (pol_cmd->parsed()) {
            gp::PolarizationSweep cfg{epsilon, theta_start, theta_end, steps};
            const auto trace = gp::cumulative_pancharatnam(gp::polarization_sweep_path(cfg));
            emit_trace_artifacts(trace, output, jump_threshold, dip_threshold,
                                 {{"subcommand", "polarization"},
                                  {"epsilon", epsilon},
                                  {"steps", steps},
                                  {"theta_start_rad", theta_start},
                                  {"theta_end_rad", theta_end},
                                  {"jump_threshold_rad", jump_threshold},
                                  {"dip_threshold", dip_threshold},
                                  {"seed", seed}});
        } else if (junc_cmd->parsed()) {
            const auto trace =
                gp::cumulative_pancharatnam(gp::junction_crossing_path(junc_epsilon, junc_steps));
            emit_trace_artifacts(trace, output, jump_threshold, dip_threshold,
                                 {{"subcommand", "junction"},
                                  {"epsilon", junc_epsilon},
                                  {"steps", junc_steps},
                                  {"jump_threshold_rad", jump_threshold},
                                  {"dip_threshold", dip_threshold},
                                  {"seed", seed}});
        } else if (gouy_cmd->parsed()) {
            if (gouy_samples < 2) throw gp::InvalidConfig("--samples must be >= 2");
            if (!(z_over_zr[0] < z_over_zr[1]))
                throw gp::InvalidConfig("--z-over-zr range must be increasing");
            gp::GaussianBeamParams beam{std::vector<double>(dims, 1.0), 0.0};
            std::ostringstream csv;
            csv << "z_over_zr,gouy_phase_rad\n";
            for (std::size_t i = 0; i < gouy_samples; ++i) {
                const double z = z_over_zr[0] + (z_over_zr[1] - z_over_zr[0]) *
                                                    static_cast<double>(i) /
                                                    static_cast<double>(gouy_samples - 1);
                csv << gp::format_double(z) << ',' << gp::format_double(gp::gouy_phase(z, beam))
                    << '\n';
            }
            gp::atomic_write(output, csv.str());
            write_sidecar(output, {{"subcommand", "gouy"},
                                   {"dims", dims},
                                   {"z_over_zr", z_over_zr},
                                   {"samples", gouy_samples},
                                   {"seed", seed}});
        } else if (mode_cmd->parsed()) {
            if (mode_samples < 2) throw gp::InvalidConfig("--samples must be >= 2");
            if (!(mode_range[0] < mode_range[1]))
                throw gp::InvalidConfig("--z-over-zr range must be increasing");
            std::vector<double> z_samples(mode_samples);
            double w_max = 1.0;
            for (std::size_t i = 0; i < mode_samples; ++i) {
                const double zr_units =
                    mode_range[0] + (mode_range[1] - mode_range[0]) * static_cast<double>(i) /
                                        static_cast<double>(mode_samples - 1);
                z_samples[i] = zr_units * mode_zr;
                w_max = std::max(w_max, std::sqrt(1.0 + zr_units * zr_units));
            }
            const double half_width = grid_half_width > 0.0 ? grid_half_width : 6.05 * w_max;
            const auto path =
                gp::gaussian_mode_path(half_width, grid_points, z_samples, mode_zr);
            const auto trace = gp::cumulative_pancharatnam(path);
            gp::atomic_write(output, gp::phase_trace_csv(trace));
            write_sidecar(output, {{"subcommand", "mode-gouy"},
                                   {"z_r", mode_zr},
                                   {"z_over_zr", mode_range},
                                   {"samples", mode_samples},
                                   {"grid_points", grid_points},
                                   {"grid_half_width", half_width},
                                   {"seed", seed}});
        } else if (flux_cmd->parsed()) {
            gp::RingCircuit ring;
            if (!ring_json.empty()) {
                std::ifstream in(ring_json);
                if (!in) throw gp::InvalidConfig("cannot read --ring-json file " + ring_json);
                ring = gp::ring_from_json(json::parse(in));
            } else {
                for (unsigned i = 0; i < pi_junctions; ++i)
                    ring.junctions.push_back({std::numbers::pi, 1.0});
            }
            const auto set = gp::fluxoid_states(ring, n_min, n_max);
            gp::atomic_write(output, gp::flux_states_csv(set, n_min));
            write_sidecar(output, {{"subcommand", "ring-flux"},
                                   {"pi_junctions", ring.pi_junction_count()},
                                   {"n_min", n_min},
                                   {"n_max", n_max},
                                   {"seed", seed}});
        } else if (energy_cmd->parsed()) {
            gp::RingCircuit ring;
            if (!energy_ring_json.empty()) {
                std::ifstream in(energy_ring_json);
                if (!in)
                    throw gp::InvalidConfig("cannot read --ring-json file " + energy_ring_json);
                ring = gp::ring_from_json(json::parse(in));
            } else {
                ring.junctions.push_back({pi_junction ? std::numbers::pi : 0.0, ej});
                ring.beta_l = beta_l;
                ring.external_flux = external_flux;
            }
            const auto minima = gp::minimize_ring_energy(ring);
            gp::atomic_write(output, gp::ring_minima_csv(minima));
            write_sidecar(output, {{"subcommand", "ring-energy"},
                                   {"beta_l", ring.beta_l},
                                   {"external_flux_phi0", ring.external_flux},
                                   {"ej", ring.junctions.front().josephson_energy},
                                   {"pi_junction", ring.junctions.front().offset != 0.0},
                                   {"seed", seed}});
        } else if (beta_cmd->parsed()) {
            const auto flux = gp::half_flux_limit(beta_values);
            std::ostringstream csv;
            csv << "beta_l,flux_phi0\n";
            for (std::size_t i = 0; i < beta_values.size(); ++i)
                csv << gp::format_double(beta_values[i]) << ',' << gp::format_double(flux[i])
                    << '\n';
            gp::atomic_write(output, csv.str());
            write_sidecar(output, {{"subcommand", "beta-sweep"},
                                   {"beta_l_values", beta_values},
                                   {"seed", seed}});
        }
    } catch (const gp::InvalidConfig& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const gp::InvalidBeta& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const gp::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
