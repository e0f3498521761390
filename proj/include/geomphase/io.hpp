#pragma once

// File formats: PhaseTrace and ring CSV schemas, StateVector / path / ring
// JSON, and atomic artifact writes (temp file + rename).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "geomphase/hilbert.hpp"
#include "geomphase/pancharatnam.hpp"
#include "geomphase/supercon.hpp"

namespace geomphase {

// 12 significant digits for every float emitted to CSV.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string phase_trace_csv(const PhaseTrace& trace) {
    std::ostringstream out;
    out << "index,cumulative_phase_rad,step_overlap_magnitude\n";
    for (std::size_t k = 0; k < trace.cumulative_phase.size(); ++k) {
        out << k << ',' << format_double(trace.cumulative_phase[k]) << ',';
        // The overlap column holds |<psi_0|psi_k>|; the k=0 entry is 1 by definition.
        out << format_double(k == 0 ? 1.0 : trace.step_overlap_magnitude[k - 1]) << '\n';
    }
    return out.str();
}

struct ParsedPhaseTrace {
    PhaseTrace trace;
};

inline ParsedPhaseTrace parse_phase_trace_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "index,cumulative_phase_rad,step_overlap_magnitude")
        throw Error("bad phase-trace CSV header");
    ParsedPhaseTrace result;
    std::size_t expected = 0;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string idx, phase, ov;
        if (!std::getline(row, idx, ',') || !std::getline(row, phase, ',') ||
            !std::getline(row, ov, ','))
            throw Error("bad phase-trace CSV row: " + line);
        if (static_cast<std::size_t>(std::stoul(idx)) != expected)
            throw Error("non-contiguous index in phase-trace CSV");
        result.trace.cumulative_phase.push_back(std::stod(phase));
        if (expected > 0) result.trace.step_overlap_magnitude.push_back(std::stod(ov));
        ++expected;
    }
    if (expected == 0) throw Error("empty phase-trace CSV");
    return result;
}

inline std::string jump_reports_csv(const std::vector<JumpReport>& jumps) {
    std::ostringstream out;
    out << "index,magnitude_rad,sign,min_overlap\n";
    for (const auto& j : jumps)
        out << j.index << ',' << format_double(j.magnitude) << ',' << j.sign << ','
            << format_double(j.min_overlap) << '\n';
    return out.str();
}

// Ring outputs share one schema; fluxoid rows have no energy entry.
inline std::string flux_states_csv(const FluxStateSet& set, long n_min) {
    std::ostringstream out;
    out << "n_or_branch,flux_phi0,energy\n";
    for (std::size_t i = 0; i < set.flux_values.size(); ++i)
        out << n_min + static_cast<long>(i) << ',' << format_double(set.flux_values[i]) << ",\n";
    return out.str();
}

inline std::string ring_minima_csv(const std::vector<RingMinimum>& minima) {
    std::ostringstream out;
    out << "n_or_branch,flux_phi0,energy\n";
    for (std::size_t i = 0; i < minima.size(); ++i)
        out << i << ',' << format_double(minima[i].spontaneous_flux) << ','
            << format_double(minima[i].energy) << '\n';
    return out.str();
}

// --- JSON ---

inline nlohmann::json state_to_json(const StateVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : v.components()) arr.push_back({c.real(), c.imag()});
    return arr;
}

inline StateVector state_from_json(const nlohmann::json& arr) {
    if (!arr.is_array() || arr.size() < 2) throw Error("state must be an array of [re, im] pairs");
    std::vector<Complex> v;
    v.reserve(arr.size());
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error("state component must be an [re, im] pair");
        v.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return StateVector(std::move(v));
}

inline DiscretizedPath path_from_json(const nlohmann::json& doc) {
    if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].size() < 2)
        throw Error("path JSON needs a 'states' array with at least 2 entries");
    std::vector<StateVector> states;
    for (const auto& s : doc["states"]) states.push_back(state_from_json(s));
    std::optional<std::vector<double>> ts;
    if (doc.contains("timestamps")) ts = doc["timestamps"].get<std::vector<double>>();
    return DiscretizedPath(std::move(states), std::move(ts));
}

// {"junctions":[{"offset":"pi","ej":1.0}],"beta_l":10.0,"external_flux":0.0}
inline RingCircuit ring_from_json(const nlohmann::json& doc) {
    RingCircuit ring;
    if (doc.contains("junctions")) {
        for (const auto& j : doc["junctions"]) {
            Junction junction;
            const std::string offset = j.value("offset", "0");
            if (offset == "pi")
                junction.offset = std::numbers::pi;
            else if (offset == "0")
                junction.offset = 0.0;
            else
                throw Error("junction offset must be \"0\" or \"pi\"");
            junction.josephson_energy = j.value("ej", 1.0);
            ring.junctions.push_back(junction);
        }
    }
    ring.beta_l = doc.value("beta_l", 1.0);
    ring.external_flux = doc.value("external_flux", 0.0);
    ring.validate();
    return ring;
}

// Writes via a temp file in the target directory, then renames: readers never
// observe a partial artifact.
inline void atomic_write(const std::filesystem::path& target, const std::string& content) {
    const auto dir = target.parent_path().empty() ? std::filesystem::path(".")
                                                  : target.parent_path();
    std::filesystem::create_directories(dir);
    const auto tmp = dir / (target.filename().string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace geomphase
