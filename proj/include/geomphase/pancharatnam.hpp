#pragma once

// Pancharatnam phase along discretized trajectories: the phase of each state
// relative to the start of the path, Bargmann invariants, closed-loop phase,
// Fubini-Study speed, and detection of the +-pi discontinuity at orthogonal
// crossings.
//
// Sign convention throughout: geometric phase = -arg of the overlap product,
// so a closed spin-1/2 loop enclosing solid angle Omega yields -Omega/2.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "geomphase/hilbert.hpp"

namespace geomphase {

// Cumulative phase and overlap magnitudes relative to the initial state.
//
// cumulative_phase[k] is the Pancharatnam phase -arg<psi_0|psi_k>, unwrapped
// by continuity: increments are taken as the principal value of
// -arg(<psi_0|psi_k> / <psi_0|psi_{k-1}>) and accumulated without re-wrapping.
// step_overlap_magnitude[k] = |<psi_0|psi_{k+1}>|, the distance of the
// complex-plane trajectory <psi_0|psi(t)> from the origin. The trace shows
// the +-pi flip when that trajectory skirts the origin: the phase sweeps
// through an inverse-tangent near-singularity there.
struct PhaseTrace {
    std::vector<double> cumulative_phase;        // N entries, radians, unwrapped
    std::vector<double> step_overlap_magnitude;  // N-1 entries, in [0, 1]
    bool closed = false;
};

// A detected near-singular crossing in a PhaseTrace.
struct JumpReport {
    std::size_t index;   // step position of the deepest overlap dip
    double magnitude;    // phase change across the crossing, radians
    int sign;            // +1 or -1
    double min_overlap;  // overlap-magnitude minimum at the crossing
};

// arg<a|b> as principal value in (-pi, pi].
inline double pairwise_phase(const StateVector& a, const StateVector& b) {
    const Complex ov = overlap(a, b);
    if (std::abs(ov) <= kOrthEps) throw OrthogonalStates();
    return std::arg(ov);
}

inline PhaseTrace cumulative_pancharatnam(const DiscretizedPath& path) {
    PhaseTrace trace;
    const std::size_t n = path.size();
    trace.cumulative_phase.reserve(n);
    trace.step_overlap_magnitude.reserve(n - 1);
    trace.cumulative_phase.push_back(0.0);

    Complex prev{1.0, 0.0};  // <psi_0|psi_0>
    for (std::size_t k = 1; k < n; ++k) {
        const Complex ov = overlap(path.states.front(), path.states[k]);
        if (std::abs(ov) <= kOrthEps) throw OrthogonalStep(k);
        trace.cumulative_phase.push_back(trace.cumulative_phase.back() - std::arg(ov / prev));
        trace.step_overlap_magnitude.push_back(std::abs(ov));
        prev = ov;
    }
    return trace;
}

// -arg of the product of consecutive overlaps plus the closing overlap;
// gauge invariant and invariant under cyclic rotation of the path.
inline double closed_loop_phase(const DiscretizedPath& path) {
    Complex product{1.0, 0.0};
    for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        const Complex ov = overlap(path.states[j], path.states[j + 1]);
        if (std::abs(ov) <= kOrthEps) throw OrthogonalStep(j);
        product *= ov;
    }
    const Complex closing = overlap(path.states.back(), path.states.front());
    if (std::abs(closing) <= kOrthEps) throw OrthogonalStep(path.size() - 1);
    product *= closing;
    return -std::arg(product);
}

// Delta_3 = <a|b><b|c><c|a>; -arg of it is the 3-point closed-loop phase.
inline Complex bargmann_invariant(const StateVector& a, const StateVector& b,
                                  const StateVector& c) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    if (a.dim() != c.dim()) throw DimensionMismatch(a.dim(), c.dim());
    return overlap(a, b) * overlap(b, c) * overlap(c, a);
}

// Fubini-Study speed per step: distance(psi_j, psi_{j+1}) / (t_{j+1} - t_j).
inline std::vector<double> fs_speed(const DiscretizedPath& path) {
    if (!path.timestamps) throw MissingTimestamps();
    const auto& t = *path.timestamps;
    std::vector<double> speed;
    speed.reserve(path.size() - 1);
    for (std::size_t j = 0; j + 1 < path.size(); ++j)
        speed.push_back(fubini_study_distance(path.states[j], path.states[j + 1]) /
                        (t[j + 1] - t[j]));
    return speed;
}

namespace detail {
// Overlap-with-start magnitude of path point p (1.0 for the start itself).
inline double point_overlap(const PhaseTrace& tr, std::size_t p) {
    return p == 0 ? 1.0 : tr.step_overlap_magnitude[p - 1];
}
}  // namespace detail

// Scans the trace for origin crossings of <psi_0|psi(t)>: contiguous runs
// where the overlap magnitude dips below dip_threshold. The phase change is
// measured flank to flank, between the overlap maxima bracketing the dip,
// where the inverse-tangent has settled. A crossing is reported when that
// change exceeds jump_threshold.
inline std::vector<JumpReport> detect_pi_jump(const PhaseTrace& trace,
                                              double jump_threshold = 3.0 * std::numbers::pi / 4.0,
                                              double dip_threshold = 0.1) {
    std::vector<JumpReport> reports;
    const std::size_t n = trace.cumulative_phase.size();
    if (n < 2) return reports;

    const auto ov = [&trace](std::size_t p) { return detail::point_overlap(trace, p); };

    std::size_t p = 1;  // path-point index; point p corresponds to step p-1
    while (p < n) {
        if (ov(p) >= dip_threshold) {
            ++p;
            continue;
        }
        // Maximal dipped run of points [p .. run_end].
        std::size_t run_end = p;
        std::size_t argmin = p;
        while (run_end + 1 < n && ov(run_end + 1) < dip_threshold) {
            ++run_end;
            if (ov(run_end) < ov(argmin)) argmin = run_end;
        }
        // Flank maxima bracketing the dip.
        std::size_t left = p == 0 ? 0 : p - 1;
        while (left > 0 && ov(left - 1) >= ov(left)) --left;
        std::size_t right = std::min(run_end + 1, n - 1);
        while (right + 1 < n && ov(right + 1) >= ov(right)) ++right;

        const double magnitude =
            trace.cumulative_phase[right] - trace.cumulative_phase[left];
        if (std::abs(magnitude) > jump_threshold)
            reports.push_back({argmin - 1, magnitude, magnitude > 0 ? +1 : -1, ov(argmin)});
        p = run_end + 1;
    }
    return reports;
}

}  // namespace geomphase
