#pragma once

// Finite-dimensional complex state vectors and Fubini-Study geometry on the
// space of rays: overlaps, distances, geodesics, gauge transformations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "geomphase/errors.hpp"

namespace geomphase {

using Complex = std::complex<double>;

// Tolerances shared across the library.
inline constexpr double kNormTol = 1e-12;   // unit-norm tolerance
inline constexpr double kOrthEps = 1e-9;    // orthogonality cutoff on |overlap|

// A unit vector representing a ray in projective Hilbert space.
// The constructor normalizes; inputs with norm <= 1e-12 are rejected.
class StateVector {
  public:
    explicit StateVector(std::vector<Complex> components)
        : components_(std::move(components)) {
        double n2 = 0.0;
        for (const auto& c : components_) n2 += std::norm(c);
        const double n = std::sqrt(n2);
        if (n <= kNormTol) throw ZeroVector();
        for (auto& c : components_) c /= n;
    }

    std::size_t dim() const { return components_.size(); }
    const std::vector<Complex>& components() const { return components_; }
    const Complex& operator[](std::size_t i) const { return components_[i]; }

  private:
    std::vector<Complex> components_;
};

inline StateVector normalize(std::vector<Complex> v) { return StateVector(std::move(v)); }

// <a|b> = sum_k conj(a_k) b_k
inline Complex overlap(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    Complex s{0.0, 0.0};
    for (std::size_t k = 0; k < a.dim(); ++k) s += std::conj(a[k]) * b[k];
    return s;
}

// arccos|<a|b>|, the metric on rays; range [0, pi/2].
inline double fubini_study_distance(const StateVector& a, const StateVector& b) {
    const double m = std::clamp(std::abs(overlap(a, b)), 0.0, 1.0);
    return std::acos(m);
}

// Point at parameter t on the Fubini-Study geodesic from a to b, where b is
// first rescaled so that <a|b> is real positive (the in-phase representative).
inline StateVector geodesic_interpolate(const StateVector& a, const StateVector& b, double t) {
    const Complex ov = overlap(a, b);
    const double m = std::abs(ov);
    if (m <= kOrthEps) throw OrthogonalEndpoints();

    const Complex align = std::conj(ov) / m;  // b * align has real positive overlap with a
    const double theta = std::acos(std::clamp(m, 0.0, 1.0));

    std::vector<Complex> out(a.dim());
    if (theta < 1e-8) {
        // Degenerate rays: linear blend, renormalized.
        for (std::size_t k = 0; k < a.dim(); ++k)
            out[k] = (1.0 - t) * a[k] + t * align * b[k];
    } else {
        const double s = std::sin(theta);
        const double ca = std::sin((1.0 - t) * theta) / s;
        const double cb = std::sin(t * theta) / s;
        for (std::size_t k = 0; k < a.dim(); ++k)
            out[k] = ca * a[k] + cb * align * b[k];
    }
    return StateVector(std::move(out));
}

// Ordered sequence of states sampling a trajectory in projective space.
struct DiscretizedPath {
    std::vector<StateVector> states;
    std::optional<std::vector<double>> timestamps;

    DiscretizedPath(std::vector<StateVector> s,
                    std::optional<std::vector<double>> t = std::nullopt)
        : states(std::move(s)), timestamps(std::move(t)) {
        if (states.size() < 2) throw InvalidConfig("path needs at least 2 states");
        for (const auto& st : states)
            if (st.dim() != states.front().dim())
                throw DimensionMismatch(states.front().dim(), st.dim());
        if (timestamps) {
            if (timestamps->size() != states.size())
                throw LengthMismatch(timestamps->size(), states.size());
            for (std::size_t k = 1; k < timestamps->size(); ++k)
                if (!((*timestamps)[k] > (*timestamps)[k - 1])) throw NonMonotoneTimestamps();
        }
    }

    std::size_t size() const { return states.size(); }
    std::size_t dim() const { return states.front().dim(); }
};

// One phase angle per path point; multiplies point k by exp(i phases[k]).
struct GaugePhases {
    std::vector<double> phases;
};

inline DiscretizedPath apply_gauge(const DiscretizedPath& path, const GaugePhases& g) {
    if (g.phases.size() != path.size()) throw LengthMismatch(g.phases.size(), path.size());
    std::vector<StateVector> out;
    out.reserve(path.size());
    for (std::size_t k = 0; k < path.size(); ++k) {
        const Complex f = std::polar(1.0, g.phases[k]);
        std::vector<Complex> v(path.dim());
        for (std::size_t i = 0; i < path.dim(); ++i) v[i] = f * path.states[k][i];
        out.emplace_back(std::move(v));
    }
    return DiscretizedPath(std::move(out), path.timestamps);
}

}  // namespace geomphase
