#pragma once

// s-wave/d-wave pair states on the circle, the geometric pi shift across the
// idealized hetero-junction, fluxoid quantization in integer vs half-integer
// units, and spontaneous half-flux from the single-junction ring energy.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "geomphase/hilbert.hpp"

namespace geomphase {

// Pair wavefunction over the angular basis {1/sqrt(2pi)} u {cos(k phi)/sqrt(pi),
// sin(k phi)/sqrt(pi)} up to harmonic order M. Coefficients are stored as
// [const, cos1, sin1, cos2, sin2, ..., cosM, sinM].
struct PairState {
    enum class Kind { s_wave, d_wave, custom };
    Kind kind = Kind::custom;
    std::vector<Complex> angular_coefficients;

    std::size_t order() const { return (angular_coefficients.size() - 1) / 2; }

    // f(phi) in the angular basis.
    Complex evaluate(double phi) const {
        const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);
        const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
        Complex f = angular_coefficients[0] * inv_sqrt_2pi;
        for (std::size_t k = 1; k <= order(); ++k) {
            f += angular_coefficients[2 * k - 1] * (std::cos(k * phi) * inv_sqrt_pi);
            if (2 * k < angular_coefficients.size())
                f += angular_coefficients[2 * k] * (std::sin(k * phi) * inv_sqrt_pi);
        }
        return f;
    }

    static PairState s_wave(std::size_t max_order = 2) {
        PairState p;
        p.kind = Kind::s_wave;
        p.angular_coefficients.assign(2 * max_order + 1, Complex(0.0, 0.0));
        p.angular_coefficients[0] = 1.0;  // 1/sqrt(2pi)
        return p;
    }

    // Planar d_{x^2-y^2} pairing: cos(2 phi)/sqrt(pi).
    static PairState d_wave(std::size_t max_order = 2) {
        if (max_order < 2) max_order = 2;
        PairState p;
        p.kind = Kind::d_wave;
        p.angular_coefficients.assign(2 * max_order + 1, Complex(0.0, 0.0));
        p.angular_coefficients[3] = 1.0;  // cos(2 phi)
        return p;
    }
};

// Integral over the circle of conj(a) b, by trapezoid quadrature with
// 4M+1 points minimum (exact for the harmonic basis).
inline Complex angular_overlap(const PairState& a, const PairState& b) {
    if (a.angular_coefficients.size() != b.angular_coefficients.size())
        throw BasisMismatch(a.angular_coefficients.size(), b.angular_coefficients.size());
    const std::size_t m = a.order();
    const std::size_t n_points = std::max<std::size_t>(4 * m + 1, 16);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n_points);
    Complex s{0.0, 0.0};
    // Periodic integrand: uniform weights close the trapezoid rule.
    for (std::size_t i = 0; i < n_points; ++i) {
        const double phi = h * static_cast<double>(i);
        s += std::conj(a.evaluate(phi)) * b.evaluate(phi);
    }
    return s * h;
}

// Two-level path in span{|s>, |d>} crossing the d state at alpha = pi/2:
// psi(alpha) = normalize(cos a |s> + sin a |d> + i eps (-sin a |s> + cos a |d>)),
// alpha from 0 to pi. Identical in structure to the polarization sweep; the
// states are coordinates in the orthonormal {s, d} basis.
inline DiscretizedPath junction_crossing_path(double epsilon, std::size_t steps) {
    if (!(std::abs(epsilon) > 0.0 && std::abs(epsilon) < 0.5))
        throw InvalidConfig("epsilon must satisfy 0 < |epsilon| < 0.5");
    if (steps < 3) throw InvalidConfig("steps must be >= 3");
    std::vector<StateVector> states;
    states.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const double a = std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps - 1);
        states.push_back(normalize({Complex(std::cos(a), -epsilon * std::sin(a)),
                                    Complex(std::sin(a), epsilon * std::cos(a))}));
    }
    return DiscretizedPath(std::move(states));
}

// Josephson junction with an intrinsic phase offset of 0 or pi.
struct Junction {
    double offset = 0.0;          // exactly 0 or pi
    double josephson_energy = 1.0;

    void validate() const {
        if (offset != 0.0 && offset != std::numbers::pi)
            throw InvalidConfig("junction offset must be exactly 0 or pi");
        if (!(josephson_energy > 0.0)) throw InvalidConfig("josephson_energy must be positive");
    }
};

struct RingCircuit {
    std::vector<Junction> junctions;
    double beta_l = 1.0;         // screening parameter 2 pi L I_c / Phi_0
    double external_flux = 0.0;  // units of Phi_0

    void validate() const {
        if (!(beta_l > 0.0)) throw InvalidConfig("beta_l must be positive");
        if (!std::isfinite(external_flux)) throw InvalidConfig("external_flux must be finite");
        for (const auto& j : junctions) j.validate();
    }

    std::size_t pi_junction_count() const {
        std::size_t p = 0;
        for (const auto& j : junctions)
            if (j.offset != 0.0) ++p;
        return p;
    }
};

// Allowed fluxoid values in units of Phi_0, spaced by exactly one quantum;
// offset by 1/2 when the pi-junction count is odd.
struct FluxStateSet {
    std::vector<double> flux_values;
    bool odd_parity = false;
};

// Single-valuedness of the pair wavefunction: junction offsets plus
// 2 pi Phi / Phi_0 must sum to 2 pi n, so Phi_n = n + (P mod 2)/2.
inline FluxStateSet fluxoid_states(const RingCircuit& ring, long n_min, long n_max) {
    ring.validate();
    if (n_min > n_max) throw InvalidConfig("n_min must not exceed n_max");
    FluxStateSet set;
    set.odd_parity = ring.pi_junction_count() % 2 == 1;
    const double offset = set.odd_parity ? 0.5 : 0.0;
    for (long n = n_min; n <= n_max; ++n)
        set.flux_values.push_back(static_cast<double>(n) + offset);
    return set;
}

// Normalized single-junction loop energy
//   u(phi) = (phi - 2 pi f_ext)^2 / (2 beta_L) - E_J cos(phi + offset).
inline double ring_energy(const RingCircuit& ring, double phi) {
    ring.validate();
    if (ring.junctions.size() != 1) throw UnsupportedTopology(ring.junctions.size());
    const auto& j = ring.junctions.front();
    const double d = phi - 2.0 * std::numbers::pi * ring.external_flux;
    return d * d / (2.0 * ring.beta_l) - j.josephson_energy * std::cos(phi + j.offset);
}

inline double ring_energy_derivative(const RingCircuit& ring, double phi) {
    const auto& j = ring.junctions.front();
    return (phi - 2.0 * std::numbers::pi * ring.external_flux) / ring.beta_l +
           j.josephson_energy * std::sin(phi + j.offset);
}

struct RingMinimum {
    double phi;               // junction phase at the minimum, radians
    double energy;            // u(phi)
    double spontaneous_flux;  // phi/(2 pi) - external_flux, units of Phi_0
};

// All local minima of u on [-3 pi, 3 pi]: dense grid scan followed by
// bisection on u' to |u'| < 1e-10. Deterministic and exhaustive in 1-D.
inline std::vector<RingMinimum> minimize_ring_energy(const RingCircuit& ring,
                                                     std::size_t grid_points = 20001) {
    ring.validate();
    if (ring.junctions.size() != 1) throw UnsupportedTopology(ring.junctions.size());
    if (grid_points < 10000) grid_points = 10001;

    const double lo = -3.0 * std::numbers::pi;
    const double hi = 3.0 * std::numbers::pi;
    const double h = (hi - lo) / static_cast<double>(grid_points - 1);

    std::vector<RingMinimum> minima;
    double u_prev = ring_energy(ring, lo);
    double u_here = ring_energy(ring, lo + h);
    for (std::size_t i = 1; i + 1 < grid_points; ++i) {
        const double phi = lo + h * static_cast<double>(i);
        const double u_next = ring_energy(ring, phi + h);
        if (u_here < u_prev && u_here <= u_next) {
            // Bracket [phi-h, phi+h] holds a sign change of u'.
            double a = phi - h, b = phi + h;
            double fa = ring_energy_derivative(ring, a);
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (a + b);
                const double fm = ring_energy_derivative(ring, mid);
                if (std::abs(fm) < 1e-10) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            const double phi_min = 0.5 * (a + b);
            minima.push_back({phi_min, ring_energy(ring, phi_min),
                              phi_min / (2.0 * std::numbers::pi) - ring.external_flux});
        }
        u_prev = u_here;
        u_here = u_next;
    }
    std::sort(minima.begin(), minima.end(),
              [](const RingMinimum& x, const RingMinimum& y) { return x.phi < y.phi; });
    return minima;
}

// |spontaneous flux| of the positive-phase minimum of a pi-ring at zero
// external flux, for each beta_L > 1; increases with beta_L toward 1/2.
inline std::vector<double> half_flux_limit(const std::vector<double>& beta_values) {
    std::vector<double> flux;
    flux.reserve(beta_values.size());
    for (double beta : beta_values) {
        if (!(beta > 1.0)) throw InvalidBeta(beta);
        RingCircuit ring;
        ring.junctions.push_back({std::numbers::pi, 1.0});
        ring.beta_l = beta;
        ring.external_flux = 0.0;
        const auto minima = minimize_ring_energy(ring);
        // Fundamental branch: minima are sorted by phi, take the first positive one.
        double best = 0.0;
        for (const auto& m : minima)
            if (m.phi > 1e-6) {
                best = m.spontaneous_flux;
                break;
            }
        flux.push_back(std::abs(best));
    }
    return flux;
}

}  // namespace geomphase
