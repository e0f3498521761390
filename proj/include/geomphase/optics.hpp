#pragma once

// Two optical generators feeding the Pancharatnam engine, plus closed-form
// references: the +-pi polarization flip across an orthogonal state and the
// Gouy phase of a focused Gaussian beam.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <vector>

#include "geomphase/hilbert.hpp"

namespace geomphase {

// Rotation of a slightly elliptical polarization state; the ellipticity
// epsilon resolves the +-pi sign at the orthogonal crossing.
struct PolarizationSweep {
    double ellipticity = 0.0;  // signed, |eps| < 0.5
    double theta_start = 0.0;
    double theta_end = std::numbers::pi;
    std::size_t steps = 2;

    void validate() const {
        if (steps < 2) throw InvalidConfig("steps must be >= 2");
        if (!(theta_start < theta_end)) throw InvalidConfig("theta_start must precede theta_end");
        if (!(std::abs(ellipticity) < 0.5)) throw InvalidConfig("|ellipticity| must be < 0.5");
        if (!std::isfinite(ellipticity) || !std::isfinite(theta_start) || !std::isfinite(theta_end))
            throw InvalidConfig("parameters must be finite");
    }
};

// Jones vectors psi(theta) = normalize((cos t, sin t) + i eps (-sin t, cos t)).
inline DiscretizedPath polarization_sweep_path(const PolarizationSweep& cfg) {
    cfg.validate();
    std::vector<StateVector> states;
    states.reserve(cfg.steps);
    const double eps = cfg.ellipticity;
    for (std::size_t k = 0; k < cfg.steps; ++k) {
        const double t = cfg.theta_start +
                         (cfg.theta_end - cfg.theta_start) *
                             static_cast<double>(k) / static_cast<double>(cfg.steps - 1);
        states.push_back(normalize({Complex(std::cos(t), -eps * std::sin(t)),
                                    Complex(std::sin(t), eps * std::cos(t))}));
    }
    return DiscretizedPath(std::move(states));
}

// Focused beam described by one Rayleigh range per transverse dimension.
struct GaussianBeamParams {
    std::vector<double> rayleigh_ranges;  // 1 or 2 entries, > 0
    double wavelength = 0.0;              // informational only

    void validate() const {
        if (rayleigh_ranges.empty() || rayleigh_ranges.size() > 2)
            throw InvalidConfig("1 or 2 transverse dimensions required");
        for (double zr : rayleigh_ranges)
            if (!(zr > 0.0)) throw InvalidConfig("every Rayleigh range must be positive");
    }
};

// Sum over transverse dimensions of (1/2) arctan(z / z_R); odd in z, total pi
// through a two-dimensional focus as z runs from -inf to +inf.
inline double gouy_phase(double z, const GaussianBeamParams& beam) {
    beam.validate();
    double phase = 0.0;
    for (double zr : beam.rayleigh_ranges) phase += 0.5 * std::atan(z / zr);
    return phase;
}

// R(z) = z (1 + (z_R/z)^2); the wavefront is flat at the focus, where the
// curvature reverses sign. nullopt marks the flat wavefront at z = 0.
inline std::optional<double> radius_of_curvature(double z, double z_rayleigh) {
    if (!(z_rayleigh > 0.0)) throw InvalidConfig("Rayleigh range must be positive");
    if (z == 0.0) return std::nullopt;
    return z * (1.0 + (z_rayleigh / z) * (z_rayleigh / z));
}

// Fundamental 1-D Gaussian mode sampled on a uniform grid, preceded by a flat
// reference wave. Lengths are in units of the focal waist w0; the wavenumber
// is fixed by z_R = k w0^2 / 2.
//
// The mode at z carries the width w(z) = w0 sqrt(1 + (z/z_R)^2) and the
// wavefront curvature phase exp(-i k x^2 / (2 R(z))); it has no explicit
// axial phase. The Gouy phase is the phase anomaly relative to an unfocused
// wave, so the path opens with the flat reference: the cumulative
// Pancharatnam trace then reads (1/2) arctan(z/z_R) at each sample, up to
// discretization error.
inline DiscretizedPath gaussian_mode_path(double grid_half_width, std::size_t grid_points,
                                          const std::vector<double>& z_samples,
                                          double z_rayleigh) {
    if (grid_points < 64) throw InvalidConfig("grid_points must be >= 64");
    if (!(z_rayleigh > 0.0)) throw InvalidConfig("Rayleigh range must be positive");
    if (z_samples.size() < 1) throw InvalidConfig("need at least one z sample");
    for (std::size_t j = 1; j < z_samples.size(); ++j)
        if (!(z_samples[j] > z_samples[j - 1]))
            throw InvalidConfig("z_samples must be strictly increasing");

    double w_max = 0.0;
    for (double z : z_samples) {
        const double w = std::sqrt(1.0 + (z / z_rayleigh) * (z / z_rayleigh));
        w_max = std::max(w_max, w);
    }
    if (!(grid_half_width >= 6.0 * w_max))
        throw InvalidConfig("grid_half_width must be at least 6x the maximum beam radius");

    const double k_wave = 2.0 * z_rayleigh;  // w0 = 1
    const std::size_t m = grid_points;
    const double dx = 2.0 * grid_half_width / static_cast<double>(m - 1);

    std::vector<StateVector> states;
    states.reserve(z_samples.size() + 1);

    // Flat reference wave: the phase baseline the Gouy anomaly is measured against.
    states.push_back(normalize(std::vector<Complex>(m, Complex(1.0, 0.0))));

    for (double z : z_samples) {
        const double w2 = 1.0 + (z / z_rayleigh) * (z / z_rayleigh);
        const auto radius = radius_of_curvature(z, z_rayleigh);
        const double curv = radius ? k_wave / (2.0 * *radius) : 0.0;

        // Analytically normalized continuum mode; its rectangle-rule norm on
        // the grid must match 1 before renormalization.
        const double amp = std::pow(2.0 / (std::numbers::pi * w2), 0.25) * std::sqrt(dx);
        std::vector<Complex> u(m);
        double grid_norm2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double x = -grid_half_width + dx * static_cast<double>(i);
            const Complex val = amp * std::exp(Complex(-x * x / w2, -curv * x * x));
            u[i] = val;
            grid_norm2 += std::norm(val);
        }
        const double deviation = std::abs(std::sqrt(grid_norm2) - 1.0);
        if (deviation > 1e-6) throw GridTooCoarse(deviation);
        states.push_back(normalize(std::move(u)));
    }
    return DiscretizedPath(std::move(states));
}

}  // namespace geomphase
