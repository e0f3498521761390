#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "geomphase/pancharatnam.hpp"
#include "geomphase/supercon.hpp"

using namespace geomphase;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;

// Independent root of phi = beta sin(phi) on (0, pi) by plain bisection.
double pi_ring_root(double beta) {
    double lo = 1e-9, hi = kPi - 1e-9;
    auto f = [beta](double p) { return p - beta * std::sin(p); };
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((f(lo) < 0.0) == (f(mid) < 0.0))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}
}  // namespace

TEST_CASE("s and d pair states are unit-norm and mutually orthogonal") {
    const auto s = PairState::s_wave();
    const auto d = PairState::d_wave();
    CHECK_THAT(std::abs(angular_overlap(s, s)), WithinAbs(1.0, 1e-10));
    CHECK_THAT(std::abs(angular_overlap(d, d)), WithinAbs(1.0, 1e-10));
    CHECK_THAT(std::abs(angular_overlap(s, d)), WithinAbs(0.0, 1e-10));
}

TEST_CASE("distinct angular harmonics are pairwise orthogonal") {
    constexpr std::size_t max_order = 8;
    const std::size_t dim = 2 * max_order + 1;
    std::vector<PairState> basis;
    for (std::size_t j = 0; j < dim; ++j) {
        PairState p;
        p.angular_coefficients.assign(dim, Complex(0.0, 0.0));
        p.angular_coefficients[j] = 1.0;
        basis.push_back(p);
    }
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const double expected = a == b ? 1.0 : 0.0;
            REQUIRE_THAT(std::abs(angular_overlap(basis[a], basis[b])),
                         WithinAbs(expected, 1e-10));
        }
}

TEST_CASE("angular overlap requires matching basis sizes") {
    CHECK_THROWS_AS(angular_overlap(PairState::s_wave(2), PairState::s_wave(3)), BasisMismatch);
}

TEST_CASE("s-to-d crossing carries a pi phase flip with the sign of epsilon") {
    for (double eps : {1e-3, -1e-3}) {
        const auto trace = cumulative_pancharatnam(junction_crossing_path(eps, 2001));
        const auto jumps = detect_pi_jump(trace);
        REQUIRE(jumps.size() == 1);
        CHECK(jumps[0].sign == (eps > 0 ? 1 : -1));
        CHECK_THAT(std::abs(jumps[0].magnitude), WithinAbs(kPi, 1e-2));
    }
}

TEST_CASE("a path that stays clear of the d state reports no jump") {
    const auto full = junction_crossing_path(1e-3, 2001);
    std::vector<StateVector> head(full.states.begin(), full.states.begin() + 500);
    const auto trace = cumulative_pancharatnam(DiscretizedPath(std::move(head)));
    CHECK(detect_pi_jump(trace).empty());
}

TEST_CASE("junction crossing validates its arguments") {
    CHECK_THROWS_AS(junction_crossing_path(0.0, 100), InvalidConfig);
    CHECK_THROWS_AS(junction_crossing_path(0.6, 100), InvalidConfig);
    CHECK_THROWS_AS(junction_crossing_path(1e-3, 2), InvalidConfig);
}

TEST_CASE("fluxoid values are integer or half-integer by pi-junction parity") {
    for (std::size_t n_pi = 0; n_pi <= 5; ++n_pi) {
        RingCircuit ring;
        for (std::size_t j = 0; j < n_pi; ++j) ring.junctions.push_back({kPi, 1.0});
        ring.beta_l = 10.0;
        const auto set = fluxoid_states(ring, -2, 2);
        REQUIRE(set.flux_values.size() == 5);
        CHECK(set.odd_parity == (n_pi % 2 == 1));
        const double offset = n_pi % 2 == 1 ? 0.5 : 0.0;
        for (std::size_t i = 0; i < set.flux_values.size(); ++i) {
            REQUIRE(set.flux_values[i] == static_cast<double>(static_cast<long>(i) - 2) + offset);
            if (i > 0) REQUIRE(set.flux_values[i] - set.flux_values[i - 1] == 1.0);
        }
    }
}

TEST_CASE("ring energy closed forms") {
    RingCircuit zero;
    zero.junctions.push_back({0.0, 1.0});
    zero.beta_l = 10.0;
    CHECK_THAT(ring_energy(zero, 0.0), WithinAbs(-1.0, 1e-15));

    RingCircuit pi_ring = zero;
    pi_ring.junctions[0].offset = kPi;
    CHECK_THAT(ring_energy(pi_ring, 0.0), WithinAbs(1.0, 1e-15));

    // Quadratic term vanishes when phi matches the applied flux.
    zero.external_flux = 0.25;
    const double phi = 2.0 * kPi * 0.25;
    CHECK_THAT(ring_energy(zero, phi), WithinAbs(-std::cos(phi), 1e-15));
}

TEST_CASE("conventional ring at zero flux has its ground state at phi = 0") {
    RingCircuit ring;
    ring.junctions.push_back({0.0, 1.0});
    ring.beta_l = 10.0;
    const auto minima = minimize_ring_energy(ring);
    REQUIRE_FALSE(minima.empty());
    const auto ground = *std::min_element(
        minima.begin(), minima.end(),
        [](const RingMinimum& a, const RingMinimum& b) { return a.energy < b.energy; });
    CHECK_THAT(ground.phi, WithinAbs(0.0, 1e-8));
    CHECK_THAT(ground.spontaneous_flux, WithinAbs(0.0, 1e-8));
}

TEST_CASE("weakly screened pi ring keeps a single minimum at phi = 0") {
    RingCircuit ring;
    ring.junctions.push_back({kPi, 1.0});
    ring.beta_l = 0.5;
    const auto minima = minimize_ring_energy(ring);
    REQUIRE(minima.size() == 1);
    CHECK_THAT(minima[0].phi, WithinAbs(0.0, 1e-8));
}

TEST_CASE("strongly screened pi ring breaks symmetry into +-phi* minima") {
    RingCircuit ring;
    ring.junctions.push_back({kPi, 1.0});
    ring.beta_l = 10.0;
    const auto minima = minimize_ring_energy(ring);

    const double phi_star = pi_ring_root(10.0);
    // Degenerate ground pair at the fundamental branch.
    std::vector<double> ground_phis;
    const double e_min = std::min_element(minima.begin(), minima.end(),
                                          [](const RingMinimum& a, const RingMinimum& b) {
                                              return a.energy < b.energy;
                                          })
                             ->energy;
    for (const auto& m : minima)
        if (m.energy < e_min + 1e-9) ground_phis.push_back(m.phi);
    REQUIRE(ground_phis.size() == 2);
    CHECK_THAT(ground_phis[0], WithinAbs(-phi_star, 1e-8));
    CHECK_THAT(ground_phis[1], WithinAbs(phi_star, 1e-8));

    // Stationarity phi = beta sin(phi) and positive curvature at each minimum.
    for (const auto& m : minima) {
        CHECK_THAT(m.phi - ring.beta_l * std::sin(m.phi), WithinAbs(0.0, 1e-8));
        const double h = 1e-5;
        const double u2 = (ring_energy(ring, m.phi + h) - 2.0 * ring_energy(ring, m.phi) +
                           ring_energy(ring, m.phi - h)) /
                          (h * h);
        CHECK(u2 > 1e-6);
    }

    const double flux_star = phi_star / (2.0 * kPi);
    CHECK_THAT(flux_star, WithinAbs(0.45396431188983316, 1e-12));
    CHECK_THAT(std::abs(ground_phis[1] / (2.0 * kPi)), WithinAbs(flux_star, 1e-3));
}

TEST_CASE("spontaneous flux approaches half a quantum as screening grows") {
    const std::vector<double> betas{2.0, 5.0, 10.0, 50.0, 100.0};
    const auto flux = half_flux_limit(betas);
    REQUIRE(flux.size() == betas.size());
    for (std::size_t i = 0; i < flux.size(); ++i) {
        CHECK(flux[i] > 0.0);
        CHECK(flux[i] < 0.5);
        if (i > 0) CHECK(flux[i] > flux[i - 1]);
        // delta = pi - phi* obeys delta ~ pi/(1 + beta) for large beta.
        const double delta = 0.5 - flux[i];
        CHECK_THAT(delta, WithinAbs(0.5 / (1.0 + betas[i]), 0.2 / (1.0 + betas[i])));
    }
    CHECK_THAT(flux.back(), WithinAbs(0.5, 0.01));

    CHECK_THROWS_AS(half_flux_limit({0.5}), InvalidBeta);
    CHECK_THROWS_AS(half_flux_limit({1.0}), InvalidBeta);
}

TEST_CASE("symmetry breaking onset sits at beta_l = 1") {
    for (double beta : {0.3, 0.8, 0.99}) {
        RingCircuit ring;
        ring.junctions.push_back({kPi, 1.0});
        ring.beta_l = beta;
        const auto minima = minimize_ring_energy(ring);
        for (const auto& m : minima) CHECK_THAT(m.phi, WithinAbs(0.0, 1e-6));
    }
    for (double beta : {1.2, 3.0}) {
        RingCircuit ring;
        ring.junctions.push_back({kPi, 1.0});
        ring.beta_l = beta;
        const auto minima = minimize_ring_energy(ring);
        bool has_positive = false;
        for (const auto& m : minima) has_positive |= m.phi > 1e-3;
        CHECK(has_positive);
    }
}

TEST_CASE("multi-junction rings are rejected by the energy model") {
    RingCircuit ring;
    ring.junctions.push_back({0.0, 1.0});
    ring.junctions.push_back({kPi, 1.0});
    CHECK_THROWS_AS(ring_energy(ring, 0.0), UnsupportedTopology);
    CHECK_THROWS_AS(minimize_ring_energy(ring), UnsupportedTopology);
}
