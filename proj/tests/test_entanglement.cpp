#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "tristar/entanglement.hpp"

using namespace tristar;

namespace {

Vec random_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec v(16);
    for (auto& z : v) z = cplx(u(rng), u(rng));
    double n = norm(v);
    for (auto& z : v) z /= n;
    return v;
}

std::vector<double> rho_eigenvalues(const DensityMatrix& dm) {
    return hermitian_eig(dm.rho).eigenvalues;
}

}  // namespace

TEST_CASE("partial trace of product and GHZ states") {
    Vec up(16, cplx(0, 0));
    up[0] = 1;
    DensityMatrix dm = partial_trace(up, {2, 3, 4});
    REQUIRE(dm.rho.rows() == 8);
    CHECK(std::abs(dm.rho(0, 0) - cplx(1, 0)) < 1e-14);
    CHECK(dm.rho.fro() == doctest::Approx(1.0));

    DensityMatrix g = partial_trace(paper_state("GHZ").amp, {1});
    REQUIRE(g.rho.rows() == 2);
    CHECK(std::abs(g.rho(0, 0) - cplx(0.5, 0)) < 1e-14);
    CHECK(std::abs(g.rho(1, 1) - cplx(0.5, 0)) < 1e-14);
    CHECK(std::abs(g.rho(0, 1)) < 1e-14);
    CHECK(von_neumann_entropy(g, LogBase::two) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("three-site marginal of the sector eigenstate") {
    DensityMatrix dm = partial_trace(paper_state("S+B").amp, {2, 3, 4});
    std::vector<double> ev = rho_eigenvalues(dm);
    REQUIRE(ev.size() == 8);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(ev[i]) < 1e-12);
    CHECK(ev[6] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ev[7] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(von_neumann_entropy(dm) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    CHECK(dm.keep == std::vector<int>{2, 3, 4});
}

TEST_CASE("partial trace input validation") {
    Vec psi = paper_state("W").amp;
    CHECK_THROWS_AS(partial_trace(psi, {}), Error);
    CHECK_THROWS_AS(partial_trace(psi, {1, 2, 3, 4}), Error);
    CHECK_THROWS_AS(partial_trace(psi, {0}), Error);
    CHECK_THROWS_AS(partial_trace(psi, {5}), Error);
    CHECK_THROWS_AS(partial_trace(psi, {2, 2}), Error);
    try {
        partial_trace(psi, {5});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name == "BadSubsystem");
    }

    // site order is normalized, not rejected
    DensityMatrix swapped = partial_trace(psi, {3, 1});
    CHECK(swapped.keep == std::vector<int>{1, 3});
    CHECK(swapped.rho.max_abs_diff(partial_trace(psi, {1, 3}).rho) == 0.0);
}

TEST_CASE("marginals have unit trace and complementary entropy") {
    std::mt19937_64 rng(311);
    std::vector<Vec> pool;
    for (const std::string& n : catalog_names()) pool.push_back(paper_state(n).amp);
    for (int i = 0; i < 30; ++i) pool.push_back(random_state(rng));

    const std::vector<std::vector<int>> cuts = {{1}, {2}, {1, 2}, {1, 3}, {1, 4}, {2, 3, 4}};
    for (const Vec& psi : pool) {
        for (const auto& keep : cuts) {
            std::vector<int> rest;
            for (int s = 1; s <= 4; ++s)
                if (std::find(keep.begin(), keep.end(), s) == keep.end()) rest.push_back(s);
            DensityMatrix a = partial_trace(psi, keep);
            DensityMatrix b = partial_trace(psi, rest);
            CHECK(std::abs(a.rho.trace() - cplx(1, 0)) < 1e-12);
            CHECK(a.rho.hermitian_defect() < 1e-13);
            CHECK(von_neumann_entropy(a) ==
                  doctest::Approx(von_neumann_entropy(b)).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("entropy is basis independent and rejects broken densities") {
    std::mt19937_64 rng(313);
    DensityMatrix dm = partial_trace(random_state(rng), {1, 2});

    // conjugate by the eigenbasis of an unrelated Hermitian matrix
    Mat h(4, 4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) h(i, j) = cplx(u(rng), u(rng));
    Mat v = hermitian_eig(h + h.dagger()).eigenvectors;
    DensityMatrix rotated{v * dm.rho * v.dagger(), dm.keep};
    CHECK(von_neumann_entropy(rotated) == doctest::Approx(von_neumann_entropy(dm)).epsilon(1e-9));

    // nats vs bits
    CHECK(von_neumann_entropy(dm, LogBase::two) ==
          doctest::Approx(von_neumann_entropy(dm) / std::log(2.0)).epsilon(1e-12));

    Mat off(2, 2);
    off(0, 0) = 0.7;
    off(1, 1) = 0.7;
    CHECK_THROWS_AS(von_neumann_entropy(DensityMatrix{off, {1}}), Error);

    Mat neg(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    try {
        von_neumann_entropy(DensityMatrix{neg, {1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name == "InvalidDensity");
    }
}

TEST_CASE("concurrence values across the catalog") {
    auto tau = [](const char* n) { return concurrence_tau(paper_state(n).amp); };
    CHECK(tau("GHZ") == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tau("W") == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(tau("chi00") == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    for (const char* n : {"g1", "g2", "g3", "g4", "o1", "o2", "o3", "o4", "e9", "e10",
                          "e11", "e12", "e13", "e14", "e15", "e16"})
        CHECK(concurrence_tau(paper_state(n).amp) == doctest::Approx(1.0).epsilon(1e-10));
    for (const char* n : {"S+A", "S-A", "S+B", "S-B"})
        CHECK(concurrence_tau(paper_state(n).amp) ==
              doctest::Approx(0.0).scale(1.0).epsilon(1e-10));

    Vec up(16, cplx(0, 0));
    up[0] = 1;
    CHECK(concurrence_tau(up) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("concurrence is bounded and phase invariant") {
    std::mt19937_64 rng(317);
    for (int trial = 0; trial < 1000; ++trial) {
        Vec psi = random_state(rng);
        double t = concurrence_tau(psi);
        CHECK(t >= 0.0);
        CHECK(t <= 1.0 + 1e-12);
    }
    std::uniform_real_distribution<double> ang(0.0, 6.28);
    for (int trial = 0; trial < 20; ++trial) {
        Vec psi = random_state(rng);
        double t0 = concurrence_tau(psi);
        cplx phase = std::exp(cplx(0, ang(rng)));
        Vec rotated = psi;
        for (auto& z : rotated) z *= phase;
        CHECK(concurrence_tau(rotated) == doctest::Approx(t0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("concurrence operator: string identities and ground action") {
    ConcurrenceReport r = concurrence_operator_check();
    CHECK(r.strings_ok);
    CHECK(r.dist_yyyy < 1e-12);
    CHECK(r.dist_zzzz < 1e-12);
    CHECK(r.dist_xxxx < 1e-12);
    CHECK(r.tau_ground_offdiag < 1e-10);

    // computed diagonal alternates starting at +1
    CHECK(r.tau_ground_diag[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.tau_ground_diag[1] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(r.tau_ground_diag[2] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.tau_ground_diag[3] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK_FALSE(r.tau_diag_matches_documented);
}
