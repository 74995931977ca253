// Copyright 2026 The conika authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include <conika/certifier.hpp>
#include <conika/designs.hpp>
#include <conika/entanglement.hpp>

#include "oracles.hpp"

using namespace conika;

namespace {

BipartiteState product_state_e00(std::size_t d) {
    BipartiteState s;
    s.dim = d;
    s.coefficients = ComplexMatrix(d, d);
    s.coefficients(0, 0) = 1.0;
    return s;
}

} // namespace

TEST_CASE("schmidt coefficients of the canonical states") {
    for (std::size_t d : {2u, 3u}) {
        const auto lambdas = schmidt_coefficients(max_entangled_bipartite(d));
        REQUIRE(lambdas.size() == d);
        for (const double l : lambdas) {
            CHECK(l == Catch::Approx(1.0 / std::sqrt(static_cast<double>(d))).margin(1e-12));
        }
    }

    const auto product = schmidt_coefficients(product_state_e00(3));
    CHECK(product[0] == Catch::Approx(1.0).margin(1e-12));
    CHECK(std::abs(product[1]) < 1e-9);
    CHECK(std::abs(product[2]) < 1e-9);

    BipartiteState diag;
    diag.dim = 2;
    diag.coefficients = ComplexMatrix(2, 2);
    diag.coefficients(0, 0) = std::sqrt(0.7);
    diag.coefficients(1, 1) = std::sqrt(0.3);
    const auto lambdas = schmidt_coefficients(diag);
    CHECK(lambdas[0] == Catch::Approx(std::sqrt(0.7)).margin(1e-12));
    CHECK(lambdas[1] == Catch::Approx(std::sqrt(0.3)).margin(1e-12));

    double sum_sq = 0.0;
    for (const double l : schmidt_coefficients(random_bipartite_state(3, 8)))
        sum_sq += l * l;
    CHECK(sum_sq == Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("probability table: frozen norms plus direct-summation oracle") {
    const Povm sic2 = sic_povm(2);

    const ProbabilityTable on_product = probability_vector(sic2, product_state_e00(2));
    CHECK(on_product.norm == Catch::Approx(1.0 / 3.0).margin(1e-12));
    CHECK(oracles::norm_of(oracles::direct_probabilities(
              sic2, product_state_e00(2).coefficients)) ==
          Catch::Approx(on_product.norm).margin(1e-12));

    const BipartiteState phi = max_entangled_bipartite(2);
    const ProbabilityTable on_phi = probability_vector(sic2, phi);
    CHECK(on_phi.norm * on_phi.norm == Catch::Approx(1.0 / 12.0).margin(1e-12));
    // direct summation over all 16 probabilities
    const auto direct = oracles::direct_probabilities(sic2, phi.coefficients);
    REQUIRE(direct.size() == 16);
    for (std::size_t k = 0; k < 16; ++k) {
        CHECK(on_phi.values[k] == Catch::Approx(direct[k]).margin(1e-12));
    }
}

TEST_CASE("probability tables behave like probabilities") {
    for (const Povm &p : {sic_povm(3), mub_full_set(2), depolarize(sic_povm(2), 0.5),
                          basis_povm(3)}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const BipartiteState s = random_bipartite_state(p.dim, 900 + seed);
            const ProbabilityTable t = probability_vector(p, s);
            double sum = 0.0;
            for (const double v : t.values) {
                CHECK(v >= -1e-12);
                sum += v;
            }
            CHECK(sum == Catch::Approx(1.0).margin(1e-9));
            CHECK(t.norm == Catch::Approx(oracles::norm_of(t.values)).margin(1e-12));
        }
    }

    CHECK_THROWS_AS(probability_vector(sic_povm(2), max_entangled_bipartite(3)),
                    std::invalid_argument);
}

TEST_CASE("pnorm_from_schmidt: closed-form cases") {
    const std::vector<double> product{1.0, 0.0};
    CHECK(pnorm_from_schmidt(1.0 / 3.0, 0.0, product) ==
          Catch::Approx(1.0 / 3.0).margin(1e-15));

    // maximally entangled: ‖p⃗‖² = (k_s²+k_a²)/2 + (k_s²−k_a²)/(2d)
    for (std::size_t d : {2u, 3u, 5u}) {
        std::vector<double> uniform(d, 1.0 / std::sqrt(static_cast<double>(d)));
        const double ks = 0.31;
        const double ka = 0.07;
        const double expected = std::sqrt((ks * ks + ka * ka) / 2.0 +
                                          (ks * ks - ka * ka) / (2.0 * d));
        CHECK(pnorm_from_schmidt(ks, ka, uniform) == Catch::Approx(expected).margin(1e-14));
    }

    const std::vector<double> balanced{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    const double p = pnorm_from_schmidt(1.0 / 3.0, 0.0, balanced);
    CHECK(p * p == Catch::Approx(1.0 / 12.0).margin(1e-14));
}

TEST_CASE("measured norm equals the Schmidt-side prediction") {
    for (const Povm &p : {sic_povm(2), mub_full_set(3), depolarize(sic_povm(3), 0.5)}) {
        const DesignCertificate cert = certify(p);
        REQUIRE(cert.is_conical_design);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const BipartiteState s = random_bipartite_state(p.dim, derive_seed(31, seed));
            const double measured = probability_vector(p, s).norm;
            const double predicted =
                pnorm_from_schmidt(cert.k_s, cert.k_a, schmidt_coefficients(s));
            CHECK(std::abs(measured - predicted) <= 1e-9);
        }
    }
}

TEST_CASE("norm identity in the doubled k± parametrization") {
    // with K± = k_s ± k_a the same norm reads
    // ‖p⃗‖² = (K₊² + K₋²)/4 + (K₊K₋/2)·Σλ⁴; both parametrizations and the
    // measured table must agree
    const Povm p = depolarize(sic_povm(3), 0.5);
    const DesignCertificate cert = certify(p);
    const double k_plus_doubled = cert.k_s + cert.k_a;
    const double k_minus_doubled = cert.k_s - cert.k_a;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const BipartiteState s = random_bipartite_state(3, derive_seed(606, seed));
        const auto lambdas = schmidt_coefficients(s);
        double sum4 = 0.0;
        for (const double l : lambdas) {
            sum4 += l * l * l * l;
        }
        const double doubled =
            std::sqrt((k_plus_doubled * k_plus_doubled +
                       k_minus_doubled * k_minus_doubled) / 4.0 +
                      0.5 * k_plus_doubled * k_minus_doubled * sum4);
        CHECK(doubled ==
              Catch::Approx(pnorm_from_schmidt(cert.k_s, cert.k_a, lambdas)).margin(1e-13));
        CHECK(doubled == Catch::Approx(probability_vector(p, s).norm).margin(1e-9));
    }
    // the stored certificate fields use the halved convention
    CHECK(cert.k_plus == Catch::Approx(k_plus_doubled / 2.0).margin(1e-15));
}

TEST_CASE("concurrence oracle: canonical values and local unitary invariance") {
    CHECK(concurrence_oracle(product_state_e00(2)) == Catch::Approx(0.0).margin(1e-12));
    CHECK(concurrence_oracle(max_entangled_bipartite(2)) ==
          Catch::Approx(1.0).margin(1e-12));
    for (std::size_t d : {2u, 3u, 5u}) {
        CHECK(concurrence_oracle(max_entangled_bipartite(d)) ==
              Catch::Approx(std::sqrt(2.0 - 2.0 / static_cast<double>(d))).margin(1e-12));
    }

    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const BipartiteState s = random_bipartite_state(3, derive_seed(55, trial));
        const double c = concurrence_oracle(s);
        BipartiteState moved;
        moved.dim = 3;
        moved.coefficients = haar_random_unitary(3, derive_seed(56, trial)) *
                             s.coefficients *
                             haar_random_unitary(3, derive_seed(57, trial)).transpose();
        CHECK(std::abs(concurrence_oracle(moved) - c) <= 1e-10);
    }
}

TEST_CASE("design_concurrence: boundary, frozen value, maximal entanglement") {
    const DesignCertificate cert = certify(sic_povm(2));

    CHECK(design_concurrence(cert, cert.k_s) == Catch::Approx(0.0).margin(1e-9));
    CHECK(design_concurrence(cert, std::sqrt(1.0 / 12.0)) ==
          Catch::Approx(1.0).margin(1e-9));

    // composed with the Schmidt-side norm at maximal entanglement
    for (std::size_t d : {2u, 3u}) {
        const Povm p = d == 2 ? sic_povm(2) : mub_full_set(3);
        const DesignCertificate c = certify(p);
        std::vector<double> uniform(d, 1.0 / std::sqrt(static_cast<double>(d)));
        const double pnorm = pnorm_from_schmidt(c.k_s, c.k_a, uniform);
        CHECK(design_concurrence(c, pnorm) ==
              Catch::Approx(std::sqrt(2.0 - 2.0 / static_cast<double>(d))).margin(1e-9));
    }
}

TEST_CASE("design_concurrence rejects inconsistent inputs") {
    const DesignCertificate cert = certify(sic_povm(2));
    CHECK_THROWS_AS(design_concurrence(cert, cert.k_s + 1e-3), std::domain_error);

    DesignCertificate not_design = certify(basis_povm(2));
    CHECK_THROWS_AS(design_concurrence(not_design, 0.2), std::invalid_argument);

    // just past the boundary but within tol clamps to zero
    CHECK(design_concurrence(cert, cert.k_s + 1e-10) == 0.0);
}

TEST_CASE("formula and oracle agree on Haar-random states") {
    for (const Povm &p : {sic_povm(2), mub_full_set(2), depolarize(sic_povm(2), 0.5),
                          sic_povm(3), mub_full_set(3), depolarize(mub_full_set(3), 0.5)}) {
        const DesignCertificate cert = certify(p);
        REQUIRE(cert.is_conical_design);
        const double cmax = std::sqrt(2.0 - 2.0 / static_cast<double>(p.dim));
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const BipartiteState s = random_bipartite_state(p.dim, derive_seed(1000, seed));
            const double formula =
                design_concurrence(cert, probability_vector(p, s).norm);
            CHECK(std::abs(formula - concurrence_oracle(s)) <= 1e-8);
            CHECK(formula >= 0.0);
            CHECK(formula <= cmax + 1e-9);
        }
    }
}

TEST_CASE("local unitary orbit: invariance for designs, spread for the basis POVM") {
    const Povm sic2 = sic_povm(2);
    const BipartiteState s = random_bipartite_state(2, 4242);
    const auto norms = local_unitary_orbit_norms(sic2, s, 50, 7);
    REQUIRE(norms.size() == 50);
    const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
    CHECK(*hi - *lo <= 1e-9);

    const auto basis_norms =
        local_unitary_orbit_norms(basis_povm(2), product_state_e00(2), 100, 7);
    REQUIRE(basis_norms.size() == 100);
    const auto [blo, bhi] = std::minmax_element(basis_norms.begin(), basis_norms.end());
    CHECK(*bhi - *blo >= 1e-3);

    // deterministic under seed
    const auto again = local_unitary_orbit_norms(sic2, s, 5, 7);
    const auto norms5 = local_unitary_orbit_norms(sic2, s, 5, 7);
    CHECK(again == norms5);

    CHECK(local_unitary_orbit_norms(sic2, s, 1, 7).size() == 1);
    CHECK_THROWS_AS(local_unitary_orbit_norms(sic2, s, 0, 7), std::invalid_argument);
}

TEST_CASE("operations reject unnormalized states") {
    BipartiteState bad;
    bad.dim = 2;
    bad.coefficients = ComplexMatrix(2, 2);
    bad.coefficients(0, 0) = 1.0;
    bad.coefficients(1, 1) = 0.5;
    CHECK_THROWS_AS(schmidt_coefficients(bad), std::invalid_argument);
    CHECK_THROWS_AS(concurrence_oracle(bad), std::invalid_argument);
    CHECK_THROWS_AS(probability_vector(sic_povm(2), bad), std::invalid_argument);
}
