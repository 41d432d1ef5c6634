#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include <nlohmann/json.hpp>

#include "entdist/io.hpp"
#include "entdist/measures.hpp"
#include "entdist/states.hpp"

using namespace entdist;

TEST_CASE("pure_from_amplitudes") {
    Vector v(2);
    v << 1, 0;
    PureState s = pure_from_amplitudes(Dims{2}, v);
    CHECK(std::abs(s.amplitudes(0) - 1.0) < 1e-12);

    Vector unnorm(2);
    unnorm << 2, 0;
    PureState n = pure_from_amplitudes(Dims{2}, unnorm);
    CHECK(std::abs(n.amplitudes(0) - 1.0) < 1e-12);

    CHECK_THROWS_AS(pure_from_amplitudes(Dims{2}, Vector::Zero(2)), std::invalid_argument);
    CHECK_THROWS_AS(pure_from_amplitudes(Dims{2}, Vector::Ones(3)), std::invalid_argument);
}

TEST_CASE("bell pair") {
    PureState bell = bell_phi_plus();
    DensityMatrix rho = density_from_pure(bell);
    CHECK(approx_equal(partial_trace(rho.mat, rho.dims, {0}), identity2() / 2.0));
    CHECK(approx_equal(partial_trace(rho.mat, rho.dims, {1}), identity2() / 2.0));
    CHECK(negativity(rho, {{0}}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(bell.amplitudes(1)) < 1e-15); // no |01> component
}

TEST_CASE("werner family") {
    DensityMatrix top = werner(1.0);
    PureState bell = bell_phi_plus();
    CHECK(approx_equal(top.mat, bell.amplitudes * bell.amplitudes.adjoint()));

    // separable below p = 1/3
    CHECK(negativity(werner(1.0 / 3.0), {{0}}) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(negativity(werner(0.2), {{0}}) == doctest::Approx(0.0));
    // closed form (3p-1)/4 above
    CHECK(negativity(werner(0.34), {{0}}) == doctest::Approx(0.005).epsilon(1e-9));
    CHECK(negativity(werner(1.0), {{0}}) == doctest::Approx(0.5));

    SUBCASE("minimum eigenvalue (1-p)/4") {
        for (double p : {0.0, 0.3, 0.7, 1.0}) {
            HermitianSpectrum ev = hermitian_eigenvalues(werner(p).mat);
            CHECK(ev.back() == doctest::Approx((1.0 - p) / 4.0).epsilon(1e-10));
        }
    }

    CHECK_THROWS_AS(werner(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(werner(1.1), std::invalid_argument);
}

TEST_CASE("ancilla state") {
    DensityMatrix plus = ancilla_alpha(1.0);
    Vector p(2);
    p << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    CHECK(approx_equal(plus.mat, p * p.adjoint()));

    CHECK(approx_equal(ancilla_alpha(0.0).mat, identity2() / 2.0));

    HermitianSpectrum ev = hermitian_eigenvalues(ancilla_alpha(2.0 / 3.0).mat);
    CHECK(ev[0] == doctest::Approx(5.0 / 6.0));
    CHECK(ev[1] == doctest::Approx(1.0 / 6.0));

    CHECK_THROWS_AS(ancilla_alpha(1.5), std::invalid_argument);
}

TEST_CASE("five-qubit maximally entangled state") {
    PureState psi = ame5();
    CHECK(psi.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-14));
    DensityMatrix rho = density_from_pure(psi);

    SUBCASE("every single-qubit marginal is I/2") {
        for (int i = 0; i < 5; ++i)
            CHECK(approx_equal(partial_trace(rho.mat, rho.dims, {i}), identity2() / 2.0, 1e-12));
    }

    SUBCASE("every two-qubit marginal is I/4") {
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                CHECK(approx_equal(partial_trace(rho.mat, rho.dims, {i, j}),
                                   Matrix::Identity(4, 4) / 4.0, 1e-12));
    }

    SUBCASE("negativity across 2:3 splits is 3/2") {
        CHECK(negativity(rho, {{0, 1}}) == doctest::Approx(1.5).epsilon(1e-11));
        CHECK(negativity(rho, {{1, 3}}) == doctest::Approx(1.5).epsilon(1e-11));
        CHECK(negativity(rho, {{2, 4}}) == doctest::Approx(1.5).epsilon(1e-11));
    }
}

TEST_CASE("schmidt decomposition") {
    SUBCASE("bell pair") {
        SchmidtDecomposition sd = schmidt(bell_phi_plus(), {0});
        REQUIRE(sd.rank == 2);
        CHECK(sd.coefficients[0] == doctest::Approx(0.5));
        CHECK(sd.coefficients[1] == doctest::Approx(0.5));
    }

    SUBCASE("qutrit witness has a flat rank-3 spectrum on A") {
        SchmidtDecomposition sd = schmidt(excessive_witness_qutrit(), {0});
        REQUIRE(sd.rank == 3);
        for (double c : sd.coefficients)
            CHECK(c == doctest::Approx(1.0 / 3.0).epsilon(1e-11));
    }

    SUBCASE("ququart witness on C") {
        SchmidtDecomposition sd = schmidt(excessive_witness_ququart(), {2});
        REQUIRE(sd.rank == 2);
        CHECK(sd.coefficients[0] == doctest::Approx(101.0 / 103.0).epsilon(1e-11));
        CHECK(sd.coefficients[1] == doctest::Approx(2.0 / 103.0).epsilon(1e-11));
    }

    SUBCASE("coefficients match on both sides of any cut") {
        for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
            PureState psi = haar_random_pure(Dims{3, 2, 2}, seed);
            for (const std::vector<int>& left : {std::vector<int>{0}, {1}, {0, 2}}) {
                SchmidtDecomposition a = schmidt(psi, left);
                SchmidtDecomposition b = schmidt(psi, complement(psi.dims, left));
                REQUIRE(a.rank == b.rank);
                for (int i = 0; i < a.rank; ++i)
                    CHECK(a.coefficients[static_cast<std::size_t>(i)] ==
                          doctest::Approx(b.coefficients[static_cast<std::size_t>(i)])
                              .epsilon(1e-9));
            }
        }
    }

    SUBCASE("coefficients sum to one") {
        SchmidtDecomposition sd = schmidt(haar_random_pure(Dims{4, 3}, 99), {0});
        double sum = 0.0;
        for (double c : sd.coefficients)
            sum += c;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }

    CHECK_THROWS_AS(schmidt(bell_phi_plus(), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(schmidt(bell_phi_plus(), {}), std::invalid_argument);
}

TEST_CASE("haar sampling") {
    PureState a = haar_random_pure(Dims{2, 2}, 7);
    PureState b = haar_random_pure(Dims{2, 2}, 7);
    CHECK(approx_equal(a.amplitudes, b.amplitudes, 0.0));
    PureState c = haar_random_pure(Dims{2, 2}, 8);
    CHECK_FALSE(approx_equal(a.amplitudes, c.amplitudes, 1e-6));
    CHECK(a.amplitudes.norm() == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("mean single-qubit purity matches the two-qubit Haar moment 4/5") {
        double sum = 0.0;
        int n = 1000;
        for (int i = 0; i < n; ++i) {
            PureState psi = haar_random_pure(Dims{2, 2}, mix_seed(404, i));
            Matrix red = partial_trace(psi.amplitudes * psi.amplitudes.adjoint(), psi.dims, {0});
            sum += (red * red).trace().real();
        }
        CHECK(std::abs(sum / n - 0.8) < 0.02);
    }

    SUBCASE("real ensemble stays real") {
        PureState r = haar_random_pure(Dims{4, 2, 2}, 11, Ensemble::Real);
        for (int i = 0; i < r.dims.total(); ++i)
            CHECK(r.amplitudes(i).imag() == 0.0);
    }
}

TEST_CASE("density_from_pure") {
    Vector v(2);
    v << 1, 0;
    DensityMatrix rho = density_from_pure(PureState(Dims{2}, v));
    CHECK(rho.mat(0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(rho.mat(1, 1)) < 1e-15);
    CHECK(std::abs(rho.mat.trace().real() - 1.0) < 1e-12);

    DensityMatrix h = density_from_pure(haar_random_pure(Dims{3, 2}, 5));
    CHECK((h.mat * h.mat).trace().real() == doctest::Approx(1.0).epsilon(1e-10));
    h.validate_psd();
}

TEST_CASE("json round trip") {
    PureState psi = haar_random_pure(Dims{3, 2}, 17);
    nlohmann::json j = to_json(psi);
    CHECK(j["dims"] == std::vector<int>{3, 2});
    PureState back = pure_state_from_json(j);
    CHECK(back.dims == psi.dims);
    CHECK(approx_equal(back.amplitudes, psi.amplitudes, 1e-15));

    DensityMatrix rho = werner(0.4);
    DensityMatrix rho_back = density_matrix_from_json(to_json(rho));
    CHECK(approx_equal(rho_back.mat, rho.mat, 1e-15));
}
