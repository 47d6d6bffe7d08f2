#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "sicforge/heisenberg_weyl.hpp"

using namespace sicforge;

namespace {

constexpr double kPi = std::numbers::pi;

CVector random_unit(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    CVector v(d);
    for (int i = 0; i < d; ++i) v[i] = Complex{gauss(rng), gauss(rng)};
    v.normalize();
    return v;
}

CVector family3(double t) {
    CVector v(3);
    v << 0.0, 1.0, -std::polar(1.0, t);
    return v / std::sqrt(2.0);
}

CVector qubit_fiducial() {
    CVector v(2);
    v[0] = std::sqrt((3.0 + std::sqrt(3.0)) / 6.0);
    v[1] = std::polar(std::sqrt((3.0 - std::sqrt(3.0)) / 6.0), kPi / 4.0);
    return v;
}

// Matrix-product oracle: the integer e in [0, 2d) with D_k D_q = tau^e D_m.
int product_phase_oracle(const HWGroup& hw, DisplacementIndex k, DisplacementIndex q) {
    const int d = hw.dim();
    const CMatrix product = hw.displacement(k) * hw.displacement(q);
    const DisplacementIndex m{(k.k1 + q.k1) % d, (k.k2 + q.k2) % d};
    for (int e = 0; e < 2 * d; ++e) {
        if (max_abs(product - hw.tau_power(e) * hw.displacement(m)) < 1e-12) return e;
    }
    return -1;
}

} // namespace

TEST_CASE("commutation relation X Z X^-1 Z^-1 = omega^-1") {
    for (int d : {2, 3, 5, 7}) {
        const HWGroup hw(d);
        const CMatrix x = hw.displacement({1, 0});
        const CMatrix z = hw.displacement({0, 1});
        const CMatrix comm = x * z * x.adjoint() * z.adjoint();
        CHECK(max_abs(comm - hw.omega_power(-1) * CMatrix::Identity(d, d)) <= 1e-10);
    }
}

TEST_CASE("displacement basics") {
    const HWGroup hw(3);
    CHECK(max_abs(hw.displacement({0, 0}) - CMatrix::Identity(3, 3)) == 0.0);

    // X is the cyclic shift.
    CMatrix shift = CMatrix::Zero(3, 3);
    shift(1, 0) = shift(2, 1) = shift(0, 2) = 1.0;
    CHECK(max_abs(hw.displacement({1, 0}) - shift) <= 1e-15);

    // D_(1,1) = tau X Z, checked against the explicit product.
    const CMatrix xz = hw.displacement({1, 0}) * hw.displacement({0, 1});
    CHECK(max_abs(hw.displacement({1, 1}) - hw.tau_power(1) * xz) <= 1e-14);
}

TEST_CASE("displacement_product matches the matrix oracle for every pair") {
    for (int d : {2, 3, 5, 7}) {
        const HWGroup hw(d);
        for (int k1 = 0; k1 < d; ++k1)
            for (int k2 = 0; k2 < d; ++k2)
                for (int q1 = 0; q1 < d; ++q1)
                    for (int q2 = 0; q2 < d; ++q2) {
                        const DisplacementIndex k{k1, k2}, q{q1, q2};
                        const auto [e, m] = hw.displacement_product(k, q);
                        const CMatrix lhs = hw.displacement(k) * hw.displacement(q);
                        const CMatrix rhs = hw.tau_power(e) * hw.displacement(m);
                        REQUIRE(max_abs(lhs - rhs) < 1e-12);
                    }
    }
}

TEST_CASE("displacement_product frozen values from the oracle") {
    const HWGroup hw(3);
    // Identity index keeps the phase trivial.
    auto [e0, m0] = hw.displacement_product({2, 1}, {0, 0});
    CHECK(e0 == 0);
    CHECK(m0 == DisplacementIndex{2, 1});

    // Oracle gives D_(1,0) D_(0,1) = tau^-1 D_(1,1) and the reversed order
    // tau^+1 D_(1,1).
    const int oracle_xy = product_phase_oracle(hw, {1, 0}, {0, 1});
    const int oracle_yx = product_phase_oracle(hw, {0, 1}, {1, 0});
    CHECK(std::abs(hw.tau_power(oracle_xy) - hw.tau_power(-1)) < 1e-14);
    CHECK(std::abs(hw.tau_power(oracle_yx) - hw.tau_power(1)) < 1e-14);

    const auto [exy, mxy] = hw.displacement_product({1, 0}, {0, 1});
    CHECK(mxy == DisplacementIndex{1, 1});
    CHECK(std::abs(hw.tau_power(exy) - hw.tau_power(oracle_xy)) < 1e-14);
    const auto [eyx, myx] = hw.displacement_product({0, 1}, {1, 0});
    CHECK(myx == DisplacementIndex{1, 1});
    CHECK(std::abs(hw.tau_power(eyx) - hw.tau_power(oracle_yx)) < 1e-14);
}

TEST_CASE("fiducial condition") {
    const HWGroup hw3(3);
    for (double t : {0.0, 0.2, kPi / 9.0, kPi / 3.0, 1.9}) {
        const auto [ok, dev] = hw3.is_fiducial(family3(t), 1e-9);
        CHECK(ok);
        CHECK(dev < 1e-12);
    }

    const HWGroup hw2(2);
    const auto [ok2, dev2] = hw2.is_fiducial(qubit_fiducial(), 1e-9);
    CHECK(ok2);
    CHECK(dev2 < 1e-12);

    // A basis vector is a Z eigenvector: deviation d/(d+1).
    CVector e0 = CVector::Zero(3);
    e0[0] = 1.0;
    const auto [bad, dev_bad] = hw3.is_fiducial(e0, 1e-9);
    CHECK_FALSE(bad);
    CHECK(dev_bad == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("sic_from_fiducial builds equiangular sets") {
    const HWGroup hw3(3);
    const auto sic3 = hw3.sic_from_fiducial(family3(0.0));
    REQUIRE(sic3.size() == 9);
    for (size_t j = 0; j < 9; ++j)
        for (size_t k = j + 1; k < 9; ++k)
            CHECK(std::norm(sic3[j].dot(sic3[k])) == doctest::Approx(0.25).epsilon(1e-10));

    const HWGroup hw2(2);
    const auto sic2 = hw2.sic_from_fiducial(qubit_fiducial());
    REQUIRE(sic2.size() == 4);
    for (size_t j = 0; j < 4; ++j)
        for (size_t k = j + 1; k < 4; ++k)
            CHECK(std::norm(sic2[j].dot(sic2[k])) == doctest::Approx(1.0 / 3).epsilon(1e-10));

    CVector e0 = CVector::Zero(3);
    e0[0] = 1.0;
    CHECK_THROWS_AS(hw3.sic_from_fiducial(e0), NotFiducial);
}

TEST_CASE("HW orbit of any unit vector resolves the identity") {
    std::mt19937_64 rng(21);
    for (int d : {2, 3, 5, 7}) {
        const HWGroup hw(d);
        const CVector psi = random_unit(d, rng);
        CMatrix sum = CMatrix::Zero(d, d);
        for (int k1 = 0; k1 < d; ++k1)
            for (int k2 = 0; k2 < d; ++k2) {
                const CVector v = hw.displacement({k1, k2}) * psi;
                sum += v * v.adjoint();
            }
        CHECK(max_abs(sum - static_cast<double>(d) * CMatrix::Identity(d, d)) <= 1e-9);
    }
}

TEST_CASE("unimodular qubit HW form closes under multiplication exactly") {
    const auto elements = HWGroup::unimodular_qubit_elements();
    REQUIRE(elements.size() == 8);
    for (const auto& a : elements) {
        CHECK(std::abs(a.determinant() - Complex{1.0, 0.0}) == 0.0);
        for (const auto& b : elements) {
            const CMatrix product = a * b;
            bool found = false;
            for (const auto& c : elements) {
                if (max_abs(product - c) == 0.0) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}
