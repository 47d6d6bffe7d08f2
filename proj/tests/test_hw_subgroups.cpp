#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sicforge/hw_subgroups.hpp"

using namespace sicforge;

namespace {

constexpr double kPi = std::numbers::pi;

Subgroup standard_hw(int p) {
    Subgroup d;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) d.push_back({Mat2::identity(p), {x, y}});
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("sylow subgroups of the clifford group") {
    for (int p : {3, 5, 7}) {
        const PrimeModulus pm(p);
        const size_t expected = static_cast<size_t>(p) * p * p;
        Subgroup meet = sylow_P(pm, 1);
        CHECK(meet.size() == expected);
        for (int j = 2; j <= p + 1; ++j) {
            const auto pj = sylow_P(pm, j);
            CHECK(pj.size() == expected);
            meet = intersect(meet, pj);
        }
        CHECK_THROWS_AS(sylow_P(pm, p + 2), IndexOutOfRange);

        // The intersection of all Sylow p-subgroups is the standard HW group.
        CHECK(meet == standard_hw(p));
    }
}

TEST_CASE("centre of P_1 is generated by Z") {
    for (int p : {3, 5, 7}) {
        const PrimeModulus pm(p);
        const auto centre = subgroup_centre(sylow_P(pm, 1));
        CHECK(centre.size() == static_cast<size_t>(p));
        for (const auto& g : centre) {
            CHECK(g.F == Mat2::identity(p));
            CHECK(g.chi.x == 0);
        }
    }
}

TEST_CASE("all non-identity elements of P_1 have order p") {
    for (int p : {3, 5}) {
        for (const auto& g : sylow_P(PrimeModulus(p), 1)) {
            if (!g.is_identity()) CHECK(g.order() == p);
        }
    }
}

TEST_CASE("HW subgroup census") {
    for (int p : {3, 5, 7}) {
        const CliffordGroup cg(p);
        const auto census = list_hw_subgroups(cg);
        CHECK(census.hw.size() == static_cast<size_t>(p) * p);
        CHECK(census.diagonal.size() == static_cast<size_t>(p) + 1);
        // Standard group first.
        CHECK(census.hw.front().elements == standard_hw(p));
        for (const auto& sub : census.hw) {
            CHECK(sub.elements.size() == static_cast<size_t>(p) * p);
            // Abelian as collineation labels.
            for (const auto& a : sub.elements) {
                CHECK(compose(a, sub.other_gen) == compose(sub.other_gen, a));
            }
        }
        // Excluded subgroups have commuting matrix lifts; the one inside P_1
        // (all chi_1 = 0) is literally diagonal.
        for (const auto& sub : census.diagonal) {
            const CMatrix a = cg.synthesize(sub[1], false).matrix;
            const CMatrix b = cg.synthesize(sub.back(), false).matrix;
            CHECK(max_abs(a * b - b * a) <= 1e-9);

            const bool in_p1 = std::all_of(sub.begin(), sub.end(), [](const AffineSymplectic& g) {
                return g.chi.x == 0;
            });
            if (in_p1) {
                for (const auto& g : sub) {
                    CMatrix off = cg.synthesize(g, false).matrix;
                    off.diagonal().setZero();
                    CHECK(max_abs(off) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("permuting unitary at p = 3 matches the closed form") {
    const CliffordGroup cg(3);
    const auto pu = permuting_unitary(cg);
    CHECK(std::abs(pu.u(0, 0) - Complex{1.0, 0.0}) <= 1e-15);
    CHECK(std::abs(pu.u(1, 1) - std::polar(1.0, -2.0 * kPi / 9.0)) <= 1e-15);
    CHECK(std::abs(pu.u(2, 2) - std::polar(1.0, -4.0 * kPi / 9.0)) <= 1e-15);
    // det(V') = 1 for the phase-adjusted generator.
    CHECK(std::abs(pu.v_adjusted.determinant() - Complex{1.0, 0.0}) <= 1e-12);
}

TEST_CASE("permuting unitary conjugates the HW pairs") {
    for (int p : {3, 5, 7}) {
        const CliffordGroup cg(p);
        const auto pu = permuting_unitary(cg);
        const CMatrix x = cg.hw().displacement({1, 0});
        const CMatrix z = cg.hw().displacement({0, 1});

        // tau^(1 + 4 + ... + (p-1)^2) = 1 for p >= 5.
        if (p >= 5) CHECK(std::abs(pu.u(p - 1, p - 1) - Complex{1.0, 0.0}) <= 1e-12);

        CMatrix uj = CMatrix::Identity(p, p);
        CMatrix vj = CMatrix::Identity(p, p);
        for (int j = 0; j < p; ++j) {
            CHECK(max_abs(uj * z * uj.adjoint() - z) <= 1e-9);
            CHECK(max_abs(uj * x * uj.adjoint() - vj * x) <= 1e-9);
            uj = uj * pu.u;
            vj = vj * pu.v_adjusted;
        }
    }
}

TEST_CASE("extra HW groups fall into the predicted orbits") {
    for (int p : {3, 5, 7}) {
        const CliffordGroup cg(p);
        const auto analysis = analyze_hw_subgroups(cg);
        std::vector<size_t> sizes;
        for (const auto& orbit : analysis.orbits) sizes.push_back(orbit.size());
        std::sort(sizes.begin(), sizes.end());

        const int expected_orbits = cube_class_count(PrimeModulus(p));
        CHECK(static_cast<int>(sizes.size()) == expected_orbits);
        const size_t total = static_cast<size_t>(p) * p - 1;
        for (size_t s : sizes) CHECK(s == total / static_cast<size_t>(expected_orbits));
    }
}

TEST_CASE("witnesses conjugate the standard HW group onto each subgroup") {
    for (int p : {3, 5}) {
        const CliffordGroup cg(p);
        const auto analysis = analyze_hw_subgroups(cg);
        const CMatrix x = cg.hw().displacement({1, 0});
        const CMatrix z = cg.hw().displacement({0, 1});
        for (size_t i = 0; i < analysis.census.hw.size(); ++i) {
            const auto& sub = analysis.census.hw[i];
            const CMatrix& w = analysis.witnesses[i];
            REQUIRE(w.size() > 0);
            std::vector<CMatrix> targets;
            for (const auto& g : sub.elements) targets.push_back(cg.synthesize(g, false).matrix);
            for (const CMatrix& gen : {CMatrix(w * x * w.adjoint()), CMatrix(w * z * w.adjoint())}) {
                bool found = false;
                for (const auto& t : targets) {
                    if (proj_equal_unitary(gen, t)) {
                        found = true;
                        break;
                    }
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("normalizer of a non-standard HW group in the clifford group") {
    for (int p : {3, 5, 7}) {
        const CliffordGroup cg(p);
        const PrimeModulus pm(p);
        // D' = <Z, VX> inside P_1.
        const AffineSymplectic z{Mat2::identity(p), {0, 1}};
        const AffineSymplectic v{Mat2{1, 0, 1, 1, p}, {0, 0}};
        const AffineSymplectic x{Mat2::identity(p), {1, 0}};
        const AffineSymplectic vx = compose(v, x);
        const Subgroup dprime = closure({z, vx});
        REQUIRE(dprime.size() == static_cast<size_t>(p) * p);

        const auto norm = normalizer_in_clifford(pm, dprime);
        const auto p1 = sylow_P(pm, 1);
        const bool three_divides = (p - 1) % 3 == 0;
        if (!three_divides) {
            CHECK(norm == p1);
        } else {
            CHECK(norm.size() == 3 * p1.size());
            CHECK(is_subgroup_of(p1, norm));
            // alpha^3 = 1 for every element of the normalizer.
            for (const auto& g : norm) CHECK(mod_pow(g.F.a, 3, p) == 1);
        }
    }
}
