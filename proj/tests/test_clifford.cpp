#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "sicforge/clifford.hpp"
#include "sicforge/search.hpp"

using namespace sicforge;

namespace {

constexpr double kPi = std::numbers::pi;

CVector family3(double t) {
    CVector v(3);
    v << 0.0, 1.0, -std::polar(1.0, t);
    return v / std::sqrt(2.0);
}

AffineSymplectic random_label(const std::vector<AffineSymplectic>& pool, std::mt19937_64& rng) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    return pool[pick(rng)];
}

} // namespace

TEST_CASE("synthesize named generators") {
    for (int p : {3, 5, 7}) {
        const CliffordGroup cg(p);
        // [1, (1,0)] is X up to phase.
        const auto x = cg.synthesize({Mat2::identity(p), {1, 0}});
        CHECK(proj_equal_unitary(x.matrix, cg.hw().displacement({1, 0})));
        CHECK_FALSE(x.antiunitary);

        // [c1, 0] is diag(1, tau, tau^4, ..., tau^((p-1)^2)).
        const auto v = cg.synthesize({Mat2{1, 0, 1, 1, p}, {0, 0}});
        CMatrix expected = CMatrix::Zero(p, p);
        for (int s = 0; s < p; ++s) expected(s, s) = cg.hw().tau_power(static_cast<long long>(s) * s);
        CHECK(max_abs(v.matrix - expected) <= 1e-12);

        // The Fourier-type V for ((0,-1),(1,0)): entries tau^(2rs)/sqrt(p).
        const auto f = cg.synthesize({Mat2{0, p - 1, 1, 0, p}, {0, 0}});
        const double scale = 1.0 / std::sqrt(static_cast<double>(p));
        for (int r = 0; r < p; ++r)
            for (int s = 0; s < p; ++s)
                CHECK(std::abs(f.matrix(r, s) - scale * cg.hw().tau_power(2LL * r * s)) <= 1e-12);
    }
}

TEST_CASE("conjugation law holds for every label at p = 3") {
    const CliffordGroup cg(3);
    for (const auto& label : enumerate_group(PrimeModulus(3), GroupKind::ESLAffine)) {
        const auto op = cg.synthesize(label, /*verify=*/false);
        CHECK(cg.conjugation_law_deviation(op) <= 1e-9);
        CHECK(op.antiunitary == (label.F.det() == 2));
    }
}

TEST_CASE("conjugation law holds on random labels at p = 5 and 7") {
    std::mt19937_64 rng(99);
    for (int p : {5, 7}) {
        const CliffordGroup cg(p);
        const auto pool = enumerate_group(PrimeModulus(p), GroupKind::ESLAffine);
        for (int trial = 0; trial < 200; ++trial) {
            const auto op = cg.synthesize(random_label(pool, rng), /*verify=*/false);
            CHECK(cg.conjugation_law_deviation(op) <= 1e-9);
        }
    }
}

TEST_CASE("synthesized operators are unitary") {
    std::mt19937_64 rng(3);
    const CliffordGroup cg(7);
    const auto pool = enumerate_group(PrimeModulus(7), GroupKind::ESLAffine);
    for (int trial = 0; trial < 100; ++trial) {
        const auto op = cg.synthesize(random_label(pool, rng), /*verify=*/false);
        CHECK(approx_unitary(op.matrix, 1e-10));
    }
}

TEST_CASE("the conjugation operator and the fiducial family") {
    const CliffordGroup cg(3);
    // [J, 0] acts as complex conjugation: matrix part is the identity.
    const auto j = cg.synthesize({Mat2{1, 0, 0, 2, 3}, {0, 0}});
    CHECK(j.antiunitary);
    CHECK(max_abs(j.matrix - CMatrix::Identity(3, 3)) <= 1e-12);

    for (double t : {0.1, 0.7, 2.0}) {
        CHECK(proj_equal(j.apply(family3(t)), family3(-t), 1e-12));
    }

    // Identity label leaves vectors unchanged.
    const auto id = cg.synthesize(AffineSymplectic::identity(3));
    CHECK(proj_equal(id.apply(family3(0.3)), family3(0.3), 1e-12));
}

TEST_CASE("clifford action preserves the fiducial condition") {
    std::mt19937_64 rng(1234);
    for (int p : {3, 5}) {
        const CliffordGroup cg(p);
        const auto pool = enumerate_group(PrimeModulus(p), GroupKind::ESLAffine);
        CVector psi;
        if (p == 3) {
            psi = family3(0.37);
        } else {
            SearchConfig cfg;
            cfg.dim = 5;
            cfg.seed = 42;
            const SearchResult found = search(cfg);
            REQUIRE(found.converged);
            psi = found.best;
        }
        for (int trial = 0; trial < 20; ++trial) {
            const auto op = cg.synthesize(random_label(pool, rng), /*verify=*/false);
            const auto [ok, dev] = cg.hw().is_fiducial(op.apply(psi), 1e-8);
            CHECK(ok);
        }
    }
}

TEST_CASE("composition of labels matches composition of actions") {
    std::mt19937_64 rng(555);
    const CliffordGroup cg(3);
    const auto pool = enumerate_group(PrimeModulus(3), GroupKind::ESLAffine);
    for (int trial = 0; trial < 500; ++trial) {
        const auto g = cg.synthesize(random_label(pool, rng), false);
        const auto h = cg.synthesize(random_label(pool, rng), false);
        const CliffordOp gh = compose(g, h);
        const CliffordOp direct = cg.synthesize(gh.label, false);
        CHECK(gh.antiunitary == direct.antiunitary);
        CHECK(proj_equal_unitary(gh.matrix, direct.matrix, 1e-9));
    }
}

TEST_CASE("enumerate returns one op per collineation element") {
    const CliffordGroup cg(3);
    const auto unitary = cg.enumerate(false);
    CHECK(unitary.size() == 216);
    const auto extended = cg.enumerate(true);
    CHECK(extended.size() == 432);
    int n_anti = 0;
    for (const auto& op : extended) n_anti += op.antiunitary;
    CHECK(n_anti == 216);
    CHECK_THROWS_AS(CliffordGroup(7).enumerate(false, 1000), TooLarge);
}

TEST_CASE("spectrum census reproduces the degeneracy claims") {
    for (int p : {3, 5, 7, 11}) {
        const CliffordGroup cg(p);
        const auto census = cg.spectrum_census();
        CHECK(static_cast<int>(census.size()) == 2 * p + 4);

        const std::vector<int> all_ones(static_cast<size_t>(p), 1);

        // [1,(1,0)] has the spectrum of Z: nondegenerate.
        CHECK(census.at({ClassFamily::Translation, 0}) == all_ones);
        // [z,0]: two eigenvalues with multiplicities (p -+ 1)/2.
        CHECK(census.at({ClassFamily::Z, 0}) == std::vector<int>{(p - 1) / 2, (p + 1) / 2});
        // [b,0] nondegenerate.
        CHECK(census.at({ClassFamily::B, 1}) == all_ones);
        // [zc_i,0] nondegenerate.
        CHECK(census.at({ClassFamily::ZC1, 0}) == all_ones);
        CHECK(census.at({ClassFamily::ZC2, 0}) == all_ones);
        // [c_i,0]: doubly degenerate except one eigenvalue.
        std::vector<int> c_pattern{1};
        for (int i = 0; i < (p - 1) / 2; ++i) c_pattern.push_back(2);
        std::sort(c_pattern.begin(), c_pattern.end());
        CHECK(census.at({ClassFamily::C1, 0}) == c_pattern);
        CHECK(census.at({ClassFamily::C2, 0}) == c_pattern);
        // [c_i,(k,0)]: same spectrum as Z.
        for (int k = 1; k <= (p - 1) / 2; ++k) {
            CHECK(census.at({ClassFamily::C1K, k}) == all_ones);
            CHECK(census.at({ClassFamily::C2K, k}) == all_ones);
        }
        // [a,0]: eigenvalue 1 doubly degenerate, the rest nondegenerate.
        if (p >= 5) {
            std::vector<int> a_pattern(static_cast<size_t>(p - 2), 1);
            a_pattern.push_back(2);
            std::sort(a_pattern.begin(), a_pattern.end());
            CHECK(census.at({ClassFamily::A, 1}) == a_pattern);
        }
    }
}

TEST_CASE("spectrum of class powers is the power of the base spectrum") {
    const int p = 7;
    const CliffordGroup cg(p);
    for (auto family : {ClassFamily::A, ClassFamily::B}) {
        const int max_index = family == ClassFamily::A ? (p - 3) / 2 : (p - 1) / 2;
        const auto base = cg.synthesize(class_representative(PrimeModulus(p), {family, 1}));
        for (int idx = 2; idx <= max_index; ++idx) {
            const auto rep = cg.synthesize(class_representative(PrimeModulus(p), {family, idx}));
            CMatrix power = CMatrix::Identity(p, p);
            for (int i = 0; i < idx; ++i) power = power * base.matrix;
            CHECK(spectrum_multiplicities(rep.matrix) == spectrum_multiplicities(power));
        }
    }
}

TEST_CASE("V_F is monomial exactly when beta = 0, a permutation when also gamma = 0") {
    for (int p : {3, 5}) {
        const CliffordGroup cg(p);
        for (const auto& g : enumerate_group(PrimeModulus(p), GroupKind::SL)) {
            const CMatrix v = cg.v_matrix(g.F);
            CHECK(is_monomial(v) == (g.F.b == 0));
            if (g.F.b == 0 && g.F.c == 0) {
                // Exactly a permutation matrix: every entry is 0 or 1.
                double worst = 0.0;
                for (int r = 0; r < p; ++r)
                    for (int s = 0; s < p; ++s)
                        worst = std::max(worst, std::min(std::abs(v(r, s)),
                                                         std::abs(v(r, s) - Complex{1, 0})));
                CHECK(worst <= 1e-12);
            }
        }
    }
}

TEST_CASE("trace magnitude of V_F is 1 off the unipotent wall") {
    for (int p : {3, 5, 7}) {
        const CliffordGroup cg(p);
        for (const auto& g : enumerate_group(PrimeModulus(p), GroupKind::SL)) {
            if (g.F.b == 0 || g.F.trace() == 2) continue;
            const double tr2 = std::norm(cg.v_matrix(g.F).trace());
            CHECK(tr2 == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("determinant of the diagonal generator V") {
    // det(V) = tau^(p(p-1)(2p-1)/6): exp(2 pi i/3) at p = 3, 1 for p >= 5.
    const CliffordGroup cg3(3);
    const Complex det3 = cg3.v_matrix(Mat2{1, 0, 1, 1, 3}).determinant();
    CHECK(std::abs(det3 - std::polar(1.0, 2.0 * kPi / 3.0)) <= 1e-12);

    for (int p : {5, 7}) {
        const CliffordGroup cg(p);
        const Complex det = cg.v_matrix(Mat2{1, 0, 1, 1, p}).determinant();
        CHECK(std::abs(det - Complex{1.0, 0.0}) <= 1e-10);
    }
}

TEST_CASE("qubit clifford group") {
    const auto unitary = qubit_clifford_group(false);
    CHECK(unitary.size() == 24);
    const auto extended = qubit_clifford_group(true);
    CHECK(extended.size() == 48);

    // Closed under products (projectively).
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<size_t> pick(0, unitary.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const CMatrix product = unitary[pick(rng)].matrix * unitary[pick(rng)].matrix;
        bool found = false;
        for (const auto& op : unitary) {
            if (proj_equal_unitary(product, op.matrix)) {
                found = true;
                break;
            }
        }
        CHECK(found);
    }
}

TEST_CASE("odd prime is required") {
    CHECK_THROWS_AS(CliffordGroup(2), std::invalid_argument);
    CHECK_THROWS_AS(CliffordGroup(4), std::invalid_argument);
}
