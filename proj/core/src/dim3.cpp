#include "sicforge/dim3.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cmath>
#include <numbers>

namespace sicforge {

namespace {
constexpr double kPi = std::numbers::pi;

double positive_fmod(double x, double m) {
    double r = std::fmod(x, m);
    if (r < 0) r += m;
    return r;
}
} // namespace

CVector family_fiducial(double t) {
    CVector v(3);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    v[0] = 0.0;
    v[1] = inv_sqrt2;
    v[2] = -std::polar(inv_sqrt2, t);
    return v;
}

FamilyPoint canonicalize_t(double t) {
    // Same SIC under t -> t + 2pi/3 (a Z-shift) and the extended orbit under
    // t -> -t (conjugation): fundamental domain [0, pi/3].
    const double u = positive_fmod(t, 2.0 * kPi / 3.0);
    const double canonical = std::min(u, 2.0 * kPi / 3.0 - u);
    // U-twist equivalences t ~ 2pi/9 +- t fold [0, pi/3] onto [0, pi/9].
    const double v = positive_fmod(canonical, 2.0 * kPi / 9.0);
    const double rep = std::min(v, 2.0 * kPi / 9.0 - v);
    return {t, canonical, rep};
}

double phi_min_for_class(double class_rep) {
    return kPi / 3.0 - 3.0 * class_rep;
}

OrbitKind orbit_kind(double t, double eps) {
    const double canonical = canonicalize_t(t).canonical_t;
    if (canonical <= eps) return OrbitKind::ExceptionalZero;
    if (std::abs(canonical - kPi / 3.0) <= eps) return OrbitKind::ExceptionalPiThird;
    return OrbitKind::Generic;
}

OrbitFacts orbit_facts(OrbitKind kind) {
    switch (kind) {
    case OrbitKind::ExceptionalZero: return {24, 48, 1};
    case OrbitKind::ExceptionalPiThird: return {6, 12, 4};
    case OrbitKind::Generic: return {3, 6, 8};
    }
    return {0, 0, 0};
}

std::vector<CycleStep> equivalence_triple(double t, const CliffordGroup& cg) {
    if (cg.dim() != 3) throw DimMismatch("equivalence_triple: requires p = 3");
    const CMatrix udag = permuting_unitary(cg).u.adjoint();
    const auto& hw = cg.hw();

    struct Named {
        std::string name;
        double param;
    };
    const std::vector<Named> sics{
        {"A+", t},  {"A-", -t},
        {"B+", 2.0 * kPi / 9.0 - t}, {"B-", -(2.0 * kPi / 9.0 - t)},
        {"C+", 2.0 * kPi / 9.0 + t}, {"C-", -(2.0 * kPi / 9.0 + t)},
    };
    auto vectors_of = [&](double param) { return hw.sic_from_fiducial(family_fiducial(param)); };

    // U^dag cycles A+ -> C+ -> B- (-> A+) and A- -> B+ -> C- (-> A-).
    const std::vector<std::pair<std::string, std::string>> arrows{
        {"A+", "C+"}, {"C+", "B-"}, {"B-", "A+"},
        {"A-", "B+"}, {"B+", "C-"}, {"C-", "A-"},
    };

    std::vector<CycleStep> steps;
    for (const auto& [from, to] : arrows) {
        const auto f = std::find_if(sics.begin(), sics.end(),
                                    [&](const Named& n) { return n.name == from; });
        const auto g = std::find_if(sics.begin(), sics.end(),
                                    [&](const Named& n) { return n.name == to; });
        std::vector<CVector> image;
        for (const auto& v : vectors_of(f->param)) image.push_back(udag * v);
        const bool matched = proj_set_equal(image, vectors_of(g->param));
        steps.push_back({from, to, f->param, g->param, matched});
    }
    return steps;
}

SicCandidate mixed_t_sic(double t0, double t1, double t2, const CliffordGroup& cg) {
    if (cg.dim() != 3) throw DimMismatch("mixed_t_sic: requires p = 3");
    const auto& hw = cg.hw();
    const std::array<double, 3> ts{t0, t1, t2};
    SicCandidate c{3, {}, "mixed-t(" + std::to_string(t0) + "," + std::to_string(t1) + "," +
                              std::to_string(t2) + ")"};
    for (int j = 0; j < 3; ++j) {
        const CVector base = hw.displacement({j, 0}) * family_fiducial(ts[static_cast<size_t>(j)]);
        for (int k2 = 0; k2 < 3; ++k2) {
            c.vectors.push_back(hw.displacement({0, k2}) * base);
        }
    }
    return c;
}

CMatrix mixed_t_connecting_unitary(double t0, double t1, double t2) {
    const double t = (t0 + t1 + t2) / 3.0;
    CMatrix w = CMatrix::Zero(3, 3);
    w(0, 0) = 1.0;
    w(1, 1) = std::polar(1.0, t - t2);
    w(2, 2) = std::polar(1.0, 2.0 * t - t0 - t2);
    return w;
}

SicCandidate pair_regroup(double t, RegroupPattern pattern, int k1, int pair_index,
                          const CliffordGroup& cg) {
    if (cg.dim() != 3) throw DimMismatch("pair_regroup: requires p = 3");
    if (k1 < 0 || k1 > 2) throw IndexOutOfRange("pair_regroup: k1 must be in [0, 2]");
    if (pair_index < 1 || pair_index > 4) {
        throw IndexOutOfRange("pair_regroup: pair index must be in [1, 4]");
    }
    if (orbit_kind(t) != OrbitKind::Generic) {
        // At the exceptional parameters psi(-t) lies on the HW orbit of
        // psi(t) and the recipe degenerates to the orbit SIC itself.
        throw NotASic("pair_regroup: exceptional parameter, regrouping degenerates");
    }
    const auto& hw = cg.hw();
    static const std::array<Mat2, 4> pair_mats{
        Mat2{1, 0, 0, 1, 3}, Mat2{0, 1, 2, 0, 3}, Mat2{0, 1, 2, 1, 3}, Mat2{0, 1, 2, 2, 3}};
    const CliffordOp fk =
        cg.synthesize({pair_mats[static_cast<size_t>(pair_index - 1)], {0, 0}}, false);

    // Slot parameters along the X-direction: pattern A conjugates the last
    // slot, pattern B the last two.
    const std::array<double, 3> slot =
        pattern == RegroupPattern::A ? std::array<double, 3>{t, t, -t}
                                     : std::array<double, 3>{t, -t, -t};

    SicCandidate c{3, {},
                   std::string("pair-regroup(pattern=") +
                       (pattern == RegroupPattern::A ? "A" : "B") + ",k1=" + std::to_string(k1) +
                       ",pair=" + std::to_string(pair_index) + ",t=" + std::to_string(t) + ")"};
    for (int s = 0; s < 3; ++s) {
        const CVector base =
            hw.displacement({(k1 + s) % 3, 0}) * family_fiducial(slot[static_cast<size_t>(s)]);
        for (int k2 = 0; k2 < 3; ++k2) {
            c.vectors.push_back(fk.matrix * (hw.displacement({0, k2}) * base));
        }
    }
    const SicCheck check = verify_sic(c);
    if (!check.ok) {
        throw NotASic("pair_regroup: deviation " + std::to_string(check.max()));
    }
    return c;
}

namespace {

constexpr size_t kMaxFiducials = 128;
using Bits = std::bitset<kMaxFiducials>;

void cliques_of_size(const std::vector<Bits>& adj, std::vector<int>& current, Bits candidates,
                     int lowest_allowed, size_t target, long long& nodes, long long node_cap,
                     std::vector<std::vector<int>>& found) {
    if (++nodes > node_cap) {
        throw TooLarge("regroup_census: clique search exceeded node cap");
    }
    if (current.size() == target) {
        found.push_back(current);
        return;
    }
    const size_t need = target - current.size();
    if (candidates.count() < need) return;
    for (size_t v = static_cast<size_t>(lowest_allowed); v < adj.size(); ++v) {
        if (!candidates[v]) continue;
        current.push_back(static_cast<int>(v));
        cliques_of_size(adj, current, candidates & adj[v], static_cast<int>(v) + 1, target,
                        nodes, node_cap, found);
        current.pop_back();
    }
}

} // namespace

RegroupCensus regroup_census(double t, const CliffordGroup& cg, long long node_cap) {
    if (cg.dim() != 3) throw DimMismatch("regroup_census: requires p = 3");
    const auto& hw = cg.hw();
    const auto table = cg.enumerate(/*extended=*/true);
    const CVector psi = family_fiducial(t);
    const auto orbit = orbit_of_fiducial(psi, hw, table);

    // Distinct fiducials across the orbit.
    std::vector<CVector> fiducials;
    for (const auto& sic : orbit) {
        for (const auto& v : sic.vectors) {
            bool fresh = true;
            for (const auto& known : fiducials) {
                if (proj_equal(v, known)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) fiducials.push_back(v);
        }
    }
    const size_t n = fiducials.size();
    if (n > kMaxFiducials) throw TooLarge("regroup_census: too many fiducials");

    // Pairwise compatibility: fidelity within tolerance of 1/4.
    std::vector<Bits> adj(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const double fid = std::norm(fiducials[i].dot(fiducials[j]));
            if (std::abs(fid - 0.25) <= 1e-8) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }

    Bits all;
    for (size_t i = 0; i < n; ++i) all[i] = true;
    std::vector<std::vector<int>> cliques;
    std::vector<int> scratch;
    long long nodes = 0;
    cliques_of_size(adj, scratch, all, 0, 9, nodes, node_cap, cliques);

    RegroupCensus census;
    census.n_orbit_sics = static_cast<int>(orbit.size());
    census.n_fiducials = static_cast<int>(n);
    for (const auto& clique : cliques) {
        SicCandidate cand{3, {}};
        for (int idx : clique) cand.vectors.push_back(fiducials[static_cast<size_t>(idx)]);
        if (!verify_sic(cand, 1e-8).ok) continue;
        bool on_orbit = false;
        for (const auto& sic : orbit) {
            if (proj_set_equal(cand.vectors, sic.vectors)) {
                on_orbit = true;
                break;
            }
        }
        if (!on_orbit) census.hidden.push_back(std::move(cand));
    }
    census.n_hidden = static_cast<int>(census.hidden.size());
    return census;
}

} // namespace sicforge
