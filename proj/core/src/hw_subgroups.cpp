#include "sicforge/hw_subgroups.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>

namespace sicforge {

namespace {

Subgroup conjugate_set(const AffineSymplectic& x, const Subgroup& s) {
    Subgroup out;
    out.reserve(s.size());
    for (const auto& g : s) out.push_back(conjugate(x, g));
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup standard_hw_labels(int p) {
    Subgroup d;
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) d.push_back({Mat2::identity(p), {x, y}});
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

Subgroup sylow_P(PrimeModulus pm, int j) {
    const int p = pm.value();
    const Subgroup q = sylow_Q(pm, j);
    Subgroup out;
    out.reserve(q.size() * static_cast<size_t>(p) * p);
    for (const auto& g : q) {
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) out.push_back({g.F, {x, y}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Subgroup subgroup_centre(const Subgroup& s) {
    Subgroup centre;
    for (const auto& g : s) {
        bool central = true;
        for (const auto& h : s) {
            if (!(compose(g, h) == compose(h, g))) {
                central = false;
                break;
            }
        }
        if (central) centre.push_back(g);
    }
    return centre;
}

OrderP2Census list_hw_subgroups(const CliffordGroup& cg) {
    const int p = cg.dim();
    const PrimeModulus pm(p);
    const Subgroup standard = standard_hw_labels(p);

    OrderP2Census out;
    std::vector<Subgroup> seen;

    for (int j = 1; j <= p + 1; ++j) {
        const Subgroup sylow = sylow_P(pm, j);
        const Subgroup centre = subgroup_centre(sylow);
        // Order-p^2 subgroups of an order-p^3 group of exponent p are exactly
        // centre + one extra generator.
        for (const auto& g : sylow) {
            if (std::binary_search(centre.begin(), centre.end(), g)) continue;
            std::vector<AffineSymplectic> gens = centre;
            gens.push_back(g);
            Subgroup sub = closure(gens);
            if (std::find(seen.begin(), seen.end(), sub) != seen.end()) continue;
            seen.push_back(sub);

            // Any non-identity central element generates the centre.
            const AffineSymplectic zgen = centre.front().is_identity() ? centre[1] : centre[0];
            // HW iff the matrix lifts of the generators fail to commute.
            const CliffordOp a = cg.synthesize(zgen, /*verify=*/false);
            const CliffordOp b = cg.synthesize(g, /*verify=*/false);
            const CMatrix comm = a.matrix * b.matrix * a.matrix.adjoint() * b.matrix.adjoint();
            const Complex phase = comm(0, 0);
            const bool abelian_lift = std::abs(phase - Complex{1.0, 0.0}) < 1e-9;
            if (abelian_lift) {
                out.diagonal.push_back(std::move(sub));
            } else {
                out.hw.push_back({zgen, g, std::move(sub)});
            }
        }
    }

    // Standard group first, the rest ordered by their element sets.
    std::sort(out.hw.begin(), out.hw.end(), [&](const HWSubgroup& a, const HWSubgroup& b) {
        const bool sa = a.elements == standard;
        const bool sb = b.elements == standard;
        if (sa != sb) return sa;
        return a.elements < b.elements;
    });
    return out;
}

PermutingUnitary permuting_unitary(const CliffordGroup& cg) {
    const int p = cg.dim();
    PermutingUnitary out;
    out.u = CMatrix::Zero(p, p);
    if (p == 3) {
        constexpr double pi = std::numbers::pi;
        out.u(0, 0) = 1.0;
        out.u(1, 1) = std::polar(1.0, -2.0 * pi / 9.0);
        out.u(2, 2) = std::polar(1.0, -4.0 * pi / 9.0);
        out.v_adjusted = std::polar(1.0, 4.0 * pi / 9.0) *
                         cg.v_matrix(Mat2{1, 0, 1, 1, 3});
        return out;
    }
    // exp(i phi_j) = tau^(1 + 4 + ... + j^2)
    out.u(0, 0) = 1.0;
    long long acc = 0;
    for (int j = 1; j < p; ++j) {
        acc += static_cast<long long>(j) * j;
        out.u(j, j) = cg.hw().tau_power(mod_reduce(acc, p));
    }
    out.v_adjusted = cg.v_matrix(Mat2{1, 0, 1, 1, p});
    return out;
}

HWAnalysis analyze_hw_subgroups(const CliffordGroup& cg) {
    const int p = cg.dim();
    const PrimeModulus pm(p);
    HWAnalysis out;
    out.census = list_hw_subgroups(cg);
    const auto& hw = out.census.hw;
    const size_t n = hw.size();

    auto find_subgroup = [&](const Subgroup& s) -> size_t {
        for (size_t i = 0; i < n; ++i) {
            if (hw[i].elements == s) return i;
        }
        return n;
    };

    // Conjugation generators of the Clifford collineation group.
    const std::vector<AffineSymplectic> gens{
        {Mat2{0, p - 1, 1, 0, p}, {0, 0}},
        {Mat2{1, 0, 1, 1, p}, {0, 0}},
        {Mat2::identity(p), {1, 0}},
        {Mat2::identity(p), {0, 1}},
    };

    const PermutingUnitary pu = permuting_unitary(cg);

    // Seed each <Z, V^l X> subgroup (index found via its elements) with its
    // known witness U^l, then close under conjugation, composing witnesses.
    out.witnesses.assign(n, CMatrix());
    std::vector<bool> visited(n, false);
    visited[0] = true;
    out.witnesses[0] = CMatrix::Identity(p, p);

    std::deque<size_t> queue;
    for (int l = 1; l < p; ++l) {
        const AffineSymplectic vl{Mat2{1, 0, l, 1, p}, {0, 0}};
        const AffineSymplectic x{Mat2::identity(p), {1, 0}};
        const AffineSymplectic z{Mat2::identity(p), {0, 1}};
        const Subgroup sub = closure({z, compose(vl, x)});
        const size_t idx = find_subgroup(sub);
        if (idx == n) throw std::logic_error("analyze_hw_subgroups: <Z,V^lX> not found");
        if (visited[idx]) continue;
        visited[idx] = true;
        CMatrix w = CMatrix::Identity(p, p);
        for (int i = 0; i < l; ++i) w = pu.u * w;
        out.witnesses[idx] = w;
        queue.push_back(idx);
    }

    // BFS orbit closure with witness tracking; record which seed component
    // each subgroup belongs to.
    std::vector<int> component(n, -1);
    int n_components = 0;
    std::vector<size_t> seeds(queue.begin(), queue.end());
    for (size_t s : seeds) {
        if (component[s] != -1) continue;
        const int comp = n_components++;
        component[s] = comp;
        std::deque<size_t> bfs{s};
        while (!bfs.empty()) {
            const size_t cur = bfs.front();
            bfs.pop_front();
            for (const auto& g : gens) {
                const Subgroup image = conjugate_set(g, hw[cur].elements);
                const size_t idx = find_subgroup(image);
                if (idx == n) throw std::logic_error("analyze_hw_subgroups: orbit left the census");
                if (idx == 0 || component[idx] != -1) continue;
                component[idx] = comp;
                visited[idx] = true;
                const CliffordOp gop = cg.synthesize(g, /*verify=*/false);
                out.witnesses[idx] = gop.matrix * out.witnesses[cur];
                bfs.push_back(idx);
            }
        }
    }

    out.orbits.assign(static_cast<size_t>(n_components), {});
    for (size_t i = 1; i < n; ++i) {
        if (component[i] == -1) {
            throw std::logic_error("analyze_hw_subgroups: unreached non-standard HW subgroup");
        }
        out.orbits[static_cast<size_t>(component[i])].push_back(i);
    }
    std::sort(out.orbits.begin(), out.orbits.end());
    return out;
}

Subgroup normalizer_in_clifford(PrimeModulus pm, const Subgroup& s) {
    const auto clifford = enumerate_group(pm, GroupKind::SLAffine);
    Subgroup out;
    for (const auto& x : clifford) {
        if (normalizes(x, s)) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace sicforge
