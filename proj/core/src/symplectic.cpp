#include "sicforge/symplectic.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace sicforge {

// --- Mat2 / AffineSymplectic -------------------------------------------------

Mat2 Mat2::identity(int p) {
    return {1 % p, 0, 0, 1 % p, p};
}

Mat2 Mat2::from_entries(int a, int b, int c, int d, int p) {
    Mat2 m{mod_reduce(a, p), mod_reduce(b, p), mod_reduce(c, p), mod_reduce(d, p), p};
    const int det = m.det();
    if (det != 1 % p && det != (p - 1) % p) {
        throw std::invalid_argument("Mat2: determinant must be +-1 mod p");
    }
    return m;
}

int Mat2::det() const {
    return mod_reduce(static_cast<long long>(a) * d - static_cast<long long>(b) * c, p);
}

int Mat2::trace() const {
    return mod_reduce(static_cast<long long>(a) + d, p);
}

Mat2 Mat2::operator*(const Mat2& o) const {
    if (p != o.p) throw ModulusMismatch("Mat2 product across moduli");
    return {mod_reduce(static_cast<long long>(a) * o.a + static_cast<long long>(b) * o.c, p),
            mod_reduce(static_cast<long long>(a) * o.b + static_cast<long long>(b) * o.d, p),
            mod_reduce(static_cast<long long>(c) * o.a + static_cast<long long>(d) * o.c, p),
            mod_reduce(static_cast<long long>(c) * o.b + static_cast<long long>(d) * o.d, p),
            p};
}

Mat2 Mat2::inverse() const {
    const int idet = mod_inv(det(), p);
    return {mod_reduce(static_cast<long long>(d) * idet, p),
            mod_reduce(-static_cast<long long>(b) * idet, p),
            mod_reduce(-static_cast<long long>(c) * idet, p),
            mod_reduce(static_cast<long long>(a) * idet, p),
            p};
}

Mat2 Mat2::negated() const {
    return {mod_reduce(-a, p), mod_reduce(-b, p), mod_reduce(-c, p), mod_reduce(-d, p), p};
}

Vec2 mat_apply(const Mat2& F, const Vec2& v) {
    return {mod_reduce(static_cast<long long>(F.a) * v.x + static_cast<long long>(F.b) * v.y, F.p),
            mod_reduce(static_cast<long long>(F.c) * v.x + static_cast<long long>(F.d) * v.y, F.p)};
}

AffineSymplectic AffineSymplectic::identity(int p) {
    return {Mat2::identity(p), {0, 0}};
}

AffineSymplectic compose(const AffineSymplectic& g, const AffineSymplectic& h) {
    if (g.modulus() != h.modulus()) throw ModulusMismatch("compose across moduli");
    const Vec2 shifted = mat_apply(g.F, h.chi);
    return {g.F * h.F,
            {mod_reduce(g.chi.x + shifted.x, g.modulus()),
             mod_reduce(g.chi.y + shifted.y, g.modulus())}};
}

AffineSymplectic AffineSymplectic::inverse() const {
    const Mat2 Fi = F.inverse();
    const Vec2 w = mat_apply(Fi, chi);
    return {Fi, {mod_reduce(-w.x, modulus()), mod_reduce(-w.y, modulus())}};
}

bool AffineSymplectic::is_identity() const {
    return *this == identity(modulus());
}

int AffineSymplectic::order() const {
    AffineSymplectic x = *this;
    int n = 1;
    while (!x.is_identity()) {
        x = compose(x, *this);
        ++n;
    }
    return n;
}

AffineSymplectic conjugate(const AffineSymplectic& x, const AffineSymplectic& g) {
    return compose(compose(x, g), x.inverse());
}

// --- Enumeration -------------------------------------------------------------

long long group_order(int p, GroupKind kind) {
    const long long sl = static_cast<long long>(p) * (static_cast<long long>(p) * p - 1);
    switch (kind) {
    case GroupKind::SL: return sl;
    case GroupKind::ESL: return 2 * sl;
    case GroupKind::SLAffine: return sl * p * p;
    case GroupKind::ESLAffine: return 2 * sl * p * p;
    }
    return 0;
}

std::vector<AffineSymplectic> enumerate_group(PrimeModulus pm, GroupKind kind, long long cap) {
    const int p = pm.value();
    const long long expect = group_order(p, kind);
    if (expect > cap) {
        throw TooLarge("enumerate_group: order " + std::to_string(expect) + " exceeds cap " +
                       std::to_string(cap));
    }
    const bool with_esl = kind == GroupKind::ESL || kind == GroupKind::ESLAffine;
    const bool affine = kind == GroupKind::SLAffine || kind == GroupKind::ESLAffine;

    std::vector<Mat2> mats;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    const Mat2 m{a, b, c, d, p};
                    const int det = m.det();
                    if (det == 1 % p || (with_esl && det == (p - 1) % p)) mats.push_back(m);
                }

    std::vector<AffineSymplectic> out;
    out.reserve(static_cast<size_t>(expect));
    for (const Mat2& m : mats) {
        if (!affine) {
            out.push_back({m, {0, 0}});
            continue;
        }
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) out.push_back({m, {x, y}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- GF(p^2) helpers for the nonsplit torus classes --------------------------

namespace {

struct Fp2 {
    int a, b; // a + b*sqrt(n)
    friend bool operator==(const Fp2&, const Fp2&) = default;
};

struct Fp2Ctx {
    int p;
    int n; // smallest quadratic nonresidue

    Fp2 mul(const Fp2& u, const Fp2& v) const {
        return {mod_reduce(static_cast<long long>(u.a) * v.a +
                               static_cast<long long>(n) * u.b % p * v.b,
                           p),
                mod_reduce(static_cast<long long>(u.a) * v.b + static_cast<long long>(u.b) * v.a,
                           p)};
    }
};

int smallest_nonresidue(int p) {
    for (int n = 2; n < p; ++n) {
        if (!is_quadratic_residue(Residue(n, PrimeModulus(p)))) return n;
    }
    throw std::logic_error("no quadratic nonresidue found");
}

// Lexicographically first SL(2,p) element of multiplicative order p+1.
Mat2 canonical_b(int p) {
    static std::mutex mutex;
    static std::unordered_map<int, Mat2> cache;
    const std::scoped_lock lock(mutex);
    if (const auto it = cache.find(p); it != cache.end()) return it->second;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    const Mat2 m{a, b, c, d, p};
                    if (m.det() != 1 % p) continue;
                    Mat2 x = m;
                    int ord = 1;
                    const Mat2 id = Mat2::identity(p);
                    while (!(x == id) && ord <= p + 1) {
                        x = x * m;
                        ++ord;
                    }
                    if (ord == p + 1) {
                        cache.emplace(p, m);
                        return m;
                    }
                }
    throw std::logic_error("no element of order p+1 in SL(2,p)");
}

// Eigenvalue of an SL(2,p) element with nonsquare discriminant, as an element
// of GF(p^2) = Z_p[sqrt(n)].
Fp2 nonsplit_eigenvalue(const Mat2& F, const Fp2Ctx& ctx) {
    const int p = ctx.p;
    const int t = F.trace();
    const int disc = mod_reduce(static_cast<long long>(t) * t - 4, p);
    const int s = sqrt_mod(mod_reduce(static_cast<long long>(disc) * mod_inv(ctx.n, p), p), p);
    const int half = mod_inv(2, p);
    // lambda = (t + s*sqrt(n)) / 2
    return {mod_reduce(static_cast<long long>(t) * half, p),
            mod_reduce(static_cast<long long>(s) * half, p)};
}

int fp2_dlog(const Fp2& base, const Fp2& target, int max_order, const Fp2Ctx& ctx) {
    Fp2 x{1, 0};
    for (int k = 0; k <= max_order; ++k) {
        if (x == target) return k;
        x = ctx.mul(x, base);
    }
    throw std::logic_error("fp2_dlog: target not in the cyclic group");
}

int dlog_mod(int base, int target, int p) {
    long long x = 1;
    for (int k = 0; k < p; ++k) {
        if (x == target) return k;
        x = x * base % p;
    }
    throw std::logic_error("dlog_mod: target not generated");
}

// For unipotent F != 1 (trace 2) find the square class of its parameter and
// an M in SL(2,p) with M^-1 F M equal to ((1 0) (gamma 1)), gamma in {1, nu}.
struct UnipotentForm {
    bool square;
    Mat2 M; // M * rep * M^-1 == F
};

UnipotentForm unipotent_canonicalize(const Mat2& F) {
    const int p = F.p;
    // F = 1 + N with N = ((x y) (w -x)), N nilpotent.
    const int x = mod_reduce(F.a - 1, p);
    const int y = F.b;
    const int w = F.c;
    const int nu = primitive_element(PrimeModulus(p)).value();

    bool square;
    if (w != 0) {
        square = is_quadratic_residue(Residue(w, PrimeModulus(p)));
    } else {
        square = is_quadratic_residue(Residue(mod_reduce(-y, p), PrimeModulus(p)));
    }
    const int gamma = square ? 1 : nu;

    // Solve x = gamma*b*d, y = -gamma*b^2, w = gamma*d^2 for M = ((a b) (c d)).
    int ma, mb, mc, md;
    if (w != 0) {
        md = sqrt_mod(mod_reduce(static_cast<long long>(w) * mod_inv(gamma, p), p), p);
        mb = mod_reduce(static_cast<long long>(x) * mod_inv(mod_reduce(static_cast<long long>(gamma) * md, p), p), p);
        mc = 0;
        ma = mod_inv(md, p);
    } else {
        md = 0;
        mb = sqrt_mod(mod_reduce(-static_cast<long long>(y) * mod_inv(gamma, p), p), p);
        mc = mod_reduce(-static_cast<long long>(mod_inv(mb, p)), p);
        ma = 0;
    }
    return {square, Mat2{ma, mb, mc, md, p}};
}

int fold(int k, int modulus) {
    return std::min(k, modulus - k);
}

} // namespace

// --- classify ---------------------------------------------------------------

std::string ConjClassLabel::str() const {
    switch (family) {
    case ClassFamily::One: return "1";
    case ClassFamily::Z: return "z";
    case ClassFamily::A: return "a^" + std::to_string(index);
    case ClassFamily::B: return "b^" + std::to_string(index);
    case ClassFamily::C1: return "c1";
    case ClassFamily::C2: return "c2";
    case ClassFamily::ZC1: return "zc1";
    case ClassFamily::ZC2: return "zc2";
    case ClassFamily::Translation: return "trans";
    case ClassFamily::C1K: return "c1+" + std::to_string(index);
    case ClassFamily::C2K: return "c2+" + std::to_string(index);
    }
    return "?";
}

ConjClassLabel classify(const AffineSymplectic& g) {
    const int p = g.modulus();
    if (g.F.det() != 1 % p) {
        throw std::invalid_argument("classify: requires det(F) = +1");
    }
    const Mat2 id = Mat2::identity(p);
    if (g.F == id) {
        if (g.chi == Vec2{0, 0}) return {ClassFamily::One, 0};
        return {ClassFamily::Translation, 0};
    }
    const int t = g.F.trace();
    if (t == 2 % p) {
        // Unipotent: chi survives conjugation as a folded first component.
        const UnipotentForm form = unipotent_canonicalize(g.F);
        const Mat2 Mi = form.M.inverse();
        const Vec2 chi = mat_apply(Mi, g.chi);
        const int k = fold(chi.x, p);
        if (k == 0) return {form.square ? ClassFamily::C1 : ClassFamily::C2, 0};
        return {form.square ? ClassFamily::C1K : ClassFamily::C2K, k};
    }
    // 1 - F is nonsingular; chi is conjugated away.
    if (t == mod_reduce(-2, p)) {
        if (g.F == id.negated()) return {ClassFamily::Z, 0};
        const UnipotentForm form = unipotent_canonicalize(g.F.negated());
        return {form.square ? ClassFamily::ZC1 : ClassFamily::ZC2, 0};
    }
    const int disc = mod_reduce(static_cast<long long>(t) * t - 4, p);
    if (is_quadratic_residue(Residue(disc, PrimeModulus(p)))) {
        const int s = sqrt_mod(disc, p);
        const int lambda = mod_reduce(static_cast<long long>(t + s) * mod_inv(2, p), p);
        const int nu = primitive_element(PrimeModulus(p)).value();
        const int l = fold(dlog_mod(nu, lambda, p), p - 1);
        return {ClassFamily::A, l};
    }
    const Fp2Ctx ctx{p, smallest_nonresidue(p)};
    const Mat2 b = canonical_b(p);
    const Fp2 beta = nonsplit_eigenvalue(b, ctx);
    const Fp2 lambda = nonsplit_eigenvalue(g.F, ctx);
    int m = fp2_dlog(beta, lambda, p + 1, ctx);
    m = fold(m, p + 1);
    return {ClassFamily::B, m};
}

AffineSymplectic class_representative(PrimeModulus pm, const ConjClassLabel& label) {
    const int p = pm.value();
    const int nu = primitive_element(pm).value();
    const Mat2 id = Mat2::identity(p);
    const Mat2 c1{1, 0, 1, 1, p};
    const Mat2 c2{1, 0, nu, 1, p};
    switch (label.family) {
    case ClassFamily::One: return {id, {0, 0}};
    case ClassFamily::Z: return {id.negated(), {0, 0}};
    case ClassFamily::A: {
        const int v = mod_pow(nu, label.index, p);
        return {Mat2{v, 0, 0, mod_inv(v, p), p}, {0, 0}};
    }
    case ClassFamily::B: {
        Mat2 x = canonical_b(p);
        for (int i = 1; i < label.index; ++i) x = x * canonical_b(p);
        return {x, {0, 0}};
    }
    case ClassFamily::C1: return {c1, {0, 0}};
    case ClassFamily::C2: return {c2, {0, 0}};
    case ClassFamily::ZC1: return {c1.negated(), {0, 0}};
    case ClassFamily::ZC2: return {c2.negated(), {0, 0}};
    case ClassFamily::Translation: return {id, {1, 0}};
    case ClassFamily::C1K: return {c1, {label.index, 0}};
    case ClassFamily::C2K: return {c2, {label.index, 0}};
    }
    throw std::invalid_argument("class_representative: bad label");
}

std::map<ConjClassLabel, ClassInfo> class_census(PrimeModulus pm, GroupKind kind, long long cap) {
    if (kind != GroupKind::SL && kind != GroupKind::SLAffine) {
        throw std::invalid_argument("class_census: only SL and SLAffine have tabulated classes");
    }
    const auto elements = enumerate_group(pm, kind, cap);
    std::map<ConjClassLabel, ClassInfo> census;
    for (const auto& g : elements) {
        auto [it, fresh] = census.try_emplace(classify(g), ClassInfo{0, 0});
        if (fresh) it->second.element_order = g.order();
        ++it->second.size;
    }
    return census;
}

std::vector<std::vector<AffineSymplectic>>
brute_force_classes(const std::vector<AffineSymplectic>& group) {
    std::vector<AffineSymplectic> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    std::vector<bool> visited(sorted.size(), false);
    auto index_of = [&](const AffineSymplectic& g) {
        return static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), g) -
                                   sorted.begin());
    };

    std::vector<std::vector<AffineSymplectic>> classes;
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (visited[i]) continue;
        std::vector<AffineSymplectic> cls;
        for (const auto& x : sorted) {
            const AffineSymplectic c = conjugate(x, sorted[i]);
            const size_t j = index_of(c);
            if (!visited[j]) {
                visited[j] = true;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

// --- Sylow subgroups and normalizers -----------------------------------------

namespace {

std::vector<Subgroup> all_sylow_conjugates(PrimeModulus pm) {
    const int p = pm.value();
    Subgroup q1;
    for (int gamma = 0; gamma < p; ++gamma) {
        q1.push_back({Mat2{1, 0, gamma, 1, p}, {0, 0}});
    }
    std::sort(q1.begin(), q1.end());

    const auto sl = enumerate_group(pm, GroupKind::SL);
    std::vector<Subgroup> sylows{q1};
    for (const auto& x : sl) {
        Subgroup conj;
        conj.reserve(q1.size());
        for (const auto& g : q1) conj.push_back(conjugate(x, g));
        std::sort(conj.begin(), conj.end());
        if (std::find(sylows.begin(), sylows.end(), conj) == sylows.end()) {
            sylows.push_back(std::move(conj));
        }
    }
    // Q_1 stays first; the other conjugates are ordered lexicographically.
    std::sort(sylows.begin() + 1, sylows.end());
    return sylows;
}

} // namespace

Subgroup sylow_Q(PrimeModulus pm, int j) {
    const auto sylows = all_sylow_conjugates(pm);
    if (j < 1 || j > static_cast<int>(sylows.size())) {
        throw IndexOutOfRange("sylow_Q: index " + std::to_string(j) + " not in [1, " +
                              std::to_string(sylows.size()) + "]");
    }
    return sylows[static_cast<size_t>(j - 1)];
}

Subgroup normalizer_N(PrimeModulus pm, int j) {
    const Subgroup q = sylow_Q(pm, j);
    const auto sl = enumerate_group(pm, GroupKind::SL);
    Subgroup n;
    for (const auto& x : sl) {
        if (normalizes(x, q)) n.push_back(x);
    }
    std::sort(n.begin(), n.end());
    return n;
}

bool normalizes(const AffineSymplectic& x, const Subgroup& s) {
    for (const auto& g : s) {
        if (!std::binary_search(s.begin(), s.end(), conjugate(x, g))) return false;
    }
    return true;
}

bool is_cyclic(const Subgroup& g) {
    for (const auto& x : g) {
        if (x.order() == static_cast<int>(g.size())) return true;
    }
    return false;
}

bool is_subgroup_of(const Subgroup& sub, const Subgroup& super) {
    for (const auto& g : sub) {
        if (!std::binary_search(super.begin(), super.end(), g)) return false;
    }
    return true;
}

Subgroup closure(std::vector<AffineSymplectic> generators, long long cap) {
    if (generators.empty()) return {};
    const int p = generators.front().modulus();
    std::vector<AffineSymplectic> frontier{AffineSymplectic::identity(p)};
    Subgroup seen = frontier;
    while (!frontier.empty()) {
        std::vector<AffineSymplectic> next;
        for (const auto& g : frontier) {
            for (const auto& h : generators) {
                const AffineSymplectic gh = compose(g, h);
                if (!std::binary_search(seen.begin(), seen.end(), gh)) {
                    seen.insert(std::lower_bound(seen.begin(), seen.end(), gh), gh);
                    next.push_back(gh);
                    if (static_cast<long long>(seen.size()) > cap) {
                        throw TooLarge("closure: exceeded cap " + std::to_string(cap));
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

Subgroup intersect(const Subgroup& g, const Subgroup& h) {
    Subgroup out;
    std::set_intersection(g.begin(), g.end(), h.begin(), h.end(), std::back_inserter(out));
    return out;
}

} // namespace sicforge
