#include "sicforge/zmod.hpp"

#include <string>

namespace sicforge {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= n; ++q) {
        if (n % q == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(int p) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("PrimeModulus: " + std::to_string(p) + " is not prime");
    }
}

int mod_reduce(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

int mod_pow(int a, long long e, int p) {
    long long base = mod_reduce(a, p), acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<int>(acc);
}

int mod_inv(int a, int p) {
    a = mod_reduce(a, p);
    if (a == 0) throw ZeroInverse("mod_inv: zero has no inverse mod " + std::to_string(p));
    // Fermat: a^(p-2) for prime p.
    return mod_pow(a, p - 2, p);
}

int multiplicative_order(int a, int p) {
    a = mod_reduce(a, p);
    if (a == 0) throw ZeroInput("multiplicative_order: 0 is not in Z_p*");
    int ord = 1;
    long long x = a;
    while (x != 1) {
        x = x * a % p;
        ++ord;
    }
    return ord;
}

int sqrt_mod(int a, int p) {
    a = mod_reduce(a, p);
    for (int x = 0; x <= p / 2; ++x) {
        if (static_cast<long long>(x) * x % p == a) return x;
    }
    return -1;
}

Residue::Residue(long long value, PrimeModulus m) : v_(mod_reduce(value, m.value())), p_(m.value()) {}

namespace {
void require_same_modulus(Residue a, Residue b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch("Residue arithmetic across moduli " + std::to_string(a.modulus()) +
                              " and " + std::to_string(b.modulus()));
    }
}
} // namespace

Residue operator+(Residue a, Residue b) {
    require_same_modulus(a, b);
    return {static_cast<long long>(a.v_) + b.v_, PrimeModulus(a.p_)};
}

Residue operator-(Residue a, Residue b) {
    require_same_modulus(a, b);
    return {static_cast<long long>(a.v_) - b.v_, PrimeModulus(a.p_)};
}

Residue operator*(Residue a, Residue b) {
    require_same_modulus(a, b);
    return {static_cast<long long>(a.v_) * b.v_, PrimeModulus(a.p_)};
}

Residue Residue::operator-() const {
    return {-static_cast<long long>(v_), PrimeModulus(p_)};
}

bool operator==(Residue a, Residue b) {
    return a.v_ == b.v_ && a.p_ == b.p_;
}

Residue Residue::inverse() const {
    return {mod_inv(v_, p_), PrimeModulus(p_)};
}

Residue inverse(Residue a) {
    return a.inverse();
}

Residue primitive_element(PrimeModulus m) {
    const int p = m.value();
    for (int g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1) return {g, m};
    }
    // p == 2: the trivial group is generated by 1.
    return {1, m};
}

bool is_quadratic_residue(Residue a) {
    if (a.value() == 0) throw ZeroInput("is_quadratic_residue: undefined for 0");
    const int p = a.modulus();
    if (p == 2) return true;
    return mod_pow(a.value(), (p - 1) / 2, p) == 1; // Euler criterion
}

int cube_class_count(PrimeModulus m) {
    return (m.value() - 1) % 3 == 0 ? 3 : 1;
}

} // namespace sicforge
