#pragma once

// Prime moduli, residues mod p and binomial coefficients mod p.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "steencalc/errors.hpp"

namespace steencalc {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// A prime p >= 2, checked at construction.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
        if (p > 0xFFFFFFFFull || !is_prime(p))
            throw DomainError("modulus " + std::to_string(p) + " is not a prime");
    }

    std::uint32_t value() const noexcept { return p_; }
    operator std::uint32_t() const noexcept { return p_; }

    /// Canonical representative of n in [0, p).
    std::uint32_t reduce(std::int64_t n) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        std::int64_t r = n % p;
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
        std::uint32_t r = 1 % p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw DomainError("zero has no inverse mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }

private:
    std::uint32_t p_;
};

/// An element of F_p.
class FpElement {
public:
    FpElement(std::int64_t value, PrimeModulus p) : p_(p), v_(p.reduce(value)) {}

    std::uint32_t value() const noexcept { return v_; }
    PrimeModulus modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend FpElement operator+(FpElement a, FpElement b) { return {a.p_, a.p_.add(a.v_, check(a, b).v_)}; }
    friend FpElement operator-(FpElement a, FpElement b) { return {a.p_, a.p_.sub(a.v_, check(a, b).v_)}; }
    friend FpElement operator*(FpElement a, FpElement b) { return {a.p_, a.p_.mul(a.v_, check(a, b).v_)}; }
    FpElement operator-() const { return {p_, p_.neg(v_)}; }
    FpElement inverse() const { return {p_, p_.inv(v_)}; }
    FpElement pow(std::uint64_t e) const { return {p_, p_.pow(v_, e)}; }

    friend bool operator==(FpElement a, FpElement b) noexcept { return a.p_ == b.p_ && a.v_ == b.v_; }
    friend bool operator==(FpElement a, std::int64_t n) noexcept { return a.v_ == a.p_.reduce(n); }

    friend std::ostream& operator<<(std::ostream& os, FpElement a) { return os << a.v_; }

private:
    FpElement(PrimeModulus p, std::uint32_t v) : p_(p), v_(v) {}
    static const FpElement& check(const FpElement& a, const FpElement& b) {
        if (!(a.p_ == b.p_)) throw MismatchError("F_p elements with different moduli");
        return b;
    }

    PrimeModulus p_;
    std::uint32_t v_;
};

/// C(n, k) mod p by Lucas' theorem: product of digit binomials in base p.
inline FpElement binom_mod_p(std::uint64_t n, std::uint64_t k, PrimeModulus p) {
    if (k > n) return {0, p};
    const std::uint64_t P = p.value();
    std::uint32_t result = 1 % p.value();
    while (k > 0 || n > 0) {
        const std::uint64_t nd = n % P, kd = k % P;
        if (kd > nd) return {0, p};
        // C(nd, kd) with nd < p: factorials are units mod p.
        std::uint32_t num = 1, den = 1;
        for (std::uint64_t i = 0; i < kd; ++i) {
            num = p.mul(num, static_cast<std::uint32_t>(nd - i));
            den = p.mul(den, static_cast<std::uint32_t>(i + 1));
        }
        result = p.mul(result, p.mul(num, p.inv(den)));
        n /= P;
        k /= P;
    }
    return {result, p};
}

/// C(-n, k) mod p for n >= 1, via C(-n, k) = (-1)^k C(n + k - 1, k).
inline FpElement binom_neg_mod_p(std::uint64_t n, std::uint64_t k, PrimeModulus p) {
    if (n == 0) throw DomainError("binom_neg_mod_p expects a positive upper index");
    FpElement b = binom_mod_p(n + k - 1, k, p);
    return (k % 2 == 0) ? b : -b;
}

}  // namespace steencalc
