#pragma once

// Classes in K^x / (K^x)^p for finite fields K, and the factorization pattern
// of the Kummer polynomial t^p - a.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "steencalc/arith/finite_field.hpp"
#include "steencalc/arith/fq_poly.hpp"
#include "steencalc/arith/prime.hpp"

namespace steencalc {

/// The class of a nonzero element u of a finite field K (of characteristic
/// != p) modulo p-th powers. Works for FqElement and ResidueElement.
///
/// K^x is cyclic of order |K| - 1, so w is a p-th power iff p does not divide
/// |K| - 1 or w^((|K|-1)/p) = 1.
template <class Element>
class PowerClass {
public:
    PowerClass(Element u, PrimeModulus p) : rep_(std::move(u)), p_(p) {
        if (rep_.is_zero()) throw DomainError("p-th power class of zero");
        if (rep_.field().characteristic() == p.value())
            throw DomainError("p-th power classes need characteristic different from p");
    }

    const Element& representative() const noexcept { return rep_; }
    PrimeModulus modulus() const noexcept { return p_; }

    bool is_trivial() const { return is_pth_power(rep_, p_); }

    PowerClass pow(std::int64_t k) const {
        const std::uint64_t n = rep_.field().order() - 1;
        const auto e = static_cast<std::uint64_t>(((k % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                                                  static_cast<std::int64_t>(n));
        return {rep_.pow(e), p_};
    }
    PowerClass inverse() const { return {rep_.inverse(), p_}; }

    friend PowerClass operator*(const PowerClass& a, const PowerClass& b) {
        if (!(a.p_ == b.p_)) throw MismatchError("power classes for different primes");
        return {a.rep_ * b.rep_, a.p_};
    }

    /// Same class iff the ratio is a p-th power.
    friend bool operator==(const PowerClass& a, const PowerClass& b) {
        if (!(a.p_ == b.p_)) throw MismatchError("power classes for different primes");
        return is_pth_power(a.rep_ / b.rep_, a.p_);
    }

    static bool is_pth_power(const Element& w, PrimeModulus p) {
        const std::uint64_t n = w.field().order() - 1;
        if (n % p.value() != 0) return true;
        return w.pow(n / p.value()).is_one();
    }

private:
    Element rep_;
    PrimeModulus p_;
};

using PthPowerClass = PowerClass<FqElement>;
using ResiduePowerClass = PowerClass<ResidueElement>;

inline PthPowerClass pth_power_class(const FqElement& u, PrimeModulus p) { return {u, p}; }

inline bool same_class(const FqElement& u, const FqElement& v, PrimeModulus p) {
    return pth_power_class(u, p) == pth_power_class(v, p);
}

/// Irreducible-factor pattern of t^p - a over F_q: one (degree, multiplicity)
/// entry per irreducible factor, sorted by degree.
inline std::vector<std::pair<std::size_t, std::size_t>> factor_kummer(const FqElement& a, PrimeModulus p) {
    if (a.is_zero()) throw DomainError("Kummer polynomial t^p - a needs a != 0");
    const FqField& f = a.field();
    if (f.characteristic() == p.value()) throw DomainError("t^p - a is inseparable in characteristic p");
    FqPoly kummer = FqPoly::monomial(f, p.value(), f.one()) - FqPoly::constant(a);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& pf : factor(kummer))
        out.emplace_back(static_cast<std::size_t>(pf.factor.degree()), static_cast<std::size_t>(pf.multiplicity));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace steencalc
