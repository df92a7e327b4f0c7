#pragma once

// Small finite fields F_q, q = l^d, as F_l[x]/(f) for a fixed irreducible f.
//
// The defining polynomial is the lexicographically least monic irreducible
// polynomial of degree d: writing f = x^d + c_{d-1}x^{d-1} + ... + c_0, the
// candidates are ordered by the integer c_0 + c_1 l + ... + c_{d-1} l^{d-1}
// and the first irreducible one is taken. Elements are stored as that same
// base-l integer encoding of their coordinate vector.

#include <array>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "steencalc/arith/prime.hpp"
#include "steencalc/errors.hpp"

namespace steencalc {

namespace detail::fl {

using Poly = std::vector<std::uint32_t>;  // coefficients low to high, mod l

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mod(Poly a, const Poly& m, PrimeModulus l) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = l.inv(m.back());
    while (a.size() > dm) {
        const std::uint32_t c = l.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = l.sub(a[shift + i], l.mul(c, m[i]));
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, PrimeModulus l) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = l.add(r[i + j], l.mul(a[i], b[j]));
    return mod(std::move(r), m, l);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, PrimeModulus l) {
    Poly r{1};
    r = mod(r, m, l);
    base = mod(std::move(base), m, l);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, l);
        base = mulmod(base, base, m, l);
        e >>= 1;
    }
    return r;
}

inline Poly gcd(Poly a, Poly b, PrimeModulus l) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, l);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly sub(Poly a, const Poly& b, PrimeModulus l) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = l.sub(a[i], b[i]);
    trim(a);
    return a;
}

/// Rabin's irreducibility test over F_l.
inline bool is_irreducible(const Poly& f, PrimeModulus l) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    // x^(l^k) mod f by repeated l-th powering.
    auto frob_power = [&](std::size_t k) {
        Poly r = x;
        for (std::size_t i = 0; i < k; ++i) r = powmod(r, l.value(), f, l);
        return r;
    };
    for (std::size_t r = 2; r <= d; ++r) {
        if (d % r != 0 || !is_prime(r)) continue;
        Poly g = gcd(f, sub(frob_power(d / r), x, l), l);
        if (g.size() != 1) return false;
    }
    return sub(frob_power(d), x, l).empty();
}

}  // namespace detail::fl

inline constexpr unsigned kMaxFieldDegree = 64;

class FqElement;

/// The finite field with q = l^d elements.
class FqField {
public:
    FqField(std::uint64_t characteristic, unsigned degree) {
        PrimeModulus l(characteristic);
        if (degree == 0 || degree > kMaxFieldDegree) throw DomainError("unsupported field degree");
        auto data = std::make_shared<Data>(Data{l, degree, 1, {}});
        for (unsigned i = 0; i < degree; ++i) {
            if (data->order > (std::uint64_t{1} << 62) / l.value()) throw DomainError("field too large");
            data->order *= l.value();
        }
        if (degree == 1) {
            data->modulus = {0, 1};
        } else {
            for (std::uint64_t code = 0; code < data->order; ++code) {
                detail::fl::Poly f(degree + 1, 0);
                std::uint64_t c = code;
                for (unsigned i = 0; i < degree; ++i, c /= l.value()) f[i] = static_cast<std::uint32_t>(c % l.value());
                f[degree] = 1;
                if (detail::fl::is_irreducible(f, l)) {
                    data->modulus = std::move(f);
                    break;
                }
            }
        }
        data_ = std::move(data);
    }

    /// F_q for a prime power q.
    static FqField of_order(std::uint64_t q) {
        if (q < 2) throw DomainError("field order must be a prime power >= 2");
        std::uint64_t l = 2;
        while (q % l != 0) ++l;
        unsigned d = 0;
        std::uint64_t r = q;
        while (r % l == 0) {
            r /= l;
            ++d;
        }
        if (r != 1) throw DomainError(std::to_string(q) + " is not a prime power");
        return FqField(l, d);
    }

    PrimeModulus prime_field() const noexcept { return data_->l; }
    std::uint32_t characteristic() const noexcept { return data_->l.value(); }
    unsigned degree() const noexcept { return data_->degree; }
    std::uint64_t order() const noexcept { return data_->order; }
    /// Monic defining polynomial over F_l, low to high (x for the prime field).
    const std::vector<std::uint32_t>& modulus() const noexcept { return data_->modulus; }

    FqElement zero() const;
    FqElement one() const;
    FqElement from_int(std::int64_t n) const;
    /// Element with the given base-l encoding, code in [0, q).
    FqElement from_code(std::uint64_t code) const;
    FqElement from_coords(std::span<const std::uint32_t> coords) const;
    /// The class of x in F_l[x]/(f); a field generator when degree > 1.
    FqElement generator() const;

    friend bool operator==(const FqField& a, const FqField& b) noexcept {
        return a.data_ == b.data_ ||
               (a.data_->l == b.data_->l && a.data_->degree == b.data_->degree);
    }

    std::string name() const { return "F_" + std::to_string(order()); }

private:
    struct Data {
        PrimeModulus l;
        unsigned degree;
        std::uint64_t order;
        std::vector<std::uint32_t> modulus;
    };
    std::shared_ptr<const Data> data_;
};

/// An element of F_q.
class FqElement {
public:
    FqElement(FqField field, std::uint64_t code) : field_(std::move(field)), code_(code) {
        if (code_ >= field_.order()) throw DomainError("field element code out of range");
    }

    const FqField& field() const noexcept { return field_; }
    std::uint64_t code() const noexcept { return code_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }

    /// Coordinates over F_l (low to high), exactly degree() of them.
    std::vector<std::uint32_t> coords() const {
        std::vector<std::uint32_t> c(field_.degree());
        decode(c.data());
        return c;
    }

    friend FqElement operator+(const FqElement& a, const FqElement& b) { return combine(a, b, false); }
    friend FqElement operator-(const FqElement& a, const FqElement& b) { return combine(a, b, true); }
    FqElement operator-() const { return field_.zero() - *this; }

    friend FqElement operator*(const FqElement& a, const FqElement& b) {
        check(a, b);
        const PrimeModulus l = a.field_.prime_field();
        const unsigned d = a.field_.degree();
        if (d == 1)
            return {a.field_, l.mul(static_cast<std::uint32_t>(a.code_), static_cast<std::uint32_t>(b.code_))};
        std::array<std::uint32_t, kMaxFieldDegree> x{}, y{};
        a.decode(x.data());
        b.decode(y.data());
        std::array<std::uint32_t, 2 * kMaxFieldDegree> r{};
        for (unsigned i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < d; ++j) r[i + j] = l.add(r[i + j], l.mul(x[i], y[j]));
        }
        const auto& f = a.field_.modulus();
        for (unsigned k = 2 * d - 2; k >= d; --k) {
            const std::uint32_t c = r[k];
            if (c == 0) continue;
            r[k] = 0;
            for (unsigned i = 0; i < d; ++i) r[k - d + i] = l.sub(r[k - d + i], l.mul(c, f[i]));
        }
        return {a.field_, encode(r.data(), d, l.value())};
    }

    FqElement pow(std::uint64_t e) const {
        FqElement r = field_.one(), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// Multiplicative inverse via x^(q-2).
    FqElement inverse() const {
        if (is_zero()) throw DomainError("zero has no inverse in " + field_.name());
        return pow(field_.order() - 2);
    }

    friend FqElement operator/(const FqElement& a, const FqElement& b) { return a * b.inverse(); }

    friend bool operator==(const FqElement& a, const FqElement& b) noexcept {
        return a.code_ == b.code_ && a.field_ == b.field_;
    }
    friend bool operator<(const FqElement& a, const FqElement& b) noexcept { return a.code_ < b.code_; }

    /// Integer for the prime field, otherwise the polynomial in `g`.
    std::string to_string() const {
        if (field_.degree() == 1) return std::to_string(code_);
        auto c = coords();
        std::string s;
        for (unsigned i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
            if (i > 0) s += (c[i] != 1 ? "*g" : "g") + (i > 1 ? "^" + std::to_string(i) : std::string{});
        }
        return s.empty() ? "0" : s;
    }

    friend std::ostream& operator<<(std::ostream& os, const FqElement& a) { return os << a.to_string(); }

private:
    static void check(const FqElement& a, const FqElement& b) {
        if (!(a.field_ == b.field_)) throw MismatchError("elements of different finite fields");
    }

    void decode(std::uint32_t* out) const {
        std::uint64_t c = code_;
        const std::uint32_t l = field_.characteristic();
        for (unsigned i = 0; i < field_.degree(); ++i, c /= l) out[i] = static_cast<std::uint32_t>(c % l);
    }

    static std::uint64_t encode(const std::uint32_t* in, unsigned d, std::uint32_t l) {
        std::uint64_t c = 0;
        for (unsigned i = d; i-- > 0;) c = c * l + in[i];
        return c;
    }

    static FqElement combine(const FqElement& a, const FqElement& b, bool subtract) {
        check(a, b);
        const PrimeModulus l = a.field_.prime_field();
        const unsigned d = a.field_.degree();
        if (d == 1) {
            auto x = static_cast<std::uint32_t>(a.code_), y = static_cast<std::uint32_t>(b.code_);
            return {a.field_, subtract ? l.sub(x, y) : l.add(x, y)};
        }
        std::array<std::uint32_t, kMaxFieldDegree> x{}, y{};
        a.decode(x.data());
        b.decode(y.data());
        for (unsigned i = 0; i < d; ++i) x[i] = subtract ? l.sub(x[i], y[i]) : l.add(x[i], y[i]);
        return {a.field_, encode(x.data(), d, l.value())};
    }

    friend class FqField;

    FqField field_;
    std::uint64_t code_;
};

inline FqElement FqField::zero() const { return {*this, 0}; }
inline FqElement FqField::one() const { return {*this, 1}; }
inline FqElement FqField::from_int(std::int64_t n) const { return {*this, prime_field().reduce(n)}; }
inline FqElement FqField::from_code(std::uint64_t code) const { return {*this, code}; }

inline FqElement FqField::from_coords(std::span<const std::uint32_t> coords) const {
    if (coords.size() > degree()) throw DomainError("too many coordinates for " + name());
    std::array<std::uint32_t, kMaxFieldDegree> c{};
    for (std::size_t i = 0; i < coords.size(); ++i) c[i] = prime_field().reduce(coords[i]);
    return {*this, FqElement::encode(c.data(), degree(), characteristic())};
}

inline FqElement FqField::generator() const {
    if (degree() == 1) throw DomainError(name() + " is a prime field; it has no polynomial generator");
    return {*this, characteristic()};
}

}  // namespace steencalc
