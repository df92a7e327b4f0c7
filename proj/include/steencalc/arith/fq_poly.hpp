#pragma once

// Univariate polynomials over F_q, their factorization, and residue fields
// F_q[t]/(pi) for monic irreducible pi.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "steencalc/arith/finite_field.hpp"

namespace steencalc {

class FqPoly {
public:
    explicit FqPoly(FqField field) : field_(std::move(field)) {}
    FqPoly(FqField field, std::vector<FqElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
        for (const auto& x : c_)
            if (!(x.field() == field_)) throw MismatchError("polynomial coefficient from another field");
        trim();
    }
    static FqPoly constant(const FqElement& a) { return FqPoly(a.field(), {a}); }
    /// x^k
    static FqPoly monomial(const FqField& f, std::size_t k, const FqElement& coeff) {
        std::vector<FqElement> c(k + 1, f.zero());
        c[k] = coeff;
        return FqPoly(f, std::move(c));
    }
    static FqPoly x(const FqField& f) { return monomial(f, 1, f.one()); }
    /// Integer coefficients, low to high, reduced into F_q.
    static FqPoly from_ints(const FqField& f, const std::vector<std::int64_t>& ints) {
        std::vector<FqElement> c;
        c.reserve(ints.size());
        for (auto n : ints) c.push_back(f.from_int(n));
        return FqPoly(f, std::move(c));
    }

    const FqField& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<FqElement>& coeffs() const noexcept { return c_; }
    FqElement coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    FqElement leading() const { return c_.empty() ? field_.zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    FqPoly monic() const {
        if (is_zero()) return *this;
        const FqElement inv = leading().inverse();
        return scaled(inv);
    }

    FqPoly scaled(const FqElement& a) const {
        std::vector<FqElement> r;
        r.reserve(c_.size());
        for (const auto& x : c_) r.push_back(x * a);
        return FqPoly(field_, std::move(r));
    }

    friend FqPoly operator+(const FqPoly& a, const FqPoly& b) { return add(a, b, false); }
    friend FqPoly operator-(const FqPoly& a, const FqPoly& b) { return add(a, b, true); }
    FqPoly operator-() const { return FqPoly(field_) - *this; }

    friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
        std::vector<FqElement> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return FqPoly(a.field_, std::move(r));
    }

    /// Quotient and remainder; b must be nonzero.
    static std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
        check(a, b);
        if (b.is_zero()) throw DomainError("polynomial division by zero");
        FqPoly r = a;
        if (a.degree() < b.degree()) return {FqPoly(a.field_), r};
        std::vector<FqElement> q(a.c_.size() - b.c_.size() + 1, a.field_.zero());
        const FqElement lead_inv = b.leading().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            const FqElement c = r.leading() * lead_inv;
            q[shift] = c;
            for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[shift + i] = r.c_[shift + i] - c * b.c_[i];
            r.trim();
        }
        return {FqPoly(a.field_, std::move(q)), r};
    }
    friend FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }
    friend FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }

    /// Monic gcd (zero if both are zero).
    static FqPoly gcd(FqPoly a, FqPoly b) {
        while (!b.is_zero()) {
            FqPoly r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    FqPoly derivative() const {
        if (c_.size() <= 1) return FqPoly(field_);
        std::vector<FqElement> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())));
        return FqPoly(field_, std::move(r));
    }

    FqElement evaluate(const FqElement& x) const {
        FqElement r = field_.zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    FqPoly pow(std::uint64_t e) const {
        FqPoly r = constant(field_.one()), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// this^e mod m
    FqPoly powmod(std::uint64_t e, const FqPoly& m) const {
        FqPoly r = constant(field_.one()) % m, b = *this % m;
        while (e) {
            if (e & 1) r = (r * b) % m;
            b = (b * b) % m;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    /// Total order used to sort factor lists: by degree, then coefficients from the top.
    friend bool operator<(const FqPoly& a, const FqPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i].code() != b.c_[i].code()) return a.c_[i].code() < b.c_[i].code();
        return false;
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            std::string coef = c_[i].to_string();
            if (field_.degree() > 1 && coef.find('+') != std::string::npos) coef = "(" + coef + ")";
            if (!s.empty()) s += "+";
            if (i == 0) {
                s += coef;
            } else {
                if (!c_[i].is_one()) s += coef + "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    static void check(const FqPoly& a, const FqPoly& b) {
        if (!(a.field_ == b.field_)) throw MismatchError("polynomials over different fields");
    }
    static FqPoly add(const FqPoly& a, const FqPoly& b, bool subtract) {
        check(a, b);
        std::vector<FqElement> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = subtract ? r[i] - b.c_[i] : r[i] + b.c_[i];
        return FqPoly(a.field_, std::move(r));
    }

    FqField field_;
    std::vector<FqElement> c_;
};

namespace detail {

/// x^(q^k) mod m, by k successive q-th powers.
inline FqPoly frobenius_power(const FqPoly& base, std::size_t k, const FqPoly& m) {
    FqPoly r = base % m;
    for (std::size_t i = 0; i < k; ++i) r = r.powmod(base.field().order(), m);
    return r;
}

/// Inverse Frobenius on coefficients: c -> c^(q/l).
inline FqPoly coefficient_lth_root(const FqPoly& g) {
    const FqField& f = g.field();
    const std::uint64_t e = f.order() / f.characteristic();
    std::vector<FqElement> c;
    for (const auto& x : g.coeffs()) c.push_back(x.pow(e));
    return FqPoly(f, std::move(c));
}

/// Yun-style squarefree decomposition in characteristic l: list of (g, m)
/// with g squarefree, pairwise coprime, f = lc * prod g^m.
inline void squarefree_decompose(const FqPoly& f, std::uint64_t mult, std::vector<std::pair<FqPoly, std::uint64_t>>& out) {
    if (f.degree() <= 0) return;
    const std::uint32_t l = f.field().characteristic();
    FqPoly df = f.derivative();
    if (df.is_zero()) {
        // f = g(t^l) = (g~)^l
        std::vector<FqElement> c;
        for (std::size_t i = 0; i < f.coeffs().size(); i += l) c.push_back(f.coeffs()[i]);
        squarefree_decompose(coefficient_lth_root(FqPoly(f.field(), std::move(c))), mult * l, out);
        return;
    }
    FqPoly c = FqPoly::gcd(f, df);
    FqPoly w = f / c;
    std::uint64_t i = 1;
    while (w.degree() > 0) {
        FqPoly y = FqPoly::gcd(w, c);
        FqPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        // remaining part is an l-th power
        std::vector<FqElement> cc;
        for (std::size_t j = 0; j < c.coeffs().size(); j += l) cc.push_back(c.coeffs()[j]);
        squarefree_decompose(coefficient_lth_root(FqPoly(c.field(), std::move(cc))), mult * l, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// pairs (product of all irreducible factors of degree k, k).
inline std::vector<std::pair<FqPoly, std::size_t>> distinct_degree(FqPoly f) {
    std::vector<std::pair<FqPoly, std::size_t>> out;
    const FqPoly x = FqPoly::x(f.field());
    FqPoly h = x % f;
    for (std::size_t k = 1; 2 * k <= static_cast<std::size_t>(f.degree()); ++k) {
        h = h.powmod(f.field().order(), f);
        FqPoly g = FqPoly::gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), static_cast<std::size_t>(f.degree()));
    return out;
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree k.
inline void equal_degree(const FqPoly& f, std::size_t k, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    if (static_cast<std::size_t>(f.degree()) == k) {
        out.push_back(f.monic());
        return;
    }
    const FqField& F = f.field();
    const std::uint64_t q = F.order();
    std::uniform_int_distribution<std::uint64_t> coef(0, q - 1);
    for (;;) {
        std::vector<FqElement> c;
        for (int i = 0; i < f.degree(); ++i) c.push_back(F.from_code(coef(rng)));
        FqPoly a(F, std::move(c));
        if (a.degree() <= 0) continue;
        FqPoly b(F);
        if (F.characteristic() == 2) {
            // trace to F_2 over the degree k*d extension
            FqPoly t = a % f, acc = t;
            const std::size_t steps = k * F.degree();
            for (std::size_t i = 1; i < steps; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            b = acc;
        } else {
            // a^((q^k - 1)/2) = (a * a^q * ... * a^(q^(k-1)))^((q-1)/2)
            FqPoly norm = a % f, t = a % f;
            for (std::size_t i = 1; i < k; ++i) {
                t = t.powmod(q, f);
                norm = (norm * t) % f;
            }
            b = norm.powmod((q - 1) / 2, f) - FqPoly::constant(F.one());
        }
        FqPoly g = FqPoly::gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, k, rng, out);
            equal_degree(f / g, k, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// One irreducible factor with its multiplicity.
struct PolyFactor {
    FqPoly factor;  // monic irreducible
    std::uint64_t multiplicity;
};

/// Complete factorization into monic irreducibles, sorted; the leading
/// coefficient is dropped.
inline std::vector<PolyFactor> factor(const FqPoly& f) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    std::vector<std::pair<FqPoly, std::uint64_t>> sqf;
    detail::squarefree_decompose(f.monic(), 1, sqf);
    std::mt19937_64 rng(0x5eed);
    std::vector<PolyFactor> out;
    for (const auto& [g, m] : sqf) {
        for (const auto& [prod, k] : detail::distinct_degree(g)) {
            std::vector<FqPoly> pieces;
            detail::equal_degree(prod, k, rng, pieces);
            for (auto& piece : pieces) out.push_back({std::move(piece), m});
        }
    }
    // merge equal factors from different squarefree layers (cannot happen for
    // a correct decomposition, kept for a canonical result)
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) { return a.factor < b.factor; });
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(std::move(pf));
    }
    return merged;
}

inline bool is_irreducible(const FqPoly& f) {
    if (f.degree() <= 0) return false;
    auto fs = factor(f);
    return fs.size() == 1 && fs[0].multiplicity == 1;
}

class ResidueElement;

/// The finite field F_q[t]/(pi) for a monic irreducible pi over F_q.
class ResidueField {
public:
    explicit ResidueField(FqPoly pi) : pi_(std::move(pi)) {
        if (!pi_.is_monic() || !is_irreducible(pi_)) throw DomainError("residue field modulus must be monic irreducible");
        order_ = 1;
        for (int i = 0; i < pi_.degree(); ++i) {
            if (order_ > (std::uint64_t{1} << 62) / pi_.field().order()) throw UnsupportedError("residue field too large");
            order_ *= pi_.field().order();
        }
    }

    const FqPoly& modulus() const noexcept { return pi_; }
    const FqField& base() const noexcept { return pi_.field(); }
    std::uint64_t order() const noexcept { return order_; }
    std::uint32_t characteristic() const noexcept { return pi_.field().characteristic(); }
    /// Degree over the base field F_q.
    int degree() const noexcept { return pi_.degree(); }

    ResidueElement reduce(const FqPoly& a) const;
    ResidueElement one() const;

    friend bool operator==(const ResidueField& a, const ResidueField& b) { return a.pi_ == b.pi_; }

private:
    FqPoly pi_;
    std::uint64_t order_ = 1;
};

/// An element of F_q[t]/(pi), kept reduced.
class ResidueElement {
public:
    ResidueElement(ResidueField field, FqPoly value) : field_(std::move(field)), v_(std::move(value)) {
        v_ = v_ % field_.modulus();
    }

    const ResidueField& field() const noexcept { return field_; }
    const FqPoly& value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_.is_zero(); }
    bool is_one() const { return v_.degree() == 0 && v_.leading().is_one(); }

    friend ResidueElement operator*(const ResidueElement& a, const ResidueElement& b) {
        if (!(a.field_ == b.field_)) throw MismatchError("residue elements from different fields");
        return {a.field_, a.v_ * b.v_};
    }
    ResidueElement pow(std::uint64_t e) const { return {field_, v_.powmod(e, field_.modulus())}; }
    ResidueElement inverse() const {
        if (is_zero()) throw DomainError("zero has no inverse in a residue field");
        return pow(field_.order() - 2);
    }
    friend ResidueElement operator/(const ResidueElement& a, const ResidueElement& b) { return a * b.inverse(); }

    /// Norm down to F_q: product of the Galois conjugates u^(q^i).
    FqElement norm() const {
        const std::uint64_t q = field_.base().order();
        ResidueElement acc = *this, t = *this;
        for (int i = 1; i < field_.degree(); ++i) {
            t = t.pow(q);
            acc = acc * t;
        }
        if (acc.v_.degree() > 0) detail::internal_failure("norm left the base field");
        return acc.v_.coeff(0);
    }

    friend bool operator==(const ResidueElement& a, const ResidueElement& b) {
        return a.field_ == b.field_ && a.v_ == b.v_;
    }

    std::string to_string() const { return v_.to_string(); }

private:
    ResidueField field_;
    FqPoly v_;
};

inline ResidueElement ResidueField::reduce(const FqPoly& a) const { return {*this, a}; }
inline ResidueElement ResidueField::one() const { return {*this, FqPoly::constant(base().one())}; }

}  // namespace steencalc
