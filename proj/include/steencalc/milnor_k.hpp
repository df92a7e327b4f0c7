#pragma once

// Milnor K-theory mod p of F_q(t) in degrees <= 2, checked through residues
// at the places of P^1 over F_q, where the K-groups of the residue fields are
// Z (K_0) and the unit group (K_1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steencalc/arith/fq_poly.hpp"
#include "steencalc/arith/power_class.hpp"
#include "steencalc/arith/prime.hpp"
#include "steencalc/errors.hpp"

namespace steencalc {

/// num / den in F_q(t), with gcd 1 and den monic.
class RationalFunction {
public:
    RationalFunction(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        const FqPoly g = FqPoly::gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        const FqElement lead = den_.leading();
        if (!lead.is_one()) {
            num_ = num_.scaled(lead.inverse());
            den_ = den_.monic();
        }
    }
    explicit RationalFunction(FqPoly num) : RationalFunction(num, FqPoly::constant(num.field().one())) {}

    static RationalFunction constant(const FqElement& c) { return RationalFunction(FqPoly::constant(c)); }
    static RationalFunction t(const FqField& f) { return RationalFunction(FqPoly::x(f)); }

    const FqField& field() const noexcept { return num_.field(); }
    const FqPoly& numerator() const noexcept { return num_; }
    const FqPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    RationalFunction operator-() const { return {-num_, den_}; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    RationalFunction inverse() const {
        if (is_zero()) throw DomainError("zero has no inverse in F_q(t)");
        return {den_, num_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

    RationalFunction pow(std::int64_t e) const {
        if (e < 0) return inverse().pow(-e);
        return {num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e))};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const {
        if (den_.degree() == 0) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    FqPoly num_, den_;
};

/// A closed point of P^1 over F_q: a monic irreducible pi(t), or infinity.
/// At infinity the local coordinate is s = 1/t and the residue field is
/// presented as F_q[s]/(s).
class Place {
public:
    static Place infinity(const FqField& f) { return Place(f, std::nullopt); }
    static Place finite(FqPoly pi) {
        if (!pi.is_monic() || !is_irreducible(pi)) throw DomainError("place must be a monic irreducible polynomial");
        const FqField f = pi.field();
        return Place(f, std::move(pi));
    }

    bool is_infinity() const noexcept { return !pi_.has_value(); }
    const FqPoly& polynomial() const {
        if (!pi_) throw DomainError("the place at infinity has no polynomial");
        return *pi_;
    }
    const FqField& field() const noexcept { return field_; }
    int degree() const noexcept { return pi_ ? pi_->degree() : 1; }
    ResidueField residue_field() const { return ResidueField(pi_ ? *pi_ : FqPoly::x(field_)); }

    std::string to_string() const { return pi_ ? pi_->to_string() : "inf"; }

    friend bool operator==(const Place& a, const Place& b) { return a.pi_ == b.pi_; }
    friend bool operator<(const Place& a, const Place& b) {
        if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
        return !a.is_infinity() && *a.pi_ < *b.pi_;
    }

private:
    Place(FqField f, std::optional<FqPoly> pi) : field_(std::move(f)), pi_(std::move(pi)) {}
    FqField field_;
    std::optional<FqPoly> pi_;
};

inline std::int64_t valuation(const RationalFunction& f, const Place& x) {
    if (f.is_zero()) throw DomainError("valuation of zero");
    if (x.is_infinity()) return f.denominator().degree() - f.numerator().degree();
    auto order = [&](FqPoly g) {
        std::int64_t n = 0;
        for (;;) {
            auto [q, r] = FqPoly::divmod(g, x.polynomial());
            if (!r.is_zero()) return n;
            g = std::move(q);
            ++n;
        }
    };
    return order(f.numerator()) - order(f.denominator());
}

/// Value at x of a function with v_x(u) = 0, in the residue field of x.
inline ResidueElement residue_value(const RationalFunction& u, const Place& x) {
    if (valuation(u, x) != 0) throw DomainError("residue value needs a unit at the place " + x.to_string());
    const ResidueField k = x.residue_field();
    if (x.is_infinity()) {
        // same degree: u(1/s) at s = 0 is the ratio of leading coefficients
        return k.reduce(FqPoly::constant(u.numerator().leading() / u.denominator().leading()));
    }
    return k.reduce(u.numerator()) / k.reduce(u.denominator());
}

/// Every place where some function in `fs` has nonzero valuation, plus
/// infinity.
inline std::vector<Place> support(const std::vector<RationalFunction>& fs) {
    if (fs.empty()) throw DomainError("support of an empty list");
    std::vector<Place> out;
    for (const auto& f : fs) {
        if (f.is_zero()) throw DomainError("support of zero");
        for (const FqPoly* g : {&f.numerator(), &f.denominator()}) {
            if (g->degree() <= 0) continue;
            for (const auto& pf : factor(*g)) {
                Place x = Place::finite(pf.factor);
                if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
            }
        }
    }
    out.push_back(Place::infinity(fs.front().field()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Residues of a degree-one source: x -> v_x(f) mod p, zeros dropped.
inline std::map<Place, std::uint32_t> divisor_map(const RationalFunction& f, PrimeModulus p) {
    std::map<Place, std::uint32_t> out;
    for (const auto& x : support({f})) {
        const std::uint32_t v = p.reduce(valuation(f, x));
        if (v != 0) out.emplace(x, v);
    }
    return out;
}

/// (-1)^{v(f) v(g)} f^{v(g)} / g^{v(f)} evaluated at x.
inline ResidueElement tame_value(const RationalFunction& f, const RationalFunction& g, const Place& x) {
    const std::int64_t vf = valuation(f, x), vg = valuation(g, x);
    RationalFunction u = f.pow(vg) / g.pow(vf);
    if ((vf * vg) % 2 != 0) u = -u;
    return residue_value(u, x);
}

inline ResiduePowerClass tame_symbol(const RationalFunction& f, const RationalFunction& g, const Place& x, PrimeModulus p) {
    return {tame_value(f, g, x), p};
}

/// The residue map d on a symbol {f, g}. Our convention puts the second
/// entry first: d_x{f, g} = tame_symbol(g, f) = tame_symbol(f, g)^{-1}.
inline ResiduePowerClass boundary(const RationalFunction& f, const RationalFunction& g, const Place& x, PrimeModulus p) {
    return tame_symbol(g, f, x, p);
}

/// Formal F_p-combination of symbols {f_1, ..., f_n}, n in {1, 2}.
class SymbolChain {
public:
    struct Term {
        std::uint32_t coefficient;
        std::vector<RationalFunction> entries;
    };

    SymbolChain(PrimeModulus p, int degree) : p_(p), degree_(degree) {
        if (degree < 1 || degree > 2) throw UnsupportedError("symbol chains of degree " + std::to_string(degree));
    }
    static SymbolChain symbol(PrimeModulus p, std::vector<RationalFunction> entries) {
        SymbolChain c(p, static_cast<int>(entries.size()));
        c.add(1, std::move(entries));
        return c;
    }

    void add(std::int64_t coefficient, std::vector<RationalFunction> entries) {
        if (static_cast<int>(entries.size()) != degree_) throw DomainError("symbol of the wrong degree");
        for (const auto& f : entries)
            if (f.is_zero()) throw DomainError("symbol entries must be nonzero");
        const std::uint32_t c = p_.reduce(coefficient);
        if (c != 0) terms_.push_back({c, std::move(entries)});
    }

    PrimeModulus modulus() const noexcept { return p_; }
    int degree() const noexcept { return degree_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    std::vector<RationalFunction> functions() const {
        std::vector<RationalFunction> out;
        for (const auto& t : terms_) out.insert(out.end(), t.entries.begin(), t.entries.end());
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            if (t.coefficient != 1) s += std::to_string(t.coefficient) + "*";
            s += "{";
            for (std::size_t i = 0; i < t.entries.size(); ++i) s += (i ? ", " : "") + t.entries[i].to_string();
            s += "}";
        }
        return s;
    }

private:
    PrimeModulus p_;
    int degree_;
    std::vector<Term> terms_;
};

/// alpha: prepend a to every symbol.
inline SymbolChain alpha_apply(const RationalFunction& a, const SymbolChain& chain) {
    if (a.is_zero()) throw DomainError("alpha needs a nonzero function");
    if (chain.degree() >= 2) throw DomainError("alpha would leave degree <= 2");
    SymbolChain out(chain.modulus(), chain.degree() + 1);
    for (const auto& t : chain.terms()) {
        std::vector<RationalFunction> e{a};
        e.insert(e.end(), t.entries.begin(), t.entries.end());
        out.add(t.coefficient, std::move(e));
    }
    return out;
}

/// Residues of a degree-two chain: x -> prod_terms d_x{f, g}^c, trivial
/// classes dropped.
inline std::map<Place, ResiduePowerClass> residues(const SymbolChain& chain) {
    if (chain.degree() != 2) throw DomainError("residue classes are defined for degree-two chains");
    std::map<Place, ResiduePowerClass> out;
    const auto fs = chain.functions();
    if (fs.empty()) return out;
    for (const auto& x : support(fs)) {
        std::optional<ResiduePowerClass> acc;
        for (const auto& t : chain.terms()) {
            const auto c = boundary(t.entries[0], t.entries[1], x, chain.modulus()).pow(t.coefficient);
            acc = acc ? *acc * c : c;
        }
        if (acc && !acc->is_trivial()) out.emplace(x, *acc);
    }
    return out;
}

/// d(alpha{f}) = -alpha(d{f}) at every place where v_x(a) = 0: the class
/// d_x{a, f} times a(x)^{v_x(f)} is a p-th power.
inline bool anticommute_check(const RationalFunction& a, const RationalFunction& f, PrimeModulus p) {
    for (const auto& x : support({a, f})) {
        if (valuation(a, x) != 0) continue;
        const auto lhs = boundary(a, f, x, p);
        const auto rhs = ResiduePowerClass(residue_value(a, x), p).pow(valuation(f, x));
        if (!(lhs * rhs).is_trivial()) return false;
    }
    return true;
}

}  // namespace steencalc
