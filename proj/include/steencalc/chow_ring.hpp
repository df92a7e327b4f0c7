#pragma once

// Truncated graded quotient rings F_p[g_1, ..., g_m] / (relations), the
// concrete model of Ch(X) used throughout.
//
// A presentation consists of generators with a codimension and a nilpotency
// bound (g^n = 0), plus rewrite rules "monomial -> polynomial". Every
// monomial of total codimension above the ring dimension is zero. Rules must
// be homogeneous and strictly decrease the monomial order in which exponent
// vectors are compared lexicographically with the LAST generator most
// significant; this order is multiplicative and well-founded, so rewriting
// terminates. The normal monomials (bounded by the nilpotencies, of
// codimension <= dimension, divisible by no rule) form the additive basis;
// the multiplication table over that basis is computed once and checked for
// associativity, which rejects non-confluent rule sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "steencalc/arith/prime.hpp"
#include "steencalc/errors.hpp"

namespace steencalc {

using Exponents = std::vector<int>;

struct Generator {
    std::string name;
    int codim = 1;
    int nilpotency = 1;  // g^nilpotency = 0

    friend bool operator==(const Generator&, const Generator&) = default;
};

struct RewriteRule {
    Exponents lhs;
    std::vector<std::pair<Exponents, std::int64_t>> rhs;  // integer coefficients, reduced mod p

    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Term of a raw (unnormalized) polynomial over named generators.
struct RawTerm {
    std::int64_t coefficient = 1;
    std::vector<std::pair<std::string, std::uint64_t>> factors;
};
using RawPolynomial = std::vector<RawTerm>;

class CycleClass;

class RingSpec {
public:
    RingSpec(PrimeModulus p, int dimension, std::vector<Generator> generators, std::vector<RewriteRule> rules = {},
             std::string label = {}, std::optional<std::vector<int>> product_dims = std::nullopt);

    /// Ch(P^n) = F_p[h]/(h^{n+1}).
    static RingSpec projective_space(int n, PrimeModulus p) {
        if (n < 0) throw DomainError("projective space of negative dimension");
        return RingSpec(p, n, {{"h", 1, n + 1}}, {}, "P" + std::to_string(n), std::vector<int>{n});
    }

    /// Ch(P^{n_1} x ... x P^{n_m}) with generators h1, ..., hm.
    static RingSpec product_of_projective_spaces(const std::vector<int>& dims, PrimeModulus p) {
        if (dims.empty()) throw DomainError("empty product of projective spaces");
        if (dims.size() == 1) return projective_space(dims[0], p);
        std::vector<Generator> gens;
        std::string label;
        int d = 0;
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (dims[i] < 0) throw DomainError("projective space of negative dimension");
            gens.push_back({"h" + std::to_string(i + 1), 1, dims[i] + 1});
            label += (i ? "x" : "") + std::string("P") + std::to_string(dims[i]);
            d += dims[i];
        }
        return RingSpec(p, d, std::move(gens), {}, label, dims);
    }

    /// Ch(P(E)) over `base` for a bundle of rank r = chern.size() with Chern
    /// classes c_1..c_r: new codim-1 generator z with z^r = -(c_1 z^{r-1} + ... + c_r).
    static RingSpec projective_bundle(const RingSpec& base, const std::vector<CycleClass>& chern,
                                      std::string generator = {});

    PrimeModulus modulus() const noexcept { return d_->p; }
    int dimension() const noexcept { return d_->dim; }
    const std::vector<Generator>& generators() const noexcept { return d_->gens; }
    const std::vector<RewriteRule>& rules() const noexcept { return d_->rules; }
    const std::string& label() const noexcept { return d_->label; }
    const std::optional<std::vector<int>>& product_dims() const noexcept { return d_->product_dims; }

    std::optional<std::size_t> generator_index(std::string_view name) const {
        for (std::size_t i = 0; i < d_->gens.size(); ++i)
            if (d_->gens[i].name == name) return i;
        return std::nullopt;
    }

    std::size_t basis_size() const noexcept { return d_->basis.size(); }
    const std::vector<Exponents>& basis() const noexcept { return d_->basis; }
    int basis_codim(std::size_t i) const noexcept { return d_->basis_codim[i]; }
    std::optional<std::size_t> basis_index(const Exponents& e) const {
        auto it = d_->index.find(e);
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    int codim_of(const Exponents& e) const {
        int c = 0;
        for (std::size_t i = 0; i < e.size(); ++i) c += e[i] * d_->gens[i].codim;
        return c;
    }

    /// Monomial key "h1*h2^2" (generators in declaration order), "1" for the unit.
    std::string monomial_string(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += d_->gens[i].name;
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }

    /// Normal form of generator g as a dense coefficient vector.
    const std::vector<std::uint32_t>& generator_image(std::size_t g) const { return d_->gen_images.at(g); }

    /// Sparse product of basis elements i and j.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& product(std::size_t i, std::size_t j) const {
        return d_->table[i * d_->basis.size() + j];
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) noexcept {
        return a.d_ == b.d_ || a.d_->signature == b.d_->signature;
    }

private:
    struct Data {
        PrimeModulus p{2};
        int dim = 0;
        std::vector<Generator> gens;
        std::vector<RewriteRule> rules;
        std::string label;
        std::optional<std::vector<int>> product_dims;
        std::string signature;
        std::vector<Exponents> basis;
        std::vector<int> basis_codim;
        std::map<Exponents, std::size_t> index;
        std::vector<std::vector<std::uint32_t>> gen_images;
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> table;
    };

    std::shared_ptr<const Data> d_;
};

/// An element of a RingSpec: a dense coefficient vector over its normal basis.
class CycleClass {
public:
    explicit CycleClass(RingSpec ring) : ring_(std::move(ring)), c_(ring_.basis_size(), 0) {}
    CycleClass(RingSpec ring, std::vector<std::uint32_t> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
        if (c_.size() != ring_.basis_size()) detail::internal_failure("coefficient vector size mismatch");
    }

    static CycleClass zero(const RingSpec& r) { return CycleClass(r); }
    static CycleClass constant(const RingSpec& r, std::int64_t n) {
        CycleClass c(r);
        c.c_[*r.basis_index(Exponents(r.generators().size(), 0))] = r.modulus().reduce(n);
        return c;
    }
    static CycleClass one(const RingSpec& r) { return constant(r, 1); }
    static CycleClass generator(const RingSpec& r, std::string_view name) {
        auto g = r.generator_index(name);
        if (!g) throw InputError("unknown generator '" + std::string(name) + "' in ring " + r.label());
        return CycleClass(r, r.generator_image(*g));
    }
    /// coefficient * prod g_i^{e_i}, reduced to normal form.
    static CycleClass monomial(const RingSpec& r, const Exponents& e, std::int64_t coefficient = 1) {
        if (e.size() != r.generators().size()) throw DomainError("exponent vector has wrong length");
        CycleClass acc = one(r);
        for (std::size_t g = 0; g < e.size(); ++g) {
            if (e[g] < 0) throw DomainError("negative exponent");
            if (e[g] >= r.generators()[g].nilpotency) return zero(r);
            if (e[g] > 0) acc = acc * CycleClass(r, r.generator_image(g)).pow(static_cast<std::uint64_t>(e[g]));
        }
        return acc * constant(r, coefficient);
    }

    const RingSpec& ring() const noexcept { return ring_; }
    std::span<const std::uint32_t> coefficients() const noexcept { return c_; }
    PrimeModulus modulus() const noexcept { return ring_.modulus(); }

    bool is_zero() const noexcept {
        return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
    }

    /// Coefficient of a normal monomial (zero for monomials outside the basis).
    FpElement coefficient(const Exponents& e) const {
        auto i = ring_.basis_index(e);
        return {i ? c_[*i] : 0, modulus()};
    }
    FpElement constant_term() const { return coefficient(Exponents(ring_.generators().size(), 0)); }

    /// Nonzero terms in basis order.
    std::vector<std::pair<Exponents, std::uint32_t>> terms() const {
        std::vector<std::pair<Exponents, std::uint32_t>> t;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) t.emplace_back(ring_.basis()[i], c_[i]);
        return t;
    }

    friend CycleClass operator+(const CycleClass& a, const CycleClass& b) {
        check(a, b);
        CycleClass r = a;
        const PrimeModulus p = a.modulus();
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p.add(r.c_[i], b.c_[i]);
        return r;
    }
    friend CycleClass operator-(const CycleClass& a, const CycleClass& b) {
        check(a, b);
        CycleClass r = a;
        const PrimeModulus p = a.modulus();
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = p.sub(r.c_[i], b.c_[i]);
        return r;
    }
    CycleClass operator-() const { return zero(ring_) - *this; }

    friend CycleClass operator*(const CycleClass& a, const CycleClass& b) {
        check(a, b);
        const std::size_t n = a.c_.size();
        const PrimeModulus p = a.modulus();
        std::vector<std::uint64_t> acc(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!a.c_[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!b.c_[j]) continue;
                const std::uint64_t ab = std::uint64_t{a.c_[i]} * b.c_[j] % p.value();
                for (auto [k, coef] : a.ring_.product(i, j)) acc[k] = (acc[k] + ab * coef) % p.value();
            }
        }
        std::vector<std::uint32_t> r(n);
        for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<std::uint32_t>(acc[k]);
        return CycleClass(a.ring_, std::move(r));
    }

    friend CycleClass operator*(std::int64_t s, const CycleClass& a) {
        CycleClass r = a;
        const std::uint32_t k = a.modulus().reduce(s);
        for (auto& x : r.c_) x = a.modulus().mul(x, k);
        return r;
    }
    friend CycleClass operator*(FpElement s, const CycleClass& a) { return static_cast<std::int64_t>(s.value()) * a; }

    CycleClass& operator+=(const CycleClass& b) { return *this = *this + b; }
    CycleClass& operator-=(const CycleClass& b) { return *this = *this - b; }
    CycleClass& operator*=(const CycleClass& b) { return *this = *this * b; }

    CycleClass pow(std::uint64_t e) const {
        CycleClass r = one(ring_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// Sum of the terms of total codimension exactly k.
    CycleClass graded_component(int k) const {
        CycleClass r(ring_);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (ring_.basis_codim(i) == k) r.c_[i] = c_[i];
        return r;
    }

    /// True if all nonzero terms have codimension k (the zero class qualifies).
    bool is_homogeneous_of(int k) const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] && ring_.basis_codim(i) != k) return false;
        return true;
    }

    /// Codimension of a nonzero homogeneous class; nullopt for zero or mixed classes.
    std::optional<int> homogeneous_codim() const {
        std::optional<int> k;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            if (k && *k != ring_.basis_codim(i)) return std::nullopt;
            k = ring_.basis_codim(i);
        }
        return k;
    }

    friend bool operator==(const CycleClass& a, const CycleClass& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

    /// "1+h+2*h^2"; "0" for zero.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            if (!s.empty()) s += "+";
            std::string m = ring_.monomial_string(ring_.basis()[i]);
            if (m == "1")
                s += std::to_string(c_[i]);
            else
                s += (c_[i] == 1 ? "" : std::to_string(c_[i]) + "*") + m;
        }
        return s.empty() ? "0" : s;
    }

private:
    static void check(const CycleClass& a, const CycleClass& b) {
        if (!(a.ring_ == b.ring_)) throw MismatchError("cycle classes from different rings");
    }

    RingSpec ring_;
    std::vector<std::uint32_t> c_;
};

namespace detail {

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Monomial order: lexicographic with the last generator most significant.
inline bool order_less(const Exponents& a, const Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

inline void enumerate_exponents(const std::vector<Generator>& gens, int max_codim, std::size_t g, Exponents& cur,
                                int codim, const std::function<void(const Exponents&, int)>& visit) {
    if (g == gens.size()) {
        visit(cur, codim);
        return;
    }
    for (int e = 0; e < gens[g].nilpotency && codim + e * gens[g].codim <= max_codim; ++e) {
        cur[g] = e;
        enumerate_exponents(gens, max_codim, g + 1, cur, codim + e * gens[g].codim, visit);
    }
    cur[g] = 0;
}

}  // namespace detail

inline RingSpec::RingSpec(PrimeModulus p, int dimension, std::vector<Generator> generators,
                          std::vector<RewriteRule> rules, std::string label,
                          std::optional<std::vector<int>> product_dims) {
    auto d = std::make_shared<Data>();
    d->p = p;
    d->dim = dimension;
    d->gens = std::move(generators);
    d->rules = std::move(rules);
    d->product_dims = std::move(product_dims);
    if (dimension < 0) throw ValidationError("ring dimension must be nonnegative");
    const std::size_t m = d->gens.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& g = d->gens[i];
        if (g.name.empty()) throw ValidationError("generator with empty name");
        if (g.codim < 1) throw ValidationError("generator '" + g.name + "' must have codimension >= 1");
        if (g.nilpotency < 1) throw ValidationError("generator '" + g.name + "' must have nilpotency bound >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (d->gens[j].name == g.name) throw ValidationError("duplicate generator '" + g.name + "'");
    }
    auto codim_of = [&](const Exponents& e) {
        int c = 0;
        for (std::size_t i = 0; i < m; ++i) c += e[i] * d->gens[i].codim;
        return c;
    };
    for (auto& rule : d->rules) {
        if (rule.lhs.size() != m) throw ValidationError("rewrite rule has wrong exponent length");
        for (std::size_t i = 0; i < m; ++i)
            if (rule.lhs[i] < 0 || rule.lhs[i] >= d->gens[i].nilpotency)
                throw ValidationError("rewrite rule left side overlaps a nilpotency truncation");
        const int lc = codim_of(rule.lhs);
        for (auto& [e, coef] : rule.rhs) {
            if (e.size() != m) throw ValidationError("rewrite rule has wrong exponent length");
            for (int x : e)
                if (x < 0) throw ValidationError("negative exponent in rewrite rule");
            if (codim_of(e) != lc) throw ValidationError("rewrite rule is not homogeneous");
            if (!detail::order_less(e, rule.lhs)) throw ValidationError("rewrite rule does not decrease the monomial order");
        }
    }

    d->label = label.empty() ? "ring" : std::move(label);
    d->signature = std::to_string(p.value()) + "|" + std::to_string(dimension);
    for (const auto& g : d->gens)
        d->signature += "|" + g.name + ":" + std::to_string(g.codim) + ":" + std::to_string(g.nilpotency);
    for (const auto& r : d->rules) {
        d->signature += "|R";
        for (int x : r.lhs) d->signature += "," + std::to_string(x);
        for (const auto& [e, c] : r.rhs) {
            d->signature += ";" + std::to_string(p.reduce(c));
            for (int x : e) d->signature += "," + std::to_string(x);
        }
    }

    // basis of normal monomials
    {
        Exponents cur(m, 0);
        detail::enumerate_exponents(d->gens, dimension, 0, cur, 0, [&](const Exponents& e, int codim) {
            for (const auto& r : d->rules)
                if (detail::divides(r.lhs, e)) return;
            d->basis.push_back(e);
            d->basis_codim.push_back(codim);
        });
        std::vector<std::size_t> order(d->basis.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (d->basis_codim[a] != d->basis_codim[b]) return d->basis_codim[a] < d->basis_codim[b];
            return d->basis[a] > d->basis[b];
        });
        std::vector<Exponents> basis;
        std::vector<int> codims;
        for (auto i : order) {
            basis.push_back(d->basis[i]);
            codims.push_back(d->basis_codim[i]);
        }
        d->basis = std::move(basis);
        d->basis_codim = std::move(codims);
        for (std::size_t i = 0; i < d->basis.size(); ++i) d->index[d->basis[i]] = i;
    }
    const std::size_t n = d->basis.size();

    // normal form of an arbitrary monomial by rewriting
    std::map<Exponents, std::vector<std::uint32_t>> memo;
    std::function<std::vector<std::uint32_t>(const Exponents&)> reduce = [&](const Exponents& e) {
        std::vector<std::uint32_t> out(n, 0);
        if (codim_of(e) > dimension) return out;
        for (std::size_t i = 0; i < m; ++i)
            if (e[i] >= d->gens[i].nilpotency) return out;
        if (auto it = d->index.find(e); it != d->index.end()) {
            out[it->second] = 1 % p.value();
            return out;
        }
        if (auto it = memo.find(e); it != memo.end()) return it->second;
        for (const auto& r : d->rules) {
            if (!detail::divides(r.lhs, e)) continue;
            for (const auto& [re, coef] : r.rhs) {
                Exponents next(m);
                for (std::size_t i = 0; i < m; ++i) next[i] = e[i] - r.lhs[i] + re[i];
                auto sub = reduce(next);
                const std::uint32_t c = p.reduce(coef);
                for (std::size_t k = 0; k < n; ++k) out[k] = p.add(out[k], p.mul(c, sub[k]));
            }
            break;
        }
        memo[e] = out;
        return out;
    };

    for (std::size_t g = 0; g < m; ++g) {
        Exponents e(m, 0);
        e[g] = 1;
        d->gen_images.push_back(reduce(e));
    }
    d->table.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Exponents e(m);
            for (std::size_t k = 0; k < m; ++k) e[k] = d->basis[i][k] + d->basis[j][k];
            auto v = reduce(e);
            std::vector<std::pair<std::uint32_t, std::uint32_t>> sparse;
            for (std::size_t k = 0; k < n; ++k)
                if (v[k]) sparse.emplace_back(static_cast<std::uint32_t>(k), v[k]);
            d->table[i * n + j] = sparse;
            d->table[j * n + i] = std::move(sparse);
        }

    if (!d->rules.empty()) {
        // associativity on basis triples; fails exactly when rewriting is not confluent
        auto mul_vec = [&](const std::vector<std::uint32_t>& a, std::size_t j) {
            std::vector<std::uint32_t> r(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                if (!a[i]) continue;
                for (auto [k, c] : d->table[i * n + j]) r[k] = p.add(r[k], p.mul(a[i], c));
            }
            return r;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                std::vector<std::uint32_t> ij(n, 0);
                for (auto [k, c] : d->table[i * n + j]) ij[k] = c;
                for (std::size_t k = j; k < n; ++k) {
                    std::vector<std::uint32_t> jk(n, 0);
                    for (auto [x, c] : d->table[j * n + k]) jk[x] = c;
                    if (mul_vec(ij, k) != mul_vec(jk, i))
                        throw ValidationError("rewrite rules are not confluent: multiplication is not associative");
                }
            }
    }
    d_ = std::move(d);
}

/// Normal form of a raw polynomial over named generators.
inline CycleClass normalize(const RawPolynomial& raw, const RingSpec& ring) {
    CycleClass acc = CycleClass::zero(ring);
    for (const auto& term : raw) {
        Exponents e(ring.generators().size(), 0);
        bool vanishes = false;
        for (const auto& [name, power] : term.factors) {
            auto g = ring.generator_index(name);
            if (!g) throw InputError("unknown generator '" + name + "' in ring " + ring.label());
            const auto total = static_cast<std::uint64_t>(e[*g]) + power;
            if (total >= static_cast<std::uint64_t>(ring.generators()[*g].nilpotency))
                vanishes = true;
            else
                e[*g] = static_cast<int>(total);
        }
        if (!vanishes) acc += CycleClass::monomial(ring, e, term.coefficient);
    }
    return acc;
}

inline CycleClass graded_component(const CycleClass& a, int k) { return a.graded_component(k); }

/// Inverse of a class with constant term 1: the geometric series in 1 - a,
/// which terminates because 1 - a is nilpotent.
inline CycleClass invert_unit_series(const CycleClass& a) {
    if (!(a.constant_term() == 1)) throw DomainError("invert_unit_series needs constant term 1, got " + a.to_string());
    const RingSpec& r = a.ring();
    const CycleClass u = CycleClass::one(r) - a;
    CycleClass b = CycleClass::one(r);
    for (int j = 0; j < r.dimension(); ++j) b = CycleClass::one(r) + u * b;
    return b;
}

/// Degree of a class on a product of projective spaces: coefficient of the
/// top monomial h_1^{n_1} ... h_m^{n_m}.
inline FpElement degree(const CycleClass& a) {
    const auto& dims = a.ring().product_dims();
    if (!dims) throw UnsupportedError("degree is only defined on products of projective spaces");
    return a.coefficient(Exponents(dims->begin(), dims->end()));
}

/// Ring homomorphism determined by the images of the generators of a.ring().
inline CycleClass substitute(const CycleClass& a, const RingSpec& target, const std::vector<CycleClass>& images) {
    const RingSpec& src = a.ring();
    if (images.size() != src.generators().size()) throw DomainError("substitution needs one image per generator");
    for (const auto& im : images)
        if (!(im.ring() == target)) throw MismatchError("substitution image lives in the wrong ring");
    CycleClass out = CycleClass::zero(target);
    for (const auto& [e, coef] : a.terms()) {
        CycleClass t = CycleClass::constant(target, coef);
        for (std::size_t g = 0; g < e.size(); ++g)
            if (e[g] > 0) t = t * images[g].pow(static_cast<std::uint64_t>(e[g]));
        out += t;
    }
    return out;
}

/// A product ring A x B with the generator positions of each factor.
struct ProductRing {
    RingSpec ring;
    RingSpec left;
    RingSpec right;
    std::vector<std::size_t> left_generators;
    std::vector<std::size_t> right_generators;

    /// Kunneth inclusions a -> a x 1 and b -> 1 x b.
    CycleClass include_left(const CycleClass& a) const { return include(a, left, left_generators); }
    CycleClass include_right(const CycleClass& b) const { return include(b, right, right_generators); }
    /// The exterior product a x b.
    CycleClass cross(const CycleClass& a, const CycleClass& b) const { return include_left(a) * include_right(b); }

private:
    CycleClass include(const CycleClass& c, const RingSpec& factor, const std::vector<std::size_t>& gens) const {
        if (!(c.ring() == factor)) throw MismatchError("class is not from this factor");
        std::vector<CycleClass> images;
        for (auto g : gens) images.push_back(CycleClass(ring, ring.generator_image(g)));
        return substitute(c, ring, images);
    }
};

/// Ch(A x B) for the presentations this library supports: products of
/// projective spaces concatenate (generators h1, h2, ...); otherwise the
/// presentations are juxtaposed, suffixing clashing names with _1 / _2.
inline ProductRing product_ring(const RingSpec& a, const RingSpec& b) {
    if (!(a.modulus() == b.modulus())) throw MismatchError("product of rings with different primes");
    const std::size_t ma = a.generators().size(), mb = b.generators().size();
    ProductRing out{a, a, b, {}, {}};
    for (std::size_t i = 0; i < ma; ++i) out.left_generators.push_back(i);
    for (std::size_t i = 0; i < mb; ++i) out.right_generators.push_back(ma + i);
    if (a.product_dims() && b.product_dims()) {
        std::vector<int> dims = *a.product_dims();
        dims.insert(dims.end(), b.product_dims()->begin(), b.product_dims()->end());
        out.ring = RingSpec::product_of_projective_spaces(dims, a.modulus());
        return out;
    }
    std::vector<Generator> gens;
    for (auto g : a.generators()) {
        if (b.generator_index(g.name)) g.name += "_1";
        gens.push_back(g);
    }
    for (auto g : b.generators()) {
        if (a.generator_index(g.name)) g.name += "_2";
        gens.push_back(g);
    }
    std::vector<RewriteRule> rules;
    auto extend = [&](const Exponents& e, bool left) {
        Exponents r(ma + mb, 0);
        for (std::size_t i = 0; i < e.size(); ++i) r[(left ? 0 : ma) + i] = e[i];
        return r;
    };
    for (const auto& r : a.rules()) {
        RewriteRule nr{extend(r.lhs, true), {}};
        for (const auto& [e, c] : r.rhs) nr.rhs.emplace_back(extend(e, true), c);
        rules.push_back(std::move(nr));
    }
    for (const auto& r : b.rules()) {
        RewriteRule nr{extend(r.lhs, false), {}};
        for (const auto& [e, c] : r.rhs) nr.rhs.emplace_back(extend(e, false), c);
        rules.push_back(std::move(nr));
    }
    // monomials of one factor beyond that factor's dimension vanish
    auto add_truncations = [&](const RingSpec& f, bool left) {
        std::vector<Generator> fg = f.generators();
        Exponents cur(fg.size(), 0);
        int maxc = 0;
        for (const auto& g : fg) maxc = std::max(maxc, g.codim);
        detail::enumerate_exponents(fg, f.dimension() + maxc, 0, cur, 0, [&](const Exponents& e, int codim) {
            if (codim <= f.dimension()) return;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                Exponents smaller = e;
                --smaller[i];
                if (f.codim_of(smaller) > f.dimension()) return;  // not minimal
            }
            Exponents ext = extend(e, left);
            for (const auto& r : rules)
                if (detail::divides(r.lhs, ext)) return;
            rules.push_back({ext, {}});
        });
    };
    add_truncations(a, true);
    add_truncations(b, false);
    out.ring = RingSpec(a.modulus(), a.dimension() + b.dimension(), std::move(gens), std::move(rules),
                        a.label() + "x" + b.label());
    return out;
}

inline RingSpec RingSpec::projective_bundle(const RingSpec& base, const std::vector<CycleClass>& chern,
                                            std::string generator) {
    const int r = static_cast<int>(chern.size());
    if (r < 1) throw DomainError("projective bundle needs a bundle of rank >= 1");
    for (int i = 0; i < r; ++i) {
        if (!(chern[i].ring() == base)) throw MismatchError("Chern class from another ring");
        if (!chern[i].is_homogeneous_of(i + 1))
            throw DomainError("c_" + std::to_string(i + 1) + " must be homogeneous of codimension " + std::to_string(i + 1));
    }
    if (generator.empty()) {
        generator = "z";
        for (int k = 2; base.generator_index(generator); ++k) generator = "z" + std::to_string(k);
    } else if (base.generator_index(generator)) {
        throw ValidationError("generator name '" + generator + "' already used by the base");
    }
    const std::size_t m = base.generators().size();
    const int dim = base.dimension() + r - 1;
    std::vector<Generator> gens = base.generators();
    gens.push_back({generator, 1, dim + 1});
    auto extend = [&](const Exponents& e, int z) {
        Exponents x(e);
        x.push_back(z);
        return x;
    };
    std::vector<RewriteRule> rules;
    for (const auto& rule : base.rules()) {
        RewriteRule nr{extend(rule.lhs, 0), {}};
        for (const auto& [e, c] : rule.rhs) nr.rhs.emplace_back(extend(e, 0), c);
        rules.push_back(std::move(nr));
    }
    // base monomials above the base dimension vanish
    {
        std::vector<Generator> bg = base.generators();
        Exponents cur(m, 0);
        int maxc = 0;
        for (const auto& g : bg) maxc = std::max(maxc, g.codim);
        detail::enumerate_exponents(bg, base.dimension() + maxc, 0, cur, 0, [&](const Exponents& e, int codim) {
            if (codim <= base.dimension() || codim > dim) return;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                Exponents smaller = e;
                --smaller[i];
                if (base.codim_of(smaller) > base.dimension()) return;
            }
            Exponents ext = extend(e, 0);
            for (const auto& rr : rules)
                if (detail::divides(rr.lhs, ext)) return;
            rules.push_back({ext, {}});
        });
    }
    if (r <= dim) {
        RewriteRule rel{extend(Exponents(m, 0), r), {}};
        for (int i = 1; i <= r; ++i)
            for (const auto& [e, c] : chern[i - 1].terms())
                rel.rhs.emplace_back(extend(e, r - i), -static_cast<std::int64_t>(c));
        rules.push_back(std::move(rel));
    }
    std::string label = "ProjBundle(" + base.label();
    for (const auto& c : chern) label += "," + c.to_string();
    label += ")";
    return RingSpec(base.modulus(), dim, std::move(gens), std::move(rules), label);
}

}  // namespace steencalc
