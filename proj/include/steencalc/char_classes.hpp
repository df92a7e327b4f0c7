#pragma once

// Characteristic classes by the splitting principle: Chern, Segre, the
// b-class prod(1 + x_i^{p-1}), the omega-class prod(1 - x_i^{p-1}) and the
// mu-class of a weighted filtration.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "steencalc/chow_ring.hpp"
#include "steencalc/equivariant.hpp"
#include "steencalc/errors.hpp"

namespace steencalc {

/// A bundle class V = V+ - V- with V+ and V- honest. Honest bundles have an
/// empty negative part.
class BundleClass {
public:
    /// Honest bundle of the given rank; the total Chern class must have
    /// constant term 1 and vanish above codimension `rank`.
    static BundleClass honest(std::int64_t rank, const CycleClass& total_chern) {
        if (rank < 0) throw DomainError("honest bundle of negative rank");
        if (!(total_chern.constant_term() == 1)) throw DomainError("total Chern class must have constant term 1");
        for (int k = static_cast<int>(rank) + 1; k <= total_chern.ring().dimension(); ++k)
            if (!total_chern.graded_component(k).is_zero())
                throw DomainError("Chern class of a rank " + std::to_string(rank) + " bundle is nonzero in codimension " +
                                  std::to_string(k));
        const RingSpec& r = total_chern.ring();
        return BundleClass(rank, total_chern, 0, CycleClass::one(r));
    }

    /// Rank-r class with formal Chern roots whose total class is arbitrary
    /// with constant term 1 (for example roots that are powers x_i^m).
    static BundleClass formal(std::int64_t rank, const CycleClass& total_chern) {
        if (rank < 0) throw DomainError("formal bundle of negative rank");
        if (!(total_chern.constant_term() == 1)) throw DomainError("total Chern class must have constant term 1");
        return BundleClass(rank, total_chern, 0, CycleClass::one(total_chern.ring()));
    }

    static BundleClass trivial(const RingSpec& r, std::int64_t rank) { return honest(rank, CycleClass::one(r)); }

    /// Line bundle with first Chern class c1 (homogeneous of codimension 1).
    static BundleClass line(const CycleClass& c1) {
        if (!c1.is_homogeneous_of(1)) throw DomainError("first Chern class must have codimension 1: " + c1.to_string());
        return honest(1, CycleClass::one(c1.ring()) + c1);
    }

    /// Direct sum of line bundles with the given first Chern classes.
    static BundleClass split(const RingSpec& r, const std::vector<CycleClass>& c1s) {
        BundleClass v = trivial(r, 0);
        for (const auto& c : c1s) v = v + line(c);
        return v;
    }

    const RingSpec& ring() const noexcept { return pos_chern_.ring(); }
    std::int64_t rank() const noexcept { return pos_rank_ - neg_rank_; }
    bool is_honest() const { return neg_rank_ == 0 && neg_chern_ == CycleClass::one(ring()); }

    CycleClass total_chern() const {
        return is_honest() ? pos_chern_ : pos_chern_ * invert_unit_series(neg_chern_);
    }
    CycleClass chern(int k) const { return total_chern().graded_component(k); }

    BundleClass positive_part() const { return BundleClass(pos_rank_, pos_chern_, 0, CycleClass::one(ring())); }
    BundleClass negative_part() const { return BundleClass(neg_rank_, neg_chern_, 0, CycleClass::one(ring())); }

    /// Whitney sum.
    friend BundleClass operator+(const BundleClass& v, const BundleClass& w) {
        if (!(v.ring() == w.ring())) throw MismatchError("bundles over different rings");
        return BundleClass(v.pos_rank_ + w.pos_rank_, v.pos_chern_ * w.pos_chern_, v.neg_rank_ + w.neg_rank_,
                           v.neg_chern_ * w.neg_chern_);
    }
    BundleClass operator-() const { return BundleClass(neg_rank_, neg_chern_, pos_rank_, pos_chern_); }
    friend BundleClass operator-(const BundleClass& v, const BundleClass& w) { return v + (-w); }

private:
    BundleClass(std::int64_t pr, CycleClass pc, std::int64_t nr, CycleClass nc)
        : pos_rank_(pr), pos_chern_(std::move(pc)), neg_rank_(nr), neg_chern_(std::move(nc)) {}

    std::int64_t pos_rank_;
    CycleClass pos_chern_;
    std::int64_t neg_rank_;
    CycleClass neg_chern_;
};

inline BundleClass whitney_sum(const BundleClass& v, const BundleClass& w) { return v + w; }

inline CycleClass segre_total(const BundleClass& v) { return invert_unit_series(v.total_chern()); }

namespace detail {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using SymPoly = std::map<Exponents, cpp_rational>;  // polynomial in e_1..e_r, e_i of weight i

inline int sym_weight(const Exponents& e) {
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i) w += static_cast<int>(i + 1) * e[i];
    return w;
}

inline void sym_add(SymPoly& acc, const SymPoly& a, const cpp_rational& scale) {
    for (const auto& [e, c] : a) {
        auto& slot = acc[e];
        slot += scale * c;
        if (slot == 0) acc.erase(e);
    }
}

inline SymPoly sym_mul(const SymPoly& a, const SymPoly& b, int max_weight) {
    SymPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            if (sym_weight(e) > max_weight) continue;
            auto& slot = r[e];
            slot += ca * cb;
            if (slot == 0) r.erase(e);
        }
    return r;
}

/// Integer polynomials expressing e_k(x_1^m, ..., x_r^m) in e_1(x), ..., e_r(x),
/// truncated at weight max_weight; index k-1 holds e_k. Computed through
/// Newton's identities over Q and checked to be integral. Cached.
inline std::shared_ptr<const std::vector<std::map<Exponents, cpp_int>>> root_power_polynomials(int r, int m,
                                                                                                int max_weight) {
    using Key = std::tuple<int, int, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const std::vector<std::map<Exponents, cpp_int>>>> cache;
    const Key key{r, m, max_weight};
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    const std::size_t rs = static_cast<std::size_t>(r);
    auto e_var = [&](int i) {
        Exponents e(rs, 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        return SymPoly{{e, 1}};
    };
    // power sums p_j in the e_i
    std::vector<SymPoly> ps(static_cast<std::size_t>(max_weight) + 1);
    for (int j = 1; j <= max_weight; ++j) {
        SymPoly pj;
        for (int i = 1; i <= std::min(j - 1, r); ++i)
            sym_add(pj, sym_mul(e_var(i), ps[static_cast<std::size_t>(j - i)], max_weight), i % 2 ? 1 : -1);
        if (j <= r) sym_add(pj, e_var(j), cpp_rational(j % 2 ? j : -j));
        ps[static_cast<std::size_t>(j)] = std::move(pj);
    }
    // elementary symmetric functions of the m-th powers: k e'_k = sum (-1)^{i-1} e'_{k-i} p_{im}
    const int kmax = std::min(r, max_weight / m);
    std::vector<SymPoly> ep(static_cast<std::size_t>(kmax) + 1);
    ep[0] = SymPoly{{Exponents(rs, 0), 1}};
    for (int k = 1; k <= kmax; ++k) {
        SymPoly acc;
        for (int i = 1; i <= k; ++i)
            sym_add(acc, sym_mul(ep[static_cast<std::size_t>(k - i)], ps[static_cast<std::size_t>(i * m)], max_weight),
                    cpp_rational(i % 2 ? 1 : -1, k));
        ep[static_cast<std::size_t>(k)] = std::move(acc);
    }
    auto out = std::make_shared<std::vector<std::map<Exponents, cpp_int>>>();
    for (int k = 1; k <= kmax; ++k) {
        std::map<Exponents, cpp_int> integral;
        for (const auto& [e, c] : ep[static_cast<std::size_t>(k)]) {
            if (denominator(c) != 1) internal_failure("Newton transform produced a non-integral coefficient");
            integral[e] = numerator(c);
        }
        out->push_back(std::move(integral));
    }
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}

/// The classes e_k(x_i^m), k = 0..rank, for an honest bundle (index 0 is 1).
inline std::vector<CycleClass> root_power_elementary(const BundleClass& v, int m) {
    const RingSpec& ring = v.ring();
    const int d = ring.dimension();
    const int r = static_cast<int>(std::min<std::int64_t>(v.rank(), d));
    std::vector<CycleClass> out{CycleClass::one(ring)};
    if (r == 0) return out;
    std::vector<CycleClass> e;
    for (int i = 1; i <= r; ++i) e.push_back(v.chern(i));
    const auto polys = root_power_polynomials(r, m, d);
    const auto p = static_cast<int>(ring.modulus().value());
    for (const auto& poly : *polys) {
        CycleClass acc = CycleClass::zero(ring);
        for (const auto& [ex, c] : poly) {
            cpp_int cm = c % p;
            if (cm < 0) cm += p;
            if (cm == 0) continue;
            CycleClass t = CycleClass::constant(ring, static_cast<std::int64_t>(cm));
            for (std::size_t i = 0; i < ex.size(); ++i)
                if (ex[i]) t = t * e[i].pow(static_cast<std::uint64_t>(ex[i]));
            acc += t;
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace detail

/// The honest bundle class whose Chern roots are the m-th powers of those of v.
inline BundleClass root_power_transform(const BundleClass& v, int m) {
    if (!v.is_honest()) throw UnsupportedError("root power transform of a virtual bundle");
    if (m < 1) throw DomainError("root power exponent must be positive");
    if (m == 1) return v;
    CycleClass c = CycleClass::zero(v.ring());
    for (const auto& ek : detail::root_power_elementary(v, m)) c += ek;
    return BundleClass::formal(v.rank(), c);
}

namespace detail {
inline CycleClass signed_root_power_total(const BundleClass& v, bool alternate) {
    const int m = static_cast<int>(v.ring().modulus().value()) - 1;
    const auto ek = root_power_elementary(v, m);
    CycleClass c = CycleClass::zero(v.ring());
    for (std::size_t k = 0; k < ek.size(); ++k) c += (alternate && k % 2) ? -ek[k] : ek[k];
    return c;
}
}  // namespace detail

/// b(V) = prod(1 + x_i^{p-1}); b(V+ - V-) = b(V+) b(V-)^{-1}.
inline CycleClass b_class(const BundleClass& v) {
    CycleClass pos = detail::signed_root_power_total(v.positive_part(), false);
    if (v.is_honest()) return pos;
    return pos * invert_unit_series(detail::signed_root_power_total(v.negative_part(), false));
}

/// omega(V) = prod(1 - x_i^{p-1}), extended to virtual bundles multiplicatively.
inline CycleClass omega_class(const BundleClass& v) {
    CycleClass pos = detail::signed_root_power_total(v.positive_part(), true);
    if (v.is_honest()) return pos;
    return pos * invert_unit_series(detail::signed_root_power_total(v.negative_part(), true));
}

/// Quotient of a filtration: a line with first Chern class c1 on which the
/// group acts with the given weight.
struct WeightedLine {
    CycleClass c1;
    std::uint32_t weight;
};

/// An equivariant bundle given by the successive quotients of a filtration.
class FilteredGBundle {
public:
    explicit FilteredGBundle(RingSpec ring) : ring_(std::move(ring)) {}
    FilteredGBundle(RingSpec ring, const std::vector<std::pair<CycleClass, std::int64_t>>& quotients)
        : ring_(std::move(ring)) {
        for (const auto& [c, w] : quotients) add(c, w);
    }

    void add(const CycleClass& c1, std::int64_t weight) {
        if (!(c1.ring() == ring_)) throw MismatchError("filtration quotient from another ring");
        if (!c1.is_homogeneous_of(1)) throw DomainError("quotient first Chern class must have codimension 1");
        q_.push_back({c1, ring_.modulus().reduce(weight)});
    }

    const RingSpec& ring() const noexcept { return ring_; }
    const std::vector<WeightedLine>& quotients() const noexcept { return q_; }
    std::size_t rank() const noexcept { return q_.size(); }

private:
    RingSpec ring_;
    std::vector<WeightedLine> q_;
};

/// mu(M) = prod(r_i + c1(L_i)).
inline CycleClass mu_class(const FilteredGBundle& m) {
    CycleClass acc = CycleClass::one(m.ring());
    for (const auto& q : m.quotients()) acc = acc * (CycleClass::constant(m.ring(), q.weight) + q.c1);
    return acc;
}

/// V (x) (H_1 + ... + H_{p-1}) for a split V with the H_j trivial of weight j:
/// quotients (c1(M_i), j).
inline FilteredGBundle tensor_H_filtration(const RingSpec& ring, const std::vector<CycleClass>& lines) {
    FilteredGBundle f(ring);
    const auto p = static_cast<std::int64_t>(ring.modulus().value());
    for (const auto& c : lines)
        for (std::int64_t j = 1; j < p; ++j) f.add(c, j);
    return f;
}

/// mu(V)^{-1} applied to epsilon(sigma).
inline CycleClass rho_on_split_bundle(const FilteredGBundle& v, const EquivariantClass& sigma) {
    if (!(v.ring() == sigma.ring())) throw MismatchError("bundle and class over different rings");
    for (const auto& q : v.quotients())
        if (q.weight == 0) throw DomainError("mu-class is singular: a filtration quotient has weight 0");
    const CycleClass mu = mu_class(v);
    const FpElement c0 = mu.constant_term();
    const CycleClass mu_inv = c0.inverse() * invert_unit_series(c0.inverse() * mu);
    return mu_inv * epsilon(sigma);
}

}  // namespace steencalc
