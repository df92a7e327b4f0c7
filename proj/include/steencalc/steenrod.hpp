#pragma once

// Steenrod operations on explicit Chow rings.
//
// S_X (cohomological) is the ring homomorphism determined by its values on
// the generators (the seeds); S^X = b(-T_X) S_X (homological). Independently
// of the seeds, the value of S^X on a linear subvariety of a product of
// projective spaces can be computed from the equivariant class of the normal
// cone of Z in Z^p, inside (T_X (x) H); both routes are provided so that
// they can be compared.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "steencalc/char_classes.hpp"
#include "steencalc/chow_ring.hpp"
#include "steencalc/equivariant.hpp"
#include "steencalc/errors.hpp"

namespace steencalc {

/// g (1 + g^{p-1}): the value of S_X on the class of a smooth divisor whose
/// normal bundle has first Chern class g.
inline CycleClass wu_seed(const CycleClass& g) {
    if (!g.is_homogeneous_of(1)) throw DomainError("Wu seed needs a codimension-1 class, got " + g.to_string());
    const auto p = g.modulus().value();
    return g * (CycleClass::one(g.ring()) + g.pow(p - 1));
}

namespace detail {

/// Checks that generator images define a ring homomorphism src -> tgt:
/// nilpotency bounds and rewrite rules must be respected.
inline void check_ring_hom(const RingSpec& src, const std::vector<CycleClass>& images, bool graded,
                           const std::string& what) {
    const auto& gens = src.generators();
    if (images.size() != gens.size()) throw ValidationError(what + ": need one image per generator");
    for (std::size_t g = 0; g < gens.size(); ++g) {
        if (graded && !images[g].is_homogeneous_of(gens[g].codim))
            throw ValidationError(what + ": image of '" + gens[g].name + "' is not of codimension " +
                                  std::to_string(gens[g].codim));
        if (!images[g].pow(static_cast<std::uint64_t>(gens[g].nilpotency)).is_zero())
            throw ValidationError(what + ": image of '" + gens[g].name + "' violates " + gens[g].name + "^" +
                                  std::to_string(gens[g].nilpotency) + " = 0");
    }
    const RingSpec& tgt = images.front().ring();
    auto eval = [&](const Exponents& e) {
        CycleClass t = CycleClass::one(tgt);
        for (std::size_t g = 0; g < e.size(); ++g)
            if (e[g]) t = t * images[g].pow(static_cast<std::uint64_t>(e[g]));
        return t;
    };
    for (const auto& rule : src.rules()) {
        CycleClass rhs = CycleClass::zero(tgt);
        for (const auto& [e, c] : rule.rhs) rhs += c * eval(e);
        if (!(eval(rule.lhs) == rhs))
            throw ValidationError(what + ": relation " + src.monomial_string(rule.lhs) + " is not preserved");
    }
    // monomials above the source dimension vanish in the source
    for (std::size_t i = 0; i < src.basis_size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Exponents e = src.basis()[i];
            ++e[g];
            if (src.codim_of(e) > src.dimension() && !eval(e).is_zero())
                throw ValidationError(what + ": image of " + src.monomial_string(e) + " must vanish");
        }
}

}  // namespace detail

/// A smooth variety presented by its Chow ring, total tangent Chern class
/// and the values S_X(g) on the ring generators.
class VarietySpec {
public:
    VarietySpec(RingSpec ring, CycleClass tangent_chern, const std::map<std::string, CycleClass>& seeds,
                std::string name = {})
        : ring_(std::move(ring)), tangent_(std::move(tangent_chern)), name_(std::move(name)) {
        if (name_.empty()) name_ = ring_.label();
        if (!(tangent_.ring() == ring_)) throw MismatchError("tangent Chern class from another ring");
        if (!(tangent_.constant_term() == 1)) throw ValidationError("tangent Chern class must have constant term 1");
        const int step = static_cast<int>(ring_.modulus().value()) - 1;
        for (const auto& g : ring_.generators()) {
            auto it = seeds.find(g.name);
            if (it == seeds.end()) throw ValidationError("no Steenrod seed for generator '" + g.name + "'");
            const CycleClass& s = it->second;
            if (!(s.ring() == ring_)) throw MismatchError("seed from another ring");
            const CycleClass gc = CycleClass::generator(ring_, g.name);
            if (!(s.graded_component(g.codim) == gc))
                throw ValidationError("seed of '" + g.name + "' must restrict to " + g.name + " in codimension " +
                                      std::to_string(g.codim));
            for (int c = 0; c <= ring_.dimension(); ++c)
                if ((c < g.codim || (c - g.codim) % step != 0) && !s.graded_component(c).is_zero())
                    throw ValidationError("seed of '" + g.name + "' has a term in codimension " + std::to_string(c));
            seeds_.push_back(s);
        }
        for (const auto& [name, s] : seeds)
            if (!ring_.generator_index(name)) throw ValidationError("seed for unknown generator '" + name + "'");
        detail::check_ring_hom(ring_, seeds_, false, "Steenrod seeds");
    }

    /// Wu seeds on every generator (all must have codimension 1).
    static VarietySpec with_wu_seeds(const RingSpec& ring, const CycleClass& tangent_chern, std::string name = {}) {
        std::map<std::string, CycleClass> seeds;
        for (const auto& g : ring.generators()) {
            if (g.codim != 1) throw UnsupportedError("generator '" + g.name + "' is not a divisor class; supply its seed");
            seeds.emplace(g.name, wu_seed(CycleClass::generator(ring, g.name)));
        }
        return VarietySpec(ring, tangent_chern, seeds, std::move(name));
    }

    /// P^{n_1} x ... x P^{n_m} with c(T) = prod (1 + h_k)^{n_k + 1} and Wu seeds.
    static VarietySpec product_of_projective_spaces(const std::vector<int>& dims, PrimeModulus p) {
        const RingSpec r = RingSpec::product_of_projective_spaces(dims, p);
        CycleClass t = CycleClass::one(r);
        for (std::size_t k = 0; k < dims.size(); ++k)
            t = t * (CycleClass::one(r) + CycleClass(r, r.generator_image(k))).pow(static_cast<std::uint64_t>(dims[k] + 1));
        return with_wu_seeds(r, t);
    }
    static VarietySpec projective_space(int n, PrimeModulus p) { return product_of_projective_spaces({n}, p); }

    const RingSpec& ring() const noexcept { return ring_; }
    const std::string& name() const noexcept { return name_; }
    int dimension() const noexcept { return ring_.dimension(); }
    PrimeModulus modulus() const noexcept { return ring_.modulus(); }
    const CycleClass& tangent_chern() const noexcept { return tangent_; }
    BundleClass tangent_bundle() const { return BundleClass::honest(dimension(), tangent_); }
    /// Seeds in generator order.
    const std::vector<CycleClass>& seed_images() const noexcept { return seeds_; }
    const CycleClass& seed(std::string_view generator) const {
        auto g = ring_.generator_index(generator);
        if (!g) throw InputError("unknown generator '" + std::string(generator) + "'");
        return seeds_[*g];
    }
    /// The fundamental class [X] = 1.
    CycleClass fundamental_class() const { return CycleClass::one(ring_); }

private:
    RingSpec ring_;
    CycleClass tangent_;
    std::vector<CycleClass> seeds_;
    std::string name_;
};

namespace detail {
inline void check_in(const VarietySpec& x, const CycleClass& c) {
    if (!(c.ring() == x.ring())) throw MismatchError("class does not belong to " + x.name());
}
inline int homogeneous_codim_or_throw(const CycleClass& c) {
    if (c.is_zero()) return 0;
    auto k = c.homogeneous_codim();
    if (!k) throw DomainError("class must be homogeneous: " + c.to_string());
    return *k;
}
}  // namespace detail

/// Total cohomological operation S_X.
inline CycleClass steenrod_coh_total(const VarietySpec& x, const CycleClass& c) {
    detail::check_in(x, c);
    return substitute(c, x.ring(), x.seed_images());
}

/// S^k_X: Ch^n -> Ch^{n + k(p-1)} on a homogeneous class of codimension n.
inline CycleClass steenrod_coh_k(const VarietySpec& x, const CycleClass& c, int k) {
    const int n = detail::homogeneous_codim_or_throw(c);
    const int step = static_cast<int>(x.modulus().value()) - 1;
    return steenrod_coh_total(x, c).graded_component(n + k * step);
}

/// Total homological operation S^X = b(-T_X) S_X.
inline CycleClass steenrod_hom_total(const VarietySpec& x, const CycleClass& c) {
    return b_class(-x.tangent_bundle()) * steenrod_coh_total(x, c);
}

/// S^X_k: lowers dimension by k(p-1).
inline CycleClass steenrod_hom_k(const VarietySpec& x, const CycleClass& c, int k) {
    const int n = detail::homogeneous_codim_or_throw(c);
    const int step = static_cast<int>(x.modulus().value()) - 1;
    return steenrod_hom_total(x, c).graded_component(n + k * step);
}

/// X x Y with tangent class c(T_X) x c(T_Y) and seeds included from each factor.
struct ProductVariety {
    VarietySpec variety;
    ProductRing rings;
};

inline ProductVariety product_variety(const VarietySpec& x, const VarietySpec& y) {
    ProductRing pr = product_ring(x.ring(), y.ring());
    std::map<std::string, CycleClass> seeds;
    for (std::size_t g = 0; g < x.ring().generators().size(); ++g)
        seeds.emplace(pr.ring.generators()[pr.left_generators[g]].name, pr.include_left(x.seed_images()[g]));
    for (std::size_t g = 0; g < y.ring().generators().size(); ++g)
        seeds.emplace(pr.ring.generators()[pr.right_generators[g]].name, pr.include_right(y.seed_images()[g]));
    VarietySpec v(pr.ring, pr.cross(x.tangent_chern(), y.tangent_chern()), seeds, x.name() + "x" + y.name());
    return {std::move(v), std::move(pr)};
}

/// The exterior product gamma x delta in Ch(X x Y).
inline CycleClass external_product(const VarietySpec& x, const VarietySpec& y, const CycleClass& gamma,
                                   const CycleClass& delta) {
    detail::check_in(x, gamma);
    detail::check_in(y, delta);
    return product_ring(x.ring(), y.ring()).cross(gamma, delta);
}

enum class MorphismKind { LinearEmbedding, Projection, General };

/// f: source -> target given by f^* on the generators of Ch(target).
class MorphismSpec {
public:
    MorphismSpec(VarietySpec source, VarietySpec target, std::vector<CycleClass> images,
                 MorphismKind kind = MorphismKind::General)
        : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)), kind_(kind) {
        for (const auto& im : images_)
            if (!(im.ring() == source_.ring())) throw MismatchError("pullback image outside the source ring");
        detail::check_ring_hom(target_.ring(), images_, true, "pullback");
    }

    /// Linear P^m -> P^n (m <= n): h -> h.
    static MorphismSpec linear_embedding(int m, int n, PrimeModulus p) {
        if (m < 0 || m > n) throw DomainError("linear embedding needs 0 <= m <= n");
        auto src = VarietySpec::projective_space(m, p);
        auto tgt = VarietySpec::projective_space(n, p);
        auto h = CycleClass::generator(src.ring(), "h");
        return MorphismSpec(src, tgt, {h}, MorphismKind::LinearEmbedding);
    }

    /// Projection P^r x X -> X.
    static MorphismSpec projection(int r, const VarietySpec& x) {
        auto pv = product_variety(VarietySpec::projective_space(r, x.modulus()), x);
        std::vector<CycleClass> images;
        for (std::size_t g = 0; g < x.ring().generators().size(); ++g)
            images.push_back(CycleClass(pv.rings.ring, pv.rings.ring.generator_image(pv.rings.right_generators[g])));
        return MorphismSpec(pv.variety, x, std::move(images), MorphismKind::Projection);
    }

    const VarietySpec& source() const noexcept { return source_; }
    const VarietySpec& target() const noexcept { return target_; }
    const std::vector<CycleClass>& images() const noexcept { return images_; }
    MorphismKind kind() const noexcept { return kind_; }

private:
    VarietySpec source_, target_;
    std::vector<CycleClass> images_;
    MorphismKind kind_;
};

inline CycleClass pullback(const MorphismSpec& f, const CycleClass& c) {
    detail::check_in(f.target(), c);
    return substitute(c, f.source().ring(), f.images());
}

/// q_* for q: P^r x X -> X: the coefficient of h^r on the first factor.
inline CycleClass pushforward_projection(int r, const VarietySpec& x, const CycleClass& c) {
    const ProductRing pr = product_ring(RingSpec::projective_space(r, x.modulus()), x.ring());
    if (!(c.ring() == pr.ring)) throw UnsupportedError("pushforward_projection needs a class on P^r x " + x.name());
    CycleClass out = CycleClass::zero(x.ring());
    for (const auto& [e, coef] : c.terms()) {
        if (e[0] != r) continue;
        Exponents rest(x.ring().generators().size());
        for (std::size_t g = 0; g < rest.size(); ++g) rest[g] = e[pr.right_generators[g]];
        out += CycleClass::monomial(x.ring(), rest, coef);
    }
    return out;
}

/// c^G of a filtered bundle: prod (1 + c1(L_i) + r_i l).
inline EquivariantClass equivariant_chern(const FilteredGBundle& m) {
    const RingSpec& r = m.ring();
    EquivariantClass acc = EquivariantClass::one(r);
    for (const auto& q : m.quotients())
        acc = acc * (EquivariantClass::one(r) + EquivariantClass::from_base(q.c1) +
                     EquivariantClass(r, {CycleClass::zero(r), CycleClass::constant(r, q.weight)}));
    return acc;
}

/// A closed embedding i: Z -> X given by its pushforward on Chow rings.
struct ClosedEmbedding {
    RingSpec sub;
    RingSpec ambient;
    int codim;
    std::function<CycleClass(const CycleClass&)> push;
};

/// Z = P^{m_1} x ... x P^{m_k} embedded linearly in the product of projective
/// spaces `ambient`: i_* multiplies monomials by prod h_j^{n_j - m_j}.
inline ClosedEmbedding linear_subvariety(const RingSpec& ambient, const std::vector<int>& sub_dims) {
    const auto& dims = ambient.product_dims();
    if (!dims) throw UnsupportedError("linear subvarieties need a product of projective spaces");
    if (sub_dims.size() != dims->size()) throw DomainError("subvariety needs one dimension per factor");
    int codim = 0;
    Exponents shift(dims->size());
    for (std::size_t k = 0; k < dims->size(); ++k) {
        if (sub_dims[k] < 0 || sub_dims[k] > (*dims)[k]) throw DomainError("linear subspace dimension out of range");
        shift[k] = (*dims)[k] - sub_dims[k];
        codim += shift[k];
    }
    RingSpec sub = RingSpec::product_of_projective_spaces(sub_dims, ambient.modulus());
    auto push = [sub, ambient, shift](const CycleClass& c) {
        if (!(c.ring() == sub)) throw MismatchError("pushforward of a class from another ring");
        CycleClass out = CycleClass::zero(ambient);
        for (const auto& [e, coef] : c.terms()) {
            Exponents t(e.size());
            for (std::size_t k = 0; k < e.size(); ++k) t[k] = e[k] + shift[k];
            out += CycleClass::monomial(ambient, t, coef);
        }
        return out;
    };
    return {sub, ambient, codim, push};
}

/// The class in Ch^G(X) of a subcone C (over Z) of the bundle E (over X), both
/// split with weights: the codimension (dim X + rk E) - (dim Z + rk C) part of
/// c^G(E) i_* s^G(C), with s^G(C) = c^G(C)^{-1}.
inline EquivariantClass subcone_class(const FilteredGBundle& e, const FilteredGBundle& c, const ClosedEmbedding& i) {
    if (!(e.ring() == i.ambient) || !(c.ring() == i.sub)) throw MismatchError("subcone data over the wrong rings");
    const int target = (i.ambient.dimension() + static_cast<int>(e.rank())) -
                       (i.sub.dimension() + static_cast<int>(c.rank()));
    if (target < 0) throw DomainError("subcone has larger dimension than the bundle");
    const EquivariantClass s = invert_unit_series(equivariant_chern(c), target);
    std::vector<CycleClass> pushed;
    for (int k = 0; k <= s.l_degree(); ++k) pushed.push_back(i.push(s.coefficient(k)));
    return (equivariant_chern(e) * EquivariantClass(i.ambient, std::move(pushed))).graded_component(target);
}

/// True iff every coefficient a_i of l^i with (p-1) not dividing i vanishes.
inline bool brolemma_check(const EquivariantClass& s) {
    const int step = static_cast<int>(s.ring().modulus().value()) - 1;
    for (int i = 0; i <= s.l_degree(); ++i)
        if (i % step != 0 && !s.coefficient(i).is_zero()) return false;
    return true;
}

/// Both routes to S^X([Z]) for a linear Z inside a product of projective spaces.
struct CorcalcReport {
    EquivariantClass subcone;   // C^G_E
    bool brolemma = false;      // subcone passes brolemma_check
    CycleClass c_tilde;         // sign-decorated epsilon(C^G_E)
    CycleClass corcalc;         // b(-T_X) c_tilde
    CycleClass seed_based;      // S^X([Z]) from the seeds
    CycleClass rost_route;      // from mu(E)^{-1} epsilon(C^G_E)
    bool rost_off_lattice_zero = false;

    bool consistent() const { return brolemma && rost_off_lattice_zero && corcalc == seed_based && rost_route == seed_based; }
};

namespace detail {
/// Chern roots of T_X + O^f on a product of f projective spaces: n_k + 1 copies of h_k.
inline std::vector<CycleClass> stable_tangent_roots(const RingSpec& r) {
    std::vector<CycleClass> roots;
    const auto& dims = *r.product_dims();
    for (std::size_t k = 0; k < dims.size(); ++k)
        for (int j = 0; j <= dims[k]; ++j) roots.push_back(CycleClass(r, r.generator_image(k)));
    return roots;
}
}  // namespace detail

/// Evaluates S^X([Z]) through the subcone class of the normal cone of Z in Z^p
/// inside E = T_X (x) H, for Z = prod P^{m_k} linear in X = prod P^{n_k}, and
/// compares with the seed-based operation on X.
inline CorcalcReport corcalc_eval(const VarietySpec& x, const std::vector<int>& sub_dims) {
    const auto& dims = x.ring().product_dims();
    if (!dims) throw UnsupportedError("subcone evaluation needs a product of projective spaces");
    const ClosedEmbedding i = linear_subvariety(x.ring(), sub_dims);
    const int p = static_cast<int>(x.modulus().value());
    const int step = p - 1;
    const int e = x.dimension();
    const int n = i.sub.dimension();
    const int f = static_cast<int>(dims->size());

    // The trivial summands O^f (x) H contribute c^G(O (x) H)^f, pulled back from
    // a point; they cancel between c^G(E) and i_* s^G(C).
    const FilteredGBundle big_e = tensor_H_filtration(x.ring(), detail::stable_tangent_roots(x.ring()));
    const FilteredGBundle big_c = tensor_H_filtration(i.sub, detail::stable_tangent_roots(i.sub));
    CorcalcReport rep{subcone_class(big_e, big_c, i), false, CycleClass(x.ring()), CycleClass(x.ring()),
                      CycleClass(x.ring()), CycleClass(x.ring()), false};
    rep.brolemma = brolemma_check(rep.subcone);

    // gamma_i = a_{(e-n-i)(p-1)}, signed by (-1)^{e+n+i}
    for (int j = 0; j <= rep.subcone.l_degree(); j += step) {
        const int idx = e - n - j / step;
        const std::int64_t sign = ((e + n + idx) % 2 + 2) % 2 ? -1 : 1;
        rep.c_tilde += sign * rep.subcone.coefficient(j);
    }
    rep.corcalc = b_class(-BundleClass::honest(e, x.tangent_chern())) * rep.c_tilde;

    Exponents z(dims->size());
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = (*dims)[k] - sub_dims[k];
    rep.seed_based = steenrod_hom_total(x, CycleClass::monomial(x.ring(), z));

    // mu(T (x) H)^{-1} = mu((T + O^f) (x) H)^{-1} mu(O^f (x) H), and mu(O (x) H) = (p-1)! = -1
    const CycleClass r = (f % 2 ? -1 : 1) * rho_on_split_bundle(big_e, rep.subcone);
    rep.rost_off_lattice_zero = true;
    for (int c = 0; c <= e; ++c) {
        const int shifted = c - (e - n);
        const CycleClass comp = r.graded_component(c);
        if (shifted % step != 0) {
            if (!comp.is_zero()) rep.rost_off_lattice_zero = false;
            continue;
        }
        const int k = shifted / step;
        rep.rost_route += (((n + k) % 2 + 2) % 2 ? -1 : 1) * comp;
    }
    return rep;
}

/// Z = X.
inline CorcalcReport corcalc_eval(const VarietySpec& x) {
    const auto& dims = x.ring().product_dims();
    if (!dims) throw UnsupportedError("subcone evaluation needs a product of projective spaces");
    return corcalc_eval(x, *dims);
}

/// (1 + h^{p-1})^{-r-1} on P^r, i.e. S^{P^r}([P^r]).
inline CycleClass prx_series(int r, PrimeModulus p) {
    const auto Pr = RingSpec::projective_space(r, p);
    const auto h = CycleClass::generator(Pr, "h");
    return invert_unit_series((CycleClass::one(Pr) + h.pow(p.value() - 1)).pow(static_cast<std::uint64_t>(r + 1)));
}

}  // namespace steencalc
