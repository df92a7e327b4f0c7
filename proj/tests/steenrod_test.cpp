#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <random>

#include "steencalc/arith/prime.hpp"
#include "steencalc/steenrod.hpp"

using namespace steencalc;
using boost::multiprecision::cpp_int;

namespace {

const PrimeModulus p2{2}, p3{3}, p5{5};

CycleClass gen(const RingSpec& r, const char* n = "h") { return CycleClass::generator(r, n); }

std::uint32_t exact_binom_mod(int n, int k, std::uint32_t p) {
    if (k < 0 || k > n) return 0;
    cpp_int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return static_cast<std::uint32_t>(cpp_int(num / den % p));
}

// Classical total reduced power on P^n: P^i(h^j) = C(j, i) h^{j + i(p-1)}.
CycleClass classical_total(const RingSpec& Pn, int j) {
    const auto p = Pn.modulus().value();
    CycleClass out = CycleClass::zero(Pn);
    for (int i = 0; i <= j; ++i)
        out += static_cast<std::int64_t>(exact_binom_mod(j, i, p)) *
               gen(Pn).pow(static_cast<std::uint64_t>(j + i * static_cast<int>(p - 1)));
    return out;
}

// Oracle for the subcone sum with explicit graded loops: Segre components by
// the recurrence s_k = -sum_{i>=1} c_i s_{k-i} and the shifted index
// j + k = rank E, Segre degree k - rank C.
EquivariantClass subcone_oracle(const FilteredGBundle& e, const FilteredGBundle& c, const ClosedEmbedding& i) {
    const int rank_e = static_cast<int>(e.rank()), rank_c = static_cast<int>(c.rank());
    const int top = i.ambient.dimension() + rank_e;
    const EquivariantClass ce = equivariant_chern(e), cc = equivariant_chern(c);
    std::vector<EquivariantClass> s{EquivariantClass::one(i.sub)};
    for (int k = 1; k <= top; ++k) {
        EquivariantClass acc(i.sub);
        for (int t = 1; t <= k; ++t) acc = acc - cc.graded_component(t) * s[static_cast<std::size_t>(k - t)];
        s.push_back(acc);
    }
    EquivariantClass out(i.ambient);
    for (int j = 0; j <= rank_e; ++j) {
        const int seg = (rank_e - j) - rank_c;
        if (seg < 0 || seg > top) continue;
        const auto& sk = s[static_cast<std::size_t>(seg)];
        std::vector<CycleClass> pushed;
        for (int q = 0; q <= sk.l_degree(); ++q) pushed.push_back(i.push(sk.coefficient(q)));
        out = out + ce.graded_component(j) * EquivariantClass(i.ambient, pushed);
    }
    return out;
}

}  // namespace

TEST(WuSeed, Examples) {
    for (auto p : {p2, p3, p5}) {
        const auto P6 = RingSpec::projective_space(6, p);
        EXPECT_EQ(wu_seed(gen(P6)), gen(P6) + gen(P6).pow(p.value()));
    }
    const auto P2 = RingSpec::projective_space(2, p2);
    EXPECT_EQ(wu_seed(gen(P2)).to_string(), "h+h^2");
    const auto P1 = RingSpec::projective_space(1, p3);
    EXPECT_EQ(wu_seed(gen(P1)), gen(P1));
    EXPECT_THROW(wu_seed(gen(P2).pow(2)), DomainError);
}

TEST(VarietySpec, RejectsBadSeeds) {
    const auto P3 = RingSpec::projective_space(3, p3);
    const auto t = (CycleClass::one(P3) + gen(P3)).pow(4);
    EXPECT_THROW(VarietySpec(P3, t, {}), ValidationError);
    EXPECT_THROW(VarietySpec(P3, t, {{"h", 2 * gen(P3)}}), ValidationError);
    EXPECT_THROW(VarietySpec(P3, t, {{"h", gen(P3) + gen(P3).pow(2)}}), ValidationError);  // wrong shift for p = 3
    EXPECT_NO_THROW(VarietySpec(P3, t, {{"h", gen(P3) + 2 * gen(P3).pow(3)}}));
    EXPECT_THROW(VarietySpec(P3, t, {{"h", gen(P3)}, {"q", gen(P3)}}), ValidationError);
}

TEST(SteenrodCoh, Examples) {
    const auto X = VarietySpec::projective_space(2, p2);
    EXPECT_EQ(steenrod_coh_total(X, X.fundamental_class()), X.fundamental_class());
    EXPECT_EQ(steenrod_coh_total(X, gen(X.ring()).pow(2)), gen(X.ring()).pow(2));
    for (auto p : {p2, p3, p5})
        for (int n = 0; n <= 6; ++n) {
            const auto Y = VarietySpec::projective_space(n, p);
            const auto h = gen(Y.ring());
            for (int j = 0; j <= n; ++j) {
                const auto s = steenrod_coh_total(Y, h.pow(static_cast<std::uint64_t>(j)));
                EXPECT_EQ(s, h.pow(static_cast<std::uint64_t>(j)) *
                                 (CycleClass::one(Y.ring()) + h.pow(p.value() - 1)).pow(static_cast<std::uint64_t>(j)));
                EXPECT_EQ(s, classical_total(Y.ring(), j));
            }
        }
}

TEST(SteenrodCoh, PthPowerProperty) {
    std::mt19937_64 rng(41);
    for (auto p : {p2, p3, p5}) {
        const auto X = VarietySpec::product_of_projective_spaces({2, 3}, p);
        const auto& r = X.ring();
        for (int t = 0; t < 50; ++t) {
            const int k = static_cast<int>(rng() % 6);
            CycleClass d = CycleClass::zero(r);
            for (std::size_t i = 0; i < r.basis_size(); ++i)
                if (r.basis_codim(i) == k) d += CycleClass::monomial(r, r.basis()[i], static_cast<std::int64_t>(rng() % p.value()));
            EXPECT_EQ(steenrod_coh_k(X, d, 0), d);
            EXPECT_EQ(steenrod_coh_k(X, d, k), d.pow(p.value()));
            EXPECT_TRUE(steenrod_coh_k(X, d, -1).is_zero());
            EXPECT_TRUE(steenrod_coh_k(X, d, k + 1).is_zero());
        }
    }
    const auto P2 = VarietySpec::projective_space(2, p3);
    EXPECT_THROW(steenrod_coh_k(P2, CycleClass::one(P2.ring()) + gen(P2.ring()), 0), DomainError);
}

TEST(SteenrodHom, Examples) {
    for (auto p : {p2, p3, p5})
        for (int r = 0; r <= 6; ++r) {
            const auto X = VarietySpec::projective_space(r, p);
            const auto h = gen(X.ring());
            EXPECT_EQ(steenrod_hom_total(X, X.fundamental_class()),
                      invert_unit_series((CycleClass::one(X.ring()) + h.pow(p.value() - 1)).pow(static_cast<std::uint64_t>(r + 1))));
            EXPECT_EQ(steenrod_hom_total(X, X.fundamental_class()), prx_series(r, p));
            EXPECT_EQ(steenrod_hom_total(X, X.fundamental_class()), b_class(-X.tangent_bundle()));
            for (int j = 0; j <= r; ++j) {
                const auto c = h.pow(static_cast<std::uint64_t>(j));
                EXPECT_EQ(steenrod_hom_k(X, c, 0), c);
            }
        }
}

TEST(ExternalProduct, Examples) {
    const auto X = VarietySpec::projective_space(1, p2), Y = VarietySpec::projective_space(1, p2);
    EXPECT_EQ(external_product(X, Y, X.fundamental_class(), Y.fundamental_class()).to_string(), "1");
    const auto hx = gen(X.ring()), hy = gen(Y.ring());
    EXPECT_EQ(external_product(X, Y, hx, hy).to_string(), "h1*h2");
    const auto pv = product_variety(X, Y);
    const auto& R = pv.variety.ring();
    const auto h1 = gen(R, "h1"), h2 = gen(R, "h2");
    EXPECT_EQ(steenrod_coh_total(pv.variety, external_product(X, Y, hx, hy)), (h1 + h1.pow(2)) * (h2 + h2.pow(2)));
}

TEST(ExternalProduct, CoincidesWithFactorwise) {
    std::mt19937_64 rng(43);
    for (auto p : {p2, p3, p5}) {
        const auto X = VarietySpec::projective_space(2, p), Y = VarietySpec::product_of_projective_spaces({1, 2}, p);
        const auto pv = product_variety(X, Y);
        for (int t = 0; t < 30; ++t) {
            std::vector<std::uint32_t> a(X.ring().basis_size()), b(Y.ring().basis_size());
            for (auto& v : a) v = static_cast<std::uint32_t>(rng() % p.value());
            for (auto& v : b) v = static_cast<std::uint32_t>(rng() % p.value());
            const CycleClass g(X.ring(), a), d(Y.ring(), b);
            const auto gd = external_product(X, Y, g, d);
            EXPECT_EQ(steenrod_coh_total(pv.variety, gd), pv.rings.cross(steenrod_coh_total(X, g), steenrod_coh_total(Y, d)));
            EXPECT_EQ(steenrod_hom_total(pv.variety, gd), pv.rings.cross(steenrod_hom_total(X, g), steenrod_hom_total(Y, d)));
        }
    }
}

TEST(Pullback, Examples) {
    const auto f = MorphismSpec::linear_embedding(1, 3, p3);
    const auto h = gen(f.target().ring()), hp = gen(f.source().ring());
    EXPECT_TRUE(pullback(f, h.pow(2)).is_zero());
    EXPECT_EQ(pullback(f, f.target().fundamental_class()), f.source().fundamental_class());
    EXPECT_EQ(pullback(f, steenrod_coh_total(f.target(), h)), hp + hp.pow(3));
    EXPECT_EQ(pullback(f, steenrod_coh_total(f.target(), h)), steenrod_coh_total(f.source(), pullback(f, h)));
}

TEST(Pullback, RejectsNonHomomorphism) {
    const auto P1 = VarietySpec::projective_space(1, p3), P2 = VarietySpec::projective_space(2, p3);
    // P^2 -> P^1 with h -> h does not respect h^2 = 0 on P^1
    EXPECT_THROW(MorphismSpec(P2, P1, {gen(P2.ring())}), ValidationError);
    // not graded
    EXPECT_THROW(MorphismSpec(P1, P2, {CycleClass::one(P1.ring())}), ValidationError);
}

TEST(Pushforward, Examples) {
    for (auto p : {p2, p3}) {
        const auto X = VarietySpec::projective_space(1, p);
        for (int r = 0; r <= 3; ++r) {
            const auto q = MorphismSpec::projection(r, X);
            const ProductRing pr = product_ring(RingSpec::projective_space(r, p), X.ring());
            const auto H = gen(RingSpec::projective_space(r, p));
            const auto d = gen(X.ring());
            EXPECT_EQ(pushforward_projection(r, X, pr.cross(H.pow(static_cast<std::uint64_t>(r)), d)), d);
            for (int j = 0; j < r; ++j)
                EXPECT_TRUE(pushforward_projection(r, X, pr.cross(H.pow(static_cast<std::uint64_t>(j)), d)).is_zero());
        }
    }
    const auto pt = VarietySpec::projective_space(0, p2);
    const auto q = MorphismSpec::projection(2, pt);
    EXPECT_TRUE(pushforward_projection(2, pt, steenrod_hom_total(q.source(), q.source().fundamental_class())).is_zero());
    EXPECT_THROW(pushforward_projection(2, pt, CycleClass::one(RingSpec::projective_space(2, p2))), UnsupportedError);
}

TEST(Pushforward, CommutesWithSteenrod) {
    for (auto p : {p2, p3, p5})
        for (const auto& X : {VarietySpec::projective_space(0, p), VarietySpec::projective_space(1, p)})
            for (int r = 0; r <= 2 * (static_cast<int>(p.value()) - 1); ++r) {
                const auto q = MorphismSpec::projection(r, X);
                const auto& R = q.source().ring();
                for (std::size_t i = 0; i < R.basis_size(); ++i) {
                    const auto c = CycleClass::monomial(R, R.basis()[i]);
                    EXPECT_EQ(pushforward_projection(r, X, steenrod_hom_total(q.source(), c)),
                              steenrod_hom_total(X, pushforward_projection(r, X, c)));
                }
            }
}

TEST(EquivariantChern, Examples) {
    const auto P2 = RingSpec::projective_space(2, p3);
    const auto h = gen(P2);
    const auto l = EquivariantClass::l(P2), one = EquivariantClass::one(P2), H = EquivariantClass::from_base(h);
    EXPECT_EQ(equivariant_chern(FilteredGBundle(P2, {{CycleClass::zero(P2), 1}})), one + l);
    EXPECT_EQ(equivariant_chern(FilteredGBundle(P2, {{h, 0}})), one + H);
    EXPECT_EQ(equivariant_chern(tensor_H_filtration(P2, {h})), (one + H + l) * (one + H + l + l));
}

TEST(Subcone, SmoothSelfIntersection) {
    for (auto p : {p2, p3, p5})
        for (int n = 0; n <= 4; ++n) {
            const auto X = RingSpec::projective_space(n, p);
            const auto N = tensor_H_filtration(X, std::vector<CycleClass>(static_cast<std::size_t>(n + 1), gen(X)));
            const auto i = linear_subvariety(X, {n});
            const auto s = subcone_class(N, N, i);
            EXPECT_EQ(s, EquivariantClass::one(X));
            EXPECT_TRUE(brolemma_check(s));
            EXPECT_EQ(epsilon(s), CycleClass::one(X));
        }
    const auto X = RingSpec::projective_space(2, p3);
    const FilteredGBundle empty(X);
    EXPECT_EQ(subcone_class(empty, empty, linear_subvariety(X, {2})), EquivariantClass::one(X));
}

TEST(Subcone, AgreesWithExplicitSum) {
    for (auto p : {p2, p3, p5})
        for (int n = 1; n <= 4; ++n)
            for (int m = 0; m <= n; ++m) {
                const auto X = RingSpec::projective_space(n, p);
                const auto i = linear_subvariety(X, {m});
                const auto E = tensor_H_filtration(X, std::vector<CycleClass>(static_cast<std::size_t>(n + 1), gen(X)));
                const auto C = tensor_H_filtration(i.sub, std::vector<CycleClass>(static_cast<std::size_t>(m + 1), gen(i.sub)));
                const auto s = subcone_class(E, C, i);
                EXPECT_EQ(s, subcone_oracle(E, C, i)) << "p=" << p.value() << " n=" << n << " m=" << m;
                EXPECT_TRUE(brolemma_check(s));
                EXPECT_TRUE(s.is_homogeneous_of(static_cast<int>(p.value()) * (n - m)));
            }
}

TEST(Corcalc, LineInPlane) {
    const auto X2 = VarietySpec::projective_space(2, p2);
    const auto rep2 = corcalc_eval(X2, {1});
    const auto h2 = gen(X2.ring());
    EXPECT_EQ(rep2.c_tilde, h2 + h2.pow(2));
    EXPECT_TRUE(rep2.consistent());
    const auto X3 = VarietySpec::projective_space(2, p3);
    const auto rep3 = corcalc_eval(X3, {1});
    EXPECT_EQ(rep3.c_tilde, gen(X3.ring()));
    EXPECT_TRUE(rep3.consistent());
}

TEST(Corcalc, WholeVariety) {
    const auto X = VarietySpec::projective_space(2, p2);
    const auto rep = corcalc_eval(X);
    EXPECT_EQ(rep.c_tilde, X.fundamental_class());
    EXPECT_EQ(rep.corcalc, CycleClass::one(X.ring()) + gen(X.ring()));
    EXPECT_TRUE(rep.consistent());
}

TEST(Corcalc, PointOnLine) {
    const auto X = VarietySpec::projective_space(1, p2);
    const auto rep = corcalc_eval(X, {0});
    EXPECT_EQ(rep.seed_based, gen(X.ring()));
    EXPECT_TRUE(rep.consistent());
}

TEST(Corcalc, AllLinearSubspaces) {
    for (auto p : {p2, p3, p5}) {
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= n; ++m) {
                const auto rep = corcalc_eval(VarietySpec::projective_space(n, p), {m});
                EXPECT_TRUE(rep.consistent()) << "p=" << p.value() << " n=" << n << " m=" << m << " corcalc="
                                              << rep.corcalc.to_string() << " seeds=" << rep.seed_based.to_string()
                                              << " rost=" << rep.rost_route.to_string();
            }
        const auto X = VarietySpec::product_of_projective_spaces({1, 2}, p);
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 2; ++b) EXPECT_TRUE(corcalc_eval(X, {a, b}).consistent());
    }
}

TEST(Corcalc, RejectsNonProduct) {
    const RingSpec r(p3, 2, {{"a", 1, 3}}, {}, "custom");
    const auto a = gen(r, "a");
    const auto X = VarietySpec::with_wu_seeds(r, (CycleClass::one(r) + a).pow(3));
    EXPECT_THROW(corcalc_eval(X), UnsupportedError);
}

TEST(PrX, Divisibility) {
    for (auto p : {p2, p3, p5}) {
        const int step = static_cast<int>(p.value()) - 1;
        for (int r = 1; r <= 5 * step; ++r) {
            const auto c = degree(prx_series(r, p));
            if (r % step != 0) {
                EXPECT_EQ(c, 0);
            } else {
                const int k = r / step;
                EXPECT_EQ(c, binom_neg_mod_p(static_cast<std::uint64_t>(r + 1), static_cast<std::uint64_t>(k), p));
                EXPECT_EQ(c, 0);
            }
        }
    }
}
