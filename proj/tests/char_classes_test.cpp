#include <gtest/gtest.h>

#include <random>

#include "steencalc/char_classes.hpp"

using namespace steencalc;

namespace {

const PrimeModulus p2{2}, p3{3}, p5{5};

CycleClass gen(const RingSpec& r, const char* n = "h") { return CycleClass::generator(r, n); }

// random codim-1 class in a ring whose codim-1 basis is spanned by generators
CycleClass random_line(const RingSpec& r, std::mt19937_64& rng) {
    CycleClass c = CycleClass::zero(r);
    for (const auto& g : r.generators())
        if (g.codim == 1) c += static_cast<std::int64_t>(rng() % r.modulus().value()) * gen(r, g.name.c_str());
    return c;
}

std::vector<CycleClass> random_lines(const RingSpec& r, std::mt19937_64& rng, std::size_t n) {
    std::vector<CycleClass> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_line(r, rng));
    return v;
}

// Oracle: literal product of (1 + sign * x_i^m) over concrete roots.
CycleClass literal_product(const RingSpec& r, const std::vector<CycleClass>& roots, int m, std::int64_t sign) {
    CycleClass acc = CycleClass::one(r);
    for (const auto& x : roots) acc = acc * (CycleClass::one(r) + sign * x.pow(static_cast<std::uint64_t>(m)));
    return acc;
}

std::vector<RingSpec> test_rings(PrimeModulus p) {
    return {RingSpec::projective_space(6, p), RingSpec::product_of_projective_spaces({2, 3}, p),
            RingSpec::product_of_projective_spaces({2, 2, 2}, p)};
}

}  // namespace

TEST(WhitneySum, Examples) {
    const auto P2 = RingSpec::projective_space(2, p3);
    const auto h = gen(P2);
    const auto v = whitney_sum(BundleClass::line(h), BundleClass::line(h));
    EXPECT_EQ(v.rank(), 2);
    EXPECT_EQ(v.total_chern(), (CycleClass::one(P2) + h).pow(2));
    const auto zero = BundleClass::trivial(P2, 0);
    EXPECT_EQ((v + zero).total_chern(), v.total_chern());
    EXPECT_EQ((v + zero).rank(), v.rank());

    const auto P1 = RingSpec::projective_space(1, p5);
    const auto t = BundleClass::line(2 * gen(P1));
    EXPECT_EQ((t + BundleClass::line(-2 * gen(P1))).total_chern(), CycleClass::one(P1));
}

TEST(BundleClass, RejectsBadChernData) {
    const auto P2 = RingSpec::projective_space(2, p3);
    EXPECT_THROW(BundleClass::honest(1, CycleClass::one(P2) + gen(P2).pow(2)), DomainError);
    EXPECT_THROW(BundleClass::honest(1, 2 * CycleClass::one(P2)), DomainError);
    EXPECT_THROW(BundleClass::line(gen(P2).pow(2)), DomainError);
    EXPECT_THROW(BundleClass::line(gen(P2)) + BundleClass::line(gen(RingSpec::projective_space(3, p3))), MismatchError);
}

TEST(Segre, Examples) {
    const auto P2 = RingSpec::projective_space(2, p5);
    const auto h = gen(P2);
    EXPECT_EQ(segre_total(BundleClass::line(h)), CycleClass::one(P2) - h + h.pow(2));
    EXPECT_EQ(segre_total(BundleClass::trivial(P2, 3)), CycleClass::one(P2));
    const auto P2_3 = RingSpec::projective_space(2, p3);
    const auto h3 = gen(P2_3);
    EXPECT_EQ(segre_total(BundleClass::split(P2_3, {h3, h3})), CycleClass::one(P2_3) + h3);
}

TEST(RootPowerTransform, Examples) {
    for (auto p : {p2, p3, p5}) {
        const auto P6 = RingSpec::projective_space(6, p);
        const auto c1 = 3 * gen(P6);
        const int m = static_cast<int>(p.value()) - 1;
        EXPECT_EQ(root_power_transform(BundleClass::line(c1), m).total_chern(),
                  CycleClass::one(P6) + c1.pow(static_cast<std::uint64_t>(m)));
        const auto v = BundleClass::split(P6, {gen(P6), 2 * gen(P6)});
        EXPECT_EQ(root_power_transform(v, 1).total_chern(), v.total_chern());
    }
}

TEST(RootPowerTransform, RankTwoSymmetricAlgebraOracle) {
    // free ring on e1 (codim 1) and e2 (codim 2): the universal rank-2 case
    const RingSpec R(p3, 4, {{"e1", 1, 5}, {"e2", 2, 3}}, {}, "sym2");
    const auto e1 = gen(R, "e1"), e2 = gen(R, "e2");
    const auto v = BundleClass::honest(2, CycleClass::one(R) + e1 + e2);
    const auto w = root_power_transform(v, 2);
    EXPECT_EQ(w.chern(2), e1.pow(2) - 2 * e2);
    EXPECT_EQ(w.chern(4), e2.pow(2));
    EXPECT_EQ(b_class(v), CycleClass::one(R) + (e1.pow(2) - 2 * e2) + e2.pow(2));
}

TEST(RootPowerTransform, AgreesWithLiteralExpansion) {
    std::mt19937_64 rng(23);
    for (auto p : {p2, p3, p5})
        for (const auto& r : test_rings(p))
            for (int m = 1; m <= 4; ++m)
                for (std::size_t rank = 0; rank <= 4; ++rank) {
                    const auto roots = random_lines(r, rng, rank);
                    EXPECT_EQ(root_power_transform(BundleClass::split(r, roots), m).total_chern(),
                              literal_product(r, roots, m, 1))
                        << r.label() << " m=" << m << " rank=" << rank;
                }
}

TEST(RootPowerTransform, RejectsVirtual) {
    const auto P2 = RingSpec::projective_space(2, p3);
    EXPECT_THROW(root_power_transform(-BundleClass::line(gen(P2)), 2), UnsupportedError);
}

TEST(BClass, Examples) {
    std::mt19937_64 rng(1);
    const auto P4 = RingSpec::projective_space(4, p2);
    const auto v = BundleClass::split(P4, random_lines(P4, rng, 3));
    EXPECT_EQ(b_class(v), v.total_chern());
    for (auto p : {p2, p3, p5}) {
        const auto P6 = RingSpec::projective_space(6, p);
        const auto h = gen(P6);
        EXPECT_EQ(b_class(BundleClass::line(h)), CycleClass::one(P6) + h.pow(p.value() - 1));
    }
}

TEST(BClass, Multiplicative) {
    std::mt19937_64 rng(29);
    for (auto p : {p2, p3, p5})
        for (const auto& r : test_rings(p))
            for (int t = 0; t < 70; ++t) {
                const auto v = BundleClass::split(r, random_lines(r, rng, rng() % 4));
                const auto w = BundleClass::split(r, random_lines(r, rng, rng() % 4));
                EXPECT_EQ(b_class(v + w), b_class(v) * b_class(w));
                EXPECT_EQ(b_class(v - w) * b_class(w), b_class(v));
                EXPECT_EQ(b_class(-v) * b_class(v), CycleClass::one(r));
            }
}

TEST(OmegaClass, Examples) {
    std::mt19937_64 rng(31);
    for (auto p : {p2, p3, p5})
        for (const auto& r : test_rings(p)) {
            EXPECT_EQ(omega_class(BundleClass::trivial(r, 4)), CycleClass::one(r));
            for (int t = 0; t < 40; ++t) {
                const auto roots = random_lines(r, rng, 1 + rng() % 5);
                const auto v = BundleClass::split(r, roots);
                const auto w = omega_class(v), b = b_class(v);
                EXPECT_EQ(w, literal_product(r, roots, static_cast<int>(p.value()) - 1, -1));
                const int step = static_cast<int>(p.value()) - 1;
                for (int k = 0; k * step <= r.dimension(); ++k)
                    EXPECT_EQ(w.graded_component(k * step), (k % 2 ? -1 : 1) * b.graded_component(k * step));
                if (p.value() == 2) {
                    EXPECT_EQ(w, v.total_chern());
                }
            }
        }
}

TEST(MuClass, Examples) {
    const auto P2 = RingSpec::projective_space(2, p5);
    FilteredGBundle single(P2, {{CycleClass::zero(P2), 3}});
    EXPECT_EQ(mu_class(single), CycleClass::constant(P2, 3));

    for (auto p : {p2, p3, p5}) {
        const auto P6 = RingSpec::projective_space(6, p);
        const auto c = 2 * gen(P6);
        const auto m = tensor_H_filtration(P6, {c});
        EXPECT_EQ(m.rank(), p.value() - 1);
        EXPECT_EQ(mu_class(m), CycleClass::constant(P6, -1) + c.pow(p.value() - 1));
    }
    EXPECT_EQ(mu_class(tensor_H_filtration(P2, {})), CycleClass::one(P2));
}

TEST(TensorH, Layout) {
    const auto P2 = RingSpec::projective_space(2, p3);
    const auto f = tensor_H_filtration(P2, {gen(P2)});
    ASSERT_EQ(f.rank(), 2u);
    EXPECT_EQ(f.quotients()[0].weight, 1u);
    EXPECT_EQ(f.quotients()[1].weight, 2u);
    EXPECT_EQ(f.quotients()[1].c1, gen(P2));
    const auto P2_2 = RingSpec::projective_space(2, p2);
    const auto g = tensor_H_filtration(P2_2, {gen(P2_2), gen(P2_2), CycleClass::zero(P2_2)});
    EXPECT_EQ(g.rank(), 3u);
    for (const auto& q : g.quotients()) EXPECT_EQ(q.weight, 1u);
}

TEST(MuClass, TensorHIsSignedOmega) {
    std::mt19937_64 rng(37);
    for (auto p : {p2, p3, p5})
        for (const auto& r : test_rings(p))
            for (int t = 0; t < 40; ++t) {
                const auto roots = random_lines(r, rng, rng() % 5);
                const std::int64_t sign = roots.size() % 2 ? -1 : 1;
                EXPECT_EQ(mu_class(tensor_H_filtration(r, roots)), sign * omega_class(BundleClass::split(r, roots)));
            }
}

TEST(Rho, Examples) {
    const auto P2 = RingSpec::projective_space(2, p5);
    const auto eta = EquivariantClass::from_base(gen(P2));
    FilteredGBundle v(P2, {{CycleClass::zero(P2), 3}});
    EXPECT_EQ(rho_on_split_bundle(v, eta), 2 * gen(P2));  // 3 * 2 = 1 mod 5
    EXPECT_TRUE(rho_on_split_bundle(v, EquivariantClass(P2)).is_zero());
    FilteredGBundle w(P2, {{gen(P2), 1}});
    EXPECT_EQ(rho_on_split_bundle(w, EquivariantClass::one(P2)), CycleClass::one(P2) - gen(P2) + gen(P2).pow(2));
    FilteredGBundle z(P2, {{gen(P2), 5}});
    EXPECT_THROW(rho_on_split_bundle(z, eta), DomainError);
}

TEST(Epsilon, Examples) {
    const auto P2 = RingSpec::projective_space(2, p3);
    const auto h = gen(P2);
    const auto l = EquivariantClass::l(P2);
    EXPECT_EQ(epsilon(h * l * l), h);
    EXPECT_EQ(epsilon(EquivariantClass::one(P2) + l), CycleClass::constant(P2, 2));
    const auto one = EquivariantClass::one(P2), H = EquivariantClass::from_base(h);
    EXPECT_EQ(epsilon((one + H + l) * (one + H + l + l)), 2 * h + h.pow(2));
    const auto P1 = RingSpec::projective_space(1, p2);
    EXPECT_TRUE(epsilon(EquivariantClass::one(P1) + EquivariantClass::l(P1)).is_zero());
}
