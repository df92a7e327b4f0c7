#include <gtest/gtest.h>

#include <map>
#include <random>

#include "steencalc/chow_ring.hpp"

using namespace steencalc;

namespace {

const PrimeModulus p2{2}, p3{3}, p5{5};

CycleClass h(const RingSpec& r, const char* name = "h") { return CycleClass::generator(r, name); }

CycleClass random_class(const RingSpec& r, std::mt19937_64& rng) {
    std::vector<std::uint32_t> c(r.basis_size());
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % r.modulus().value());
    return CycleClass(r, c);
}

// Oracle: multiply two classes on a pure monomial ring (no rewrite rules) by
// explicit convolution of exponent dictionaries, then truncate.
std::map<Exponents, std::uint32_t> convolve(const CycleClass& a, const CycleClass& b) {
    const RingSpec& r = a.ring();
    std::map<Exponents, std::uint32_t> out;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            bool zero = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] >= r.generators()[i].nilpotency) zero = true;
            }
            if (zero || r.codim_of(e) > r.dimension()) continue;
            auto& slot = out[e];
            slot = static_cast<std::uint32_t>((slot + std::uint64_t{ca} * cb) % r.modulus().value());
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::map<Exponents, std::uint32_t> as_map(const CycleClass& a) {
    std::map<Exponents, std::uint32_t> m;
    for (const auto& [e, c] : a.terms()) m[e] = c;
    return m;
}

}  // namespace

TEST(Normalize, Examples) {
    const auto P2 = RingSpec::projective_space(2, p2);
    EXPECT_TRUE(normalize({{1, {{"h", 3}}}}, P2).is_zero());
    const auto x = h(P2);
    EXPECT_EQ((CycleClass::one(P2) + x).pow(3).to_string(), "1+h+h^2");
    const auto P1P1 = RingSpec::product_of_projective_spaces({1, 1}, p3);
    EXPECT_TRUE(normalize({{1, {{"h1", 2}, {"h2", 1}}}}, P1P1).is_zero());
    EXPECT_EQ(normalize({{4, {{"h1", 1}, {"h2", 1}}}, {2, {}}}, P1P1).to_string(), "2+h1*h2");
}

TEST(Normalize, UnknownGenerator) {
    const auto P2 = RingSpec::projective_space(2, p2);
    EXPECT_THROW(normalize({{1, {{"q", 1}}}}, P2), InputError);
}

TEST(Normalize, RepeatedFactorsAccumulate) {
    const auto P3 = RingSpec::projective_space(3, p5);
    EXPECT_EQ(normalize({{1, {{"h", 1}, {"h", 2}}}}, P3), h(P3).pow(3));
    EXPECT_TRUE(normalize({{1, {{"h", 2}, {"h", 2}}}}, P3).is_zero());
}

TEST(Mul, Examples) {
    const auto P3 = RingSpec::projective_space(3, p5);
    EXPECT_EQ((h(P3) * h(P3)).to_string(), "h^2");
    const auto P2 = RingSpec::projective_space(2, p2);
    EXPECT_EQ((h(P2) + h(P2).pow(2)).pow(2).to_string(), "h^2");
    std::mt19937_64 rng(7);
    auto a = random_class(P3, rng);
    EXPECT_EQ(a * CycleClass::one(P3), a);
}

TEST(Mul, RingMismatch) {
    const auto A = RingSpec::projective_space(2, p2);
    const auto B = RingSpec::projective_space(3, p2);
    EXPECT_THROW(h(A) * h(B), MismatchError);
    EXPECT_THROW(h(A) + h(B), MismatchError);
}

TEST(Mul, AgreesWithConvolutionOracle) {
    std::mt19937_64 rng(11);
    std::vector<RingSpec> rings;
    for (auto p : {p2, p3, p5}) {
        for (int n = 0; n <= 6; ++n) rings.push_back(RingSpec::projective_space(n, p));
        rings.push_back(RingSpec::product_of_projective_spaces({1, 2}, p));
        rings.push_back(RingSpec::product_of_projective_spaces({2, 2, 2}, p));
        rings.push_back(RingSpec::product_of_projective_spaces({1, 1, 3}, p));
        rings.push_back(RingSpec(p, 6, {{"a", 1, 4}, {"b", 2, 3}, {"c", 3, 2}}, {}, "weighted"));
    }
    for (const auto& r : rings)
        for (int trial = 0; trial < 20; ++trial) {
            auto a = random_class(r, rng), b = random_class(r, rng);
            EXPECT_EQ(as_map(a * b), convolve(a, b)) << r.label();
        }
}

TEST(Mul, RingAxioms) {
    std::mt19937_64 rng(5);
    const auto Z = RingSpec::projective_bundle(RingSpec::projective_space(2, p3),
                                               {CycleClass::generator(RingSpec::projective_space(2, p3), "h"),
                                                2 * CycleClass::generator(RingSpec::projective_space(2, p3), "h").pow(2)});
    for (const auto& r : {RingSpec::product_of_projective_spaces({2, 3}, p3), Z}) {
        for (int t = 0; t < 30; ++t) {
            auto a = random_class(r, rng), b = random_class(r, rng), c = random_class(r, rng);
            EXPECT_EQ(a * b, b * a);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
        }
    }
}

TEST(Normalize, IdempotentAndHomomorphism) {
    std::mt19937_64 rng(3);
    const auto R = RingSpec::product_of_projective_spaces({2, 1}, p5);
    for (int t = 0; t < 50; ++t) {
        RawPolynomial f, g;
        for (int i = 0; i < 4; ++i) {
            f.push_back({static_cast<std::int64_t>(rng() % 11) - 5, {{"h1", rng() % 4}, {"h2", rng() % 3}}});
            g.push_back({static_cast<std::int64_t>(rng() % 11) - 5, {{"h2", rng() % 3}, {"h1", rng() % 2}}});
        }
        RawPolynomial fg;
        for (const auto& a : f)
            for (const auto& b : g) {
                RawTerm t{a.coefficient * b.coefficient, a.factors};
                t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
                fg.push_back(t);
            }
        RawPolynomial fpg = f;
        fpg.insert(fpg.end(), g.begin(), g.end());
        const auto nf = normalize(f, R), ng = normalize(g, R);
        EXPECT_EQ(normalize(fg, R), nf * ng);
        EXPECT_EQ(normalize(fpg, R), nf + ng);
        RawPolynomial again;
        for (const auto& [e, c] : nf.terms()) {
            RawTerm t{c, {}};
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) t.factors.emplace_back(R.generators()[i].name, e[i]);
            again.push_back(t);
        }
        EXPECT_EQ(normalize(again, R), nf);
    }
}

TEST(GradedComponent, Examples) {
    const auto P2 = RingSpec::projective_space(2, p3);
    const auto a = CycleClass::one(P2) + h(P2) + h(P2).pow(2);
    EXPECT_EQ(a.graded_component(1), h(P2));
    EXPECT_TRUE(a.graded_component(-1).is_zero());
    EXPECT_TRUE(a.graded_component(5).is_zero());
    CycleClass sum = CycleClass::zero(P2);
    for (int k = 0; k <= 2; ++k) sum += graded_component(a, k);
    EXPECT_EQ(sum, a);
}

TEST(InvertUnitSeries, Examples) {
    const auto P2 = RingSpec::projective_space(2, p2);
    const auto one = CycleClass::one(P2);
    EXPECT_EQ(invert_unit_series(one + h(P2)).to_string(), "1+h+h^2");
    EXPECT_EQ(invert_unit_series(one), one);
    EXPECT_EQ(invert_unit_series((one + h(P2)).pow(3)).to_string(), "1+h");
    EXPECT_THROW(invert_unit_series(h(P2)), DomainError);
    EXPECT_THROW(invert_unit_series(2 * one + h(P2)), DomainError);  // 2 = 0 mod 2, not 1
}

TEST(InvertUnitSeries, RandomUnitSeries) {
    std::mt19937_64 rng(17);
    for (auto p : {p2, p3, p5}) {
        std::vector<RingSpec> presets = {RingSpec::projective_space(4, p),
                                         RingSpec::product_of_projective_spaces({2, 3}, p),
                                         RingSpec::product_of_projective_spaces({1, 1, 1}, p)};
        for (const auto& r : presets)
            for (int t = 0; t < 200; ++t) {
                auto a = random_class(r, rng);
                a = a - CycleClass::constant(r, a.constant_term().value()) + CycleClass::one(r);
                EXPECT_EQ(invert_unit_series(a) * a, CycleClass::one(r));
            }
    }
}

TEST(Degree, Examples) {
    const auto P2 = RingSpec::projective_space(2, p2);
    EXPECT_EQ(degree(invert_unit_series((CycleClass::one(P2) + h(P2)).pow(3))), 0);
    const auto P0 = RingSpec::projective_space(0, p5);
    EXPECT_EQ(degree(CycleClass::one(P0)), 1);
    const auto P2_3 = RingSpec::projective_space(2, p3);
    EXPECT_EQ(degree(invert_unit_series((CycleClass::one(P2_3) + h(P2_3).pow(2)).pow(3))), 0);
}

TEST(Degree, PairingConsistency) {
    for (auto p : {p2, p3, p5})
        for (int n = 0; n <= 6; ++n) {
            const auto Pn = RingSpec::projective_space(n, p);
            for (int i = 0; i <= n; ++i) EXPECT_EQ(degree(h(Pn).pow(i) * h(Pn).pow(n - i)), 1);
        }
}

TEST(Degree, RequiresProductPreset) {
    const RingSpec r(p3, 2, {{"a", 1, 3}}, {}, "custom");
    EXPECT_THROW(degree(CycleClass::one(r)), UnsupportedError);
}

TEST(RingSpec, RejectsBadPresentations) {
    EXPECT_THROW(RingSpec(p2, 2, {{"a", 0, 3}}), ValidationError);
    EXPECT_THROW(RingSpec(p2, 2, {{"a", 1, 3}, {"a", 1, 2}}), ValidationError);
    // a^2 -> b^2 increases the order (b is more significant)
    EXPECT_THROW(RingSpec(p2, 2, {{"a", 1, 3}, {"b", 1, 3}}, {{{2, 0}, {{{0, 2}, 1}}}}), ValidationError);
    // not homogeneous
    EXPECT_THROW(RingSpec(p2, 2, {{"a", 1, 3}, {"b", 1, 3}}, {{{0, 2}, {{{1, 0}, 1}}}}), ValidationError);
    // overlaps a nilpotency truncation
    EXPECT_THROW(RingSpec(p2, 2, {{"a", 1, 3}}, {{{3}, {}}}), ValidationError);
}

TEST(RingSpec, RejectsNonConfluentRules) {
    // b^2 -> a*b and a*b -> a^2 together with b^2 -> a^2 collapse consistently;
    // b^2 -> a^2, a*b -> 0 with a^2 nonzero is not associative at codim 3: (a*b)*b = 0 but a*(b^2) = a^3.
    EXPECT_THROW(RingSpec(p3, 3, {{"a", 1, 4}, {"b", 1, 4}}, {{{0, 2}, {{{2, 0}, 1}}}, {{1, 1}, {}}}), ValidationError);
}

TEST(ProjectiveBundle, TrivialBundleIsProduct) {
    // P(O^2) over P^1 has ring F_p[h,z]/(h^2, z^2) like P^1 x P^1
    const auto P1 = RingSpec::projective_space(1, p3);
    const auto B = RingSpec::projective_bundle(P1, {CycleClass::zero(P1), CycleClass::zero(P1)});
    EXPECT_EQ(B.dimension(), 2);
    EXPECT_EQ(B.basis_size(), 4u);
    const auto z = CycleClass::generator(B, "z");
    EXPECT_TRUE(z.pow(2).is_zero());
    EXPECT_FALSE((z * CycleClass::generator(B, "h")).is_zero());
}

TEST(ProjectiveBundle, Relation) {
    // P(O + O(1)) over P^2: z^2 = -h z
    const auto P2 = RingSpec::projective_space(2, p5);
    const auto B = RingSpec::projective_bundle(P2, {h(P2), CycleClass::zero(P2)});
    const auto z = CycleClass::generator(B, "z"), hh = CycleClass::generator(B, "h");
    EXPECT_EQ(z.pow(2), -(hh * z));
    EXPECT_EQ(z.pow(3), hh.pow(2) * z);
    EXPECT_EQ(B.basis_size(), 6u);  // rank 2 over 3 basis classes
    EXPECT_THROW(RingSpec::projective_bundle(P2, {h(P2).pow(2)}), DomainError);
}

TEST(ProductRing, KunnethInclusions) {
    const auto A = RingSpec::projective_space(2, p3), B = RingSpec::projective_space(1, p3);
    const auto pr = product_ring(A, B);
    EXPECT_EQ(pr.ring.label(), "P2xP1");
    const auto x = pr.cross(h(A), h(B));
    EXPECT_EQ(x.to_string(), "h1*h2");
    EXPECT_EQ(degree(pr.cross(h(A).pow(2), h(B))), 1);
    // a non-preset factor goes through the general juxtaposition
    const auto Z = RingSpec::projective_bundle(A, {h(A)});
    const auto pz = product_ring(Z, B);
    EXPECT_EQ(pz.ring.dimension(), 3);
    EXPECT_EQ(pz.ring.basis_size(), Z.basis_size() * B.basis_size());
    EXPECT_TRUE(pz.include_left(h(Z)).pow(3).is_zero());
}

TEST(CycleClass, ToString) {
    const auto R = RingSpec::product_of_projective_spaces({1, 2}, p5);
    EXPECT_EQ(CycleClass::zero(R).to_string(), "0");
    EXPECT_EQ((3 * CycleClass::one(R) + 2 * normalize({{1, {{"h1", 1}, {"h2", 2}}}}, R)).to_string(), "3+2*h1*h2^2");
}
