#include <gtest/gtest.h>

#include "steencalc/io.hpp"

using namespace steencalc;

namespace {

const std::string data_dir = STEENCALC_DATA_DIR;

json parse(const char* text) { return json::parse(text); }

}  // namespace

TEST(Io, ProjectivePlaneFile) {
    const auto x = variety_from_json(read_json_file(data_dir + "/p2.json"));
    EXPECT_EQ(x.dimension(), 2);
    EXPECT_EQ(x.modulus().value(), 2u);
    const auto h = CycleClass::generator(x.ring(), "h");
    const auto out = class_to_json(steenrod_coh_total(x, h));
    EXPECT_EQ(out, parse(R"({"h": 1, "h^2": 1})"));
    const auto ref = VarietySpec::projective_space(2, PrimeModulus(2));
    EXPECT_EQ(class_to_json(x.tangent_chern()), class_to_json(ref.tangent_chern()));
}

TEST(Io, ExplicitSeedsAndRelations) {
    const auto x = variety_from_json(read_json_file(data_dir + "/p1xp2_p3.json"));
    const auto ref = VarietySpec::product_of_projective_spaces({1, 2}, PrimeModulus(3));
    for (const char* g : {"h1", "h2"}) EXPECT_EQ(class_to_json(x.seed(g)), class_to_json(ref.seed(g))) << g;

    const auto f1 = variety_from_json(read_json_file(data_dir + "/hirzebruch_f1_p2.json"));
    const auto z = CycleClass::generator(f1.ring(), "z"), f = CycleClass::generator(f1.ring(), "f");
    EXPECT_EQ(z * z, f * z);
    EXPECT_EQ(f1.ring().basis_size(), 4u);
    // Euler characteristic of F_1 is 4 = 0 mod 2
    EXPECT_TRUE(f1.tangent_chern().graded_component(2).is_zero());
    // S(z) = z + z^2 on a divisor; here z^2 = f z
    EXPECT_EQ(steenrod_coh_total(f1, z), z + f * z);
}

TEST(Io, VarietyErrors) {
    EXPECT_THROW(read_json_file(data_dir + "/missing.json"), InputError);
    EXPECT_THROW(variety_from_json(parse(R"({"prime": 4, "dimension": 1, "generators": [], "tangent_chern": "1", "divisor": true})")),
                 InputError);
    EXPECT_THROW(variety_from_json(parse(R"({"prime": 2, "dimension": 1,
        "generators": [{"name": "h", "codim": 1, "nilpotency": 2}], "tangent_chern": "(1+k)^2", "divisor": true})")),
                 InputError);
    EXPECT_THROW(variety_from_json(parse(R"({"prime": 2, "dimension": 1,
        "generators": [{"name": "h", "codim": 1, "nilpotency": 2}], "tangent_chern": "(1+h)^2"})")),
                 InputError);
    // a seed whose leading term is wrong
    EXPECT_THROW(variety_from_json(parse(R"({"prime": 3, "dimension": 2,
        "generators": [{"name": "h", "codim": 1, "nilpotency": 3}], "tangent_chern": "(1+h)^3",
        "steenrod_seeds": {"h": "2*h"}})")),
                 InputError);
    EXPECT_THROW(variety_from_json(parse(R"({"prime": 2})")), InputError);
    EXPECT_THROW(variety_from_json(parse(R"({"prime": 2, "dimension": 1,
        "generators": [{"name": "h", "codim": 1, "nilpotency": 2}], "relations": [{"lhs": "2*h", "rhs": "0"}],
        "tangent_chern": "1", "divisor": true})")),
                 InputError);
}

TEST(Io, AlgebraFiles) {
    const auto k = algebra_from_json(read_json_file(data_dir + "/kummer_f7_p3.json"));
    EXPECT_TRUE(torsor_check(k).all_true());
    EXPECT_TRUE(kummer_parameter(k) == pth_power_class(FqField::of_order(7).from_int(3), PrimeModulus(3)));
    const auto c = algebra_from_json(read_json_file(data_dir + "/cone_f5_p3.json"));
    EXPECT_TRUE(torsor_check(c).all_false());
    const auto j = torsor_report_to_json(torsor_check(k));
    EXPECT_EQ(j.at("torsor"), true);
    EXPECT_EQ(j.at("conditions").size(), 7u);
    // written algebra reads back to the same structure
    const auto again = algebra_from_json(algebra_to_json(k));
    for (std::size_t a = 0; a < k.dimension(); ++a)
        for (std::size_t b = 0; b < k.dimension(); ++b) EXPECT_EQ(again.product(a, b), k.product(a, b));
}

TEST(Io, AlgebraErrors) {
    // t * t2 = e is in the wrong component for p = 2
    EXPECT_THROW(algebra_from_json(parse(R"({"p": 2, "q": 5, "components": {"0": ["e"], "1": ["t"]},
        "products": [["t", "t", "t"]], "unit": "e"})")),
                 InputError);
    EXPECT_THROW(algebra_from_json(parse(R"({"p": 3, "q": 9, "components": {"0": ["e"]}, "unit": "e"})")), InputError);
    EXPECT_THROW(algebra_from_json(parse(R"({"p": 3, "q": 7, "components": {"0": ["e"], "5": ["t"]}, "unit": "e"})")),
                 InputError);
    EXPECT_THROW(algebra_from_json(parse(R"({"p": 3, "q": 7, "components": {"0": ["e"], "1": ["t"]},
        "products": [["t", "u", "e"]], "unit": "e"})")),
                 InputError);
    EXPECT_THROW(algebra_from_json(parse(R"({"p": 3, "q": 6, "components": {"0": ["e"]}, "unit": "e"})")), InputError);
    EXPECT_THROW(algebra_from_json(parse(R"({"p": 3, "q": 7, "components": {"0": ["e"]}, "unit": "2*x"})")), InputError);
}
