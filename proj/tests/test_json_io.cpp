#include "oracles.hpp"

#include "vogel/errors.hpp"
#include "vogel/json_io.hpp"
#include "vogel/qsearch.hpp"
#include "vogel/sketch.hpp"

#include <gtest/gtest.h>

using namespace vogel;

TEST(Json, RationalEncoding) {
    const Rational q(-7, 2);
    EXPECT_EQ(rational_to_json(q), Json::parse(R"(["-7","2"])"));
    EXPECT_EQ(rational_from_json(rational_to_json(q), ""), q);
    EXPECT_EQ(rational_from_json(Json("5/3"), ""), Rational(5, 3));
    EXPECT_EQ(rational_from_json(Json(4), ""), 4);
    EXPECT_THROW(rational_from_json(Json(1.5), "/x"), ParseError);
    EXPECT_THROW(rational_from_json(Json::parse(R"(["1","0"])"), "/x"), ParseError);
}

TEST(Json, FormulaRoundTrip) {
    std::mt19937_64 rng(oracle::seed());
    std::vector<FactorProduct> fs{adjoint_formula(), x2k_adn_formula(2, 3), builtin_q33(2, 3, 1, 1),
                                  builtin_q_prop4(2, 5, -7, 3, true),
                                  cancel(FactorProduct({LinearForm(1, 1, 0)}, {LinearForm(3, 3, 0)}, false,
                                                       Basis::Unprimed))};
    for (const auto& f : fs) {
        const Json j = formula_to_json(f);
        EXPECT_EQ(formula_from_json(j, ""), f);
        EXPECT_EQ(formula_from_json(Json::parse(j.dump()), ""), f);
    }
}

TEST(Json, PointFormSchema) {
    const Json j = point_to_json(ProjPoint(Rational(1, 3), -2, 5, Basis::Primed));
    EXPECT_EQ(j["basis"], "primed");
    EXPECT_EQ(j["coeffs"][0], Json::parse(R"(["1","3"])"));
    EXPECT_EQ(point_from_json(j, ""), ProjPoint(Rational(1, 3), -2, 5, Basis::Primed));
    EXPECT_EQ(form_from_json(form_to_json(LinearForm(3, -1, 0, Basis::Primed)), ""), LinearForm(3, -1, 0, Basis::Primed));
}

TEST(Json, TableAndColoringRoundTrip) {
    const auto t = pappus_table();
    EXPECT_EQ(table_from_json(table_to_json(t), ""), t);
    const Coloring c{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    EXPECT_EQ(coloring_from_json(coloring_to_json(c), ""), c);
}

TEST(Json, ErrorLocations) {
    try {
        formula_from_json(Json::parse(R"({"quantum":true,"sign":1,"basis":"primed","num":[{"coeffs":[1,2],"basis":"primed"}],"den":[]})"),
                          "");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("/num/0/coeffs"), std::string::npos) << e.what();
    }
    try {
        table_from_json(Json::parse(R"({"p":9,"l":9,"gamma":3,"pi":3,"columns":[[1,2,"x"]]})"), "");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("/columns/0/2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(parse_json("{not json", "file.json"), ParseError);
}

TEST(Json, OutputEncoders) {
    const auto sk = sketch_from_q(builtin_q33(2, 3, 1, 1), system_lines(LineSet::ThreeLines));
    const Json j = sketch_to_json(sk);
    EXPECT_EQ(j["points"].size(), 9u);
    EXPECT_EQ(table_from_json(j["table"], ""), sk.table);
    EXPECT_EQ(coloring_from_json(j["coloring"], ""), sk.coloring);
    const Json p = perms_to_json(prop4_perms());
    EXPECT_EQ(p["cycles"]["v"], "(13)(24)");
    EXPECT_EQ(p["s"], Json::parse("[2,1,4,3]"));
}
