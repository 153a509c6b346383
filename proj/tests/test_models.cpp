#include <doctest.h>

#include <nlohmann/json.hpp>

#include "coeffective/builder.hpp"
#include "coeffective/model.hpp"
#include "coeffective/serialize.hpp"
#include "coeffective/strands.hpp"

using namespace coeffective;
using nlohmann::json;

namespace {

StructureData builtin_structure(const std::string& name, int n = 0) {
    return StructureData::from_model_data(builtin(name, n).model());
}

}  // namespace

TEST_CASE("parse_model") {
    SUBCASE("abelian file gives a torus model with zero differential") {
        json j = {{"name", "flat"},
                  {"dim", 4},
                  {"structure", json::array()},
                  {"alpha", json::array()},
                  {"calibration",
                   {{"kind", "symplectic"},
                    {"form", json::array({{{"blade", {1, 2}}, {"coeff", "1"}},
                                          {{"blade", {3, 4}}, {"coeff", "1"}}})}}}};
        auto m = parse_model(j);
        CHECK(m.model.dim == 4);
        for (int k = 1; k <= 4; ++k) CHECK(m.model.d_basis(k).is_zero());
        CHECK(validate_structure(StructureData::from_model_data(m)).ok);
    }
    SUBCASE("hopf relations pass the d^2 check") {
        json j = {{"name", "hopf"},
                  {"dim", 4},
                  {"structure",
                   json::array({{{"k", 2}, {"i", 3}, {"j", 4}, {"coeff", "1"}},
                                {{"k", 3}, {"i", 2}, {"j", 4}, {"coeff", "-1"}},
                                {{"k", 4}, {"i", 2}, {"j", 3}, {"coeff", "1"}}})},
                  {"alpha", json::array({{{"blade", {1}}, {"coeff", "1"}}})},
                  {"calibration",
                   {{"kind", "symplectic"},
                    {"form", json::array({{{"blade", {1, 2}}, {"coeff", "-2"}},
                                          {{"blade", {3, 4}}, {"coeff", "1"}}})}}}};
        auto m = parse_model(j);
        CHECK(validate_structure(StructureData::from_model_data(m)).ok);
    }
    SUBCASE("a broken differential is rejected with the offending data") {
        // d e1 = e23, d e3 = e14 gives d^2 e1 = e124 != 0
        json j = {{"name", "broken"},
                  {"dim", 4},
                  {"structure",
                   json::array({{{"k", 1}, {"i", 2}, {"j", 3}, {"coeff", "1"}},
                                {{"k", 3}, {"i", 1}, {"j", 4}, {"coeff", "1"}}})},
                  {"alpha", json::array()},
                  {"calibration", {{"kind", "generic"}, {"form", json::array()}}}};
        try {
            parse_model(j);
            FAIL("expected a jacobi rejection");
        } catch (const ModelError& e) {
            CHECK(e.code == "jacobi");
            CHECK(std::string(e.what()).find("e1") != std::string::npos);
        }
    }
    SUBCASE("schema violations carry the schema code") {
        try {
            parse_model(json{{"name", "x"}});
            FAIL("expected a schema rejection");
        } catch (const ModelError& e) {
            CHECK(e.code == "schema");
        }
    }
    SUBCASE("model JSON round trips") {
        auto hopf = builtin("hopf4").model();
        auto j = model_to_json(hopf);
        auto back = parse_model(j);
        CHECK(back.model.dim == hopf.model.dim);
        CHECK(back.alpha == hopf.alpha);
        CHECK(back.F == hopf.F);
        CHECK(back.kind == hopf.kind);
        CHECK(model_to_json(back) == j);
    }
}

TEST_CASE("builtins validate and carry the advertised data") {
    SUBCASE("every cochain builtin passes validate_structure") {
        CHECK(validate_structure(builtin_structure("torus", 2)).ok);
        CHECK(validate_structure(builtin_structure("torus", 3)).ok);
        CHECK(validate_structure(builtin_structure("torus7_g2")).ok);
        CHECK(validate_structure(builtin_structure("hopf4")).ok);
        CHECK(validate_structure(builtin_structure("kodaira_thurston")).ok);
    }
    SUBCASE("hopf4 carries a genuinely conformal structure") {
        auto s = builtin_structure("hopf4");
        CHECK_FALSE(s.alpha.is_zero());
        CHECK_FALSE(s.model.d(s.F).is_zero());
        CHECK(wedge_power(s.F, 2) == Form::basis_form(4, {1, 2, 3, 4}, -4));
    }
    SUBCASE("kodaira_thurston: closed non-degenerate J, Betti (1,3,4,3,1)") {
        auto s = builtin_structure("kodaira_thurston");
        CHECK(s.model.d(s.F).is_zero());
        CHECK_FALSE(wedge_power(s.F, 2).is_zero());
        auto betti = twisted_cohomology(s.model, s.alpha, 0).dims;
        CHECK(betti == std::vector<int>{1, 3, 4, 3, 1});
    }
    SUBCASE("cpn Betti vector") {
        auto ring = builtin("cpn", 2).ring();
        CHECK(ring.betti == std::vector<int>{1, 0, 1, 0, 1});
        CHECK(ring.cup[0].rows() == 1);
        CHECK(ring.cup[0].get(0, 0) == 1);
    }
    SUBCASE("cpn cup matrices compose consistently") {
        auto ring = builtin("cpn", 3).ring();
        for (int j = 0; j + 2 < 3; ++j) {
            Matrix twice = ring.cup[2 * j + 2].multiply(ring.cup[2 * j]);
            CHECK(twice.rows() == 1);
            CHECK(twice.get(0, 0) == 1);  // the square of the class acts as identity too
        }
    }
    SUBCASE("local builtin carries the polynomial ambient data") {
        auto pm = builtin("local", 4, 6).polynomial();
        CHECK(pm.dim == 4);
        CHECK(pm.max_homogeneity == 6);
        auto s = builtin_structure("torus", 2);
        auto cx = strand_complex(pm, s, 2);
        CHECK(cohomology(cx).dims[1] == 1);
    }
    SUBCASE("unknown names are rejected") {
        CHECK_THROWS_AS(builtin("mystery"), ModelError);
        CHECK_THROWS_AS(builtin("torus", 0), ModelError);
    }
}

TEST_CASE("polynomial de Rham strands satisfy the polynomial Poincare lemma") {
    for (int m : {2, 4}) {
        for (int h = 0; h <= 5; ++h) {
            auto cx = de_rham_strand(m, h);
            cx.validate(true);
            auto table = cohomology(cx).dims;
            for (int r = 0; r < static_cast<int>(table.size()); ++r) {
                int want = (h == 0 && r == 0) ? 1 : 0;
                CHECK(table[r] == want);
            }
        }
    }
}

TEST_CASE("strand complexes of the extended complex") {
    SUBCASE("symplectic m=4: the constants strand") {
        auto s = builtin_structure("torus", 2);
        auto cx = strand_complex(PolynomialModel{4, 6}, s, 0);
        CHECK(cx.dims[0] == 1);
        auto table = cohomology(cx).dims;
        CHECK(table[0] == 1);
        for (size_t r = 1; r < table.size(); ++r) CHECK(table[r] == 0);
    }
    SUBCASE("symplectic m=4: the h=2 strand carries the one-dimensional class") {
        auto s = builtin_structure("torus", 2);
        auto cx = strand_complex(PolynomialModel{4, 6}, s, 2);
        cx.validate(true);
        auto table = cohomology(cx).dims;
        CHECK(table[1] == 1);
        for (size_t r = 0; r < table.size(); ++r)
            if (r != 1) CHECK(table[r] == 0);
    }
    SUBCASE("symplectic m=4 sweep h <= 6: interior cohomology only at the two spots") {
        auto s = builtin_structure("torus", 2);
        StrandBuilder sb(make_calibration(s.kind, s.F));
        for (int h = 0; h <= 6; ++h) {
            auto cx = sb.strand(h);
            cx.validate(true);
            auto table = cohomology(cx).dims;
            for (size_t r = 0; r < table.size(); ++r) {
                int want = 0;
                if (h == 0 && r == 0) want = 1;
                if (h == 2 && r == 1) want = 1;
                CHECK(table[r] == want);
            }
        }
    }
    SUBCASE("G2 m=7 small strands: class at position 2 for h=3") {
        StrandBuilder sb(standard_g2());
        for (int h = 0; h <= 3; ++h) {
            auto cx = sb.strand(h);
            auto table = cohomology(cx).dims;
            for (size_t r = 0; r < table.size(); ++r) {
                int want = 0;
                if (h == 0 && r == 0) want = 1;
                if (h == 3 && r == 2) want = 1;
                CHECK(table[r] == want);
            }
        }
    }
    SUBCASE("conformal polynomial models are rejected") {
        auto s = builtin_structure("hopf4");
        CHECK_THROWS(strand_complex(PolynomialModel{4, 6}, s, 1));
    }
    SUBCASE("homogeneity above the declared bound is rejected") {
        auto s = builtin_structure("torus", 2);
        CHECK_THROWS(strand_complex(PolynomialModel{4, 2}, s, 3));
    }
}
