#include "doctest.h"

#include "slrk/rational.hpp"
#include "slrk/tableau.hpp"

#include <random>
#include <string>

using namespace slrk;

namespace {

Rational R(const char* s) { return parse_rational(s); }

std::vector<Rational> Rs(std::initializer_list<const char*> xs) {
    std::vector<Rational> out;
    for (const char* x : xs) out.push_back(R(x));
    return out;
}

}  // namespace

TEST_SUITE("rational") {

TEST_CASE("parsing forms") {
    CHECK(R("3") == Rational(3));
    CHECK(R("-4/6") == Rational(-2, 3));
    CHECK(R("6/-4") == Rational(-3, 2));
    CHECK(R("0.125") == Rational(1, 8));
    CHECK(R("-1e-3") == Rational(-1, 1000));
    CHECK(R("2.5E2") == Rational(250));
    CHECK(to_string(R("10/4")) == "5/2");
    CHECK(to_string(R("-7")) == "-7");
}

TEST_CASE("malformed and zero-denominator input") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("lowest terms with positive denominator") {
    const Rational r = R("12/-18");
    CHECK(boost::multiprecision::numerator(r) == -2);
    CHECK(boost::multiprecision::denominator(r) == 3);
}

TEST_CASE("p/q times q/p is one over random small rationals") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pick(-50, 50);
    int checked = 0;
    while (checked < 500) {
        const int p = pick(rng);
        const int q = pick(rng);
        if (p == 0 || q == 0) continue;
        const Rational x = Rational(p) / q;
        CHECK(x * (Rational(q) / p) == 1);
        CHECK(x / x == 1);
        CHECK(pow(x, 3) * pow(x, -3) == 1);
        ++checked;
    }
}

TEST_CASE("division by zero throws") {
    const Rational zero = 0;
    CHECK_THROWS(Rational(1) / zero);
}

TEST_CASE("from_double is exact") {
    CHECK(from_double(0.5) == Rational(1, 2));
    CHECK(from_double(-3.0) == Rational(-3));
    CHECK(to_double(from_double(0.1)) == 0.1);
    CHECK(from_double(0.1) != Rational(1, 10));
}

TEST_CASE("best rational approximations") {
    CHECK(best_rational(0.333333333333, 10) == Rational(1, 3));
    CHECK(best_rational(3.14159265358979, 10) == Rational(22, 7));
    CHECK(best_rational(3.14159265358979, 1000) == Rational(355, 113));
    CHECK(best_rational(-29.0 / 44.0, 1000) == Rational(-29, 44));
    CHECK(best_rational(0.0, 5) == Rational(0));
    // Semiconvergent beats the last convergent here: pi ~ 311/99 with q <= 100.
    CHECK(best_rational(3.14159265358979, 100) == Rational(311, 99));
}

}  // TEST_SUITE

TEST_SUITE("tableau") {

TEST_CASE("eight-stage sixth-order coefficients") {
    const Tableau t = rk6_tableau();
    CHECK(t.stages() == 8);
    CHECK(t.c() == Rs({"0", "1/6", "1/6", "2/6", "3/6", "4/6", "5/6", "1"}));
    CHECK(t.b() == Rs({"13/200", "0", "4/25", "11/40", "0", "11/40", "4/25", "13/200"}));
    Rational sum = 0;
    for (const auto& b : t.b()) sum += b;
    CHECK(sum == 1);
    CHECK(t.a(3, 0) + t.a(3, 1) + t.a(3, 2) == Rational(1, 3));
}

TEST_CASE("classical tableaux") {
    CHECK(rk4_tableau().b() == Rs({"1/6", "1/3", "1/3", "1/6"}));
    CHECK(rk4_tableau().c() == Rs({"0", "1/2", "1/2", "1"}));
    CHECK(heun3_tableau().c() == Rs({"0", "1/3", "2/3"}));
    CHECK(euler_tableau().stages() == 1);
    CHECK(euler_tableau().b() == Rs({"1"}));
}

TEST_CASE("built-ins are explicit and row-sum consistent") {
    for (const auto& name : builtin_tableau_names()) {
        const auto t = builtin_tableau(name);
        REQUIRE(t.has_value());
        for (std::size_t i = 0; i < t->stages(); ++i) {
            Rational row = 0;
            for (std::size_t j = 0; j < t->stages(); ++j) {
                if (j >= i) CHECK(t->a(i, j) == 0);
                row += t->a(i, j);
            }
            CHECK(row == t->c()[i]);
            CHECK(t->c()[i] >= 0);
            CHECK(t->c()[i] <= 1);
        }
    }
    CHECK_FALSE(builtin_tableau("dopri").has_value());
}

TEST_CASE("spacing reports") {
    const auto rk6 = spacing_report(rk6_tableau());
    CHECK(rk6.conforming);
    REQUIRE(rk6.delta_c.has_value());
    CHECK(*rk6.delta_c == Rational(1, 6));
    using I = Increment;
    CHECK(rk6.increments == std::vector<I>{I::step, I::zero, I::step, I::step, I::step, I::step, I::step});

    CHECK(*spacing_report(rk4_tableau()).delta_c == Rational(1, 2));
    CHECK(*spacing_report(heun3_tableau()).delta_c == Rational(1, 3));

    const auto euler = spacing_report(euler_tableau());
    CHECK(euler.conforming);
    CHECK_FALSE(euler.delta_c.has_value());

    // c = [0, 1/4, 1]
    const Tableau uneven("uneven", {{}, {R("1/4")}, {R("1/2"), R("1/2")}}, Rs({"1/3", "1/3", "1/3"}));
    const auto bad = spacing_report(uneven);
    CHECK_FALSE(bad.conforming);
    CHECK_FALSE(bad.delta_c.has_value());

    // c = [0, 1/2, 1/4] goes backwards
    const Tableau backwards("back", {{}, {R("1/2")}, {R("1/4"), R("0")}}, Rs({"1/3", "1/3", "1/3"}));
    CHECK_FALSE(spacing_report(backwards).conforming);
}

TEST_CASE("constructor shape checks") {
    CHECK_THROWS_AS(Tableau("x", {{}, {R("1"), R("2")}}, Rs({"1", "0"})), std::invalid_argument);
    CHECK_THROWS_AS(Tableau("x", {{}}, Rs({"1", "0"})), std::invalid_argument);
    CHECK_THROWS_AS(Tableau("x", {}, {}), std::invalid_argument);
}

TEST_CASE("serialization") {
    const std::string text = serialize_tableau(rk4_tableau());
    CHECK(text.find("b: 1/6 1/3 1/3 1/6") != std::string::npos);
    for (const auto& name : builtin_tableau_names()) {
        const Tableau t = *builtin_tableau(name);
        const Tableau back = parse_tableau(serialize_tableau(t));
        CHECK(back == t);
        CHECK(back.c() == t.c());
        CHECK(back.name() == t.name());
    }
}

TEST_CASE("full-row and commented input") {
    const Tableau t = parse_tableau(
        "# heun 2\n"
        "stages 2\n"
        "0 0\n"
        "1 0\n"
        "b: 1/2 1/2\n"
        "name: heun2\n");
    CHECK(t.stages() == 2);
    CHECK(t.a(1, 0) == 1);
    CHECK(t.name() == "heun2");
}

TEST_CASE("parse errors are distinguished") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_tableau(text);
        } catch (const TableauParseError& e) {
            return e.kind();
        }
        FAIL("no parse error raised");
        return ParseErrorKind::malformed_structure;
    };
    CHECK(kind_of("stages 2\n\n1/0\nb: 1/2 1/2\n") == ParseErrorKind::malformed_rational);
    CHECK(kind_of("stages 2\n\n1/x\nb: 1/2 1/2\n") == ParseErrorKind::malformed_rational);
    CHECK(kind_of("stages 2\n0 1\n1 0\nb: 1/2 1/2\n") == ParseErrorKind::not_explicit);
    CHECK(kind_of("stages 2\n\n1 2 3\nb: 1/2 1/2\n") == ParseErrorKind::dimension_mismatch);
    CHECK(kind_of("stages 2\n\n1\nb: 1/2 1/2 0\n") == ParseErrorKind::dimension_mismatch);
    CHECK(kind_of("stages 2\n\n1\n") == ParseErrorKind::malformed_structure);
    CHECK(kind_of("steps 2\n\n1\nb: 1 0\n") == ParseErrorKind::malformed_structure);
    CHECK(kind_of("") == ParseErrorKind::malformed_structure);
}

TEST_CASE("float rendering") {
    const FloatTableau f = to_float(rk6_tableau());
    CHECK(f.stages() == 8);
    CHECK(f.a[7][1] == doctest::Approx(4.0 / 13.0).epsilon(1e-15));
    CHECK(f.c[3] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(f.a[2][5] == 0.0);
}

}  // TEST_SUITE
