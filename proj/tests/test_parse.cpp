#include <catch_amalgamated.hpp>

#include "nilalg/nilalg.hpp"
#include "support/random_scalars.hpp"

using namespace nilalg;
using Catch::Matchers::ContainsSubstring;

namespace {

const Scalar a = Scalar::parameter();
const Scalar I = Scalar::i();

Scalar q(long p, long r = 1) { return Scalar(GaussianRational(Rational(p, r))); }

ParseError parse_error(std::string_view text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("expected a parse error for: " << text);
    return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("scalar syntax", "[parse]") {
    CHECK(parse_scalar("1-i") == q(1) - I);
    CHECK(parse_scalar("2a") == q(2) * a);
    CHECK(parse_scalar("2*a") == q(2) * a);
    CHECK(parse_scalar("a^2+a") == a * a + a);
    CHECK(parse_scalar("-1/2") == q(-1, 2));
    CHECK(parse_scalar("-a^2") == -(a * a));
    CHECK(parse_scalar("(1-a)(1+a)") == q(1) - a * a);
    CHECK(parse_scalar("a^-1") == a.inverse());
    CHECK(parse_scalar("3/4i") == q(3, 4) * I);
    CHECK(parse_scalar("1/(a+1)") == (a + q(1)).inverse());
    CHECK(parse_scalar("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
    CHECK(parse_constant("(1+i)/2") == GaussianRational(Rational(1, 2), Rational(1, 2)));
    CHECK_THROWS_WITH(parse_constant("a+1"), ContainsSubstring("parameter 'a' is not allowed"));
    CHECK_THROWS_WITH(parse_scalar("1/0"), ContainsSubstring("zero divisor"));
    CHECK_THROWS_AS(parse_scalar("1+"), ParseError);
    CHECK_THROWS_AS(parse_scalar("b"), ParseError);
}

TEST_CASE("scalar printing reparses", "[parse][property]") {
    nilalg::testing::ScalarGen gen(5);
    for (int k = 0; k < 500; ++k) {
        const Scalar s = gen.scalar(3, 9);
        REQUIRE(parse_scalar(s.to_string()) == s);
    }
}

TEST_CASE("minimal algebra file", "[parse]") {
    const StructureConstants A = parse_algebra("dim 2\ne1*e1 = e2");
    REQUIRE(A.dim() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(A.coefficient(i, j, k) == ((i == 0 && j == 0 && k == 1) ? q(1) : q(0)));
    CHECK_FALSE(A.is_parametric());
}

TEST_CASE("gaussian coefficients in products", "[parse]") {
    const StructureConstants A = parse_algebra("dim 5\ne4*e1 = (1-i) e2 + i e5\n");
    CHECK(A.coefficient(3, 0, 1) == q(1) - I);
    CHECK(A.coefficient(3, 0, 4) == I);
    CHECK(A.coefficient(3, 0, 0).is_zero());
}

TEST_CASE("parametric coefficients in products", "[parse]") {
    const StructureConstants A = parse_algebra("dim 5 param a\ne4*e4 = -a e2 + (1+a) e5\n");
    CHECK(A.coefficient(3, 3, 1) == -a);
    CHECK(A.coefficient(3, 3, 4) == q(1) + a);
    CHECK(A.is_parametric());
}

TEST_CASE("header, comments and names", "[parse]") {
    const StructureConstants A = parse_algebra(
        "# leading comment\n\ndim 3 name \"demo\"  # trailing\n"
        "e1*e2 = 1/2 e3 - e3 + 2*e1  # coefficients accumulate\n");
    CHECK(A.name() == "demo");
    CHECK(A.coefficient(0, 1, 2) == q(-1, 2));
    CHECK(A.coefficient(0, 1, 0) == q(2));
}

TEST_CASE("parse errors carry positions", "[parse]") {
    const ParseError e1 = parse_error("dim 2\ne1*e1 = q e2");
    CHECK(e1.line() == 2);
    CHECK(e1.column() == 9);
    CHECK_THAT(std::string(e1.what()), ContainsSubstring("line 2, column 9"));

    const ParseError e2 = parse_error("dim 2\ne1*e3 = e2");
    CHECK(e2.line() == 2);
    CHECK(e2.column() == 4);
    CHECK_THAT(e2.message(), ContainsSubstring("out of range 1..2"));

    const ParseError e3 = parse_error("dim 2\ne1*e1 = e2\ne2*e2 = e1\ne1*e1 = e1\n");
    CHECK(e3.line() == 4);
    CHECK_THAT(e3.message(), ContainsSubstring("duplicate definition of e1*e1 (first defined on line 2)"));

    const ParseError e4 = parse_error("dim 2\ne1*e1 = e2 e1");
    CHECK(e4.line() == 2);

    CHECK_THAT(parse_error("e1*e1 = e2").message(), ContainsSubstring("expected header"));
    CHECK_THAT(parse_error("dim 0").message(), ContainsSubstring("dimension"));
    CHECK_THAT(parse_error("dim 2\ne1 e1 = e2").message(), ContainsSubstring("'*'"));
    CHECK_THAT(parse_error("dim 2 name \"x").message(), ContainsSubstring("unterminated"));
    CHECK_THAT(parse_error("dim 2\ne1*e1 = e2 $").message(), ContainsSubstring("unexpected character"));
    CHECK_THAT(parse_error("dim 2\ne1*e1 = e2\ndim 3").message(), ContainsSubstring("outside the header"));
}

TEST_CASE("only the single parameter a", "[parse]") {
    CHECK_THAT(parse_error("dim 2 param b\ne1*e1 = e2").message(),
               ContainsSubstring("only the single parameter 'a' is supported"));
    CHECK_THAT(parse_error("dim 2\ne1*e1 = a e2").message(), ContainsSubstring("parameter 'a' is not allowed"));
    CHECK_THAT(parse_error("dim 2 param a\ne1*e1 = b e2").message(), ContainsSubstring("unknown symbol"));
}

TEST_CASE("print and parse round trip", "[parse][property]") {
    for (const auto& e : load_catalog()) {
        const std::string text = print_algebra(e.algebra, e.provenance_notes);
        const StructureConstants back = parse_algebra(text);
        INFO(e.id << "\n" << text);
        REQUIRE(back == e.algebra);
        REQUIRE(print_algebra(back, e.provenance_notes) == text);
    }

    nilalg::testing::ScalarGen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        StructureConstants A(4, "random");
        for (int k = 0; k < 12; ++k) {
            const auto i = static_cast<std::size_t>(gen.integer(0, 3));
            const auto j = static_cast<std::size_t>(gen.integer(0, 3));
            const auto l = static_cast<std::size_t>(gen.integer(0, 3));
            A.set(i, j, l, gen.scalar(2, 6));
        }
        const StructureConstants back = parse_algebra(print_algebra(A));
        REQUIRE(back == A);
    }
}

TEST_CASE("combination formatting", "[parse]") {
    const Vector v{q(0), q(-1), q(1, 2), -I, q(1) - I};
    CHECK(format_combination(v, {"e1", "e2", "e3", "e4", "e5"}) == "-e2 + 1/2 e3 - i e4 + (1-i) e5");
    CHECK(format_combination(Vector(3), {"x", "y", "z"}) == "0");
}
