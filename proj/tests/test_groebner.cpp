#include <random>

#include "doctest.h"
#include "uniserial/groebner.hpp"

using namespace uniserial;

namespace {

IdealBasis basis(const Field& f, unsigned nvars, std::initializer_list<const char*> gens,
                 MonomialOrder order = MonomialOrder::Grevlex) {
    IdealBasis b{f, nvars, order, {}, false};
    for (const char* g : gens) b.add(parse_polynomial(g, f, nvars));
    return b;
}

}  // namespace

TEST_CASE("reduction by a groebner basis") {
    Field q;
    IdealBasis gb = groebner_basis(basis(q, 2, {"X[1]^2 - X[2]", "X[2]^2 - 1"}));
    CHECK(gb.groebner);
    // X1^4 reduces to its normal form 1 via X1^2 -> X2, X2^2 -> 1
    CHECK(reduce(parse_polynomial("X[1]^4", q, 2), gb) == parse_polynomial("1", q, 2));
    CHECK(reduce(parse_polynomial("X[1]^2 - X[2]", q, 2), gb).is_zero());
}

TEST_CASE("groebner computation is idempotent") {
    Field q;
    IdealBasis g1 = groebner_basis(
        basis(q, 3, {"X[1]*X[2] - X[3]", "X[2]*X[3] - X[1]", "X[1]*X[3] - X[2]"}));
    IdealBasis g2 = groebner_basis(g1);
    CHECK(g1.polys == g2.polys);
    for (const Polynomial& p : g1.polys)
        CHECK(p.leading_coefficient(g1.order).is_one());
}

TEST_CASE("unit ideal detection") {
    Field q;
    CHECK(is_unit_ideal(basis(q, 2, {"X[1]*X[2] - 1", "X[2]"})));
    CHECK(is_unit_ideal(basis(q, 1, {"2"})));
    CHECK(!is_unit_ideal(basis(q, 2, {"X[1]*X[2] - 1"})));
    CHECK(!is_unit_ideal(basis(q, 2, {})));
}

TEST_CASE("ideal equality is presentation independent") {
    Field q;
    // same ideal written with different generators
    IdealBasis a = basis(q, 2, {"X[1] - X[2]", "X[2]^2 - 1"});
    IdealBasis b = basis(q, 2, {"X[1] - X[2]", "X[1]*X[2] - 1", "X[1]^2 - 1"});
    CHECK(ideal_equal(a, b));
    IdealBasis c = basis(q, 2, {"X[1] - X[2]"});
    CHECK(!ideal_equal(a, c));
}

TEST_CASE("membership via reduction") {
    Field q;
    IdealBasis circle = basis(q, 2, {"X[1]^2 + X[2]^2 - 1"});
    CHECK(ideal_contains(circle, parse_polynomial("X[1]^4 + X[1]^2*X[2]^2 - X[1]^2", q, 2)));
    CHECK(!ideal_contains(circle, parse_polynomial("X[1]", q, 2)));
}

TEST_CASE("lex elimination order") {
    Field q;
    // projection of the twisted cubic onto (X2, X3) contains X2^3 - X3^2...
    // eliminate X1 from (X2 - X1^2, X3 - X1^3)
    IdealBasis gb = groebner_basis(
        basis(q, 3, {"X[2] - X[1]^2", "X[3] - X[1]^3"}, MonomialOrder::Lex));
    CHECK(ideal_contains(gb, parse_polynomial("X[2]^3 - X[3]^2", q, 3)));
}

TEST_CASE("buchberger result contains the generators") {
    Field f5(5);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<unsigned> exp(0, 2);
    for (int trial = 0; trial < 20; ++trial) {
        IdealBasis gens{f5, 3, MonomialOrder::Grevlex, {}, false};
        for (int g = 0; g < 3; ++g) {
            Polynomial p(f5, 3);
            for (int t = 0; t < 3; ++t) {
                Monomial m(3, 0);
                for (unsigned v = 0; v < 3; ++v) m[v] = exp(rng);
                p.add_term(m, f5.from_long(coeff(rng)));
            }
            gens.add(p);
        }
        IdealBasis gb = groebner_basis(gens);
        for (const Polynomial& g : gens.polys) CHECK(reduce(g, gb).is_zero());
    }
}
