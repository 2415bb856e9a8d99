#pragma once

#include <vector>

#include "uniserial/polynomial.hpp"

namespace uniserial {

/// Ordered list of generators of a polynomial ideal. `groebner` marks a
/// reduced Groebner basis with monic elements.
struct IdealBasis {
    Field field;
    unsigned nvars = 0;
    MonomialOrder order = MonomialOrder::Grevlex;
    std::vector<Polynomial> polys;
    bool groebner = false;

    void add(Polynomial p);
};

/// Full remainder of p on division by the basis elements.
Polynomial reduce(const Polynomial& p, const IdealBasis& basis);

/// Buchberger with the chosen monomial order; the result is reduced and
/// monic.
IdealBasis groebner_basis(const IdealBasis& gens);

/// True iff the ideal is all of K[X], i.e. the reduced basis is {1}.
bool is_unit_ideal(const IdealBasis& gens);

/// Mutual reduction test: each generator of one side reduces to zero
/// modulo the Groebner basis of the other.
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Membership test via reduction.
bool ideal_contains(const IdealBasis& basis, const Polynomial& p);

}  // namespace uniserial
