#include "uniserial/groebner.hpp"

#include <algorithm>
#include <deque>

namespace uniserial {

void IdealBasis::add(Polynomial p) {
    if (p.nvars() != nvars) throw InternalError("generator variable-count mismatch");
    polys.push_back(std::move(p));
    groebner = false;
}

Polynomial reduce(const Polynomial& p, const IdealBasis& basis) {
    if (p.nvars() != basis.nvars) throw InternalError("variable-count mismatch in reduce");
    Polynomial rem(basis.field, basis.nvars);
    Polynomial work = p;
    const MonomialOrder order = basis.order;
    while (!work.is_zero()) {
        Monomial lm = work.leading_monomial(order);
        FieldElement lc = work.leading_coefficient(order);
        bool reduced = false;
        for (const Polynomial& g : basis.polys) {
            if (g.is_zero()) continue;
            Monomial glm = g.leading_monomial(order);
            if (!monomial_divides(glm, lm)) continue;
            FieldElement factor = lc / g.leading_coefficient(order);
            work = work - g.term_multiplied(monomial_div(lm, glm), factor);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            Polynomial lt(basis.field, basis.nvars);
            lt.add_term(lm, lc);
            work = work - lt;
        }
    }
    return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
    Monomial lf = f.leading_monomial(order);
    Monomial lg = g.leading_monomial(order);
    Monomial l = monomial_lcm(lf, lg);
    Polynomial a = f.term_multiplied(monomial_div(l, lf), f.leading_coefficient(order).inverse());
    Polynomial b = g.term_multiplied(monomial_div(l, lg), g.leading_coefficient(order).inverse());
    return a - b;
}

}  // namespace

IdealBasis groebner_basis(const IdealBasis& gens) {
    IdealBasis basis{gens.field, gens.nvars, gens.order, {}, false};
    for (const Polynomial& p : gens.polys)
        if (!p.is_zero()) basis.polys.push_back(p.monic(gens.order));

    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.polys.size(); ++i)
        for (size_t j = i + 1; j < basis.polys.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const Polynomial& f = basis.polys[i];
        const Polynomial& g = basis.polys[j];
        Monomial lf = f.leading_monomial(gens.order);
        Monomial lg = g.leading_monomial(gens.order);
        // coprime leading monomials: S-polynomial reduces to zero
        if (monomial_lcm(lf, lg) == monomial_mul(lf, lg)) continue;
        Polynomial s = reduce(s_polynomial(f, g, gens.order), basis);
        if (s.is_zero()) continue;
        basis.polys.push_back(s.monic(gens.order));
        size_t k = basis.polys.size() - 1;
        for (size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.polys.size(); ++i) {
        Monomial lmi = basis.polys[i].leading_monomial(gens.order);
        bool redundant = false;
        for (size_t j = 0; j < basis.polys.size(); ++j) {
            if (i == j) continue;
            Monomial lmj = basis.polys[j].leading_monomial(gens.order);
            if (monomial_divides(lmj, lmi) && (lmj != lmi || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis.polys[i]);
    }

    // tail-reduce each element against the others
    IdealBasis result{gens.field, gens.nvars, gens.order, {}, true};
    for (size_t i = 0; i < minimal.size(); ++i) {
        IdealBasis others{gens.field, gens.nvars, gens.order, {}, false};
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.polys.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others);
        if (!r.is_zero()) result.polys.push_back(r.monic(gens.order));
    }
    std::sort(result.polys.begin(), result.polys.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return monomial_less(a.leading_monomial(gens.order),
                                       b.leading_monomial(gens.order), gens.order);
              });
    return result;
}

bool is_unit_ideal(const IdealBasis& gens) {
    IdealBasis gb = gens.groebner ? gens : groebner_basis(gens);
    for (const Polynomial& p : gb.polys)
        if (!p.is_zero() && p.is_constant()) return true;
    return false;
}

bool ideal_contains(const IdealBasis& basis, const Polynomial& p) {
    IdealBasis gb = basis.groebner ? basis : groebner_basis(basis);
    return reduce(p, gb).is_zero();
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
    if (a.nvars != b.nvars) throw InternalError("variable-count mismatch in ideal_equal");
    IdealBasis ga = a.groebner ? a : groebner_basis(a);
    IdealBasis gb = b.groebner ? b : groebner_basis(b);
    for (const Polynomial& p : a.polys)
        if (!reduce(p, gb).is_zero()) return false;
    for (const Polynomial& p : b.polys)
        if (!reduce(p, ga).is_zero()) return false;
    return true;
}

}  // namespace uniserial
