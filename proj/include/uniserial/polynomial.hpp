#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uniserial/field.hpp"

namespace uniserial {

/// Exponent vector, dense, length = ambient variable count.
using Monomial = std::vector<unsigned>;

enum class MonomialOrder { Grevlex, Lex };

unsigned total_degree(const Monomial& m);
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& b, const Monomial& a);  // b / a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact coefficients. Zero
/// coefficients are never stored; equality is map equality.
class Polynomial {
public:
    Polynomial() : nvars_(0) {}
    Polynomial(Field f, unsigned nvars) : field_(f), nvars_(nvars) {}

    static Polynomial constant(Field f, unsigned nvars, const FieldElement& c);
    static Polynomial variable(Field f, unsigned nvars, unsigned index);  // 0-based

    const Field& field() const { return field_; }
    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, FieldElement>& terms() const { return terms_; }

    void add_term(const Monomial& m, const FieldElement& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial term_multiplied(const Monomial& m, const FieldElement& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }
    bool operator<(const Polynomial& o) const;  // arbitrary total order, for sets

    unsigned degree() const;                 // total degree, 0 for the zero polynomial
    unsigned degree_in(unsigned var) const;  // max exponent of one variable

    Monomial leading_monomial(MonomialOrder order) const;
    FieldElement leading_coefficient(MonomialOrder order) const;
    Polynomial monic(MonomialOrder order) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;
    /// Substitutes the assigned variables, keeps the rest symbolic.
    Polynomial evaluate_partial(const std::vector<std::optional<FieldElement>>& assign) const;
    /// Re-expresses the polynomial in a larger/smaller ambient ring;
    /// var_map[i] gives the new 0-based index of old variable i.
    Polynomial remap_variables(unsigned new_nvars, const std::vector<unsigned>& var_map) const;

    /// Renders terms in descending order of the given monomial order,
    /// e.g. "3/2*X[4]^2*X[7] - X[1] + 1".
    std::string str(MonomialOrder order = MonomialOrder::Grevlex) const;

private:
    Field field_;
    unsigned nvars_;
    std::map<Monomial, FieldElement> terms_;
};

/// Parses the textual polynomial syntax; variables are written X[i] with
/// 1-based indices. Inverse of Polynomial::str.
Polynomial parse_polynomial(const std::string& text, Field field, unsigned nvars);

}  // namespace uniserial
