#include "uniserial/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace uniserial {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder order) {
    if (order == MonomialOrder::Lex) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Monomial monomial_div(const Monomial& b, const Monomial& a) {
    Monomial r(b);
    for (size_t i = 0; i < r.size(); ++i) {
        if (a[i] > b[i]) throw InternalError("monomial division not exact");
        r[i] -= a[i];
    }
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Polynomial Polynomial::constant(Field f, unsigned nvars, const FieldElement& c) {
    Polynomial p(f, nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(Field f, unsigned nvars, unsigned index) {
    if (index >= nvars) throw InternalError("variable index out of range");
    Polynomial p(f, nvars);
    Monomial m(nvars, 0);
    m[index] = 1;
    p.add_term(m, f.one());
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (m.size() != nvars_) throw InternalError("monomial arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InternalError("variable-count mismatch");
    Polynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw InternalError("variable-count mismatch");
    Polynomial r(field_, nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(monomial_mul(m1, m2), c1 * c2);
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, coeff] : terms_) r.terms_.emplace(m, coeff * c);
    return r;
}

Polynomial Polynomial::term_multiplied(const Monomial& m, const FieldElement& c) const {
    Polynomial r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, coeff] : terms_) r.terms_.emplace(monomial_mul(mm, m), coeff * c);
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    auto a = terms_.begin(), b = o.terms_.begin();
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (a->first != b->first) return a->first < b->first;
        if (a->second != b->second) return a->second < b->second;
    }
    return b != o.terms_.end();
}

unsigned Polynomial::degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

unsigned Polynomial::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

Monomial Polynomial::leading_monomial(MonomialOrder order) const {
    if (is_zero()) throw InternalError("leading monomial of zero");
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (monomial_less(best->first, it->first, order)) best = it;
    return best->first;
}

FieldElement Polynomial::leading_coefficient(MonomialOrder order) const {
    return terms_.at(leading_monomial(order));
}

Polynomial Polynomial::monic(MonomialOrder order) const {
    if (is_zero()) return *this;
    return scaled(leading_coefficient(order).inverse());
}

FieldElement Polynomial::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != nvars_) throw InternalError("point arity mismatch");
    FieldElement acc = field_.zero();
    for (const auto& [m, c] : terms_) {
        FieldElement t = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
        acc = acc + t;
    }
    return acc;
}

Polynomial Polynomial::evaluate_partial(
    const std::vector<std::optional<FieldElement>>& assign) const {
    if (assign.size() != nvars_) throw InternalError("assignment arity mismatch");
    Polynomial r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
        FieldElement coeff = c;
        Monomial rest(nvars_, 0);
        for (size_t i = 0; i < nvars_; ++i) {
            if (assign[i]) {
                for (unsigned e = 0; e < m[i]; ++e) coeff = coeff * *assign[i];
            } else {
                rest[i] = m[i];
            }
        }
        r.add_term(rest, coeff);
    }
    return r;
}

Polynomial Polynomial::remap_variables(unsigned new_nvars,
                                       const std::vector<unsigned>& var_map) const {
    if (var_map.size() != nvars_) throw InternalError("variable map arity mismatch");
    Polynomial r(field_, new_nvars);
    for (const auto& [m, c] : terms_) {
        Monomial nm(new_nvars, 0);
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (var_map[i] >= new_nvars) throw InternalError("variable map out of range");
            nm[var_map[i]] += m[i];
        }
        r.add_term(nm, c);
    }
    return r;
}

std::string Polynomial::str(MonomialOrder order) const {
    if (is_zero()) return "0";
    std::vector<const std::pair<const Monomial, FieldElement>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [order](auto* a, auto* b) {
        return monomial_less(b->first, a->first, order);
    });
    std::ostringstream out;
    bool first = true;
    for (auto* t : ts) {
        const auto& [m, c] = *t;
        mpq_class v = c.value();
        bool neg = v < 0;
        mpq_class av = neg ? mpq_class(-v) : v;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        bool has_vars = total_degree(m) > 0;
        if (!has_vars || av != 1) {
            out << av.get_str();
            if (has_vars) out << "*";
        }
        bool firstv = true;
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << "X[" << (i + 1) << "]";
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t pos = 0;

    explicit PolyLexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw ParseError("expected '" + std::string(1, c) + "' at position " +
                             std::to_string(pos) + " in polynomial");
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) throw ParseError("expected number at position " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    unsigned integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ParseError("expected integer at position " + std::to_string(pos));
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, Field field, unsigned nvars) {
    PolyLexer lx(text);
    Polynomial result(field, nvars);
    bool first = true;
    while (!lx.eof()) {
        bool neg = false;
        if (lx.accept('-')) {
            neg = true;
        } else if (lx.accept('+')) {
            if (first) throw ParseError("polynomial cannot start with '+'");
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        first = false;

        FieldElement coeff = field.one();
        Monomial m(nvars, 0);
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            char c = lx.peek();
            if (c == 'X') {
                ++lx.pos;
                lx.expect('[');
                unsigned idx = lx.integer();
                lx.expect(']');
                if (idx < 1 || idx > nvars)
                    throw ParseError("variable index out of range: X[" + std::to_string(idx) + "]");
                unsigned exp = 1;
                if (lx.accept('^')) exp = lx.integer();
                m[idx - 1] += exp;
                saw_factor = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff = coeff * field.parse(lx.number());
                saw_factor = true;
            } else {
                throw ParseError("expected term at position " + std::to_string(lx.pos));
            }
            expect_factor = lx.accept('*');
        }
        if (!saw_factor) throw ParseError("empty term in polynomial");
        if (neg) coeff = -coeff;
        result.add_term(m, coeff);
    }
    if (first) throw ParseError("empty polynomial text");
    return result;
}

}  // namespace uniserial
