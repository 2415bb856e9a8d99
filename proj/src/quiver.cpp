#include "uniserial/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace uniserial {

int Quiver::add_vertex(const std::string& id) {
    if (vertex_by_name_.count(id)) throw ParseError("duplicate vertex '" + id + "'");
    int idx = static_cast<int>(vertices_.size());
    vertices_.push_back(id);
    vertex_by_name_[id] = idx;
    return idx;
}

int Quiver::add_arrow(const std::string& name, const std::string& source,
                      const std::string& target) {
    if (arrow_by_name_.count(name)) throw ParseError("duplicate arrow '" + name + "'");
    int s = vertex_index(source);
    int t = vertex_index(target);
    if (s < 0) throw ParseError("unknown vertex '" + source + "' in arrow '" + name + "'");
    if (t < 0) throw ParseError("unknown vertex '" + target + "' in arrow '" + name + "'");
    int idx = static_cast<int>(arrows_.size());
    arrows_.push_back(Arrow{name, s, t});
    arrow_by_name_[name] = idx;
    return idx;
}

int Quiver::vertex_index(const std::string& id) const {
    auto it = vertex_by_name_.find(id);
    return it == vertex_by_name_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& name) const {
    auto it = arrow_by_name_.find(name);
    return it == arrow_by_name_.end() ? -1 : it->second;
}

std::vector<int> Quiver::arrows_from(int v) const {
    std::vector<int> r;
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].source == v) r.push_back(static_cast<int>(i));
    std::sort(r.begin(), r.end(),
              [this](int a, int b) { return arrows_[a].name < arrows_[b].name; });
    return r;
}

std::vector<int> Quiver::arrows_between(int s, int t) const {
    std::vector<int> r;
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].source == s && arrows_[i].target == t) r.push_back(static_cast<int>(i));
    std::sort(r.begin(), r.end(),
              [this](int a, int b) { return arrows_[a].name < arrows_[b].name; });
    return r;
}

bool path_well_formed(const Quiver& q, const Path& p) {
    if (p.source < 0 || p.source >= static_cast<int>(q.vertex_count())) return false;
    int at = p.source;
    for (int a : p.arrows) {
        if (a < 0 || a >= static_cast<int>(q.arrow_count())) return false;
        if (q.arrow(a).source != at) return false;
        at = q.arrow(a).target;
    }
    return true;
}

std::optional<Path> compose(const Quiver& q, const Path& later, const Path& earlier) {
    if (later.source != earlier.target(q)) return std::nullopt;
    Path r = earlier;
    r.arrows.insert(r.arrows.end(), later.arrows.begin(), later.arrows.end());
    return r;
}

Path prefix(const Path& p, size_t n) {
    if (n > p.length()) throw InternalError("prefix length out of range");
    Path r;
    r.source = p.source;
    r.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<long>(n));
    return r;
}

bool is_prefix_of(const Path& q, const Path& p) {
    if (q.source != p.source || q.length() > p.length()) return false;
    return std::equal(q.arrows.begin(), q.arrows.end(), p.arrows.begin());
}

std::string path_str(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e(" + q.vertex_name(p.source) + ")";
    // latest arrow first; collapse runs into powers
    std::ostringstream out;
    bool first = true;
    size_t i = p.arrows.size();
    while (i > 0) {
        int a = p.arrows[i - 1];
        size_t run = 1;
        while (i > run && p.arrows[i - 1 - run] == a) ++run;
        if (!first) out << "*";
        first = false;
        out << q.arrow(a).name;
        if (run > 1) out << "^" << run;
        i -= run;
    }
    return out.str();
}

Path parse_path(const Quiver& q, const std::string& text) {
    // factors separated by '*', each "name" or "name^k"; leftmost factor
    // is applied last, so build right to left
    std::vector<std::pair<std::string, unsigned>> factors;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    while (true) {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '\''))
            ++pos;
        if (start == pos) throw ParseError("expected arrow name in path literal '" + text + "'");
        std::string name = text.substr(start, pos - start);
        unsigned exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            skip_ws();
            size_t es = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (es == pos) throw ParseError("expected exponent in path literal '" + text + "'");
            exp = static_cast<unsigned>(std::stoul(text.substr(es, pos - es)));
            if (exp == 0) throw ParseError("zero exponent in path literal '" + text + "'");
        }
        factors.emplace_back(name, exp);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '*')
            throw ParseError("unexpected character '" + std::string(1, text[pos]) +
                             "' in path literal '" + text + "'");
        ++pos;
    }

    Path p;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        int a = q.arrow_index(it->first);
        if (a < 0) throw ParseError("unknown arrow '" + it->first + "'");
        for (unsigned k = 0; k < it->second; ++k) {
            if (p.source == -1) {
                p.source = q.arrow(a).source;
            } else if (q.arrow(a).source != p.target(q)) {
                throw ParseError("arrows not composable in path literal '" + text + "'");
            }
            p.arrows.push_back(a);
        }
    }
    return p;
}

AlgebraElement AlgebraElement::single(Field f, const Path& p, const FieldElement& c) {
    AlgebraElement e(f);
    e.add_term(p, c);
    return e;
}

void AlgebraElement::add_term(const Path& p, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement r = *this;
    for (const auto& [p, c] : o.terms_) r.add_term(p, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + (-o); }

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(field_);
    for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const FieldElement& c) const {
    AlgebraElement r(field_);
    if (c.is_zero()) return r;
    for (const auto& [p, coeff] : terms_) r.terms_.emplace(p, coeff * c);
    return r;
}

std::optional<AlgebraElement> AlgebraElement::composed_after(const Quiver& q,
                                                            const Path& w) const {
    AlgebraElement r(field_);
    for (const auto& [p, c] : terms_) {
        auto comp = compose(q, p, w);
        if (!comp) return std::nullopt;
        r.add_term(*comp, c);
    }
    return r;
}

std::string AlgebraElement::str(const Quiver& q) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        mpq_class v = c.value();
        bool neg = v < 0;
        mpq_class av = neg ? mpq_class(-v) : v;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        if (av != 1) out << av.get_str() << "*";
        out << path_str(q, p);
    }
    return out.str();
}

void Presentation::validate() const {
    for (const AlgebraElement& rel : relations) {
        if (rel.is_zero()) throw ParseError("zero relation");
        int src = -1, tgt = -1;
        for (const auto& [p, c] : rel.terms()) {
            if (!path_well_formed(quiver, p)) throw ParseError("ill-formed path in relation");
            if (p.length() < 2)
                throw ParseError("relation contains a path of length < 2: " +
                                 path_str(quiver, p));
            int s = p.source, t = p.target(quiver);
            if (src == -1) {
                src = s;
                tgt = t;
            } else if (s != src || t != tgt) {
                throw ParseError("non-uniform relation: " + rel.str(quiver));
            }
        }
    }
}

}  // namespace uniserial
