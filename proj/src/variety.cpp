#include "uniserial/variety.hpp"

#include <set>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uniserial {

std::vector<AlgebraElement> left_ideal_generators(const Presentation& pres, const Mast& mast,
                                                  size_t cap) {
    const Quiver& q = pres.quiver;
    // all paths from the mast's start vertex, by length
    std::vector<Path> frontier;
    Path e;
    e.source = mast.vertices[0];
    frontier.push_back(e);
    std::vector<Path> all = frontier;
    for (size_t len = 1; len <= cap; ++len) {
        std::vector<Path> next;
        for (const Path& w : frontier)
            for (int a : q.arrows_from(w.target(q))) {
                Path ext = w;
                ext.arrows.push_back(a);
                next.push_back(std::move(ext));
            }
        all.insert(all.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }

    std::vector<AlgebraElement> gens;
    for (const AlgebraElement& g : pres.relations) {
        if (g.is_zero()) continue;
        int src = g.terms().begin()->first.source;
        for (const Path& w : all) {
            if (w.target(q) != src) continue;
            auto shifted = g.composed_after(q, w);
            if (!shifted) throw InternalError("uniform relation failed to compose");
            gens.push_back(std::move(*shifted));
        }
    }
    return gens;
}

VarietyResult variety_generators(const Presentation& pres, const Path& p, bool parallel,
                                 size_t extra_cap) {
    VarietyResult result;
    result.table = enumerate_detours(pres, p);
    const DetourTable& table = result.table;
    std::vector<AlgebraElement> gens =
        left_ideal_generators(pres, table.mast, p.length() + extra_cap);

    std::vector<SymbolicElement> forms(gens.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(gens.size()); ++i)
            forms[static_cast<size_t>(i)] =
                normal_form(pres, table, gens[static_cast<size_t>(i)]);
    } else {
        for (size_t i = 0; i < gens.size(); ++i) forms[i] = normal_form(pres, table, gens[i]);
    }

    result.ideal = IdealBasis{pres.field, table.nvars, MonomialOrder::Grevlex, {}, false};
    std::set<Polynomial> seen;
    for (const SymbolicElement& f : forms)
        for (const Polynomial& c : f.coeffs) {
            if (c.is_zero()) continue;
            if (seen.insert(c).second) result.ideal.polys.push_back(c);
        }
    return result;
}

bool is_nonempty_variety(const Presentation& pres, const Path& p) {
    return !is_unit_ideal(variety_generators(pres, p).ideal);
}

bool point_on_variety(const IdealBasis& gens, const Vector& k) {
    if (k.size() != gens.nvars) throw ParseError("point length does not match variable count");
    for (const Polynomial& g : gens.polys)
        if (!g.evaluate(k).is_zero()) return false;
    return true;
}

Vector parse_point(const Field& field, const std::string& text, size_t expected) {
    Vector k;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty coordinate in point '" + text + "'");
        k.push_back(field.parse(cur.substr(a, b - a + 1)));
    }
    if (expected == 0 && text.find_first_not_of(" \t") == std::string::npos) k.clear();
    if (k.size() != expected)
        throw ParseError("expected " + std::to_string(expected) + " coordinates, got " +
                         std::to_string(k.size()));
    return k;
}

std::string point_str(const Vector& k) {
    std::string out;
    for (size_t i = 0; i < k.size(); ++i) {
        if (i) out += ",";
        out += k[i].str();
    }
    return out;
}

}  // namespace uniserial
