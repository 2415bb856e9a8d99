#include "uniserial/iso.hpp"

#include <algorithm>
#include <sstream>

namespace uniserial {

namespace {

std::string var_name(unsigned i, unsigned n_per_family, unsigned t) {
    if (i < n_per_family) return "X[" + std::to_string(i + 1) + "]";
    if (i < 2 * n_per_family) return "Y[" + std::to_string(i - n_per_family + 1) + "]";
    if (i < 2 * n_per_family + t) return "Z[" + std::to_string(i - 2 * n_per_family + 1) + "]";
    throw InternalError("variable index outside X/Y/Z families");
}

}  // namespace

std::string IsoSystem::poly_str(const Polynomial& p) const {
    if (p.is_zero()) return "0";
    const unsigned n = table.nvars;
    const unsigned t = static_cast<unsigned>(cyclic_lens.size());
    std::vector<const std::pair<const Monomial, FieldElement>*> ts;
    for (const auto& term : p.terms()) ts.push_back(&term);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        return monomial_less(b->first, a->first, MonomialOrder::Grevlex);
    });
    std::ostringstream out;
    bool first = true;
    for (auto* term : ts) {
        const auto& [m, c] = *term;
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
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << var_name(static_cast<unsigned>(i), n, t);
            if (m[i] > 1) out << "^" << m[i];
        }
    }
    return out.str();
}

std::string IsoSystem::str() const {
    std::ostringstream out;
    for (const auto& [lhs, rhs] : equations)
        out << poly_str(lhs) << " = " << poly_str(rhs) << "\n";
    return out.str();
}

IsoSystem iso_system(const Presentation& pres, const Path& p) {
    IsoSystem sys;
    sys.table = enumerate_detours(pres, p);
    const DetourTable& table = sys.table;
    const Mast& mast = table.mast;
    const size_t l = mast.length();
    for (unsigned j = 1; j <= l; ++j)
        if (mast.vertices[j] == mast.vertices[0]) sys.cyclic_lens.push_back(j);

    const unsigned n = table.nvars;
    const unsigned t = static_cast<unsigned>(sys.cyclic_lens.size());
    const unsigned nv = 2 * n + t;
    const Field& field = pres.field;

    // z = e(1) + sum_j Z_j w_j, the generic top-element change
    std::vector<std::pair<Path, Polynomial>> z;
    z.emplace_back(prefix(mast.p, 0), Polynomial::constant(field, nv, field.one()));
    for (unsigned j = 0; j < t; ++j)
        z.emplace_back(prefix(mast.p, sys.cyclic_lens[j]),
                       Polynomial::variable(field, nv, 2 * n + j));

    auto composed_with_z = [&](const Path& head) {
        // head . z as a polynomial-coefficient path combination
        std::vector<std::pair<Path, Polynomial>> out;
        for (const auto& [w, coeff] : z) {
            auto comp = compose(pres.quiver, head, w);
            if (!comp) throw InternalError("cyclic prefix failed to compose");
            out.emplace_back(*comp, coeff);
        }
        return out;
    };

    for (const Detour& d : table.detours) {
        // one equation family per detour: sum_i X_i v_i z  =  alpha u z,
        // both sides rewritten with the Y-substitution equations
        std::vector<std::pair<Path, Polynomial>> lhs_terms;
        for (size_t i = 0; i < d.target_lens.size(); ++i) {
            Polynomial xi = Polynomial::variable(field, nv, d.first_var + static_cast<unsigned>(i));
            for (const auto& [path, coeff] : composed_with_z(prefix(mast.p, d.target_lens[i])))
                lhs_terms.emplace_back(path, coeff * xi);
        }
        Path au = prefix(mast.p, d.ulen);
        au.arrows.push_back(d.arrow);
        std::vector<std::pair<Path, Polynomial>> rhs_terms = composed_with_z(au);

        std::vector<Polynomial> lhs = normal_form_general(pres, table, lhs_terms, nv, n);
        std::vector<Polynomial> rhs = normal_form_general(pres, table, rhs_terms, nv, n);
        for (size_t v = 0; v <= l; ++v) {
            if (lhs[v] == rhs[v]) continue;
            sys.equations.emplace_back(lhs[v], rhs[v]);
        }
    }
    return sys;
}

IsoResult decide_iso(const Presentation& pres, const VarietyResult& variety,
                     const IsoSystem& sys, const Vector& k, const Vector& k2) {
    if (!point_on_variety(variety.ideal, k) || !point_on_variety(variety.ideal, k2))
        throw ParseError("point does not lie on the variety of the mast");
    const unsigned n = sys.table.nvars;
    const unsigned t = static_cast<unsigned>(sys.cyclic_lens.size());
    std::vector<std::optional<FieldElement>> assign(sys.nvars());
    for (unsigned i = 0; i < n; ++i) {
        assign[i] = k[i];
        assign[n + i] = k2[i];
    }

    LinearSystem lin{pres.field, t, {}, {}};
    for (const auto& [lhs, rhs] : sys.equations) {
        Polynomial diff = (lhs - rhs).evaluate_partial(assign);
        Vector row(t, pres.field.zero());
        FieldElement rhs_val = pres.field.zero();
        for (const auto& [m, c] : diff.terms()) {
            if (total_degree(m) == 0) {
                rhs_val = rhs_val - c;
                continue;
            }
            if (total_degree(m) != 1)
                throw InternalError("isomorphism system is not linear in Z");
            size_t var = 0;
            while (m[var] == 0) ++var;
            if (var < 2 * n) throw InternalError("specialized system retains X/Y variables");
            row[var - 2 * n] = row[var - 2 * n] + c;
        }
        lin.add_equation(std::move(row), rhs_val);
    }
    LinearSolution sol = solve_linear(lin);
    IsoResult r;
    r.isomorphic = sol.consistent;
    if (sol.consistent) r.witness = sol.particular;
    return r;
}

std::optional<Vector> transport_mast(const Presentation& pres, const Path& p, const Path& q,
                                     const Vector& k) {
    Mast mp = make_mast(pres.quiver, p);
    Mast mq = make_mast(pres.quiver, q);
    if (mp.vertices != mq.vertices)
        throw ParseError("masts do not pass through the same vertex sequence");

    VarietyResult vp = variety_generators(pres, p);
    UniserialModule mod = build_module(pres, vp, k);
    const size_t l = mp.length();
    const size_t dim = l + 1;

    // images of the prefixes of q on the canonical top element
    std::vector<Vector> c(dim);
    c[0] = Vector(dim, pres.field.zero());
    c[0][0] = pres.field.one();
    for (size_t j = 1; j <= l; ++j)
        c[j] = matrix_apply(mod.action[static_cast<size_t>(q.arrows[j - 1])], c[j - 1]);
    bool q_acts = false;
    for (const FieldElement& e : c[l])
        if (!e.is_zero()) q_acts = true;
    if (!q_acts) return std::nullopt;  // q is not a mast of this module

    DetourTable tq = enumerate_detours(pres, q);
    Vector result(tq.nvars, pres.field.zero());
    for (const Detour& d : tq.detours) {
        Vector lhs = matrix_apply(mod.action[static_cast<size_t>(d.arrow)], c[d.ulen]);
        const size_t s = d.target_lens.size();
        LinearSystem sys{pres.field, static_cast<unsigned>(s), {}, {}};
        for (size_t r = 0; r < dim; ++r) {
            Vector row(s, pres.field.zero());
            for (size_t i = 0; i < s; ++i) row[i] = c[d.target_lens[i]][r];
            sys.add_equation(std::move(row), lhs[r]);
        }
        LinearSolution sol = solve_linear(sys);
        if (!sol.consistent)
            throw InternalError("detour image is not spanned by the prefix images");
        for (size_t i = 0; i < s; ++i) result[d.first_var + i] = sol.particular[i];
    }

    VarietyResult vq = variety_generators(pres, q);
    if (!point_on_variety(vq.ideal, result))
        throw InternalError("transported point is off the target variety");
    return result;
}

DetourBijection detour_bijection(const Presentation& pres, const Path& p, const Path& q) {
    Mast mp = make_mast(pres.quiver, p);
    Mast mq = make_mast(pres.quiver, q);
    if (mp.vertices != mq.vertices)
        throw ParseError("masts do not pass through the same vertex sequence");

    DetourTable tp = enumerate_detours(pres, p);
    DetourTable tq = enumerate_detours(pres, q);
    DetourBijection b;
    b.detour_map.resize(tp.detours.size());
    b.variable_map.resize(tp.nvars);
    for (size_t di = 0; di < tp.detours.size(); ++di) {
        const Detour& d = tp.detours[di];
        // composition of single-arrow swaps: at a position where p and q
        // differ, q's arrow as a detour on p maps to p's arrow on q
        int image_arrow = d.arrow;
        if (d.ulen < p.length() && p.arrows[d.ulen] != q.arrows[d.ulen] &&
            d.arrow == q.arrows[d.ulen])
            image_arrow = p.arrows[d.ulen];
        int qi = tq.find(image_arrow, d.ulen);
        if (qi < 0) throw InternalError("detour has no image on the other mast");
        const Detour& e = tq.detours[static_cast<size_t>(qi)];
        if (e.target_lens != d.target_lens)
            throw InternalError("detour bijection does not preserve target lists");
        b.detour_map[di] = static_cast<size_t>(qi);
        for (size_t i = 0; i < d.target_lens.size(); ++i)
            b.variable_map[d.first_var + i] = e.first_var + static_cast<unsigned>(i);
    }
    return b;
}

}  // namespace uniserial
