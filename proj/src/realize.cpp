#include "uniserial/realize.hpp"

#include <algorithm>

#include "json.hpp"

namespace uniserial {

MultilinearSystem multilinearize(const RealizationInput& input) {
    if (input.nvars < 1) throw ParseError("at least one variable required");
    std::vector<unsigned> d(input.nvars, 1);
    for (const Polynomial& f : input.polys)
        for (unsigned i = 0; i < input.nvars; ++i) d[i] = std::max(d[i], f.degree_in(i));

    MultilinearSystem ml;
    std::vector<unsigned> offset(input.nvars, 0);
    for (unsigned i = 0; i < input.nvars; ++i) {
        offset[i] = ml.nvars;
        for (unsigned s = 0; s < d[i]; ++s) ml.origin.emplace_back(i, s);
        ml.nvars += d[i];
    }

    for (const Polynomial& f : input.polys) {
        Polynomial g(input.field, ml.nvars);
        for (const auto& [m, c] : f.terms()) {
            Monomial nm(ml.nvars, 0);
            for (unsigned i = 0; i < input.nvars; ++i)
                for (unsigned s = 0; s < m[i]; ++s) nm[offset[i] + s] = 1;
            g.add_term(nm, c);
        }
        ml.polys.push_back(std::move(g));
    }
    for (unsigned i = 0; i < input.nvars; ++i)
        for (unsigned s = 1; s < d[i]; ++s) {
            Polynomial diff = Polynomial::variable(input.field, ml.nvars, offset[i]) -
                              Polynomial::variable(input.field, ml.nvars, offset[i] + s);
            ml.polys.push_back(std::move(diff));
        }
    return ml;
}

namespace {

// r_j = sum over terms of c(A) * p(A), where p_i(A) is the shortcut
// gamma_i when i is in A and the mast chunk beta_i alpha_i otherwise.
AlgebraElement relation_for(const Presentation& pres, const Polynomial& f, unsigned m) {
    AlgebraElement rel(pres.field);
    for (const auto& [mono, c] : f.terms()) {
        Path path;
        path.source = pres.quiver.vertex_index("1");
        for (unsigned i = 1; i <= m; ++i) {
            if (mono[i - 1] == 1) {
                path.arrows.push_back(pres.quiver.arrow_index("gamma" + std::to_string(i)));
            } else {
                path.arrows.push_back(pres.quiver.arrow_index("alpha" + std::to_string(i)));
                path.arrows.push_back(pres.quiver.arrow_index("beta" + std::to_string(i)));
            }
        }
        rel.add_term(path, c);
    }
    return rel;
}

}  // namespace

Realization realize_variety(const RealizationInput& input) {
    Realization r;
    r.multilinear = multilinearize(input);

    // a bare single-variable system over one variable would emit the
    // length-1 relation path gamma_1; pad with a zero-constrained variable
    bool needs_pad = false;
    if (r.multilinear.nvars == 1) {
        Monomial bare(1, 0);
        bare[0] = 1;
        for (const Polynomial& f : r.multilinear.polys)
            if (f.terms().count(bare)) needs_pad = true;
    }
    if (needs_pad) {
        MultilinearSystem padded;
        padded.nvars = 2;
        padded.origin = r.multilinear.origin;
        padded.origin.emplace_back(input.nvars, 0u);  // fresh variable
        std::vector<unsigned> map{0};
        for (const Polynomial& f : r.multilinear.polys)
            padded.polys.push_back(f.remap_variables(2, map));
        padded.polys.push_back(Polynomial::variable(input.field, 2, 1));
        r.multilinear = std::move(padded);
        r.padded = true;
    }

    const unsigned m = r.multilinear.nvars;
    Presentation& pres = r.presentation;
    pres.field = input.field;
    for (unsigned v = 1; v <= 2 * m + 1; ++v) pres.quiver.add_vertex(std::to_string(v));
    for (unsigned i = 1; i <= m; ++i) {
        std::string s = std::to_string(i);
        pres.quiver.add_arrow("alpha" + s, std::to_string(2 * i - 1), std::to_string(2 * i));
        pres.quiver.add_arrow("beta" + s, std::to_string(2 * i), std::to_string(2 * i + 1));
        pres.quiver.add_arrow("gamma" + s, std::to_string(2 * i - 1), std::to_string(2 * i + 1));
    }
    r.mast.source = pres.quiver.vertex_index("1");
    for (unsigned i = 1; i <= m; ++i) {
        r.mast.arrows.push_back(pres.quiver.arrow_index("alpha" + std::to_string(i)));
        r.mast.arrows.push_back(pres.quiver.arrow_index("beta" + std::to_string(i)));
    }
    for (const Polynomial& f : r.multilinear.polys) {
        if (f.is_zero()) continue;
        pres.relations.push_back(relation_for(pres, f, m));
    }
    pres.validate();
    return r;
}

bool verify_realization(const Realization& r) {
    VarietyResult v = variety_generators(r.presentation, r.mast);
    const unsigned m = r.multilinear.nvars;
    if (v.table.nvars != m) throw InternalError("constructed mast has the wrong variable count");
    for (size_t i = 0; i < v.table.detours.size(); ++i) {
        const Detour& d = v.table.detours[i];
        if (d.target_lens.size() != 1 || d.ulen != 2 * i ||
            r.presentation.quiver.arrow(d.arrow).name != "gamma" + std::to_string(i + 1))
            throw InternalError("constructed detour table is not the shortcut family");
    }
    IdealBasis expect{r.presentation.field, m, MonomialOrder::Grevlex, {}, false};
    for (const Polynomial& f : r.multilinear.polys)
        if (!f.is_zero()) expect.polys.push_back(f);
    return ideal_equal(v.ideal, expect);
}

std::string realization_json(const Realization& r) {
    nlohmann::json vars = nlohmann::json::array();
    for (size_t j = 0; j < r.multilinear.origin.size(); ++j) {
        nlohmann::json e;
        e["mast_variable"] = j + 1;
        bool fresh = r.padded && j + 1 == r.multilinear.origin.size();
        if (fresh) {
            e["input_variable"] = nullptr;
            e["role"] = "padding";
        } else {
            e["input_variable"] = r.multilinear.origin[j].first + 1;
            e["copy"] = r.multilinear.origin[j].second + 1;
        }
        vars.push_back(e);
    }
    nlohmann::json root;
    root["variables"] = vars;
    root["padded"] = r.padded;
    return root.dump(2);
}

}  // namespace uniserial
