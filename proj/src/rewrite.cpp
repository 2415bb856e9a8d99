#include "uniserial/rewrite.hpp"

#include <random>

namespace uniserial {

namespace {

// Length of the longest common prefix of q and the mast.
size_t common_prefix_len(const Path& q, const Mast& mast) {
    size_t n = std::min(q.length(), mast.length());
    size_t c = 0;
    while (c < n && q.arrows[c] == mast.p.arrows[c]) ++c;
    return c;
}

// Substitution rewriting over an abstract coefficient ring. MulVar maps
// (coefficient, global variable index) to the scaled coefficient.
template <typename C, typename MulVar>
std::vector<C> rewrite(const Presentation& pres, const DetourTable& table,
                       std::vector<std::pair<Path, C>> initial, const C& zero, MulVar mul_var,
                       RewriteStrategy strategy, unsigned seed) {
    const Quiver& quiver = pres.quiver;
    const Mast& mast = table.mast;
    const size_t l = mast.length();

    struct Term {
        Path path;
        C coeff;
        size_t depth;
    };
    std::vector<Term> work;
    for (auto& [q, c] : initial) work.push_back(Term{std::move(q), std::move(c), 0});

    std::vector<C> result(l + 1, zero);
    std::mt19937 rng(seed);

    size_t guard = 0;
    while (!work.empty()) {
        if (++guard > 1000000) throw InternalError("rewriting did not terminate");
        size_t pick = work.size() - 1;
        if (strategy == RewriteStrategy::RandomizedLazy)
            pick = std::uniform_int_distribution<size_t>(0, work.size() - 1)(rng);
        Term term = std::move(work[pick]);
        work.erase(work.begin() + static_cast<long>(pick));

        const Path& q = term.path;
        if (term.coeff.is_zero()) continue;
        if (is_prefix_of(q, mast.p)) {
            result[q.length()] = result[q.length()] + term.coeff;
            continue;
        }
        if (strategy == RewriteStrategy::Rightmost && !is_route(quiver, mast, q)) continue;
        if (term.depth > l + 1) throw InternalError("rewriting chain exceeded the mast length");

        size_t c = common_prefix_len(q, mast);
        if (c >= q.length()) throw InternalError("non-prefix term with full common prefix");
        int alpha = q.arrows[c];
        int di = table.find(alpha, static_cast<unsigned>(c));
        if (di < 0) {
            if (strategy == RewriteStrategy::Rightmost)
                throw InternalError("route without a detour decomposition");
            continue;  // stuck, hence not a route: congruent to 0
        }
        const Detour& d = table.detours[static_cast<size_t>(di)];
        // q = tail . alpha . u with u the common prefix; replace alpha.u by
        // its substitution equation
        for (size_t i = 0; i < d.target_lens.size(); ++i) {
            Path np = prefix(mast.p, d.target_lens[i]);
            np.arrows.insert(np.arrows.end(), q.arrows.begin() + static_cast<long>(c) + 1,
                             q.arrows.end());
            work.push_back(Term{std::move(np), mul_var(term.coeff, d.first_var + i),
                                term.depth + 1});
        }
    }
    return result;
}

}  // namespace

SymbolicElement normal_form(const Presentation& pres, const DetourTable& table,
                            const AlgebraElement& z, RewriteStrategy strategy, unsigned seed) {
    Polynomial zero(pres.field, table.nvars);
    auto mul_var = [&](const Polynomial& c, unsigned var) {
        return c * Polynomial::variable(pres.field, table.nvars, var);
    };
    std::vector<std::pair<Path, Polynomial>> initial;
    for (const auto& [q, c] : z.terms())
        initial.emplace_back(q, Polynomial::constant(pres.field, table.nvars, c));
    SymbolicElement out;
    out.coeffs = rewrite<Polynomial>(pres, table, std::move(initial), zero, mul_var, strategy,
                                     seed);
    return out;
}

Vector normal_form_at(const Presentation& pres, const DetourTable& table,
                      const AlgebraElement& z, const Vector& point) {
    if (point.size() != table.nvars)
        throw ParseError("point length does not match the variable count");
    FieldElement zero = pres.field.zero();
    auto mul_var = [&](const FieldElement& c, unsigned var) { return c * point[var]; };
    std::vector<std::pair<Path, FieldElement>> initial;
    for (const auto& [q, c] : z.terms()) initial.emplace_back(q, c);
    return rewrite<FieldElement>(pres, table, std::move(initial), zero, mul_var,
                                 RewriteStrategy::Rightmost, 0);
}

std::vector<Polynomial> normal_form_general(const Presentation& pres, const DetourTable& table,
                                            const std::vector<std::pair<Path, Polynomial>>& z,
                                            unsigned ambient_nvars, unsigned var_offset) {
    Polynomial zero(pres.field, ambient_nvars);
    auto mul_var = [&](const Polynomial& c, unsigned var) {
        return c * Polynomial::variable(pres.field, ambient_nvars, var_offset + var);
    };
    return rewrite<Polynomial>(pres, table, z, zero, mul_var, RewriteStrategy::Rightmost, 0);
}

}  // namespace uniserial
