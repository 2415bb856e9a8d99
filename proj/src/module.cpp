#include "uniserial/module.hpp"

#include <sstream>

namespace uniserial {

UniserialModule build_module(const Presentation& pres, const VarietyResult& variety,
                             const Vector& k) {
    if (!point_on_variety(variety.ideal, k))
        throw ParseError("point does not lie on the variety of the mast");

    const Quiver& quiver = pres.quiver;
    const Mast& mast = variety.table.mast;
    const size_t l = mast.length();
    const size_t dim = l + 1;

    UniserialModule m;
    m.pres = &pres;
    m.mast = mast;
    m.point = k;
    m.action.assign(quiver.arrow_count(), zero_matrix(pres.field, dim, dim));

    for (size_t a = 0; a < quiver.arrow_count(); ++a) {
        const Arrow& ar = quiver.arrow(a);
        for (size_t j = 0; j <= l; ++j) {
            if (mast.vertices[j] != ar.source) continue;
            Path gp = prefix(mast.p, j);
            gp.arrows.push_back(static_cast<int>(a));
            Vector col = normal_form_at(pres, variety.table,
                                        AlgebraElement::single(pres.field, gp, pres.field.one()),
                                        k);
            for (size_t r = 0; r < dim; ++r) m.action[a][r][j] = col[r];
        }
    }

    // vertex grading and strict lower shift
    for (size_t a = 0; a < quiver.arrow_count(); ++a) {
        const Arrow& ar = quiver.arrow(a);
        for (size_t r = 0; r < dim; ++r)
            for (size_t j = 0; j < dim; ++j) {
                if (m.action[a][r][j].is_zero()) continue;
                if (mast.vertices[j] != ar.source || mast.vertices[r] != ar.target)
                    throw InternalError("arrow action violates the vertex grading");
                if (r <= j) throw InternalError("arrow action is not strictly layer-lowering");
            }
    }
    // mast action: p applied to b_0 gives exactly b_l
    Vector b(dim, pres.field.zero());
    b[0] = pres.field.one();
    for (int a : mast.p.arrows) b = matrix_apply(m.action[static_cast<size_t>(a)], b);
    for (size_t r = 0; r < dim; ++r) {
        FieldElement want = (r == l) ? pres.field.one() : pres.field.zero();
        if (b[r] != want) throw InternalError("mast does not act as the full chain");
    }
    // relations act by zero
    for (const AlgebraElement& rel : pres.relations) {
        Matrix sum = zero_matrix(pres.field, dim, dim);
        for (const auto& [path, c] : rel.terms())
            sum = matrix_add(sum, matrix_scaled(path_matrix(m, path), c));
        if (!matrix_is_zero(sum)) throw InternalError("relation does not annihilate the module");
    }
    return m;
}

Matrix path_matrix(const UniserialModule& m, const Path& q) {
    Matrix r = identity_matrix(m.pres->field, m.dimension());
    for (int a : q.arrows) r = matrix_mul(m.action[static_cast<size_t>(a)], r);
    return r;
}

LayeredGraph layered_graph(const UniserialModule& m) {
    Vector top(m.dimension(), m.pres->field.zero());
    top[0] = m.pres->field.one();
    return layered_graph(m, top);
}

LayeredGraph layered_graph(const UniserialModule& m, const Vector& top) {
    const Quiver& quiver = m.pres->quiver;
    const Mast& mast = m.mast;
    const size_t l = mast.length();
    const size_t dim = l + 1;
    if (top.size() != dim) throw ParseError("top element has the wrong length");
    for (size_t r = 0; r < dim; ++r)
        if (!top[r].is_zero() && mast.vertices[r] != mast.vertices[0])
            throw ParseError("vector is not fixed by the start idempotent");

    // basis of prefix images of the top element
    std::vector<Vector> x(dim);
    x[0] = top;
    for (size_t j = 1; j <= l; ++j)
        x[j] = matrix_apply(m.action[static_cast<size_t>(mast.p.arrows[j - 1])], x[j - 1]);
    Matrix basis(dim, Vector(dim, m.pres->field.zero()));
    for (size_t j = 0; j < dim; ++j)
        for (size_t r = 0; r < dim; ++r) basis[r][j] = x[j][r];
    if (!matrix_invertible(basis, m.pres->field))
        throw ParseError("vector does not generate the module (not a top element)");

    LayeredGraph g;
    g.layer_vertices = mast.vertices;
    for (size_t i = 1; i <= l; ++i)
        g.edges.push_back(LayeredGraphEdge{static_cast<int>(i), static_cast<int>(i + 1),
                                           mast.p.arrows[i - 1], true});
    for (size_t i = 1; i <= dim; ++i) {
        for (int a : quiver.arrows_from(mast.vertices[i - 1])) {
            Vector w = matrix_apply(m.action[static_cast<size_t>(a)], x[i - 1]);
            // coordinates of w in the prefix-image basis
            LinearSystem sys{m.pres->field, static_cast<unsigned>(dim), {}, {}};
            for (size_t r = 0; r < dim; ++r) sys.add_equation(basis[r], w[r]);
            LinearSolution sol = solve_linear(sys);
            if (!sol.consistent) throw InternalError("basis change failed");
            int lowest = -1;
            for (size_t j = 0; j < dim; ++j)
                if (!sol.particular[j].is_zero()) {
                    lowest = static_cast<int>(j);
                    break;
                }
            if (lowest < 0) continue;  // w = 0
            int to = lowest + 1;
            bool is_mast_edge =
                i <= l && mast.p.arrows[i - 1] == a && to == static_cast<int>(i + 1);
            if (is_mast_edge) continue;  // already drawn
            g.edges.push_back(
                LayeredGraphEdge{static_cast<int>(i), to, a, false});
        }
    }
    return g;
}

std::string graph_dot(const LayeredGraph& g, const Quiver& q) {
    std::ostringstream out;
    out << "digraph layered {\n";
    out << "  rankdir=TB;\n";
    for (size_t i = 0; i < g.layer_vertices.size(); ++i)
        out << "  L" << (i + 1) << " [label=\"e(" << q.vertex_name(g.layer_vertices[i])
            << ")\"];\n";
    for (const LayeredGraphEdge& e : g.edges) {
        out << "  L" << e.from << " -> L" << e.to << " [label=\"" << q.arrow(e.arrow).name
            << "\"";
        if (!e.mast) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_text(const LayeredGraph& g, const Quiver& q) {
    std::ostringstream out;
    for (size_t i = 1; i <= g.layer_vertices.size(); ++i) {
        out << "layer " << i << ": e(" << q.vertex_name(g.layer_vertices[i - 1]) << ")\n";
        for (const LayeredGraphEdge& e : g.edges)
            if (e.from == static_cast<int>(i))
                out << "  " << (e.mast ? "mast " : "extra ") << q.arrow(e.arrow).name
                    << " -> layer " << e.to << "\n";
    }
    return out.str();
}

}  // namespace uniserial
