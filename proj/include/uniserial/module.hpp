#pragma once

#include "uniserial/variety.hpp"

namespace uniserial {

/// A uniserial module with the given mast, as explicit arrow-action
/// matrices on the basis b_0,...,b_l, where b_j is the image of the
/// length-j prefix applied to the canonical top element b_0.
struct UniserialModule {
    const Presentation* pres = nullptr;
    Mast mast;
    Vector point;
    std::vector<Matrix> action;  // indexed by arrow, (l+1) x (l+1)

    size_t dimension() const { return mast.length() + 1; }
};

/// Builds the module at a variety point and verifies the structural
/// invariants (vertex grading, strict lower shift, nonzero mast action,
/// relation matrices zero). Throws ParseError if k is off the variety,
/// InternalError on an invariant violation.
UniserialModule build_module(const Presentation& pres, const VarietyResult& variety,
                             const Vector& k);

/// Product of arrow matrices along the path (latest arrow leftmost).
Matrix path_matrix(const UniserialModule& m, const Path& q);

struct LayeredGraphEdge {
    int from = 0;  // layers, 1-based
    int to = 0;
    int arrow = -1;
    bool mast = false;
};

/// The mast drawn as a chain of layers plus an extra edge (i, j, omega)
/// whenever omega applied to the layer-(i-1) basis element of the chosen
/// top element has lowest nonzero coordinate at layer j-1.
struct LayeredGraph {
    std::vector<int> layer_vertices;
    std::vector<LayeredGraphEdge> edges;
};

LayeredGraph layered_graph(const UniserialModule& m);
/// Same relative to an alternative top element given by its coefficient
/// vector over b_0..b_l; rejects vectors that are not top elements.
LayeredGraph layered_graph(const UniserialModule& m, const Vector& top);

std::string graph_dot(const LayeredGraph& g, const Quiver& q);
std::string graph_text(const LayeredGraph& g, const Quiver& q);

}  // namespace uniserial
