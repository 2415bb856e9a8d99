#pragma once

#include "uniserial/groebner.hpp"
#include "uniserial/rewrite.hpp"

namespace uniserial {

/// The generator set G = { g.w : g a relation, w a path from the mast's
/// start vertex to source(g), 0 <= length(w) <= cap }. Elements with
/// length(w) > length(p) contribute only non-route terms, so the default
/// cap loses nothing.
std::vector<AlgebraElement> left_ideal_generators(const Presentation& pres, const Mast& mast,
                                                  size_t cap);

struct VarietyResult {
    DetourTable table;
    IdealBasis ideal;
};

/// Defining ideal of the variety parametrizing uniserial modules with the
/// given mast: all nonzero normal-form coefficients over the generator
/// set, deduplicated in deterministic order. `parallel` switches to the
/// OpenMP kernel (same output).
VarietyResult variety_generators(const Presentation& pres, const Path& p, bool parallel = false,
                                 size_t extra_cap = 0);

bool is_nonempty_variety(const Presentation& pres, const Path& p);

/// True iff every generator vanishes at k.
bool point_on_variety(const IdealBasis& gens, const Vector& k);

/// Parses "1,2,-1/3" as a point in canonical variable order.
Vector parse_point(const Field& field, const std::string& text, size_t expected);

std::string point_str(const Vector& k);

}  // namespace uniserial
