#pragma once

#include <string>
#include <vector>

#include "uniserial/quiver.hpp"

namespace uniserial {

/// A candidate mast: a path p together with its vertex sequence
/// e(1),...,e(l+1).
struct Mast {
    Path p;
    std::vector<int> vertices;  // length l+1

    size_t length() const { return p.length(); }
};

/// Builds the vertex sequence; throws ParseError if p is not composable.
Mast make_mast(const Quiver& q, const Path& p);

/// A detour (alpha, u) on the mast: alpha departs from the end of the
/// prefix u, does not continue along p, and lands at a vertex occupied by
/// some longer prefix. `target_lens` are the lengths of those prefixes,
/// ascending; the i-th one owns the variable first_var + i (0-based
/// global index).
struct Detour {
    int arrow = -1;
    unsigned ulen = 0;
    std::vector<unsigned> target_lens;
    unsigned first_var = 0;
};

/// All detours on a mast in canonical order (ulen ascending, then arrow
/// name ascending), with contiguous variable numbering 0..nvars-1.
struct DetourTable {
    Mast mast;
    std::vector<Detour> detours;
    unsigned nvars = 0;

    /// Index into `detours` for (arrow, ulen), or -1.
    int find(int arrow, unsigned ulen) const;
    /// Human-readable variable table, one line per variable.
    std::string variable_table(const Quiver& q) const;
    /// JSON: [{index, arrow, u, targets, variables}], 1-based indices.
    std::string json(const Quiver& q) const;
};

DetourTable enumerate_detours(const Presentation& pres, const Path& p);

/// Route test per the factorization property: q starts at e(1) and is a
/// product of mast arrows and detour jumps (each jump (alpha, u) an
/// actual detour, landing on a strictly longer prefix position).
/// Reachable-position-set dynamic programming over positions 1..l+1.
bool is_route(const Quiver& quiver, const Mast& mast, const Path& q);

/// All paths of length l whose i-th arrow goes vertices[i] -> vertices[i+1].
std::vector<Path> enumerate_masts(const Quiver& q, const std::vector<int>& vertices);

}  // namespace uniserial
