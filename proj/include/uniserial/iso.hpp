#pragma once

#include <optional>

#include "uniserial/module.hpp"

namespace uniserial {

/// The isomorphism system for a mast p: variables X (coordinates of the
/// first module), Y (second module), Z (coefficients of the cyclic
/// prefixes in the top-element change). Ambient ring has 2N + t
/// variables: X_i -> i, Y_i -> N + i, Z_j -> 2N + j (0-based).
struct IsoSystem {
    DetourTable table;
    std::vector<unsigned> cyclic_lens;  // lengths of the cyclic prefixes w_1..w_t
    std::vector<std::pair<Polynomial, Polynomial>> equations;  // lhs = rhs

    unsigned nvars() const {
        return 2 * table.nvars + static_cast<unsigned>(cyclic_lens.size());
    }
    /// Renders a polynomial with X[i]/Y[i]/Z[j] names (1-based).
    std::string poly_str(const Polynomial& p) const;
    std::string str() const;
};

IsoSystem iso_system(const Presentation& pres, const Path& p);

struct IsoResult {
    bool isomorphic = false;
    Vector witness;  // Z-solution when isomorphic, free variables 0
};

/// Specializes X -> k, Y -> k2 and solves the linear Z-system. Both
/// points must lie on the variety.
IsoResult decide_iso(const Presentation& pres, const VarietyResult& variety,
                     const IsoSystem& sys, const Vector& k, const Vector& k2);

/// Point-wise transport between masts through the same vertex sequence:
/// builds the module at k over p and reads off its q-coordinates, or
/// returns nullopt when q does not act as a mast on it (outside the
/// overlap).
std::optional<Vector> transport_mast(const Presentation& pres, const Path& p, const Path& q,
                                     const Vector& k);

/// The canonical bijection between the detours of two masts through the
/// same vertex sequence (composition of single-arrow swaps). Preserves
/// target-list sizes, hence the variable count.
struct DetourBijection {
    std::vector<size_t> detour_map;     // detour index of p -> detour index of q
    std::vector<unsigned> variable_map;  // variable of p -> variable of q
};

DetourBijection detour_bijection(const Presentation& pres, const Path& p, const Path& q);

}  // namespace uniserial
