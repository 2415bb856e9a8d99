#pragma once

#include "uniserial/variety.hpp"

namespace uniserial {

struct RealizationInput {
    Field field;
    unsigned nvars = 0;
    std::vector<Polynomial> polys;
};

/// Result of degree reduction: every variable occurs with exponent <= 1
/// in every monomial. New variable j originates from input variable
/// origin[j].first (0-based) as copy number origin[j].second (0-based);
/// difference relations tie the copies together.
struct MultilinearSystem {
    unsigned nvars = 0;
    std::vector<Polynomial> polys;  // transformed inputs first, then differences
    std::vector<std::pair<unsigned, unsigned>> origin;
};

MultilinearSystem multilinearize(const RealizationInput& input);

/// A presentation and mast whose uniserial variety is isomorphic to the
/// vanishing set of the input system.
struct Realization {
    MultilinearSystem multilinear;
    Presentation presentation;
    Path mast;
    bool padded = false;  // an extra zero-constrained variable was added
};

Realization realize_variety(const RealizationInput& input);

/// Recomputes the uniserial variety of the constructed presentation and
/// compares its ideal with the multilinearized system (the variable
/// correspondence is the identity by construction).
bool verify_realization(const Realization& r);

/// JSON table mapping the mast's variables back to the input variables.
std::string realization_json(const Realization& r);

}  // namespace uniserial
