#pragma once

#include "uniserial/detours.hpp"
#include "uniserial/linalg.hpp"
#include "uniserial/polynomial.hpp"

namespace uniserial {

/// Normal form of an algebra element modulo the substitution congruence:
/// a polynomial coefficient for every prefix length 0..l of the mast.
struct SymbolicElement {
    std::vector<Polynomial> coeffs;

    bool is_zero() const {
        for (const Polynomial& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }
};

enum class RewriteStrategy {
    /// Route pre-filter, then always substitute at the longest common
    /// prefix with the mast (the unique detour decomposition).
    Rightmost,
    /// No pre-filter; terms picked in a seeded random order and dropped
    /// only when stuck. Must agree with Rightmost (confluence).
    RandomizedLazy,
};

/// Unique normal form with symbolic coefficients in the table's variables.
SymbolicElement normal_form(const Presentation& pres, const DetourTable& table,
                            const AlgebraElement& z,
                            RewriteStrategy strategy = RewriteStrategy::Rightmost,
                            unsigned seed = 0);

/// Normal form with the variables specialized at a point; returns the
/// coordinate vector over prefix lengths 0..l.
Vector normal_form_at(const Presentation& pres, const DetourTable& table,
                      const AlgebraElement& z, const Vector& point);

/// Normal form of a path combination whose coefficients are already
/// polynomials in a larger ambient ring; the substitution variable for
/// global detour index i is var_offset + i.
std::vector<Polynomial> normal_form_general(const Presentation& pres, const DetourTable& table,
                                            const std::vector<std::pair<Path, Polynomial>>& z,
                                            unsigned ambient_nvars, unsigned var_offset);

}  // namespace uniserial
