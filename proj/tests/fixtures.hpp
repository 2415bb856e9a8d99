#pragma once

// Shared test algebras, named by shape. Frozen expected values (ideals,
// detour tables, verdicts) were derived by hand from the substitution
// congruence and double-checked with independent oracles in the tests.

#include <string>
#include <vector>

#include "uniserial/presentation_io.hpp"
#include "uniserial/variety.hpp"

namespace fixtures {

using namespace uniserial;

inline Presentation parse_fixture(const std::string& text) {
    return parse_presentation(text).presentation;
}

inline Polynomial poly(const Presentation& pres, unsigned nvars, const std::string& s) {
    return parse_polynomial(s, pres.field, nvars);
}

inline IdealBasis ideal_of(const Presentation& pres, unsigned nvars,
                           const std::vector<std::string>& gens) {
    IdealBasis b{pres.field, nvars, MonomialOrder::Grevlex, {}, false};
    for (const auto& s : gens) b.add(poly(pres, nvars, s));
    return b;
}

// Five-vertex chain of double arrows with a loop at the second vertex;
// its length-6 mast cuts out a nodal cubic (ten variables).
inline const char* kNodalCubic = R"(
field Q
quiver {
  vertex 1 2 3 4 5 ;
  arrow alpha1 : 1 -> 2 ;
  arrow beta1  : 1 -> 2 ;
  arrow gamma  : 2 -> 2 ;
  arrow alpha2 : 2 -> 3 ;
  arrow beta2  : 2 -> 3 ;
  arrow alpha3 : 3 -> 4 ;
  arrow beta3  : 3 -> 4 ;
  arrow alpha4 : 4 -> 5 ;
  arrow beta4  : 4 -> 5 ;
}
relations {
  gamma^3 ;
  beta2*alpha1 ;
  beta2*gamma*alpha1 ;
  alpha4*alpha3*beta2*beta1 ;
  alpha4*alpha3*beta2*gamma^2*alpha1 - alpha4*alpha3*alpha2*gamma^2*alpha1 ;
  beta4*beta3*alpha2*gamma*alpha1 - alpha4*alpha3*alpha2*beta1 ;
  alpha4*alpha3*alpha2*gamma^2*beta1 - alpha4*alpha3*alpha2*alpha1 ;
  alpha4*alpha3*alpha2*gamma*alpha1 - alpha4*alpha3*beta2*gamma*beta1 ;
  alpha4*alpha3*alpha2*gamma*alpha1 - alpha4*beta3*alpha2*gamma^2*alpha1 ;
  alpha4*alpha3*alpha2*gamma*alpha1 - beta4*alpha3*alpha2*gamma^2*alpha1 ;
}
)";
inline const char* kNodalCubicMast = "alpha4*alpha3*alpha2*gamma^2*alpha1";
// Known defining ideal of the nodal-cubic mast, in canonical variable
// order (the hand derivation numbers the two length-4 detour targets at
// u-length 1 and 2 the other way round; canonical order is by arrow name).
inline const std::vector<std::string> kNodalCubicIdeal = {
    "X[3]", "X[5]", "X[7]", "X[8] - 1",
    "X[6]*X[9]*X[10] - X[1]*X[4] - X[2]*X[6]",
    "X[1] - X[4]", "X[2] - X[6]", "X[6] - X[9]", "X[6] - X[10]",
};

// Chain 1 -> 2 => 3 => 4 whose two lanes merge through incompatible
// relations: the mast through delta*beta*alpha has empty variety.
inline const char* kMergingLanes = R"(
field Q
quiver {
  vertex 1 2 3 4 ;
  arrow alpha   : 1 -> 2 ;
  arrow beta    : 2 -> 3 ;
  arrow gamma   : 2 -> 3 ;
  arrow delta   : 3 -> 4 ;
  arrow epsilon : 3 -> 4 ;
}
relations {
  delta*beta - epsilon*gamma ;
  epsilon*beta ;
  delta*gamma ;
}
)";
inline const char* kMergingLanesMast = "delta*beta*alpha";

// One loop plus one exit arrow, loop squares to zero. The mast beta*alpha
// has a full affine line of points but a single module up to isomorphism.
inline const char* kLoopExit = R"(
field Q
quiver {
  vertex 1 2 ;
  arrow alpha : 1 -> 1 ;
  arrow beta  : 1 -> 2 ;
}
relations {
  alpha^2 ;
}
)";
inline const char* kLoopExitMast = "beta*alpha";

// Loop at vertex 1 plus a round trip to vertex 2; the length-5 mast has
// five detour variables and a plane-with-line variety (X3 = X4 = 0).
inline const char* kLoopShuttle = R"(
field Q
quiver {
  vertex 1 2 ;
  arrow alpha : 1 -> 1 ;
  arrow beta  : 1 -> 2 ;
  arrow gamma : 2 -> 1 ;
}
relations {
  alpha^2 ;
  gamma*beta*gamma ;
  gamma*beta*alpha*gamma ;
}
)";
inline const char* kLoopShuttleMast = "beta*alpha*gamma*beta*alpha";
inline const std::vector<std::string> kLoopShuttleIdeal = {"X[3]", "X[4]"};

// Two-way track between vertices 1 and 2 with side exits to 3 and 4.
inline const char* kCrossroads = R"(
field Q
quiver {
  vertex 1 2 3 4 ;
  arrow alpha   : 1 -> 2 ;
  arrow delta   : 2 -> 1 ;
  arrow beta    : 2 -> 3 ;
  arrow gamma   : 3 -> 2 ;
  arrow epsilon : 2 -> 4 ;
}
relations {
  epsilon*alpha - epsilon*gamma*beta*alpha ;
  delta*alpha*delta*alpha ;
  alpha*delta*alpha*delta ;
  beta*gamma ;
  delta*gamma ;
}
)";
inline const char* kCrossroadsMast = "epsilon*gamma*beta*alpha*delta*alpha";
inline const std::vector<std::string> kCrossroadsIdeal = {"X[2] - X[1]", "X[3] - 1"};

// Two consecutive double arrows tied by one commutativity relation; the
// two masts through the same vertices have non-isomorphic varieties.
inline const char* kTwinTracks = R"(
field Q
quiver {
  vertex 1 2 3 ;
  arrow alpha  : 1 -> 2 ;
  arrow alpha' : 1 -> 2 ;
  arrow beta   : 2 -> 3 ;
  arrow beta'  : 2 -> 3 ;
}
relations {
  beta'*alpha' - beta*alpha ;
}
)";
inline const char* kTwinTracksMastP = "beta*alpha";
inline const char* kTwinTracksMastQ = "beta'*alpha";

// Five doubled steps in a row; one mast cuts out a cusp, a parallel one a
// reducible variety with a component outside the overlap.
inline const char* kDoubledPath = R"(
field Q
quiver {
  vertex 1 2 3 4 5 6 ;
  arrow alpha    : 1 -> 2 ;
  arrow alpha'   : 1 -> 2 ;
  arrow beta     : 2 -> 3 ;
  arrow beta'    : 2 -> 3 ;
  arrow gamma    : 3 -> 4 ;
  arrow gamma'   : 3 -> 4 ;
  arrow delta    : 4 -> 5 ;
  arrow delta'   : 4 -> 5 ;
  arrow epsilon  : 5 -> 6 ;
  arrow epsilon' : 5 -> 6 ;
}
relations {
  epsilon'*delta'*gamma*beta*alpha - epsilon*delta*gamma'*beta'*alpha' ;
  epsilon*delta*gamma*beta'*alpha - epsilon*delta*gamma*beta*alpha' ;
  epsilon*delta*gamma'*beta*alpha - epsilon*delta*gamma*beta*alpha' ;
  epsilon*delta'*gamma*beta*alpha - epsilon'*delta*gamma*beta*alpha ;
}
)";
inline const char* kDoubledPathMastP = "epsilon*delta*gamma*beta*alpha";
inline const char* kDoubledPathMastQ = "epsilon'*delta*gamma*beta'*alpha";
inline const std::vector<std::string> kDoubledPathIdealP = {
    "X[4]*X[5] - X[1]*X[2]*X[3]", "X[2] - X[1]", "X[3] - X[1]", "X[4] - X[5]",
};
// Hand-derived raw generators for the parallel mast; its vanishing set is
// the union V(X2, X5) u V(X2*X4 - X1*X3*X5, X1*X2 - 1, X3 - X1, X4*X5 - 1).
inline const std::vector<std::string> kDoubledPathIdealQ = {
    "X[2]*X[4] - X[1]*X[3]*X[5]",
    "X[5] - X[1]*X[2]*X[5]",
    "X[2]*X[3]*X[5] - X[1]*X[2]*X[5]",
    "X[2]*X[4]*X[5] - X[2]",
};

// Re-declares a fixture over another ground field, e.g. "GF(3)".
inline std::string with_field(const std::string& text, const std::string& field) {
    std::string marker = "field Q";
    size_t pos = text.find(marker);
    return text.substr(0, pos) + "field " + field + text.substr(pos + marker.size());
}

inline Vector point(const Field& f, std::initializer_list<const char*> coords) {
    Vector v;
    for (const char* c : coords) v.push_back(f.parse(c));
    return v;
}

}  // namespace fixtures
