#pragma once

#include <string>
#include <vector>

#include "uniserial/quiver.hpp"

namespace uniserial {

struct ParsedPresentation {
    Presentation presentation;
    /// Validation report: e.g. notes about relations that were split into
    /// their uniform (source, target) components.
    std::vector<std::string> notes;
};

/// Parses the presentation DSL:
///
///   field Q | GF(<prime>)
///   quiver { vertex <id>+ ; arrow <name> : <id> -> <id> ; ... }
///   relations { <expr> ; ... }
///
/// where <expr> is a +/- separated sum of terms
/// [<rational>*] <arrow>[^<int>] (* <arrow>[^<int>])*, and a*b means
/// "a after b". Non-uniform relations are split by (source, target).
ParsedPresentation parse_presentation(const std::string& text);

/// Inverse of parse_presentation up to whitespace; parse(print(p)) == p.
std::string print_presentation(const Presentation& p);

}  // namespace uniserial
