#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uniserial/field.hpp"

namespace uniserial {

struct Arrow {
    std::string name;
    int source = -1;  // dense vertex index
    int target = -1;
};

/// Finite directed multigraph; loops and parallel arrows allowed.
/// Vertices keep their user identifiers but are indexed densely.
class Quiver {
public:
    int add_vertex(const std::string& id);
    int add_arrow(const std::string& name, const std::string& source, const std::string& target);

    int vertex_index(const std::string& id) const;          // -1 if unknown
    int arrow_index(const std::string& name) const;         // -1 if unknown
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    size_t vertex_count() const { return vertices_.size(); }
    size_t arrow_count() const { return arrows_.size(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    /// Arrow indices with the given source, sorted by name.
    std::vector<int> arrows_from(int v) const;
    /// Arrow indices from s to t, sorted by name.
    std::vector<int> arrows_between(int s, int t) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vertex_by_name_;
    std::map<std::string, int> arrow_by_name_;
};

/// A composable arrow sequence; `arrows` in traversal order (earliest
/// first). Length 0 is a vertex path.
struct Path {
    int source = -1;
    std::vector<int> arrows;

    size_t length() const { return arrows.size(); }
    int target(const Quiver& q) const {
        return arrows.empty() ? source : q.arrow(arrows.back()).target;
    }
    bool operator==(const Path& o) const = default;
    bool operator<(const Path& o) const {
        if (source != o.source) return source < o.source;
        return arrows < o.arrows;
    }
};

bool path_well_formed(const Quiver& q, const Path& p);

/// "later after earlier": defined iff source(later) == target(earlier).
std::optional<Path> compose(const Quiver& q, const Path& later, const Path& earlier);

/// Initial segment of length n, counted from the start vertex.
Path prefix(const Path& p, size_t n);

/// True iff q is an initial segment of p.
bool is_prefix_of(const Path& q, const Path& p);

/// Renders "beta*alpha", "gamma^2*alpha", "e(1)" using the composition
/// convention (latest arrow leftmost), collapsing repeated arrows.
std::string path_str(const Quiver& q, const Path& p);

/// Parses the same syntax relative to the quiver (vertex paths are not
/// accepted; a path literal is a nonempty arrow product).
Path parse_path(const Quiver& q, const std::string& text);

/// K-linear combination of paths; no zero coefficients stored.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(Field f) : field_(f) {}
    static AlgebraElement single(Field f, const Path& p, const FieldElement& c);

    const Field& field() const { return field_; }
    const std::map<Path, FieldElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Path& p, const FieldElement& c);
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement scaled(const FieldElement& c) const;
    /// Right-composition with a path: every term becomes term∘w ("term
    /// after w"); terms that do not compose are dropped with an error.
    std::optional<AlgebraElement> composed_after(const Quiver& q, const Path& w) const;

    bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

    std::string str(const Quiver& q) const;

private:
    Field field_;
    std::map<Path, FieldElement> terms_;
};

/// Λ = KΓ/I given by quiver, uniform relations, and ground field.
struct Presentation {
    Field field;
    Quiver quiver;
    std::vector<AlgebraElement> relations;

    /// Checks relation uniformity and admissibility (all paths length >= 2).
    void validate() const;
};

}  // namespace uniserial
