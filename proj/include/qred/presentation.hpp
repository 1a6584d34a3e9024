#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qred/field.hpp"

namespace qred {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;
/// Arrow sequence in written right-to-left order: word[0] is applied last.
using Word = std::vector<ArrowId>;

struct Arrow {
    std::string name;
    VertexId source = 0;
    VertexId target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::optional<VertexId> find_vertex(const std::string &name) const;
    std::optional<ArrowId> find_arrow(const std::string &name) const;
    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t arrow_count() const { return arrows.size(); }
    /// Same vertex count and arrow endpoints (names ignored).
    bool same_shape(const Quiver &other) const;
};

/// A path of the quiver: either the trivial path at a vertex (empty word) or a
/// composable arrow word. Ordered by length, then by vertex (trivial paths),
/// then lexicographically by arrow index.
struct Path {
    VertexId source = 0;
    VertexId target = 0;
    Word arrows;

    static Path trivial(VertexId v) { return Path{v, v, {}}; }
    std::size_t length() const { return arrows.size(); }
    bool is_trivial() const { return arrows.empty(); }

    auto operator<=>(const Path &other) const {
        if (auto c = arrows.size() <=> other.arrows.size(); c != 0)
            return c;
        if (arrows.empty())
            return source <=> other.source;
        return arrows <=> other.arrows;
    }
    bool operator==(const Path &other) const {
        return arrows == other.arrows && (!arrows.empty() || source == other.source);
    }
};

/// Builds the path for a word, or nullopt if consecutive arrows do not compose.
std::optional<Path> make_path(const Quiver &q, Word word);
/// Product p * q (q applied first); nullopt when source(p) != target(q).
std::optional<Path> concat(const Path &p, const Path &q);

/// Finite linear combination of paths with nonzero coefficients, kept in
/// increasing path order (the leading term is the last one).
using Element = std::map<Path, Scalar>;

void add_term(Element &e, const Path &p, const Scalar &c, const Field &f);
void add_scaled(Element &e, const Element &x, const Scalar &c, const Field &f);
/// Left and right multiplication by paths: u * x * v.
Element sandwich(const Path &u, const Element &x, const Path &v, const Field &f);
Element multiply(const Element &x, const Element &y, const Field &f);

enum class Convention { RightToLeft, LeftToRight };

/// Relation terms as written, before validation.
struct RelationTerm {
    Scalar coefficient;
    Word word;
};
using Relation = std::vector<RelationTerm>;

/// The datum (Q, I, k) of kQ/I. Relations are kept as raw terms so that
/// `validate` can report malformed input instead of rejecting it silently.
struct Presentation {
    std::string name = "A";
    Field field = Field::rational();
    Convention convention = Convention::RightToLeft;
    Quiver quiver;
    std::vector<Relation> relations;
};

struct Diagnostic {
    std::string code;
    std::string message;
    std::optional<std::size_t> relation;
};

struct Diagnostics {
    std::vector<Diagnostic> items;
    bool ok() const { return items.empty(); }
    std::string summary() const;
};

Diagnostics validate(const Presentation &p);

/// Validated relations as elements (zero relations dropped). Throws
/// std::invalid_argument carrying the diagnostics if validation fails.
std::vector<Element> relation_elements(const Presentation &p);

Relation to_relation(const Element &e);

/// Opposite presentation: arrows reversed, relation words reversed.
Presentation opposite_presentation(const Presentation &p);

std::string format_path(const Quiver &q, const Path &p);
std::string format_element(const Quiver &q, const Field &f, const Element &e);

} // namespace qred
