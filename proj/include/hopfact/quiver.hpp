#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfact/field.hpp"

namespace hopfact {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
};

/// A basis path: the trivial path e_start when `arrows` is empty, otherwise
/// the arrow sequence a_1 ... a_l read left to right (t(a_j) == s(a_{j+1})).
///
/// Ordered by length, then trivial paths by vertex index, then arrow sequences
/// lexicographically. Arrow indices follow name order (see Quiver), so this is
/// the (length, arrow-name) order.
struct Path {
    std::size_t start = 0;
    std::vector<std::size_t> arrows;

    static Path vertex(std::size_t v) { return Path{v, {}}; }

    std::size_t length() const noexcept { return arrows.size(); }
    bool is_trivial() const noexcept { return arrows.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
    friend std::strong_ordering operator<=>(const Path& a, const Path& b);
};

/// Finite quiver. Vertices keep their declaration order; arrows are stored
/// sorted by name so that arrow indices realise the lexicographic order.
class Quiver {
public:
    struct ArrowSpec {
        std::string name;
        std::string source;
        std::string target;
    };

    Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }
    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;
    std::optional<std::size_t> find_vertex(const std::string& name) const;
    std::optional<std::size_t> find_arrow(const std::string& name) const;

    Path arrow_path(std::size_t a) const;
    std::size_t source(const Path& p) const;
    std::size_t target(const Path& p) const;
    bool is_valid(const Path& p) const;

    /// p * p2 in the path algebra: the concatenation when t(p) == s(p2),
    /// nullopt (the zero product) otherwise.
    std::optional<Path> concat(const Path& p, const Path& p2) const;

    /// "e_<vertex>" for trivial paths, arrow names joined by '*' otherwise.
    std::string path_name(const Path& p) const;

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices_ == b.vertices_ && a.arrow_specs_equal(b);
    }

private:
    bool arrow_specs_equal(const Quiver& o) const;

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, std::size_t> vertex_ids_;
    std::map<std::string, std::size_t> arrow_ids_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// All paths of length <= max_len, ordered by length then arrow names.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t max_len);

/// Element of the path algebra kQ: a finite combination of basis paths with
/// nonzero coefficients in a single field.
class PathElement {
public:
    using Terms = std::map<Path, FieldElement>;

    PathElement(QuiverPtr quiver, Field field);
    static PathElement basis(QuiverPtr quiver, Field field, const Path& p);
    static PathElement vertex(QuiverPtr quiver, Field field, std::size_t v);
    static PathElement arrow(QuiverPtr quiver, Field field, std::size_t a);
    /// Sum of all e_i.
    static PathElement unit(QuiverPtr quiver, Field field);

    const QuiverPtr& quiver_ptr() const noexcept { return quiver_; }
    const Quiver& quiver() const noexcept { return *quiver_; }
    const Field& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    FieldElement coeff(const Path& p) const;

    /// Adds c*p, dropping the entry if it cancels.
    void add_term(const Path& p, const FieldElement& c);

    /// Largest path length present (-1 for zero).
    long max_length() const;
    /// Component in kQ_l.
    PathElement homogeneous_part(std::size_t l) const;

    PathElement operator-() const;
    PathElement& operator+=(const PathElement& o);
    PathElement& operator-=(const PathElement& o);
    PathElement& operator*=(const FieldElement& c);
    friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
    friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
    friend PathElement operator*(PathElement a, const FieldElement& c) { return a *= c; }
    friend PathElement operator*(const FieldElement& c, PathElement a) { return a *= c; }
    /// Algebra product (bilinear extension of path concatenation).
    friend PathElement operator*(const PathElement& u, const PathElement& v);
    friend bool operator==(const PathElement& a, const PathElement& b);

    std::string to_string() const;

private:
    void require_compatible(const PathElement& o) const;

    QuiverPtr quiver_;
    Field field_;
    Terms terms_;
};

/// Parses a path-algebra expression: terms separated by + or -, each a
/// '*'-separated product of scalar literals, the field symbol, e_<vertex>
/// and arrow names.
PathElement parse_path_element(QuiverPtr quiver, const Field& field, const std::string& text);

}  // namespace hopfact
