#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gq/error.hpp"

namespace gq {

struct ArrowSpec {
    std::string id;
    std::string source;
    std::string target;
};

// Finite directed multigraph with loops. Vertex and arrow identity is the
// opaque id string; both are stored sorted by id so index order is the byte
// order used everywhere a set is listed.
class Quiver {
public:
    static Quiver build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

    int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
    int arrow_count() const { return static_cast<int>(arrow_ids_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const std::string& arrow_id(int a) const { return arrow_ids_[a]; }
    int source(int a) const { return source_[a]; }
    int target(int a) const { return target_[a]; }

    std::optional<int> find_vertex(std::string_view name) const;
    std::optional<int> find_arrow(std::string_view id) const;
    int vertex_of(std::string_view name) const;  // throws ParseError
    int arrow_of(std::string_view id) const;     // throws ParseError

    // Arrow indices listed in id order.
    const std::vector<int>& arrows_from(int v) const { return out_[v]; }
    const std::vector<int>& arrows_into(int v) const { return in_[v]; }

    int max_out_degree() const;

    // Copy of this quiver with one fresh loop "<prefix><vertex>" appended per
    // vertex. Existing arrow indices stay valid in the result; the loop on
    // vertex v is reported in units[v]. Throws on id collision with the
    // reserved prefix.
    Quiver with_unit_loops(const std::string& prefix, std::vector<int>& units) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::string> arrow_ids_;
    std::vector<int> source_, target_;
    std::vector<std::vector<int>> out_, in_;
    bool ids_sorted_ = true;  // false once unit loops are appended
};

// Composable arrow word with an explicit base vertex; the base is what
// distinguishes the empty paths on different vertices.
struct PathWord {
    int base = -1;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    bool is_empty() const { return edges.empty(); }
    auto operator<=>(const PathWord&) const = default;
};

PathWord empty_path(int vertex);

// Validates composability; reports the index of the first bad pair.
PathWord make_path(const Quiver& q, int base, std::vector<int> edges);

inline int path_source(const PathWord& p) { return p.base; }
int path_target(const Quiver& q, const PathWord& p);
bool path_valid(const Quiver& q, const PathWord& p);

PathWord concat(const Quiver& q, const PathWord& a, const PathWord& b);

// All composable paths of the given length, optionally restricted to one
// source vertex, in lexicographic order of their arrow-id sequences.
std::vector<PathWord> enumerate_paths(const Quiver& q, std::optional<int> source, int length);

// "eps:<vertex>" for empty paths, otherwise space-separated arrow ids.
std::string path_to_string(const Quiver& q, const PathWord& p);
PathWord path_from_tokens(const Quiver& q, std::span<const std::string> tokens);
PathWord parse_path(const Quiver& q, std::string_view text);

}  // namespace gq
