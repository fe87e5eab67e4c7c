#include "gq/quiver.hpp"

#include <algorithm>
#include <sstream>

namespace gq {

Quiver Quiver::build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows) {
    if (vertices.empty())
        throw ParseError("quiver needs at least one vertex");

    std::sort(vertices.begin(), vertices.end());
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i] == vertices[i - 1])
            throw ParseError("duplicate vertex id \"" + vertices[i] + "\"");

    std::sort(arrows.begin(), arrows.end(),
              [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
    for (size_t i = 1; i < arrows.size(); ++i)
        if (arrows[i].id == arrows[i - 1].id)
            throw ParseError("duplicate arrow id \"" + arrows[i].id + "\"");

    Quiver q;
    q.vertex_names_ = std::move(vertices);
    q.out_.resize(q.vertex_names_.size());
    q.in_.resize(q.vertex_names_.size());
    for (auto& a : arrows) {
        auto s = q.find_vertex(a.source);
        auto t = q.find_vertex(a.target);
        if (!s)
            throw ParseError("dangling endpoint: arrow \"" + a.id + "\" has unknown source \"" +
                             a.source + "\"");
        if (!t)
            throw ParseError("dangling endpoint: arrow \"" + a.id + "\" has unknown target \"" +
                             a.target + "\"");
        int idx = static_cast<int>(q.arrow_ids_.size());
        q.arrow_ids_.push_back(std::move(a.id));
        q.source_.push_back(*s);
        q.target_.push_back(*t);
        q.out_[*s].push_back(idx);
        q.in_[*t].push_back(idx);
    }
    return q;
}

std::optional<int> Quiver::find_vertex(std::string_view name) const {
    auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
    if (it == vertex_names_.end() || *it != name)
        return std::nullopt;
    return static_cast<int>(it - vertex_names_.begin());
}

std::optional<int> Quiver::find_arrow(std::string_view id) const {
    if (ids_sorted_) {
        auto it = std::lower_bound(arrow_ids_.begin(), arrow_ids_.end(), id);
        if (it != arrow_ids_.end() && *it == id)
            return static_cast<int>(it - arrow_ids_.begin());
        return std::nullopt;
    }
    // Completed quivers append unit loops after the sorted block.
    for (size_t i = 0; i < arrow_ids_.size(); ++i)
        if (arrow_ids_[i] == id)
            return static_cast<int>(i);
    return std::nullopt;
}

int Quiver::vertex_of(std::string_view name) const {
    auto v = find_vertex(name);
    if (!v)
        throw ParseError("unknown vertex \"" + std::string(name) + "\"");
    return *v;
}

int Quiver::arrow_of(std::string_view id) const {
    auto a = find_arrow(id);
    if (!a)
        throw ParseError("unknown arrow \"" + std::string(id) + "\"");
    return *a;
}

int Quiver::max_out_degree() const {
    size_t m = 0;
    for (auto& v : out_)
        m = std::max(m, v.size());
    return static_cast<int>(m);
}

Quiver Quiver::with_unit_loops(const std::string& prefix, std::vector<int>& units) const {
    for (auto& id : arrow_ids_)
        if (id.starts_with(prefix))
            throw ParseError("arrow id \"" + id + "\" collides with reserved namespace \"" +
                             prefix + "\"");
    Quiver q = *this;
    q.ids_sorted_ = false;
    units.assign(vertex_count(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
        int idx = static_cast<int>(q.arrow_ids_.size());
        q.arrow_ids_.push_back(prefix + vertex_names_[v]);
        q.source_.push_back(v);
        q.target_.push_back(v);
        q.out_[v].push_back(idx);
        q.in_[v].push_back(idx);
        units[v] = idx;
    }
    auto by_id = [&q](int a, int b) { return q.arrow_ids_[a] < q.arrow_ids_[b]; };
    for (auto& lst : q.out_)
        std::sort(lst.begin(), lst.end(), by_id);
    for (auto& lst : q.in_)
        std::sort(lst.begin(), lst.end(), by_id);
    return q;
}

PathWord empty_path(int vertex) {
    return PathWord{vertex, {}};
}

PathWord make_path(const Quiver& q, int base, std::vector<int> edges) {
    if (base < 0 || base >= q.vertex_count())
        throw ParseError("path base is not a vertex of the quiver");
    if (!edges.empty() && q.source(edges[0]) != base)
        throw ParseError("path base \"" + q.vertex_name(base) + "\" differs from source of \"" +
                         q.arrow_id(edges[0]) + "\"");
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (q.target(edges[i]) != q.source(edges[i + 1]))
            throw ParseError("non-composable pair at index " + std::to_string(i + 1) + ": \"" +
                             q.arrow_id(edges[i]) + "\" then \"" + q.arrow_id(edges[i + 1]) +
                             "\"");
    return PathWord{base, std::move(edges)};
}

int path_target(const Quiver& q, const PathWord& p) {
    return p.edges.empty() ? p.base : q.target(p.edges.back());
}

bool path_valid(const Quiver& q, const PathWord& p) {
    if (p.base < 0 || p.base >= q.vertex_count())
        return false;
    if (p.edges.empty())
        return true;
    for (int e : p.edges)
        if (e < 0 || e >= q.arrow_count())
            return false;
    if (q.source(p.edges[0]) != p.base)
        return false;
    for (size_t i = 0; i + 1 < p.edges.size(); ++i)
        if (q.target(p.edges[i]) != q.source(p.edges[i + 1]))
            return false;
    return true;
}

PathWord concat(const Quiver& q, const PathWord& a, const PathWord& b) {
    if (path_target(q, a) != path_source(b))
        throw ParseError("cannot concatenate: target \"" +
                         q.vertex_name(path_target(q, a)) + "\" differs from source \"" +
                         q.vertex_name(path_source(b)) + "\"");
    PathWord r = a;
    r.edges.insert(r.edges.end(), b.edges.begin(), b.edges.end());
    return r;
}

std::vector<PathWord> enumerate_paths(const Quiver& q, std::optional<int> source, int length) {
    if (length < 0)
        throw ParseError("path length must be nonnegative");
    std::vector<PathWord> out;
    std::vector<int> stack;
    auto grow = [&](auto&& self, int at, int remaining) -> void {
        if (remaining == 0) {
            int base = stack.empty() ? at : q.source(stack[0]);
            out.push_back(PathWord{base, stack});
            return;
        }
        for (int a : q.arrows_from(at)) {
            stack.push_back(a);
            self(self, q.target(a), remaining - 1);
            stack.pop_back();
        }
    };
    if (source) {
        grow(grow, *source, length);
    } else {
        for (int v = 0; v < q.vertex_count(); ++v)
            grow(grow, v, length);
    }
    return out;
}

std::string path_to_string(const Quiver& q, const PathWord& p) {
    if (p.edges.empty())
        return "eps:" + q.vertex_name(p.base);
    std::string s;
    for (size_t i = 0; i < p.edges.size(); ++i) {
        if (i)
            s += ' ';
        s += q.arrow_id(p.edges[i]);
    }
    return s;
}

PathWord path_from_tokens(const Quiver& q, std::span<const std::string> tokens) {
    if (tokens.empty())
        throw ParseError("empty path expression; use eps:<vertex> for an empty path");
    std::vector<int> edges;
    int at = -1;  // position after the tokens consumed so far
    for (auto& t : tokens) {
        if (t.starts_with("eps:")) {
            int v = q.vertex_of(t.substr(4));
            if (at != -1 && at != v)
                throw ParseError("misplaced \"" + t + "\" in path expression");
            at = v;
            continue;
        }
        int a = q.arrow_of(t);
        if (at != -1 && at != q.source(a))
            throw ParseError("non-composable pair at index " + std::to_string(edges.size()) +
                             ": expected an arrow from \"" + q.vertex_name(at) + "\", got \"" +
                             t + "\"");
        edges.push_back(a);
        at = q.target(a);
    }
    if (edges.empty())
        return empty_path(at);
    int base = q.source(edges[0]);
    return make_path(q, base, std::move(edges));
}

PathWord parse_path(const Quiver& q, std::string_view text) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok)
        tokens.push_back(tok);
    return path_from_tokens(q, tokens);
}

}  // namespace gq
