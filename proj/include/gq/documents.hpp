#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gq/heap.hpp"
#include "gq/presentation.hpp"
#include "gq/solution.hpp"

namespace gq {

enum class DocKind { Quiver, Solution, Presentation, Heap, Group };

const char* doc_kind_name(DocKind k);

// Self-describing envelope shared by every file format: {"kind": ...,
// "format_version": 1, ...payload}. Serialization is canonical (sorted keys,
// id-sorted lists), so parse then serialize is byte-stable.
struct Document {
    DocKind kind;
    std::variant<Quiver, BraidedQuiver, Presentation, TernaryOp, GroupTable> payload;
    std::vector<std::string> warnings;  // e.g. collapsed duplicate relations

    const Quiver& as_quiver() const { return std::get<Quiver>(payload); }
    const BraidedQuiver& as_solution() const { return std::get<BraidedQuiver>(payload); }
    const Presentation& as_presentation() const { return std::get<Presentation>(payload); }
    const TernaryOp& as_ternary() const { return std::get<TernaryOp>(payload); }
    const GroupTable& as_group() const { return std::get<GroupTable>(payload); }
};

Document parse_document(std::string_view text);
std::string serialize(const Document& d);

Document wrap(Quiver q);
Document wrap(BraidedQuiver s);
Document wrap(Presentation p);
Document wrap(TernaryOp t);
Document wrap(GroupTable g);

// Built-in documents transcribed from the worked examples: solutions z3,
// z2n (needs n), zk (needs k) and presentations pres0, pres1, pres2.
Document builtin_example(std::string_view name, std::optional<int> param);

// Accepts a solution document directly, or a presentation document that
// passes the converse construction.
BraidedQuiver solution_from_document(const Document& d);

}  // namespace gq
