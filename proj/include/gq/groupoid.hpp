#pragma once

#include "gq/category.hpp"

namespace gq {

// Left fraction u^-1 v of two category elements with a common source. The
// representation is not canonical: equality always goes through the
// left-lcm test.
struct GroupoidElement {
    CatElement num;  // u, the inverted factor
    CatElement pos;  // v
};

GroupoidElement groupoid_identity(const StructureCategory& c, int vertex);
GroupoidElement iota(const StructureCategory& c, const CatElement& x);
GroupoidElement iota_path(const StructureCategory& c, const PathWord& p);
GroupoidElement iota_inverse_path(const StructureCategory& c, const PathWord& p);

inline int source_g(const GroupoidElement& a) { return a.num.target; }
inline int target_g(const GroupoidElement& a) { return a.pos.target; }

bool equal_g(const StructureCategory& c, const GroupoidElement& a, const GroupoidElement& b);
GroupoidElement multiply_g(const StructureCategory& c, const GroupoidElement& a,
                           const GroupoidElement& b);
GroupoidElement invert_g(const GroupoidElement& a);

// Peels the common left-divisor of the two sides, then returns both normal
// forms (entry id lists). Display-level canonicalization only.
std::pair<std::vector<int>, std::vector<int>> symmetric_normal(const StructureCategory& c,
                                                               const GroupoidElement& a);

// One letter of a word in the doubled quiver: an arrow or a formal inverse.
struct SignedArrow {
    int arrow;
    bool inverse;
};

// Folds a word in the doubled quiver into a fraction, left to right.
GroupoidElement fold_word(const StructureCategory& c, std::span<const SignedArrow> word);

// CLI syntax: space-separated arrow ids, "~id" for an inverse, "eps:<v>"
// for an identity.
GroupoidElement parse_groupoid_word(const StructureCategory& c, std::string_view text);

}  // namespace gq
