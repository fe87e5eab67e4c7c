#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gq/check.hpp"
#include "gq/solution.hpp"

namespace gq {

// A quadratic relation lhs[0]|lhs[1] ~ rhs[0]|rhs[1] between length-2 paths
// with matching endpoints, stored with lhs <= rhs.
struct Relation {
    std::array<int, 2> lhs;
    std::array<int, 2> rhs;
    auto operator<=>(const Relation&) const = default;
};

// Presented category with quadratic relations, canonicalized: sides sorted
// within each relation, relations sorted, duplicates collapsed.
class Presentation {
public:
    static Presentation build(Quiver q,
                              const std::vector<std::array<std::string, 4>>& relations);
    static Presentation build_indexed(Quiver q, std::vector<Relation> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int duplicates_collapsed() const { return duplicates_; }

private:
    Quiver quiver_;
    std::vector<Relation> relations_;
    int duplicates_ = 0;
};

struct ConditionReport {
    ConditionStatus i, ii, ii_dual, iii, iii_dual, iv, iv_dual, v;
    std::map<int, int> z;       // arrow -> z_a where condition iii found one
    std::map<int, int> z_dual;  // arrow -> z^a

    bool all_pass() const {
        return i.pass && ii.pass && ii_dual.pass && iii.pass && iii_dual.pass && v.pass;
    }
};

// Conditions for the converse construction. All conditions are evaluated
// even after one fails, so reports are complete.
ConditionReport check_conditions(const Presentation& p);

// Builds the solution whose structure category the presentation presents.
// Refuses unless check_conditions passes; the result is guaranteed to pass
// the braid, involutivity and non-degeneracy sweeps.
BraidedQuiver extract_solution(const Presentation& p);

// R \ trivial is contained in the extracted relation set and conversely.
bool roundtrip_check(const Presentation& p, const BraidedQuiver& s);

}  // namespace gq
