#pragma once

#include <utility>

#include "gq/solution.hpp"

namespace gq {

inline constexpr const char* kUnitPrefix = "eps:";

// Weak RC-system derived from an involutive left-non-degenerate table:
//   x * y := the unique z with left_act(x, z) = y, for same-source x, y.
// complete() inserts one fresh loop per vertex and installs the unit
// equations; the uncompleted diagonal stays queryable through star_raw.
class RcSystem {
public:
    const Quiver& quiver() const { return quiver_; }
    bool completed() const { return completed_; }
    int original_arrow_count() const { return original_arrows_; }
    bool is_unit(int a) const { return a >= original_arrows_; }
    int unit_at(int v) const { return units_[v]; }

    // uncompleted table; defined exactly on same-source original pairs
    int star_raw(int x, int y) const { return table_[idx(x, y)]; }

    // the operation in force: unit-inserted when completed
    int star(int x, int y) const;

    friend RcSystem derive_star(const BraidedQuiver& s);
    friend RcSystem complete(RcSystem r);

private:
    size_t idx(int x, int y) const { return static_cast<size_t>(x) * original_arrows_ + y; }

    Quiver quiver_;
    int original_arrows_ = 0;
    bool completed_ = false;
    std::vector<int> units_;  // vertex -> inserted loop (completed only)
    std::vector<int> table_;  // original_arrows^2, -1 where undefined
};

// Dual system on same-target pairs:
//   x . y := the unique w with right_act(w, x) = y.
class CoRcSystem {
public:
    const Quiver& quiver() const { return quiver_; }
    bool completed() const { return completed_; }
    int original_arrow_count() const { return original_arrows_; }
    bool is_unit(int a) const { return a >= original_arrows_; }
    int unit_at(int v) const { return units_[v]; }

    int bullet_raw(int x, int y) const { return table_[idx(x, y)]; }
    int bullet(int x, int y) const;

    friend CoRcSystem derive_bullet(const BraidedQuiver& s);
    friend CoRcSystem complete(CoRcSystem c);

private:
    size_t idx(int x, int y) const { return static_cast<size_t>(x) * original_arrows_ + y; }

    Quiver quiver_;
    int original_arrows_ = 0;
    bool completed_ = false;
    std::vector<int> units_;
    std::vector<int> table_;
};

RcSystem derive_star(const BraidedQuiver& s);
CoRcSystem derive_bullet(const BraidedQuiver& s);
RcSystem complete(RcSystem r);
CoRcSystem complete(CoRcSystem c);

// Path-level grid fill over the completed system. Returns (p*q, q*p);
// p*q runs parallel to q. Empty paths follow the conventions
// eps*eps = eps, eps*a = a, a*eps = eps at the target of a.
std::pair<PathWord, PathWord> grid_star(const RcSystem& r, const PathWord& p, const PathWord& q);

// Dual grid for same-target paths. Returns (p.q, q.p); p.q runs parallel
// to q and ends at the source of p.
std::pair<PathWord, PathWord> grid_bullet(const CoRcSystem& c, const PathWord& p,
                                          const PathWord& q);

// Drops every inserted unit loop; the result is a path of the original
// quiver with the same endpoints.
PathWord strip_units(const RcSystem& r, const PathWord& p);
PathWord strip_units(const CoRcSystem& c, const PathWord& p);

}  // namespace gq
