#pragma once

#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <vector>

#include "gq/rc_system.hpp"

namespace gq {

// Right-lcm of a set of same-source atoms, with the canonical representative
// produced by the lcm tower on the id-sorted atom list. Empty atom set =
// identity at `source`.
struct GarsideEntry {
    int source = -1;
    int target = -1;
    std::vector<int> atoms;
    PathWord repr;

    int length() const { return static_cast<int>(atoms.size()); }
    bool is_identity() const { return atoms.empty(); }
};

// Element of the structure category, canonicalized by its strict greedy
// normal decomposition. Two elements are equal iff their entry sequences
// (and source, for identities) coincide.
struct CatElement {
    int source = -1;
    int target = -1;
    int length = 0;
    std::vector<int> nf;  // registry entry ids, head first

    bool is_identity() const { return nf.empty(); }
    bool operator==(const CatElement&) const = default;
};

struct GarsideFamily {
    std::vector<int> entries;  // entry ids; identities first, then by (source, length, atoms)
    int identity_count = 0;
    bool dual_checked = false;
    bool dual_matches = false;
};

// The structure category of an involutive non-degenerate solution: word
// problem, complements and lcms through the grid calculus, the Garside
// family, and strict greedy normal forms.
class StructureCategory {
public:
    // Validates the braid relation, involutivity and both non-degeneracy
    // directions; refuses otherwise.
    explicit StructureCategory(BraidedQuiver s);

    const BraidedQuiver& solution() const { return sol_; }
    const Quiver& quiver() const { return sol_.quiver(); }
    const RcSystem& star_system() const { return star_; }
    const CoRcSystem& bullet_system() const { return bullet_; }

    const GarsideEntry& entry(int id) const;
    int entry_id(int source, std::vector<int> atoms) const;

    CatElement normal_form(const PathWord& p) const;
    bool equal(const PathWord& p, const PathWord& q) const;
    PathWord representative(const CatElement& e) const;
    CatElement compose(const CatElement& a, const CatElement& b) const;

    // u \ v: the factor with u,(u\v) and v,(v\u) closing the right-lcm square.
    CatElement right_complement(const PathWord& u, const PathWord& v) const;
    bool left_divides(const CatElement& e, const CatElement& u) const;

    // Right-lcm of a nonempty duplicate-free set of same-source atoms.
    CatElement delta(std::span<const int> atoms) const;
    // Same tower evaluated in the order given (no sorting); used to test
    // permutation invariance.
    PathWord delta_path(std::span<const int> atoms_in_order) const;

    // Left-lcm of a nonempty duplicate-free set of same-target atoms.
    CatElement left_lcm_atoms(std::span<const int> atoms) const;
    PathWord left_lcm_path(std::span<const int> atoms_in_order) const;

    CatElement right_lcm(const CatElement& u, const CatElement& v) const;
    CatElement left_lcm(const CatElement& u, const CatElement& v) const;
    // p with p,u closing the left-lcm square: the class of p is u \_L v.
    PathWord left_complement_path(const PathWord& u, const PathWord& v) const;

    // The atoms whose left-lcm is the given entry.
    std::vector<int> tilde_atoms(const GarsideEntry& e) const;

    // w with w.g = left-lcm(f, g); both w and w.g land in the family.
    int lcm_witness(int f, int g) const;

    GarsideFamily garside_family(bool verify_dual = true) const;

private:
    friend struct CategoryTestAccess;

    PathWord strip(const PathWord& p) const { return strip_units(star_, p); }
    bool path_left_divides(const PathWord& e, const PathWord& u) const;
    // (v * u) with units stripped: the tail such that v,tail composes to u
    // whenever v left-divides u.
    PathWord complement_path(const PathWord& v, const PathWord& u) const;
    int omega(std::span<const int> xs) const;
    int omega_tilde(std::span<const int> ys) const;
    std::vector<int> atom_divisors(const PathWord& u) const;

    BraidedQuiver sol_;
    RcSystem star_;       // completed
    CoRcSystem bullet_;   // completed

    // idempotent memo: the entry for a given (source, atom set) is computed
    // at most once and never changes afterwards; a deque keeps references
    // stable across inserts and the mutex makes concurrent fills safe
    mutable std::mutex entry_mutex_;
    mutable std::deque<GarsideEntry> entries_;
    mutable std::map<std::pair<int, std::vector<int>>, int> entry_ids_;
};

// Independent word-problem oracle: the full congruence class of p obtained
// by BFS over single-relation rewrites, sorted lexicographically. Throws
// once the class grows past `cap`.
std::vector<PathWord> bfs_class(const BraidedQuiver& s, const PathWord& p, size_t cap = 10000);

struct OracleCheckResult {
    bool ok = true;
    long paths = 0;
    long classes = 0;
    std::string detail;  // first disagreement, if any
};

// Cross-checks normal-form equality against BFS class membership on every
// pair of same-endpoint paths up to max_len, and checks classes have
// constant length.
OracleCheckResult oracle_check(const StructureCategory& c, int max_len, size_t cap = 10000);

}  // namespace gq
