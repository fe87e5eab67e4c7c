#pragma once

#include <span>
#include <string>
#include <vector>

#include "gq/check.hpp"
#include "gq/solution.hpp"

namespace gq {

// Total ternary operation on a finite set; elements are stored sorted and
// addressed by index.
struct TernaryOp {
    std::vector<std::string> elements;
    std::vector<int> table;  // n^3, [a][b][c] row-major

    int n() const { return static_cast<int>(elements.size()); }
    int at(int a, int b, int c) const {
        return table[(static_cast<size_t>(a) * n() + b) * n() + c];
    }

    static TernaryOp from_table(std::vector<std::string> elements, std::vector<int> table);
    static TernaryOp build(std::vector<std::string> elements,
                           const std::vector<std::array<std::string, 4>>& rows);
};

struct HeapReport {
    ConditionStatus m1, m2, assoc;     // the heap axioms
    ConditionStatus a1, a2;            // consequences of associativity
    ConditionStatus involutive_cond;   // <a,<a,b,c>,c> = b
    ConditionStatus abelian;           // <a,b,c> = <c,b,a>

    bool is_heap() const { return m1.pass && m2.pass && assoc.pass; }
};

HeapReport check_heap(const TernaryOp& t);

struct GroupTable {
    std::vector<std::string> elements;
    std::vector<int> mul;  // n^2 row-major
    int unit = -1;
    std::vector<int> inverse;

    int n() const { return static_cast<int>(elements.size()); }
    int at(int a, int b) const { return mul[static_cast<size_t>(a) * n() + b]; }

    // Validates the group axioms exhaustively; refuses above the order bound.
    static GroupTable build(std::vector<std::string> elements, std::vector<int> mul,
                            int unit, int max_order = 64);
};

TernaryOp heap_from_group(const GroupTable& g);
GroupTable group_from_heap(const TernaryOp& h, int unit);

// Complete degree-1 quiver on the given vertex names, arrows "[a,b]".
Quiver pair_groupoid(const std::vector<std::string>& elements);
bool is_pair_groupoid(const Quiver& q);

// Braiding [a,b]|[b,c] -> [a,m]|[m,c] with m the ternary value. Requires the
// two braid-compatibility identities of the ternary operation; refuses with
// a witness quadruple otherwise.
BraidedQuiver solution_from_ternary(const TernaryOp& t);

// The same identities as a report instead of an error.
ConditionStatus check_ternary_braid_conditions(const TernaryOp& t);

struct PrebraidingReport {
    ConditionStatus bg1, bg2, bg3, bg4, bg5;
    bool pass() const { return bg1.pass && bg2.pass && bg3.pass && bg4.pass && bg5.pass; }
};

// BG axioms against the unique pair-groupoid multiplication.
PrebraidingReport check_prebraiding(const BraidedQuiver& s);

struct MorphismReport {
    ConditionStatus group_hom;          // f(a*b) = f(a)*'f(b)
    ConditionStatus pointed_heap;       // ternary intertwine + unit
    ConditionStatus braiding_intertwiner;  // sigma intertwine on pair groupoids + unit
    bool all_agree() const {
        return group_hom.pass == pointed_heap.pass &&
               pointed_heap.pass == braiding_intertwiner.pass;
    }
};

// f maps indices of ha.elements to indices of hb.elements; both ternary ops
// must be heaps.
MorphismReport check_morphism(std::span<const int> f, const TernaryOp& ha, int unit_a,
                              const TernaryOp& hb, int unit_b);

}  // namespace gq
