#pragma once

#include <array>
#include <string>
#include <vector>

#include "gq/quiver.hpp"

namespace gq {

// One row of an extensional sigma table, by arrow id.
struct SigmaEntry {
    std::array<std::string, 2> in;
    std::array<std::string, 2> out;
};

// A quiver together with a total map on composable arrow pairs
//   (x, y) |-> (left_act(x,y), right_act(x,y)).
// Construction checks totality and endpoint preservation only; the braid
// relation and the other properties are separate sweeps.
class BraidedQuiver {
public:
    const Quiver& quiver() const { return quiver_; }

    bool composable(int x, int y) const { return quiver_.target(x) == quiver_.source(y); }
    int left_act(int x, int y) const { return first_[idx(x, y)]; }
    int right_act(int x, int y) const { return second_[idx(x, y)]; }

    friend BraidedQuiver build_solution(Quiver q, const std::vector<SigmaEntry>& table);
    friend BraidedQuiver build_solution_indexed(
        Quiver q, const std::vector<std::array<int, 4>>& rows);

private:
    size_t idx(int x, int y) const { return static_cast<size_t>(x) * quiver_.arrow_count() + y; }

    Quiver quiver_;
    std::vector<int> first_, second_;  // -1 on non-composable pairs
};

BraidedQuiver build_solution(Quiver q, const std::vector<SigmaEntry>& table);
// Rows are {x, y, u, v} by arrow index.
BraidedQuiver build_solution_indexed(Quiver q, const std::vector<std::array<int, 4>>& rows);

enum class CheckKind { YB1, YB2, YB3, I1, I2, LND, RND, Shape };
const char* check_kind_name(CheckKind k);

struct Violation {
    CheckKind kind;
    std::string witness;  // the offending pair/triple/arrow
    std::string detail;
};

// Collected exhaustively in sweep order; only the first `cap` are stored but
// `total` counts every one found.
struct ViolationReport {
    std::vector<Violation> items;
    long total = 0;
    int cap = 100;

    bool empty() const { return total == 0; }
    void add(CheckKind k, std::string witness, std::string detail);
};

int default_violation_cap();  // 100, overridable via GQ_MAX_VIOLATIONS

ViolationReport check_ybe(const BraidedQuiver& s, int cap = default_violation_cap());
ViolationReport check_involutive(const BraidedQuiver& s, int cap = default_violation_cap());
ViolationReport check_nondegenerate(const BraidedQuiver& s, int cap = default_violation_cap());

}  // namespace gq
