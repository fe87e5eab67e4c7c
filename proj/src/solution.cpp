#include "gq/solution.hpp"

#include <algorithm>
#include <cstdlib>

namespace gq {

namespace {

std::string pair_witness(const Quiver& q, int x, int y) {
    return q.arrow_id(x) + "|" + q.arrow_id(y);
}

std::string triple_witness(const Quiver& q, int a, int b, int c) {
    return q.arrow_id(a) + "|" + q.arrow_id(b) + "|" + q.arrow_id(c);
}

}  // namespace

const char* check_kind_name(CheckKind k) {
    switch (k) {
        case CheckKind::YB1: return "YB1";
        case CheckKind::YB2: return "YB2";
        case CheckKind::YB3: return "YB3";
        case CheckKind::I1: return "I1";
        case CheckKind::I2: return "I2";
        case CheckKind::LND: return "LND";
        case CheckKind::RND: return "RND";
        case CheckKind::Shape: return "shape";
    }
    return "?";
}

void ViolationReport::add(CheckKind k, std::string witness, std::string detail) {
    ++total;
    if (static_cast<int>(items.size()) < cap)
        items.push_back({k, std::move(witness), std::move(detail)});
}

int default_violation_cap() {
    if (const char* env = std::getenv("GQ_MAX_VIOLATIONS")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 100;
}

BraidedQuiver build_solution_indexed(Quiver q, const std::vector<std::array<int, 4>>& rows) {
    BraidedQuiver s;
    s.quiver_ = std::move(q);
    const Quiver& qq = s.quiver_;
    size_t n = static_cast<size_t>(qq.arrow_count()) * qq.arrow_count();
    s.first_.assign(n, -1);
    s.second_.assign(n, -1);
    for (auto& r : rows) {
        auto [x, y, u, v] = r;
        if (!s.composable(x, y))
            throw ParseError("sigma entry on non-composable pair " + pair_witness(qq, x, y));
        size_t i = s.idx(x, y);
        if (s.first_[i] != -1)
            throw ParseError("duplicate sigma entry for pair " + pair_witness(qq, x, y));
        if (qq.source(u) != qq.source(x))
            throw ParseError("endpoint violation at " + pair_witness(qq, x, y) +
                             ": s(out1) != s(in1)");
        if (qq.target(v) != qq.target(y))
            throw ParseError("endpoint violation at " + pair_witness(qq, x, y) +
                             ": t(out2) != t(in2)");
        if (qq.target(u) != qq.source(v))
            throw ParseError("endpoint violation at " + pair_witness(qq, x, y) +
                             ": output pair not composable");
        s.first_[i] = u;
        s.second_[i] = v;
    }
    for (int x = 0; x < qq.arrow_count(); ++x)
        for (int y : qq.arrows_from(qq.target(x)))
            if (s.first_[s.idx(x, y)] == -1)
                throw ParseError("missing composable pair " + pair_witness(qq, x, y) +
                                 " in sigma table");
    return s;
}

BraidedQuiver build_solution(Quiver q, const std::vector<SigmaEntry>& table) {
    std::vector<std::array<int, 4>> rows;
    rows.reserve(table.size());
    for (auto& e : table)
        rows.push_back({q.arrow_of(e.in[0]), q.arrow_of(e.in[1]), q.arrow_of(e.out[0]),
                        q.arrow_of(e.out[1])});
    return build_solution_indexed(std::move(q), rows);
}

ViolationReport check_ybe(const BraidedQuiver& s, int cap) {
    const Quiver& q = s.quiver();
    ViolationReport rep;
    rep.cap = cap;
    for (int a = 0; a < q.arrow_count(); ++a)
        for (int b : q.arrows_from(q.target(a)))
            for (int c : q.arrows_from(q.target(b))) {
                int ab1 = s.left_act(a, b), ab2 = s.right_act(a, b);
                int bc1 = s.left_act(b, c), bc2 = s.right_act(b, c);
                int m = s.left_act(ab2, c);
                // (a>b) > ((a<b)>c)  vs  a > (b>c)
                if (s.left_act(ab1, m) != s.left_act(a, bc1))
                    rep.add(CheckKind::YB1, triple_witness(q, a, b, c),
                            q.arrow_id(s.left_act(ab1, m)) + " != " +
                                q.arrow_id(s.left_act(a, bc1)));
                // (a>b) < ((a<b)>c)  vs  (a<(b>c)) > (b<c)
                if (s.right_act(ab1, m) != s.left_act(s.right_act(a, bc1), bc2))
                    rep.add(CheckKind::YB2, triple_witness(q, a, b, c),
                            q.arrow_id(s.right_act(ab1, m)) + " != " +
                                q.arrow_id(s.left_act(s.right_act(a, bc1), bc2)));
                // (a<b) < c  vs  (a<(b>c)) < (b<c)
                if (s.right_act(ab2, c) != s.right_act(s.right_act(a, bc1), bc2))
                    rep.add(CheckKind::YB3, triple_witness(q, a, b, c),
                            q.arrow_id(s.right_act(ab2, c)) + " != " +
                                q.arrow_id(s.right_act(s.right_act(a, bc1), bc2)));
            }
    return rep;
}

ViolationReport check_involutive(const BraidedQuiver& s, int cap) {
    const Quiver& q = s.quiver();
    ViolationReport rep;
    rep.cap = cap;
    for (int a = 0; a < q.arrow_count(); ++a)
        for (int b : q.arrows_from(q.target(a))) {
            int u = s.left_act(a, b), v = s.right_act(a, b);
            if (s.left_act(u, v) != a)
                rep.add(CheckKind::I1, pair_witness(q, a, b),
                        "sigma^2 first component is " + q.arrow_id(s.left_act(u, v)));
            if (s.right_act(u, v) != b)
                rep.add(CheckKind::I2, pair_witness(q, a, b),
                        "sigma^2 second component is " + q.arrow_id(s.right_act(u, v)));
        }
    return rep;
}

ViolationReport check_nondegenerate(const BraidedQuiver& s, int cap) {
    const Quiver& q = s.quiver();
    ViolationReport rep;
    rep.cap = cap;
    // left: x > - maps A(t(x),.) into A(s(x),.); image must have no repeats
    // and fill the whole codomain
    for (int x = 0; x < q.arrow_count(); ++x) {
        const auto& dom = q.arrows_from(q.target(x));
        const auto& cod = q.arrows_from(q.source(x));
        std::vector<int> image;
        for (int y : dom)
            image.push_back(s.left_act(x, y));
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        std::vector<int> codomain = cod;
        std::sort(codomain.begin(), codomain.end());
        if (repeats || sorted != codomain)
            rep.add(CheckKind::LND, q.arrow_id(x),
                    repeats ? "left action repeats a value" : "left action misses the hom-set");
    }
    // right: - < y maps A(.,s(y)) into A(.,t(y))
    for (int y = 0; y < q.arrow_count(); ++y) {
        const auto& dom = q.arrows_into(q.source(y));
        const auto& cod = q.arrows_into(q.target(y));
        std::vector<int> image;
        for (int x : dom)
            image.push_back(s.right_act(x, y));
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
        std::vector<int> codomain = cod;
        std::sort(codomain.begin(), codomain.end());
        if (repeats || sorted != codomain)
            rep.add(CheckKind::RND, q.arrow_id(y),
                    repeats ? "right action repeats a value" : "right action misses the hom-set");
    }
    return rep;
}

}  // namespace gq
