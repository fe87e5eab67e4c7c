#include "gq/heap.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gq {

namespace {

std::string triple(const TernaryOp& t, int a, int b, int c) {
    return "<" + t.elements[a] + "," + t.elements[b] + "," + t.elements[c] + ">";
}

}  // namespace

TernaryOp TernaryOp::from_table(std::vector<std::string> elements, std::vector<int> table) {
    TernaryOp t;
    t.elements = std::move(elements);
    if (!std::is_sorted(t.elements.begin(), t.elements.end()))
        throw Error("ternary op elements must be sorted");
    size_t n = t.elements.size();
    if (n == 0)
        throw ParseError("ternary op needs at least one element");
    if (table.size() != n * n * n)
        throw ParseError("ternary table has wrong size");
    for (int v : table)
        if (v < 0 || v >= static_cast<int>(n))
            throw ParseError("ternary table value out of range");
    t.table = std::move(table);
    return t;
}

TernaryOp TernaryOp::build(std::vector<std::string> elements,
                           const std::vector<std::array<std::string, 4>>& rows) {
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw ParseError("duplicate element id");
    auto index = [&](const std::string& s) {
        auto it = std::lower_bound(elements.begin(), elements.end(), s);
        if (it == elements.end() || *it != s)
            throw ParseError("unknown element \"" + s + "\" in ternary table");
        return static_cast<int>(it - elements.begin());
    };
    size_t n = elements.size();
    std::vector<int> table(n * n * n, -1);
    for (auto& r : rows) {
        size_t i = (static_cast<size_t>(index(r[0])) * n + index(r[1])) * n + index(r[2]);
        if (table[i] != -1)
            throw ParseError("duplicate ternary entry for (" + r[0] + "," + r[1] + "," + r[2] +
                             ")");
        table[i] = index(r[3]);
    }
    for (size_t i = 0; i < table.size(); ++i)
        if (table[i] == -1)
            throw ParseError("ternary table is not total (" + std::to_string(n * n * n -
                             std::count(table.begin(), table.end(), -1)) + " of " +
                             std::to_string(n * n * n) + " triples given)");
    return from_table(std::move(elements), std::move(table));
}

HeapReport check_heap(const TernaryOp& t) {
    HeapReport rep;
    int n = t.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (t.at(a, b, b) != a)
                rep.m1.fail(triple(t, a, b, b) + " = " + t.elements[t.at(a, b, b)]);
            if (t.at(a, a, b) != b)
                rep.m2.fail(triple(t, a, a, b) + " = " + t.elements[t.at(a, a, b)]);
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (t.at(a, t.at(a, b, c), c) != b)
                    rep.involutive_cond.fail(triple(t, a, b, c));
                if (t.at(a, b, c) != t.at(c, b, a))
                    rep.abelian.fail(triple(t, a, b, c));
                for (int d = 0; d < n; ++d) {
                    if (t.at(a, b, d) != t.at(t.at(a, b, c), c, d))
                        rep.a1.fail(triple(t, a, b, c) + ",d=" + t.elements[d]);
                    if (t.at(a, c, d) != t.at(a, b, t.at(b, c, d)))
                        rep.a2.fail(triple(t, a, b, c) + ",d=" + t.elements[d]);
                    for (int e = 0; e < n; ++e)
                        if (t.at(a, b, t.at(c, d, e)) != t.at(t.at(a, b, c), d, e))
                            rep.assoc.fail(triple(t, a, b, c) + "," + t.elements[d] + "," +
                                           t.elements[e]);
                }
            }
    return rep;
}

GroupTable GroupTable::build(std::vector<std::string> elements, std::vector<int> mul, int unit,
                             int max_order) {
    GroupTable g;
    g.elements = std::move(elements);
    int n = g.n();
    if (n == 0)
        throw ParseError("group needs at least one element");
    if (n > max_order)
        throw PropertyError("group order " + std::to_string(n) +
                            " above the validation bound " + std::to_string(max_order));
    if (!std::is_sorted(g.elements.begin(), g.elements.end()))
        throw Error("group elements must be sorted");
    if (static_cast<int>(mul.size()) != n * n)
        throw ParseError("multiplication table has wrong size");
    for (int v : mul)
        if (v < 0 || v >= n)
            throw ParseError("multiplication table value out of range");
    if (unit < 0 || unit >= n)
        throw ParseError("group unit is not an element");
    g.mul = std::move(mul);
    g.unit = unit;

    for (int a = 0; a < n; ++a)
        if (g.at(unit, a) != a || g.at(a, unit) != a)
            throw PropertyError("unit law fails at " + g.elements[a]);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.at(g.at(a, b), c) != g.at(a, g.at(b, c)))
                    throw PropertyError("associativity fails at (" + g.elements[a] + "," +
                                        g.elements[b] + "," + g.elements[c] + ")");
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.at(a, b) == unit && g.at(b, a) == unit) {
                g.inverse[a] = b;
                break;
            }
        if (g.inverse[a] < 0)
            throw PropertyError("no inverse for " + g.elements[a]);
    }
    return g;
}

TernaryOp heap_from_group(const GroupTable& g) {
    int n = g.n();
    std::vector<int> table(static_cast<size_t>(n) * n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                table[(static_cast<size_t>(a) * n + b) * n + c] =
                    g.at(g.at(a, g.inverse[b]), c);
    return TernaryOp::from_table(g.elements, std::move(table));
}

GroupTable group_from_heap(const TernaryOp& h, int unit) {
    if (!check_heap(h).is_heap())
        throw PropertyError("group_from_heap: ternary op fails the heap axioms");
    if (unit < 0 || unit >= h.n())
        throw ParseError("group_from_heap: unit is not an element");
    int n = h.n();
    std::vector<int> mul(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[static_cast<size_t>(a) * n + b] = h.at(a, unit, b);
    return GroupTable::build(h.elements, std::move(mul), unit);
}

Quiver pair_groupoid(const std::vector<std::string>& elements) {
    std::vector<ArrowSpec> arrows;
    for (auto& a : elements)
        for (auto& b : elements)
            arrows.push_back({"[" + a + "," + b + "]", a, b});
    return Quiver::build(elements, std::move(arrows));
}

bool is_pair_groupoid(const Quiver& q) {
    if (q.arrow_count() != q.vertex_count() * q.vertex_count())
        return false;
    std::map<std::pair<int, int>, int> count;
    for (int a = 0; a < q.arrow_count(); ++a)
        count[{q.source(a), q.target(a)}]++;
    for (auto& [k, c] : count)
        if (c != 1)
            return false;
    return static_cast<int>(count.size()) == q.vertex_count() * q.vertex_count();
}

ConditionStatus check_ternary_braid_conditions(const TernaryOp& t) {
    ConditionStatus st;
    int n = t.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    int abc = t.at(a, b, c);
                    int bcd = t.at(b, c, d);
                    if (t.at(a, abc, t.at(abc, c, d)) != t.at(a, b, bcd))
                        st.fail("first identity at (" + t.elements[a] + "," + t.elements[b] +
                                "," + t.elements[c] + "," + t.elements[d] + ")");
                    if (t.at(t.at(a, b, bcd), bcd, d) != t.at(abc, c, d))
                        st.fail("second identity at (" + t.elements[a] + "," + t.elements[b] +
                                "," + t.elements[c] + "," + t.elements[d] + ")");
                }
    return st;
}

BraidedQuiver solution_from_ternary(const TernaryOp& t) {
    ConditionStatus st = check_ternary_braid_conditions(t);
    if (!st.pass)
        throw PropertyError("solution_from_ternary: " + st.witnesses.front());
    Quiver q = pair_groupoid(t.elements);
    auto arrow = [&](int a, int b) {
        return q.arrow_of("[" + t.elements[a] + "," + t.elements[b] + "]");
    };
    std::vector<std::array<int, 4>> rows;
    int n = t.n();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                int m = t.at(a, b, c);
                rows.push_back({arrow(a, b), arrow(b, c), arrow(a, m), arrow(m, c)});
            }
    return build_solution_indexed(std::move(q), rows);
}

PrebraidingReport check_prebraiding(const BraidedQuiver& s) {
    const Quiver& q = s.quiver();
    if (!is_pair_groupoid(q))
        throw PropertyError("check_prebraiding: quiver is not a complete quiver of degree 1");
    PrebraidingReport rep;

    std::vector<int> arrow(static_cast<size_t>(q.vertex_count()) * q.vertex_count());
    for (int a = 0; a < q.arrow_count(); ++a)
        arrow[static_cast<size_t>(q.source(a)) * q.vertex_count() + q.target(a)] = a;
    auto mul = [&](int x, int y) {
        return arrow[static_cast<size_t>(q.source(x)) * q.vertex_count() + q.target(y)];
    };
    auto unit_loop = [&](int v) { return arrow[static_cast<size_t>(v) * q.vertex_count() + v]; };
    auto w2 = [&](int x, int y) { return q.arrow_id(x) + "|" + q.arrow_id(y); };

    for (int x = 0; x < q.arrow_count(); ++x) {
        int ut = unit_loop(q.target(x)), us = unit_loop(q.source(x));
        if (s.left_act(x, ut) != us || s.right_act(x, ut) != x)
            rep.bg1.fail(q.arrow_id(x));
        if (s.left_act(us, x) != x || s.right_act(us, x) != unit_loop(q.target(x)))
            rep.bg2.fail(q.arrow_id(x));
    }
    for (int x = 0; x < q.arrow_count(); ++x)
        for (int y : q.arrows_from(q.target(x)))
            for (int z : q.arrows_from(q.target(y))) {
                int yz = mul(y, z);
                if (s.left_act(x, yz) != mul(s.left_act(x, y),
                                             s.left_act(s.right_act(x, y), z)) ||
                    s.right_act(x, yz) != s.right_act(s.right_act(x, y), z))
                    rep.bg3.fail(w2(x, y) + "|" + q.arrow_id(z));
                int xy = mul(x, y);
                if (s.left_act(xy, z) != s.left_act(x, s.left_act(y, z)) ||
                    s.right_act(xy, z) != mul(s.right_act(x, s.left_act(y, z)),
                                              s.right_act(y, z)))
                    rep.bg4.fail(w2(x, y) + "|" + q.arrow_id(z));
            }
    for (int x = 0; x < q.arrow_count(); ++x)
        for (int y : q.arrows_from(q.target(x)))
            if (mul(s.left_act(x, y), s.right_act(x, y)) != mul(x, y))
                rep.bg5.fail(w2(x, y));
    return rep;
}

MorphismReport check_morphism(std::span<const int> f, const TernaryOp& ha, int unit_a,
                              const TernaryOp& hb, int unit_b) {
    if (static_cast<int>(f.size()) != ha.n())
        throw ParseError("check_morphism: map size differs from the domain");
    for (int v : f)
        if (v < 0 || v >= hb.n())
            throw ParseError("check_morphism: map value out of range");
    if (!check_heap(ha).is_heap() || !check_heap(hb).is_heap())
        throw PropertyError("check_morphism: both ternary ops must be heaps");

    MorphismReport rep;
    int n = ha.n();
    auto mul_a = [&](int a, int b) { return ha.at(a, unit_a, b); };
    auto mul_b = [&](int a, int b) { return hb.at(a, unit_b, b); };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (f[mul_a(a, b)] != mul_b(f[a], f[b]))
                rep.group_hom.fail("(" + ha.elements[a] + "," + ha.elements[b] + ")");

    if (f[unit_a] != unit_b) {
        rep.pointed_heap.fail("unit not preserved");
        rep.braiding_intertwiner.fail("distinguished vertex not preserved");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (f[ha.at(a, b, c)] != hb.at(f[a], f[b], f[c]))
                    rep.pointed_heap.fail(triple(ha, a, b, c));

    // the same condition read on the pair groupoids, swept through sigma
    BraidedQuiver sa = solution_from_ternary(ha);
    BraidedQuiver sb = solution_from_ternary(hb);
    const Quiver& qa = sa.quiver();
    const Quiver& qb = sb.quiver();
    auto image_arrow = [&](int x) {
        return qb.arrow_of("[" + hb.elements[f[qa.source(x)]] + "," +
                           hb.elements[f[qa.target(x)]] + "]");
    };
    for (int x = 0; x < qa.arrow_count(); ++x)
        for (int y : qa.arrows_from(qa.target(x))) {
            bool ok = image_arrow(sa.left_act(x, y)) ==
                          sb.left_act(image_arrow(x), image_arrow(y)) &&
                      image_arrow(sa.right_act(x, y)) ==
                          sb.right_act(image_arrow(x), image_arrow(y));
            if (!ok)
                rep.braiding_intertwiner.fail(qa.arrow_id(x) + "|" + qa.arrow_id(y));
        }
    return rep;
}

}  // namespace gq
