#include "gq/presentation.hpp"

#include <algorithm>
#include <set>

namespace gq {

namespace {

std::string side_str(const Quiver& q, const std::array<int, 2>& s) {
    return q.arrow_id(s[0]) + "|" + q.arrow_id(s[1]);
}

std::string rel_str(const Quiver& q, const Relation& r) {
    return side_str(q, r.lhs) + " ~ " + side_str(q, r.rhs);
}

}  // namespace

Presentation Presentation::build_indexed(Quiver q, std::vector<Relation> relations) {
    for (auto& r : relations) {
        auto check_side = [&](const std::array<int, 2>& s) {
            if (q.target(s[0]) != q.source(s[1]))
                throw ParseError("relation side " + side_str(q, s) + " is not composable");
        };
        check_side(r.lhs);
        check_side(r.rhs);
        if (q.source(r.lhs[0]) != q.source(r.rhs[0]) || q.target(r.lhs[1]) != q.target(r.rhs[1]))
            throw ParseError("relation " + rel_str(q, r) + " has mismatched endpoints");
        if (r.rhs < r.lhs)
            std::swap(r.lhs, r.rhs);
    }
    std::sort(relations.begin(), relations.end());
    size_t before = relations.size();
    relations.erase(std::unique(relations.begin(), relations.end()), relations.end());

    Presentation p;
    p.quiver_ = std::move(q);
    p.relations_ = std::move(relations);
    p.duplicates_ = static_cast<int>(before - p.relations_.size());
    return p;
}

Presentation Presentation::build(Quiver q,
                                 const std::vector<std::array<std::string, 4>>& relations) {
    std::vector<Relation> rels;
    rels.reserve(relations.size());
    for (auto& r : relations)
        rels.push_back({{q.arrow_of(r[0]), q.arrow_of(r[1])},
                        {q.arrow_of(r[2]), q.arrow_of(r[3])}});
    return build_indexed(std::move(q), std::move(rels));
}

namespace {

// Partial complement tables read off the relation set; -1 where no (or no
// unique) relation provides a value.
struct Tables {
    int n;
    std::vector<int> star;    // a * b: continuation of a in the unique a|. ~ b|. relation
    std::vector<int> bullet;  // a . b: head of the .|a side in the unique .|a ~ .|b relation

    int& star_at(int a, int b) { return star[static_cast<size_t>(a) * n + b]; }
    int& bullet_at(int a, int b) { return bullet[static_cast<size_t>(a) * n + b]; }
    int star_at(int a, int b) const { return star[static_cast<size_t>(a) * n + b]; }
    int bullet_at(int a, int b) const { return bullet[static_cast<size_t>(a) * n + b]; }
};

Tables read_tables(const Presentation& p) {
    const Quiver& q = p.quiver();
    Tables t{q.arrow_count(), {}, {}};
    t.star.assign(static_cast<size_t>(t.n) * t.n, -1);
    t.bullet.assign(static_cast<size_t>(t.n) * t.n, -1);
    for (auto& r : p.relations()) {
        if (r.lhs[0] != r.rhs[0]) {
            t.star_at(r.lhs[0], r.rhs[0]) = r.lhs[1];
            t.star_at(r.rhs[0], r.lhs[0]) = r.rhs[1];
        }
        if (r.lhs[1] != r.rhs[1]) {
            t.bullet_at(r.lhs[1], r.rhs[1]) = r.lhs[0];
            t.bullet_at(r.rhs[1], r.lhs[1]) = r.rhs[0];
        }
    }
    return t;
}

}  // namespace

ConditionReport check_conditions(const Presentation& p) {
    const Quiver& q = p.quiver();
    ConditionReport rep;

    // i: quadratic shape is enforced by the type; check each length-2 path
    // appears in at most one relation
    std::map<std::array<int, 2>, int> occurrences;
    for (auto& r : p.relations()) {
        occurrences[r.lhs]++;
        if (!(r.rhs == r.lhs))
            occurrences[r.rhs]++;
    }
    for (auto& [side, count] : occurrences)
        if (count > 1)
            rep.i.fail("path " + side_str(q, side) + " appears in " + std::to_string(count) +
                       " relations");

    // ii / ii': existence and uniqueness of the cross relation for every
    // ordered pair of distinct same-source (same-target) generators
    auto pair_sweep = [&](bool source_side, ConditionStatus& status) {
        for (int v = 0; v < q.vertex_count(); ++v) {
            const auto& atoms = source_side ? q.arrows_from(v) : q.arrows_into(v);
            for (int a : atoms)
                for (int b : atoms) {
                    if (a >= b)
                        continue;
                    int found = 0;
                    for (auto& r : p.relations()) {
                        int ra = source_side ? r.lhs[0] : r.lhs[1];
                        int rb = source_side ? r.rhs[0] : r.rhs[1];
                        if ((ra == a && rb == b) || (ra == b && rb == a))
                            ++found;
                    }
                    if (found != 1)
                        status.fail("pair " + q.arrow_id(a) + ", " + q.arrow_id(b) + " has " +
                                    std::to_string(found) + " relations");
                }
        }
    };
    pair_sweep(true, rep.ii);
    pair_sweep(false, rep.ii_dual);

    Tables t = read_tables(p);

    // iii / iii': the unique generator missed by the complement image, with
    // clause b checked against the relation list
    auto z_sweep = [&](bool source_side, ConditionStatus& status, std::map<int, int>& zmap) {
        for (int a = 0; a < q.arrow_count(); ++a) {
            const auto& domain = source_side ? q.arrows_from(q.source(a))
                                             : q.arrows_into(q.target(a));
            const auto& codomain = source_side ? q.arrows_from(q.target(a))
                                               : q.arrows_into(q.source(a));
            std::set<int> image;
            for (int b : domain) {
                if (b == a)
                    continue;
                int val = source_side ? t.star_at(a, b) : t.bullet_at(a, b);
                if (val >= 0)
                    image.insert(val);
            }
            std::vector<int> accepted;
            for (int zc : codomain) {
                bool a_clause = true;
                for (int v : codomain)
                    if (v != zc && !image.count(v))
                        a_clause = false;
                bool b_clause = true;
                for (auto& r : p.relations()) {
                    std::array<int, 2> self = source_side ? std::array<int, 2>{a, zc}
                                                          : std::array<int, 2>{zc, a};
                    if ((r.lhs == self || r.rhs == self) && !(r.lhs == self && r.rhs == self))
                        b_clause = false;
                }
                if (a_clause && b_clause)
                    accepted.push_back(zc);
            }
            if (accepted.size() == 1) {
                zmap[a] = accepted[0];
            } else {
                status.fail("arrow " + q.arrow_id(a) + " admits " +
                            std::to_string(accepted.size()) + " candidates");
            }
        }
    };
    z_sweep(true, rep.iii, rep.z);
    z_sweep(false, rep.iii_dual, rep.z_dual);

    // iv / iv' (derived): self-relations pin down the z's
    for (auto& r : p.relations()) {
        if (r.lhs[0] == r.rhs[0]) {
            bool ok = r.lhs[1] == r.rhs[1];
            auto it = rep.z.find(r.lhs[0]);
            if (ok && it != rep.z.end())
                ok = r.lhs[1] == it->second;
            if (!ok)
                rep.iv.fail(rel_str(q, r));
        }
        if (r.lhs[1] == r.rhs[1]) {
            bool ok = r.lhs[0] == r.rhs[0];
            auto it = rep.z_dual.find(r.lhs[1]);
            if (ok && it != rep.z_dual.end())
                ok = r.lhs[0] == it->second;
            if (!ok)
                rep.iv_dual.fail(rel_str(q, r));
        }
    }

    // v: the cube law on pairwise distinct same-source triples
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto& atoms = q.arrows_from(v);
        for (int a : atoms)
            for (int b : atoms)
                for (int c : atoms) {
                    if (a == b || a == c || b == c)
                        continue;
                    int ab = t.star_at(a, b), ac = t.star_at(a, c);
                    int ba = t.star_at(b, a), bc = t.star_at(b, c);
                    std::string w = q.arrow_id(a) + ", " + q.arrow_id(b) + ", " + q.arrow_id(c);
                    if (ab < 0 || ac < 0 || ba < 0 || bc < 0) {
                        rep.v.fail("triple " + w + ": complement undefined");
                        continue;
                    }
                    if (ab == ac || ba == bc) {
                        rep.v.fail("triple " + w + ": complement not injective");
                        continue;
                    }
                    int lhs = t.star_at(ab, ac), rhs = t.star_at(ba, bc);
                    if (lhs < 0 || rhs < 0) {
                        rep.v.fail("triple " + w + ": iterated complement undefined");
                        continue;
                    }
                    if (lhs != rhs)
                        rep.v.fail("triple " + w + ": " + q.arrow_id(lhs) + " != " +
                                   q.arrow_id(rhs));
                }
    }
    return rep;
}

BraidedQuiver extract_solution(const Presentation& p) {
    ConditionReport rep = check_conditions(p);
    if (!rep.all_pass()) {
        std::string which;
        auto note = [&](const char* name, const ConditionStatus& s) {
            if (!s.pass) {
                if (!which.empty())
                    which += ", ";
                which += name;
            }
        };
        note("i", rep.i);
        note("ii", rep.ii);
        note("ii'", rep.ii_dual);
        note("iii", rep.iii);
        note("iii'", rep.iii_dual);
        note("v", rep.v);
        throw PropertyError("extract_solution: conditions " + which + " fail");
    }

    const Quiver& q = p.quiver();
    Tables t = read_tables(p);
    auto star_total = [&](int a, int b) { return a == b ? rep.z.at(a) : t.star_at(a, b); };

    // invert a *' -  per generator
    std::vector<int> inv(static_cast<size_t>(q.arrow_count()) * q.arrow_count(), -1);
    for (int a = 0; a < q.arrow_count(); ++a)
        for (int c : q.arrows_from(q.source(a))) {
            int b = star_total(a, c);
            size_t i = static_cast<size_t>(a) * q.arrow_count() + b;
            if (inv[i] != -1)
                throw PropertyError("extract_solution: complement of " + q.arrow_id(a) +
                                    " is not injective");
            inv[i] = c;
        }

    std::vector<std::array<int, 4>> rows;
    for (int a = 0; a < q.arrow_count(); ++a)
        for (int b : q.arrows_from(q.target(a))) {
            int c = inv[static_cast<size_t>(a) * q.arrow_count() + b];
            if (c < 0)
                throw PropertyError("extract_solution: complement of " + q.arrow_id(a) +
                                    " is not surjective");
            rows.push_back({a, b, c, star_total(c, a)});
        }
    BraidedQuiver s = build_solution_indexed(q, rows);
    if (!check_ybe(s, 1).empty() || !check_involutive(s, 1).empty() ||
        !check_nondegenerate(s, 1).empty())
        throw PropertyError("extract_solution: extracted table fails a validation sweep");
    return s;
}

bool roundtrip_check(const Presentation& p, const BraidedQuiver& s) {
    const Quiver& q = p.quiver();
    auto canon = [](std::array<int, 2> l, std::array<int, 2> r) {
        return r < l ? Relation{r, l} : Relation{l, r};
    };
    std::set<Relation> given(p.relations().begin(), p.relations().end());
    std::set<Relation> derived;
    for (int x = 0; x < q.arrow_count(); ++x)
        for (int y : q.arrows_from(q.target(x)))
            derived.insert(canon({x, y}, {s.left_act(x, y), s.right_act(x, y)}));

    for (auto& r : given)
        if (!(r.lhs == r.rhs) && !derived.count(r))
            return false;
    for (auto& r : derived)
        if (!(r.lhs == r.rhs) && !given.count(r))
            return false;
    return true;
}

}  // namespace gq
