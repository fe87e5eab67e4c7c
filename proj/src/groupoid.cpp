#include "gq/groupoid.hpp"

#include <algorithm>
#include <sstream>

namespace gq {

GroupoidElement groupoid_identity(const StructureCategory& c, int vertex) {
    CatElement e = c.normal_form(empty_path(vertex));
    return {e, e};
}

GroupoidElement iota(const StructureCategory& c, const CatElement& x) {
    return {c.normal_form(empty_path(x.source)), x};
}

GroupoidElement iota_path(const StructureCategory& c, const PathWord& p) {
    return iota(c, c.normal_form(p));
}

GroupoidElement iota_inverse_path(const StructureCategory& c, const PathWord& p) {
    return invert_g(iota_path(c, p));
}

bool equal_g(const StructureCategory& c, const GroupoidElement& a, const GroupoidElement& b) {
    if (source_g(a) != source_g(b) || target_g(a) != target_g(b))
        return false;
    const Quiver& q = c.quiver();
    PathWord ua = c.representative(a.num), ub = c.representative(b.num);
    PathWord p = c.left_complement_path(ua, ub);  // p,ua and r,ub close the left-lcm square
    PathWord r = c.left_complement_path(ub, ua);
    return c.equal(concat(q, p, c.representative(a.pos)),
                   concat(q, r, c.representative(b.pos)));
}

GroupoidElement multiply_g(const StructureCategory& c, const GroupoidElement& a,
                           const GroupoidElement& b) {
    if (target_g(a) != source_g(b))
        throw PropertyError("multiply_g: endpoint mismatch");
    const Quiver& q = c.quiver();
    PathWord v = c.representative(a.pos), w = c.representative(b.num);
    PathWord p = c.left_complement_path(v, w);  // p.v = r.w = left-lcm(v, w)
    PathWord r = c.left_complement_path(w, v);
    return {c.normal_form(concat(q, p, c.representative(a.num))),
            c.normal_form(concat(q, r, c.representative(b.pos)))};
}

GroupoidElement invert_g(const GroupoidElement& a) {
    return {a.pos, a.num};
}

std::pair<std::vector<int>, std::vector<int>> symmetric_normal(const StructureCategory& c,
                                                               const GroupoidElement& a) {
    CatElement u = a.num, v = a.pos;
    while (!u.nf.empty() && !v.nf.empty()) {
        const auto& hu = c.entry(u.nf[0]).atoms;
        const auto& hv = c.entry(v.nf[0]).atoms;
        std::vector<int> common;
        std::set_intersection(hu.begin(), hu.end(), hv.begin(), hv.end(),
                              std::back_inserter(common));
        if (common.empty())
            break;
        CatElement d = c.delta(common);
        PathWord dp = c.representative(d);
        u = c.right_complement(dp, c.representative(u));
        v = c.right_complement(dp, c.representative(v));
    }
    return {u.nf, v.nf};
}

GroupoidElement fold_word(const StructureCategory& c, std::span<const SignedArrow> word) {
    if (word.empty())
        throw ParseError("empty groupoid word");
    const Quiver& q = c.quiver();
    auto letter = [&](const SignedArrow& s) {
        PathWord p{q.source(s.arrow), {s.arrow}};
        return s.inverse ? iota_inverse_path(c, p) : iota_path(c, p);
    };
    GroupoidElement acc = letter(word[0]);
    for (size_t i = 1; i < word.size(); ++i)
        acc = multiply_g(c, acc, letter(word[i]));
    return acc;
}

GroupoidElement parse_groupoid_word(const StructureCategory& c, std::string_view text) {
    std::vector<SignedArrow> word;
    std::istringstream in{std::string(text)};
    std::string tok;
    const Quiver& q = c.quiver();
    int at = -1;        // position after the tokens consumed so far
    bool after_eps = false;
    while (in >> tok) {
        if (tok.starts_with("eps:")) {
            int v = q.vertex_of(tok.substr(4));
            if (at != -1 && at != v)
                throw ParseError("misplaced \"" + tok + "\" in groupoid word");
            at = v;
            after_eps = true;
            continue;
        }
        SignedArrow letter{-1, tok.starts_with("~")};
        letter.arrow = q.arrow_of(letter.inverse ? tok.substr(1) : tok);
        int src = letter.inverse ? q.target(letter.arrow) : q.source(letter.arrow);
        if (after_eps && at != src)
            throw ParseError("letter \"" + tok + "\" does not start at \"" +
                             q.vertex_name(at) + "\"");
        at = letter.inverse ? q.source(letter.arrow) : q.target(letter.arrow);
        after_eps = false;
        word.push_back(letter);
    }
    if (word.empty()) {
        if (at != -1)
            return groupoid_identity(c, at);
        throw ParseError("empty groupoid word");
    }
    return fold_word(c, word);
}

}  // namespace gq
