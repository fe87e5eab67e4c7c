#include "gq/rc_system.hpp"

namespace gq {

namespace {

void require_clean(const BraidedQuiver& s, bool left, bool right, const char* op) {
    if (!check_involutive(s, 1).empty())
        throw PropertyError(std::string(op) + ": solution fails the involutivity check");
    ViolationReport nd = check_nondegenerate(s, default_violation_cap());
    for (auto& v : nd.items) {
        if (left && v.kind == CheckKind::LND)
            throw PropertyError(std::string(op) +
                                ": solution fails the left-non-degeneracy check at " + v.witness);
        if (right && v.kind == CheckKind::RND)
            throw PropertyError(std::string(op) +
                                ": solution fails the right-non-degeneracy check at " + v.witness);
    }
}

}  // namespace

RcSystem derive_star(const BraidedQuiver& s) {
    require_clean(s, /*left=*/true, /*right=*/false, "derive_star");
    const Quiver& q = s.quiver();
    RcSystem r;
    r.quiver_ = q;
    r.original_arrows_ = q.arrow_count();
    r.table_.assign(static_cast<size_t>(q.arrow_count()) * q.arrow_count(), -1);
    for (int x = 0; x < q.arrow_count(); ++x)
        for (int z : q.arrows_from(q.target(x)))
            r.table_[r.idx(x, s.left_act(x, z))] = z;  // x * (x > z) = z
    return r;
}

CoRcSystem derive_bullet(const BraidedQuiver& s) {
    require_clean(s, /*left=*/false, /*right=*/true, "derive_bullet");
    const Quiver& q = s.quiver();
    CoRcSystem c;
    c.quiver_ = q;
    c.original_arrows_ = q.arrow_count();
    c.table_.assign(static_cast<size_t>(q.arrow_count()) * q.arrow_count(), -1);
    for (int x = 0; x < q.arrow_count(); ++x)
        for (int w : q.arrows_into(q.source(x)))
            c.table_[c.idx(x, s.right_act(w, x))] = w;  // x . (w < x) = w
    return c;
}

RcSystem complete(RcSystem r) {
    if (r.completed_)
        throw PropertyError("RC-system is already completed");
    r.quiver_ = r.quiver_.with_unit_loops(kUnitPrefix, r.units_);
    r.completed_ = true;
    return r;
}

CoRcSystem complete(CoRcSystem c) {
    if (c.completed_)
        throw PropertyError("co-RC-system is already completed");
    c.quiver_ = c.quiver_.with_unit_loops(kUnitPrefix, c.units_);
    c.completed_ = true;
    return c;
}

int RcSystem::star(int x, int y) const {
    if (!completed_) {
        int v = star_raw(x, y);
        if (v < 0)
            throw PropertyError("star undefined on " + quiver_.arrow_id(x) + ", " +
                                quiver_.arrow_id(y));
        return v;
    }
    if (quiver_.source(x) != quiver_.source(y))
        throw PropertyError("star needs a same-source pair");
    if (is_unit(x))
        return y;                        // eps * y = y
    if (is_unit(y))
        return units_[quiver_.target(x)];  // x * eps = eps
    if (x == y)
        return units_[quiver_.target(x)];  // x * x = eps
    return star_raw(x, y);
}

int CoRcSystem::bullet(int x, int y) const {
    if (!completed_) {
        int v = bullet_raw(x, y);
        if (v < 0)
            throw PropertyError("bullet undefined on " + quiver_.arrow_id(x) + ", " +
                                quiver_.arrow_id(y));
        return v;
    }
    if (quiver_.target(x) != quiver_.target(y))
        throw PropertyError("bullet needs a same-target pair");
    if (is_unit(x))
        return y;                        // eps . y = y
    if (is_unit(y))
        return units_[quiver_.source(x)];  // x . eps = eps
    if (x == y)
        return units_[quiver_.source(x)];  // x . x = eps
    return bullet_raw(x, y);
}

std::pair<PathWord, PathWord> grid_star(const RcSystem& r, const PathWord& p,
                                        const PathWord& q) {
    if (!r.completed())
        throw PropertyError("grid_star needs a completed RC-system");
    const Quiver& qq = r.quiver();
    if (path_source(p) != path_source(q))
        throw PropertyError("grid_star: paths must share their source");
    if (p.is_empty() && q.is_empty())
        return {q, p};
    if (p.is_empty())
        return {q, empty_path(path_target(qq, q))};
    if (q.is_empty())
        return {empty_path(path_target(qq, p)), p};

    // p runs along the top, q down the left side; each cell maps its top
    // edge a and left edge b to right = a*b, bottom = b*a.
    std::vector<int> row = p.edges;  // current horizontal edges
    PathWord p_star_q{path_target(qq, p), {}};
    for (int j = 0; j < q.length(); ++j) {
        int left = q.edges[j];
        for (int i = 0; i < static_cast<int>(row.size()); ++i) {
            int top = row[i];
            int right = r.star(top, left);
            int bottom = r.star(left, top);
            row[i] = bottom;
            left = right;
        }
        p_star_q.edges.push_back(left);
    }
    PathWord q_star_p{path_target(qq, q), std::move(row)};
    return {std::move(p_star_q), std::move(q_star_p)};
}

std::pair<PathWord, PathWord> grid_bullet(const CoRcSystem& c, const PathWord& p,
                                          const PathWord& q) {
    if (!c.completed())
        throw PropertyError("grid_bullet needs a completed co-RC-system");
    const Quiver& qq = c.quiver();
    if (path_target(qq, p) != path_target(qq, q))
        throw PropertyError("grid_bullet: paths must share their target");
    if (p.is_empty() && q.is_empty())
        return {q, p};
    if (p.is_empty())
        return {q, empty_path(path_source(q))};
    if (q.is_empty())
        return {empty_path(path_source(p)), p};

    // p runs down the right side, q along the bottom; each cell maps its
    // right edge x and bottom edge y to top = x.y, left = y.x. Filled from
    // the bottom-right corner upward.
    std::vector<int> row = q.edges;  // current horizontal edges
    std::vector<int> left_column(p.length());
    for (int j = p.length() - 1; j >= 0; --j) {
        int right = p.edges[j];
        for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i) {
            int bottom = row[i];
            int top = c.bullet(right, bottom);
            int left = c.bullet(bottom, right);
            row[i] = top;
            right = left;
        }
        left_column[j] = right;
    }
    PathWord p_bullet_q{qq.source(row[0]), std::move(row)};
    PathWord q_bullet_p{qq.source(left_column[0]), std::move(left_column)};
    return {std::move(p_bullet_q), std::move(q_bullet_p)};
}

namespace {

template <typename Sys>
PathWord strip_units_impl(const Sys& sys, const PathWord& p) {
    PathWord out{p.base, {}};
    for (int e : p.edges)
        if (!sys.is_unit(e))
            out.edges.push_back(e);
    return out;
}

}  // namespace

PathWord strip_units(const RcSystem& r, const PathWord& p) {
    return strip_units_impl(r, p);
}

PathWord strip_units(const CoRcSystem& c, const PathWord& p) {
    return strip_units_impl(c, p);
}

}  // namespace gq
