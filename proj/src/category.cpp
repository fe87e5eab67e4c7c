#include "gq/category.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace gq {

StructureCategory::StructureCategory(BraidedQuiver s) : sol_(std::move(s)) {
    if (!check_ybe(sol_, 1).empty())
        throw PropertyError("structure category: solution fails the Yang-Baxter check");
    if (!check_involutive(sol_, 1).empty())
        throw PropertyError("structure category: solution fails the involutivity check");
    if (!check_nondegenerate(sol_, 1).empty())
        throw PropertyError("structure category: solution fails the non-degeneracy check");
    star_ = complete(derive_star(sol_));
    bullet_ = complete(derive_bullet(sol_));
}

const GarsideEntry& StructureCategory::entry(int id) const {
    std::lock_guard lock(entry_mutex_);
    return entries_[id];  // elements are immutable once inserted
}

int StructureCategory::entry_id(int source, std::vector<int> atoms) const {
    std::sort(atoms.begin(), atoms.end());
    auto key = std::make_pair(source, atoms);
    {
        std::lock_guard lock(entry_mutex_);
        auto it = entry_ids_.find(key);
        if (it != entry_ids_.end())
            return it->second;
    }
    GarsideEntry e;
    e.source = source;
    e.atoms = atoms;
    e.repr = atoms.empty() ? empty_path(source) : delta_path(atoms);
    e.target = path_target(star_.quiver(), e.repr);

    std::lock_guard lock(entry_mutex_);
    auto it = entry_ids_.find(key);
    if (it != entry_ids_.end())
        return it->second;  // another fill got here first
    int id = static_cast<int>(entries_.size());
    entries_.push_back(std::move(e));
    entry_ids_.emplace(std::move(key), id);
    return id;
}

bool StructureCategory::path_left_divides(const PathWord& e, const PathWord& u) const {
    PathWord rem = strip(grid_star(star_, u, e).first);
    return rem.is_empty();
}

PathWord StructureCategory::complement_path(const PathWord& v, const PathWord& u) const {
    return strip(grid_star(star_, v, u).first);
}

std::vector<int> StructureCategory::atom_divisors(const PathWord& u) const {
    std::vector<int> divisors;
    for (int a : quiver().arrows_from(path_source(u))) {
        PathWord atom{quiver().source(a), {a}};
        if (path_left_divides(atom, u))
            divisors.push_back(a);
    }
    return divisors;  // id order, inherited from arrows_from
}

CatElement StructureCategory::normal_form(const PathWord& p) const {
    if (!path_valid(star_.quiver(), p))
        throw ParseError("normal_form: not a valid path of this solution's quiver");
    PathWord u = strip(p);
    CatElement out;
    out.source = path_source(u);
    out.target = path_target(quiver(), u);
    out.length = u.length();
    while (!u.is_empty()) {
        std::vector<int> head_atoms = atom_divisors(u);
        int id = entry_id(path_source(u), std::move(head_atoms));
        out.nf.push_back(id);
        u = complement_path(entry(id).repr, u);
    }
    return out;
}

bool StructureCategory::equal(const PathWord& p, const PathWord& q) const {
    return normal_form(p) == normal_form(q);
}

PathWord StructureCategory::representative(const CatElement& e) const {
    PathWord r = empty_path(e.source);
    for (int id : e.nf)
        r = concat(quiver(), r, entry(id).repr);
    return r;
}

CatElement StructureCategory::compose(const CatElement& a, const CatElement& b) const {
    if (a.target != b.source)
        throw PropertyError("compose: endpoint mismatch");
    return normal_form(concat(quiver(), representative(a), representative(b)));
}

CatElement StructureCategory::right_complement(const PathWord& u, const PathWord& v) const {
    if (path_source(u) != path_source(v))
        throw PropertyError("right complement needs a same-source pair of paths");
    return normal_form(complement_path(u, v));
}

bool StructureCategory::left_divides(const CatElement& e, const CatElement& u) const {
    if (e.source != u.source)
        throw PropertyError("left_divides: source mismatch");
    return path_left_divides(representative(e), representative(u));
}

int StructureCategory::omega(std::span<const int> xs) const {
    if (xs.size() == 1)
        return xs[0];
    std::vector<int> a(xs.begin(), xs.end() - 1);
    std::vector<int> b(xs.begin(), xs.end() - 2);
    b.push_back(xs.back());
    return star_.star_raw(omega(a), omega(b));
}

int StructureCategory::omega_tilde(std::span<const int> ys) const {
    if (ys.size() == 1)
        return ys[0];
    std::vector<int> a{ys[0]};
    a.insert(a.end(), ys.begin() + 2, ys.end());
    std::vector<int> b(ys.begin() + 1, ys.end());
    return bullet_.bullet_raw(omega_tilde(b), omega_tilde(a));
}

namespace {

void require_atom_set(const Quiver& q, std::span<const int> atoms, bool same_source,
                      const char* what) {
    if (atoms.empty())
        throw PropertyError(std::string(what) + ": empty atom set");
    std::vector<int> sorted(atoms.begin(), atoms.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PropertyError(std::string(what) + ": duplicate atom");
    for (int a : atoms) {
        int va = same_source ? q.source(a) : q.target(a);
        int v0 = same_source ? q.source(atoms[0]) : q.target(atoms[0]);
        if (va != v0)
            throw PropertyError(std::string(what) + (same_source ? ": mixed sources"
                                                                 : ": mixed targets"));
    }
}

}  // namespace

PathWord StructureCategory::delta_path(std::span<const int> atoms_in_order) const {
    require_atom_set(quiver(), atoms_in_order, true, "delta");
    std::vector<int> edges;
    for (size_t k = 1; k <= atoms_in_order.size(); ++k)
        edges.push_back(omega(atoms_in_order.subspan(0, k)));
    return make_path(quiver(), quiver().source(atoms_in_order[0]), std::move(edges));
}

CatElement StructureCategory::delta(std::span<const int> atoms) const {
    std::vector<int> sorted(atoms.begin(), atoms.end());
    std::sort(sorted.begin(), sorted.end());
    return normal_form(delta_path(sorted));
}

PathWord StructureCategory::left_lcm_path(std::span<const int> atoms_in_order) const {
    require_atom_set(quiver(), atoms_in_order, false, "left_lcm");
    std::vector<int> edges;
    for (size_t j = 0; j < atoms_in_order.size(); ++j)
        edges.push_back(omega_tilde(atoms_in_order.subspan(j)));
    int base = quiver().source(edges[0]);
    return make_path(quiver(), base, std::move(edges));
}

CatElement StructureCategory::left_lcm_atoms(std::span<const int> atoms) const {
    std::vector<int> sorted(atoms.begin(), atoms.end());
    std::sort(sorted.begin(), sorted.end());
    return normal_form(left_lcm_path(sorted));
}

CatElement StructureCategory::right_lcm(const CatElement& u, const CatElement& v) const {
    if (u.source != v.source)
        throw PropertyError("right_lcm needs a same-source pair");
    PathWord pu = representative(u), pv = representative(v);
    return normal_form(concat(quiver(), pu, complement_path(pu, pv)));
}

PathWord StructureCategory::left_complement_path(const PathWord& u, const PathWord& v) const {
    return strip_units(bullet_, grid_bullet(bullet_, u, v).first);
}

CatElement StructureCategory::left_lcm(const CatElement& u, const CatElement& v) const {
    if (u.target != v.target)
        throw PropertyError("left_lcm needs a same-target pair");
    PathWord pu = representative(u), pv = representative(v);
    return normal_form(concat(quiver(), left_complement_path(pu, pv), pu));
}

std::vector<int> StructureCategory::tilde_atoms(const GarsideEntry& e) const {
    std::vector<int> out;
    size_t n = e.atoms.size();
    for (size_t i = 0; i < n; ++i) {
        std::vector<int> order;
        for (size_t j = 0; j < n; ++j)
            if (j != i)
                order.push_back(e.atoms[j]);
        order.push_back(e.atoms[i]);
        out.push_back(omega(order));
    }
    return out;
}

int StructureCategory::lcm_witness(int f, int g) const {
    const GarsideEntry& ef = entry(f);
    const GarsideEntry& eg = entry(g);
    if (ef.target != eg.target)
        throw PropertyError("lcm_witness needs entries with one target");

    std::vector<int> fi = tilde_atoms(ef);
    std::vector<int> gj = tilde_atoms(eg);
    std::sort(fi.begin(), fi.end());
    std::sort(gj.begin(), gj.end());
    std::vector<int> only_f;
    std::set_difference(fi.begin(), fi.end(), gj.begin(), gj.end(), std::back_inserter(only_f));
    if (only_f.empty())
        return entry_id(eg.source, {});  // f already left-divides g's lcm tower
    std::vector<int> order = only_f;
    order.insert(order.end(), gj.begin(), gj.end());

    std::vector<int> edges;
    for (size_t k = 0; k < only_f.size(); ++k)
        edges.push_back(omega_tilde(std::span<const int>(order).subspan(k)));
    int base = quiver().source(edges[0]);
    PathWord w = make_path(quiver(), base, std::move(edges));
    CatElement nf = normal_form(w);
    if (nf.nf.size() != 1)
        throw PropertyError("lcm witness fell outside the Garside family");
    return nf.nf[0];
}

GarsideFamily StructureCategory::garside_family(bool verify_dual) const {
    GarsideFamily fam;
    const Quiver& q = quiver();
    for (int v = 0; v < q.vertex_count(); ++v)
        fam.entries.push_back(entry_id(v, {}));
    fam.identity_count = q.vertex_count();

    std::set<std::pair<int, std::vector<int>>> seen;  // (source, nf) class keys
    std::vector<int> subset;
    for (int v = 0; v < q.vertex_count(); ++v) {
        const auto& atoms = q.arrows_from(v);
        auto sweep = [&](auto&& self, size_t start) -> void {
            for (size_t i = start; i < atoms.size(); ++i) {
                subset.push_back(atoms[i]);
                CatElement el = delta(subset);
                if (seen.insert({el.source, el.nf}).second)
                    fam.entries.push_back(entry_id(v, subset));
                self(self, i + 1);
                subset.pop_back();
            }
        };
        sweep(sweep, 0);
    }
    std::stable_sort(fam.entries.begin(), fam.entries.end(), [this](int a, int b) {
        const GarsideEntry &ea = entry(a), &eb = entry(b);
        auto ka = std::tuple(ea.length() == 0 ? 0 : 1, ea.source, ea.length());
        auto kb = std::tuple(eb.length() == 0 ? 0 : 1, eb.source, eb.length());
        if (ka != kb)
            return ka < kb;
        return ea.atoms < eb.atoms;
    });

    if (verify_dual) {
        fam.dual_checked = true;
        std::set<std::pair<int, std::vector<int>>> dual;
        for (int v = 0; v < q.vertex_count(); ++v) {
            const auto& atoms = q.arrows_into(v);
            auto sweep = [&](auto&& self, size_t start) -> void {
                for (size_t i = start; i < atoms.size(); ++i) {
                    subset.push_back(atoms[i]);
                    CatElement el = left_lcm_atoms(subset);
                    dual.insert({el.source, el.nf});
                    self(self, i + 1);
                    subset.pop_back();
                }
            };
            sweep(sweep, 0);
        }
        fam.dual_matches = (dual == seen);
    }
    return fam;
}

std::vector<PathWord> bfs_class(const BraidedQuiver& s, const PathWord& p, size_t cap) {
    const Quiver& q = s.quiver();
    if (!path_valid(q, p))
        throw ParseError("bfs_class: invalid path");

    // single-relation rewrites in both directions; the reverse table matters
    // only for non-involutive tables but costs nothing to carry
    std::unordered_map<long long, std::vector<std::pair<int, int>>> reverse;
    auto key = [&](int u, int v) { return static_cast<long long>(u) * q.arrow_count() + v; };
    for (int x = 0; x < q.arrow_count(); ++x)
        for (int y : q.arrows_from(q.target(x)))
            reverse[key(s.left_act(x, y), s.right_act(x, y))].push_back({x, y});

    std::set<PathWord> seen{p};
    std::deque<PathWord> frontier{p};
    while (!frontier.empty()) {
        PathWord cur = frontier.front();
        frontier.pop_front();
        auto offer = [&](PathWord next) {
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw Error("bfs_class: class size cap " + std::to_string(cap) +
                                " exceeded; raise the cap");
                frontier.push_back(std::move(next));
            }
        };
        for (size_t i = 0; i + 1 < cur.edges.size(); ++i) {
            int x = cur.edges[i], y = cur.edges[i + 1];
            PathWord fwd = cur;
            fwd.edges[i] = s.left_act(x, y);
            fwd.edges[i + 1] = s.right_act(x, y);
            offer(std::move(fwd));
            auto it = reverse.find(key(x, y));
            if (it != reverse.end())
                for (auto [u, v] : it->second) {
                    PathWord back = cur;
                    back.edges[i] = u;
                    back.edges[i + 1] = v;
                    offer(std::move(back));
                }
        }
    }
    return {seen.begin(), seen.end()};
}

OracleCheckResult oracle_check(const StructureCategory& c, int max_len, size_t cap) {
    OracleCheckResult res;
    const Quiver& q = c.quiver();
    const BraidedQuiver& s = c.solution();
    for (int len = 0; len <= max_len; ++len) {
        std::set<PathWord> pending;
        for (auto& p : enumerate_paths(q, std::nullopt, len))
            pending.insert(p);
        res.paths += static_cast<long>(pending.size());
        // nf class -> BFS representative, to catch nf collisions across classes
        std::map<std::pair<int, std::vector<int>>, PathWord> nf_to_rep;
        while (!pending.empty()) {
            PathWord rep = *pending.begin();
            CatElement nf_rep = c.normal_form(rep);
            ++res.classes;
            std::vector<PathWord> cls = bfs_class(s, rep, cap);
            for (auto& m : cls) {
                pending.erase(m);
                if (m.length() != rep.length() || !path_valid(q, m)) {
                    res.ok = false;
                    res.detail = "class of " + path_to_string(q, rep) + " is malformed";
                    return res;
                }
                if (!(c.normal_form(m) == nf_rep)) {
                    res.ok = false;
                    res.detail = "normal forms split the BFS class of " +
                                 path_to_string(q, rep) + " at " + path_to_string(q, m);
                    return res;
                }
            }
            auto [it, fresh] = nf_to_rep.insert({{nf_rep.source, nf_rep.nf}, rep});
            if (!fresh) {
                res.ok = false;
                res.detail = "normal forms merge distinct BFS classes of " +
                             path_to_string(q, it->second) + " and " + path_to_string(q, rep);
                return res;
            }
        }
    }
    return res;
}

}  // namespace gq
