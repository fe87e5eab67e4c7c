#include "gq/documents.hpp"

#include <algorithm>

#include <json.hpp>

namespace gq {

using nlohmann::json;

const char* doc_kind_name(DocKind k) {
    switch (k) {
        case DocKind::Quiver: return "quiver";
        case DocKind::Solution: return "solution";
        case DocKind::Presentation: return "presentation";
        case DocKind::Heap: return "heap";
        case DocKind::Group: return "group";
    }
    return "?";
}

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw ParseError("schema error at " + where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
    auto it = j.find(name);
    if (it == j.end())
        bad(where == "$" ? name : where + "." + name, "missing field");
    return *it;
}

std::string str(const json& j, const std::string& where) {
    if (!j.is_string())
        bad(where, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> str_list(const json& j, const std::string& where) {
    if (!j.is_array())
        bad(where, "expected an array");
    std::vector<std::string> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(str(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Quiver parse_quiver_fields(const json& j) {
    std::vector<std::string> vertices = str_list(field(j, "vertices", "$"), "vertices");
    const json& arr = field(j, "arrows", "$");
    if (!arr.is_array())
        bad("arrows", "expected an array");
    std::vector<ArrowSpec> arrows;
    for (size_t i = 0; i < arr.size(); ++i) {
        std::string where = "arrows[" + std::to_string(i) + "]";
        const json& a = arr[i];
        if (!a.is_object())
            bad(where, "expected an object");
        arrows.push_back({str(field(a, "id", where), where + ".id"),
                          str(field(a, "source", where), where + ".source"),
                          str(field(a, "target", where), where + ".target")});
    }
    return Quiver::build(std::move(vertices), std::move(arrows));
}

json quiver_fields(const Quiver& q) {
    json j;
    json vs = json::array();
    for (int v = 0; v < q.vertex_count(); ++v)
        vs.push_back(q.vertex_name(v));
    j["vertices"] = std::move(vs);
    json as = json::array();
    for (int a = 0; a < q.arrow_count(); ++a)
        as.push_back({{"id", q.arrow_id(a)},
                      {"source", q.vertex_name(q.source(a))},
                      {"target", q.vertex_name(q.target(a))}});
    j["arrows"] = std::move(as);
    return j;
}

}  // namespace

Document parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object())
        bad("$", "document must be a JSON object");
    std::string kind = str(field(j, "kind", "$"), "kind");
    const json& fv = field(j, "format_version", "$");
    if (!fv.is_number_integer() || fv.get<int>() != 1)
        bad("format_version", "expected the integer 1");

    if (kind == "quiver")
        return wrap(parse_quiver_fields(j));

    if (kind == "solution") {
        Quiver q = parse_quiver_fields(j);
        const json& sg = field(j, "sigma", "$");
        if (!sg.is_array())
            bad("sigma", "expected an array");
        std::vector<SigmaEntry> table;
        for (size_t i = 0; i < sg.size(); ++i) {
            std::string where = "sigma[" + std::to_string(i) + "]";
            const json& e = sg[i];
            if (!e.is_object())
                bad(where, "expected an object");
            auto in = str_list(field(e, "in", where), where + ".in");
            auto out = str_list(field(e, "out", where), where + ".out");
            if (in.size() != 2 || out.size() != 2)
                bad(where, "\"in\" and \"out\" must list two arrow ids");
            table.push_back({{in[0], in[1]}, {out[0], out[1]}});
        }
        return wrap(build_solution(std::move(q), table));
    }

    if (kind == "presentation") {
        Quiver q = parse_quiver_fields(j);
        const json& rl = field(j, "relations", "$");
        if (!rl.is_array())
            bad("relations", "expected an array");
        std::vector<std::array<std::string, 4>> rels;
        for (size_t i = 0; i < rl.size(); ++i) {
            std::string where = "relations[" + std::to_string(i) + "]";
            const json& r = rl[i];
            if (!r.is_array() || r.size() != 2)
                bad(where, "expected a pair of sides");
            auto lhs = str_list(r[0], where + "[0]");
            auto rhs = str_list(r[1], where + "[1]");
            if (lhs.size() != 2 || rhs.size() != 2)
                bad(where, "each side must list two arrow ids");
            rels.push_back({lhs[0], lhs[1], rhs[0], rhs[1]});
        }
        return wrap(Presentation::build(std::move(q), rels));
    }

    if (kind == "heap") {
        auto elements = str_list(field(j, "elements", "$"), "elements");
        const json& op = field(j, "op", "$");
        if (!op.is_array())
            bad("op", "expected an array");
        std::vector<std::array<std::string, 4>> rows;
        for (size_t i = 0; i < op.size(); ++i) {
            std::string where = "op[" + std::to_string(i) + "]";
            const json& r = op[i];
            if (!r.is_array() || r.size() != 2)
                bad(where, "expected [[a,b,c], value]");
            auto abc = str_list(r[0], where + "[0]");
            if (abc.size() != 3)
                bad(where, "expected a triple of elements");
            rows.push_back({abc[0], abc[1], abc[2], str(r[1], where + "[1]")});
        }
        return wrap(TernaryOp::build(std::move(elements), rows));
    }

    if (kind == "group") {
        auto elements = str_list(field(j, "elements", "$"), "elements");
        std::sort(elements.begin(), elements.end());
        if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
            bad("elements", "duplicate element id");
        auto index = [&](const std::string& s, const std::string& where) {
            auto it = std::lower_bound(elements.begin(), elements.end(), s);
            if (it == elements.end() || *it != s)
                bad(where, "unknown element \"" + s + "\"");
            return static_cast<int>(it - elements.begin());
        };
        const json& mj = field(j, "mul", "$");
        if (!mj.is_array() || mj.size() != elements.size())
            bad("mul", "expected one row per element");
        std::vector<int> mul;
        for (size_t r = 0; r < mj.size(); ++r) {
            std::string where = "mul[" + std::to_string(r) + "]";
            auto row = str_list(mj[r], where);
            if (row.size() != elements.size())
                bad(where, "expected one entry per element");
            for (size_t c = 0; c < row.size(); ++c)
                mul.push_back(index(row[c], where + "[" + std::to_string(c) + "]"));
        }
        int unit = index(str(field(j, "unit", "$"), "unit"), "unit");
        return wrap(GroupTable::build(std::move(elements), std::move(mul), unit));
    }

    bad("kind", "unknown kind \"" + kind + "\"");
}

std::string serialize(const Document& d) {
    json j;
    j["kind"] = doc_kind_name(d.kind);
    j["format_version"] = 1;
    switch (d.kind) {
        case DocKind::Quiver:
            j.update(quiver_fields(d.as_quiver()));
            break;
        case DocKind::Solution: {
            const BraidedQuiver& s = d.as_solution();
            const Quiver& q = s.quiver();
            j.update(quiver_fields(q));
            json sg = json::array();
            for (int x = 0; x < q.arrow_count(); ++x)
                for (int y : q.arrows_from(q.target(x)))
                    sg.push_back({{"in", {q.arrow_id(x), q.arrow_id(y)}},
                                  {"out",
                                   {q.arrow_id(s.left_act(x, y)),
                                    q.arrow_id(s.right_act(x, y))}}});
            j["sigma"] = std::move(sg);
            break;
        }
        case DocKind::Presentation: {
            const Presentation& p = d.as_presentation();
            const Quiver& q = p.quiver();
            j.update(quiver_fields(q));
            json rl = json::array();
            for (auto& r : p.relations())
                rl.push_back(json::array(
                    {json::array({q.arrow_id(r.lhs[0]), q.arrow_id(r.lhs[1])}),
                     json::array({q.arrow_id(r.rhs[0]), q.arrow_id(r.rhs[1])})}));
            j["relations"] = std::move(rl);
            break;
        }
        case DocKind::Heap: {
            const TernaryOp& t = d.as_ternary();
            j["elements"] = t.elements;
            json op = json::array();
            for (int a = 0; a < t.n(); ++a)
                for (int b = 0; b < t.n(); ++b)
                    for (int c = 0; c < t.n(); ++c)
                        op.push_back({{t.elements[a], t.elements[b], t.elements[c]},
                                      t.elements[t.at(a, b, c)]});
            j["op"] = std::move(op);
            break;
        }
        case DocKind::Group: {
            const GroupTable& g = d.as_group();
            j["elements"] = g.elements;
            json mul = json::array();
            for (int a = 0; a < g.n(); ++a) {
                json row = json::array();
                for (int b = 0; b < g.n(); ++b)
                    row.push_back(g.elements[g.at(a, b)]);
                mul.push_back(std::move(row));
            }
            j["mul"] = std::move(mul);
            j["unit"] = g.elements[g.unit];
            break;
        }
    }
    return j.dump(2) + "\n";
}

Document wrap(Quiver q) {
    return {DocKind::Quiver, std::move(q), {}};
}
Document wrap(BraidedQuiver s) {
    return {DocKind::Solution, std::move(s), {}};
}
Document wrap(Presentation p) {
    Document d{DocKind::Presentation, std::move(p), {}};
    int dup = d.as_presentation().duplicates_collapsed();
    if (dup > 0)
        d.warnings.push_back("collapsed " + std::to_string(dup) + " duplicate relation(s)");
    return d;
}
Document wrap(TernaryOp t) {
    return {DocKind::Heap, std::move(t), {}};
}
Document wrap(GroupTable g) {
    return {DocKind::Group, std::move(g), {}};
}

BraidedQuiver solution_from_document(const Document& d) {
    if (d.kind == DocKind::Solution)
        return d.as_solution();
    if (d.kind == DocKind::Presentation)
        return extract_solution(d.as_presentation());
    throw ParseError(std::string("expected a solution (or presentation) document, got \"") +
                     doc_kind_name(d.kind) + "\"");
}

}  // namespace gq
