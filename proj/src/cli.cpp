#include "gq/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gq/category.hpp"
#include "gq/documents.hpp"
#include "gq/groupoid.hpp"

namespace gq {

namespace {

using nlohmann::json;

Document load_document(const std::string& path, std::istream& in) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream f(path);
        if (!f)
            throw ParseError("cannot open \"" + path + "\"");
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    return parse_document(text);
}

void emit_document(const Document& d, const std::string& out_path, std::ostream& out) {
    std::string text = serialize(d);
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f)
        throw ParseError("cannot write \"" + out_path + "\"");
    f << text;
}

json report_json(const ViolationReport& r) {
    json items = json::array();
    for (auto& v : r.items)
        items.push_back({{"check", check_kind_name(v.kind)},
                         {"witness", v.witness},
                         {"detail", v.detail}});
    return {{"violations", r.total}, {"shown", std::move(items)}};
}

void print_report(std::ostream& out, const std::string& name, const ViolationReport& r) {
    if (r.empty()) {
        out << name << ": ok\n";
        return;
    }
    out << name << ": " << r.total << " violation(s)\n";
    for (auto& v : r.items)
        out << "  " << check_kind_name(v.kind) << " at " << v.witness << ": " << v.detail
            << "\n";
    if (r.total > static_cast<long>(r.items.size()))
        out << "  ... and " << (r.total - static_cast<long>(r.items.size())) << " more\n";
}

void print_condition(std::ostream& out, const std::string& name, const ConditionStatus& c) {
    out << "condition " << name << ": " << (c.pass ? "pass" : "fail") << "\n";
    for (size_t i = 0; i < c.witnesses.size() && i < 10; ++i)
        out << "  " << c.witnesses[i] << "\n";
    if (c.witnesses.size() > 10)
        out << "  ... and " << (c.witnesses.size() - 10) << " more\n";
}

json condition_json(const ConditionStatus& c) {
    return {{"pass", c.pass}, {"witnesses", c.witnesses}};
}

struct Args {
    std::string doc;
    std::string doc_out;
    std::string p, q;
    bool json_mode = false;
    bool co = false;
    bool completed = false;
    bool star = false;
    bool bullet = false;
    bool right = false;
    bool left = false;
    bool groupoid = false;
    bool no_dual = false;
    int max_len = 4;
    int max_violations = default_violation_cap();
    std::optional<int> n_param;
    std::optional<int> k_param;
    std::string example_name;
};

int run_validate(const Args& a, std::istream& in, std::ostream& out) {
    BraidedQuiver s = solution_from_document(load_document(a.doc, in));
    ViolationReport ybe = check_ybe(s, a.max_violations);
    ViolationReport inv = check_involutive(s, a.max_violations);
    ViolationReport nd = check_nondegenerate(s, a.max_violations);
    bool pass = ybe.empty() && inv.empty() && nd.empty();
    if (a.json_mode) {
        out << json{{"kind", "solution"},
                    {"yang-baxter", report_json(ybe)},
                    {"involutive", report_json(inv)},
                    {"non-degenerate", report_json(nd)},
                    {"pass", pass}}
                   .dump(2)
            << "\n";
    } else {
        out << "arrows: " << s.quiver().arrow_count()
            << ", vertices: " << s.quiver().vertex_count() << "\n";
        print_report(out, "yang-baxter", ybe);
        print_report(out, "involutive", inv);
        print_report(out, "non-degenerate", nd);
        out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int run_derive_rc(const Args& a, std::istream& in, std::ostream& out) {
    BraidedQuiver s = solution_from_document(load_document(a.doc, in));
    json rows = json::array();
    std::ostringstream text;
    if (!a.co) {
        RcSystem r = derive_star(s);
        if (a.completed)
            r = complete(std::move(r));
        const Quiver& q = r.quiver();
        for (int x = 0; x < q.arrow_count(); ++x)
            for (int y : q.arrows_from(q.source(x))) {
                int v = r.completed() ? r.star(x, y) : r.star_raw(x, y);
                if (a.json_mode)
                    rows.push_back({q.arrow_id(x), q.arrow_id(y), q.arrow_id(v)});
                else
                    text << q.arrow_id(x) << " * " << q.arrow_id(y) << " = " << q.arrow_id(v)
                         << "\n";
            }
    } else {
        CoRcSystem c = derive_bullet(s);
        if (a.completed)
            c = complete(std::move(c));
        const Quiver& q = c.quiver();
        for (int x = 0; x < q.arrow_count(); ++x)
            for (int y : q.arrows_into(q.target(x))) {
                int v = c.completed() ? c.bullet(x, y) : c.bullet_raw(x, y);
                if (a.json_mode)
                    rows.push_back({q.arrow_id(x), q.arrow_id(y), q.arrow_id(v)});
                else
                    text << q.arrow_id(x) << " . " << q.arrow_id(y) << " = " << q.arrow_id(v)
                         << "\n";
            }
    }
    if (a.json_mode)
        out << json{{"op", a.co ? "bullet" : "star"},
                    {"completed", a.completed},
                    {"table", std::move(rows)}}
                   .dump(2)
            << "\n";
    else
        out << text.str();
    return 0;
}

int run_grid(const Args& a, std::istream& in, std::ostream& out) {
    if (a.star == a.bullet)
        throw ParseError("grid needs exactly one of --star / --bullet");
    BraidedQuiver s = solution_from_document(load_document(a.doc, in));
    if (a.star) {
        RcSystem r = complete(derive_star(s));
        PathWord p = parse_path(r.quiver(), a.p);
        PathWord q = parse_path(r.quiver(), a.q);
        auto [pq, qp] = grid_star(r, p, q);
        if (a.json_mode)
            out << json{{"p*q", path_to_string(r.quiver(), pq)},
                        {"q*p", path_to_string(r.quiver(), qp)}}
                       .dump(2)
                << "\n";
        else
            out << "p*q = " << path_to_string(r.quiver(), pq) << "\n"
                << "q*p = " << path_to_string(r.quiver(), qp) << "\n";
    } else {
        CoRcSystem c = complete(derive_bullet(s));
        PathWord p = parse_path(c.quiver(), a.p);
        PathWord q = parse_path(c.quiver(), a.q);
        auto [pq, qp] = grid_bullet(c, p, q);
        if (a.json_mode)
            out << json{{"p.q", path_to_string(c.quiver(), pq)},
                        {"q.p", path_to_string(c.quiver(), qp)}}
                       .dump(2)
                << "\n";
        else
            out << "p.q = " << path_to_string(c.quiver(), pq) << "\n"
                << "q.p = " << path_to_string(c.quiver(), qp) << "\n";
    }
    return 0;
}

std::string atoms_str(const StructureCategory& c, const GarsideEntry& e) {
    std::string s = "{";
    for (size_t i = 0; i < e.atoms.size(); ++i) {
        if (i)
            s += ",";
        s += c.quiver().arrow_id(e.atoms[i]);
    }
    return s + "}";
}

int run_garside_family(const Args& a, std::istream& in, std::ostream& out) {
    StructureCategory c(solution_from_document(load_document(a.doc, in)));
    GarsideFamily fam = c.garside_family(!a.no_dual);
    json entries = json::array();
    std::ostringstream text;
    for (int id : fam.entries) {
        const GarsideEntry& e = c.entry(id);
        if (a.json_mode) {
            json atoms = json::array();
            for (int at : e.atoms)
                atoms.push_back(c.quiver().arrow_id(at));
            entries.push_back({{"source", c.quiver().vertex_name(e.source)},
                               {"atoms", std::move(atoms)},
                               {"repr", path_to_string(c.quiver(), e.repr)},
                               {"length", e.length()}});
        } else if (e.is_identity()) {
            text << "identity at " << c.quiver().vertex_name(e.source) << "\n";
        } else {
            text << "atoms " << atoms_str(c, e) << " repr "
                 << path_to_string(c.quiver(), e.repr) << " length " << e.length() << "\n";
        }
    }
    std::string dual = fam.dual_checked ? (fam.dual_matches ? "match" : "MISMATCH")
                                        : "not checked";
    if (a.json_mode)
        out << json{{"count", fam.entries.size()},
                    {"identities", fam.identity_count},
                    {"dual-description", dual},
                    {"entries", std::move(entries)}}
                   .dump(2)
            << "\n";
    else
        out << text.str() << "total: " << fam.entries.size() << " entries ("
            << fam.identity_count << " identities + "
            << fam.entries.size() - fam.identity_count << " lcm classes); dual description: "
            << dual << "\n";
    return (fam.dual_checked && !fam.dual_matches) ? 1 : 0;
}

int run_normal_form(const Args& a, std::istream& in, std::ostream& out) {
    StructureCategory c(solution_from_document(load_document(a.doc, in)));
    PathWord p = parse_path(c.quiver(), a.p);
    CatElement e = c.normal_form(p);
    if (a.json_mode) {
        json nf = json::array();
        for (int id : e.nf) {
            json atoms = json::array();
            for (int at : c.entry(id).atoms)
                atoms.push_back(c.quiver().arrow_id(at));
            nf.push_back({{"atoms", std::move(atoms)},
                          {"repr", path_to_string(c.quiver(), c.entry(id).repr)}});
        }
        out << json{{"source", c.quiver().vertex_name(e.source)},
                    {"target", c.quiver().vertex_name(e.target)},
                    {"length", e.length},
                    {"nf", std::move(nf)},
                    {"canonical", path_to_string(c.quiver(), c.representative(e))}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "source " << c.quiver().vertex_name(e.source) << ", target "
        << c.quiver().vertex_name(e.target) << ", length " << e.length << "\n";
    for (size_t i = 0; i < e.nf.size(); ++i)
        out << "nf[" << i << "]: atoms " << atoms_str(c, c.entry(e.nf[i])) << " repr "
            << path_to_string(c.quiver(), c.entry(e.nf[i]).repr) << "\n";
    out << "canonical: " << path_to_string(c.quiver(), c.representative(e)) << "\n";
    return 0;
}

int run_equal(const Args& a, std::istream& in, std::ostream& out) {
    StructureCategory c(solution_from_document(load_document(a.doc, in)));
    bool eq;
    if (a.groupoid) {
        GroupoidElement x = parse_groupoid_word(c, a.p);
        GroupoidElement y = parse_groupoid_word(c, a.q);
        eq = equal_g(c, x, y);
    } else {
        eq = c.equal(parse_path(c.quiver(), a.p), parse_path(c.quiver(), a.q));
    }
    if (a.json_mode)
        out << json{{"equal", eq}}.dump(2) << "\n";
    else
        out << (eq ? "equal" : "not equal") << "\n";
    return eq ? 0 : 1;
}

int run_lcm(const Args& a, std::istream& in, std::ostream& out) {
    if (a.right == a.left)
        throw ParseError("lcm needs exactly one of --right / --left");
    StructureCategory c(solution_from_document(load_document(a.doc, in)));
    PathWord p = parse_path(c.quiver(), a.p);
    PathWord q = parse_path(c.quiver(), a.q);
    CatElement lcm, cp, cq;
    if (a.right) {
        cp = c.right_complement(p, q);  // p \ q
        cq = c.right_complement(q, p);
        lcm = c.right_lcm(c.normal_form(p), c.normal_form(q));
    } else {
        PathWord wp = c.left_complement_path(p, q);
        PathWord wq = c.left_complement_path(q, p);
        cp = c.normal_form(wp);
        cq = c.normal_form(wq);
        lcm = c.left_lcm(c.normal_form(p), c.normal_form(q));
    }
    auto show = [&](const CatElement& e) {
        return path_to_string(c.quiver(), c.representative(e));
    };
    if (a.json_mode)
        out << json{{"lcm", show(lcm)},
                    {"complement-of-q", show(cp)},
                    {"complement-of-p", show(cq)}}
                   .dump(2)
            << "\n";
    else
        out << "lcm = " << show(lcm) << "\n"
            << (a.right ? "p\\q = " : "p-side cofactor = ") << show(cp) << "\n"
            << (a.right ? "q\\p = " : "q-side cofactor = ") << show(cq) << "\n";
    return 0;
}

int run_from_presentation(const Args& a, std::istream& in, std::ostream& out) {
    Document d = load_document(a.doc, in);
    if (d.kind != DocKind::Presentation)
        throw ParseError("from-presentation expects a presentation document");
    const Presentation& p = d.as_presentation();
    ConditionReport rep = check_conditions(p);
    json jz = json::object();
    std::ostringstream text;
    const Quiver& q = p.quiver();
    print_condition(text, "i", rep.i);
    print_condition(text, "ii", rep.ii);
    print_condition(text, "ii'", rep.ii_dual);
    print_condition(text, "iii", rep.iii);
    print_condition(text, "iii'", rep.iii_dual);
    print_condition(text, "iv (derived)", rep.iv);
    print_condition(text, "iv' (derived)", rep.iv_dual);
    print_condition(text, "v", rep.v);
    for (auto& [arr, z] : rep.z) {
        text << "z[" << q.arrow_id(arr) << "] = " << q.arrow_id(z) << "\n";
        jz[q.arrow_id(arr)] = q.arrow_id(z);
    }
    json jzd = json::object();
    for (auto& [arr, z] : rep.z_dual) {
        text << "z^[" << q.arrow_id(arr) << "] = " << q.arrow_id(z) << "\n";
        jzd[q.arrow_id(arr)] = q.arrow_id(z);
    }
    bool ok = rep.all_pass();
    bool round = false;
    std::optional<Document> extracted;
    if (ok) {
        extracted = wrap(extract_solution(p));
        round = roundtrip_check(p, extracted->as_solution());
        text << "roundtrip: " << (round ? "pass" : "fail") << "\n";
    }
    if (a.json_mode) {
        json report{{"conditions",
                     {{"i", condition_json(rep.i)},
                      {"ii", condition_json(rep.ii)},
                      {"ii'", condition_json(rep.ii_dual)},
                      {"iii", condition_json(rep.iii)},
                      {"iii'", condition_json(rep.iii_dual)},
                      {"iv", condition_json(rep.iv)},
                      {"iv'", condition_json(rep.iv_dual)},
                      {"v", condition_json(rep.v)}}},
                    {"z", std::move(jz)},
                    {"z-dual", std::move(jzd)},
                    {"roundtrip", round},
                    {"pass", ok && round}};
        if (extracted && a.doc_out == "-")
            report["solution"] = json::parse(serialize(*extracted));
        else if (extracted && !a.doc_out.empty())
            emit_document(*extracted, a.doc_out, out);
        out << report.dump(2) << "\n";
    } else {
        out << text.str() << "result: " << (ok && round ? "PASS" : "FAIL") << "\n";
        if (extracted && !a.doc_out.empty())
            emit_document(*extracted, a.doc_out, out);
    }
    return ok && round ? 0 : 1;
}

int run_from_heap(const Args& a, std::istream& in, std::ostream& out) {
    Document d = load_document(a.doc, in);
    if (d.kind != DocKind::Heap)
        throw ParseError("from-heap expects a heap document");
    emit_document(wrap(solution_from_ternary(d.as_ternary())), a.doc_out, out);
    return 0;
}

int run_from_group(const Args& a, std::istream& in, std::ostream& out) {
    Document d = load_document(a.doc, in);
    if (d.kind != DocKind::Group)
        throw ParseError("from-group expects a group document");
    emit_document(wrap(heap_from_group(d.as_group())), a.doc_out, out);
    return 0;
}

int run_check_heap(const Args& a, std::istream& in, std::ostream& out) {
    Document d = load_document(a.doc, in);
    if (d.kind != DocKind::Heap)
        throw ParseError("check-heap expects a heap document");
    HeapReport rep = check_heap(d.as_ternary());
    if (a.json_mode) {
        out << json{{"M1", condition_json(rep.m1)},
                    {"M2", condition_json(rep.m2)},
                    {"A", condition_json(rep.assoc)},
                    {"involutive-condition", condition_json(rep.involutive_cond)},
                    {"abelian", condition_json(rep.abelian)},
                    {"heap", rep.is_heap()}}
                   .dump(2)
            << "\n";
    } else {
        print_condition(out, "M1", rep.m1);
        print_condition(out, "M2", rep.m2);
        print_condition(out, "A", rep.assoc);
        print_condition(out, "involutivity <a,<a,b,c>,c>=b", rep.involutive_cond);
        print_condition(out, "abelian", rep.abelian);
        out << "result: " << (rep.is_heap() ? "heap" : "not a heap") << "\n";
    }
    return rep.is_heap() ? 0 : 1;
}

int run_example(const Args& a, std::istream&, std::ostream& out) {
    std::optional<int> param = a.n_param ? a.n_param : a.k_param;
    emit_document(builtin_example(a.example_name, param), a.doc_out, out);
    return 0;
}

int run_oracle_check(const Args& a, std::istream& in, std::ostream& out) {
    StructureCategory c(solution_from_document(load_document(a.doc, in)));
    OracleCheckResult res = oracle_check(c, a.max_len);
    if (a.json_mode)
        out << json{{"paths", res.paths},
                    {"classes", res.classes},
                    {"max-len", a.max_len},
                    {"agree", res.ok},
                    {"detail", res.detail}}
                   .dump(2)
            << "\n";
    else {
        out << "checked " << res.paths << " paths in " << res.classes
            << " classes up to length " << a.max_len << "\n";
        out << (res.ok ? "oracle and normal form agree"
                       : "DISAGREEMENT: " + res.detail)
            << "\n";
    }
    return res.ok ? 0 : 1;
}

}  // namespace

int dispatch(std::vector<std::string> args, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"quiver Yang-Baxter maps, RC-systems and Garside normal forms"};
    app.require_subcommand(1);
    Args a;

    auto add_doc = [&](CLI::App* cmd) {
        cmd->add_option("doc", a.doc, "document file (\"-\" for stdin)")->required();
        cmd->add_flag("--json", a.json_mode, "machine-readable output");
    };

    auto* validate = app.add_subcommand("validate", "run the YB/involutive/non-degenerate sweeps");
    add_doc(validate);
    validate->add_option("--max-violations", a.max_violations, "report cap (default 100)");

    auto* derive = app.add_subcommand("derive-rc", "print the derived complement table");
    add_doc(derive);
    derive->add_flag("--co", a.co, "the co-system table instead");
    derive->add_flag("--complete", a.completed, "insert unit loops first");

    auto* grid = app.add_subcommand("grid", "fill a grid on two paths");
    add_doc(grid);
    grid->add_flag("--star", a.star, "same-source grid");
    grid->add_flag("--bullet", a.bullet, "same-target grid");
    grid->add_option("p", a.p, "first path")->required();
    grid->add_option("q", a.q, "second path")->required();

    auto* fam = app.add_subcommand("garside-family", "enumerate the Garside family");
    add_doc(fam);
    fam->add_flag("--no-dual", a.no_dual, "skip the dual description cross-check");

    auto* nf = app.add_subcommand("normal-form", "strict greedy normal form of a path");
    add_doc(nf);
    nf->add_option("path", a.p, "path (space-separated arrow ids)")->required();

    auto* eq = app.add_subcommand("equal", "decide equality of two words");
    add_doc(eq);
    eq->add_option("p", a.p, "first word")->required();
    eq->add_option("q", a.q, "second word")->required();
    eq->add_flag("--groupoid", a.groupoid, "words in the doubled quiver (~x inverts)");

    auto* lcm = app.add_subcommand("lcm", "least common multiple of two paths");
    add_doc(lcm);
    lcm->add_flag("--right", a.right, "right-lcm (same source)");
    lcm->add_flag("--left", a.left, "left-lcm (same target)");
    lcm->add_option("p", a.p, "first path")->required();
    lcm->add_option("q", a.q, "second path")->required();

    auto* fp = app.add_subcommand("from-presentation",
                                  "check the converse conditions and extract the solution");
    add_doc(fp);
    fp->add_option("-o,--out", a.doc_out, "write the extracted solution here");

    auto* fh = app.add_subcommand("from-heap", "braiding of a ternary-operation document");
    add_doc(fh);
    fh->add_option("-o,--out", a.doc_out, "output file (default stdout)");

    auto* fg = app.add_subcommand("from-group", "heap of a group document");
    add_doc(fg);
    fg->add_option("-o,--out", a.doc_out, "output file (default stdout)");

    auto* ch = app.add_subcommand("check-heap", "heap axioms of a ternary-operation document");
    add_doc(ch);

    auto* ex = app.add_subcommand("example", "emit a built-in document");
    ex->add_option("name", a.example_name, "z3 | z2n | zk | pres0 | pres1 | pres2")->required();
    ex->add_flag("--json", a.json_mode, "machine-readable output");
    int nv = -1, kv = -1;
    ex->add_option("--n", nv, "rank for z2n");
    ex->add_option("--k", kv, "order for zk");
    ex->add_option("-o,--out", a.doc_out, "output file (default stdout)");

    auto* oc = app.add_subcommand("oracle-check", "BFS oracle vs normal form, all short paths");
    add_doc(oc);
    oc->add_option("--max-len", a.max_len, "maximum path length (default 4)");

    std::vector<const char*> argv;
    argv.push_back("gq");
    for (auto& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (nv >= 0)
        a.n_param = nv;
    if (kv >= 0)
        a.k_param = kv;

    try {
        if (validate->parsed())
            return run_validate(a, in, out);
        if (derive->parsed())
            return run_derive_rc(a, in, out);
        if (grid->parsed())
            return run_grid(a, in, out);
        if (fam->parsed())
            return run_garside_family(a, in, out);
        if (nf->parsed())
            return run_normal_form(a, in, out);
        if (eq->parsed())
            return run_equal(a, in, out);
        if (lcm->parsed())
            return run_lcm(a, in, out);
        if (fp->parsed())
            return run_from_presentation(a, in, out);
        if (fh->parsed())
            return run_from_heap(a, in, out);
        if (fg->parsed())
            return run_from_group(a, in, out);
        if (ch->parsed())
            return run_check_heap(a, in, out);
        if (ex->parsed())
            return run_example(a, in, out);
        if (oc->parsed())
            return run_oracle_check(a, in, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace gq
