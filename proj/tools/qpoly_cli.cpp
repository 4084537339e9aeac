#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpoly/verify.hpp"

using json = nlohmann::json;
using namespace qpoly;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParamError("cannot open " + path);
    return json::parse(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParamError("cannot write " + path);
    out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Flags {
    std::string family, out, code, side = "col", profile = "quick", point, timings, witness;
    int n = 0, d = 0, e = 0, k = 0, q = 2, s = 1;
    std::uint64_t budget = 0;
};

FamilyParams family_params(const Flags& f) {
    FamilyParams p;
    p.family = f.family;
    p.n = f.n;
    p.d = f.d;
    p.e = f.e;
    p.k = f.k;
    p.q = f.q;
    p.s = f.s;
    return p;
}

int cmd_construct(const Flags& f) {
    FamilyParams p = family_params(f);
    Code C = construct_family(p);
    BoundReport b = family_bound(p, C);
    std::ostringstream csv;
    csv << "bound,kind,n,d,q,bound_log_q,code_log_q,attained\n"
        << b.name << ',' << kind_name(b.kind) << ',' << b.n << ',' << b.d << ',' << b.q << ',' << b.bound.str() << ','
        << b.code_log << ',' << (b.attained ? "true" : "false") << '\n';
    if (f.out.empty()) {
        std::cout << dump(code_to_json(C)) << csv.str();
    } else {
        write_text(f.out, dump(code_to_json(C)));
        write_text(f.out + ".bound.csv", csv.str());
    }
    std::cerr << family_params(f).family << ": dim " << C.dim() << ", bound " << b.bound.str()
              << (b.attained ? " (attained)" : " (not attained)") << '\n';
    return 0;
}

int cmd_polymatroid(const Flags& f) {
    Code C = code_from_json(read_json(f.code));
    if (f.side != "col" && f.side != "row") throw ParamError("--side must be col or row");
    QPolymatroid M = f.side == "col" ? polymatroid_from_code_columns(C) : polymatroid_from_code_rows(C);
    json header = polymatroid_header(M, kind_name(C.amb.kind));
    header["side"] = f.side;
    if (f.out.empty()) {
        std::cout << dump(header) << rank_table_csv(M);
    } else {
        write_text(f.out, rank_table_csv(M));
        write_text(f.out + ".json", dump(header));
    }
    return 0;
}

int cmd_dual(const Flags& f) {
    Code C = code_from_json(read_json(f.code));
    Code D = form_is_degenerate(C.amb) ? orthogonal_in_ambient(C) : dual_star(C);
    json j = code_to_json(D);
    if (form_is_degenerate(C.amb))
        std::cerr << "note: the trace form is degenerate on " << C.amb.name()
                  << "; wrote the orthogonal complement, dim " << D.dim() << '\n';
    write_text(f.out, dump(j));
    return 0;
}

int cmd_weights(const Flags& f) {
    Code C = code_from_json(read_json(f.code));
    std::ostringstream csv;
    csv << "rank,count\n";
    for (const auto& [r, c] : weight_distribution(C)) csv << r << ',' << c << '\n';
    write_text(f.out, csv.str());
    return 0;
}

int cmd_verify(const std::string& id, const Flags& f) {
    const SuiteSpec& s = find_suite(id);
    Report rep;
    rep.profile = profile_from_name(f.profile);
    std::vector<json> points;
    if (!f.point.empty())
        points.push_back(json::parse(f.point));
    else
        points = s.points(rep.profile);
    for (const auto& p : points) rep.results.push_back(run_suite(id, p));
    json j = report_json(rep);
    write_text(f.out, dump(j));
    if (!f.timings.empty()) write_text(f.timings, dump(timings_json(rep)));
    return report_exit_code(rep);
}

int cmd_verify_all(const Flags& f) {
    Report rep = run_all(profile_from_name(f.profile), [](const SuiteResult& r) {
        std::cerr << status_name(r.status) << "  " << r.id << "  " << r.params.dump() << '\n';
    });
    write_text(f.out, dump(report_json(rep)));
    if (!f.timings.empty()) write_text(f.timings, dump(timings_json(rep)));
    return report_exit_code(rep);
}

int cmd_list() {
    for (const auto& s : registry()) std::cout << s.id << "\t" << s.anchor << '\n';
    return 0;
}

int cmd_anchors() {
    for (const auto& [anchor, target] : anchor_map()) std::cout << anchor << "\t" << target << '\n';
    return 0;
}

int cmd_replay(const Flags& f) {
    json w = read_json(f.witness);
    if (w.contains("witness")) w = w["witness"];
    json got = replay_witness(w);
    std::cout << dump(json{{"expected", w.at("expected")}, {"recorded", w.at("computed")}, {"recomputed", got}});
    return got == w.at("computed") ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted rank-metric codes and their q-polymatroids"};
    app.require_subcommand(1);
    Flags f;
    std::string suite_id;
    app.add_option("--budget", f.budget, "subspace and codeword enumeration cap (sets QPOLY_BUDGET)");

    auto family_flags = [&](CLI::App* c) {
        c->add_option("--family", f.family)->required();
        c->add_option("--n", f.n);
        c->add_option("--d", f.d);
        c->add_option("--e", f.e);
        c->add_option("--k", f.k);
        c->add_option("--q", f.q);
        c->add_option("--s", f.s);
    };
    auto* construct = app.add_subcommand("construct", "build a family code; writes code JSON and <out>.bound.csv");
    family_flags(construct);
    construct->add_option("--out", f.out);

    auto* poly = app.add_subcommand("polymatroid", "rank table of a code (CSV, header in <out>.json)");
    poly->add_option("--code", f.code)->required();
    poly->add_option("--side", f.side);
    poly->add_option("--out", f.out);

    auto* dual = app.add_subcommand("dual", "dual code C* inside the ambient space");
    dual->add_option("--code", f.code)->required();
    dual->add_option("--out", f.out);

    auto* weights = app.add_subcommand("weights", "rank distribution (CSV rank,count)");
    weights->add_option("--code", f.code)->required();
    weights->add_option("--out", f.out);

    auto* verify = app.add_subcommand("verify", "run one suite on its profile points or on --point");
    verify->add_option("suite", suite_id)->required();
    verify->add_option("--profile", f.profile);
    verify->add_option("--point", f.point, "parameter point as JSON");
    verify->add_option("--out", f.out);
    verify->add_option("--timings", f.timings);

    auto* verify_all = app.add_subcommand("verify-all", "run every suite; canonical JSON report");
    verify_all->add_option("--profile", f.profile);
    verify_all->add_option("--out", f.out);
    verify_all->add_option("--timings", f.timings, "wall times, kept out of the report");

    auto* list = app.add_subcommand("list", "suite ids");
    auto* anchors = app.add_subcommand("anchors", "statement -> suite id or out-of-scope reason");
    auto* replay = app.add_subcommand("replay", "recompute a discrepancy witness");
    replay->add_option("--witness", f.witness)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (f.budget) setenv("QPOLY_BUDGET", std::to_string(f.budget).c_str(), 1);

    try {
        if (*construct) return cmd_construct(f);
        if (*poly) return cmd_polymatroid(f);
        if (*dual) return cmd_dual(f);
        if (*weights) return cmd_weights(f);
        if (*verify) return cmd_verify(suite_id, f);
        if (*verify_all) return cmd_verify_all(f);
        if (*list) return cmd_list();
        if (*anchors) return cmd_anchors();
        if (*replay) return cmd_replay(f);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return 3;
    } catch (const ParamError& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
