#include "odlab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "odlab/algebraic.hpp"
#include "odlab/coloring.hpp"
#include "odlab/generators.hpp"
#include "odlab/index_coding.hpp"
#include "odlab/report.hpp"
#include "odlab/simd/kernels.hpp"
#include "odlab/subspace_graphs.hpp"
#include "odlab/witness.hpp"

namespace odlab {

using witness::Json;

namespace {

Graph load_graph(const std::string& path, std::ostream& err) {
    auto parsed = read_dimacs_file(path);
    for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << "\n";
    return std::move(parsed.graph);
}

Json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("'" + path + "' is not valid JSON: " + e.what());
    }
}

// The first witness object of the given type found in a document.
const Json* find_witness(const Json& j, const std::string& type) {
    if (j.is_object()) {
        if (j.value("type", std::string()) == type) return &j;
        for (const auto& [k, v] : j.items())
            if (auto* r = find_witness(v, type)) return r;
    } else if (j.is_array()) {
        for (const auto& v : j)
            if (auto* r = find_witness(v, type)) return r;
    }
    return nullptr;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

Json envelope(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

int param_exit(ParamStatus s) { return s == ParamStatus::unknown ? kExitGuard : kExitOk; }

struct Params {
    std::vector<std::string> files;
    std::uint32_t field = 2;
    std::size_t max_k = 8;
    std::uint64_t budget = 200'000'000;
    std::string target;
    std::size_t n = 0;
    std::string kind;
    bool line = false;
    std::uint32_t alphabet = 2;
    std::vector<std::uint32_t> fields;
    std::string json_out;
    std::size_t jobs = 1;
    std::vector<std::string> gen_args;
};

int cmd_chi(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    ChromaticOptions opts;
    opts.limits.max_nodes = p.budget;
    const auto r = chromatic_number(g, opts);
    Json j = envelope("chi");
    j["status"] = to_string(r.status);
    j["chi"] = r.k;
    j["lower_bound"] = r.lower_bound;
    j["minimality"] = r.minimality;
    j["nodes"] = r.nodes;
    j["witness"] = witness::coloring(g, r.coloring);
    emit(out, j);
    return r.exact() ? kExitOk : kExitGuard;
}

ParamOptions param_options(const Params& p) {
    ParamOptions o;
    o.k_max = p.max_k;
    o.limits.max_nodes = p.budget;
    return o;
}

int cmd_od(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    const auto r = orthogonality_dimension(g, gf::Field(p.field), param_options(p));
    Json j = envelope("od");
    j["field"] = p.field;
    j["status"] = to_string(r.status);
    j["od"] = r.k;
    j["lower_bound"] = r.lower_bound;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.rep) j["witness"] = witness::orth_rep(g, *r.rep);
    emit(out, j);
    return param_exit(r.status);
}

int cmd_minrank(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    const auto r = minrank(g, gf::Field(p.field), param_options(p));
    Json j = envelope("minrank");
    j["field"] = p.field;
    j["status"] = to_string(r.status);
    j["minrank"] = r.k;
    j["lower_bound"] = r.lower_bound;
    if (!r.note.empty()) j["note"] = r.note;
    if (r.matrix) j["witness"] = witness::repr_matrix(g, *r.matrix);
    emit(out, j);
    return param_exit(r.status);
}

int cmd_reduce(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    const auto r = reduce(g, parse_reduction_target(p.target));
    out << serialize_dimacs(r.graph);
    return kExitOk;
}

int cmd_subspace_graph(const Params& p, std::ostream& out, std::ostream&) {
    const gf::Field f(p.field);
    if (p.kind == "S") out << serialize_dimacs(build_S(f, p.n).graph);
    else if (p.kind == "Sprime") out << serialize_dimacs(build_Sprime(f, p.n).graph);
    else if (p.kind == "O") out << serialize_dimacs(build_O(f, p.n).graph);
    else if (p.kind == "Oprime") out << serialize_dimacs(build_Oprime(f, p.n).graph);
    else throw InvalidArgument("unknown kind '" + p.kind + "' (expected S, Sprime, O or Oprime)");
    return kExitOk;
}

IndexCode load_code(const std::string& path) {
    const Json doc = load_json(path);
    const Json* w = find_witness(doc, "index_code");
    if (!w) throw InvalidArgument("'" + path + "' contains no index_code object");
    return witness::index_code_from_json(*w);
}

int cmd_ic_verify(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    const IndexCode code = load_code(p.files.at(1));
    const bool ok = verify_index_code(g, code);
    Json j = envelope("index-code verify");
    j["valid"] = ok;
    j["length"] = code.k;
    emit(out, j);
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_ic_from_minrank(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    const auto r = minrank(g, gf::Field(p.field), param_options(p));
    Json j = envelope("index-code from-minrank");
    j["field"] = p.field;
    j["status"] = to_string(r.status);
    if (!r.matrix) {
        j["minrank"] = r.k;
        emit(out, j);
        return param_exit(r.status);
    }
    const IndexCode code = linear_code_from_matrix(g, *r.matrix);
    j["length"] = code.k;
    j["matrix"] = witness::repr_matrix(g, *r.matrix);
    j["code"] = witness::index_code(g, code);
    emit(out, j);
    return kExitOk;
}

int cmd_ic_brute(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    BruteForceOptions opts;
    opts.k_max = p.max_k;
    opts.limits.max_nodes = p.budget;
    const auto r = optimal_index_code_bruteforce(g, p.alphabet, opts);
    Json j = envelope("index-code brute");
    j["alphabet"] = p.alphabet;
    j["status"] = to_string(r.status);
    j["length"] = r.k;
    if (r.code) j["code"] = witness::index_code(g, *r.code);
    emit(out, j);
    return param_exit(r.status);
}

int cmd_ic_extract(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    const IndexCode code = load_code(p.files.at(1));
    const Coloring c = p.line ? line_coloring_from_index_code(g, code) : coloring_from_index_code(g, code);
    Json j = envelope("index-code extract-coloring");
    j["line"] = p.line;
    j["palette_bound_log2"] = std::to_string(code.s) + "^" + std::to_string(code.k);
    j["witness"] = witness::coloring(g, c);
    emit(out, j);
    return kExitOk;
}

int cmd_gen(const Params& p, std::ostream& out, std::ostream&) {
    if (p.gen_args.empty()) throw InvalidArgument("gen: missing family name");
    const std::vector<std::string> rest(p.gen_args.begin() + 1, p.gen_args.end());
    out << serialize_dimacs(gen::by_name(p.gen_args[0], rest));
    return kExitOk;
}

int cmd_verify_paper(const Params& p, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(p.files.at(0), err);
    ReportOptions opts;
    if (!p.fields.empty()) opts.fields = p.fields;
    opts.jobs = std::max<std::size_t>(1, p.jobs);
    if (p.budget != Params{}.budget) opts.node_budget = p.budget;
    const Json report = paper_report(g, opts);
    for (const auto& c : report.at("checks")) {
        out << c.at("status").get<std::string>() << " " << c.at("id").get<std::string>();
        if (c.contains("field")) out << " q=" << c.at("field").get<std::uint32_t>();
        out << "\n";
    }
    const auto t = tally(report);
    out << "summary: " << t.pass << " pass, " << t.fail << " fail, " << t.unknown << " unknown, " << t.reported
        << " reported\n";
    if (!p.json_out.empty()) {
        std::ofstream f(p.json_out, std::ios::binary);
        if (!f) throw InvalidArgument("cannot write '" + p.json_out + "'");
        f << report.dump(2) << "\n";
    }
    if (t.fail) return kExitCheckFailed;
    return t.unknown ? kExitGuard : kExitOk;
}

int cmd_check_witness(const Params& p, std::ostream& out, std::ostream&) {
    bool all_ok = true;
    for (const auto& path : p.files) {
        const auto s = witness::check_all(load_json(path));
        out << path << ": " << s.passed << "/" << s.checked << " witnesses verified\n";
        for (const auto& f : s.failures) out << "  FAIL " << f << "\n";
        all_ok = all_ok && s.failures.empty();
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact graph parameters over finite fields, line digraph reductions and witness checking", "odlab"};
    app.require_subcommand(1);
    Params p;
    auto budget = [&](CLI::App* sc) {
        sc->add_option("--budget", p.budget, "search node budget")->capture_default_str();
    };

    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    chi->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    budget(chi);

    auto* od = app.add_subcommand("od", "orthogonality dimension over GF(q)");
    od->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    od->add_option("--field", p.field, "prime q")->capture_default_str();
    od->add_option("--max-k", p.max_k, "largest dimension tried")->capture_default_str();
    budget(od);

    auto* mr = app.add_subcommand("minrank", "minrank over GF(q)");
    mr->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    mr->add_option("--field", p.field, "prime q")->capture_default_str();
    mr->add_option("--max-k", p.max_k, "largest rank tried")->capture_default_str();
    budget(mr);

    auto* red = app.add_subcommand("reduce", "line digraph reduction; prints the produced graph");
    red->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    red->add_option("--target", p.target, "od | minrank | ic")->required();

    auto* sg = app.add_subcommand("subspace-graph", "prints S, S', O or O' in DIMACS");
    sg->add_option("--field", p.field, "prime q")->required();
    sg->add_option("--n", p.n, "dimension")->required();
    sg->add_option("--kind", p.kind, "S | Sprime | O | Oprime")->required();

    auto* ic = app.add_subcommand("index-code", "index coding tools");
    ic->require_subcommand(1);
    auto* icv = ic->add_subcommand("verify", "check a code against a side-information graph");
    icv->add_option("files", p.files, "graph and code JSON")->required()->expected(2);
    auto* icm = ic->add_subcommand("from-minrank", "linear code from a minimum-rank representing matrix");
    icm->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    icm->add_option("--field", p.field, "prime q")->capture_default_str();
    icm->add_option("--max-k", p.max_k, "largest rank tried")->capture_default_str();
    budget(icm);
    auto* icb = ic->add_subcommand("brute", "optimal code length by exhaustive search (n <= 4)");
    icb->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    icb->add_option("--alphabet", p.alphabet, "alphabet size")->capture_default_str();
    icb->add_option("--max-k", p.max_k, "largest length tried")->capture_default_str();
    budget(icb);
    auto* ice = ic->add_subcommand("extract-coloring", "coloring of G from a code for its complement");
    ice->add_option("files", p.files, "graph and code JSON")->required()->expected(2);
    ice->add_flag("--line", p.line, "code is for the complement of the line digraph graph H");

    auto* gen = app.add_subcommand("gen", "named graph families in DIMACS");
    gen->add_option("spec", p.gen_args, "family and arguments, e.g. cycle 5")->required();

    auto* ver = app.add_subcommand("verify", "consistency reports");
    ver->require_subcommand(1);
    auto* paper = ver->add_subcommand("paper", "check every supported statement on one graph");
    paper->add_option("graph", p.files, "DIMACS file")->required()->expected(1);
    paper->add_option("--field", p.fields, "prime q, repeatable")->allow_extra_args(false);
    paper->add_option("--json", p.json_out, "write the full report here");
    paper->add_option("--jobs", p.jobs, "fields checked concurrently")->capture_default_str();
    budget(paper);

    auto* cw = app.add_subcommand("check-witness", "re-verify every witness in JSON files");
    cw->add_option("files", p.files, "JSON files")->required();

    auto* isa = app.add_subcommand("isa", "print the selected bitset kernel set");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (chi->parsed()) return cmd_chi(p, out, err);
        if (od->parsed()) return cmd_od(p, out, err);
        if (mr->parsed()) return cmd_minrank(p, out, err);
        if (red->parsed()) return cmd_reduce(p, out, err);
        if (sg->parsed()) return cmd_subspace_graph(p, out, err);
        if (icv->parsed()) return cmd_ic_verify(p, out, err);
        if (icm->parsed()) return cmd_ic_from_minrank(p, out, err);
        if (icb->parsed()) return cmd_ic_brute(p, out, err);
        if (ice->parsed()) return cmd_ic_extract(p, out, err);
        if (gen->parsed()) return cmd_gen(p, out, err);
        if (paper->parsed()) return cmd_verify_paper(p, out, err);
        if (cw->parsed()) return cmd_check_witness(p, out, err);
        if (isa->parsed()) {
            out << simd::isa_name(simd::active_isa()) << "\n";
            return kExitOk;
        }
    } catch (const GuardExceeded& e) {
        err << "odlab: guard: " << e.what() << "\n";
        return kExitGuard;
    } catch (const InvalidWitness& e) {
        err << "odlab: invalid witness: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "odlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "odlab: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "odlab: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace odlab
