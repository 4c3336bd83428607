#include "odlab/report.hpp"

#include <cmath>
#include <future>

#include "odlab/algebraic.hpp"
#include "odlab/clique.hpp"
#include "odlab/coloring.hpp"
#include "odlab/index_coding.hpp"
#include "odlab/subspace_graphs.hpp"

namespace odlab {

using witness::Json;

ReductionTarget parse_reduction_target(const std::string& s) {
    if (s == "od") return ReductionTarget::od;
    if (s == "minrank") return ReductionTarget::minrank;
    if (s == "ic") return ReductionTarget::index_coding;
    throw InvalidArgument("unknown reduction target '" + s + "' (expected od, minrank or ic)");
}

const char* to_string(ReductionTarget t) noexcept {
    switch (t) {
        case ReductionTarget::od:
            return "od";
        case ReductionTarget::minrank:
            return "minrank";
        case ReductionTarget::index_coding:
            return "ic";
    }
    return "?";
}

ReductionOutput reduce(const Graph& g, ReductionTarget target) {
    LineDigraph line = line_digraph(g);
    Graph h = underlying_graph(line.digraph);
    if (target != ReductionTarget::od) h = complement(h);
    return ReductionOutput{target, std::move(h), std::move(line.arcs)};
}

namespace {

Json check(const std::string& id, const std::string& statement) {
    Json j;
    j["id"] = id;
    j["statement"] = statement;
    return j;
}

// q^e >= x, without overflow.
bool pow_at_least(std::uint64_t q, std::uint64_t e, std::uint64_t x) { return gf::checked_pow(q, e, x) >= x; }

ParamOptions param_options(const ReportOptions& opts) {
    ParamOptions p;
    p.k_max = opts.k_max;
    p.limits.max_nodes = opts.node_budget;
    return p;
}

// Smallest value the parameter can still take given a search result.
std::size_t certified_lower(ParamStatus s, std::size_t k, std::size_t clique_lb, std::size_t k_max) {
    if (s == ParamStatus::exact) return k;
    if (s == ParamStatus::exceeds) return k_max + 1;
    return std::max(k, clique_lb);
}

Json param_json(ParamStatus s, std::size_t k, std::size_t lb, const std::string& note) {
    Json j;
    j["status"] = to_string(s);
    j["value"] = k;
    j["clique_lower_bound"] = lb;
    if (!note.empty()) j["note"] = note;
    return j;
}

struct Common {
    Graph g;
    Graph h;
    ChromaticResult chi_g;
    std::optional<ChromaticResult> chi_h;
    std::vector<Vertex> clique_h;
    // Upper bound on chi(G); exact when chi_g.exact().
    std::uint64_t chi_upper() const { return chi_g.k; }
};

std::vector<Json> field_checks(const Common& c, std::uint32_t q, const ReportOptions& opts) {
    std::vector<Json> out;
    const gf::Field f(q);
    const ParamOptions popts = param_options(opts);
    const Graph gbar = complement(c.g);
    const Graph hbar = complement(c.h);
    const std::uint64_t chi = c.chi_upper();
    const std::string fq = "GF(" + std::to_string(q) + ")";

    const OdResult od_g = orthogonality_dimension(c.g, f, popts);
    const MinrankResult mr_g = minrank(gbar, f, popts);

    {
        Json j = check("minrank_le_od_le_chi", "minrank(complement G) <= od(G) <= chi(G) over " + fq);
        j["field"] = q;
        j["minrank_complement_G"] = param_json(mr_g.status, mr_g.k, mr_g.lower_bound, mr_g.note);
        j["od_G"] = param_json(od_g.status, od_g.k, od_g.lower_bound, od_g.note);
        j["chi_G"] = c.chi_g.k;
        const bool exact = od_g.status == ParamStatus::exact && mr_g.status == ParamStatus::exact && c.chi_g.exact();
        if (!exact) j["status"] = "UNKNOWN";
        else j["status"] = (mr_g.k <= od_g.k && od_g.k <= c.chi_g.k) ? "PASS" : "FAIL";
        Json w = Json::array();
        if (mr_g.matrix) w.push_back(witness::repr_matrix(gbar, *mr_g.matrix));
        if (od_g.rep) w.push_back(witness::orth_rep(c.g, *od_g.rep));
        w.push_back(witness::coloring(c.g, c.chi_g.coloring));
        j["witnesses"] = std::move(w);
        out.push_back(std::move(j));
    }
    {
        Json j = check("minrank_ge_log_chi", "minrank(complement G) >= log_q chi(G) over " + fq);
        j["field"] = q;
        const std::size_t lb = certified_lower(mr_g.status, mr_g.k, mr_g.lower_bound, popts.k_max);
        j["lhs_lower_bound"] = lb;
        j["rhs"] = chi == 0 ? 0.0 : std::log(static_cast<double>(chi)) / std::log(static_cast<double>(q));
        if (pow_at_least(q, lb, chi)) j["status"] = "PASS";
        else j["status"] = (mr_g.status == ParamStatus::exact && c.chi_g.exact()) ? "FAIL" : "UNKNOWN";
        Json w = Json::array();
        if (mr_g.matrix) w.push_back(witness::repr_matrix(gbar, *mr_g.matrix));
        w.push_back(witness::coloring(c.g, c.chi_g.coloring));
        j["witnesses"] = std::move(w);
        out.push_back(std::move(j));
    }

    const OdResult od_h = orthogonality_dimension(c.h, f, popts);
    const MinrankResult mr_h = minrank(hbar, f, popts);
    const double log_chi = chi <= 1 ? 0.0 : std::log(static_cast<double>(chi)) / std::log(static_cast<double>(q));
    {
        Json j = check("od_H_ge_sqrt_log_chi", "od(H) >= sqrt(log_q chi(G)) over " + fq);
        j["field"] = q;
        j["od_H"] = param_json(od_h.status, od_h.k, od_h.lower_bound, od_h.note);
        const std::size_t lb = certified_lower(od_h.status, od_h.k, std::max(od_h.lower_bound, c.clique_h.size()), popts.k_max);
        j["lhs_lower_bound"] = lb;
        j["rhs"] = std::sqrt(log_chi);
        // od >= sqrt(log_q chi)  <=>  q^(od^2) >= chi
        j["status"] = pow_at_least(q, std::uint64_t{lb} * lb, chi) ? "PASS" : (od_h.status == ParamStatus::exact ? "FAIL" : "UNKNOWN");
        Json w = Json::array();
        if (od_h.rep) w.push_back(witness::orth_rep(c.h, *od_h.rep));
        w.push_back(witness::clique(c.h, c.clique_h));
        j["witnesses"] = std::move(w);
        out.push_back(std::move(j));
    }
    {
        Json j = check("minrank_Hbar_ge_sqrt_half_log_chi", "minrank(complement H) >= sqrt(log_q chi(G) / 2) over " + fq);
        j["field"] = q;
        j["minrank_complement_H"] = param_json(mr_h.status, mr_h.k, mr_h.lower_bound, mr_h.note);
        const std::size_t lb = certified_lower(mr_h.status, mr_h.k, std::max(mr_h.lower_bound, c.clique_h.size()), popts.k_max);
        j["lhs_lower_bound"] = lb;
        j["rhs"] = std::sqrt(log_chi / 2.0);
        // mr >= sqrt(log_q chi / 2)  <=>  q^(2 mr^2) >= chi
        j["status"] = pow_at_least(q, 2 * std::uint64_t{lb} * lb, chi) ? "PASS" : (mr_h.status == ParamStatus::exact ? "FAIL" : "UNKNOWN");
        Json w = Json::array();
        if (mr_h.matrix) w.push_back(witness::repr_matrix(hbar, *mr_h.matrix));
        w.push_back(witness::clique(c.h, c.clique_h));
        j["witnesses"] = std::move(w);
        out.push_back(std::move(j));
    }
    {
        // chi(G)-coloring composed with a clique of S(F,n) gives an n-dimensional representation of H
        Json j = check("od_H_le_n_via_subspace_clique", "chi(G) <= omega(S(F,n)) implies od(H) <= n over " + fq);
        j["field"] = q;
        if (!c.chi_g.exact()) {
            j["status"] = "UNKNOWN";
        } else {
            std::size_t n = 0;
            std::vector<gf::Subspace> clique;
            while (true) {
                auto canon = canonical_clique_S(f, n);
                clique = std::move(canon);
                try {
                    if (n >= 1 && clique.size() < c.chi_g.k) {
                        const auto s = build_S(f, n);
                        CliqueOptions copts;
                        copts.limits.max_nodes = opts.node_budget;
                        const auto best = max_clique(s.graph, copts);
                        if (best.vertices.size() > clique.size()) {
                            clique.clear();
                            for (auto v : best.vertices) clique.push_back(s.subspaces[v]);
                        }
                    }
                } catch (const GuardExceeded&) {
                }
                if (clique.size() >= c.chi_g.k) break;
                ++n;
            }
            j["n"] = n;
            j["clique_size"] = clique.size();
            j["chi_H"] = c.chi_h ? Json(c.chi_h->k) : Json(nullptr);
            Coloring col = c.chi_g.coloring;
            const OrthRep rep = od_rep_from_clique(c.g, col, clique);
            j["status"] = verify_orth_rep(c.h, rep) && rep.dim == n ? "PASS" : "FAIL";
            if (od_h.status == ParamStatus::exact) j["od_H"] = od_h.k;
            j["witnesses"] = Json::array({witness::orth_rep(c.h, rep)});
        }
        out.push_back(std::move(j));
    }

    if (q == 2) {
        {
            Json j = check("index_code_coloring", "a length-k index code for complement G gives chi(G) <= 2^(2^k)");
            j["field"] = q;
            if (!mr_g.matrix || c.g.num_vertices() > opts.index_max_vertices) {
                j["status"] = "UNKNOWN";
            } else {
                const IndexCode code = linear_code_from_matrix(gbar, *mr_g.matrix);
                const bool valid = verify_index_code(gbar, code);
                const Coloring col = coloring_from_index_code(c.g, code);
                const bool bounded = code.k < 6 && col.palette <= (std::uint64_t{1} << (std::uint64_t{1} << code.k));
                j["length"] = code.k;
                j["palette"] = col.palette;
                j["status"] = valid && verify_coloring(c.g, col) && bounded ? "PASS" : "FAIL";
                j["witnesses"] = Json::array({witness::repr_matrix(gbar, *mr_g.matrix), witness::index_code(gbar, code),
                                              witness::coloring(c.g, col)});
            }
            out.push_back(std::move(j));
        }
        {
            Json j = check("line_index_code_coloring",
                           "a length-k index code for complement H gives chi(G) <= 2^(2^k), with k = minrank(complement H)");
            j["field"] = q;
            if (!mr_h.matrix || c.h.num_vertices() > opts.index_max_vertices) {
                j["status"] = "UNKNOWN";
                j["note"] = mr_h.matrix ? "H too large for exhaustive code verification" : "no minrank witness for complement H";
            } else {
                const IndexCode code = linear_code_from_matrix(hbar, *mr_h.matrix);
                const bool valid = verify_index_code(hbar, code);
                const Coloring col = line_coloring_from_index_code(c.g, code);
                const bool bounded = code.k < 6 && col.palette <= (std::uint64_t{1} << (std::uint64_t{1} << code.k));
                j["length"] = code.k;
                j["palette"] = col.palette;
                j["status"] = valid && verify_coloring(c.g, col) && bounded ? "PASS" : "FAIL";
                j["witnesses"] = Json::array({witness::repr_matrix(hbar, *mr_h.matrix), witness::index_code(hbar, code),
                                              witness::coloring(c.g, col)});
            }
            out.push_back(std::move(j));
        }
    }
    return out;
}

}  // namespace

Json paper_report(const Graph& g, const ReportOptions& opts) {
    Common c;
    c.g = g;
    c.h = line_graph_h(g);
    ChromaticOptions copts;
    copts.max_vertices = opts.chi_max_vertices;
    copts.limits.max_nodes = opts.node_budget;
    c.chi_g = chromatic_number(g, copts);
    if (c.h.num_vertices() <= opts.chi_max_vertices) c.chi_h = chromatic_number(c.h, copts);
    {
        CliqueOptions qopts;
        qopts.limits.max_nodes = opts.node_budget;
        c.clique_h = max_clique(c.h, qopts).vertices;
    }

    Json report;
    report["schema"] = 1;
    report["graph"] = witness::graph_json(g);
    Json stats;
    stats["G_vertices"] = g.num_vertices();
    stats["G_edges"] = g.num_edges();
    stats["H_vertices"] = c.h.num_vertices();
    stats["H_edges"] = c.h.num_edges();
    report["stats"] = std::move(stats);
    report["fields"] = opts.fields;

    Json checks = Json::array();
    {
        Json j = check("chi_H_equals_min_n", "chi(H) = min{n : chi(G) <= b(n)}, b(n) = C(n, floor(n/2))");
        j["chi_G"] = {{"value", c.chi_g.k}, {"status", to_string(c.chi_g.status)}, {"minimality", c.chi_g.minimality}};
        if (c.chi_h)
            j["chi_H"] = {{"value", c.chi_h->k}, {"status", to_string(c.chi_h->status)}, {"minimality", c.chi_h->minimality}};
        if (!c.chi_g.exact() || !c.chi_h || !c.chi_h->exact()) {
            j["status"] = "UNKNOWN";
        } else {
            const unsigned n = min_n_with_b_at_least(c.chi_g.k);
            j["rhs"] = n;
            const Coloring lifted = lift_coloring_to_line(g, c.chi_g.coloring, n);
            const Coloring back = set_coloring_from_line(g, c.chi_h->coloring, c.chi_h->k);
            const bool ok = c.chi_h->k == n && verify_coloring(c.h, lifted) && verify_coloring(g, back);
            j["status"] = ok ? "PASS" : "FAIL";
            j["witnesses"] = Json::array({witness::coloring(g, c.chi_g.coloring), witness::coloring(c.h, c.chi_h->coloring),
                                          witness::coloring(c.h, lifted), witness::coloring(g, back)});
        }
        checks.push_back(std::move(j));
    }
    {
        Json j = check("od_R_H_growth", "od_R(H) >= c * sqrt(log chi(G) / log log chi(G)); c unspecified, reported only");
        const double chi = static_cast<double>(c.chi_g.k);
        j["chi_G"] = c.chi_g.k;
        j["sqrt_log_over_loglog"] = chi > 2 ? Json(std::sqrt(std::log2(chi) / std::log2(std::log2(chi)))) : Json(nullptr);
        if (c.chi_h) j["chi_H_upper_bound_on_od_R_H"] = c.chi_h->k;
        j["status"] = "REPORTED";
        checks.push_back(std::move(j));
    }

    std::vector<std::vector<Json>> per_field(opts.fields.size());
    if (opts.jobs > 1 && opts.fields.size() > 1) {
        std::vector<std::future<std::vector<Json>>> futs;
        for (auto q : opts.fields) futs.push_back(std::async(std::launch::async, [&c, q, &opts] { return field_checks(c, q, opts); }));
        for (std::size_t i = 0; i < futs.size(); ++i) per_field[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < opts.fields.size(); ++i) per_field[i] = field_checks(c, opts.fields[i], opts);
    }
    for (auto& fc : per_field)
        for (auto& j : fc) checks.push_back(std::move(j));
    report["checks"] = std::move(checks);

    const ReportTally t = tally(report);
    report["summary"] = {{"pass", t.pass}, {"fail", t.fail}, {"unknown", t.unknown}, {"reported", t.reported}};
    return report;
}

ReportTally tally(const Json& report) {
    ReportTally t;
    if (!report.contains("checks")) return t;
    for (const auto& c : report.at("checks")) {
        const auto s = c.value("status", std::string("UNKNOWN"));
        if (s == "PASS") ++t.pass;
        else if (s == "FAIL") ++t.fail;
        else if (s == "REPORTED") ++t.reported;
        else ++t.unknown;
    }
    return t;
}

}  // namespace odlab
