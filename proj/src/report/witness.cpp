#include "odlab/witness.hpp"

#include <set>

#include "odlab/clique.hpp"

namespace odlab::witness {

namespace {

const std::set<std::string> kTypes{"coloring", "orth_rep", "repr_matrix", "index_code", "clique", "homomorphism"};

Json vector_json(const gf::Vector& v) {
    Json a = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

gf::Vector vector_from_json(gf::Field f, const Json& j) {
    std::vector<gf::Elem> coords;
    for (const auto& x : j) {
        const auto e = x.get<std::int64_t>();
        if (e < 0 || e >= static_cast<std::int64_t>(f.order())) throw InvalidArgument("witness: coordinate out of field range");
        coords.push_back(static_cast<gf::Elem>(e));
    }
    return gf::Vector(f, std::move(coords));
}

Json matrix_json(const gf::Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
    return rows;
}

gf::Matrix matrix_from_json(gf::Field f, const Json& j) {
    std::vector<std::vector<gf::Elem>> rows;
    for (const auto& r : j) {
        std::vector<gf::Elem> row;
        for (const auto& x : r) {
            const auto e = x.get<std::int64_t>();
            if (e < 0 || e >= static_cast<std::int64_t>(f.order())) throw InvalidArgument("witness: entry out of field range");
            row.push_back(static_cast<gf::Elem>(e));
        }
        rows.push_back(std::move(row));
    }
    return gf::Matrix::from_rows(f, rows);
}

std::string word_string(std::uint64_t idx, std::uint32_t s, std::size_t len) {
    std::string out;
    for (auto d : word_of(idx, s, len)) out += std::to_string(d) + (s > 10 ? "," : "");
    if (s > 10 && !out.empty()) out.pop_back();
    return out;
}

std::uint64_t parse_word(const std::string& w, std::uint32_t s, std::size_t len) {
    std::vector<std::uint32_t> digits;
    if (s > 10) {
        std::size_t pos = 0;
        while (pos <= w.size() && !w.empty()) {
            const auto next = w.find(',', pos);
            digits.push_back(static_cast<std::uint32_t>(std::stoul(w.substr(pos, next - pos))));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    } else {
        for (char ch : w) {
            if (ch < '0' || ch > '9') throw InvalidArgument("witness: bad codeword digit");
            digits.push_back(static_cast<std::uint32_t>(ch - '0'));
        }
    }
    if (digits.size() != len) throw InvalidArgument("witness: codeword of wrong length");
    for (auto d : digits)
        if (d >= s) throw InvalidArgument("witness: codeword digit out of alphabet");
    return index_of_word(digits, s);
}

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("witness: missing '") + key + "'");
    return j.at(key);
}

}  // namespace

Json graph_json(const Graph& g) {
    Json j;
    j["vertices"] = g.num_vertices();
    j["labels"] = g.labels();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    const auto n = need(j, "vertices").get<std::size_t>();
    Graph g = j.contains("labels") ? Graph(j.at("labels").get<std::vector<std::string>>()) : Graph(n);
    if (g.num_vertices() != n) throw InvalidArgument("witness: label count differs from vertex count");
    for (const auto& e : need(j, "edges")) {
        const auto u = e.at(0).get<std::size_t>();
        const auto v = e.at(1).get<std::size_t>();
        if (u >= n || v >= n) throw InvalidArgument("witness: edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

Json coloring(const Graph& g, const Coloring& c) {
    Json j;
    j["type"] = "coloring";
    j["palette"] = c.palette;
    j["colors"] = c.colors;
    j["graph"] = graph_json(g);
    return j;
}

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.palette = need(j, "palette").get<std::uint32_t>();
    c.colors = need(j, "colors").get<std::vector<std::uint32_t>>();
    return c;
}

Json orth_rep(const Graph& g, const OrthRep& rep) {
    Json j;
    j["type"] = "orth_rep";
    j["field"] = rep.field.order();
    j["dim"] = rep.dim;
    Json vs = Json::array();
    for (const auto& v : rep.vectors) vs.push_back(vector_json(v));
    j["vectors"] = std::move(vs);
    j["graph"] = graph_json(g);
    return j;
}

OrthRep orth_rep_from_json(const Json& j) {
    const gf::Field f(need(j, "field").get<std::uint32_t>());
    OrthRep rep{f, need(j, "dim").get<std::size_t>(), {}};
    for (const auto& v : need(j, "vectors")) rep.vectors.push_back(vector_from_json(f, v));
    return rep;
}

Json repr_matrix(const Graph& g, const ReprMatrix& m) {
    Json j;
    j["type"] = "repr_matrix";
    j["field"] = m.matrix.field().order();
    j["rank"] = m.rank;
    j["matrix"] = matrix_json(m.matrix);
    j["graph"] = graph_json(g);
    return j;
}

ReprMatrix repr_matrix_from_json(const Json& j) {
    const gf::Field f(need(j, "field").get<std::uint32_t>());
    return ReprMatrix{matrix_from_json(f, need(j, "matrix")), need(j, "rank").get<std::size_t>()};
}

Json index_code(const Graph& g, const IndexCode& code) {
    Json j;
    j["type"] = "index_code";
    j["alphabet"] = code.s;
    j["receivers"] = code.n;
    j["length"] = code.k;
    if (code.linear) j["matrix"] = matrix_json(*code.linear);
    Json enc = Json::array();
    for (std::uint64_t x = 0; x < code.table.size(); ++x) enc.push_back(word_string(code.table[x], code.s, code.k));
    j["encoder"] = std::move(enc);
    j["graph"] = graph_json(g);
    return j;
}

IndexCode index_code_from_json(const Json& j) {
    IndexCode code;
    code.s = need(j, "alphabet").get<std::uint32_t>();
    code.n = need(j, "receivers").get<std::size_t>();
    code.k = need(j, "length").get<std::size_t>();
    if (code.s < 2) throw InvalidArgument("witness: alphabet needs at least 2 symbols");
    for (const auto& w : need(j, "encoder")) code.table.push_back(static_cast<std::uint32_t>(parse_word(w.get<std::string>(), code.s, code.k)));
    if (j.contains("matrix")) code.linear = matrix_from_json(gf::Field(code.s), j.at("matrix"));
    return code;
}

Json clique(const Graph& g, const std::vector<Vertex>& vertices) {
    Json j;
    j["type"] = "clique";
    j["size"] = vertices.size();
    j["vertices"] = vertices;
    j["graph"] = graph_json(g);
    return j;
}

Json homomorphism(const Graph& source, const Graph& target, const Homomorphism& h) {
    Json j;
    j["type"] = "homomorphism";
    j["map"] = h.map;
    j["graph"] = graph_json(source);
    j["target"] = graph_json(target);
    return j;
}

namespace {

// A linear code must agree with its matrix on every message.
bool linear_matches(const IndexCode& code) {
    if (!code.linear) return true;
    const auto& m = *code.linear;
    const gf::Field f = m.field();
    if (f.order() != code.s || m.rows() != code.k || m.cols() != code.n) return false;
    for (std::uint64_t x = 0; x < code.table.size(); ++x) {
        const auto w = word_of(x, code.s, code.n);
        std::vector<std::uint32_t> c(code.k);
        for (std::size_t a = 0; a < code.k; ++a) {
            gf::Elem acc = 0;
            for (std::size_t b = 0; b < code.n; ++b) acc = f.add(acc, f.mul(m.at(a, b), static_cast<gf::Elem>(w[b])));
            c[a] = acc;
        }
        if (index_of_word(c, code.s) != code.table[x]) return false;
    }
    return true;
}

}  // namespace

bool verify(const Json& w) {
    const auto type = need(w, "type").get<std::string>();
    const Graph g = graph_from_json(need(w, "graph"));
    if (type == "coloring") return verify_coloring(g, coloring_from_json(w));
    if (type == "orth_rep") return verify_orth_rep(g, orth_rep_from_json(w));
    if (type == "repr_matrix") {
        const auto m = repr_matrix_from_json(w);
        return verify_repr_matrix(g, m) && gf::rank(m.matrix) == m.rank;
    }
    if (type == "index_code") {
        const auto code = index_code_from_json(w);
        return linear_matches(code) && verify_index_code(g, code);
    }
    if (type == "clique") {
        const auto vs = need(w, "vertices").get<std::vector<Vertex>>();
        for (auto v : vs)
            if (v >= g.num_vertices()) return false;
        return need(w, "size").get<std::size_t>() == vs.size() && is_clique(g, vs);
    }
    if (type == "homomorphism") {
        const Graph t = graph_from_json(need(w, "target"));
        const Homomorphism h{need(w, "map").get<std::vector<Vertex>>()};
        return verify_homomorphism(g, t, h);
    }
    throw InvalidArgument("witness: unknown type '" + type + "'");
}

namespace {

void walk(const Json& j, const Json::json_pointer& at, CheckSummary& out) {
    if (j.is_object()) {
        if (j.contains("type") && j.at("type").is_string() && kTypes.count(j.at("type").get<std::string>()) &&
            j.contains("graph")) {
            ++out.checked;
            bool ok = false;
            try {
                ok = verify(j);
            } catch (const std::exception& e) {
                out.failures.push_back(at.to_string() + ": " + e.what());
                return;
            }
            if (ok) ++out.passed;
            else out.failures.push_back(at.to_string() + ": verification failed");
            return;
        }
        for (const auto& [key, value] : j.items()) walk(value, at / key, out);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], at / i, out);
    }
}

}  // namespace

CheckSummary check_all(const Json& doc) {
    CheckSummary out;
    walk(doc, Json::json_pointer(), out);
    return out;
}

}  // namespace odlab::witness
