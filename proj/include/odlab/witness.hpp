#pragma once
// Self-contained JSON witnesses. Each carries a "type" and the graph it
// certifies, so it can be re-verified without the run that produced it.

#include <string>
#include <vector>

#include <json.hpp>

#include "odlab/algebraic.hpp"
#include "odlab/coloring.hpp"
#include "odlab/graph.hpp"
#include "odlab/index_coding.hpp"

namespace odlab::witness {

using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json coloring(const Graph& g, const Coloring& c);
Json orth_rep(const Graph& g, const OrthRep& rep);
Json repr_matrix(const Graph& g, const ReprMatrix& m);
// `graph` is the side-information graph the code is valid for.
Json index_code(const Graph& g, const IndexCode& code);
Json clique(const Graph& g, const std::vector<Vertex>& vertices);
Json homomorphism(const Graph& source, const Graph& target, const Homomorphism& h);

IndexCode index_code_from_json(const Json& j);
OrthRep orth_rep_from_json(const Json& j);
ReprMatrix repr_matrix_from_json(const Json& j);
Coloring coloring_from_json(const Json& j);

// Re-verifies one witness object. Throws InvalidArgument when it is malformed.
bool verify(const Json& w);

struct CheckSummary {
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::vector<std::string> failures;  // JSON pointer of every failing or malformed witness
};

// Walks the document and verifies every object whose "type" names a witness kind.
CheckSummary check_all(const Json& doc);

}  // namespace odlab::witness
