#pragma once
// Index codes with symmetric side information: verification, linear codes
// from representing matrices, exhaustive optimum on tiny graphs, and the
// coloring extraction from a code.

#include <cstdint>
#include <optional>
#include <vector>

#include "odlab/algebraic.hpp"
#include "odlab/coloring.hpp"
#include "odlab/graph.hpp"

namespace odlab {

// Messages and codewords are s-ary words indexed big-endian: x_1 is the most
// significant digit. table[msg] = codeword index in [0, s^k).
struct IndexCode {
    std::uint32_t s = 2;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::uint32_t> table;
    std::optional<gf::Matrix> linear;  // k x n, present for linear codes over GF(s)
};

inline constexpr std::uint64_t kMaxMessages = std::uint64_t{1} << 20;

// Digits of index `idx` as a length-len s-ary word.
std::vector<std::uint32_t> word_of(std::uint64_t idx, std::uint32_t s, std::size_t len);
std::uint64_t index_of_word(const std::vector<std::uint32_t>& w, std::uint32_t s);

IndexCode identity_code(std::uint32_t s, std::size_t n);

// Every receiver i decodes x_i from (E(x), x restricted to N(i)).
// Throws GuardExceeded when s^n > 2^20.
bool verify_index_code(const Graph& g, const IndexCode& code);

// Encoder = the first k linearly independent rows of the matrix (in row order).
// Throws InvalidWitness if m does not represent g.
IndexCode linear_code_from_matrix(const Graph& g, const ReprMatrix& m);

struct BruteForceOptions {
    std::size_t k_max = 4;
    SearchLimits limits{};
};

struct BruteForceResult {
    ParamStatus status = ParamStatus::unknown;
    std::size_t k = 0;
    std::optional<IndexCode> code;
    std::uint64_t nodes = 0;
};

// Least k admitting any valid code over an alphabet of size s. Plain enumeration
// of encoder tables when n <= 3; canonical backtracking with per-message
// decodability pruning for n = 4. Throws GuardExceeded for n > 4.
BruteForceResult optimal_index_code_bruteforce(const Graph& g, std::uint32_t s, const BruteForceOptions& opts = {});

// Truth table of h_i: entry y is 1 iff receiver i, given codeword y and all-zero
// side information, decodes a nonzero symbol (0 when y is off the encoder image).
std::vector<std::vector<bool>> receiver_truth_tables(const Graph& side_info, const IndexCode& code);

// code must be valid for complement(g). Color = rank of the truth table of h_i.
Coloring coloring_from_index_code(const Graph& g, const IndexCode& code);
// code must be valid for complement(H), H the underlying graph of the line digraph of g.
// h_v(y) = 0 iff h_(u,v)(y) = 0 for every in-arc (u,v).
Coloring line_coloring_from_index_code(const Graph& g, const IndexCode& code);

}  // namespace odlab
