#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace odlab {

// A configured enumeration or search guard would be exceeded.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad file contents, mismatched dimensions, non-prime modulus.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A witness handed to a translator or constructor fails its own verification.
class InvalidWitness : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Outcome of an exact search.
enum class SearchStatus {
    found,    // witness produced
    none,     // search space exhausted without a witness
    unknown,  // budget ran out first; says nothing about existence
};

const char* to_string(SearchStatus s) noexcept;

// Deterministic search budget. `max_nodes` bounds branching steps; the wall-clock
// limit is optional and off by default so repeated runs agree.
struct SearchLimits {
    std::uint64_t max_nodes = 200'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

class Budget {
public:
    explicit Budget(const SearchLimits& limits)
        : limits_(limits), start_(std::chrono::steady_clock::now()) {}

    // Charges one node; returns false once the budget is spent.
    bool step() {
        if (exhausted_) return false;
        if (++nodes_ > limits_.max_nodes) {
            exhausted_ = true;
            return false;
        }
        if (limits_.time_limit && (nodes_ & 0xfff) == 0 &&
            std::chrono::steady_clock::now() - start_ > *limits_.time_limit) {
            exhausted_ = true;
            return false;
        }
        return true;
    }
    bool exhausted() const noexcept { return exhausted_; }
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    SearchLimits limits_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace odlab
