#pragma once
// Exact linear algebra over prime fields GF(q).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace odlab::gf {

using Elem = std::uint32_t;

bool is_prime(std::uint32_t q) noexcept;

// Prime field GF(q), q <= 65521 so that products fit in 32 bits.
class Field {
public:
    explicit Field(std::uint32_t q);

    std::uint32_t order() const noexcept { return q_; }

    Elem add(Elem a, Elem b) const noexcept { return (a + b) % q_; }
    Elem sub(Elem a, Elem b) const noexcept { return (a + q_ - b) % q_; }
    Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((std::uint64_t{a} * b) % q_); }
    Elem neg(Elem a) const noexcept { return a == 0 ? 0 : q_ - a; }
    Elem inv(Elem a) const;  // throws on a == 0
    Elem reduce(std::int64_t v) const noexcept;

    friend bool operator==(const Field&, const Field&) = default;

private:
    std::uint32_t q_;
};

class Vector {
public:
    Vector(Field field, std::vector<Elem> coords);
    static Vector zero(Field field, std::size_t n);
    static Vector unit(Field field, std::size_t n, std::size_t i);

    const Field& field() const noexcept { return field_; }
    std::size_t size() const noexcept { return coords_.size(); }
    Elem operator[](std::size_t i) const noexcept { return coords_[i]; }
    std::span<const Elem> coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;

    // Scaled so the first nonzero coordinate is 1; zero stays zero.
    Vector normalized() const;
    Vector scaled(Elem a) const;

    // "(1,0,2)"
    std::string to_string() const;

    friend bool operator==(const Vector& a, const Vector& b) { return a.coords_ == b.coords_; }
    friend std::strong_ordering operator<=>(const Vector& a, const Vector& b) { return a.coords_ <=> b.coords_; }

private:
    Field field_;
    std::vector<Elem> coords_;
};

// Standard bilinear form sum_i x_i y_i. Throws InvalidArgument on length or field mismatch.
Elem inner_product(const Vector& x, const Vector& y);

inline bool is_self_orthogonal(const Vector& v) { return inner_product(v, v) == 0; }

class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix from_rows(Field field, const std::vector<std::vector<Elem>>& rows);
    static Matrix from_vectors(Field field, std::size_t cols, std::span<const Vector> rows);
    static Matrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { data_[r * cols_ + c] = field_.reduce(v); }
    Vector row(std::size_t r) const;
    std::vector<Vector> row_vectors() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

// Reduced row-echelon form with zero rows dropped.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column of each row, strictly increasing
};

Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);

// Subspace of F^n, stored as its unique RREF basis.
class Subspace {
public:
    static Subspace zero(Field field, std::size_t n);
    static Subspace full(Field field, std::size_t n);
    static Subspace span(Field field, std::size_t n, std::span<const Vector> generators);
    // Rows must already be a valid RREF basis (used by enumeration); checked.
    static Subspace from_rref(Matrix basis);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    bool contains(const Vector& v) const;
    std::uint64_t cardinality() const;

    // All q^dim elements in lexicographic order. Throws GuardExceeded past max_elements.
    std::vector<Vector> elements(std::uint64_t max_elements = std::uint64_t{1} << 20) const;

    // "{0}" or "<(1,0),(0,1)>"
    std::string to_string() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    // Orders by dimension, then basis entries row-major.
    friend bool operator<(const Subspace& a, const Subspace& b);

private:
    Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace orthogonal_complement(const Subspace& u);
Subspace intersect(const Subspace& u, const Subspace& w);
Subspace sum(const Subspace& u, const Subspace& w);

struct EnumerationGuard {
    std::uint32_t max_q = 5;
    std::size_t max_n = 4;
};

// Every subspace of F^n exactly once, sorted by (dim, basis).
std::vector<Subspace> enumerate_subspaces(Field field, std::size_t n, EnumerationGuard guard = {});

// Number of k-dimensional subspaces of GF(q)^n: prod_{i<k} (q^n - q^i)/(q^k - q^i).
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k);
std::uint64_t subspace_count(std::uint64_t q, std::size_t n);

// Lexicographically first w in U with <w,w> != 0.
std::optional<Vector> find_nonisotropic(const Subspace& u, std::uint64_t max_elements = std::uint64_t{1} << 20);

// All of F^n in lexicographic order.
std::vector<Vector> all_vectors(Field field, std::size_t n);
// Nonzero vectors whose first nonzero coordinate is 1, lexicographic.
std::vector<Vector> projective_points(Field field, std::size_t n);

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap);

}  // namespace odlab::gf
