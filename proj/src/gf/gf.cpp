#include "odlab/gf.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "odlab/errors.hpp"

namespace odlab::gf {

bool is_prime(std::uint32_t q) noexcept {
    if (q < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t{d} * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Field::Field(std::uint32_t q) : q_(q) {
    if (q > 65521 || !is_prime(q)) throw InvalidArgument("field order must be a prime <= 65521, got " + std::to_string(q));
}

Elem Field::inv(Elem a) const {
    if (a % q_ == 0) throw InvalidArgument("inverse of zero");
    // Fermat: a^(q-2)
    std::uint64_t result = 1;
    std::uint64_t base = a % q_;
    std::uint32_t e = q_ - 2;
    while (e) {
        if (e & 1U) result = result * base % q_;
        base = base * base % q_;
        e >>= 1;
    }
    return static_cast<Elem>(result);
}

Elem Field::reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    if (r < 0) r += q_;
    return static_cast<Elem>(r);
}

// ---------------------------------------------------------------- Vector

Vector::Vector(Field field, std::vector<Elem> coords) : field_(field), coords_(std::move(coords)) {
    for (auto& c : coords_) c %= field_.order();
}

Vector Vector::zero(Field field, std::size_t n) { return Vector(field, std::vector<Elem>(n, 0)); }

Vector Vector::unit(Field field, std::size_t n, std::size_t i) {
    std::vector<Elem> c(n, 0);
    c.at(i) = 1;
    return Vector(field, std::move(c));
}

bool Vector::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Elem c) { return c == 0; });
}

Vector Vector::normalized() const {
    for (Elem c : coords_)
        if (c != 0) return scaled(field_.inv(c));
    return *this;
}

Vector Vector::scaled(Elem a) const {
    std::vector<Elem> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out[i] = field_.mul(coords_[i], a);
    return Vector(field_, std::move(out));
}

std::string Vector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coords_[i]);
    }
    return s + ")";
}

Elem inner_product(const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw InvalidArgument("inner_product: length mismatch");
    if (!(x.field() == y.field())) throw InvalidArgument("inner_product: field mismatch");
    const Field& f = x.field();
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += std::uint64_t{x[i]} * y[i];
    return static_cast<Elem>(acc % f.order());
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidArgument("matrix rows must have equal length");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c] % field.order();
    }
    return m;
}

Matrix Matrix::from_vectors(Field field, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidArgument("vector length does not match ambient dimension");
        if (!(rows[r].field() == field)) throw InvalidArgument("vector over a different field");
        for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = rows[r][c];
    }
    return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(field_, std::vector<Elem>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Echelon row_reduce(const Matrix& m) {
    const Field& f = m.field();
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Elem>> a(rows, std::vector<Elem>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);

    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[lead]);
        const Elem s = f.inv(a[lead][c]);
        for (auto& x : a[lead]) x = f.mul(x, s);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a[r][c] == 0) continue;
            const Elem factor = a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[r][j] = f.sub(a[r][j], f.mul(factor, a[lead][j]));
        }
        pivots.push_back(c);
        ++lead;
    }
    a.resize(lead);
    Matrix out(f, lead, cols);
    for (std::size_t r = 0; r < lead; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.set(r, c, a[r][c]);
    return {std::move(out), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(Field field, std::size_t n) { return Subspace(Matrix(field, 0, n), {}); }

Subspace Subspace::full(Field field, std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(Matrix::identity(field, n), std::move(piv));
}

Subspace Subspace::span(Field field, std::size_t n, std::span<const Vector> generators) {
    Echelon e = row_reduce(Matrix::from_vectors(field, n, generators));
    return Subspace(std::move(e.rref), std::move(e.pivots));
}

Subspace Subspace::from_rref(Matrix basis) {
    Echelon e = row_reduce(basis);
    if (!(e.rref == basis)) throw InvalidArgument("from_rref: matrix is not a reduced row-echelon basis");
    return Subspace(std::move(e.rref), std::move(e.pivots));
}

bool Subspace::contains(const Vector& v) const {
    if (v.size() != ambient_dim()) throw InvalidArgument("contains: ambient dimension mismatch");
    // Reduce v against the RREF basis; v is in U iff the residue vanishes.
    const Field& f = field();
    std::vector<Elem> r(v.coords().begin(), v.coords().end());
    for (std::size_t i = 0; i < dim(); ++i) {
        const Elem c = r[pivots_[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, basis_.at(i, j)));
    }
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

std::uint64_t Subspace::cardinality() const {
    return checked_pow(field().order(), dim(), ~std::uint64_t{0} - 1);
}

std::vector<Vector> Subspace::elements(std::uint64_t max_elements) const {
    const std::uint64_t total = checked_pow(field().order(), dim(), max_elements);
    if (total > max_elements) throw GuardExceeded("subspace has more than " + std::to_string(max_elements) + " elements");
    const Field& f = field();
    const std::size_t n = ambient_dim();
    const std::size_t k = dim();
    std::vector<Vector> out;
    out.reserve(total);
    // Coefficient tuples in lexicographic order map to vectors in lexicographic
    // order because coordinate pivots_[i] of the combination equals coefficient i.
    std::vector<Elem> coef(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Elem> v(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (coef[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(coef[i], basis_.at(i, j)));
        }
        out.emplace_back(f, std::move(v));
        for (std::size_t i = k; i-- > 0;) {
            if (++coef[i] < f.order()) break;
            coef[i] = 0;
        }
    }
    return out;
}

std::string Subspace::to_string() const {
    if (dim() == 0) return "{0}";
    std::string s = "<";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) s += ',';
        s += basis_.row(i).to_string();
    }
    return s + ">";
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_dim(); ++c)
            if (a.basis_.at(r, c) != b.basis_.at(r, c)) return a.basis_.at(r, c) < b.basis_.at(r, c);
    return false;
}

Subspace orthogonal_complement(const Subspace& u) {
    const Field& f = u.field();
    const std::size_t n = u.ambient_dim();
    const auto& piv = u.pivots();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : piv) is_pivot[p] = true;
    // Null space of the RREF basis: one generator per free column.
    std::vector<Vector> gens;
    for (std::size_t fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Elem> x(n, 0);
        x[fc] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = f.neg(u.basis().at(i, fc));
        gens.emplace_back(f, std::move(x));
    }
    return Subspace::span(f, n, gens);
}

Subspace sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim() || !(u.field() == w.field()))
        throw InvalidArgument("sum: ambient space mismatch");
    std::vector<Vector> gens = u.basis_vectors();
    for (auto& v : w.basis_vectors()) gens.push_back(std::move(v));
    return Subspace::span(u.field(), u.ambient_dim(), gens);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim() != w.ambient_dim() || !(u.field() == w.field()))
        throw InvalidArgument("intersect: ambient space mismatch");
    // The standard form is nondegenerate, so U ∩ W = (U^⊥ + W^⊥)^⊥.
    return orthogonal_complement(sum(orthogonal_complement(u), orthogonal_complement(w)));
}

std::vector<Subspace> enumerate_subspaces(Field field, std::size_t n, EnumerationGuard guard) {
    if (field.order() > guard.max_q || n > guard.max_n)
        throw GuardExceeded("subspace enumeration guard exceeded (q=" + std::to_string(field.order()) +
                            ", n=" + std::to_string(n) + ")");
    const std::uint32_t q = field.order();
    std::vector<Subspace> out;
    for (std::size_t k = 0; k <= n; ++k) {
        // Pivot sets: k-combinations of [0, n) in lexicographic order.
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (std::size_t p : piv) is_pivot[p] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free_cells;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t c = piv[i] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_cells.emplace_back(i, c);
            std::vector<Elem> fill(free_cells.size(), 0);
            while (true) {
                Matrix m(field, k, n);
                for (std::size_t i = 0; i < k; ++i) m.set(i, piv[i], 1);
                for (std::size_t t = 0; t < free_cells.size(); ++t) m.set(free_cells[t].first, free_cells[t].second, fill[t]);
                out.push_back(Subspace::from_rref(std::move(m)));
                std::size_t t = fill.size();
                while (t > 0) {
                    if (++fill[t - 1] < q) break;
                    fill[t - 1] = 0;
                    --t;
                }
                if (t == 0) break;
            }
            // next combination
            std::size_t i = k;
            while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
    if (k > n) return 0;
    // Exact rational product; numerator and denominator stay small for the
    // parameter ranges enumerated here, and the quotient is always integral.
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    auto pw = [q](std::size_t e) {
        unsigned __int128 r = 1;
        for (std::size_t i = 0; i < e; ++i) r *= q;
        return r;
    };
    for (std::size_t i = 0; i < k; ++i) {
        num *= pw(n) - pw(i);
        den *= pw(k) - pw(i);
    }
    return static_cast<std::uint64_t>(num / den);
}

std::uint64_t subspace_count(std::uint64_t q, std::size_t n) {
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(q, n, k);
    return total;
}

std::optional<Vector> find_nonisotropic(const Subspace& u, std::uint64_t max_elements) {
    for (const auto& w : u.elements(max_elements))
        if (!w.is_zero() && inner_product(w, w) != 0) return w;
    return std::nullopt;
}

std::vector<Vector> all_vectors(Field field, std::size_t n) {
    return Subspace::full(field, n).elements(~std::uint64_t{0} - 1);
}

std::vector<Vector> projective_points(Field field, std::size_t n) {
    std::vector<Vector> out;
    for (auto& v : all_vectors(field, n))
        if (!v.is_zero() && v.normalized() == v) out.push_back(std::move(v));
    return out;
}

}  // namespace odlab::gf
