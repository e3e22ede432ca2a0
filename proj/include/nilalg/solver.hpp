#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/error.hpp"
#include "nilalg/poly.hpp"
#include "nilalg/rational.hpp"
#include "nilalg/scalar.hpp"

namespace nilalg {

template <class F>
concept ExactField = requires(F a, F b) {
    { a.is_zero() } -> std::convertible_to<bool>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    F(1);
};

/// Dense row-major matrix over an exact field.
template <ExactField F = Scalar>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw DimensionError("matrix data does not match its shape");
    }
    Matrix(std::initializer_list<std::initializer_list<F>> rows) : rows_(rows.size()) {
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = F(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Row-major flattening.
    const std::vector<F>& flat() const noexcept { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const F& x) { return x.is_zero(); });
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator+(Matrix a, const Matrix& b) {
        a.check_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        a.check_same_shape(b);
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend Matrix operator*(const F& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    /// Matrix-vector product.
    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
        std::vector<F> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
            }
        }
        return out;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

/// Parameter values at which a generically computed rank may change.
///
/// Holds monic nonconstant polynomials in `a`: linear factors over Q(i) plus
/// cofactors without a root found in Q(i). Quadratic cofactors with roots in
/// Q(i) are solved exactly; the rest stay unsolved.
class ExceptionalLocus {
public:
    /// Stores the linear factors of p over Q(i) and the remaining cofactor.
    void add(const Poly& p) {
        if (p.degree() < 1) return;
        Poly rest = p.monic();
        for (const auto& r : gaussian_roots(rest)) {
            const Poly factor = Poly::parameter() - Poly(r);
            for (;;) {
                auto [q, rem] = divmod(rest, factor);
                if (!rem.is_zero()) break;
                rest = std::move(q);
            }
            insert(factor);
        }
        if (rest.degree() >= 1) insert(rest.monic());
    }
    void merge(const ExceptionalLocus& other) {
        for (const auto& p : other.polys_) insert(p);
    }


    bool empty() const noexcept { return polys_.empty(); }
    const std::vector<Poly>& polys() const noexcept { return polys_; }
    std::size_t max_degree() const {
        int d = 0;
        for (const auto& p : polys_) d = std::max(d, p.degree());
        return static_cast<std::size_t>(d);
    }

    /// True iff some member vanishes at t.
    bool contains(const GaussianRational& t) const {
        return std::any_of(polys_.begin(), polys_.end(), [&](const Poly& p) { return p.eval(t).is_zero(); });
    }

    /// Exact roots of the degree <= 2 members, deduplicated, in a stable order.
    std::vector<GaussianRational> solved_roots() const {
        std::vector<GaussianRational> roots;
        auto push = [&](GaussianRational r) {
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(std::move(r));
        };
        for (const auto& p : polys_) {
            if (p.degree() == 1) {
                push(-p.coefficient(0));
            } else if (p.degree() == 2) {
                const GaussianRational b = p.coefficient(1);
                const GaussianRational c = p.coefficient(0);
                GaussianRational root;
                if (gaussian_sqrt(b * b - GaussianRational(4) * c, root)) {
                    push((-b + root) / GaussianRational(2));
                    push((-b - root) / GaussianRational(2));
                }
            }
        }
        std::sort(roots.begin(), roots.end(),
                  [](const GaussianRational& x, const GaussianRational& y) {
                      if (x.re() != y.re()) return x.re() < y.re();
                      return x.im() < y.im();
                  });
        return roots;
    }

    /// Members whose roots were not extracted (degree > 2, or roots outside Q(i)).
    std::vector<Poly> unsolved() const {
        std::vector<Poly> out;
        for (const auto& p : polys_) {
            if (p.degree() > 2) {
                out.push_back(p);
            } else if (p.degree() == 2) {
                GaussianRational root;
                const GaussianRational b = p.coefficient(1);
                if (!gaussian_sqrt(b * b - GaussianRational(4) * p.coefficient(0), root)) out.push_back(p);
            }
        }
        return out;
    }

    friend bool operator==(const ExceptionalLocus&, const ExceptionalLocus&) = default;

private:
    void insert(const Poly& m) {
        auto it = std::lower_bound(polys_.begin(), polys_.end(), m, less);
        if (it != polys_.end() && *it == m) return;
        polys_.insert(it, m);
    }
    static bool less(const Poly& x, const Poly& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        return x.to_string() < y.to_string();
    }

    std::vector<Poly> polys_;
};

template <ExactField F>
struct RrefResult {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    ExceptionalLocus locus;
};

/// Reduced row-echelon form. Pivot: first column with a nonzero entry, topmost
/// nonzero row in it. Over Scalar, each pivot's numerator and denominator are
/// recorded in the locus.
template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(r, k));
        const F pivot = m(r, c);
        if constexpr (std::same_as<F, Scalar>) {
            out.locus.add(pivot.num());
            out.locus.add(pivot.den());
        }
        if (!(pivot == F(1))) {
            const F inv = F(1) / pivot;
            for (std::size_t k = c; k < cols; ++k)
                if (!m(r, k).is_zero()) m(r, k) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const F factor = m(i, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(r, k).is_zero()) m(i, k) -= factor * m(r, k);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

/// Subspace of rows x cols matrices, kept as a canonical reduced-echelon basis of
/// row-major flattenings. Two subspaces are equal iff their stored bases are equal.
template <ExactField F = Scalar>
class MatrixSubspace {
public:
    MatrixSubspace() = default;
    MatrixSubspace(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    /// Canonical basis of span(generators); the locus of the reduction is written to `locus` if given.
    static MatrixSubspace span(std::size_t rows, std::size_t cols, const std::vector<std::vector<F>>& generators,
                               ExceptionalLocus* locus = nullptr) {
        MatrixSubspace s(rows, cols);
        const std::size_t width = rows * cols;
        Matrix<F> stacked(generators.size(), width);
        for (std::size_t g = 0; g < generators.size(); ++g) {
            if (generators[g].size() != width) throw DimensionError("generator does not fit the ambient shape");
            for (std::size_t k = 0; k < width; ++k) stacked(g, k) = generators[g][k];
        }
        auto red = rref(std::move(stacked));
        if (locus) locus->merge(red.locus);
        for (std::size_t r = 0; r < red.rank; ++r) {
            std::vector<F> v(width);
            for (std::size_t k = 0; k < width; ++k) v[k] = red.reduced(r, k);
            s.basis_.push_back(std::move(v));
        }
        s.pivots_ = std::move(red.pivot_cols);
        return s;
    }

    static MatrixSubspace span(std::size_t rows, std::size_t cols, const std::vector<Matrix<F>>& generators,
                               ExceptionalLocus* locus = nullptr) {
        std::vector<std::vector<F>> flat;
        flat.reserve(generators.size());
        for (const auto& g : generators) {
            if (g.rows() != rows || g.cols() != cols) throw DimensionError("generator does not fit the ambient shape");
            flat.push_back(g.flat());
        }
        return span(rows, cols, flat, locus);
    }

    /// The whole ambient space.
    static MatrixSubspace full(std::size_t rows, std::size_t cols) {
        std::vector<std::vector<F>> units(rows * cols, std::vector<F>(rows * cols));
        for (std::size_t k = 0; k < rows * cols; ++k) units[k][k] = F(1);
        return span(rows, cols, units);
    }

    std::size_t ambient_rows() const noexcept { return rows_; }
    std::size_t ambient_cols() const noexcept { return cols_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::vector<std::vector<F>>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& echelon_profile() const noexcept { return pivots_; }

    Matrix<F> basis_matrix(std::size_t k) const { return Matrix<F>(rows_, cols_, basis_.at(k)); }
    std::vector<Matrix<F>> basis_matrices() const {
        std::vector<Matrix<F>> out;
        for (std::size_t k = 0; k < basis_.size(); ++k) out.push_back(basis_matrix(k));
        return out;
    }

    /// Same flattened basis viewed in another ambient shape with the same number of entries.
    MatrixSubspace reshaped(std::size_t rows, std::size_t cols) const {
        if (rows * cols != rows_ * cols_) throw DimensionError("reshape changes the ambient size");
        MatrixSubspace s = *this;
        s.rows_ = rows;
        s.cols_ = cols;
        return s;
    }

    /// Residue of v after reduction against the basis; zero iff v is in the span.
    std::vector<F> reduce(std::vector<F> v) const {
        if (v.size() != rows_ * cols_) throw DimensionError("vector does not fit the ambient shape");
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const F coeff = v[pivots_[b]];
            if (coeff.is_zero()) continue;
            for (std::size_t k = pivots_[b]; k < v.size(); ++k)
                if (!basis_[b][k].is_zero()) v[k] -= coeff * basis_[b][k];
        }
        return v;
    }

    bool contains(const std::vector<F>& v) const {
        const auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const F& x) { return x.is_zero(); });
    }

    friend bool operator==(const MatrixSubspace&, const MatrixSubspace&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<F>> basis_;
    std::vector<std::size_t> pivots_;
};

/// True iff m lies in span(s).
template <ExactField F>
bool membership(const MatrixSubspace<F>& s, const Matrix<F>& m) {
    if (m.rows() != s.ambient_rows() || m.cols() != s.ambient_cols())
        throw DimensionError("membership: shape mismatch");
    return s.contains(m.flat());
}

template <ExactField F>
struct NullspaceResult {
    MatrixSubspace<F> space;  ///< cols x 1 column vectors
    ExceptionalLocus locus;
};

/// Canonical basis of { v : M v = 0 }. Over Scalar the dimension is generic in `a`.
template <ExactField F>
NullspaceResult<F> nullspace(const Matrix<F>& m) {
    auto red = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : red.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> vectors;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(cols);
        v[f] = F(1);
        for (std::size_t r = 0; r < red.rank; ++r) {
            const F& x = red.reduced(r, f);
            if (!x.is_zero()) v[red.pivot_cols[r]] = -x;
        }
        vectors.push_back(std::move(v));
    }
    NullspaceResult<F> out{MatrixSubspace<F>::span(cols, 1, vectors), std::move(red.locus)};
    return out;
}

/// Entrywise substitution a := t.
inline Matrix<GaussianRational> specialize(const Matrix<Scalar>& m, const GaussianRational& t) {
    std::vector<GaussianRational> data;
    data.reserve(m.flat().size());
    for (const auto& x : m.flat()) data.push_back(x.eval(t));
    return Matrix<GaussianRational>(m.rows(), m.cols(), std::move(data));
}

/// Nullspace dimension of M with a := t, computed over Q(i).
inline std::size_t specialize_dim(const Matrix<Scalar>& m, const GaussianRational& t) {
    return m.cols() - rref(specialize(m, t)).rank;
}

}  // namespace nilalg
