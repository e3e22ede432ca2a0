#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilalg/error.hpp"
#include "nilalg/scalar.hpp"
#include "nilalg/solver.hpp"

namespace nilalg {

/// Coordinates in the basis e_1..e_n.
using Vector = std::vector<Scalar>;

inline Vector basis_vector(std::size_t n, std::size_t k) {
    Vector v(n);
    v.at(k) = Scalar(1);
    return v;
}

inline bool is_zero_vector(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// A finite-dimensional algebra given by e_i * e_j = sum_k lambda(i, j, k) e_k.
///
/// Indices are 0-based in the API and 1-based in text. Unset products are zero.
class StructureConstants {
public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t dim, std::string name = {})
        : dim_(dim), name_(std::move(name)), table_(dim * dim * dim) {
        if (dim == 0) throw DimensionError("algebra dimension must be positive");
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::string& name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const { return table_[index(i, j, k)]; }
    void set(std::size_t i, std::size_t j, std::size_t k, Scalar value) { table_[index(i, j, k)] = std::move(value); }

    /// e_i * e_j as a coordinate vector.
    Vector product(std::size_t i, std::size_t j) const {
        Vector v(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v[k] = coefficient(i, j, k);
        return v;
    }

    bool product_is_zero(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < dim_; ++k)
            if (!coefficient(i, j, k).is_zero()) return false;
        return true;
    }

    /// True iff some structure constant depends on the parameter.
    bool is_parametric() const {
        for (const auto& x : table_)
            if (x.mentions_parameter()) return true;
        return false;
    }

    bool is_commutative_table() const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k)
                    if (coefficient(i, j, k) != coefficient(j, i, k)) return false;
        return true;
    }

    /// Same table with the parameter replaced by t.
    StructureConstants specialize(const GaussianRational& t) const {
        StructureConstants out(dim_, name_);
        for (std::size_t k = 0; k < table_.size(); ++k)
            if (!table_[k].is_zero()) out.table_[k] = Scalar(table_[k].eval(t));
        return out;
    }

    /// Every structure constant multiplied by s.
    StructureConstants scaled(const Scalar& s) const {
        StructureConstants out = *this;
        for (auto& x : out.table_) x *= s;
        return out;
    }

    friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("basis index out of range");
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_ = 0;
    std::string name_;
    std::vector<Scalar> table_;
};

/// (x * y)_k = sum_ij x_i y_j lambda(i, j, k).
inline Vector multiply(const StructureConstants& a, const Vector& x, const Vector& y) {
    const std::size_t n = a.dim();
    if (x.size() != n || y.size() != n) throw DimensionError("multiply: vector length does not match algebra dimension");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& c = a.coefficient(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

inline Vector add(Vector x, const Vector& y) {
    if (x.size() != y.size()) throw DimensionError("vector length mismatch");
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return x;
}

inline Vector subtract(Vector x, const Vector& y) {
    if (x.size() != y.size()) throw DimensionError("vector length mismatch");
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
    return x;
}

struct AssociatorViolation {
    std::size_t i, j, k;  ///< 0-based basis indices
    Vector associator;    ///< (e_i e_j) e_k - e_i (e_j e_k)
};

/// All basis triples whose associator is not identically zero.
inline std::vector<AssociatorViolation> check_associative(const StructureConstants& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> basis;
    for (std::size_t k = 0; k < n; ++k) basis.push_back(basis_vector(n, k));
    std::vector<AssociatorViolation> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vector assoc = subtract(multiply(a, ij, basis[k]), multiply(a, basis[i], a.product(j, k)));
                if (!is_zero_vector(assoc)) out.push_back({i, j, k, std::move(assoc)});
            }
        }
    }
    return out;
}

/// Least k with A^k = 0, where A^(m+1) = A*A^m + A^m*A; nullopt if the chain
/// stops at a nonzero subspace.
inline std::optional<std::size_t> nilindex(const StructureConstants& a) {
    const std::size_t n = a.dim();
    std::vector<Vector> whole;
    for (std::size_t k = 0; k < n; ++k) whole.push_back(basis_vector(n, k));
    auto current = MatrixSubspace<Scalar>::span(n, 1, whole);
    for (std::size_t power = 1; power <= n + 1; ++power) {
        if (current.dim() == 0) return power;
        std::vector<Vector> products;
        for (const auto& x : whole) {
            for (const auto& y : current.basis()) {
                products.push_back(multiply(a, x, y));
                products.push_back(multiply(a, y, x));
            }
        }
        auto next = MatrixSubspace<Scalar>::span(n, 1, products);
        if (next == current) return std::nullopt;
        current = std::move(next);
    }
    return std::nullopt;
}

/// Coefficient matrix of the center system: rows (j, k), columns i, entries lambda(i,j,k) - lambda(j,i,k).
inline Matrix<Scalar> center_system(const StructureConstants& a) {
    const std::size_t n = a.dim();
    Matrix<Scalar> m(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = a.coefficient(i, j, k) - a.coefficient(j, i, k);
    return m;
}

/// Z(A) as a subspace of n x 1 coordinate columns.
inline MatrixSubspace<Scalar> center(const StructureConstants& a, ExceptionalLocus* locus = nullptr) {
    auto ns = nullspace(center_system(a));
    if (locus) locus->merge(ns.locus);
    return std::move(ns.space);
}

/// span{e_k : k in indices} as n x 1 columns; indices are 0-based.
inline MatrixSubspace<Scalar> coordinate_span(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<Vector> gens;
    for (auto k : indices) gens.push_back(basis_vector(n, k));
    return MatrixSubspace<Scalar>::span(n, 1, gens);
}

}  // namespace nilalg
