#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "nilalg/solver.hpp"
#include "nilalg/structconst.hpp"

namespace nilalg {

// Operators on A are n x n matrices in the column convention: column i holds
// the coordinates of the image of e_i, so f(x) = M x.

struct DerivationResult {
    MatrixSubspace<Scalar> space;
    std::size_t dim = 0;
    ExceptionalLocus locus;
};

struct CentroidResult {
    MatrixSubspace<Scalar> space;
    std::size_t dim = 0;
    ExceptionalLocus locus;
};

struct InnerResult {
    MatrixSubspace<Scalar> space;
    std::size_t dim = 0;
    std::vector<Matrix<Scalar>> generators;  ///< generators[t] = ad_{e_t}
    ExceptionalLocus locus;
};

/// Leibniz system: row (i, j, t), column t*n + k for the unknown d_tk,
///   sum_k lambda(i,j,k) d_tk - lambda(k,j,t) d_ki - lambda(i,k,t) d_kj = 0.
inline Matrix<Scalar> derivation_system(const StructureConstants& a) {
    const std::size_t n = a.dim();
    Matrix<Scalar> m(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t row = (i * n + j) * n + t;
                for (std::size_t k = 0; k < n; ++k) {
                    if (const auto& c = a.coefficient(i, j, k); !c.is_zero()) m(row, t * n + k) += c;
                    if (const auto& c = a.coefficient(k, j, t); !c.is_zero()) m(row, k * n + i) -= c;
                    if (const auto& c = a.coefficient(i, k, t); !c.is_zero()) m(row, k * n + j) -= c;
                }
            }
        }
    }
    return m;
}

/// Both centroid identities stacked: first phi(e_i e_j) = phi(e_i) e_j, then
/// phi(e_i e_j) = e_i phi(e_j), each over rows (i, j, p).
inline Matrix<Scalar> centroid_system(const StructureConstants& a) {
    const std::size_t n = a.dim();
    const std::size_t block = n * n * n;
    Matrix<Scalar> m(2 * block, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t p = 0; p < n; ++p) {
                const std::size_t row = (i * n + j) * n + p;
                for (std::size_t k = 0; k < n; ++k) {
                    if (const auto& c = a.coefficient(k, j, p); !c.is_zero()) m(row, k * n + i) += c;
                    if (const auto& c = a.coefficient(i, k, p); !c.is_zero()) m(block + row, k * n + j) += c;
                    if (const auto& c = a.coefficient(i, j, k); !c.is_zero()) {
                        m(row, p * n + k) -= c;
                        m(block + row, p * n + k) -= c;
                    }
                }
            }
        }
    }
    return m;
}

inline DerivationResult derivation_algebra(const StructureConstants& a) {
    const std::size_t n = a.dim();
    auto ns = nullspace(derivation_system(a));
    DerivationResult out{ns.space.reshaped(n, n), ns.space.dim(), std::move(ns.locus)};
    return out;
}

inline CentroidResult centroid(const StructureConstants& a) {
    const std::size_t n = a.dim();
    auto ns = nullspace(centroid_system(a));
    CentroidResult out{ns.space.reshaped(n, n), ns.space.dim(), std::move(ns.locus)};
    return out;
}

/// Matrix of ad_w : x -> x*w - w*x.
inline Matrix<Scalar> ad_matrix(const StructureConstants& a, const Vector& w) {
    const std::size_t n = a.dim();
    Matrix<Scalar> m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector e = basis_vector(n, i);
        const Vector image = subtract(multiply(a, e, w), multiply(a, w, e));
        for (std::size_t k = 0; k < n; ++k) m(k, i) = image[k];
    }
    return m;
}

inline InnerResult inner_derivations(const StructureConstants& a) {
    const std::size_t n = a.dim();
    InnerResult out;
    for (std::size_t t = 0; t < n; ++t) out.generators.push_back(ad_matrix(a, basis_vector(n, t)));
    out.space = MatrixSubspace<Scalar>::span(n, n, out.generators, &out.locus);
    out.dim = out.space.dim();
    return out;
}

/// d(e_i e_j) = d(e_i) e_j + e_i d(e_j) for all basis pairs, checked through multiply.
inline bool is_derivation(const StructureConstants& a, const Matrix<Scalar>& d) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ei = basis_vector(n, i);
        const Vector dei = d.apply(ei);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ej = basis_vector(n, j);
            const Vector lhs = d.apply(a.product(i, j));
            const Vector rhs = add(multiply(a, dei, ej), multiply(a, ei, d.apply(ej)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// phi(e_i e_j) = phi(e_i) e_j = e_i phi(e_j) for all basis pairs.
inline bool is_centroid_element(const StructureConstants& a, const Matrix<Scalar>& phi) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ei = basis_vector(n, i);
        const Vector pei = phi.apply(ei);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector ej = basis_vector(n, j);
            const Vector lhs = phi.apply(a.product(i, j));
            if (lhs != multiply(a, pei, ej)) return false;
            if (lhs != multiply(a, ei, phi.apply(ej))) return false;
        }
    }
    return true;
}

/// XY - YX lies in the space for every pair of basis matrices.
inline bool lie_closure_check(const MatrixSubspace<Scalar>& space) {
    const auto basis = space.basis_matrices();
    for (std::size_t x = 0; x < basis.size(); ++x)
        for (std::size_t y = x + 1; y < basis.size(); ++y)
            if (!membership(space, basis[x] * basis[y] - basis[y] * basis[x])) return false;
    return true;
}

inline bool lie_closure_check(const DerivationResult& d) { return lie_closure_check(d.space); }

/// Identity and every product XY of basis matrices lie in the space.
inline bool composition_closure_check(const MatrixSubspace<Scalar>& space) {
    if (space.ambient_rows() != space.ambient_cols()) return false;
    if (!membership(space, Matrix<Scalar>::identity(space.ambient_rows()))) return false;
    const auto basis = space.basis_matrices();
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (!membership(space, x * y)) return false;
    return true;
}

inline bool composition_closure_check(const CentroidResult& c) { return composition_closure_check(c.space); }

}  // namespace nilalg
