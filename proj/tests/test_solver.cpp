#include <catch_amalgamated.hpp>

#include "nilalg/nilalg.hpp"
#include "support/naive_elimination.hpp"
#include "support/random_scalars.hpp"

using namespace nilalg;
using nilalg::testing::ScalarGen;

namespace {

const Scalar a = Scalar::parameter();

Scalar q(long p, long r = 1) { return Scalar(GaussianRational(Rational(p, r))); }

Matrix<Scalar> unit(std::size_t n, std::size_t r, std::size_t c) {
    Matrix<Scalar> m(n, n);
    m(r, c) = q(1);
    return m;
}

Matrix<Scalar> random_matrix(ScalarGen& gen) {
    const auto rows = static_cast<std::size_t>(gen.integer(1, 8));
    const auto cols = static_cast<std::size_t>(gen.integer(1, 8));
    if (gen.coin(0.4)) {
        const auto inner = static_cast<std::size_t>(gen.integer(1, static_cast<long>(std::min(rows, cols))));
        return gen.constant_matrix(rows, inner, 3) * gen.constant_matrix(inner, cols, 3);
    }
    return gen.constant_matrix(rows, cols, 5);
}

std::vector<std::vector<GaussianRational>> constant_rows(const Matrix<Scalar>& m) {
    std::vector<std::vector<GaussianRational>> out(m.rows(), std::vector<GaussianRational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).constant_value();
    return out;
}

}  // namespace

TEST_CASE("rref examples", "[solver]") {
    const auto id = rref(Matrix<Scalar>::identity(3));
    CHECK(id.reduced == Matrix<Scalar>::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.locus.empty());

    const auto par = rref(Matrix<Scalar>{{a, q(0)}, {q(0), q(1)}});
    CHECK(par.reduced == Matrix<Scalar>::identity(2));
    CHECK(par.rank == 2);
    REQUIRE(par.locus.polys().size() == 1);
    CHECK(par.locus.polys()[0] == Poly::parameter());
    CHECK(par.locus.solved_roots() == std::vector<GaussianRational>{GaussianRational(0)});

    const auto dep = rref(Matrix<Scalar>{{q(1), q(2)}, {q(2), q(4)}});
    CHECK(dep.reduced == Matrix<Scalar>{{q(1), q(2)}, {q(0), q(0)}});
    CHECK(dep.rank == 1);
    CHECK(dep.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("rref pivot rule is first column, topmost row", "[solver]") {
    const auto r = rref(Matrix<Scalar>{{q(0), q(0), q(3)}, {q(0), q(2), q(1)}, {q(0), q(4), q(0)}});
    CHECK(r.pivot_cols == std::vector<std::size_t>{1, 2});
    CHECK(r.rank == 2);
}

TEST_CASE("nullspace examples", "[solver]") {
    CHECK(nullspace(Matrix<Scalar>(4, 4)).space.dim() == 4);
    CHECK(nullspace(Matrix<Scalar>::identity(5)).space.dim() == 0);

    const Matrix<Scalar> m{{a, q(1)}, {a, q(1)}};
    const auto ns = nullspace(m);
    REQUIRE(ns.space.dim() == 1);
    const auto& v = ns.space.basis()[0];
    CHECK(is_zero_vector(m.apply(v)));
    // Canonical scaling puts a 1 at the first coordinate.
    CHECK(v == std::vector<Scalar>{q(1), -a});
}

TEST_CASE("membership examples", "[solver]") {
    const auto S = MatrixSubspace<Scalar>::span(2, 2, std::vector<Matrix<Scalar>>{unit(2, 0, 0)});
    CHECK(membership(S, Matrix<Scalar>(2, 2)));
    CHECK(membership(S, unit(2, 0, 0)));
    CHECK(membership(S, q(7, 3) * unit(2, 0, 0)));
    CHECK_FALSE(membership(S, unit(2, 1, 1)));
    CHECK_THROWS_AS(membership(S, Matrix<Scalar>(3, 3)), DimensionError);
}

TEST_CASE("subspace equality is basis equality", "[solver]") {
    const auto S1 = MatrixSubspace<Scalar>::span(
        2, 2, std::vector<Matrix<Scalar>>{unit(2, 0, 0) + unit(2, 1, 1), unit(2, 0, 0) - unit(2, 1, 1)});
    const auto S2 = MatrixSubspace<Scalar>::span(2, 2, std::vector<Matrix<Scalar>>{unit(2, 1, 1), unit(2, 0, 0)});
    CHECK(S1 == S2);
    CHECK(S1.echelon_profile() == std::vector<std::size_t>{0, 3});
    CHECK(MatrixSubspace<Scalar>::full(2, 2).dim() == 4);
    CHECK(S1.reshaped(4, 1).ambient_rows() == 4);
}

TEST_CASE("specialize_dim examples", "[solver]") {
    const Matrix<Scalar> m{{a, q(0)}, {q(0), q(1)}};
    CHECK(specialize_dim(m, GaussianRational(0)) == 1);
    CHECK(specialize_dim(m, GaussianRational(2)) == 0);
    CHECK(specialize_dim(Matrix<Scalar>(3, 4), GaussianRational(5)) == 4);
    CHECK_THROWS_AS(specialize_dim(Matrix<Scalar>{{a.inverse()}}, GaussianRational(0)), DomainError);
}

TEST_CASE("exceptional locus bookkeeping", "[solver]") {
    ExceptionalLocus L;
    const Poly x = Poly::parameter();
    L.add(Poly(3) * x - Poly(6));
    L.add(x - Poly(2));
    L.add(Poly(7));
    L.add(x * x + Poly(1));
    L.add(x * x - Poly(2));
    L.add(x * x * x + x);
    CHECK(L.polys().size() == 5);  // a-2, a, a+i, a-i, a^2-2
    CHECK(L.max_degree() == 2);
    CHECK(L.contains(GaussianRational::i()));
    CHECK(L.contains(GaussianRational(2)));
    CHECK_FALSE(L.contains(GaussianRational(1)));
    const auto roots = L.solved_roots();
    CHECK(roots.size() == 4);
    REQUIRE(L.unsolved().size() == 1);
    CHECK(L.unsolved()[0] == x * x - Poly(2));
    for (const auto& p : L.polys()) CHECK(p.is_monic());
}

TEST_CASE("nullspace vectors are annihilated and rank-nullity holds", "[solver][property]") {
    ScalarGen gen(404);
    for (int trial = 0; trial < 300; ++trial) {
        const Matrix<Scalar> m = random_matrix(gen);
        const auto r = rref(m);
        const auto ns = nullspace(m);
        REQUIRE(r.rank + ns.space.dim() == m.cols());
        for (const auto& v : ns.space.basis()) REQUIRE(is_zero_vector(m.apply(v)));
        REQUIRE(rref(r.reduced).reduced == r.reduced);
    }
}

TEST_CASE("nullspace matches an independent naive elimination", "[solver][property]") {
    ScalarGen gen(606);
    for (int trial = 0; trial < 500; ++trial) {
        const Matrix<Scalar> m = random_matrix(gen);
        const auto expected = nilalg::testing::naive_nullspace(constant_rows(m), m.cols());
        const auto got = nullspace(m).space.basis();
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k)
            for (std::size_t c = 0; c < m.cols(); ++c) REQUIRE(got[k][c].constant_value() == expected[k][c]);
    }
}

TEST_CASE("generic rank agrees with specializations off the locus", "[solver][property]") {
    ScalarGen gen(808);
    for (int trial = 0; trial < 60; ++trial) {
        const auto rows = static_cast<std::size_t>(gen.integer(2, 6));
        const auto cols = static_cast<std::size_t>(gen.integer(2, 6));
        Matrix<Scalar> m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (gen.coin(0.6)) m(r, c) = Scalar(gen.poly(2, 3));
        if (gen.coin(0.5) && rows > 1)
            for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = a * m(0, c) + m(1 % rows, c);
        const auto ns = nullspace(m);
        int tested = 0;
        while (tested < 5) {
            const GaussianRational t(gen.rational(20));
            if (ns.locus.contains(t)) continue;
            REQUIRE(specialize_dim(m, t) == ns.space.dim());
            ++tested;
        }
        // At a locus root the rank may only drop, so the nullity may only grow.
        for (const auto& t : ns.locus.solved_roots()) REQUIRE(specialize_dim(m, t) >= ns.space.dim());
    }
}

TEST_CASE("solver runs over plain Q(i) matrices", "[solver]") {
    const Matrix<GaussianRational> m{{GaussianRational(1), GaussianRational::i()},
                                     {GaussianRational::i(), GaussianRational(-1)}};
    const auto ns = nullspace(m);
    REQUIRE(ns.space.dim() == 1);
    CHECK(ns.space.basis()[0] == std::vector<GaussianRational>{GaussianRational(1), GaussianRational::i()});
}
