#include "brauer/errors.hpp"
#include "brauer/linalg.hpp"

#include <doctest.h>

using namespace brauer;

namespace {

Matrix from_rows(std::vector<std::vector<Elem>> rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_CASE("prime field arithmetic")
{
    PrimeField F(7);
    CHECK(F.add(5, 4) == 2);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.neg(0) == 0);
    CHECK(F.reduce(-1) == 6);
    for (Elem a = 1; a < 7; ++a)
        CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS_AS(F.inv(0), std::domain_error);
}

TEST_CASE("composite moduli are rejected")
{
    CHECK(is_prime(2));
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
}

TEST_CASE("rank and row reduction")
{
    PrimeField F(2);
    Matrix m = from_rows({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(rank(F, m) == 2);  // rows sum to zero mod 2
    CHECK_FALSE(is_invertible(F, m));

    PrimeField G(3);
    CHECK(rank(G, m) == 3);
    CHECK(is_invertible(G, m));

    Echelon e = rref(G, m);
    CHECK(e.reduced == Matrix::identity(3));
}

TEST_CASE("null space basis is a kernel with unit free coordinates")
{
    PrimeField F(5);
    Matrix m = from_rows({{1, 2, 3, 4}, {2, 4, 1, 3}});
    NullSpace ns = null_space(F, m);
    CHECK(ns.dim() == 4 - rank(F, m));
    CHECK(multiply(F, m, ns.basis).is_zero());
    for (std::size_t k = 0; k < ns.dim(); ++k)
        for (std::size_t l = 0; l < ns.dim(); ++l)
            CHECK(ns.basis(ns.free_cols[l], k) == (k == l ? 1u : 0u));
}

TEST_CASE("column space and complement span everything")
{
    PrimeField F(3);
    Matrix m = from_rows({{1, 2}, {0, 0}, {2, 1}});
    Matrix basis = column_space(F, m);
    CHECK(basis.cols() == 1);
    auto comp = complement_positions(F, m);
    CHECK(comp.size() == 2);
    Matrix full = basis;
    for (auto r : comp) {
        Matrix unit(3, 1);
        unit(r, 0) = 1;
        full = hconcat(full, unit);
    }
    CHECK(is_invertible(F, full));
}

TEST_CASE("matrix helpers")
{
    PrimeField F(7);
    Matrix a = from_rows({{1, 2}, {3, 4}});
    CHECK(subtract(F, add(F, a, a), a) == a);
    CHECK(scale(F, 2, a) == add(F, a, a));
    CHECK(transpose(transpose(a)) == a);
    CHECK(multiply(F, a, Matrix::identity(2)) == a);
    CHECK(hconcat(a, a).cols() == 4);
    CHECK(a.column(1) == from_rows({{2}, {4}}));
}
