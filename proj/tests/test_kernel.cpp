#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lefschetz/matrix.hpp"
#include "lefschetz/number_field.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/rational.hpp"

#include "fixtures.hpp"
#include "oracle.hpp"

using lefschetz::kernel::Matrix;
using lefschetz::kernel::NumberField;
using lefschetz::kernel::NumberFieldElement;
using lefschetz::kernel::Rational;

namespace {

Matrix<Rational> from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
    Matrix<Rational> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    return m;
}

}  // namespace

TEST_CASE("Rational canonical form and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(-4, 2).to_string() == "-2");
    CHECK(Rational::from_string("6/8") == Rational(3, 4));
    CHECK(Rational::from_string("-7") == Rational(-7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(5).pow(3) == Rational(125));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("rank: empty, identity, Perazzo Hessian at a point") {
    CHECK(lefschetz::kernel::rank(Matrix<Rational>(0, 0)) == 0);
    CHECK(lefschetz::kernel::rank(Matrix<Rational>::identity(3)) == 3);

    // Hessian of the Perazzo cubic evaluated at (1,1,1,1,1) has rank 4:
    // consistent with its identically vanishing determinant
    const auto f = fixtures::perazzo();
    const auto h = lefschetz::poly::hessian_matrix(f);
    const std::vector<Rational> ones(5, Rational(1));
    Matrix<Rational> hv(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) hv(i, j) = h(i, j).evaluate(ones);
    CHECK(lefschetz::kernel::rank(hv) == 4);
    // re-derived by the independent oracle
    CHECK(oracle::hessian_rank_at(fixtures::perazzo_mini(), fixtures::mini_vec({1, 1, 1, 1, 1})) == 4);
}

TEST_CASE("kernel_basis: identity, zero matrix, Perazzo catalecticant") {
    CHECK(lefschetz::kernel::kernel_basis(Matrix<Rational>::identity(2)).empty());

    const Matrix<Rational> z(2, 3);
    const auto kb = lefschetz::kernel::kernel_basis(z);
    CHECK(kb.size() == 3);

    // partials of the Perazzo cubic are linearly independent: empty kernel
    const auto f = fixtures::perazzo();
    const auto grad = lefschetz::poly::gradient(f);
    const auto targets = lefschetz::poly::monomials_of_degree(5, 2);
    Matrix<Rational> cat(targets.size(), 5);
    for (std::size_t c = 0; c < 5; ++c)
        for (std::size_t r = 0; r < targets.size(); ++r)
            cat(r, c) = grad[c].coefficient(targets[r]);
    CHECK(lefschetz::kernel::rank(cat) == 5);
    CHECK(lefschetz::kernel::kernel_basis(cat).empty());
    CHECK(oracle::gradient_rank(fixtures::perazzo_mini(), 3) == 5);
}

TEST_CASE("determinants: base cases and the vanishing Perazzo Hessian") {
    Matrix<Rational> one_by_one(1, 1);
    one_by_one(0, 0) = Rational(7, 3);
    CHECK(lefschetz::kernel::det_bareiss(one_by_one) == Rational(7, 3));
    CHECK(lefschetz::kernel::det_cofactor(one_by_one) == Rational(7, 3));

    const auto diag = from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
    CHECK(lefschetz::kernel::det_bareiss(diag) == Rational(30));

    // symbolic diagonal: det diag(a, b, c) = abc over the polynomial ring
    using lefschetz::poly::Polynomial;
    Matrix<Polynomial> sym_diag(3, 3, Polynomial(3));
    for (std::size_t i = 0; i < 3; ++i) sym_diag(i, i) = Polynomial::variable(3, i);
    CHECK(lefschetz::kernel::det_cofactor(sym_diag) ==
          Polynomial::variable(3, 0) * Polynomial::variable(3, 1) * Polynomial::variable(3, 2));

    const auto h = lefschetz::poly::hessian_matrix(fixtures::perazzo());
    CHECK(lefschetz::kernel::det_cofactor(h).is_zero());
}

TEST_CASE("property: rank-nullity and exact kernel vectors") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const auto m = random_matrix(rng, r, c, 3);
        const auto kb = lefschetz::kernel::kernel_basis(m);
        CHECK(lefschetz::kernel::rank(m) + kb.size() == c);
        for (const auto& v : kb) {
            for (std::size_t i = 0; i < r; ++i) {
                Rational acc(0);
                for (std::size_t j = 0; j < c; ++j) acc += m(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("property: Bareiss agrees with cofactor expansion up to 4x4") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto m = random_matrix(rng, n, n, 3);
        CHECK(lefschetz::kernel::det_bareiss(m) == lefschetz::kernel::det_cofactor(m));
    }
}

TEST_CASE("solve returns exact solutions and detects singularity") {
    const auto a = from_rows({{2, 1}, {1, 1}});
    Matrix<Rational> b(2, 1);
    b(0, 0) = Rational(3);
    b(1, 0) = Rational(2);
    const auto x = lefschetz::kernel::solve(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)(0, 0) == Rational(1));
    CHECK((*x)(1, 0) == Rational(1));

    const auto sing = from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(lefschetz::kernel::solve(sing, b).has_value());
}

TEST_CASE("number fields: construction and validation") {
    // t^2 + 1
    auto qi = NumberField::create({Rational(1), Rational(0)});
    CHECK(qi->degree() == 2);
    // t^3 - 2
    auto q2 = NumberField::create({Rational(-2), Rational(0), Rational(0)});
    CHECK(q2->degree() == 3);
    // t^2 - 1 = (t-1)(t+1) is rejected
    CHECK_THROWS_AS(NumberField::create({Rational(-1), Rational(0)}), std::invalid_argument);
    // t^3 - t = t(t-1)(t+1)
    CHECK_THROWS_AS(NumberField::create({Rational(0), Rational(-1), Rational(0)}),
                    std::invalid_argument);
}

TEST_CASE("number fields: i^2 = -1 and cube root arithmetic") {
    auto qi = NumberField::create({Rational(1), Rational(0)});
    const auto i = qi->generator();
    CHECK(i * i == qi->from_rational(Rational(-1)));
    CHECK((i * i * i * i) == qi->one());

    auto q2 = NumberField::create({Rational(-2), Rational(0), Rational(0)});
    const auto c = q2->generator();  // cube root of 2
    CHECK(c * c * c == q2->from_rational(Rational(2)));
    CHECK(c.inverse() * c == q2->one());
    // 1/c = c^2 / 2
    CHECK(c.inverse() == q2->element({Rational(0), Rational(0), Rational(1, 2)}));
}

TEST_CASE("property: number field (a*b)*a^-1 = b") {
    // t^3 + t + 1 is irreducible over Q (no rational root)
    auto f2 = NumberField::create({Rational(1), Rational(1), Rational(0)});
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> ca(3), cb(3);
        bool za = true, zb = true;
        for (int i = 0; i < 3; ++i) {
            long va = static_cast<long>(rng() % 7) - 3;
            long vb = static_cast<long>(rng() % 7) - 3;
            ca[i] = Rational(va);
            cb[i] = Rational(vb);
            za = za && va == 0;
            zb = zb && vb == 0;
        }
        if (za || zb) continue;
        const auto a = f2->element(ca), b = f2->element(cb);
        CHECK((a * b) * a.inverse() == b);
    }
}

TEST_CASE("rational_roots finds all roots with multiplicity-free listing") {
    // (t - 1/2)(t + 3) * 2 = 2t^2 + 5t - 3
    const auto roots = lefschetz::kernel::rational_roots(
        {Rational(-3), Rational(5), Rational(2)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-3));
    CHECK(roots[1] == Rational(1, 2));

    // t^3 - 2 has no rational root
    CHECK(lefschetz::kernel::rational_roots({Rational(-2), Rational(0), Rational(0), Rational(1)})
              .empty());

    // t^2 * (t - 4): roots 0 and 4
    const auto r2 = lefschetz::kernel::rational_roots(
        {Rational(0), Rational(0), Rational(-4), Rational(1)});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == Rational(0));
    CHECK(r2[1] == Rational(4));
}
