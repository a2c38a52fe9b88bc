#include <doctest.h>

#include "bimahonian/poly.hpp"
#include "oracles.hpp"

using namespace bimahonian;

namespace {

BiPoly poly(const oracle::Grid& g) { return oracle::from_grid(g); }

const BiPoly t = BiPoly::var(Var::t);
const BiPoly q = BiPoly::var(Var::q);
const BiPoly one = BiPoly::constant(CycloNum(1));

BiPoly sym3() { return poly({{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}, {{3, 3}, 1}}); }

}  // namespace

TEST_CASE("ring operations") {
    CHECK((one + t * q) * (one - t * q) == one - t * t * q * q);
    CHECK((one + q) * (one + q + q * q) == poly({{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 2}, {{0, 3}, 1}}));
    const BiPoly p = sym3();
    CHECK(p + BiPoly() == p);
    CHECK(poly_arith(p, p, PolyOp::sub).is_zero());
}

TEST_CASE("exact division") {
    CHECK(exact_div(one - q * q * q * q, one - q) == one + q + q * q + q * q * q);
    const BiPoly lhs = qpochhammer(4);
    const BiPoly den = qpochhammer(0) * (one - q * q) * (one - q * q);
    const BiPoly expected = (one - q) * (one - q * q * q) * (one + q * q);
    CHECK(exact_div(lhs, den) == expected);
    CHECK_THROWS_AS(exact_div(one + q, one - q), InexactDivision);
    try {
        exact_div(one + q, one - q);
    } catch (const InexactDivision& e) {
        CHECK_FALSE(e.remainder().is_zero());
    }
}

TEST_CASE("q-Pochhammer symbols") {
    CHECK(qpochhammer(0) == one);
    CHECK(qpochhammer(2) == poly({{{0, 0}, 1}, {{0, 1}, -1}, {{0, 2}, -1}, {{0, 3}, 1}}));
    CHECK(qpochhammer(1, Var::t) == one - t);
    for (int n = 0; n <= 7; ++n) {
        oracle::IPoly expect{1};
        for (int k = 1; k <= n; ++k) {
            oracle::IPoly f(k + 1, 0);
            f[0] = 1;
            f[k] = -1;
            expect = oracle::mul(expect, f);
        }
        oracle::Grid g;
        for (std::size_t j = 0; j < expect.size(); ++j) g[{0, static_cast<int>(j)}] = expect[j];
        CHECK(qpochhammer(n) == poly(g));
    }
}

TEST_CASE("evaluation at roots of unity") {
    const CycloNum z3 = CycloNum::root_of_unity(3, 1);
    CHECK(eval_at_roots(one + t * q, z3, z3 * z3) == CycloNum(2));
    // 1 + w^2 + 1 + 1 + w + 1
    CHECK(eval_at_roots(sym3(), z3, z3) == CycloNum(3));
    CHECK(eval_at_roots(sym3(), CycloNum(1), CycloNum(1)) == CycloNum(6));
}

TEST_CASE("reduction modulo t^k - 1 and q^l - 1") {
    CHECK(reduce_mod_cyclic(t * t * t * q * q * q, 3, 3) == one);
    CHECK(reduce_mod_cyclic(sym3(), 3, 3) ==
          poly({{{0, 0}, 2}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}}));
    CHECK(reduce_mod_cyclic(BiPoly::constant(CycloNum(5)), 4, 7) == BiPoly::constant(CycloNum(5)));
}

TEST_CASE("palindromicity") {
    CHECK(is_palindromic(one + t * q, 1));
    CHECK_FALSE(is_palindromic(one + t * t * q + t * q * q, 3));
    CHECK(is_palindromic(one + t * q + t * t * q * q, 2));
}

TEST_CASE("truncated series") {
    const TruncSeries geo = series_reciprocal(TruncSeries::from_poly(one - q, 0, 3, 0));
    CHECK(geo.to_poly() == one + q + q * q + q * q * q);
    TruncSeries a(2, 2, 2);
    a.add_term({0, 0, 0}, CycloNum(1));
    a.add_term({1, 1, 1}, CycloNum(-1));
    const TruncSeries r = series_reciprocal(a);
    CHECK(r.coeff(0, 0, 0) == CycloNum(1));
    CHECK(r.coeff(1, 1, 1) == CycloNum(1));
    CHECK(r.coeff(2, 2, 2) == CycloNum(1));
    CHECK(r.terms().size() == 3);
    const TruncSeries b = TruncSeries::from_poly(one - q, 0, 3, 0);
    CHECK(series_mul(b, series_reciprocal(b)).to_poly() == one);
    CHECK_THROWS(series_reciprocal(TruncSeries::from_poly(q, 0, 3, 0)));
}

TEST_CASE("property: evaluation is a ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 4);
    auto random_poly = [&] {
        oracle::Grid g;
        for (int k = 0; k < 5; ++k) g[{deg(rng), deg(rng)}] += coeff(rng);
        return poly(g);
    };
    for (int trial = 0; trial < 30; ++trial) {
        const BiPoly a = random_poly(), b = random_poly();
        for (int m : {2, 3, 5, 6}) {
            const CycloNum x = CycloNum::root_of_unity(m, trial), y = CycloNum::root_of_unity(m, 2 * trial + 1);
            CHECK(eval_at_roots(a * b, x, y) == eval_at_roots(a, x, y) * eval_at_roots(b, x, y));
            CHECK(eval_at_roots(a + b, x, y) == eval_at_roots(a, x, y) + eval_at_roots(b, x, y));
        }
        CHECK((a * b).swap_vars() == a.swap_vars() * b.swap_vars());
        if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
        // reduction commutes with evaluation at k-th and l-th roots
        const CycloNum x = CycloNum::root_of_unity(6, 1);
        CHECK(eval_at_roots(reduce_mod_cyclic(a, 3, 2), x * x, x.pow(3)) == eval_at_roots(a, x * x, x.pow(3)));
    }
}
