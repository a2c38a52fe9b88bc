#include <doctest.h>

#include <set>

#include "bimahonian/wreath.hpp"
#include "oracles.hpp"

using namespace bimahonian;

namespace {

std::vector<std::vector<oracle::Complex>> complex_matrix(const WreathElem& w) {
    const auto m = w.matrix();
    std::vector<std::vector<oracle::Complex>> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (const auto& x : m[i]) out[i].push_back(oracle::approx(x));
    }
    return out;
}

std::vector<std::vector<CycloNum>> matmul(const std::vector<std::vector<CycloNum>>& a,
                                          const std::vector<std::vector<CycloNum>>& b) {
    const std::size_t n = a.size();
    const int m = a.empty() ? 1 : a[0][0].conductor();
    std::vector<std::vector<CycloNum>> out(n, std::vector<CycloNum>(n, CycloNum::zero(m)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

}  // namespace

TEST_CASE("group operations") {
    const WreathElem x = parse_window(3, "1:2,0:3,2:1");
    CHECK(x * WreathElem::identity(3, 3) == x);
    const WreathElem y = parse_window(2, "-1,2");
    CHECK((y * y).is_identity());
    const WreathElem z = parse_window(3, "1:1");
    CHECK(z.inverse() == parse_window(3, "2:1"));
    CHECK(group_arith(x, x, GroupOp::inv) == x.inverse());
    CHECK(group_arith(x, x, GroupOp::mul) == x * x);
    CHECK_THROWS_AS(z * x, InvalidArgument);
}

TEST_CASE("Galois action on elements") {
    const WreathElem w = parse_window(3, "1:1,2:2");
    CHECK(galois_on_element(GaloisAut(3, 1), w) == w);
    CHECK(galois_on_element(GaloisAut(3, 2), w).colors() == std::vector<int>{2, 1});
    const WreathElem b = parse_window(2, "-2,1");
    CHECK(galois_on_element(GaloisAut(2, 1), b) == b);
    CHECK(galois_on_element(GaloisAut(6, 5), b) == b);
    CHECK_THROWS_AS(galois_on_element(GaloisAut(4, 1), w), ConductorMismatch);
}

TEST_CASE("word statistics") {
    const WordStatistics id = word_statistics(WreathElem::identity(1, 3));
    CHECK(id.maj == 0);
    CHECK(id.inv == 0);
    CHECK(id.fmaj == 0);

    const WordStatistics b = word_statistics(parse_window(2, "2,-1"));
    CHECK(b.maj == 1);
    CHECK(b.r == std::vector<int>{1, 1});
    CHECK(b.fmaj == 3);

    const WordStatistics c = word_statistics(parse_window(2, "-1"));
    CHECK(c.maj == 0);
    CHECK(c.r == std::vector<int>{0, 1});
    CHECK(c.fmaj == 1);
}

TEST_CASE("fmaj agrees with an independent word enumeration") {
    for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 2}, {4, 2}, {5, 1}}) {
        std::multiset<int> lib, ref;
        for (const auto& w : enumerate_group(d, n)) lib.insert(word_statistics(w).fmaj);
        for (const auto& w : oracle::all_words(d, n)) ref.insert(oracle::fmaj(d, w));
        CHECK(lib == ref);
    }
}

TEST_CASE("group orders") {
    CHECK(group_order(1, 3) == 6);
    CHECK(group_order(2, 2) == 8);
    CHECK(group_order(3, 2) == 18);
    CHECK(enumerate_group(3, 2).size() == 18);
    Budget tiny;
    tiny.max_group_order = 10;
    CHECK_THROWS_AS(enumerate_group(2, 3, tiny), BudgetExceeded);
}

TEST_CASE("characteristic polynomial factors against direct determinants") {
    const WreathElem id = WreathElem::identity(3, 2);
    CHECK(char_poly_factors(id) == std::vector<CycleFactor>{{1, 0}, {1, 0}});
    const BiPoly one = BiPoly::constant(CycloNum(1));
    const BiPoly t = BiPoly::var(Var::t);
    CHECK(det_one_minus(id, Var::t) == (one - t) * (one - t));

    const WreathElem c3 = parse_window(1, "2,3,1");
    CHECK(char_poly_factors(c3) == std::vector<CycleFactor>{{3, 0}});
    CHECK(det_one_minus(c3, Var::t) == one - t * t * t);

    const WreathElem b = parse_window(2, "-2,1");
    CHECK(char_poly_factors(b) == std::vector<CycleFactor>{{2, 1}});
    CHECK(det_one_minus(b, Var::t) == one + t * t);

    for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 3}, {4, 2}}) {
        for (const auto& w : enumerate_group(d, n)) {
            const auto ref = oracle::det_one_minus(complex_matrix(w));
            const BiPoly lib = det_one_minus(w, Var::t);
            for (int k = 0; k <= n; ++k) CHECK(oracle::close(oracle::approx(lib.coeff(k, 0)), ref[k]));
        }
    }
}

TEST_CASE("degrees and reflections") {
    CHECK(degrees(1, 3).degrees == std::vector<int>{1, 2, 3});
    CHECK(degrees(1, 3).n_star == 3);
    CHECK(degrees(2, 2).degrees == std::vector<int>{2, 4});
    CHECK(degrees(2, 2).n_star == 4);
    CHECK(degrees(3, 1).degrees == std::vector<int>{3});
    CHECK(degrees(3, 1).n_star == 2);
    CHECK(reflections(1, 3).size() == 3);
    CHECK(reflections(2, 2).size() == 4);
    CHECK(reflections(3, 1).size() == 2);
    // product of degrees is the group order; reflections fix a hyperplane
    for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 5}, {2, 3}, {3, 3}, {4, 2}, {6, 2}}) {
        const DegreeData deg = degrees(d, n);
        unsigned long long prod = 1;
        for (int x : deg.degrees) prod *= x;
        CHECK(prod == group_order(d, n));
        const auto refl = reflections(d, n);
        CHECK(static_cast<int>(refl.size()) == deg.n_star);
        for (const auto& r : refl) {
            const auto factors = char_poly_factors(r);
            int fixed = 0;
            for (const auto& f : factors) fixed += (f.colorsum == 0);
            CHECK(fixed == n - 1);
        }
    }
}

TEST_CASE("window parsing") {
    CHECK(parse_window(2, "2,-1") == parse_window(2, "0:2,1:1"));
    CHECK(format_window(parse_window(3, "1:2,0:1")) == "1:2,0:1");
    CHECK_THROWS_AS(parse_window(1, "1,1"), InvalidArgument);
    CHECK_THROWS_AS(parse_window(3, "2,-1"), InvalidArgument);
    CHECK_THROWS_AS(parse_window(3, "3:1"), InvalidArgument);
    CHECK_THROWS_AS(parse_window(1, "-1"), InvalidArgument);
    CHECK_THROWS_AS(parse_window(2, ""), InvalidArgument);
}

TEST_CASE("property: group axioms and the matrix representation") {
    for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 2}}) {
        const auto g = enumerate_group(d, n);
        const GroupIndex index(d, n);
        std::set<WreathElem> distinct(g.begin(), g.end());
        CHECK(distinct.size() == g.size());
        for (std::size_t a = 0; a < g.size(); a += 3) {
            CHECK((g[a] * g[a].inverse()).is_identity());
            CHECK(g[a].pow(g[a].order()).is_identity());
            CHECK(index.at(index.index_of(g[a])) == g[a]);
            for (std::size_t b = 0; b < g.size(); b += 5) {
                CHECK((g[a] * g[b]).matrix() == matmul(g[a].matrix(), g[b].matrix()));
                CHECK((g[a] * g[b]).inverse() == g[b].inverse() * g[a].inverse());
            }
        }
    }
}
