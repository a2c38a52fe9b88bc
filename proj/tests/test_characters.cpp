#include <doctest.h>

#include "bimahonian/characters.hpp"
#include "bimahonian/distributions.hpp"
#include "bimahonian/tableaux.hpp"
#include "oracles.hpp"

using namespace bimahonian;

namespace {

Partition conj_partition(const Partition& p) { return oracle::conjugate(p); }

int sign_of_class(const Partition& mu) {
    int s = 1;
    for (int part : mu) {
        if (part % 2 == 0) s = -s;
    }
    return s;
}

// Induced character at class mu: |C_G(g)| / n times the sum of rho^i over C_n-elements of type mu.
oracle::Complex induced_oracle(int n, long long i, const Partition& mu) {
    const long long cent = oracle::factorial(n) / class_size(mu).get_si();
    oracle::Complex sum = 0;
    for (int a = 0; a < n; ++a) {
        const int g = static_cast<int>(std::gcd(a, n));
        const Partition type(g, n / g);
        if (type == mu) sum += oracle::root(n, a * i);
    }
    return sum * static_cast<double>(cent) / static_cast<double>(n);
}

Integer chi(const Partition& lambda, const Partition& mu) { return Integer(static_cast<long>(mn_value(lambda, mu))); }

}  // namespace

TEST_CASE("character values") {
    for (int n = 1; n <= 6; ++n) {
        const Partition triv{n};
        const Partition sign(n, 1);
        for (const auto& mu : partitions_of(n)) {
            CHECK(mn_value(triv, mu) == 1);
            CHECK(mn_value(sign, mu) == sign_of_class(mu));
        }
    }
    CHECK(mn_value({2, 1}, {3}) == -1);
    CHECK(mn_value({2, 1}, {2, 1}) == 0);
    CHECK(mn_value({2, 1}, {1, 1, 1}) == 2);
    CHECK_THROWS_AS(mn_value({2, 1}, {2, 2}), InvalidArgument);
}

TEST_CASE("standard representation is the fixed-point count minus one") {
    for (int n = 2; n <= 6; ++n) {
        const Partition standard{n - 1, 1};
        for (const auto& perm : oracle::permutations(n)) {
            int fixed = 0;
            for (int i = 0; i < n; ++i) fixed += (perm[i] == i + 1);
            CHECK(mn_value(standard, cycle_type(perm)) == fixed - 1);
        }
    }
}

TEST_CASE("property: orthogonality, degrees and sign twist") {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        const Integer order = factorial(n);
        for (const auto& lambda : parts) {
            CHECK(mn_value(lambda, Partition(n, 1)) == oracle::hook_count(lambda));
            for (const auto& mu : parts) CHECK(mn_value(conj_partition(lambda), mu) == sign_of_class(mu) * mn_value(lambda, mu));
            for (const auto& nu : parts) {
                Integer inner = 0;
                for (const auto& mu : parts) inner += class_size(mu) * chi(lambda, mu) * chi(nu, mu);
                CHECK(inner == (lambda == nu ? order : Integer(0)));
            }
        }
        // second orthogonality: sum over lambda of chi(mu)^2 = |centralizer|
        for (const auto& mu : parts) {
            Integer sum = 0;
            for (const auto& lambda : parts) sum += chi(lambda, mu) * chi(lambda, mu);
            CHECK(sum * class_size(mu) == order);
        }
    }
    Budget small;
    small.max_character_n = 4;
    CHECK_THROWS_AS(mn_character({3, 2}, small), BudgetExceeded);
}

TEST_CASE("characters induced from the cyclic subgroup") {
    const ClassFunction i0 = induced_cyclic_character(3, 0);
    CHECK(i0.at({1, 1, 1}) == CycloNum(2));
    CHECK(i0.at({2, 1}) == CycloNum(0));
    CHECK(i0.at({3}) == CycloNum(2));
    const ClassFunction i1 = induced_cyclic_character(3, 1);
    CHECK(i1.at({1, 1, 1}) == CycloNum(2));
    CHECK(i1.at({2, 1}) == CycloNum(0));
    CHECK(i1.at({3}) == CycloNum(-1));
    for (int n = 1; n <= 6; ++n) {
        for (long long i = 0; i < n; ++i) {
            const ClassFunction f = induced_cyclic_character(n, i);
            for (const auto& mu : partitions_of(n)) CHECK(oracle::close(oracle::approx(f.at(mu)), induced_oracle(n, i, mu)));
        }
    }
}

TEST_CASE("intertwining numbers") {
    CHECK(intertwining(mn_character({2, 1}), mn_character({2, 1})) == CycloNum(1));
    CHECK(intertwining(mn_character({3}), mn_character({1, 1, 1})) == CycloNum(0));
    const CycloNum a11 = intertwining(induced_cyclic_character(3, 1), induced_cyclic_character(3, 1));
    CHECK(a11 == CycloNum(1));
    const BiPoly folded = reduce_mod_cyclic(bimahonian_fake(1, 3, GaloisAut::identity(1)), 3, 3);
    CHECK(folded.coeff(1, 1) == a11);
    // Frobenius reciprocity: <Ind rho^i, chi> counts rho^i in the restriction, so the total over lambda of
    // <Ind rho^i, chi^lambda> chi^lambda(1) is n!/n
    for (int n = 2; n <= 5; ++n) {
        for (long long i = 0; i < n; ++i) {
            const ClassFunction ind = induced_cyclic_character(n, i);
            CycloNum total = CycloNum::zero(n);
            for (const auto& lambda : partitions_of(n)) {
                total += embed(intertwining(ind, mn_character(lambda)), n) * CycloNum(oracle::hook_count(lambda)).embed(n);
            }
            CHECK(total == CycloNum(oracle::factorial(n) / n));
        }
    }
}
