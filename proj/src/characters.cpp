#include "bimahonian/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bimahonian {

const CycloNum& ClassFunction::at(const Partition& cycle_type) const {
    auto it = values.find(cycle_type);
    if (it == values.end()) throw InvalidArgument("class function has no value at that cycle type");
    return it->second;
}

Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Partition cycle_type(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n, false);
    Partition out;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int i = start; !seen[i]; i = perm[i] - 1) {
            seen[i] = true;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

Integer class_size(const Partition& mu) {
    const int n = partition_size(mu);
    Integer denom = 1;
    std::map<int, int> mult;
    for (int part : mu) ++mult[part];
    for (const auto& [part, m] : mult) {
        denom *= factorial(m);
        for (int i = 0; i < m; ++i) denom *= part;
    }
    return factorial(n) / denom;
}

namespace {

// Beta-set recursion: removing a rim hook of length r moves one bead from b
// to b - r; the sign counts beads jumped over.
long long mn_beta(const std::set<int>& beta, const Partition& mu, std::size_t pos) {
    if (pos == mu.size()) return 1;
    const int r = mu[pos];
    long long total = 0;
    for (int b : beta) {
        if (b - r < 0 || beta.count(b - r)) continue;
        int between = 0;
        for (int x : beta) {
            if (x > b - r && x < b) ++between;
        }
        std::set<int> next = beta;
        next.erase(b);
        next.insert(b - r);
        const long long sub = mn_beta(next, mu, pos + 1);
        total += between % 2 ? -sub : sub;
    }
    return total;
}

void require_small(int n, const Budget& budget) {
    if (n > budget.max_character_n) {
        throw BudgetExceeded("n=" + std::to_string(n) + " exceeds the character budget " +
                             std::to_string(budget.max_character_n));
    }
}

}  // namespace

long long mn_value(const Partition& lambda, const Partition& mu) {
    if (!is_partition(lambda) || partition_size(lambda) != partition_size(mu)) {
        throw InvalidArgument("mn_value: lambda and mu must be partitions of the same n");
    }
    std::set<int> beta;
    const int len = static_cast<int>(lambda.size());
    for (int i = 0; i < len; ++i) beta.insert(lambda[i] + (len - 1 - i));
    return mn_beta(beta, mu, 0);
}

ClassFunction mn_character(const Partition& lambda, const Budget& budget) {
    const int n = partition_size(lambda);
    require_small(n, budget);
    ClassFunction f;
    f.n = n;
    for (const auto& mu : partitions_of(n)) f.values.emplace(mu, CycloNum(mn_value(lambda, mu)));
    return f;
}

ClassFunction induced_cyclic_character(int n, long long i, const Budget& budget) {
    if (n < 1) throw InvalidArgument("induced_cyclic_character: n must be positive");
    require_small(n, budget);
    // power_of[perm] = a for perm = c^a, c = (1 2 ... n).
    std::map<std::vector<int>, int> power_of;
    for (int a = 0; a < n; ++a) {
        std::vector<int> p(n);
        for (int x = 0; x < n; ++x) p[x] = (x + a) % n + 1;
        power_of.emplace(std::move(p), a);
    }
    ClassFunction f;
    f.n = n;
    for (const auto& mu : partitions_of(n)) {
        // A representative g of cycle type mu.
        std::vector<int> g(n);
        int start = 0;
        for (int part : mu) {
            for (int x = 0; x < part; ++x) g[start + x] = start + (x + 1) % part + 1;
            start += part;
        }
        // sum over x in S_n of rho^i(x g x^-1) when x g x^-1 lies in C_n.
        std::vector<long long> buckets(n, 0);
        std::vector<int> x(n), conj(n);
        std::iota(x.begin(), x.end(), 1);
        do {
            for (int pos = 0; pos < n; ++pos) conj[x[pos] - 1] = x[g[pos] - 1];
            auto it = power_of.find(conj);
            if (it != power_of.end()) ++buckets[mod_ll(it->second * i, n)];
        } while (std::next_permutation(x.begin(), x.end()));
        CycloNum value = CycloNum::zero(n);
        for (int e = 0; e < n; ++e) {
            if (buckets[e]) value += CycloNum(Rational(static_cast<long>(buckets[e])), n) * CycloNum::root_of_unity(n, e);
        }
        f.values.emplace(mu, value * CycloNum(Rational(1, n), n));
    }
    return f;
}

CycloNum intertwining(const ClassFunction& f, const ClassFunction& g) {
    if (f.n != g.n) throw InvalidArgument("intertwining: class functions on different symmetric groups");
    CycloNum total;
    for (const auto& [mu, fv] : f.values) {
        const CycloNum& gv = g.at(mu);
        auto [a, b] = lift_common(fv, gv.conj());
        auto [acc, term] = lift_common(total, a * b * CycloNum(Rational(class_size(mu)), a.conductor()));
        total = acc + term;
    }
    const CycloNum scale(Rational(1) / Rational(factorial(f.n)), total.conductor());
    return total * scale;
}

}  // namespace bimahonian
