#include "bimahonian/distributions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "bimahonian/tableaux.hpp"
#include "bimahonian/wreath.hpp"

namespace bimahonian {

const char* method_name(Method m) {
    switch (m) {
        case Method::fake_degree: return "fake";
        case Method::fmaj_sum: return "fmaj";
        case Method::molien: return "molien";
        case Method::wright_recurrence: return "wright";
    }
    return "?";
}

Method parse_method(const std::string& name) {
    if (name == "fake" || name == "fake_degree") return Method::fake_degree;
    if (name == "fmaj" || name == "fmaj_sum") return Method::fmaj_sum;
    if (name == "molien") return Method::molien;
    if (name == "wright" || name == "wright_recurrence") return Method::wright_recurrence;
    throw InvalidArgument("unknown method '" + name + "'");
}

namespace {

// The exponent of sigma acting on Q(zeta_d).
GaloisAut restrict_to(const GaloisAut& sigma, int d) {
    if (sigma.conductor() % d != 0) {
        throw ConductorMismatch("sigma has conductor " + std::to_string(sigma.conductor()) +
                                ", which is not divisible by d=" + std::to_string(d));
    }
    return GaloisAut(d, sigma.s() % d);
}

void require_group(int d, int n) {
    if (d < 1 || n < 1) throw InvalidArgument("need d >= 1 and n >= 1");
}

// 1 / (1 - c x^e) truncated to the bounds.
TruncSeries geometric(const CycloNum& c, TruncSeries::Exponent e, int dt, int dq, int du) {
    if (e == TruncSeries::Exponent{0, 0, 0}) throw InvalidArgument("geometric: constant ratio");
    TruncSeries s(dt, dq, du, c.conductor());
    CycloNum power = CycloNum::one(c.conductor());
    TruncSeries::Exponent cur{0, 0, 0};
    while (cur[0] <= dt && cur[1] <= dq && cur[2] <= du) {
        s.add_term(cur, power);
        cur = {cur[0] + e[0], cur[1] + e[1], cur[2] + e[2]};
        power *= c;
    }
    return s;
}

}  // namespace

BiPoly mahonian(int d, int n) {
    require_group(d, n);
    BiPoly w = BiPoly::constant(CycloNum(1));
    for (int deg : degrees(d, n).degrees) w = w * q_integer(deg, Var::q);
    return w;
}

BiPoly bimahonian_fake(int d, int n, const GaloisAut& sigma, const Budget& budget) {
    require_group(d, n);
    if (n > budget.max_cells) {
        throw BudgetExceeded("n=" + std::to_string(n) + " exceeds the cell budget " + std::to_string(budget.max_cells));
    }
    const GaloisAut s = restrict_to(sigma, d);
    const GaloisAut bar = GaloisAut::conjugation(d);
    std::map<MultiPartition, BiPoly> cache;
    auto fake = [&](const MultiPartition& shape) -> const BiPoly& {
        auto it = cache.find(shape);
        if (it == cache.end()) it = cache.emplace(shape, fake_degree(shape, budget)).first;
        return it->second;
    };
    BiPoly total;
    for (const auto& lambda : multipartitions_of(d, n)) {
        const BiPoly ft = fake(galois_on_shape(s, lambda)).swap_vars();
        const BiPoly& fq = fake(galois_on_shape(bar, lambda));
        total += ft * fq;
    }
    return total;
}

BiPoly bimahonian_fmaj(int d, int n, const GaloisAut& sigma, const Budget& budget) {
    require_group(d, n);
    const GaloisAut s = restrict_to(sigma, d);
    std::map<std::pair<int, int>, long long> counts;
    for_each_element(d, n, budget, [&](const WreathElem& w) {
        const int fq = word_statistics(w).fmaj;
        const int ft = word_statistics(galois_on_element(s, w.inverse())).fmaj;
        ++counts[{ft, fq}];
    });
    BiPoly out;
    for (const auto& [e, c] : counts) out.add_term(e.first, e.second, CycloNum(c));
    return out;
}

BiPoly bimahonian_molien(int d, int n, const GaloisAut& sigma, const Budget& budget, const MolienOptions& options) {
    require_group(d, n);
    const GaloisAut s = restrict_to(sigma, d);
    const DegreeData deg = degrees(d, n);
    // Expand past N* so that vanishing of the tail is actually checked.
    const int bound = deg.n_star + deg.degrees.back();

    BiPoly numer_t = BiPoly::constant(CycloNum(1));
    for (int di : deg.degrees) {
        BiPoly f = BiPoly::constant(CycloNum(1));
        f.add_term(di, 0, CycloNum(-1));
        numer_t = numer_t * f;
    }
    const BiPoly numer_q = numer_t.swap_vars();

    // prod_i (1 - x^{d_i}) / det(1 - x g) as a one-variable series in x.
    auto factor_series = [&](const std::vector<CycleFactor>& factors, Var v) {
        const bool in_t = v == Var::t;
        TruncSeries acc = TruncSeries::from_poly(in_t ? numer_t : numer_q, bound, bound, 0);
        for (const auto& f : factors) {
            const CycloNum ratio = CycloNum::root_of_unity(d, f.colorsum);
            TruncSeries::Exponent e{in_t ? f.length : 0, in_t ? 0 : f.length, 0};
            acc = series_mul(acc, geometric(ratio, e, bound, bound, 0));
        }
        return acc;
    };

    auto sorted_factors = [](const WreathElem& w) {
        auto f = char_poly_factors(w);
        std::sort(f.begin(), f.end());
        return f;
    };

    std::map<std::pair<std::vector<CycleFactor>, std::vector<CycleFactor>>, long long> classes;
    TruncSeries sum(bound, bound, 0, d);
    unsigned long long order = 0;
    for_each_element(d, n, budget, [&](const WreathElem& w) {
        ++order;
        auto ft = sorted_factors(w);
        auto fq = sorted_factors(galois_on_element(s, w));
        if (options.aggregate_cycle_types) {
            ++classes[{std::move(ft), std::move(fq)}];
        } else {
            sum = series_add(sum, series_mul(factor_series(ft, Var::t), factor_series(fq, Var::q)));
        }
    });
    for (const auto& [key, count] : classes) {
        TruncSeries term = series_mul(factor_series(key.first, Var::t), factor_series(key.second, Var::q));
        sum = series_add(sum, series_mul(term, TruncSeries::from_poly(BiPoly::constant(CycloNum(count)), bound, bound, 0)));
    }

    const CycloNum inv_order = CycloNum(Rational(1) / Rational(static_cast<unsigned long>(order)), sum.conductor());
    BiPoly result;
    for (const auto& [e, c] : sum.terms()) {
        const CycloNum v = c * inv_order;
        if (e[0] > deg.n_star || e[1] > deg.n_star) {
            throw VerificationFailure("Molien sum has a nonzero term beyond degree N* at t^" + std::to_string(e[0]) +
                                      " q^" + std::to_string(e[1]));
        }
        if (!v.is_integer()) {
            throw VerificationFailure("Molien sum coefficient at t^" + std::to_string(e[0]) + " q^" +
                                      std::to_string(e[1]) + " is not an integer: " + v.to_string());
        }
        result.add_term(e[0], e[1], CycloNum(v.rational_value()));
    }
    return result;
}

BiPoly wright_recurrence(int n) {
    if (n < 0) throw InvalidArgument("wright_recurrence: n must be nonnegative");
    std::vector<BiPoly> table{BiPoly::constant(CycloNum(1))};
    for (int k = 1; k <= n; ++k) {
        const BiPoly top = qpochhammer(k, Var::t) * qpochhammer(k, Var::q);
        BiPoly acc;
        for (int m = 1; m <= k; ++m) {
            BiPoly denom = qpochhammer(k - m, Var::t) * qpochhammer(k - m, Var::q);
            BiPoly one_minus_t = BiPoly::constant(CycloNum(1));
            one_minus_t.add_term(m, 0, CycloNum(-1));
            denom = denom * one_minus_t * one_minus_t.swap_vars();
            acc += exact_div(top * table[k - m], denom);
        }
        BiPoly next = acc.scaled(CycloNum(Rational(1, k)));
        if (!next.is_integral()) throw VerificationFailure("wright_recurrence: non-integral coefficient at n=" + std::to_string(k));
        table.push_back(std::move(next));
    }
    return table[n];
}

BiPoly bimahonian(const DistributionRequest& req, const Budget& budget) {
    switch (req.method) {
        case Method::fake_degree: return bimahonian_fake(req.d, req.n, req.sigma, budget);
        case Method::fmaj_sum: return bimahonian_fmaj(req.d, req.n, req.sigma, budget);
        case Method::molien: return bimahonian_molien(req.d, req.n, req.sigma, budget);
        case Method::wright_recurrence:
            if (req.d != 1) throw InvalidArgument("the recurrence method only applies to d = 1");
            return wright_recurrence(req.n);
    }
    throw InvalidArgument("unknown method");
}

const BiPoly& type_a_bimahonian(int n) {
    static std::mutex mu;
    static std::map<int, BiPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    BiPoly p = n == 0 ? BiPoly::constant(CycloNum(1)) : bimahonian_fake(1, n, GaloisAut::identity(1));
    return cache.emplace(n, std::move(p)).first->second;
}

BiPoly cyclic_closed_form(int d, long long s) {
    if (d < 1) throw InvalidArgument("cyclic_closed_form: d must be positive");
    BiPoly out;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (mod_ll(a + s * b, d) == 0) out.add_term(a, b, CycloNum(1));
        }
    }
    return out;
}

GordonSides gordon_specialize(int n, int ell, const CycloNum& omega) {
    if (n < 0 || ell < 1) throw InvalidArgument("gordon_specialize: need n >= 0, ell >= 1");
    const auto order = mult_order(omega);
    if (!order || *order != ell) {
        throw InvalidArgument("gordon_specialize: omega does not have multiplicative order " + std::to_string(ell));
    }
    GordonSides g;
    g.n = n;
    g.ell = ell;
    g.m = n / ell;
    g.r = n % ell;
    g.lhs = type_a_bimahonian(n).substitute_t(omega);
    BiPoly denom = qpochhammer(g.r, Var::q);
    BiPoly one_minus = BiPoly::constant(CycloNum(1));
    one_minus.add_term(0, ell, CycloNum(-1));
    for (int i = 0; i < g.m; ++i) denom = denom * one_minus;
    g.rhs = exact_div(qpochhammer(n, Var::q), denom) * type_a_bimahonian(g.r).substitute_t(omega);
    g.equal = g.lhs == g.rhs;
    return g;
}

GordonEvaluation gordon_evaluate(int n, const CycloNum& omega, const CycloNum& omega_prime) {
    const auto o1 = mult_order(omega);
    const auto o2 = mult_order(omega_prime);
    if (!o1 || !o2) throw InvalidArgument("gordon_evaluate: arguments must be roots of unity");
    GordonEvaluation ev;
    ev.value = eval_at_roots(type_a_bimahonian(n), omega, omega_prime);
    ev.rule = "none";
    if (*o1 != *o2 && *o1 <= n && *o2 <= n) {
        ev.rule = "unequal-orders";
        ev.predicted = CycloNum(0);
    } else if (*o1 == *o2) {
        const int ell = *o1;
        const int m = n / ell;
        const int r = n % ell;
        Integer scale = 1;
        for (int i = 0; i < m; ++i) scale *= ell;
        for (int i = 2; i <= m; ++i) scale *= i;
        const CycloNum rest = eval_at_roots(type_a_bimahonian(r), omega, omega_prime);
        ev.rule = "equal-orders";
        ev.predicted = CycloNum(Rational(scale), rest.conductor()) * rest;
    }
    ev.holds = !ev.predicted || *ev.predicted == ev.value;
    return ev;
}

TruncSeries genfun_lhs(int max_n, int degree) {
    TruncSeries acc = TruncSeries::from_poly(BiPoly::constant(CycloNum(1)), degree, degree, max_n);
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; j <= degree; ++j) acc = series_mul(acc, geometric(CycloNum(1), {i, j, 1}, degree, degree, max_n));
    }
    return acc;
}

TruncSeries genfun_rhs(int max_n, int degree) {
    TruncSeries acc(degree, degree, max_n);
    for (int n = 0; n <= max_n; ++n) {
        TruncSeries term = TruncSeries::from_poly(type_a_bimahonian(n), degree, degree, max_n);
        term = series_mul(term, series_reciprocal(TruncSeries::from_poly(qpochhammer(n, Var::t), degree, degree, max_n)));
        term = series_mul(term, series_reciprocal(TruncSeries::from_poly(qpochhammer(n, Var::q), degree, degree, max_n)));
        term = series_mul(term, TruncSeries::monomial(CycloNum(1), {0, 0, n}, degree, degree, max_n));
        acc = series_add(acc, term);
    }
    return acc;
}

TruncSeries bipartite_partition_series(int max_n, int degree) {
    // Count multisets of exponent pairs listed in nondecreasing pair index.
    const int side = degree + 1;
    std::map<TruncSeries::Exponent, long long> counts;
    std::function<void(int, int, int, int)> rec = [&](int min_index, int size, int a, int b) {
        ++counts[{a, b, size}];
        if (size == max_n) return;
        for (int idx = min_index; idx < side * side; ++idx) {
            const int i = idx / side;
            const int j = idx % side;
            if (a + i > degree || b + j > degree) continue;
            rec(idx, size + 1, a + i, b + j);
        }
    };
    rec(0, 0, 0, 0);
    TruncSeries out(degree, degree, max_n);
    for (const auto& [e, c] : counts) out.add_term(e, CycloNum(c));
    return out;
}

GenfunReport genfun_check(int max_n, int degree) {
    if (max_n < 0 || degree < 0) throw InvalidArgument("genfun_check: bounds must be nonnegative");
    GenfunReport rep;
    rep.max_n = max_n;
    rep.degree = degree;
    const TruncSeries lhs = genfun_lhs(max_n, degree);
    rep.series_equal = lhs == genfun_rhs(max_n, degree);
    rep.multiset_equal = lhs == bipartite_partition_series(max_n, degree);
    return rep;
}

}  // namespace bimahonian
