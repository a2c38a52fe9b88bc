#include "bimahonian/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bimahonian/characters.hpp"
#include "bimahonian/distributions.hpp"
#include "bimahonian/sieving.hpp"
#include "bimahonian/tableaux.hpp"

namespace bimahonian {

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

using Case = std::pair<int, int>;  // (d, n)

std::vector<long long> units_mod(long long m) {
    std::vector<long long> out;
    for (long long s = 1; s <= std::max(1LL, m); ++s) {
        if (m == 1 || (s < m && gcd_ll(s, m) == 1)) out.push_back(s);
    }
    return out;
}

// Group sizes exercised when the caller does not pin (d, n).
std::vector<Case> default_cases() {
    std::vector<Case> out;
    for (int n = 1; n <= 6; ++n) out.emplace_back(1, n);
    for (int n = 1; n <= 4; ++n) out.emplace_back(2, n);
    for (int n = 1; n <= 3; ++n) out.emplace_back(3, n);
    for (int n = 1; n <= 2; ++n) out.emplace_back(4, n);
    return out;
}

std::vector<Case> cases_for(const VerifyConfig& cfg) {
    if (cfg.d && cfg.n) return {{*cfg.d, *cfg.n}};
    std::vector<Case> out;
    for (const auto& c : default_cases()) {
        if ((!cfg.d || c.first == *cfg.d) && (!cfg.n || c.second == *cfg.n)) out.push_back(c);
    }
    return out;
}

void add(SuiteReport& rep, std::string name, Json inputs, bool passed, std::string detail = {}) {
    rep.checks.push_back({std::move(name), std::move(inputs), passed, std::move(detail)});
}

std::string group_name(int d, int n) { return "G(" + std::to_string(d) + ",1," + std::to_string(n) + ")"; }

// Every root of unity of order at most n, as (order, exponent) pairs.
std::vector<std::pair<int, int>> roots_up_to(int n) {
    std::vector<std::pair<int, int>> out;
    for (int ell = 1; ell <= n; ++ell) {
        for (int e = 0; e < ell; ++e) {
            if (gcd_ll(e, ell) == 1 || ell == 1) out.emplace_back(ell, e);
        }
    }
    return out;
}

void suite_methods(const VerifyConfig& cfg, SuiteReport& rep) {
    for (const auto& [d, n] : cases_for(cfg)) {
        for (long long s : units_mod(d)) {
            const GaloisAut sigma(d, s);
            const BiPoly fake = bimahonian_fake(d, n, sigma, cfg.budget);
            const BiPoly fmaj = bimahonian_fmaj(d, n, sigma, cfg.budget);
            const BiPoly molien = bimahonian_molien(d, n, sigma, cfg.budget);
            const bool ok = fake == fmaj && fmaj == molien;
            add(rep, "fake = fmaj = molien for " + group_name(d, n) + ", s=" + std::to_string(s),
                Json{{"d", d}, {"n", n}, {"s", s}}, ok,
                ok ? "" : "fake: " + fake.to_string() + "; fmaj: " + fmaj.to_string() + "; molien: " + molien.to_string());
        }
        if (d == 1) {
            const BiPoly rec = wright_recurrence(n);
            const BiPoly fake = bimahonian_fake(1, n, GaloisAut::identity(1), cfg.budget);
            add(rep, "recurrence = fake degrees for S_" + std::to_string(n), Json{{"n", n}}, rec == fake,
                rec == fake ? "" : rec.to_string());
        }
    }
}

void suite_bicsp(const VerifyConfig& cfg, SuiteReport& rep) {
    // (d, n, all_sigma)
    std::vector<std::tuple<int, int, bool>> groups;
    if (cfg.d && cfg.n) {
        groups.emplace_back(*cfg.d, *cfg.n, true);
    } else {
        for (int d = 1; d <= 3; ++d) {
            for (int n = 1; n <= 3; ++n) groups.emplace_back(d, n, true);
        }
        for (int n = 4; n <= 5; ++n) groups.emplace_back(1, n, false);
        std::erase_if(groups, [&](const auto& g) {
            return (cfg.d && std::get<0>(g) != *cfg.d) || (cfg.n && std::get<1>(g) != *cfg.n);
        });
    }
    for (const auto& [d, n, all_sigma] : groups) {
        const GroupIndex index(d, n, cfg.budget);
        const auto subgroups = regular_cyclic_subgroups(d, n, cfg.budget);
        std::map<long long, BiPoly> poly_by_s;
        long long instances = 0, failures = 0, disagreements = 0;
        std::string first_failure;
        for (const auto& c : subgroups) {
            for (const auto& cp : subgroups) {
                const long long m = lcm_ll(lcm_ll(d, c.order), cp.order);
                for (long long s : all_sigma ? units_mod(m) : std::vector<long long>{1}) {
                    const GaloisAut sigma(static_cast<int>(m), s);
                    const long long sd = mod_ll(s, d);
                    auto it = poly_by_s.find(sd);
                    if (it == poly_by_s.end()) {
                        it = poly_by_s.emplace(sd, bimahonian_fake(d, n, GaloisAut(d, sd), cfg.budget)).first;
                    }
                    const BiCSPReport r = check_bicsp(make_bicsp_instance(c, cp, sigma, it->second), &index);
                    ++instances;
                    if (r.pass_i != r.pass_ii) ++disagreements;
                    if (!r.passed()) {
                        if (failures++ == 0) {
                            first_failure = "c=" + format_window(c.c) + " c'=" + format_window(cp.c) +
                                            " s=" + std::to_string(s) + ": " + bicsp_report_to_json(r).dump();
                        }
                    }
                }
            }
        }
        std::ostringstream detail;
        detail << instances << " instances over " << subgroups.size() << " regular cyclic subgroups, " << failures
               << " failing, " << disagreements << " with conditions (i) and (ii) disagreeing";
        if (failures) detail << "; first failure " << first_failure;
        add(rep, "biCSP for every ordered pair of regular cyclic subgroups of " + group_name(d, n) +
                     (all_sigma ? ", all sigma" : ", sigma = id"),
            Json{{"d", d}, {"n", n}, {"all_sigma", all_sigma}}, failures == 0 && disagreements == 0, detail.str());
    }
}

void suite_bss(const VerifyConfig& cfg, SuiteReport& rep) {
    if (cfg.d && *cfg.d != 1) return;
    const int top = cfg.n.value_or(5);
    for (int n = cfg.n ? top : 1; n <= top; ++n) {
        const BiPoly reduced = reduce_mod_cyclic(type_a_bimahonian(n), n, n);
        std::vector<ClassFunction> ind;
        for (int i = 0; i < n; ++i) ind.push_back(induced_cyclic_character(n, i, cfg.budget));
        bool ok = true;
        std::string detail;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const CycloNum lhs = reduced.coeff(i, j);
                const CycloNum rhs = intertwining(ind[i], ind[j]);
                if (!(lhs == rhs)) {
                    ok = false;
                    detail += "a(" + std::to_string(i) + "," + std::to_string(j) + ")=" + lhs.to_string() +
                              " vs " + rhs.to_string() + "; ";
                }
            }
        }
        add(rep, "a_{n,n}(i,j) = <Ind rho^i, Ind rho^j> for S_" + std::to_string(n), Json{{"n", n}}, ok, detail);
    }
}

void suite_gordon(const VerifyConfig& cfg, SuiteReport& rep) {
    const int top = cfg.n.value_or(8);
    for (int n = 1; n <= top; ++n) {
        for (int ell = 1; ell <= n; ++ell) {
            bool ok = true;
            std::string detail;
            for (const auto& [order, e] : roots_up_to(ell)) {
                if (order != ell) continue;
                const GordonSides g = gordon_specialize(n, ell, CycloNum::root_of_unity(ell, e));
                if (!g.equal) {
                    ok = false;
                    detail += "omega=z" + std::to_string(ell) + "^" + std::to_string(e) + ": " + g.lhs.to_string() +
                              " vs " + g.rhs.to_string() + "; ";
                }
            }
            add(rep, "specialization at primitive roots of order " + std::to_string(ell) + " for S_" + std::to_string(n),
                Json{{"n", n}, {"ell", ell}}, ok, detail);
        }
        long long pairs = 0, failures = 0;
        std::string detail;
        const auto roots = roots_up_to(n);
        for (const auto& [o1, e1] : roots) {
            for (const auto& [o2, e2] : roots) {
                const GordonEvaluation ev =
                    gordon_evaluate(n, CycloNum::root_of_unity(o1, e1), CycloNum::root_of_unity(o2, e2));
                ++pairs;
                if (!ev.holds || !ev.predicted) {
                    if (failures++ == 0) {
                        detail = "orders " + std::to_string(o1) + "," + std::to_string(o2) + ": " + ev.value.to_string();
                    }
                }
            }
        }
        add(rep, "root-of-unity evaluations for S_" + std::to_string(n), Json{{"n", n}, {"pairs", pairs}}, failures == 0,
            failures ? detail : std::to_string(pairs) + " pairs");
    }
    if (top >= 3) {
        const CycloNum z3 = CycloNum::root_of_unity(3, 1);
        const CycloNum v = gordon_evaluate(3, z3, z3).value;
        add(rep, "S_3(z3, z3) = 3", Json{{"n", 3}}, v == CycloNum(3), v.to_string());
    }
    if (top >= 4) {
        const CycloNum v = gordon_evaluate(4, CycloNum(-1), CycloNum(-1)).value;
        add(rep, "S_4(-1, -1) = 8", Json{{"n", 4}}, v == CycloNum(8), v.to_string());
    }
}

void suite_springer(const VerifyConfig& cfg, SuiteReport& rep) {
    if (cfg.d && *cfg.d != 1) return;
    const int top = cfg.n.value_or(5);
    for (int n = cfg.n ? top : 1; n <= top; ++n) {
        std::map<Partition, BiPoly> fake;
        for (const auto& lambda : partitions_of(n)) fake.emplace(lambda, fake_degree(MultiPartition({lambda}), cfg.budget));
        long long certs = 0, failures = 0, sigma_checks = 0;
        std::string detail;
        for_each_element(1, n, cfg.budget, [&](const WreathElem& c) {
            const Partition mu = cycle_type(c.perm());
            for (const auto& cert : is_regular(c)) {
                ++certs;
                for (const auto& [lambda, f] : fake) {
                    const CycloNum lhs = CycloNum(mn_value(lambda, mu));
                    const CycloNum rhs = eval_integral_at_roots(f, cert.eigen.conductor, 0, -cert.eigen.exponent);
                    if (!(lhs == rhs) && failures++ == 0) detail = format_window(c) + ": " + rhs.to_string();
                }
                for (long long s : units_mod(cert.order)) {
                    ++sigma_checks;
                    if (!verify_sigma_power(cert, GaloisAut(cert.order, s)).passed() && failures++ == 0) {
                        detail = "sigma power failed for " + format_window(c) + " s=" + std::to_string(s);
                    }
                }
            }
        });
        add(rep, "chi^lambda(c) = f^lambda(omega^-1) at every regular certificate of S_" + std::to_string(n),
            Json{{"n", n}, {"certificates", certs}, {"sigma_checks", sigma_checks}}, failures == 0, detail);
    }
}

void suite_regular(const VerifyConfig& cfg, SuiteReport& rep) {
    if (cfg.d && *cfg.d != 1) return;
    const int top = cfg.n.value_or(6);
    for (int n = cfg.n ? top : 1; n <= top; ++n) {
        std::set<WreathElem> regular, expected;
        bool orders_ok = true;
        for_each_element(1, n, cfg.budget, [&](const WreathElem& w) {
            const auto certs = is_regular(w);
            if (!certs.empty()) regular.insert(w);
            for (const auto& c : certs) orders_ok = orders_ok && c.order == w.order();
            const Partition mu = cycle_type(w.perm());
            const bool long_cycle = mu == Partition{n} || (n >= 2 && mu == Partition{n - 1, 1}) || n == 1;
            if (long_cycle) {
                for (int e = 0; e < w.order(); ++e) expected.insert(w.pow(e));
            }
        });
        const bool ok = regular == expected && orders_ok;
        add(rep, "regular elements of S_" + std::to_string(n) + " are the powers of n- and (n-1)-cycles",
            Json{{"n", n}, {"regular", regular.size()}, {"expected", expected.size()}}, ok,
            std::to_string(regular.size()) + " regular, " + std::to_string(expected.size()) + " expected");
    }
}

void suite_genfun(const VerifyConfig& cfg, SuiteReport& rep) {
    const int max_n = cfg.n.value_or(5);
    const int degree = cfg.degree.value_or(6);
    const GenfunReport g = genfun_check(max_n, degree);
    add(rep, "generating function to u-order " + std::to_string(max_n) + ", degree " + std::to_string(degree),
        Json{{"max_n", max_n}, {"degree", degree}}, g.series_equal, g.series_equal ? "" : "series differ");
    add(rep, "u-coefficients count bipartite partitions", Json{{"max_n", max_n}, {"degree", degree}}, g.multiset_equal,
        g.multiset_equal ? "" : "multiset counts differ");
    const CycloNum c = genfun_lhs(2, 1).coeff(1, 1, 2);
    add(rep, "coefficient of u^2 t q is 2", Json{{"max_n", 2}, {"degree", 1}}, c == CycloNum(2), c.to_string());
}

void suite_symmetry(const VerifyConfig& cfg, SuiteReport& rep) {
    for (const auto& [d, n] : cases_for(cfg)) {
        const DegreeData deg = degrees(d, n);
        const BiPoly w = mahonian(d, n);
        for (long long s : units_mod(d)) {
            const GaloisAut sigma(d, s);
            const BiPoly p = bimahonian_fake(d, n, sigma, cfg.budget);
            const BiPoly p_inv = bimahonian_fake(d, n, sigma.inverse(), cfg.budget);
            const Json in{{"d", d}, {"n", n}, {"s", s}};
            const std::string tag = group_name(d, n) + ", s=" + std::to_string(s);
            add(rep, "W^sigma(q,t) = W^{sigma^-1}(t,q) for " + tag, in, p.swap_vars() == p_inv);
            const bool spec = p.specialize_to_one(Var::t) == w && p.specialize_to_one(Var::q).swap_vars() == w;
            add(rep, "W^sigma(1,q) = W^sigma(q,1) = W(q) for " + tag, in, spec);
            const BiPoly fmaj_dist = bimahonian_fmaj(d, n, sigma, cfg.budget).specialize_to_one(Var::t);
            add(rep, "sum of q^fmaj = product of [d_i]_q for " + tag, in, fmaj_dist == w);
            const bool bound = p.max_t_degree() == deg.n_star && p.max_q_degree() == deg.n_star;
            add(rep, "degree bound N*=" + std::to_string(deg.n_star) + " for " + tag, in, bound);
        }
    }
    if (cfg.d && *cfg.d != 1) return;
    const int top = std::min(cfg.n.value_or(6), 6);
    for (int n = cfg.n ? top : 1; n <= top; ++n) {
        bool ok = true;
        for (const auto& [order, e] : roots_up_to(n)) {
            const CycloNum v = eval_at_roots(type_a_bimahonian(n), CycloNum::root_of_unity(order, e),
                                             CycloNum::root_of_unity(order, -e));
            ok = ok && is_fixed_by_conjugation(v);
        }
        add(rep, "S_" + std::to_string(n) + "(omega, omega^-1) is real", Json{{"n", n}}, ok);
    }
}

void suite_palindrome(const VerifyConfig& cfg, SuiteReport& rep) {
    for (const auto& [d, n] : cases_for(cfg)) {
        if (!(cfg.d && cfg.n) && (d > 3 || n > 3)) continue;
        const int n_star = degrees(d, n).n_star;
        const BiPoly p = bimahonian_molien(d, n, GaloisAut::conjugation(d), cfg.budget);
        add(rep, "conjugate distribution of " + group_name(d, n) + " is palindromic at N*=" + std::to_string(n_star),
            Json{{"d", d}, {"n", n}}, is_palindromic(p, n_star));
    }
}

void suite_cyclic(const VerifyConfig& cfg, SuiteReport& rep) {
    const int top = cfg.d.value_or(12);
    for (int d = cfg.d ? top : 1; d <= top; ++d) {
        bool ok = true;
        std::string detail;
        for (long long s : units_mod(d)) {
            const GaloisAut sigma(d, s);
            const BiPoly closed = cyclic_closed_form(d, s);
            const bool good = bimahonian_fake(d, 1, sigma, cfg.budget) == closed &&
                              bimahonian_fmaj(d, 1, sigma, cfg.budget) == closed &&
                              bimahonian_molien(d, 1, sigma, cfg.budget) == closed;
            if (!good) {
                ok = false;
                detail += "s=" + std::to_string(s) + " ";
            }
        }
        add(rep, "cyclic group of order " + std::to_string(d) + " matches a + s b = 0 mod d for all s",
            Json{{"d", d}}, ok, detail);
    }
}

using SuiteFn = void (*)(const VerifyConfig&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"methods", suite_methods}, {"bicsp", suite_bicsp},         {"bss", suite_bss},
        {"gordon", suite_gordon},   {"springer", suite_springer},   {"regular", suite_regular},
        {"genfun", suite_genfun},   {"symmetry", suite_symmetry},   {"palindrome", suite_palindrome},
        {"cyclic", suite_cyclic},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        out.push_back("all");
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
    SuiteReport rep;
    rep.suite = suite;
    for (const auto& [name, fn] : registry()) {
        if (suite == "all") {
            SuiteReport part;
            fn(cfg, part);
            for (auto& c : part.checks) {
                c.name = name + ": " + c.name;
                rep.checks.push_back(std::move(c));
            }
        } else if (suite == name) {
            fn(cfg, rep);
            return rep;
        }
    }
    if (suite != "all") throw InvalidArgument("unknown suite '" + suite + "'");
    return rep;
}

Json suite_report_to_json(const SuiteReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        checks.push_back(Json{{"name", c.name}, {"inputs", c.inputs}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return Json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}};
}

}  // namespace bimahonian
