#include "bimahonian/sieving.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bimahonian/characters.hpp"
#include "bimahonian/distributions.hpp"
#include "bimahonian/tableaux.hpp"

namespace bimahonian {

int RootOfUnity::order() const {
    const long long g = gcd_ll(mod_ll(exponent, conductor), conductor);
    return static_cast<int>(conductor / g);
}

CycloNum RootOfUnity::value() const {
    const long long e = mod_ll(exponent, conductor);
    const long long g = gcd_ll(e, conductor);
    return CycloNum::root_of_unity(static_cast<int>(conductor / g), e / g);
}

RootOfUnity RootOfUnity::pow(long long e) const { return {conductor, mod_ll(exponent * e, conductor)}; }

int eigenvalue_conductor(int d, int n) {
    long long l = 1;
    for (int i = 2; i <= n; ++i) l = lcm_ll(l, i);
    return static_cast<int>(d * l);
}

std::vector<Hyperplane> hyperplanes(int d, int n) {
    std::vector<Hyperplane> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = 0; k < d; ++k) out.push_back({i, j, k});
        }
    }
    if (d >= 2) {
        for (int i = 0; i < n; ++i) out.push_back({i, -1, 0});
    }
    return out;
}

namespace {

// Positions of each cycle, starting from its least position.
std::vector<std::vector<int>> cycles_of(const WreathElem& c) {
    const int n = c.n();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int i = start; !seen[i]; i = c.perm()[i] - 1) {
            seen[i] = true;
            cyc.push_back(i);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

}  // namespace

std::vector<RegularCertificate> is_regular(const WreathElem& c) {
    const int d = c.d();
    const int n = c.n();
    const int big = eigenvalue_conductor(d, n);
    const int unit = big / d;  // zeta_d = zeta_big^unit
    const auto cycles = cycles_of(c);
    std::vector<int> colorsum(cycles.size(), 0);
    for (std::size_t b = 0; b < cycles.size(); ++b) {
        for (int i : cycles[b]) colorsum[b] += c.colors()[i];
    }

    std::vector<RegularCertificate> out;
    for (long long e = 0; e < big; ++e) {
        // A block is live when lambda^length equals its colorsum root, so
        // that lambda is one of its eigenvalues.
        std::vector<bool> live(cycles.size());
        int dead = 0, dead_len = 0;
        for (std::size_t b = 0; b < cycles.size(); ++b) {
            const long long len = static_cast<long long>(cycles[b].size());
            live[b] = mod_ll(e * len - static_cast<long long>(colorsum[b]) * unit, big) == 0;
            if (!live[b]) {
                ++dead;
                dead_len = static_cast<int>(len);
            }
        }
        if (dead == static_cast<int>(cycles.size())) continue;
        if (d >= 2 && dead > 0) continue;
        if (d == 1 && (dead > 1 || (dead == 1 && dead_len != 1))) continue;

        // x_{perm(i)} = zeta^{k_i} x_i / lambda inside each live block.
        std::vector<long long> ex(n, 0);
        bool ok = true;
        for (std::size_t b = 0; b < cycles.size() && ok; ++b) {
            if (!live[b]) continue;
            const auto& cyc = cycles[b];
            for (std::size_t p = 0; p + 1 < cyc.size(); ++p) {
                const int i = cyc[p];
                ex[cyc[p + 1]] = mod_ll(ex[i] + static_cast<long long>(c.colors()[i]) * unit - e, big);
            }
            for (std::size_t p = 0; p < cyc.size() && ok; ++p) {
                for (std::size_t q = p + 1; q < cyc.size(); ++q) {
                    if (mod_ll(ex[cyc[p]] - ex[cyc[q]], unit) == 0) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) continue;

        RegularCertificate cert;
        cert.c = c;
        cert.eigen = {big, e};
        cert.eigenvalue = cert.eigen.value();
        cert.order = cert.eigen.order();
        cert.witness.assign(n, CycloNum::zero(big));
        // Distinct positive integer scales per block keep every cross-block
        // ratio off the unit circle, so no cross-block hyperplane can contain
        // the witness.
        long long scale = 0;
        for (std::size_t b = 0; b < cycles.size(); ++b) {
            if (!live[b]) continue;
            ++scale;
            for (int i : cycles[b]) {
                cert.witness[i] = CycloNum(Rational(static_cast<long>(scale)), big) * CycloNum::root_of_unity(big, ex[i]);
            }
        }
        if (!verify_certificate(cert)) {
            throw VerificationFailure("is_regular built a witness that fails verification for " + format_window(c));
        }
        out.push_back(std::move(cert));
    }
    return out;
}

bool verify_certificate(const RegularCertificate& cert) {
    const WreathElem& c = cert.c;
    const int d = c.d();
    const int n = c.n();
    if (static_cast<int>(cert.witness.size()) != n) return false;
    bool nonzero = false;
    for (const auto& x : cert.witness) nonzero = nonzero || !x.is_zero();
    if (!nonzero) return false;
    auto times = [](const CycloNum& a, const CycloNum& b) {
        auto [x, y] = lift_common(a, b);
        return x * y;
    };
    for (int i = 0; i < n; ++i) {
        const CycloNum image = times(CycloNum::root_of_unity(d, c.colors()[i]), cert.witness[i]);
        if (!(image == times(cert.eigenvalue, cert.witness[c.perm()[i] - 1]))) return false;
    }
    for (const auto& h : hyperplanes(d, n)) {
        const CycloNum& xi = cert.witness[h.i];
        if (h.j < 0) {
            if (xi.is_zero()) return false;
        } else if (xi == times(CycloNum::root_of_unity(d, h.k), cert.witness[h.j])) {
            return false;
        }
    }
    return cert.eigen.order() == c.order() && mult_order(cert.eigenvalue) == cert.order && cert.order == c.order();
}

std::vector<RegularCertificate> regular_cyclic_subgroups(int d, int n, const Budget& budget) {
    std::vector<RegularCertificate> out;
    std::set<std::set<WreathElem>> seen;
    for_each_element(d, n, budget, [&](const WreathElem& w) {
        auto certs = is_regular(w);
        if (certs.empty()) return;
        std::set<WreathElem> powers;
        WreathElem p = WreathElem::identity(d, n);
        do {
            powers.insert(p);
            p = p * w;
        } while (!p.is_identity());
        if (seen.insert(std::move(powers)).second) out.push_back(std::move(certs.front()));
    });
    return out;
}

namespace {

long long derive_s(const RegularCertificate& c, const GaloisAut& sigma) {
    const int k = c.order;
    if (lcm_ll(2, sigma.conductor()) % k != 0) {
        throw ConductorMismatch("sigma has conductor " + std::to_string(sigma.conductor()) +
                                ", which does not contain a root of unity of order " + std::to_string(k));
    }
    return mod_ll(sigma.lift(k).s(), k);
}

// Index tables for the twisted action on a fixed group enumeration.
struct ActionTables {
    int k, l;
    long long s;
    std::vector<std::vector<std::size_t>> left;   // left[a][w] = c^a w
    std::vector<std::vector<std::size_t>> right;  // right[b][w] = w c'^-b

    ActionTables(const BiCSPInstance& inst, const GroupIndex& g) : k(inst.c.order), l(inst.c_prime.order), s(inst.s) {
        const std::size_t size = g.size();
        WreathElem cp = WreathElem::identity(inst.d, inst.n);
        left.assign(k, std::vector<std::size_t>(size));
        right.assign(l, std::vector<std::size_t>(size));
        for (int a = 0; a < k; ++a) {
            for (std::size_t w = 0; w < size; ++w) left[a][w] = g.index_of(cp * g.at(w));
            cp = inst.c.c * cp;
        }
        const WreathElem step = inst.c_prime.c.inverse();
        cp = WreathElem::identity(inst.d, inst.n);
        for (int b = 0; b < l; ++b) {
            for (std::size_t w = 0; w < size; ++w) right[b][w] = g.index_of(g.at(w) * cp);
            cp = cp * step;
        }
    }

    std::size_t act(long long i, long long j, std::size_t w) const {
        return left[mod_ll(s * i, k)][right[mod_ll(j, l)][w]];
    }
};

std::vector<std::pair<int, int>> generators_of(const std::vector<std::pair<int, int>>& subgroup, int k, int l) {
    std::set<std::pair<int, int>> span{{0, 0}};
    std::vector<std::pair<int, int>> gens;
    for (const auto& g : subgroup) {
        if (span.count(g)) continue;
        gens.push_back(g);
        std::vector<std::pair<int, int>> frontier(span.begin(), span.end());
        while (!frontier.empty()) {
            auto [a, b] = frontier.back();
            frontier.pop_back();
            for (const auto& h : gens) {
                std::pair<int, int> next{(a + h.first) % k, (b + h.second) % l};
                if (span.insert(next).second) frontier.push_back(next);
            }
        }
    }
    return gens;
}

std::vector<Orbit> orbits_with(const ActionTables& t, std::size_t size) {
    std::vector<bool> seen(size, false);
    std::vector<Orbit> out;
    for (std::size_t start = 0; start < size; ++start) {
        if (seen[start]) continue;
        Orbit o;
        o.representative = start;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const std::size_t w = stack.back();
            stack.pop_back();
            ++o.size;
            for (std::size_t next : {t.act(1, 0, w), t.act(0, 1, w)}) {
                if (!seen[next]) {
                    seen[next] = true;
                    stack.push_back(next);
                }
            }
        }
        for (int i = 0; i < t.k; ++i) {
            for (int j = 0; j < t.l; ++j) {
                if (t.act(i, j, start) == start) o.stabilizer.emplace_back(i, j);
            }
        }
        o.stabilizer_gens = generators_of(o.stabilizer, t.k, t.l);
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace

BiCSPInstance make_bicsp_instance(const RegularCertificate& c, const RegularCertificate& c_prime,
                                  const GaloisAut& sigma, BiPoly x) {
    if (c.c.d() != c_prime.c.d() || c.c.n() != c_prime.c.n()) {
        throw InvalidArgument("make_bicsp_instance: c and c' lie in different groups");
    }
    if (sigma.conductor() % c.c.d() != 0) {
        throw ConductorMismatch("sigma's conductor must be divisible by d=" + std::to_string(c.c.d()));
    }
    BiCSPInstance inst;
    inst.d = c.c.d();
    inst.n = c.c.n();
    inst.c = c;
    inst.c_prime = c_prime;
    inst.sigma = sigma;
    inst.s = derive_s(c, sigma);
    derive_s(c_prime, sigma);  // omega' must lie in the field as well
    inst.x = std::move(x);
    return inst;
}

BiCSPInstance make_bicsp_instance(const RegularCertificate& c, const RegularCertificate& c_prime,
                                  const GaloisAut& sigma, const Budget& budget) {
    return make_bicsp_instance(c, c_prime, sigma, bimahonian_fake(c.c.d(), c.c.n(), sigma, budget));
}

WreathElem twisted_action(const BiCSPInstance& inst, long long i, long long j, const WreathElem& w) {
    return inst.c.c.pow(mod_ll(inst.s * i, inst.c.order)) * w * inst.c_prime.c.pow(-j);
}

std::vector<Orbit> orbits_and_stabilizers(const BiCSPInstance& inst, const GroupIndex* index) {
    std::optional<GroupIndex> own;
    if (!index) index = &own.emplace(inst.d, inst.n);
    const ActionTables t(inst, *index);
    return orbits_with(t, index->size());
}

CycloNum eval_integral_at_roots(const BiPoly& p, int conductor, long long a, long long b) {
    std::vector<Integer> buckets(conductor);
    for (const auto& [e, c] : p.terms()) {
        if (!c.is_integer()) throw InvalidArgument("eval_integral_at_roots: coefficients must be integers");
        buckets[mod_ll(a * e.first + b * e.second, conductor)] += c.rational_value().get_num();
    }
    CycloNum out = CycloNum::zero(conductor);
    for (int r = 0; r < conductor; ++r) {
        if (buckets[r] != 0) out += CycloNum(Rational(buckets[r]), conductor) * CycloNum::root_of_unity(conductor, r);
    }
    return out;
}

BiCSPReport check_bicsp(const BiCSPInstance& inst, const GroupIndex* index) {
    std::optional<GroupIndex> own;
    if (!index) index = &own.emplace(inst.d, inst.n);
    if (index->d() != inst.d || index->n() != inst.n) throw InvalidArgument("check_bicsp: index is for another group");
    const ActionTables t(inst, *index);
    const int k = t.k;
    const int l = t.l;

    const RootOfUnity& om = inst.c.eigen;
    const RootOfUnity& omp = inst.c_prime.eigen;
    const int big = static_cast<int>(lcm_ll(om.conductor, omp.conductor));
    const long long eo = om.exponent * (big / om.conductor);    // omega = zeta_big^eo
    const long long eop = omp.exponent * (big / omp.conductor);  // omega' = zeta_big^eop

    BiCSPReport rep;
    rep.k = k;
    rep.l = l;
    rep.orbits = orbits_with(t, index->size());
    const BiPoly reduced = reduce_mod_cyclic(inst.x, k, l);
    rep.pass_i = true;
    rep.pass_ii = true;
    rep.evaluations.assign(k, {});
    rep.fixed_points.assign(k, std::vector<long long>(l, 0));
    rep.a.assign(k, std::vector<long long>(l, 0));
    rep.orbit_counts.assign(k, std::vector<long long>(l, 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) {
            rep.evaluations[i].push_back(eval_integral_at_roots(inst.x, big, -i * eo, -j * eop));
            for (std::size_t w = 0; w < index->size(); ++w) {
                if (t.act(i, j, w) == w) ++rep.fixed_points[i][j];
            }
            if (!(rep.evaluations[i][j] == CycloNum(rep.fixed_points[i][j]))) rep.pass_i = false;

            rep.a[i][j] = reduced.coeff(i, j).rational_value().get_num().get_si();
            for (const auto& o : rep.orbits) {
                // rho^(i,j)(c^a, c'^b) = omega^(-a i) omega'^(-b j)
                const bool in_kernel = std::all_of(o.stabilizer.begin(), o.stabilizer.end(), [&](const auto& ab) {
                    return mod_ll(-(ab.first * i * eo + ab.second * j * eop), big) == 0;
                });
                if (in_kernel) ++rep.orbit_counts[i][j];
            }
            if (rep.a[i][j] != rep.orbit_counts[i][j]) rep.pass_ii = false;
        }
    }
    return rep;
}

bool SigmaPowerReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SigmaPowerRow& r) { return r.equal; });
}

SigmaPowerReport verify_sigma_power(const RegularCertificate& cert, const GaloisAut& sigma) {
    if (cert.c.d() != 1) throw InvalidArgument("verify_sigma_power: character values are only available for d = 1");
    const int n = cert.c.n();
    SigmaPowerReport rep;
    rep.s = derive_s(cert, sigma);
    const Partition class_of_power = cycle_type(cert.c.pow(rep.s).perm());
    const RootOfUnity& om = cert.eigen;
    for (const auto& lambda : partitions_of(n)) {
        SigmaPowerRow row;
        row.shape = lambda;
        const MultiPartition image = galois_on_shape(GaloisAut(sigma.conductor(), sigma.s()), MultiPartition({lambda}));
        row.fake_value = eval_integral_at_roots(fake_degree(image), om.conductor, 0, -om.exponent);
        row.character = CycloNum(mn_value(lambda, class_of_power));
        row.equal = row.fake_value == row.character;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace bimahonian
