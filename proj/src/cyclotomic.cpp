#include "bimahonian/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bimahonian/error.hpp"

namespace bimahonian {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

long long mod_ll(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

int euler_phi(int m) {
    if (m < 1) throw InvalidArgument("euler_phi: conductor must be positive");
    int result = m;
    int x = m;
    for (int p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            while (x % p == 0) x /= p;
            result -= result / p;
        }
    }
    if (x > 1) result -= result / x;
    return result;
}

namespace {

// Per-conductor reduction data: phi(m) and, for every exponent e in [0, m),
// the sparse coordinates of zeta^e in the canonical basis.
struct FieldTables {
    int m = 1;
    int phi = 1;
    std::vector<Integer> cyclo;
    std::vector<std::vector<std::pair<int, Integer>>> power;
};

std::vector<Integer> compute_cyclotomic(int m);

std::mutex& table_mutex() {
    static std::mutex mu;
    return mu;
}

std::map<int, std::shared_ptr<const FieldTables>>& table_cache() {
    static std::map<int, std::shared_ptr<const FieldTables>> cache;
    return cache;
}

std::map<int, std::vector<Integer>>& cyclo_cache() {
    static std::map<int, std::vector<Integer>> cache;
    return cache;
}

// Requires table_mutex() held.
const std::vector<Integer>& cyclotomic_locked(int m) {
    auto& cache = cyclo_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    return cache.emplace(m, compute_cyclotomic(m)).first->second;
}

// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, each division exact and monic.
std::vector<Integer> compute_cyclotomic(int m) {
    std::vector<Integer> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const std::vector<Integer> den = cyclotomic_locked(d);
        int dn = static_cast<int>(num.size()) - 1;
        int dd = static_cast<int>(den.size()) - 1;
        std::vector<Integer> quot(dn - dd + 1, 0);
        for (int i = dn; i >= dd; --i) {
            Integer lead = num[i];
            if (lead == 0) continue;
            quot[i - dd] = lead;
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
        }
        for (int i = 0; i < dd; ++i) {
            if (num[i] != 0) throw VerificationFailure("cyclotomic polynomial division left a remainder");
        }
        num = std::move(quot);
    }
    return num;
}

std::shared_ptr<const FieldTables> tables(int m) {
    if (m < 1) throw InvalidArgument("conductor must be positive");
    std::lock_guard<std::mutex> lock(table_mutex());
    auto& cache = table_cache();
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    auto t = std::make_shared<FieldTables>();
    t->m = m;
    t->cyclo = cyclotomic_locked(m);
    t->phi = static_cast<int>(t->cyclo.size()) - 1;
    t->power.resize(m);
    // Walk x^e mod Phi_m for e = 0..m-1 by repeated multiplication by x.
    std::vector<Integer> cur(t->phi, 0);
    cur[0] = 1;
    for (int e = 0; e < m; ++e) {
        for (int i = 0; i < t->phi; ++i) {
            if (cur[i] != 0) t->power[e].emplace_back(i, cur[i]);
        }
        // cur *= x, then eliminate x^phi using the monic relation.
        Integer top = cur[t->phi - 1];
        for (int i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (int i = 0; i < t->phi; ++i) cur[i] -= top * t->cyclo[i];
        }
    }
    cache.emplace(m, t);
    return t;
}

// Reduce a vector indexed by exponents mod m into canonical coordinates.
std::vector<Rational> project(const FieldTables& t, const std::vector<Rational>& by_exponent) {
    std::vector<Rational> out(t.phi, 0);
    for (int e = 0; e < t.m; ++e) {
        const Rational& v = by_exponent[e];
        if (sgn(v) == 0) continue;
        for (const auto& [idx, c] : t.power[e]) out[idx] += v * c;
    }
    return out;
}

// Dense univariate rational polynomials for the inverse computation.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

QPoly qpoly_sub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

void qpoly_divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t shift = r.size() - b.size();
        Rational f = r.back() / b.back();
        q[shift] = f;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
        trim(r);
    }
    trim(q);
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
    if (m < 1) throw InvalidArgument("cyclotomic_polynomial: m must be positive");
    std::lock_guard<std::mutex> lock(table_mutex());
    return cyclotomic_locked(m);
}

CycloNum::CycloNum() : m_(1), c_(1, 0) {}

CycloNum::CycloNum(long long value) : m_(1), c_(1, Rational(static_cast<long>(value))) {}

CycloNum::CycloNum(const Rational& value, int conductor) : m_(conductor) {
    c_.assign(euler_phi(conductor), 0);
    c_[0] = value;
}

CycloNum::CycloNum(int conductor, std::vector<Rational> coeffs) : m_(conductor), c_(std::move(coeffs)) {
    const int phi = euler_phi(conductor);
    if (static_cast<int>(c_.size()) != phi) {
        throw InvalidArgument("CycloNum: expected " + std::to_string(phi) + " coefficients for conductor " +
                              std::to_string(conductor));
    }
    for (auto& c : c_) c.canonicalize();
}

CycloNum CycloNum::root_of_unity(int m, long long a) {
    auto t = tables(m);
    CycloNum r = zero(m);
    for (const auto& [idx, c] : t->power[mod_ll(a, m)]) r.c_[idx] = c;
    return r;
}

CycloNum CycloNum::zero(int m) { return CycloNum(Rational(0), m); }

CycloNum CycloNum::one(int m) { return CycloNum(Rational(1), m); }

bool CycloNum::is_zero() const {
    for (const auto& c : c_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

bool CycloNum::is_one() const { return is_rational() && c_[0] == 1; }

bool CycloNum::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
        if (sgn(c_[i]) != 0) return false;
    }
    return true;
}

bool CycloNum::is_integer() const { return is_rational() && c_[0].get_den() == 1; }

Rational CycloNum::rational_value() const {
    if (!is_rational()) throw InvalidArgument("CycloNum is not rational: " + to_string());
    return c_[0];
}

void CycloNum::require_same_field(const CycloNum& y, const char* op) const {
    if (m_ != y.m_) {
        throw ConductorMismatch(std::string(op) + ": conductors " + std::to_string(m_) + " and " +
                                std::to_string(y.m_) + " differ; embed first");
    }
}

CycloNum CycloNum::embed(int m2) const {
    if (m2 < 1 || m2 % m_ != 0) {
        throw ConductorMismatch("embed: " + std::to_string(m_) + " does not divide " + std::to_string(m2));
    }
    if (m2 == m_) return *this;
    auto t = tables(m2);
    const int step = m2 / m_;
    std::vector<Rational> by_exp(m2, 0);
    for (std::size_t a = 0; a < c_.size(); ++a) by_exp[(a * step) % m2] += c_[a];
    return CycloNum(m2, project(*t, by_exp));
}

CycloNum CycloNum::conj() const { return galois_apply(GaloisAut::conjugation(m_), *this); }

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_rational()) return CycloNum(Rational(1) / c_[0], m_);
    auto t = tables(m_);
    // Extended Euclid: find u with u * a = 1 mod Phi_m.
    QPoly a(c_.begin(), c_.end());
    trim(a);
    QPoly f(t->cyclo.begin(), t->cyclo.end());
    QPoly r0 = f, r1 = a;
    QPoly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        QPoly q, r;
        qpoly_divmod(r0, r1, q, r);
        QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant since Phi_m is irreducible.
    if (r0.size() != 1) throw VerificationFailure("inverse: gcd with cyclotomic polynomial is not constant");
    QPoly q, u;
    qpoly_divmod(s0, f, q, u);
    std::vector<Rational> out(t->phi, 0);
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] / r0[0];
    return CycloNum(m_, std::move(out));
}

CycloNum CycloNum::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum result = one(m_);
    CycloNum base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycloNum CycloNum::operator-() const {
    CycloNum r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& y) {
    require_same_field(y, "add");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += y.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& y) {
    require_same_field(y, "sub");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= y.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& y) {
    require_same_field(y, "mul");
    if (c_.size() == 1) {
        c_[0] *= y.c_[0];
        return *this;
    }
    if (y.is_rational()) {
        for (auto& c : c_) c *= y.c_[0];
        return *this;
    }
    if (is_rational()) {
        Rational k = c_[0];
        c_ = y.c_;
        for (auto& c : c_) c *= k;
        return *this;
    }
    auto t = tables(m_);
    std::vector<Rational> by_exp(m_, 0);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (sgn(c_[a]) == 0) continue;
        for (std::size_t b = 0; b < y.c_.size(); ++b) {
            if (sgn(y.c_[b]) == 0) continue;
            by_exp[(a + b) % m_] += c_[a] * y.c_[b];
        }
    }
    c_ = project(*t, by_exp);
    return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& y) {
    require_same_field(y, "div");
    return *this *= y.inverse();
}

bool operator==(const CycloNum& x, const CycloNum& y) {
    if (x.m_ == y.m_) return x.c_ == y.c_;
    auto [a, b] = lift_common(x, y);
    return a.c_ == b.c_;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "z" << m_;
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

CycloNum arith(const CycloNum& x, const CycloNum& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw InvalidArgument("arith: unknown op");
}

CycloNum embed(const CycloNum& x, int m2) { return x.embed(m2); }

std::pair<CycloNum, CycloNum> lift_common(const CycloNum& x, const CycloNum& y) {
    int m = static_cast<int>(lcm_ll(x.conductor(), y.conductor()));
    return {x.embed(m), y.embed(m)};
}

GaloisAut::GaloisAut(int conductor, long long s) : m_(conductor), s_(0) {
    if (conductor < 1) throw InvalidArgument("GaloisAut: conductor must be positive");
    s_ = mod_ll(s, conductor);
    if (gcd_ll(s_, conductor) != 1) {
        throw InvalidArgument("GaloisAut: s=" + std::to_string(s) + " is not a unit mod " + std::to_string(conductor));
    }
}

GaloisAut GaloisAut::compose(const GaloisAut& inner) const {
    if (inner.m_ != m_) throw ConductorMismatch("GaloisAut::compose: conductors differ");
    return GaloisAut(m_, (s_ * inner.s_) % m_);
}

GaloisAut GaloisAut::inverse() const {
    for (long long t = 0; t < m_; ++t) {
        if ((t * s_) % m_ == 1 % m_) return GaloisAut(m_, t);
    }
    throw VerificationFailure("GaloisAut::inverse: no inverse found");
}

GaloisAut GaloisAut::lift(int m2) const {
    long long big = lcm_ll(m_, m2);
    for (long long s = s_ == 0 ? m_ : s_;; s += m_) {
        if (gcd_ll(s, big) == 1) return GaloisAut(static_cast<int>(big), s);
    }
}

CycloNum galois_apply(const GaloisAut& sigma, const CycloNum& x) {
    const int m = x.conductor();
    if (sigma.conductor() % m != 0) {
        throw ConductorMismatch("galois_apply: conductor " + std::to_string(m) + " does not divide " +
                                std::to_string(sigma.conductor()));
    }
    if (x.is_rational()) return x;
    auto t = tables(m);
    const long long s = sigma.s() % m;
    std::vector<Rational> by_exp(m, 0);
    const auto& c = x.coeffs();
    for (std::size_t a = 0; a < c.size(); ++a) by_exp[(a * s) % m] += c[a];
    return CycloNum(m, project(*t, by_exp));
}

std::optional<int> mult_order(const CycloNum& x) {
    // Roots of unity in Q(zeta_m) have order dividing lcm(2, m).
    const long long bound = lcm_ll(2, x.conductor());
    if (x.is_zero() || !x.pow(bound).is_one()) return std::nullopt;
    for (long long k = 1; k <= bound; ++k) {
        if (bound % k == 0 && x.pow(k).is_one()) return static_cast<int>(k);
    }
    return std::nullopt;
}

bool is_fixed_by_conjugation(const CycloNum& x) { return x.conj() == x; }

}  // namespace bimahonian
