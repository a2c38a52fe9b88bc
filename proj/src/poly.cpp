#include "bimahonian/poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace bimahonian {

BiPoly BiPoly::constant(const CycloNum& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const CycloNum& c, int i, int j) {
    if (i < 0 || j < 0) throw InvalidArgument("BiPoly: negative exponent");
    BiPoly p(c.conductor());
    p.add_term(i, j, c);
    return p;
}

BiPoly BiPoly::var(Var v) { return v == Var::t ? monomial(CycloNum(1), 1, 0) : monomial(CycloNum(1), 0, 1); }

CycloNum BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? CycloNum::zero(m_) : it->second;
}

void BiPoly::promote(int m2) {
    if (m2 == m_) return;
    int big = static_cast<int>(lcm_ll(m_, m2));
    if (big == m_) return;
    for (auto& [e, c] : terms_) c = c.embed(big);
    m_ = big;
}

void BiPoly::add_term(int i, int j, const CycloNum& c) {
    if (i < 0 || j < 0) throw InvalidArgument("BiPoly: negative exponent");
    if (c.is_zero()) return;
    promote(c.conductor());
    CycloNum v = c.conductor() == m_ ? c : c.embed(m_);
    auto [it, inserted] = terms_.try_emplace({i, j}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::max_t_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

int BiPoly::max_q_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

BiPoly BiPoly::embed(int m2) const {
    if (m2 % m_ != 0) throw ConductorMismatch("BiPoly::embed: conductor does not divide target");
    BiPoly r = *this;
    r.promote(m2);
    return r;
}

bool BiPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.is_integer(); });
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r(m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.second, e.first}, c);
    return r;
}

BiPoly BiPoly::scaled(const CycloNum& k) const {
    BiPoly r(static_cast<int>(lcm_ll(m_, k.conductor())));
    CycloNum kk = k.embed(r.m_);
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, c.embed(r.m_) * kk);
    return r;
}

BiPoly BiPoly::to_rational() const {
    BiPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e.first, e.second, CycloNum(c.rational_value()));
    return r;
}

BiPoly BiPoly::specialize_to_one(Var v) const {
    BiPoly r(m_);
    for (const auto& [e, c] : terms_) {
        if (v == Var::t) r.add_term(0, e.second, c);
        else r.add_term(e.first, 0, c);
    }
    return r;
}

BiPoly BiPoly::substitute_t(const CycloNum& a) const {
    const int m = static_cast<int>(lcm_ll(m_, a.conductor()));
    const CycloNum base = a.embed(m);
    std::vector<CycloNum> powers{CycloNum::one(m)};
    BiPoly r(m);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e.first) powers.push_back(powers.back() * base);
        r.add_term(0, e.second, c.embed(m) * powers[e.first]);
    }
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& r) {
    promote(r.m_);
    for (const auto& [e, c] : r.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& r) {
    promote(r.m_);
    for (const auto& [e, c] : r.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& p, const BiPoly& r) {
    const int m = static_cast<int>(lcm_ll(p.m_, r.m_));
    const BiPoly a = p.embed(m);
    const BiPoly b = r.embed(m);
    BiPoly out(m);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        }
    }
    return out;
}

bool operator==(const BiPoly& p, const BiPoly& r) {
    if (p.terms_.size() != r.terms_.size()) return false;
    auto it = r.terms_.begin();
    for (const auto& [e, c] : p.terms_) {
        if (it->first != e || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool unit = c.is_one();
        const bool mono = e.first == 0 && e.second == 0;
        if (!unit || mono) {
            std::string s = c.to_string();
            os << (c.is_rational() ? s : "(" + s + ")");
        }
        if (!unit && !mono) os << "*";
        if (e.first > 0) os << "t" << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.first > 0 && e.second > 0) os << "*";
        if (e.second > 0) os << "q" << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

BiPoly poly_arith(const BiPoly& p, const BiPoly& r, PolyOp op) {
    switch (op) {
        case PolyOp::add: return p + r;
        case PolyOp::sub: return p - r;
        case PolyOp::mul: return p * r;
    }
    throw InvalidArgument("poly_arith: unknown op");
}

InexactDivision::InexactDivision(BiPoly remainder)
    : Error("inexact polynomial division; remainder " + remainder.to_string()), remainder_(std::move(remainder)) {}

BiPoly exact_div(const BiPoly& p, const BiPoly& r) {
    if (r.is_zero()) throw DivisionByZero();
    const int m = static_cast<int>(lcm_ll(p.conductor(), r.conductor()));
    BiPoly rem = p.embed(m);
    const BiPoly div = r.embed(m);
    const auto [lead_e, lead_c] = *div.terms().rbegin();
    const CycloNum lead_inv = lead_c.inverse();
    BiPoly quot(m);
    BiPoly leftover(m);
    while (!rem.is_zero()) {
        const auto [e, c] = *rem.terms().rbegin();
        if (e.first >= lead_e.first && e.second >= lead_e.second) {
            const int di = e.first - lead_e.first;
            const int dj = e.second - lead_e.second;
            const CycloNum f = c * lead_inv;
            quot.add_term(di, dj, f);
            for (const auto& [ed, cd] : div.terms()) rem.add_term(ed.first + di, ed.second + dj, -(f * cd));
        } else {
            leftover.add_term(e.first, e.second, c);
            rem.add_term(e.first, e.second, -c);
        }
    }
    if (!leftover.is_zero()) throw InexactDivision(leftover);
    return quot;
}

BiPoly qpochhammer(int n, Var v) {
    if (n < 0) throw InvalidArgument("qpochhammer: n must be nonnegative");
    BiPoly r = BiPoly::constant(CycloNum(1));
    for (int i = 1; i <= n; ++i) {
        BiPoly f = BiPoly::constant(CycloNum(1));
        f.add_term(v == Var::t ? i : 0, v == Var::q ? i : 0, CycloNum(-1));
        r = r * f;
    }
    return r;
}

BiPoly q_integer(int k, Var v) {
    if (k < 0) throw InvalidArgument("q_integer: k must be nonnegative");
    BiPoly r;
    for (int i = 0; i < k; ++i) r.add_term(v == Var::t ? i : 0, v == Var::q ? i : 0, CycloNum(1));
    return r;
}

CycloNum eval_at_roots(const BiPoly& p, const CycloNum& a, const CycloNum& b) {
    const int m = static_cast<int>(lcm_ll(lcm_ll(p.conductor(), a.conductor()), b.conductor()));
    const CycloNum x = a.embed(m);
    const CycloNum y = b.embed(m);
    std::vector<CycloNum> xp{CycloNum::one(m)}, yp{CycloNum::one(m)};
    CycloNum sum = CycloNum::zero(m);
    for (const auto& [e, c] : p.terms()) {
        while (static_cast<int>(xp.size()) <= e.first) xp.push_back(xp.back() * x);
        while (static_cast<int>(yp.size()) <= e.second) yp.push_back(yp.back() * y);
        sum += c.embed(m) * xp[e.first] * yp[e.second];
    }
    return sum;
}

BiPoly reduce_mod_cyclic(const BiPoly& p, int k, int l) {
    if (k < 1 || l < 1) throw InvalidArgument("reduce_mod_cyclic: moduli must be positive");
    BiPoly r(p.conductor());
    for (const auto& [e, c] : p.terms()) r.add_term(e.first % k, e.second % l, c);
    return r;
}

bool is_palindromic(const BiPoly& p, int n_star) {
    for (const auto& [e, c] : p.terms()) {
        if (e.first > n_star || e.second > n_star) return false;
        if (!(p.coeff(n_star - e.first, n_star - e.second) == c)) return false;
    }
    return true;
}

TruncSeries::TruncSeries(int dt, int dq, int du, int conductor) : dt_(dt), dq_(dq), du_(du), m_(conductor) {
    if (dt < 0 || dq < 0 || du < 0) throw InvalidArgument("TruncSeries: negative truncation bound");
}

TruncSeries TruncSeries::from_poly(const BiPoly& p, int dt, int dq, int du) {
    TruncSeries s(dt, dq, du, p.conductor());
    for (const auto& [e, c] : p.terms()) s.add_term({e.first, e.second, 0}, c);
    return s;
}

TruncSeries TruncSeries::monomial(const CycloNum& c, Exponent e, int dt, int dq, int du) {
    TruncSeries s(dt, dq, du, c.conductor());
    s.add_term(e, c);
    return s;
}

CycloNum TruncSeries::coeff(int i, int j, int k) const {
    auto it = terms_.find({i, j, k});
    return it == terms_.end() ? CycloNum::zero(m_) : it->second;
}

void TruncSeries::add_term(Exponent e, const CycloNum& c) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw InvalidArgument("TruncSeries: negative exponent");
    if (!in_bounds(e) || c.is_zero()) return;
    if (c.conductor() != m_) {
        int big = static_cast<int>(lcm_ll(m_, c.conductor()));
        if (big != m_) *this = embed(big);
    }
    CycloNum v = c.conductor() == m_ ? c : c.embed(m_);
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncSeries TruncSeries::embed(int m2) const {
    TruncSeries r(dt_, dq_, du_, m2);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.embed(m2));
    return r;
}

BiPoly TruncSeries::to_poly() const {
    BiPoly p(m_);
    for (const auto& [e, c] : terms_) {
        if (e[2] != 0) throw InvalidArgument("TruncSeries::to_poly: series involves u");
        p.add_term(e[0], e[1], c);
    }
    return p;
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    if (a.bounds() != b.bounds() || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
        if (it->first != e || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.dt_, b.dt_), std::min(a.dq_, b.dq_), std::min(a.du_, b.du_),
                  static_cast<int>(lcm_ll(a.m_, b.m_)));
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    const int m = static_cast<int>(lcm_ll(a.m_, b.m_));
    TruncSeries r(std::min(a.dt_, b.dt_), std::min(a.dq_, b.dq_), std::min(a.du_, b.du_), m);
    const TruncSeries x = a.embed(m);
    const TruncSeries y = b.embed(m);
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            TruncSeries::Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (r.in_bounds(e)) r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncSeries series_reciprocal(const TruncSeries& a) {
    const CycloNum a0 = a.coeff(0, 0, 0);
    if (a0.is_zero()) throw InvalidArgument("series_reciprocal: constant term is not invertible");
    const CycloNum inv0 = a0.inverse();
    TruncSeries b(a.dt_, a.dq_, a.du_, a.m_);
    // Lex order over the box visits e - f before e whenever f > 0.
    for (int i = 0; i <= a.dt_; ++i) {
        for (int j = 0; j <= a.dq_; ++j) {
            for (int k = 0; k <= a.du_; ++k) {
                if (i == 0 && j == 0 && k == 0) {
                    b.add_term({0, 0, 0}, inv0);
                    continue;
                }
                CycloNum acc = CycloNum::zero(a.m_);
                for (const auto& [f, c] : a.terms_) {
                    if (f == TruncSeries::Exponent{0, 0, 0}) continue;
                    if (f[0] > i || f[1] > j || f[2] > k) continue;
                    auto it = b.terms_.find({i - f[0], j - f[1], k - f[2]});
                    if (it != b.terms_.end()) acc += c * it->second;
                }
                if (!acc.is_zero()) b.add_term({i, j, k}, -(acc * inv0));
            }
        }
    }
    return b;
}

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return series_add(a, b);
        case SeriesOp::mul: return series_mul(a, b);
        case SeriesOp::reciprocal: return series_reciprocal(a);
    }
    throw InvalidArgument("series_arith: unknown op");
}

}  // namespace bimahonian
