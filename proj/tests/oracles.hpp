#pragma once

// Slow, direct reference computations used to cross-check the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/poly.hpp"
#include "bimahonian/wreath.hpp"

namespace oracle {

using bimahonian::BiPoly;
using bimahonian::CycloNum;
using Complex = std::complex<double>;
using Grid = std::map<std::pair<int, int>, long long>;

inline Complex root(int m, long long a) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(a) / m;
    return {std::cos(angle), std::sin(angle)};
}

// Complex embedding sending zeta_m to exp(2 pi i / m).
inline Complex approx(const CycloNum& x) {
    Complex z = 0;
    for (std::size_t k = 0; k < x.coeffs().size(); ++k) z += x.coeffs()[k].get_d() * root(x.conductor(), k);
    return z;
}

inline bool close(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) < tol; }

inline BiPoly from_grid(const Grid& g) {
    BiPoly p;
    for (const auto& [e, c] : g) {
        if (c) p.add_term(e.first, e.second, CycloNum(c));
    }
    return p;
}

inline Grid to_grid(const BiPoly& p) {
    Grid g;
    for (const auto& [e, c] : p.terms()) g[e] = c.rational_value().get_num().get_si();
    return g;
}

// Univariate integer polynomials as coefficient vectors.
using IPoly = std::vector<long long>;

inline IPoly mul(const IPoly& a, const IPoly& b) {
    IPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline IPoly q_int(int k) { return IPoly(k, 1); }

// Exact division of integer polynomials; the divisor is assumed monic up to sign.
inline IPoly div_exact(IPoly a, const IPoly& b) {
    IPoly q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        q[i] = a[i + b.size() - 1] / b.back();
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= q[i] * b[j];
    }
    return q;
}

inline std::vector<int> conjugate(const std::vector<int>& lambda) {
    std::vector<int> out(lambda.empty() ? 0 : lambda[0], 0);
    for (int part : lambda) {
        for (int c = 0; c < part; ++c) ++out[c];
    }
    return out;
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline long long hook_count(const std::vector<int>& lambda) {
    const auto conj = conjugate(lambda);
    long long prod = 1;
    int n = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) prod *= (lambda[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1;
        n += lambda[r];
    }
    return factorial(n) / prod;
}

// q-hook formula: q^{b(lambda)} [n]_q! / prod [h]_q.
inline IPoly q_hook_fake_degree(const std::vector<int>& lambda) {
    const auto conj = conjugate(lambda);
    int n = 0, b = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        n += lambda[r];
        b += static_cast<int>(r) * lambda[r];
    }
    IPoly num{1};
    for (int k = 1; k <= n; ++k) num = mul(num, q_int(k));
    IPoly den{1};
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        for (int c = 0; c < lambda[r]; ++c) den = mul(den, q_int((lambda[r] - c - 1) + (conj[c] - static_cast<int>(r) - 1) + 1));
    }
    IPoly out(b, 0);
    const IPoly quot = div_exact(num, den);
    out.insert(out.end(), quot.begin(), quot.end());
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int sign(const std::vector<int>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (p[i] > p[j]) s = -s;
        }
    }
    return s;
}

// det(1 - t M) by the Leibniz expansion over complex numbers, coefficient per t-power.
inline std::vector<Complex> det_one_minus(const std::vector<std::vector<Complex>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<Complex> out(n + 1, 0);
    for (const auto& p : permutations(n)) {
        std::vector<Complex> term{Complex(sign(p))};
        for (int i = 0; i < n; ++i) {
            // entry (i, p[i]) of 1 - tM is delta - t m
            const Complex c0 = i == p[i] - 1 ? 1.0 : 0.0;
            const Complex c1 = -m[i][p[i] - 1];
            std::vector<Complex> next(term.size() + 1, 0);
            for (std::size_t k = 0; k < term.size(); ++k) {
                next[k] += term[k] * c0;
                next[k + 1] += term[k] * c1;
            }
            term = next;
        }
        for (int k = 0; k <= n; ++k) out[k] += term[k];
    }
    return out;
}

// Colored words in window notation enumerated independently of the library.
struct Word {
    std::vector<int> value;
    std::vector<int> color;
};

inline std::vector<Word> all_words(int d, int n) {
    std::vector<Word> out;
    for (const auto& p : permutations(n)) {
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= d;
        for (long long code = 0; code < total; ++code) {
            Word w{p, std::vector<int>(n)};
            long long c = code;
            for (int i = 0; i < n; ++i) {
                w.color[i] = static_cast<int>(c % d);
                c /= d;
            }
            out.push_back(w);
        }
    }
    return out;
}

// Letters of higher color come first; within a color, smaller values first.
inline bool letter_less(int d, const Word& w, int i, int j) {
    if (w.color[i] != w.color[j]) return w.color[i] > w.color[j];
    (void)d;
    return w.value[i] < w.value[j];
}

inline int fmaj(int d, const Word& w) {
    const int n = static_cast<int>(w.value.size());
    int maj = 0, colors = 0;
    for (int i = 0; i + 1 < n; ++i) {
        if (letter_less(d, w, i + 1, i)) maj += i + 1;
    }
    for (int c : w.color) colors += c;
    return d * maj + colors;
}

inline Word inverse(int d, const Word& w) {
    const int n = static_cast<int>(w.value.size());
    Word out{std::vector<int>(n), std::vector<int>(n)};
    for (int i = 0; i < n; ++i) {
        out.value[w.value[i] - 1] = i + 1;
        out.color[w.value[i] - 1] = (d - w.color[i]) % d;
    }
    return out;
}

// Number of multisets of n pairs (a, b) with sum of a = i and sum of b = j, for i, j <= degree.
inline Grid bipartite_partitions(int n, int degree) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a <= degree; ++a) {
        for (int b = 0; b <= degree; ++b) pairs.emplace_back(a, b);
    }
    Grid out;
    // choose a weakly increasing sequence of n pair indices
    std::vector<std::size_t> idx(n, 0);
    auto record = [&] {
        int i = 0, j = 0;
        for (auto k : idx) {
            i += pairs[k].first;
            j += pairs[k].second;
        }
        if (i <= degree && j <= degree) ++out[{i, j}];
    };
    if (n == 0) {
        out[{0, 0}] = 1;
        return out;
    }
    while (true) {
        record();
        int pos = n - 1;
        while (pos >= 0 && idx[pos] + 1 == pairs.size()) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int k = pos + 1; k < n; ++k) idx[k] = idx[pos];
    }
    return out;
}

inline CycloNum random_cyclo(std::mt19937& rng, int m) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), exp(0, 3 * m);
    CycloNum x = CycloNum::zero(m);
    for (int k = 0; k < 3; ++k) {
        bimahonian::Rational r(num(rng), den(rng));
        r.canonicalize();
        x += CycloNum(r, m) * CycloNum::root_of_unity(m, exp(rng));
    }
    return x;
}

}  // namespace oracle
