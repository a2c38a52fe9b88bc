#include "bimahonian/wreath.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace bimahonian {

WreathElem::WreathElem(int d, std::vector<int> perm, std::vector<int> colors)
    : d_(d), perm_(std::move(perm)), colors_(std::move(colors)) {
    if (d_ < 1) throw InvalidArgument("WreathElem: d must be positive");
    if (perm_.size() != colors_.size()) throw InvalidArgument("WreathElem: perm and colors differ in length");
    const int n = static_cast<int>(perm_.size());
    std::vector<bool> seen(n + 1, false);
    for (int v : perm_) {
        if (v < 1 || v > n || seen[v]) throw InvalidArgument("WreathElem: perm is not a bijection of 1..n");
        seen[v] = true;
    }
    for (int& c : colors_) c = static_cast<int>(mod_ll(c, d_));
}

WreathElem WreathElem::identity(int d, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    return WreathElem(d, std::move(perm), std::vector<int>(n, 0));
}

bool WreathElem::is_identity() const {
    for (int i = 0; i < n(); ++i) {
        if (perm_[i] != i + 1 || colors_[i] != 0) return false;
    }
    return true;
}

WreathElem operator*(const WreathElem& x, const WreathElem& y) {
    if (x.d_ != y.d_ || x.n() != y.n()) throw InvalidArgument("group multiplication: dimension mismatch");
    const int n = x.n();
    std::vector<int> perm(n), colors(n);
    for (int i = 0; i < n; ++i) {
        const int mid = y.perm_[i] - 1;
        perm[i] = x.perm_[mid];
        colors[i] = (y.colors_[i] + x.colors_[mid]) % x.d_;
    }
    return WreathElem(x.d_, std::move(perm), std::move(colors));
}

WreathElem WreathElem::inverse() const {
    std::vector<int> perm(n()), colors(n());
    for (int i = 0; i < n(); ++i) {
        perm[perm_[i] - 1] = i + 1;
        colors[perm_[i] - 1] = (d_ - colors_[i]) % d_;
    }
    return WreathElem(d_, std::move(perm), std::move(colors));
}

WreathElem WreathElem::conj() const {
    std::vector<int> colors(n());
    for (int i = 0; i < n(); ++i) colors[i] = (d_ - colors_[i]) % d_;
    return WreathElem(d_, perm_, std::move(colors));
}

WreathElem WreathElem::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    WreathElem result = identity(d_, n());
    WreathElem base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

int WreathElem::order() const {
    long long ord = 1;
    for (const auto& f : char_poly_factors(*this)) {
        const long long block = static_cast<long long>(f.length) * (d_ / gcd_ll(f.colorsum, d_));
        ord = lcm_ll(ord, block);
    }
    return static_cast<int>(ord);
}

std::vector<std::vector<CycloNum>> WreathElem::matrix() const {
    std::vector<std::vector<CycloNum>> m(n(), std::vector<CycloNum>(n(), CycloNum::zero(d_)));
    for (int i = 0; i < n(); ++i) m[perm_[i] - 1][i] = CycloNum::root_of_unity(d_, colors_[i]);
    return m;
}

WreathElem group_arith(const WreathElem& x, const WreathElem& y, GroupOp op) {
    switch (op) {
        case GroupOp::mul: return x * y;
        case GroupOp::inv: return x.inverse();
        case GroupOp::conj_by: return y * x * y.inverse();
    }
    throw InvalidArgument("group_arith: unknown op");
}

WreathElem galois_on_element(const GaloisAut& sigma, const WreathElem& w) {
    if (sigma.conductor() % w.d() != 0) {
        throw ConductorMismatch("galois_on_element: conductor " + std::to_string(sigma.conductor()) +
                                " is not divisible by d=" + std::to_string(w.d()));
    }
    std::vector<int> colors(w.n());
    const long long s = sigma.s() % w.d();
    for (int i = 0; i < w.n(); ++i) colors[i] = static_cast<int>((s * w.colors()[i]) % w.d());
    return WreathElem(w.d(), w.perm(), std::move(colors));
}

int letter_rank(int d, int n, int color, int value) { return (d - 1 - color) * n + (value - 1); }

WordStatistics word_statistics(const WreathElem& w) {
    const int n = w.n();
    const int d = w.d();
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[i] = letter_rank(d, n, w.colors()[i], w.perm()[i]);
    WordStatistics st;
    st.r.assign(d, 0);
    for (int i = 0; i < n; ++i) ++st.r[w.colors()[i]];
    for (int i = 0; i + 1 < n; ++i) {
        if (rank[i + 1] < rank[i]) {
            st.des_set.push_back(i + 1);
            st.maj += i + 1;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rank[j] < rank[i]) ++st.inv;
        }
    }
    st.fmaj = d * st.maj;
    for (int k = 0; k < d; ++k) st.fmaj += k * st.r[k];
    return st;
}

unsigned long long group_order(int d, int n) {
    if (d < 1 || n < 0) throw InvalidArgument("group order: need d >= 1, n >= 0");
    constexpr unsigned long long cap = 1ULL << 62;
    unsigned long long order = 1;
    for (int i = 1; i <= n; ++i) {
        if (order > cap / (static_cast<unsigned long long>(d) * i)) return cap;
        order *= static_cast<unsigned long long>(d) * i;
    }
    return order;
}

void for_each_element(int d, int n, const Budget& budget, const std::function<void(const WreathElem&)>& visit) {
    if (n < 1) throw InvalidArgument("enumerate_group: n must be positive");
    const unsigned long long order = group_order(d, n);
    if (order > budget.max_group_order) {
        throw BudgetExceeded("|G(" + std::to_string(d) + ",1," + std::to_string(n) + ")| = " + std::to_string(order) +
                             " exceeds the group-order budget " + std::to_string(budget.max_group_order));
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> colors(n, 0);
        while (true) {
            visit(WreathElem(d, perm, colors));
            int pos = 0;
            while (pos < n && ++colors[pos] == d) colors[pos++] = 0;
            if (pos == n) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<WreathElem> enumerate_group(int d, int n, const Budget& budget) {
    std::vector<WreathElem> out;
    out.reserve(static_cast<std::size_t>(std::min<unsigned long long>(group_order(d, n), budget.max_group_order)));
    for_each_element(d, n, budget, [&](const WreathElem& w) { out.push_back(w); });
    return out;
}

std::vector<CycleFactor> char_poly_factors(const WreathElem& w) {
    const int n = w.n();
    std::vector<bool> seen(n, false);
    std::vector<CycleFactor> out;
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        int len = 0, sum = 0;
        for (int i = start; !seen[i]; i = w.perm()[i] - 1) {
            seen[i] = true;
            ++len;
            sum += w.colors()[i];
        }
        out.push_back({len, sum % w.d()});
    }
    return out;
}

BiPoly det_one_minus(const WreathElem& w, Var v) {
    BiPoly det = BiPoly::constant(CycloNum::one(w.d()));
    for (const auto& f : char_poly_factors(w)) {
        BiPoly factor = BiPoly::constant(CycloNum::one(w.d()));
        const CycloNum c = -CycloNum::root_of_unity(w.d(), f.colorsum);
        factor.add_term(v == Var::t ? f.length : 0, v == Var::q ? f.length : 0, c);
        det = det * factor;
    }
    return det;
}

DegreeData degrees(int d, int n) {
    if (d < 1 || n < 1) throw InvalidArgument("degrees: need d >= 1, n >= 1");
    DegreeData out;
    for (int i = 1; i <= n; ++i) {
        const int deg = d == 1 ? i : d * i;
        out.degrees.push_back(deg);
        out.n_star += deg - 1;
    }
    return out;
}

std::vector<WreathElem> reflections(int d, int n, const Budget& budget) {
    std::vector<WreathElem> out;
    for_each_element(d, n, budget, [&](const WreathElem& w) {
        int non_unit = 0;
        for (const auto& f : char_poly_factors(w)) non_unit += f.length - (f.colorsum == 0 ? 1 : 0);
        if (non_unit == 1) out.push_back(w);
    });
    return out;
}

namespace {

int parse_int(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw InvalidArgument("malformed window letter '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

WreathElem parse_window(int d, std::string_view text) {
    if (d < 1) throw InvalidArgument("parse_window: d must be positive");
    std::vector<int> perm, colors;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        pos = comma + 1;
        std::size_t colon = tok.find(':');
        if (colon != std::string_view::npos) {
            const int k = parse_int(tok.substr(0, colon));
            if (k < 0 || k >= d) throw InvalidArgument("window letter color out of range 0.." + std::to_string(d - 1));
            colors.push_back(k);
            perm.push_back(parse_int(tok.substr(colon + 1)));
        } else {
            if (d > 2) throw InvalidArgument("signed window shorthand needs d <= 2; use k:j letters");
            const int v = parse_int(tok);
            if (v < 0 && d == 1) throw InvalidArgument("negative letter in a window for d = 1");
            colors.push_back(v < 0 ? 1 : 0);
            perm.push_back(v < 0 ? -v : v);
        }
    }
    if (perm.empty()) throw InvalidArgument("empty window word");
    return WreathElem(d, std::move(perm), std::move(colors));
}

std::string format_window(const WreathElem& w) {
    std::ostringstream os;
    for (int i = 0; i < w.n(); ++i) {
        if (i) os << ",";
        os << w.colors()[i] << ":" << w.perm()[i];
    }
    return os.str();
}

GroupIndex::GroupIndex(int d, int n, const Budget& budget) : d_(d), n_(n), elems_(enumerate_group(d, n, budget)) {
    index_.reserve(elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(key(elems_[i]), i);
}

std::uint64_t GroupIndex::key(const WreathElem& w) const {
    std::uint64_t k = 0;
    const std::uint64_t base = static_cast<std::uint64_t>(n_) * d_;
    for (int i = n_ - 1; i >= 0; --i) k = k * base + static_cast<std::uint64_t>((w.perm()[i] - 1) * d_ + w.colors()[i]);
    return k;
}

std::size_t GroupIndex::index_of(const WreathElem& w) const {
    if (w.d() != d_ || w.n() != n_) throw InvalidArgument("GroupIndex: element from a different group");
    return index_.at(key(w));
}

}  // namespace bimahonian
