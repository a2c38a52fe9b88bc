#include "bimahonian/tableaux.hpp"

#include <algorithm>
#include <numeric>

namespace bimahonian {

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidArgument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

MultiPartition::MultiPartition(std::vector<Partition> components) : parts_(std::move(components)) {
    if (parts_.empty()) throw InvalidArgument("MultiPartition: need at least one component");
    for (const auto& p : parts_) {
        if (!is_partition(p)) throw InvalidArgument("MultiPartition: component is not a partition");
    }
}

MultiPartition MultiPartition::from_display_order(std::vector<Partition> display) {
    std::reverse(display.begin(), display.end());
    return MultiPartition(std::move(display));
}

std::vector<Partition> MultiPartition::display_order() const { return {parts_.rbegin(), parts_.rend()}; }

int MultiPartition::size() const {
    int n = 0;
    for (const auto& p : parts_) n += partition_size(p);
    return n;
}

int MultiPartition::global_row(int k, int r) const {
    int offset = 0;
    for (int j = 0; j < k; ++j) offset += static_cast<int>(parts_[j].size());
    return offset + r;
}

std::vector<MultiPartition> multipartitions_of(int d, int n) {
    if (d < 1) throw InvalidArgument("multipartitions_of: d must be positive");
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int m = 0; m <= n; ++m) by_size[m] = partitions_of(m);
    std::vector<MultiPartition> out;
    std::vector<Partition> cur(d);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == d - 1) {
            for (const auto& p : by_size[remaining]) {
                cur[k] = p;
                out.emplace_back(cur);
            }
            return;
        }
        for (int m = remaining; m >= 0; --m) {
            for (const auto& p : by_size[m]) {
                cur[k] = p;
                rec(k + 1, remaining - m);
            }
        }
    };
    rec(0, n);
    return out;
}

SkewTableau::SkewTableau(std::vector<Rows> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw InvalidArgument("SkewTableau: need at least one component");
    std::vector<int> values;
    for (const auto& rows : comps_) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].empty()) throw InvalidArgument("SkewTableau: empty row");
            if (r > 0 && rows[r].size() > rows[r - 1].size()) throw InvalidArgument("SkewTableau: not a partition shape");
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (c > 0 && rows[r][c] <= rows[r][c - 1]) throw InvalidArgument("SkewTableau: row not increasing");
                if (r > 0 && rows[r][c] <= rows[r - 1][c]) throw InvalidArgument("SkewTableau: column not increasing");
                values.push_back(rows[r][c]);
            }
        }
    }
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != static_cast<int>(i) + 1) throw InvalidArgument("SkewTableau: entries are not 1..n");
    }
}

MultiPartition SkewTableau::shape() const {
    std::vector<Partition> parts;
    for (const auto& rows : comps_) {
        Partition p;
        for (const auto& row : rows) p.push_back(static_cast<int>(row.size()));
        parts.push_back(std::move(p));
    }
    return MultiPartition(std::move(parts));
}

int SkewTableau::size() const {
    int n = 0;
    for (const auto& rows : comps_) {
        for (const auto& row : rows) n += static_cast<int>(row.size());
    }
    return n;
}

SkewTableau::Cell SkewTableau::locate(int value) const {
    for (int k = 0; k < d(); ++k) {
        const auto& rows = comps_[k];
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            for (int c = 0; c < static_cast<int>(rows[r].size()); ++c) {
                if (rows[r][c] == value) return {k, r, c};
            }
        }
    }
    throw InvalidArgument("SkewTableau::locate: value " + std::to_string(value) + " not present");
}

void for_each_syt(const MultiPartition& shape, const Budget& budget,
                  const std::function<void(const SkewTableau&)>& visit) {
    const int n = shape.size();
    if (n > budget.max_cells) {
        throw BudgetExceeded("shape has " + std::to_string(n) + " cells, above the cell budget " +
                             std::to_string(budget.max_cells));
    }
    const int d = shape.d();
    std::vector<SkewTableau::Rows> fill(d);
    for (int k = 0; k < d; ++k) fill[k].resize(shape.component(k).size());

    std::function<void(int)> place = [&](int v) {
        if (v > n) {
            visit(SkewTableau(fill));
            return;
        }
        for (int k = 0; k < d; ++k) {
            const Partition& target = shape.component(k);
            auto& rows = fill[k];
            for (std::size_t r = 0; r < target.size(); ++r) {
                const std::size_t len = rows[r].size();
                if (static_cast<int>(len) >= target[r]) continue;
                if (r > 0 && rows[r - 1].size() <= len) continue;
                rows[r].push_back(v);
                place(v + 1);
                rows[r].pop_back();
            }
        }
    };
    place(1);
}

std::vector<SkewTableau> enumerate_syt(const MultiPartition& shape, const Budget& budget) {
    std::vector<SkewTableau> out;
    for_each_syt(shape, budget, [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

TableauStatistics tableau_statistics(const SkewTableau& q) {
    const MultiPartition shape = q.shape();
    const int n = q.size();
    const int d = q.d();
    std::vector<int> row_of(n + 1);
    for (int k = 0; k < d; ++k) {
        const auto& rows = q.components()[k];
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            for (int v : rows[r]) row_of[v] = shape.global_row(k, r);
        }
    }
    TableauStatistics st;
    for (int i = 1; i < n; ++i) {
        if (row_of[i + 1] > row_of[i]) {
            st.des_set.push_back(i);
            st.maj += i;
        }
    }
    st.fmaj = d * st.maj;
    for (int k = 0; k < d; ++k) st.fmaj += k * partition_size(shape.component(k));
    return st;
}

BiPoly fake_degree(const MultiPartition& shape, const Budget& budget) {
    BiPoly f;
    for_each_syt(shape, budget, [&](const SkewTableau& q) { f.add_term(0, tableau_statistics(q).fmaj, CycloNum(1)); });
    return f;
}

namespace {

// Row-inserts x; returns the row of the newly created cell.
int row_insert(SkewTableau::Rows& rows, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({x});
            return static_cast<int>(r);
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return static_cast<int>(r);
        }
        std::swap(*it, x);
    }
}

// Removes the corner cell at the end of row r and reverse-bumps out of row 0.
int reverse_bump(SkewTableau::Rows& rows, int r) {
    int x = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.erase(rows.begin() + r);
    for (int rr = r - 1; rr >= 0; --rr) {
        auto& row = rows[rr];
        auto it = std::lower_bound(row.begin(), row.end(), x);
        --it;  // largest entry below x
        std::swap(*it, x);
    }
    return x;
}

}  // namespace

std::pair<SkewTableau, SkewTableau> colored_rsk(const WreathElem& w) {
    const int d = w.d();
    std::vector<SkewTableau::Rows> p(d), q(d);
    for (int i = 0; i < w.n(); ++i) {
        const int k = w.colors()[i];
        const int r = row_insert(p[k], w.perm()[i]);
        if (r == static_cast<int>(q[k].size())) q[k].emplace_back();
        q[k][r].push_back(i + 1);
    }
    return {SkewTableau(std::move(p)), SkewTableau(std::move(q))};
}

WreathElem rsk_inverse(const SkewTableau& p, const SkewTableau& q) {
    if (!(p.shape() == q.shape())) throw InvalidArgument("rsk_inverse: P and Q have different shapes");
    const int n = q.size();
    const int d = q.d();
    auto prow = p.components();
    auto qrow = q.components();
    std::vector<int> perm(n), colors(n);
    for (int i = n; i >= 1; --i) {
        const SkewTableau::Cell cell = SkewTableau(qrow).locate(i);
        auto& qr = qrow[cell.component];
        qr[cell.row].pop_back();
        if (qr[cell.row].empty()) qr.erase(qr.begin() + cell.row);
        perm[i - 1] = reverse_bump(prow[cell.component], cell.row);
        colors[i - 1] = cell.component;
    }
    return WreathElem(d, std::move(perm), std::move(colors));
}

namespace {

long long component_image(const GaloisAut& sigma, int d, int k) {
    if (sigma.conductor() % d != 0) {
        throw ConductorMismatch("galois_on_tableau: conductor " + std::to_string(sigma.conductor()) +
                                " is not divisible by d=" + std::to_string(d));
    }
    return (sigma.s() % d) * k % d;
}

}  // namespace

SkewTableau galois_on_tableau(const GaloisAut& sigma, const SkewTableau& t) {
    const int d = t.d();
    std::vector<SkewTableau::Rows> comps(d);
    for (int k = 0; k < d; ++k) comps[component_image(sigma, d, k)] = t.components()[k];
    return SkewTableau(std::move(comps));
}

MultiPartition galois_on_shape(const GaloisAut& sigma, const MultiPartition& shape) {
    const int d = shape.d();
    std::vector<Partition> comps(d);
    for (int k = 0; k < d; ++k) comps[component_image(sigma, d, k)] = shape.component(k);
    return MultiPartition(std::move(comps));
}

}  // namespace bimahonian
