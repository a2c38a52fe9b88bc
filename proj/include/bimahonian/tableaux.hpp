#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/error.hpp"
#include "bimahonian/poly.hpp"
#include "bimahonian/wreath.hpp"

namespace bimahonian {

using Partition = std::vector<int>;

bool is_partition(const Partition& p);
int partition_size(const Partition& p);
/// Partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// A d-tuple of partitions (lambda^0, ..., lambda^{d-1}); component(k) is
/// lambda^k. The planar picture stacks lambda^0 on top, then lambda^1 below
/// and to the left of it, and so on down to lambda^{d-1}.
class MultiPartition {
public:
    explicit MultiPartition(std::vector<Partition> components);

    /// Components listed as [lambda^{d-1}, ..., lambda^0].
    static MultiPartition from_display_order(std::vector<Partition> display);
    std::vector<Partition> display_order() const;

    int d() const { return static_cast<int>(parts_.size()); }
    int size() const;
    const Partition& component(int k) const { return parts_[k]; }
    const std::vector<Partition>& components() const { return parts_; }

    /// Global row of row r of component k in the planar picture.
    int global_row(int k, int r) const;

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> parts_;
};

std::vector<MultiPartition> multipartitions_of(int d, int n);

/// Standard filling of a MultiPartition: rows[k][r][c] is the entry in row r,
/// column c of component k.
class SkewTableau {
public:
    using Rows = std::vector<std::vector<int>>;

    explicit SkewTableau(std::vector<Rows> components);

    MultiPartition shape() const;
    int d() const { return static_cast<int>(comps_.size()); }
    int size() const;
    const std::vector<Rows>& components() const { return comps_; }

    struct Cell {
        int component, row, col;
    };
    Cell locate(int value) const;

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
    friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

private:
    std::vector<Rows> comps_;
};

void for_each_syt(const MultiPartition& shape, const Budget& budget,
                  const std::function<void(const SkewTableau&)>& visit);
std::vector<SkewTableau> enumerate_syt(const MultiPartition& shape, const Budget& budget = {});

struct TableauStatistics {
    std::vector<int> des_set;
    int maj = 0;
    int fmaj = 0;
};

/// Des(Q) = { i : i+1 sits in a strictly lower row of the planar picture }.
TableauStatistics tableau_statistics(const SkewTableau& q);

/// Sum over standard tableaux of q^fmaj, a polynomial in q alone.
BiPoly fake_degree(const MultiPartition& shape, const Budget& budget = {});

/// Letters of color k are row-inserted by value into component k of P; the
/// position is recorded in component k of Q.
std::pair<SkewTableau, SkewTableau> colored_rsk(const WreathElem& w);
WreathElem rsk_inverse(const SkewTableau& p, const SkewTableau& q);

/// Relabels component k as component s*k mod d, the direction under which
/// colored_rsk(sigma(w)) = (sigma(P), sigma(Q)).
SkewTableau galois_on_tableau(const GaloisAut& sigma, const SkewTableau& t);
MultiPartition galois_on_shape(const GaloisAut& sigma, const MultiPartition& shape);

}  // namespace bimahonian
