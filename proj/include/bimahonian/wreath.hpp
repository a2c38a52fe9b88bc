#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/error.hpp"
#include "bimahonian/poly.hpp"

namespace bimahonian {

/// An element of G(d,1,n) = Z/dZ wr S_n in window notation. The element sends
/// e_i to zeta_d^colors[i] e_perm[i]; equivalently its window word has letter
/// w_i = (color colors[i], value perm[i]). perm holds values 1..n.
class WreathElem {
public:
    WreathElem(int d, std::vector<int> perm, std::vector<int> colors);

    static WreathElem identity(int d, int n);

    int d() const { return d_; }
    int n() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    const std::vector<int>& colors() const { return colors_; }

    bool is_identity() const;
    WreathElem inverse() const;
    /// Color negation, i.e. entrywise complex conjugation of the matrix.
    WreathElem conj() const;
    WreathElem pow(long long e) const;
    int order() const;

    /// Monomial matrix over Q(zeta_d); entry (perm[i]-1, i) is zeta^colors[i].
    std::vector<std::vector<CycloNum>> matrix() const;

    friend WreathElem operator*(const WreathElem& x, const WreathElem& y);
    friend bool operator==(const WreathElem&, const WreathElem&) = default;
    friend auto operator<=>(const WreathElem&, const WreathElem&) = default;

private:
    int d_;
    std::vector<int> perm_;
    std::vector<int> colors_;
};

enum class GroupOp { mul, inv, conj_by };

/// mul: x*y; inv: x^-1 (y ignored); conj_by: y x y^-1.
WreathElem group_arith(const WreathElem& x, const WreathElem& y, GroupOp op);

/// Applies sigma entrywise: colors k -> s*k mod d.
WreathElem galois_on_element(const GaloisAut& sigma, const WreathElem& w);

struct WordStatistics {
    std::vector<int> des_set;
    int inv = 0;
    int maj = 0;
    int fmaj = 0;
    std::vector<int> r;  // r[k] = letters from the k-th subalphabet
};

/// Rank of the letter (color, value) in the order where higher colors come
/// first and, within a color, values increase.
int letter_rank(int d, int n, int color, int value);

WordStatistics word_statistics(const WreathElem& w);

unsigned long long group_order(int d, int n);

/// Visits every element exactly once in a fixed order: permutations in
/// lexicographic order, colors as a base-d counter with position 1 least
/// significant.
void for_each_element(int d, int n, const Budget& budget, const std::function<void(const WreathElem&)>& visit);
std::vector<WreathElem> enumerate_group(int d, int n, const Budget& budget = {});

struct CycleFactor {
    int length;    // cycle length l_c
    int colorsum;  // sum of colors along the cycle, mod d
    friend auto operator<=>(const CycleFactor&, const CycleFactor&) = default;
};

/// det(1 - x w) = prod over cycles of (1 - zeta_d^colorsum x^length).
std::vector<CycleFactor> char_poly_factors(const WreathElem& w);
BiPoly det_one_minus(const WreathElem& w, Var v);

struct DegreeData {
    std::vector<int> degrees;
    int n_star = 0;  // number of reflections
};
DegreeData degrees(int d, int n);

std::vector<WreathElem> reflections(int d, int n, const Budget& budget = {});

/// Parses "k:j,k:j,..." (letter zeta^k j) or, when d <= 2, the signed
/// shorthand "2,-1".
WreathElem parse_window(int d, std::string_view text);
/// Canonical "k:j" form.
std::string format_window(const WreathElem& w);

/// All elements of a group with an index lookup.
class GroupIndex {
public:
    GroupIndex(int d, int n, const Budget& budget = {});

    int d() const { return d_; }
    int n() const { return n_; }
    std::size_t size() const { return elems_.size(); }
    const std::vector<WreathElem>& elements() const { return elems_; }
    const WreathElem& at(std::size_t i) const { return elems_[i]; }
    std::size_t index_of(const WreathElem& w) const;

private:
    std::uint64_t key(const WreathElem& w) const;

    int d_, n_;
    std::vector<WreathElem> elems_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace bimahonian
