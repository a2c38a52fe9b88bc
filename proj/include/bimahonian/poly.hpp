#pragma once

#include <array>
#include <map>
#include <utility>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/error.hpp"

namespace bimahonian {

enum class Var { t, q };

/// Sparse polynomial in t and q with exact coefficients. The coefficient
/// domain is Q(zeta_m) for the polynomial's conductor m; m = 1 is the
/// rational domain. Zero coefficients are never stored.
///
/// Mixing domains promotes both operands to the lcm conductor, so rational
/// polynomials embed into cyclotomic ones automatically.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;  // (t-degree, q-degree)
    using TermMap = std::map<Exponent, CycloNum>;

    BiPoly() = default;
    explicit BiPoly(int conductor) : m_(conductor) {}

    static BiPoly constant(const CycloNum& c);
    static BiPoly monomial(const CycloNum& c, int i, int j);
    static BiPoly var(Var v);

    int conductor() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    CycloNum coeff(int i, int j) const;
    void add_term(int i, int j, const CycloNum& c);

    // -1 for the zero polynomial.
    int max_t_degree() const;
    int max_q_degree() const;

    BiPoly embed(int m2) const;
    bool is_integral() const;  // every coefficient a rational integer
    BiPoly swap_vars() const;
    BiPoly scaled(const CycloNum& c) const;
    // Restrict to the rational subfield; throws when a coefficient is not rational.
    BiPoly to_rational() const;

    /// Sets the given variable to 1.
    BiPoly specialize_to_one(Var v) const;
    /// Substitutes t <- a, leaving a polynomial in q alone.
    BiPoly substitute_t(const CycloNum& a) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& r);
    BiPoly& operator-=(const BiPoly& r);
    friend BiPoly operator+(BiPoly p, const BiPoly& r) { return p += r; }
    friend BiPoly operator-(BiPoly p, const BiPoly& r) { return p -= r; }
    friend BiPoly operator*(const BiPoly& p, const BiPoly& r);

    // Equality of the represented polynomials, independent of conductor.
    friend bool operator==(const BiPoly& p, const BiPoly& r);

    std::string to_string() const;

private:
    void promote(int m2);

    int m_ = 1;
    TermMap terms_;
};

enum class PolyOp { add, sub, mul };
BiPoly poly_arith(const BiPoly& p, const BiPoly& r, PolyOp op);

class InexactDivision : public Error {
public:
    explicit InexactDivision(BiPoly remainder);
    const BiPoly& remainder() const { return remainder_; }

private:
    BiPoly remainder_;
};

/// Quotient p / r when r divides p exactly; otherwise throws InexactDivision
/// carrying the remainder of lex-order multivariate division.
BiPoly exact_div(const BiPoly& p, const BiPoly& r);

/// (x;x)_n = (1-x)(1-x^2)...(1-x^n).
BiPoly qpochhammer(int n, Var v = Var::q);
/// [k]_x = 1 + x + ... + x^(k-1).
BiPoly q_integer(int k, Var v = Var::q);

CycloNum eval_at_roots(const BiPoly& p, const CycloNum& a, const CycloNum& b);

/// Representative of p modulo (t^k - 1, q^l - 1) with exponents below (k, l).
BiPoly reduce_mod_cyclic(const BiPoly& p, int k, int l);

/// Whether t^i q^j and t^(N-i) q^(N-j) always carry the same coefficient.
bool is_palindromic(const BiPoly& p, int n_star);

/// Truncated power series in t, q, u. Every stored exponent lies within the
/// bounds and every product discards terms beyond them.
class TruncSeries {
public:
    using Exponent = std::array<int, 3>;
    using TermMap = std::map<Exponent, CycloNum>;

    TruncSeries(int dt, int dq, int du, int conductor = 1);
    static TruncSeries from_poly(const BiPoly& p, int dt, int dq, int du);
    static TruncSeries monomial(const CycloNum& c, Exponent e, int dt, int dq, int du);

    Exponent bounds() const { return {dt_, dq_, du_}; }
    int conductor() const { return m_; }
    const TermMap& terms() const { return terms_; }
    CycloNum coeff(int i, int j, int k) const;
    void add_term(Exponent e, const CycloNum& c);

    TruncSeries embed(int m2) const;
    /// Drops u (requires no u terms) and returns the polynomial part.
    BiPoly to_poly() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

private:
    friend TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries series_reciprocal(const TruncSeries& a);

    bool in_bounds(const Exponent& e) const { return e[0] <= dt_ && e[1] <= dq_ && e[2] <= du_; }

    int dt_, dq_, du_;
    int m_;
    TermMap terms_;
};

// Binary operations use the componentwise minimum of the operands' bounds.
TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Throws InvalidArgument when the constant term is zero.
TruncSeries series_reciprocal(const TruncSeries& a);

enum class SeriesOp { add, mul, reciprocal };
TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op);

}  // namespace bimahonian
