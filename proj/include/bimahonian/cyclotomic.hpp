#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bimahonian {

using Rational = mpq_class;
using Integer = mpz_class;

int euler_phi(int m);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);
// Mathematical modulus: result in [0, m).
long long mod_ll(long long a, long long m);

// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int m);

/// An exact element of the cyclotomic field Q(zeta_m), stored as its
/// coordinate vector in the basis 1, zeta, ..., zeta^(phi(m)-1) modulo the
/// m-th cyclotomic polynomial. The representation is canonical, so two values
/// with the same conductor are equal iff their coordinate vectors agree.
///
/// Arithmetic requires equal conductors; use embed() (or lift_common()) to
/// move a value into a larger field first.
class CycloNum {
public:
    CycloNum();  // zero of Q
    CycloNum(long long value);  // NOLINT: integers promote implicitly
    explicit CycloNum(const Rational& value, int conductor = 1);
    CycloNum(int conductor, std::vector<Rational> coeffs);

    /// zeta_m^a, with a reduced modulo m.
    static CycloNum root_of_unity(int m, long long a);
    static CycloNum zero(int m);
    static CycloNum one(int m);

    int conductor() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    bool is_integer() const;
    Rational rational_value() const;  // throws InvalidArgument unless rational

    /// Same field element with conductor m2; m2 must be a multiple of m.
    CycloNum embed(int m2) const;
    CycloNum conj() const;
    CycloNum inverse() const;
    CycloNum pow(long long e) const;

    CycloNum operator-() const;
    CycloNum& operator+=(const CycloNum& y);
    CycloNum& operator-=(const CycloNum& y);
    CycloNum& operator*=(const CycloNum& y);
    CycloNum& operator/=(const CycloNum& y);

    friend CycloNum operator+(CycloNum x, const CycloNum& y) { return x += y; }
    friend CycloNum operator-(CycloNum x, const CycloNum& y) { return x -= y; }
    friend CycloNum operator*(CycloNum x, const CycloNum& y) { return x *= y; }
    friend CycloNum operator/(CycloNum x, const CycloNum& y) { return x /= y; }

    // Compares as field elements; values of different conductor are compared
    // inside the lcm field.
    friend bool operator==(const CycloNum& x, const CycloNum& y);

    // Human readable form such as "1 - 2*z5^3"; not a serialization format.
    std::string to_string() const;

private:
    void require_same_field(const CycloNum& y, const char* op) const;

    int m_ = 1;
    std::vector<Rational> c_;
};

enum class ArithOp { add, sub, mul, div };
CycloNum arith(const CycloNum& x, const CycloNum& y, ArithOp op);
CycloNum embed(const CycloNum& x, int m2);

/// Both arguments represented over lcm of their conductors.
std::pair<CycloNum, CycloNum> lift_common(const CycloNum& x, const CycloNum& y);

/// The field automorphism zeta_m -> zeta_m^s of Q(zeta_m).
class GaloisAut {
public:
    GaloisAut(int conductor, long long s);

    static GaloisAut identity(int conductor) { return GaloisAut(conductor, 1); }
    static GaloisAut conjugation(int conductor) { return GaloisAut(conductor, -1); }

    int conductor() const { return m_; }
    long long s() const { return s_; }

    GaloisAut compose(const GaloisAut& inner) const;  // this after inner
    GaloisAut inverse() const;

    /// An automorphism of Q(zeta_{lcm(m, m2)}) restricting to this one; picks
    /// the least positive exponent congruent to s that is a unit mod the lcm.
    GaloisAut lift(int m2) const;

    friend bool operator==(const GaloisAut&, const GaloisAut&) = default;

private:
    int m_;
    long long s_;
};

CycloNum galois_apply(const GaloisAut& sigma, const CycloNum& x);

/// Least k >= 1 with x^k = 1, or nullopt when x is not a root of unity.
std::optional<int> mult_order(const CycloNum& x);

bool is_fixed_by_conjugation(const CycloNum& x);

}  // namespace bimahonian
