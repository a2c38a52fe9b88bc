#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/error.hpp"
#include "bimahonian/poly.hpp"

namespace bimahonian {

enum class Method { fake_degree, fmaj_sum, molien, wright_recurrence };

const char* method_name(Method m);
Method parse_method(const std::string& name);

struct DistributionRequest {
    int d = 1;
    int n = 1;
    GaloisAut sigma = GaloisAut::identity(1);
    Method method = Method::molien;
};

/// prod_i [d_i]_q, the mahonian distribution of G(d,1,n).
BiPoly mahonian(int d, int n);

/// sum over multipartitions lambda of f^{sigma(lambda)}(t) f^{conj(lambda)}(q).
BiPoly bimahonian_fake(int d, int n, const GaloisAut& sigma, const Budget& budget = {});

/// sum over w of q^fmaj(w) t^fmaj(sigma(w^-1)).
BiPoly bimahonian_fmaj(int d, int n, const GaloisAut& sigma, const Budget& budget = {});

struct MolienOptions {
    // Sum once per (cycle data of w, cycle data of sigma(w)) class instead of
    // once per element.
    bool aggregate_cycle_types = false;
};

/// (1/|W|) sum_w prod_i (1-t^{d_i})(1-q^{d_i}) / (det(1-tw) det(1-q sigma(w))),
/// expanded as a truncated series past degree N* in each variable. Throws
/// VerificationFailure when the result is not an integral polynomial of
/// degree at most N*.
BiPoly bimahonian_molien(int d, int n, const GaloisAut& sigma, const Budget& budget = {},
                         const MolienOptions& options = {});

/// S_n(t,q) for the symmetric group from the logarithmic-derivative
/// recurrence; every intermediate division must be exact.
BiPoly wright_recurrence(int n);

BiPoly bimahonian(const DistributionRequest& req, const Budget& budget = {});

/// S_n(t,q) via fake degrees, memoized per n for repeated use.
const BiPoly& type_a_bimahonian(int n);

/// sum of t^a q^b over a, b in [0, d) with a + s*b = 0 mod d.
BiPoly cyclic_closed_form(int d, long long s);

struct GordonSides {
    int n = 0, ell = 0, m = 0, r = 0;
    BiPoly lhs;  // S_n(omega, q)
    BiPoly rhs;  // (q;q)_n / ((q;q)_r (1-q^ell)^m) * S_r(omega, q)
    bool equal = false;
};

/// Both sides of the root-of-unity specialization identity for t = omega, a
/// primitive ell-th root of unity. Throws InvalidArgument if omega does not
/// have order ell.
GordonSides gordon_specialize(int n, int ell, const CycloNum& omega);

struct GordonEvaluation {
    CycloNum value;                      // S_n(omega, omega')
    std::optional<CycloNum> predicted;   // closed form when one applies
    std::string rule;                    // "unequal-orders", "equal-orders" or "none"
    bool holds = true;
};

GordonEvaluation gordon_evaluate(int n, const CycloNum& omega, const CycloNum& omega_prime);

/// prod_{0<=i,j<=D} 1/(1 - t^i q^j u) truncated to degree (D, D, N).
TruncSeries genfun_lhs(int max_n, int degree);
/// sum_{n<=N} u^n S_n(t,q) / ((t;t)_n (q;q)_n) truncated to degree (D, D, N).
TruncSeries genfun_rhs(int max_n, int degree);
/// Number of multisets of n exponent pairs summing to (a, b), as a series
/// sum count * t^a q^b u^n within the same truncation.
TruncSeries bipartite_partition_series(int max_n, int degree);

struct GenfunReport {
    int max_n = 0, degree = 0;
    bool series_equal = false;
    bool multiset_equal = false;
    bool passed() const { return series_equal && multiset_equal; }
};

GenfunReport genfun_check(int max_n, int degree);

}  // namespace bimahonian
