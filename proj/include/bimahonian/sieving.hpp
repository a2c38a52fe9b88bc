#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/error.hpp"
#include "bimahonian/poly.hpp"
#include "bimahonian/wreath.hpp"

namespace bimahonian {

/// A root of unity zeta_conductor^exponent, kept in exponent form so that
/// powers and products stay integer arithmetic.
struct RootOfUnity {
    int conductor = 1;
    long long exponent = 0;

    int order() const;
    CycloNum value() const;
    RootOfUnity pow(long long e) const;
};

struct RegularCertificate {
    WreathElem c = WreathElem::identity(1, 1);
    RootOfUnity eigen;
    CycloNum eigenvalue;
    int order = 1;
    std::vector<CycloNum> witness;  // c * witness = eigenvalue * witness
};

/// Conductor holding every eigenvalue of every element of G(d,1,n).
int eigenvalue_conductor(int d, int n);

/// Reflecting hyperplanes: (i, j, k) is x_i = zeta_d^k x_j for i < j, and
/// (i, -1, 0) is x_i = 0 (present when d >= 2). Indices are 0-based.
struct Hyperplane {
    int i, j, k;
};
std::vector<Hyperplane> hyperplanes(int d, int n);

/// One certificate per regular eigenvalue of c, in increasing exponent
/// order; empty when c is not regular.
std::vector<RegularCertificate> is_regular(const WreathElem& c);

/// Re-checks a certificate from scratch: eigen-equation, every hyperplane,
/// and that the eigenvalue order matches the group order of c.
bool verify_certificate(const RegularCertificate& cert);

/// Each cyclic subgroup generated by a regular element, represented by its
/// first regular generator in enumeration order and that generator's first
/// certificate.
std::vector<RegularCertificate> regular_cyclic_subgroups(int d, int n, const Budget& budget = {});

struct BiCSPInstance {
    int d = 1, n = 1;
    RegularCertificate c, c_prime;
    GaloisAut sigma = GaloisAut::identity(1);
    long long s = 1;  // sigma(omega) = omega^s, reduced mod the order of c
    BiPoly x;         // W^sigma(t,q)
};

/// Derives s and X(t,q) = W^sigma(t,q). Throws ConductorMismatch when sigma's
/// conductor does not contain d and both eigenvalues.
BiCSPInstance make_bicsp_instance(const RegularCertificate& c, const RegularCertificate& c_prime,
                                  const GaloisAut& sigma, const Budget& budget = {});
/// Same, reusing an already computed W^sigma(t,q).
BiCSPInstance make_bicsp_instance(const RegularCertificate& c, const RegularCertificate& c_prime,
                                  const GaloisAut& sigma, BiPoly x);

/// (c^i, c'^j) . w = c^(s*i) w c'^(-j).
WreathElem twisted_action(const BiCSPInstance& inst, long long i, long long j, const WreathElem& w);

struct Orbit {
    std::size_t representative = 0;  // index into the group enumeration
    std::size_t size = 0;
    std::vector<std::pair<int, int>> stabilizer;       // every (i, j) fixing the representative
    std::vector<std::pair<int, int>> stabilizer_gens;  // a generating set of it
};

std::vector<Orbit> orbits_and_stabilizers(const BiCSPInstance& inst, const GroupIndex* index = nullptr);

struct BiCSPReport {
    int k = 1, l = 1;
    std::vector<std::vector<CycloNum>> evaluations;     // X(omega^-i, omega'^-j)
    std::vector<std::vector<long long>> fixed_points;   // |{w : (c^i, c'^j) w = w}|
    std::vector<std::vector<long long>> a;              // coefficients of X mod (t^k-1, q^l-1)
    std::vector<std::vector<long long>> orbit_counts;   // orbits with stabilizer in ker rho^(i,j)
    std::vector<Orbit> orbits;
    bool pass_i = false;
    bool pass_ii = false;
    bool passed() const { return pass_i && pass_ii; }
};

/// Pass a GroupIndex for the instance's group to avoid rebuilding it.
BiCSPReport check_bicsp(const BiCSPInstance& inst, const GroupIndex* index = nullptr);

struct SigmaPowerRow {
    std::vector<int> shape;  // partition of n
    CycloNum fake_value;     // f^{sigma(lambda)}(omega^-1)
    CycloNum character;      // chi^lambda(c^s)
    bool equal = false;
};

struct SigmaPowerReport {
    long long s = 1;
    std::vector<SigmaPowerRow> rows;
    bool passed() const;
};

/// For the symmetric group only: f^{sigma(lambda)}(omega^-1) = chi^lambda(c^s)
/// for every partition lambda of n. Throws InvalidArgument when d != 1.
SigmaPowerReport verify_sigma_power(const RegularCertificate& cert, const GaloisAut& sigma);

/// p(zeta_M^a, zeta_M^b) for an integral polynomial, via exponent buckets.
CycloNum eval_integral_at_roots(const BiPoly& p, int conductor, long long a, long long b);

}  // namespace bimahonian
