#pragma once

#include <map>
#include <vector>

#include "bimahonian/cyclotomic.hpp"
#include "bimahonian/error.hpp"
#include "bimahonian/tableaux.hpp"

namespace bimahonian {

/// A class function on S_n, one value per cycle type.
struct ClassFunction {
    int n = 0;
    std::map<Partition, CycloNum> values;

    const CycloNum& at(const Partition& cycle_type) const;
};

Integer factorial(int n);
/// Cycle type of a permutation of 1..n, parts in decreasing order.
Partition cycle_type(const std::vector<int>& perm);
/// n! / prod_i (m_i! i^m_i).
Integer class_size(const Partition& cycle_type);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
long long mn_value(const Partition& lambda, const Partition& mu);
ClassFunction mn_character(const Partition& lambda, const Budget& budget = {});

/// Character of Ind_{C_n}^{S_n} rho^i where C_n is generated by (1 2 ... n)
/// and rho sends that generator to zeta_n, summed over all of S_n.
ClassFunction induced_cyclic_character(int n, long long i, const Budget& budget = {});

/// (1/n!) sum over classes of |class| f(class) conj(g(class)).
CycloNum intertwining(const ClassFunction& f, const ClassFunction& g);

}  // namespace bimahonian
