#pragma once

#include "fockcb/fock.hpp"

#include <utility>
#include <vector>

namespace fockcb {

/// sigma_i on n-cores: swap runners i and i+1, or for i = 0 swap the first
/// and last runners moving one bead from the last to the first.
Partition weyl_reflect_core(const Partition& tau, int i, int n);

/// k_i = a_{i+1} - a_i (i != 0), a_1 - a_n - 1 (i = 0).
int scopes_k(const Partition& tau, int i, int n);

/// pi_i: remove the k_i removable i-nodes. Throws DomainError
/// (from rouquier.hpp) when the n-weight exceeds k_i.
Partition scopes_bijection(const Partition& lambda, int i, int n);
/// The same map as E~_i^{k_i}.
Partition scopes_bijection_crystal(const Partition& lambda, int i, int n);

/// r_i s(lambda) = sign * s(mu) at v = 1, valid for any weight.
std::pair<int, Partition> signed_reflection(const Partition& lambda, int i, int n);

struct ScopesCondition {
    bool within_regime = false;     ///< w <= k_i
    bool norm_positive = false;     ///< (L - a_i, L - a_i) >= 1
    bool outside_fock = false;      ///< L - a_i not a weight of the Fock space
    bool consistent() const { return within_regime == norm_positive && norm_positive == outside_fock; }
};
ScopesCondition scopes_condition(const Partition& tau, int i, int w, int n);

/// r_i x = e_i^{k_i}/k_i! x on every basis vector of the block (tau, w), at v = 1.
bool reflection_is_divided_power(const Partition& tau, int i, int w, int n);

struct ScopesReport {
    Partition tau;
    Partition image;  ///< sigma_i(tau)
    int i = 0;
    int w = 0;
    int k = 0;
    std::vector<std::pair<Partition, Partition>> bijection;
    bool bijective = false;
    bool crystal_agrees = false;  ///< node removal equals E~_i^{k_i}
    bool divided_power = false;   ///< E_i^{(k_i)} s(lambda) = s(pi(lambda))
    bool upper_basis = false;     ///< E_i^{(k_i)} G*(lambda) = G*(pi(lambda))
    bool d_equal = false;
    bool e_equal = false;
    bool ok() const { return bijective && crystal_agrees && divided_power && upper_basis && d_equal && e_equal; }
};

/// Compare the decomposition matrices of (tau, w) and (sigma_i tau, w)
/// through pi_i. Throws DomainError unless w <= k_i.
ScopesReport verify_scopes_invariance(const Partition& tau, int i, int w, int n);

struct OrbitClass {
    std::vector<Partition> cores;  ///< sorted by size
    bool rouquier = false;         ///< contains the core of rho(w) (the empty core when w = 0)
    bool frontier = false;         ///< an admissible reflection leaves the explored region
};

/// Classes of blocks (tau, w) with |tau| <= bound, linked by reflections
/// sigma_i with w <= k_i at one end.
std::vector<OrbitClass> orbit_classes(int n, int w, int bound);

}  // namespace fockcb
