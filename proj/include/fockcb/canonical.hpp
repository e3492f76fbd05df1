#pragma once

#include "fockcb/fock.hpp"

#include <memory>
#include <vector>

namespace fockcb {

/// Matrix of the bar involution on one weight space:
/// bar(s(basis[c])) = sum_r entries[r][c] s(basis[r]).
struct BarMatrix {
    BlockId block;
    std::vector<Partition> basis;
    std::vector<std::vector<LaurentInt>> entries;

    std::size_t index(const Partition& p) const;
};

/// Bar-invariant vectors spanning the weight space, each obtained from s(empty)
/// by a word in the divided powers F_i^(k) and the D_k. Memoized.
std::shared_ptr<const std::vector<FockVec>> spanning_vectors(const BlockId& b);

/// Memoized; throws std::logic_error if the generators fail to span or the
/// recovered matrix is not an involution.
std::shared_ptr<const BarMatrix> bar_involution(const BlockId& b);

/// The semilinear bar involution of the Fock space.
FockVec bar(const FockVec& x, int n);

/// Transition matrix of a canonical basis on one block. Without `minus`,
/// entries[r][c] = d_{order[r], order[c]}(v), so column c is G(order[c]).
/// With `minus`, entries[r][c] = e_{order[r], order[c]}(v), so row r gives
/// G^-(order[r]) after the substitution v -> -v^{-1}.
struct DecompMatrix {
    BlockId block;
    bool minus = false;
    std::vector<Partition> order;             ///< display order, largest first
    std::vector<Partition> triangular_order;  ///< bar matrix is triangular along this order
    std::vector<std::vector<LaurentInt>> entries;

    std::size_t index(const Partition& p) const;
    LaurentInt at(const Partition& lambda, const Partition& mu) const;
};

/// Memoized. `reverse_ties` picks a different admissible triangular order
/// (used to check that the result does not depend on it); it bypasses the
/// cache.
std::shared_ptr<const DecompMatrix> canonical_basis(const BlockId& b, bool minus, bool reverse_ties = false);

/// G(lambda) and G^-(lambda) as vectors.
FockVec canonical_vector(const Partition& lambda, int n);
FockVec canonical_vector_minus(const Partition& lambda, int n);

/// d_{lambda,mu}(v); zero when lambda and mu lie in different blocks.
LaurentInt d_poly(const Partition& lambda, const Partition& mu, int n);
/// e_{lambda,mu}(v); zero when lambda and mu lie in different blocks.
LaurentInt e_poly(const Partition& lambda, const Partition& mu, int n);

/// G*(lambda) = v^{n-weight} sum_mu e_{lambda',mu'}(-v) s(mu).
FockVec upper_basis_Gstar(const Partition& lambda, int n);

/// Drop every memoized matrix.
void clear_canonical_caches();

}  // namespace fockcb
