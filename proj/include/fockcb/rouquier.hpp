#pragma once

#include "fockcb/fock.hpp"
#include "fockcb/symfunc.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fockcb {

/// Raised by the closed formulas outside the range where they hold.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The large n-core rho(w) given by its abacus coordinates.
Partition rouquier_core(int n, int w);
CoreCoords rouquier_coords(int n, int w);

struct RouquierBlock {
    int n = 0;
    int w = 0;
    Partition rho;
    int r = 0;  ///< rho_1 mod n

    static RouquierBlock make(int n, int w);
    /// Core rho and n-weight at most w.
    bool contains(const Partition& lambda) const;
    /// All partitions of core rho and weight at most w, by weight then the block order.
    std::vector<Partition> partitions() const;
    MultiPartition quotient(const Partition& lambda) const;
    Partition from_quotient(const MultiPartition& q) const;
};

/// s(lambda) -> eps_n(lambda) s_{quotient}, relative to the labelling in which
/// rho + (n) has quotient (empty, ..., (1)). Throws std::invalid_argument on
/// support outside the core rho.
SymVec phi_map(const FockVec& x, const Partition& rho, int n);
FockVec phi_inverse(const SymVec& x, const Partition& rho);

/// Closed monomial formulas for d_{lambda,mu}(v) and e_{lambda,mu}(v); throw
/// DomainError unless both partitions lie in P(rho(w), w).
LaurentInt closed_d(const Partition& lambda, const Partition& mu, int n, int w);
LaurentInt closed_e(const Partition& lambda, const Partition& mu, int n, int w);

/// Residues of H_{j,k} as written, leftmost first (the rightmost acts first).
std::vector<int> h_operator_word(int j, int n, int r);
/// H_{j,k} x; throws std::invalid_argument unless 0 <= j <= n-2 and k >= 1.
FockVec H_operator(int j, int k, const FockVec& x, const RouquierBlock& block);

/// Phi(H_{j,k} s(lambda)) against (-1)^{k(n-j-2)} eps(lambda) e_k(A_{j+1} - v A_j) s_quotient.
bool check_h_operator(const RouquierBlock& block, const Partition& lambda, int j, int k);
/// Phi(D_k s(lambda)) against eps(lambda) h_k(v^{1-n} A_0 + ... + A_{n-1}) s_quotient.
bool check_d_operator(const RouquierBlock& block, const Partition& lambda, int k);

struct Theorem1Entry {
    Partition lambda;
    bool plus_ok = false;   ///< G(lambda) = eps Phi^-1(eta)
    bool minus_ok = false;  ///< G^-(lambda) = eps Phi^-1(psi)
};

struct Theorem1Report {
    int n = 0;
    int w = 0;
    Partition rho;
    std::vector<Theorem1Entry> entries;
    bool all_ok() const;
};

/// Compare the bar-correction canonical bases with the closed expansions on
/// every partition of P(rho(w), w). `threads` > 1 spreads the partitions
/// over worker threads.
Theorem1Report verify_theorem1(int n, int w, unsigned threads = 1);

struct HookCheck {
    int colour = -1;      ///< the quotient component that changed
    bool hook_shape = false;  ///< lambda/mu is the hook (colour+1, 1^{n-colour-1})
    int spin = -1;
};

/// Structure of lambda/mu for mu inside lambda with weights one apart, both in
/// P(rho(w), w). Throws DomainError when the preconditions fail.
HookCheck prop73_structure_check(const Partition& lambda, const Partition& mu, int n, int w);

struct ColouredRibbon {
    int colour = 0;
    std::vector<Node> cells;
};

/// Peel lambda down to rho one ribbon at a time, recording the colour of each.
std::vector<ColouredRibbon> ribbon_colouring(const Partition& lambda, int n, int w);
/// Ribbons of smaller colour lie strictly to the left of ribbons of larger colour.
bool colours_separated(const std::vector<ColouredRibbon>& ribbons);

}  // namespace fockcb
