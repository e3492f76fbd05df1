#pragma once

#include "fockcb/laurent.hpp"
#include "fockcb/partition.hpp"

#include <map>
#include <vector>

namespace fockcb {

// --- Littlewood-Richardson calculus -------------------------------------------

/// c^lambda_{mu,nu}, by counting LR skew tableaux of shape lambda/mu and
/// content nu. Memoized.
long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Coefficient of s_lambda in the product of the s_{factors[k]}.
long lr_multi(const std::vector<Partition>& factors, const Partition& lambda);

/// s_mu s_nu = sum_lambda c^lambda_{mu,nu} s_lambda (nonzero terms only).
std::map<Partition, long> schur_product(const Partition& mu, const Partition& nu);

/// s_{lambda/beta} = sum_eps c^lambda_{beta,eps} s_eps; empty unless beta is
/// contained in lambda.
std::map<Partition, long> skew_schur_expand(const Partition& lambda, const Partition& beta);

/// Irreducible character value chi^lambda at cycle type rho (Murnaghan-Nakayama).
long character(const Partition& lambda, const Partition& rho);

// --- the space of n-alphabet symmetric functions --------------------------------

/// Finite combination of the products s_{l^0}(A_0) ... s_{l^{n-1}}(A_{n-1}).
class SymVec {
public:
    explicit SymVec(int n = 1) : n_(n) {}
    static SymVec basis(const MultiPartition& m);

    int n() const { return n_; }
    const std::map<MultiPartition, LaurentInt>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    LaurentInt coeff(const MultiPartition& m) const;

    void add(const MultiPartition& m, const LaurentInt& c);
    SymVec& operator+=(const SymVec& o);
    SymVec& operator-=(const SymVec& o);
    SymVec scaled(const LaurentInt& c) const;

    /// Product in the algebra (componentwise Schur multiplication).
    SymVec operator*(const SymVec& o) const;

    /// Semilinear map s_l -> s_{l'} with coefficients barred.
    SymVec conjugate() const;

    /// Every coefficient in Z[v] (resp. Z[v^-1]).
    bool in_lattice() const;
    bool in_lattice_minus() const;

    friend bool operator==(const SymVec& a, const SymVec& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

private:
    int n_;
    std::map<MultiPartition, LaurentInt> entries_;
};

SymVec operator+(SymVec a, const SymVec& b);
SymVec operator-(SymVec a, const SymVec& b);

/// Bilinear scalar product for which the s_l are orthonormal.
LaurentInt scalar_product(const SymVec& x, const SymVec& y);

/// One summand sign * v^exponent * A_index of a formal alphabet.
struct AlphabetTerm {
    int index = 0;
    int sign = 1;
    int exponent = 0;
};
using Alphabet = std::vector<AlphabetTerm>;

enum class Route {
    Skew,      ///< closed LR / skew-Schur expansion
    PowerSum,  ///< through power sums and characters
    Formula,   ///< explicit coefficient sums (eta and psi only)
};

/// s_lambda evaluated on a formal alphabet, where p_k(q A_i) = q(v^k) p_k(A_i).
SymVec schur_of_alphabet(const Partition& lambda, const Alphabet& alphabet, int n, Route route = Route::Skew);

/// eta_mu(v) = s_{mu^0}(A_0) s_{mu^1}(A_1 - v A_0) ... s_{mu^{n-1}}(A_{n-1} - v A_{n-2}).
SymVec eta_expansion(const MultiPartition& mu, Route route = Route::Skew);
/// psi_l(v^-1) = prod_j s_{l^j}(v^{-j} A_0 + ... + v^{-1} A_{j-1} + A_j).
SymVec psi_expansion(const MultiPartition& lambda, Route route = Route::Skew);
/// phi_l(v), obtained as the conjugate of psi_{l'}(v^-1).
SymVec phi_expansion(const MultiPartition& lambda);
/// phi_l(v) = prod_j s_{l^j}(A_j + v A_{j+1} + ... + v^{n-1-j} A_{n-1}), expanded directly.
SymVec phi_expansion_direct(const MultiPartition& lambda, Route route = Route::Skew);

/// <s_lambda, eta_mu(v)> by the alternating sum over pairs of chains.
LaurentInt eta_coefficient(const MultiPartition& lambda, const MultiPartition& mu);
/// <psi_lambda(v^-1), s_mu> by the sum over triangular arrays.
LaurentInt psi_coefficient(const MultiPartition& lambda, const MultiPartition& mu);

/// Gram matrix <phi_l, eta_m> is the identity for all |l|, |m| <= degree_cap.
bool cauchy_check(int n, int degree_cap);

}  // namespace fockcb
