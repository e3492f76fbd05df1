#pragma once

#include "fockcb/laurent.hpp"
#include "fockcb/partition.hpp"

#include <map>
#include <vector>

namespace fockcb {

/// Sparse element of the q-Fock space: partition -> Laurent coefficient.
class FockVec {
public:
    using Map = std::map<Partition, LaurentInt>;

    FockVec() = default;
    static FockVec basis(const Partition& p) { FockVec x; x.add(p, LaurentInt(1)); return x; }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    LaurentInt coeff(const Partition& p) const;

    void add(const Partition& p, const LaurentInt& c);
    FockVec& operator+=(const FockVec& o);
    FockVec& operator-=(const FockVec& o);
    FockVec operator-() const;
    /// Multiply every coefficient by c.
    FockVec scaled(const LaurentInt& c) const;
    /// Coefficient-wise bar (not the Fock-space bar involution).
    FockVec bar_coefficients() const;
    /// Specialize every coefficient at v = 1 (result has constant coefficients).
    FockVec at_one() const;

    /// Terms in display order: size, then lexicographic, largest first.
    std::vector<std::pair<Partition, LaurentInt>> sorted_terms() const;

    friend bool operator==(const FockVec&, const FockVec&) = default;

private:
    Map terms_;
};

FockVec operator+(FockVec a, const FockVec& b);
FockVec operator-(FockVec a, const FockVec& b);

/// A weight space of the Fock space: n-core and n-weight.
struct BlockId {
    int n = 0;
    Partition core;
    int weight_w = 0;

    friend auto operator<=>(const BlockId&, const BlockId&) = default;
    friend bool operator==(const BlockId&, const BlockId&) = default;
};

BlockId weight_of(const Partition& lambda, int n);
/// All partitions in the block, in decreasing lexicographic order. Empty
/// when the block weight exceeds `bound`.
std::vector<Partition> block_partitions(const BlockId& b, int bound);
std::vector<Partition> block_partitions(const BlockId& b);
/// Sum over k_1 + ... + k_n = w of p(k_1)...p(k_n).
long block_dimension(int n, int w);

/// Lambda_0 + d delta + sum a_i eps_i.
struct AffineWeight {
    int n = 0;
    long d = 0;
    std::vector<long> a;

    static AffineWeight of_block(const BlockId& b);
    /// (Lambda, Lambda) = 2d + sum a_i^2.
    long norm() const;
    long pairing(const AffineWeight& other) const;
    /// (Lambda, alpha_i).
    long pairing_alpha(int i) const;
    AffineWeight plus_alpha(int i, long k = 1) const;
    AffineWeight plus_delta(long k) const;
    AffineWeight reflect(int i) const;
    /// Weight of the Fock space: (Lambda, Lambda) <= 0 (it lies in
    /// Lambda_0 + Q by construction).
    bool in_fock() const;
    /// n-weight -(Lambda, Lambda)/2; only meaningful when in_fock().
    long fock_weight() const;
    /// Block with this weight; throws std::domain_error when not in_fock().
    BlockId block() const;

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

FockVec apply_F(int i, const FockVec& x, int n);
FockVec apply_E(int i, const FockVec& x, int n);
/// F_i^k / [k]!; throws std::logic_error if the division is not exact.
FockVec apply_F_divided(int i, int k, const FockVec& x, int n);
FockVec apply_E_divided(int i, int k, const FockVec& x, int n);
/// Bosonic operator D_k: sum over horizontal n-ribbon strips of weight k
/// with coefficient (-v)^{-spin}.
FockVec apply_D(int k, const FockVec& x, int n);
/// D_{kappa_1} ... D_{kappa_l}.
FockVec apply_D_word(const Partition& kappa, const FockVec& x, int n);

/// Bilinear form <s(l), s(m)> = delta.
LaurentInt scalar_product(const FockVec& x, const FockVec& y);
/// Bilinear form <s(l), s(m)>_v = v^{-n-weight(l)} delta.
LaurentInt scalar_product_v(const FockVec& x, const FockVec& y, int n);

/// Classical Chevalley operators at v = 1 (every coefficient must be
/// constant).
FockVec classical_e(int i, const FockVec& x, int n);
FockVec classical_f(int i, const FockVec& x, int n);
/// exp(e_i) exp(-f_i) exp(e_i) at v = 1. Throws std::invalid_argument when
/// x is not supported in a single weight space or has non-constant
/// coefficients.
FockVec reflection_r(int i, const FockVec& x, int n);
/// exp(-f_i) exp(e_i) exp(-f_i), the same operator in the other factorization.
FockVec reflection_r_alt(int i, const FockVec& x, int n);

/// Split a vector into its weight-homogeneous components.
std::map<BlockId, FockVec> split_blocks(const FockVec& x, int n);

}  // namespace fockcb
