#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fockcb {

/// Integer partition: weakly decreasing positive parts (empty allowed).
class Partition {
public:
    Partition() = default;
    /// Trailing zeros are dropped; throws std::invalid_argument when the
    /// sequence is not weakly decreasing or has negative entries.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    /// 0-indexed part, zero past the end.
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    Partition conjugate() const;
    bool contains(const Partition& other) const;

    /// Exponent form, e.g. "[12,4^2,3,1^2]"; "[]" for the empty partition.
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Accepts "[12,4,4,3,1,1]", "[12,4^2,3,1^2]", "12,4,4" and "[]".
Partition parse_partition(std::string_view text);
std::ostream& operator<<(std::ostream& os, const Partition& p);

/// The total order used throughout for display and triangularity: size
/// first, then lexicographic on parts.
bool size_lex_less(const Partition& a, const Partition& b);

/// All partitions of m in decreasing lexicographic order.
std::vector<Partition> partitions_of(int m);
/// p(m), the number of partitions of m.
long partition_count(int m);

/// Box of a Young diagram, 1-indexed (row, column).
struct Node {
    int row = 0;
    int col = 0;
    int content() const { return col - row; }
    friend auto operator<=>(const Node&, const Node&) = default;
};

/// Residue of an integer modulo n in [0, n).
inline int residue(int x, int n) { return ((x % n) + n) % n; }

struct MultiPartition {
    std::vector<Partition> components;

    int n() const { return static_cast<int>(components.size()); }
    int size() const;
    /// ((p^{n-1})', ..., (p^0)').
    MultiPartition conjugate() const;
    std::string to_string() const;

    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
};

MultiPartition empty_multipartition(int n);
/// Reverse-lexicographic extension of size_lex_less: compare the last
/// component first.
bool multi_less(const MultiPartition& a, const MultiPartition& b);
/// All n-tuples of partitions of total size m.
std::vector<MultiPartition> multipartitions_of(int n, int m);

// --- beta-numbers and the abacus ------------------------------------------

struct BetaSequence {
    std::vector<int> window;  ///< first `count` beta-numbers, strictly decreasing
    int count = 0;
};

/// Entries lambda_i - i + 1 for i = 1..count; requires count >= length.
BetaSequence beta_numbers(const Partition& lambda, int count);
/// Inverse of beta_numbers (the window must be strictly decreasing).
Partition partition_from_beta(const BetaSequence& beta);

/// n-runner abacus. Beads sit at positions lambda_i - i + N (i = 1..N) with N
/// a multiple of n, so every position is >= 0; runner j carries the positions
/// congruent to j mod n, stored as their levels (position div n), descending.
struct AbacusConfig {
    int n = 0;
    int bead_count = 0;
    std::vector<std::vector<int>> runner_levels;
};

AbacusConfig abacus(const Partition& lambda, int n, int min_beads = 0);
Partition partition_from_abacus(const AbacusConfig& ab);

struct CoreCoords {
    int n = 0;
    std::vector<int> a;  ///< a_1..a_n, summing to zero
    friend bool operator==(const CoreCoords&, const CoreCoords&) = default;
};

Partition n_core(const Partition& lambda, int n);
int n_weight(const Partition& lambda, int n);
bool is_n_core(const Partition& lambda, int n);

/// Throws std::invalid_argument when tau is not an n-core.
CoreCoords core_coords(const Partition& tau, int n);
/// Throws std::invalid_argument when the coordinates do not sum to zero.
Partition core_from_coords(const CoreCoords& coords);

/// n-quotient. Component j collects the runner of beta-numbers congruent to
/// j + rho_1 mod n (with beta_i = lambda_i - i), where rho is `convention`;
/// this is exactly the labelling under which rho + (n) has quotient
/// (empty, ..., empty, (1)). The default (empty rho) is the plain labelling.
MultiPartition n_quotient(const Partition& lambda, int n, const Partition& convention = {});
/// Inverse of n_quotient for the given core.
Partition from_core_and_quotient(const Partition& core, const MultiPartition& quotient,
                                 const Partition& convention = {});

/// n-sign by greedy rim-hook peeling.
int n_sign(const Partition& lambda, int n);
/// n-sign as the sign of the permutation that slides the beads to the core.
int n_sign_by_bead_permutation(const Partition& lambda, int n);

struct AddRemNodes {
    std::vector<Node> addable;    ///< left to right
    std::vector<Node> removable;  ///< left to right
};

AddRemNodes addable_removable_nodes(const Partition& lambda, int n, int i);
Partition add_node(const Partition& lambda, const Node& node);
Partition remove_node(const Partition& lambda, const Node& node);

// --- ribbons ----------------------------------------------------------------

struct Ribbon {
    std::vector<Node> cells;
    int spin = 0;  ///< number of rows minus one
};

/// A rim hook removable from `outer`, i.e. outer / inner is a ribbon.
struct RimHook {
    Partition inner;
    Ribbon ribbon;
    Node head;  ///< top-right cell
};

std::vector<RimHook> removable_rim_hooks(const Partition& outer, int n);

struct StripTerm {
    Partition mu;
    int spin = 0;
    friend bool operator==(const StripTerm&, const StripTerm&) = default;
};

/// All mu such that mu / lambda is a horizontal n-ribbon strip of weight k,
/// with the spin of its unique tiling. Sorted by mu.
std::vector<StripTerm> horizontal_ribbon_strips(const Partition& lambda, int n, int k);

/// Spin of the horizontal n-ribbon strip mu / lambda, or nullopt when mu /
/// lambda admits no tiling whose ribbons all have their top-right cell on the
/// northern border. Exhaustive search; throws std::logic_error if more than
/// one such tiling exists.
std::optional<int> horizontal_strip_spin(const Partition& mu, const Partition& lambda, int n);

// --- crystal operators --------------------------------------------------------

/// Kashiwara operators on partitions via the i-signature: nodes read left to
/// right, adjacent (removable, addable) pairs cancel, E~ removes the leftmost
/// unpaired removable node and F~ adds the rightmost unpaired addable node.
std::optional<Partition> crystal_e(const Partition& lambda, int n, int i);
std::optional<Partition> crystal_f(const Partition& lambda, int n, int i);
/// Largest k with E~^k lambda defined.
int crystal_epsilon(const Partition& lambda, int n, int i);

}  // namespace fockcb
