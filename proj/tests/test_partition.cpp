#include "doctest.h"

#include "fockcb/partition.hpp"

#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <algorithm>

using namespace fockcb;

namespace {

// All partitions of size <= m.
std::vector<Partition> small_partitions(int m)
{
    std::vector<Partition> all;
    for (int s = 0; s <= m; ++s)
        for (auto& p : partitions_of(s)) all.push_back(p);
    return all;
}

// Residue scan over every cell adjacent to the rim.
AddRemNodes brute_force_nodes(const Partition& lambda, int n, int i)
{
    AddRemNodes r;
    for (int row = 1; row <= lambda.length() + 1; ++row)
        for (int col = 1; col <= lambda.part(0) + 1; ++col) {
            if (residue(col - row, n) != i) continue;
            std::vector<int> parts = lambda.parts();
            parts.resize(std::max<int>(parts.size(), row), 0);
            if (parts[row - 1] == col - 1) {
                auto grown = parts;
                ++grown[row - 1];
                if (std::is_sorted(grown.rbegin(), grown.rend())) r.addable.push_back({row, col});
            }
            if (parts[row - 1] == col) {
                auto shrunk = parts;
                --shrunk[row - 1];
                if (std::is_sorted(shrunk.rbegin(), shrunk.rend())) r.removable.push_back({row, col});
            }
        }
    auto by_col = [](const Node& a, const Node& b) { return a.col < b.col; };
    std::sort(r.addable.begin(), r.addable.end(), by_col);
    std::sort(r.removable.begin(), r.removable.end(), by_col);
    return r;
}

// Cells of a skew shape, used to search tilings by arbitrary ribbons.
using Cells = std::set<std::pair<int, int>>;

}  // namespace

TEST_CASE("parsing and formatting")
{
    CHECK(parse_partition("[12,4,4,3,1,1]") == Partition{12, 4, 4, 3, 1, 1});
    CHECK(parse_partition("[12,4^2,3,1^2]") == Partition{12, 4, 4, 3, 1, 1});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(Partition{12, 4, 4, 3, 1, 1}.to_string() == "[12,4^2,3,1^2]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK_THROWS_AS(parse_partition("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[a]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[3,1"), std::invalid_argument);
    for (const auto& p : small_partitions(8)) CHECK(parse_partition(p.to_string()) == p);
}

TEST_CASE("conjugation and size")
{
    CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
    for (const auto& p : small_partitions(9)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().size() == p.size());
    }
    CHECK(partition_count(10) == 42);
    CHECK(static_cast<long>(partitions_of(7).size()) == partition_count(7));
}

TEST_CASE("beta numbers")
{
    auto b = beta_numbers(Partition{6, 4, 3, 1, 1, 1}, 9);
    CHECK(b.window == std::vector<int>{6, 3, 1, -2, -3, -4, -6, -7, -8});
    CHECK(beta_numbers(Partition{}, 3).window == std::vector<int>{0, -1, -2});
    CHECK(beta_numbers(Partition{1}, 2).window == std::vector<int>{1, -1});
    CHECK(partition_from_beta(b) == Partition{6, 4, 3, 1, 1, 1});
    CHECK_THROWS_AS(beta_numbers(Partition{2, 1}, 1), std::invalid_argument);
}

TEST_CASE("beta-set of the conjugate is the complement-negation")
{
    // With a window of N beads from a partition with lambda_1 <= M, the
    // positions {lambda_i - i} (i <= N) and {-(lambda'_j - j) - 1} (j <= M)
    // partition the interval [-N, M - 1].
    for (const auto& p : small_partitions(8)) {
        const int N = p.length() + 2, M = p.part(0) + 2;
        std::set<int> all;
        for (int i = 1; i <= N; ++i) all.insert(p.part(i - 1) - i);
        const Partition c = p.conjugate();
        for (int j = 1; j <= M; ++j) {
            const int x = -(c.part(j - 1) - j) - 1;
            CHECK(all.insert(x).second);
        }
        CHECK(static_cast<int>(all.size()) == N + M);
        CHECK(*all.begin() == -N);
        CHECK(*all.rbegin() == M - 1);
    }
}

TEST_CASE("n-cores")
{
    CHECK(n_core(Partition{6, 4, 3, 1, 1, 1}, 3) == Partition{3, 1});
    CHECK(n_core(Partition{3, 1}, 3) == Partition{3, 1});
    CHECK(n_core(Partition{4}, 2) == Partition{});
    CHECK_THROWS_AS(n_core(Partition{4}, 1), std::invalid_argument);
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(9)) {
            const Partition c = n_core(p, n);
            CHECK(n_core(c, n) == c);
            CHECK(removable_rim_hooks(c, n).empty());
            CHECK((p.size() - c.size()) % n == 0);
        }
}

TEST_CASE("core coordinates")
{
    CHECK(core_coords(Partition{3, 1}, 3).a == std::vector<int>{0, -1, 1});
    CHECK(core_coords(Partition{}, 4).a == std::vector<int>{0, 0, 0, 0});
    CHECK(core_coords(Partition{12, 9, 6, 6, 4, 4, 2, 2, 2, 1, 1, 1}, 4).a == std::vector<int>{-3, -1, 1, 3});
    CHECK_THROWS_AS(core_coords(Partition{2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(core_from_coords(CoreCoords{3, {1, 1, 0}}), std::invalid_argument);
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(10)) {
            if (!is_n_core(p, n)) continue;
            const CoreCoords c = core_coords(p, n);
            int sum = 0;
            for (int x : c.a) sum += x;
            CHECK(sum == 0);
            CHECK(core_from_coords(c) == p);
        }
}

TEST_CASE("n-quotients")
{
    const Partition rho{6, 4, 2, 2, 1, 1};
    MultiPartition q = n_quotient(Partition{12, 4, 4, 3, 1, 1}, 3, rho);
    CHECK(q == MultiPartition{{Partition{}, Partition{1}, Partition{2}}});
    std::vector<int> rp = rho.parts();
    rp[0] += 3;
    CHECK(n_quotient(Partition(rp), 3, rho) == MultiPartition{{Partition{}, Partition{}, Partition{1}}});
    CHECK(n_quotient(Partition{3, 1}, 3) == empty_multipartition(3));
    CHECK(n_quotient(Partition{}, 3) == empty_multipartition(3));

    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(10)) {
            const Partition core = n_core(p, n);
            for (const Partition& conv : {Partition{}, Partition{2}, rho}) {
                const MultiPartition quot = n_quotient(p, n, conv);
                CHECK(p.size() == core.size() + n * quot.size());
                CHECK(from_core_and_quotient(core, quot, conv) == p);
            }
        }
}

TEST_CASE("core/quotient bijection")
{
    for (int n = 2; n <= 3; ++n)
        for (const Partition& core : {Partition{}, Partition{1}, Partition{3, 1}, Partition{2}}) {
            if (!is_n_core(core, n)) continue;
            for (int m = 0; m <= 3; ++m)
                for (const auto& quot : multipartitions_of(n, m)) {
                    const Partition p = from_core_and_quotient(core, quot);
                    CHECK(n_core(p, n) == core);
                    CHECK(n_quotient(p, n) == quot);
                }
        }
}

TEST_CASE("n-signs")
{
    CHECK(n_sign(Partition{12, 4, 4, 3, 1, 1}, 3) == -1);
    CHECK(n_sign(Partition{3, 1}, 3) == 1);
    CHECK(n_sign(Partition{1, 1}, 2) == -1);
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(10)) CHECK(n_sign(p, n) == n_sign_by_bead_permutation(p, n));
}

TEST_CASE("n-sign does not depend on the peeling order")
{
    // Peel the lowest removable rim hook instead of the highest.
    for (int n = 2; n <= 3; ++n)
        for (const auto& p : small_partitions(9)) {
            Partition cur = p;
            int spin = 0;
            for (auto hooks = removable_rim_hooks(cur, n); !hooks.empty(); hooks = removable_rim_hooks(cur, n)) {
                spin += hooks.back().ribbon.spin;
                cur = hooks.back().inner;
            }
            CHECK(cur == n_core(p, n));
            CHECK((spin % 2 == 0 ? 1 : -1) == n_sign(p, n));
        }
}

TEST_CASE("addable and removable nodes")
{
    auto r = addable_removable_nodes(Partition{}, 3, 0);
    CHECK(r.addable == std::vector<Node>{{1, 1}});
    CHECK(r.removable.empty());

    r = addable_removable_nodes(Partition{1}, 2, 1);
    CHECK(r.addable == std::vector<Node>{{2, 1}, {1, 2}});
    CHECK(r.removable.empty());

    r = addable_removable_nodes(Partition{3, 1}, 3, 0);
    CHECK(r.addable == std::vector<Node>{{2, 2}, {1, 4}});
    CHECK(r.removable.empty());
    r = addable_removable_nodes(Partition{3, 1}, 3, 2);
    CHECK(r.removable == std::vector<Node>{{2, 1}, {1, 3}});

    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(8))
            for (int i = 0; i < n; ++i) {
                const auto fast = addable_removable_nodes(p, n, i);
                const auto slow = brute_force_nodes(p, n, i);
                CHECK(fast.addable == slow.addable);
                CHECK(fast.removable == slow.removable);
            }
}

TEST_CASE("rim hooks")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(9))
            for (const auto& h : removable_rim_hooks(p, n)) {
                CHECK(static_cast<int>(h.ribbon.cells.size()) == n);
                CHECK(h.inner.size() + n == p.size());
                CHECK(p.contains(h.inner));
                CHECK(h.ribbon.spin >= 0);
                CHECK(h.ribbon.spin <= n - 1);
                // No 2x2 square.
                std::set<Node> cells(h.ribbon.cells.begin(), h.ribbon.cells.end());
                for (const auto& c : cells) CHECK_FALSE((cells.count({c.row + 1, c.col}) && cells.count({c.row, c.col + 1}) && cells.count({c.row + 1, c.col + 1})));
            }
}

TEST_CASE("horizontal ribbon strips")
{
    CHECK(horizontal_ribbon_strips(Partition{}, 2, 1) == std::vector<StripTerm>{{Partition{1, 1}, 1}, {Partition{2}, 0}});
    CHECK(horizontal_ribbon_strips(Partition{}, 2, 0) == std::vector<StripTerm>{{Partition{}, 0}});
    CHECK(horizontal_ribbon_strips(Partition{}, 3, 1) ==
          std::vector<StripTerm>{{Partition{1, 1, 1}, 2}, {Partition{2, 1}, 1}, {Partition{3}, 0}});
    CHECK(horizontal_ribbon_strips(Partition{}, 2, 2) ==
          std::vector<StripTerm>{{Partition{2, 2}, 2}, {Partition{3, 1}, 1}, {Partition{4}, 0}});

    // Brute force: every mu of the right size with the same core, kept when
    // it admits an admissible tiling.
    for (int n = 2; n <= 3; ++n)
        for (const auto& lambda : small_partitions(n == 2 ? 6 : 5))
            for (int k = 1; k <= 2; ++k) {
                std::map<Partition, int> expected;
                for (const auto& mu : partitions_of(lambda.size() + n * k)) {
                    if (!mu.contains(lambda)) continue;
                    if (auto spin = horizontal_strip_spin(mu, lambda, n)) expected[mu] = *spin;
                }
                std::map<Partition, int> got;
                for (const auto& t : horizontal_ribbon_strips(lambda, n, k)) got[t.mu] = t.spin;
                CHECK(got == expected);
            }
}

TEST_CASE("crystal operators")
{
    for (int i = 0; i < 3; ++i) CHECK_FALSE(crystal_e(Partition{}, 3, i).has_value());
    CHECK(crystal_e(Partition{1}, 2, 0) == Partition{});
    CHECK(crystal_e(Partition{2}, 2, 1) == Partition{1});

    for (int n = 2; n <= 4; ++n)
        for (const auto& p : small_partitions(8))
            for (int i = 0; i < n; ++i) {
                if (auto e = crystal_e(p, n, i)) CHECK(crystal_f(*e, n, i) == p);
                if (auto f = crystal_f(p, n, i)) CHECK(crystal_e(*f, n, i) == p);
                int k = 0;
                Partition cur = p;
                while (auto e = crystal_e(cur, n, i)) {
                    cur = *e;
                    ++k;
                }
                CHECK(k == crystal_epsilon(p, n, i));
                for (int s = 0; s < k; ++s) cur = *crystal_f(cur, n, i);
                CHECK(cur == p);
            }
}
