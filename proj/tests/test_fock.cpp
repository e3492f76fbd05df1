#include "doctest.h"

#include "fockcb/fock.hpp"

#include <stdexcept>

using namespace fockcb;

namespace {

FockVec s(std::initializer_list<int> parts) { return FockVec::basis(Partition(parts)); }

LaurentInt v(int e = 1) { return LaurentInt::v(e); }

std::vector<Partition> upto(int m)
{
    std::vector<Partition> all;
    for (int k = 0; k <= m; ++k)
        for (auto& p : partitions_of(k)) all.push_back(p);
    return all;
}

// Balanced q-integer for any sign of m.
LaurentInt signed_gauss(int m) { return m >= 0 ? gauss_number(m) : -gauss_number(-m); }

}  // namespace

TEST_CASE("Chevalley generators on small vectors")
{
    CHECK(apply_F(0, s({}), 2) == s({1}));
    CHECK(apply_F(1, s({1}), 2) == s({2}) + s({1, 1}).scaled(v()));
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < n; ++i) CHECK(apply_E(i, s({}), n).is_zero());
    CHECK(apply_E(1, s({1, 1}), 2) == s({1}));
    CHECK(apply_E(1, s({2}), 2) == s({1}).scaled(v(-1)));
    CHECK_THROWS_AS(apply_F(2, s({}), 2), std::invalid_argument);
}

TEST_CASE("divided powers")
{
    CHECK(apply_F_divided(0, 0, s({2}), 2) == s({2}));
    CHECK(apply_F_divided(0, 2, s({}), 2).is_zero());
    CHECK(apply_F(1, apply_F(1, s({1}), 2), 2) == s({2, 1}).scaled(gauss_number(2)));
    CHECK(apply_F_divided(1, 2, s({1}), 2) == s({2, 1}));
    // Integrality of divided powers on every small basis vector.
    for (int n = 2; n <= 3; ++n)
        for (const auto& p : upto(6))
            for (int i = 0; i < n; ++i)
                for (int k = 2; k <= 3; ++k) {
                    CHECK_NOTHROW(apply_F_divided(i, k, FockVec::basis(p), n));
                    CHECK_NOTHROW(apply_E_divided(i, k, FockVec::basis(p), n));
                }
}

TEST_CASE("bosonic operators")
{
    CHECK(apply_D(1, s({}), 2) == s({2}) - s({1, 1}).scaled(v(-1)));
    CHECK(apply_D(1, s({}), 3) == s({3}) - s({2, 1}).scaled(v(-1)) + s({1, 1, 1}).scaled(v(-2)));
    CHECK(apply_D(2, s({}), 2) == s({4}) - s({3, 1}).scaled(v(-1)) + s({2, 2}).scaled(v(-2)));
    CHECK_THROWS_AS(apply_D(0, s({}), 2), std::invalid_argument);
}

TEST_CASE("D_k commute with each other and with the Chevalley generators")
{
    for (int n = 2; n <= 3; ++n)
        for (const auto& p : upto(12 - 2 * n)) {
            const FockVec x = FockVec::basis(p);
            if (p.size() + 3 * n <= 12) CHECK(apply_D(1, apply_D(2, x, n), n) == apply_D(2, apply_D(1, x, n), n));
            for (int i = 0; i < n; ++i) {
                CHECK(apply_D(1, apply_F(i, x, n), n) == apply_F(i, apply_D(1, x, n), n));
                CHECK(apply_D(1, apply_E(i, x, n), n) == apply_E(i, apply_D(1, x, n), n));
            }
        }
}

TEST_CASE("commutator of E_i and F_i")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : upto(8))
            for (int i = 0; i < n; ++i) {
                const FockVec x = FockVec::basis(p);
                const auto nodes = addable_removable_nodes(p, n, i);
                const int m = static_cast<int>(nodes.addable.size()) - static_cast<int>(nodes.removable.size());
                CHECK(apply_E(i, apply_F(i, x, n), n) - apply_F(i, apply_E(i, x, n), n) == x.scaled(signed_gauss(m)));
            }
}

TEST_CASE("adjointness for the v-scalar product")
{
    for (int n = 2; n <= 3; ++n)
        for (const auto& p : upto(7))
            for (int i = 0; i < n; ++i) {
                const FockVec x = FockVec::basis(p);
                const FockVec fx = apply_F(i, x, n);
                for (const auto& [mu, c] : fx.terms()) {
                    const FockVec y = FockVec::basis(mu);
                    CHECK(scalar_product_v(apply_E(i, y, n), x, n) == scalar_product_v(y, fx, n));
                }
            }
}

TEST_CASE("scalar products")
{
    const Partition l{3, 1};
    CHECK(scalar_product_v(FockVec::basis(l), FockVec::basis(l), 2) == v(-n_weight(l, 2)));
    CHECK(scalar_product_v(s({3, 1}), s({2, 2}), 2).is_zero());
    CHECK(scalar_product(apply_F(1, s({1}), 2), s({1, 1})) == v());
}

TEST_CASE("weights and blocks")
{
    CHECK(block_partitions(BlockId{2, Partition{}, 2}).size() == 5);
    CHECK(block_partitions(BlockId{3, Partition{3, 1}, 0}) == std::vector<Partition>{Partition{3, 1}});
    CHECK(block_partitions(BlockId{3, Partition{3, 1}, 1}).size() == 3);
    CHECK(block_partitions(BlockId{2, Partition{}, 3}, 2).empty());
    for (int n = 2; n <= 4; ++n)
        for (int w = 0; w <= 4; ++w)
            for (const Partition& core : {Partition{}, Partition{1}, Partition{2, 1}}) {
                if (!is_n_core(core, n)) continue;
                const auto parts = block_partitions(BlockId{n, core, w});
                CHECK(static_cast<long>(parts.size()) == block_dimension(n, w));
                for (const auto& p : parts) CHECK(weight_of(p, n) == BlockId{n, core, w});
            }
    CHECK(block_dimension(2, 2) == 5);
    CHECK(block_dimension(3, 1) == 3);
}

TEST_CASE("affine weights")
{
    const AffineWeight base = AffineWeight::of_block(BlockId{3, Partition{}, 0});
    CHECK(base.norm() == 0);
    const AffineWeight t = AffineWeight::of_block(BlockId{3, Partition{3, 1}, 2});
    CHECK(t.fock_weight() == 2);
    CHECK(t.block() == BlockId{3, Partition{3, 1}, 2});
    for (int i = 0; i < 3; ++i) {
        CHECK(t.reflect(i).reflect(i) == t);
        CHECK(t.reflect(i).norm() == t.norm());
    }
    // F_i lowers the weight by alpha_i.
    for (int n = 2; n <= 3; ++n)
        for (const auto& p : upto(7))
            for (int i = 0; i < n; ++i) {
                const AffineWeight wt = AffineWeight::of_block(weight_of(p, n));
                const FockVec fx = apply_F(i, FockVec::basis(p), n);
                for (const auto& [mu, c] : fx.terms())
                    CHECK(AffineWeight::of_block(weight_of(mu, n)) == wt.plus_alpha(i, -1));
            }
    CHECK_FALSE(base.plus_alpha(0).in_fock());
}

TEST_CASE("reflections at v = 1")
{
    CHECK(reflection_r(0, s({}), 2) == -s({1}));
    CHECK(reflection_r(1, s({}), 2) == s({}));
    CHECK_THROWS_AS(reflection_r(0, s({}) + s({1}), 2), std::invalid_argument);

    for (int n = 2; n <= 3; ++n)
        for (int w = 0; w <= 2; ++w)
            for (const Partition& core : {Partition{}, Partition{1}, Partition{2}, Partition{1, 1}}) {
                if (!is_n_core(core, n)) continue;
                const BlockId b{n, core, w};
                const auto parts = block_partitions(b);
                for (int i = 0; i < n; ++i) {
                    const BlockId target = AffineWeight::of_block(b).reflect(i).block();
                    std::vector<FockVec> images;
                    for (const auto& p : parts) {
                        const FockVec x = FockVec::basis(p);
                        const FockVec r = reflection_r(i, x, n);
                        CHECK(r == reflection_r_alt(i, x, n));
                        for (const auto& [mu, c] : r.terms()) CHECK(weight_of(mu, n) == target);
                        // r_i e_i = -f_i r_i
                        CHECK(reflection_r(i, classical_e(i, x, n), n) == -classical_f(i, r, n));
                        images.push_back(r);
                    }
                    // Orthogonality of the matrix.
                    for (std::size_t a = 0; a < images.size(); ++a)
                        for (std::size_t c = 0; c < images.size(); ++c)
                            CHECK(scalar_product(images[a], images[c]) == LaurentInt(a == c ? 1 : 0));
                }
            }
}

TEST_CASE("block splitting")
{
    const FockVec x = s({2}) + s({1, 1}) + s({1});
    const auto parts = split_blocks(x, 2);
    CHECK(parts.size() == 2);
    CHECK(parts.at(BlockId{2, Partition{}, 1}) == s({2}) + s({1, 1}));
}
