#include "doctest.h"

#include "fockcb/canonical.hpp"

#include <vector>

using namespace fockcb;

namespace {

LaurentInt v(int e = 1) { return LaurentInt::v(e); }

FockVec s(std::initializer_list<int> parts) { return FockVec::basis(Partition(parts)); }

struct Case {
    int n;
    Partition core;
    int w;
};

const std::vector<Case>& small_blocks()
{
    static const std::vector<Case> c = {
        {2, Partition{}, 1},     {2, Partition{}, 2},     {2, Partition{}, 3},  {2, Partition{1}, 2},
        {2, Partition{2, 1}, 3}, {3, Partition{}, 1},     {3, Partition{}, 2},  {3, Partition{1}, 2},
        {3, Partition{2}, 2},    {3, Partition{2, 1, 1}, 2}, {3, Partition{1, 1}, 3},
    };
    return c;
}

bool in_v_z(const LaurentInt& c) { return c.is_zero() || c.min_degree() >= 1; }
bool in_vinv_z(const LaurentInt& c) { return c.is_zero() || c.max_degree() <= -1; }

}  // namespace

TEST_CASE("trivial blocks")
{
    for (int n = 2; n <= 4; ++n) {
        const auto M = bar_involution(BlockId{n, Partition{}, 0});
        CHECK(M->entries == std::vector<std::vector<LaurentInt>>{{LaurentInt(1)}});
        CHECK(canonical_vector(Partition{}, n) == s({}));
        CHECK(upper_basis_Gstar(Partition{}, n) == s({}));
    }
    CHECK(upper_basis_Gstar(Partition{3, 1}, 3) == s({3, 1}));
}

TEST_CASE("bar matrix of the smallest nontrivial block")
{
    const auto M = bar_involution(BlockId{2, Partition{}, 1});
    REQUIRE(M->basis == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(M->entries[0][0] == LaurentInt(1));
    CHECK(M->entries[0][1].is_zero());
    CHECK(M->entries[1][0] == v() - v(-1));
    CHECK(M->entries[1][1] == LaurentInt(1));
    CHECK(canonical_vector(Partition{2}, 2) == s({2}) + s({1, 1}).scaled(v()));
    CHECK(canonical_vector(Partition{1, 1}, 2) == s({1, 1}));
}

TEST_CASE("worked example on a Rouquier block")
{
    const FockVec G = canonical_vector(Partition{12, 4, 4, 3, 1, 1}, 3);
    const FockVec expected = s({12, 4, 4, 3, 1, 1}) + s({12, 4, 2, 2, 1, 1, 1, 1, 1}).scaled(v()) +
                             s({9, 6, 5, 3, 1, 1}).scaled(v()) + s({9, 4, 4, 3, 3, 2}).scaled(v()) +
                             s({9, 4, 4, 3, 1, 1, 1, 1, 1}).scaled(v(2)) + s({6, 6, 5, 3, 3, 2}).scaled(v(2)) +
                             s({6, 4, 4, 3, 3, 2, 2, 1}).scaled(v(2)) + s({6, 4, 4, 3, 3, 2, 1, 1, 1}).scaled(v(3));
    CHECK(G == expected);
    CHECK(d_poly(Partition{12, 4, 2, 2, 1, 1, 1, 1, 1}, Partition{12, 4, 4, 3, 1, 1}, 3) == v());
    CHECK(d_poly(Partition{12, 4, 4, 3, 1, 1}, Partition{12, 4, 4, 3, 1, 1}, 3) == LaurentInt(1));
    CHECK(d_poly(Partition{2}, Partition{1}, 3).is_zero());
    CHECK(e_poly(Partition{2}, Partition{1}, 3).is_zero());
}

TEST_CASE("bar involution is involutive and fixes the generators")
{
    for (const auto& c : small_blocks()) {
        const BlockId b{c.n, c.core, c.w};
        const auto M = bar_involution(b);
        for (const FockVec& g : *spanning_vectors(b)) CHECK(bar(g, c.n) == g);
        for (const auto& p : M->basis) CHECK(bar(bar(FockVec::basis(p), c.n), c.n) == FockVec::basis(p));
    }
}

TEST_CASE("canonical bases: bar invariance, lattices, positivity")
{
    for (const auto& c : small_blocks()) {
        const BlockId b{c.n, c.core, c.w};
        for (const auto& lambda : block_partitions(b)) {
            const FockVec G = canonical_vector(lambda, c.n);
            const FockVec Gm = canonical_vector_minus(lambda, c.n);
            CHECK(bar(G, c.n) == G);
            CHECK(bar(Gm, c.n) == Gm);
            CHECK(G.coeff(lambda) == LaurentInt(1));
            CHECK(Gm.coeff(lambda) == LaurentInt(1));
            for (const auto& [mu, x] : G.terms())
                if (mu != lambda) CHECK(in_v_z(x));
            for (const auto& [mu, x] : Gm.terms())
                if (mu != lambda) CHECK(in_vinv_z(x));
            for (const auto& mu : block_partitions(b)) {
                CHECK(d_poly(lambda, mu, c.n).has_nonnegative_coefficients());
                CHECK(e_poly(lambda, mu, c.n).has_nonnegative_coefficients());
            }
        }
    }
}

TEST_CASE("the result does not depend on the triangular order")
{
    for (const auto& c : small_blocks()) {
        const BlockId b{c.n, c.core, c.w};
        for (bool minus : {false, true}) {
            const auto a = canonical_basis(b, minus);
            const auto r = canonical_basis(b, minus, true);
            CHECK(a->entries == r->entries);
        }
    }
}

TEST_CASE("G* is dual to G for the v-scalar product")
{
    for (const auto& c : small_blocks()) {
        const auto parts = block_partitions(BlockId{c.n, c.core, c.w});
        for (const auto& lambda : parts) {
            const FockVec star = upper_basis_Gstar(lambda, c.n);
            for (const auto& mu : parts)
                CHECK(scalar_product_v(canonical_vector(mu, c.n), star, c.n) == LaurentInt(lambda == mu ? 1 : 0));
        }
    }
}

TEST_CASE("divided powers of E_i on the upper basis follow the crystal")
{
    for (const auto& c : small_blocks()) {
        for (const auto& lambda : block_partitions(BlockId{c.n, c.core, c.w}))
            for (int i = 0; i < c.n; ++i) {
                const int k = crystal_epsilon(lambda, c.n, i);
                if (k == 0) continue;
                Partition top = lambda;
                for (int j = 0; j < k; ++j) top = *crystal_e(top, c.n, i);
                CHECK(apply_E_divided(i, k, upper_basis_Gstar(lambda, c.n), c.n) == upper_basis_Gstar(top, c.n));
            }
    }
}
