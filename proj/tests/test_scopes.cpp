#include "doctest.h"

#include "fockcb/rouquier.hpp"
#include "fockcb/scopes.hpp"

#include <algorithm>
#include <set>
#include <tuple>

using namespace fockcb;

namespace {

std::vector<Partition> cores_up_to(int n, int bound)
{
    std::vector<Partition> out;
    for (int m = 0; m <= bound; ++m)
        for (auto& p : partitions_of(m))
            if (is_n_core(p, n)) out.push_back(p);
    return out;
}

// Lambda^j of the sl2 chain, as its 2-core.
Partition sl2_core(int j)
{
    Partition t;
    for (int s = 0; s < j; ++s) t = weyl_reflect_core(t, s % 2 == 0 ? 0 : 1, 2);
    return t;
}

}  // namespace

TEST_CASE("reflections of cores")
{
    CHECK(weyl_reflect_core(Partition{3, 1}, 2, 3) == Partition{2});
    CHECK(scopes_k(Partition{3, 1}, 2, 3) == 2);
    for (int n = 2; n <= 4; ++n) {
        for (int i = 0; i < n; ++i) CHECK(scopes_k(Partition{}, i, n) == (i == 0 ? -1 : 0));
        for (const auto& tau : cores_up_to(n, 10))
            for (int i = 0; i < n; ++i) {
                const Partition s = weyl_reflect_core(tau, i, n);
                CHECK(is_n_core(s, n));
                CHECK(weyl_reflect_core(s, i, n) == tau);
                CHECK(scopes_k(s, i, n) == -scopes_k(tau, i, n));
                const AffineWeight L = AffineWeight::of_block(BlockId{n, tau, 1});
                CHECK(scopes_k(tau, i, n) == -L.pairing_alpha(i));
                CHECK(L.reflect(i).block() == BlockId{n, s, 1});
            }
    }
    CHECK_THROWS_AS(weyl_reflect_core(Partition{}, 3, 3), std::invalid_argument);
}

TEST_CASE("the Scopes condition in terms of weights")
{
    for (int n = 2; n <= 4; ++n)
        for (const auto& tau : cores_up_to(n, 12))
            for (int i = 0; i < n; ++i)
                for (int w = 0; w <= 4; ++w) CHECK(scopes_condition(tau, i, w, n).consistent());
}

TEST_CASE("the bijection pi_i")
{
    const Partition tau{3, 1};
    CHECK(scopes_bijection(Partition{3, 1}, 2, 3) == Partition{2});
    for (const auto& lambda : block_partitions(BlockId{3, tau, 2})) {
        const Partition mu = scopes_bijection(lambda, 2, 3);
        CHECK(lambda.size() - mu.size() == 2);
        CHECK(n_core(mu, 3) == Partition{2});
        CHECK(scopes_bijection_crystal(lambda, 2, 3) == mu);
    }
    CHECK_THROWS_AS(scopes_bijection(Partition{3, 1}, 1, 3), DomainError);
    CHECK_THROWS_AS(scopes_bijection(Partition{3}, 1, 3), DomainError);
}

TEST_CASE("reflection r_i as a divided power")
{
    int checked = 0;
    for (int n = 2; n <= 3; ++n)
        for (const auto& tau : cores_up_to(n, 8))
            for (int i = 0; i < n; ++i) {
                const int k = scopes_k(tau, i, n);
                for (int w = 0; w <= std::min(k, 2); ++w) {
                    CHECK(reflection_is_divided_power(tau, i, w, n));
                    ++checked;
                }
            }
    CHECK(checked >= 10);
    CHECK_THROWS_AS(reflection_is_divided_power(Partition{}, 1, 1, 3), DomainError);
}

TEST_CASE("signed reflections outside the Scopes regime")
{
    // (1, 1) block of n = 2: k_1 = 1 < w = 2; r_1 still permutes the basis up to sign.
    for (const auto& [n, tau, i, w] : std::vector<std::tuple<int, Partition, int, int>>{
             {2, Partition{1}, 1, 2}, {3, Partition{}, 0, 2}, {3, Partition{2}, 1, 1}}) {
        const Partition image = weyl_reflect_core(tau, i, n);
        std::set<Partition> seen;
        for (const auto& lambda : block_partitions(BlockId{n, tau, w})) {
            const auto [sign, mu] = signed_reflection(lambda, i, n);
            CHECK((sign == 1 || sign == -1));
            CHECK(weight_of(mu, n) == BlockId{n, image, w});
            seen.insert(mu);
        }
        CHECK(seen.size() == block_partitions(BlockId{n, image, w}).size());
    }
    // Inside the regime the sign is always +1 and r_i agrees with pi_i.
    for (const auto& lambda : block_partitions(BlockId{3, Partition{3, 1}, 2})) {
        const auto [sign, mu] = signed_reflection(lambda, 2, 3);
        CHECK(sign == 1);
        CHECK(mu == scopes_bijection(lambda, 2, 3));
    }
    CHECK(signed_reflection(Partition{}, 0, 2).first == -1);
}

TEST_CASE("decomposition numbers are invariant under Scopes reflections")
{
    int triples = 0;
    for (int n = 2; n <= 3; ++n)
        for (const auto& tau : cores_up_to(n, 6))
            for (int i = 0; i < n; ++i) {
                const int k = scopes_k(tau, i, n);
                for (int w = 1; w <= std::min(k, n == 2 ? 3 : 2); ++w) {
                    const ScopesReport r = verify_scopes_invariance(tau, i, w, n);
                    CHECK(r.ok());
                    CHECK(r.image == weyl_reflect_core(tau, i, n));
                    ++triples;
                }
            }
    CHECK(triples >= 5);
    CHECK_THROWS_AS(verify_scopes_invariance(Partition{2}, 2, 1, 3), DomainError);
}

TEST_CASE("orbit classes")
{
    for (int n = 2; n <= 4; ++n) {
        const auto classes = orbit_classes(n, 0, 12);
        REQUIRE(classes.size() == 1);
        CHECK(classes.front().rouquier);
    }
    // sl2: the class of rho(w) is {Lambda^j : j >= w - 1}.
    for (int w = 1; w <= 4; ++w) {
        const int bound = 60;
        const auto classes = orbit_classes(2, w, bound);
        const OrbitClass* rq = nullptr;
        for (const auto& c : classes)
            if (c.rouquier) rq = &c;
        REQUIRE(rq != nullptr);
        CHECK(rq->frontier);
        const std::set<Partition> members(rq->cores.begin(), rq->cores.end());
        for (int j = 0; sl2_core(j).size() <= bound; ++j) CHECK(members.count(sl2_core(j)) == (j >= w - 1 ? 1u : 0u));
    }
    // Admissible reflections stay inside a class.
    for (const auto& c : orbit_classes(3, 2, 15))
        for (const auto& tau : c.cores)
            for (int i = 0; i < 3; ++i) {
                const Partition s = weyl_reflect_core(tau, i, 3);
                if (s.size() > 15) continue;
                if (std::abs(scopes_k(tau, i, 3)) >= 2)
                    CHECK(std::find(c.cores.begin(), c.cores.end(), s) != c.cores.end());
            }
}
