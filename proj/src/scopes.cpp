#include "fockcb/scopes.hpp"

#include "fockcb/canonical.hpp"
#include "fockcb/rouquier.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace fockcb {

namespace {

void require_residue(int i, int n)
{
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (i < 0 || i >= n) throw std::invalid_argument("residue out of range");
}

struct Components {
    std::vector<int> parent;
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Partition weyl_reflect_core(const Partition& tau, int i, int n)
{
    require_residue(i, n);
    CoreCoords c = core_coords(tau, n);
    if (i == 0) {
        const int a1 = c.a[0], an = c.a[n - 1];
        c.a[0] = an + 1;
        c.a[n - 1] = a1 - 1;
    } else {
        std::swap(c.a[i - 1], c.a[i]);
    }
    return core_from_coords(c);
}

int scopes_k(const Partition& tau, int i, int n)
{
    require_residue(i, n);
    const CoreCoords c = core_coords(tau, n);
    return i == 0 ? c.a[0] - c.a[n - 1] - 1 : c.a[i] - c.a[i - 1];
}

Partition scopes_bijection(const Partition& lambda, int i, int n)
{
    const Partition tau = n_core(lambda, n);
    const int k = scopes_k(tau, i, n);
    if (n_weight(lambda, n) > k) throw DomainError("n-weight exceeds k_i: outside the Scopes regime");
    const AddRemNodes nodes = addable_removable_nodes(lambda, n, i);
    if (!nodes.addable.empty() || static_cast<int>(nodes.removable.size()) != k)
        throw std::logic_error("Scopes block without exactly k_i removable i-nodes");
    Partition mu = lambda;
    for (const Node& x : nodes.removable) mu = remove_node(mu, x);
    return mu;
}

Partition scopes_bijection_crystal(const Partition& lambda, int i, int n)
{
    const int k = scopes_k(n_core(lambda, n), i, n);
    if (n_weight(lambda, n) > k) throw DomainError("n-weight exceeds k_i: outside the Scopes regime");
    Partition cur = lambda;
    for (int s = 0; s < k; ++s) {
        auto next = crystal_e(cur, n, i);
        if (!next) throw std::logic_error("crystal operator vanished early");
        cur = *next;
    }
    if (crystal_e(cur, n, i)) throw std::logic_error("crystal string longer than k_i");
    return cur;
}

std::pair<int, Partition> signed_reflection(const Partition& lambda, int i, int n)
{
    const FockVec r = reflection_r(i, FockVec::basis(lambda), n);
    if (r.size() != 1) throw std::logic_error("reflection of a basis vector is not a signed basis vector");
    const auto& [mu, c] = *r.terms().begin();
    if (c != LaurentInt(1) && c != LaurentInt(-1)) throw std::logic_error("reflection coefficient is not a sign");
    return {c == LaurentInt(1) ? 1 : -1, mu};
}

ScopesCondition scopes_condition(const Partition& tau, int i, int w, int n)
{
    const AffineWeight L = AffineWeight::of_block(BlockId{n, tau, w});
    const AffineWeight down = L.plus_alpha(i, -1);
    ScopesCondition r;
    r.within_regime = w <= scopes_k(tau, i, n);
    r.norm_positive = down.norm() >= 1;
    r.outside_fock = !down.in_fock();
    return r;
}

bool reflection_is_divided_power(const Partition& tau, int i, int w, int n)
{
    const int k = scopes_k(tau, i, n);
    if (w > k) throw DomainError("n-weight exceeds k_i: outside the Scopes regime");
    BigInt fact = 1;
    for (int m = 2; m <= k; ++m) fact *= m;
    for (const auto& lambda : block_partitions(BlockId{n, tau, w})) {
        FockVec y = FockVec::basis(lambda);
        for (int m = 0; m < k; ++m) y = classical_e(i, y, n);
        FockVec divided;
        for (const auto& [mu, c] : y.terms()) {
            const BigInt x = c.coeff(0);
            if (x % fact != 0) return false;
            divided.add(mu, LaurentInt(BigInt(x / fact)));
        }
        if (reflection_r(i, FockVec::basis(lambda), n) != divided) return false;
    }
    return true;
}

ScopesReport verify_scopes_invariance(const Partition& tau, int i, int w, int n)
{
    ScopesReport rep;
    rep.tau = tau;
    rep.i = i;
    rep.w = w;
    rep.k = scopes_k(tau, i, n);
    if (w > rep.k) throw DomainError("n-weight exceeds k_i: outside the Scopes regime");
    rep.image = weyl_reflect_core(tau, i, n);

    const auto source = block_partitions(BlockId{n, tau, w});
    const auto target = block_partitions(BlockId{n, rep.image, w});
    std::map<Partition, Partition> pi;
    rep.crystal_agrees = true;
    rep.divided_power = true;
    rep.upper_basis = true;
    for (const auto& lambda : source) {
        const Partition mu = scopes_bijection(lambda, i, n);
        pi.emplace(lambda, mu);
        rep.bijection.emplace_back(lambda, mu);
        rep.crystal_agrees = rep.crystal_agrees && scopes_bijection_crystal(lambda, i, n) == mu;
        rep.divided_power =
            rep.divided_power && apply_E_divided(i, rep.k, FockVec::basis(lambda), n) == FockVec::basis(mu);
        rep.upper_basis = rep.upper_basis &&
                          apply_E_divided(i, rep.k, upper_basis_Gstar(lambda, n), n) == upper_basis_Gstar(mu, n);
    }
    std::set<Partition> images;
    for (const auto& [l, m] : pi) images.insert(m);
    rep.bijective = images == std::set<Partition>(target.begin(), target.end()) && images.size() == source.size();

    rep.d_equal = rep.e_equal = rep.bijective;
    for (const auto& lambda : source)
        for (const auto& mu : source) {
            if (!rep.bijective) break;
            rep.d_equal = rep.d_equal && d_poly(lambda, mu, n) == d_poly(pi.at(lambda), pi.at(mu), n);
            rep.e_equal = rep.e_equal && e_poly(lambda, mu, n) == e_poly(pi.at(lambda), pi.at(mu), n);
        }
    return rep;
}

std::vector<OrbitClass> orbit_classes(int n, int w, int bound)
{
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (w < 0 || bound < 0) throw std::invalid_argument("negative weight or bound");
    std::vector<Partition> cores{Partition{}};
    std::map<Partition, int> id{{Partition{}, 0}};
    std::queue<Partition> todo;
    todo.push(Partition{});
    while (!todo.empty()) {
        const Partition t = todo.front();
        todo.pop();
        for (int i = 0; i < n; ++i) {
            const Partition s = weyl_reflect_core(t, i, n);
            if (s.size() > bound || id.count(s)) continue;
            id.emplace(s, static_cast<int>(cores.size()));
            cores.push_back(s);
            todo.push(s);
        }
    }
    Components uf{std::vector<int>(cores.size())};
    std::iota(uf.parent.begin(), uf.parent.end(), 0);
    std::vector<bool> leaks(cores.size(), false);
    for (std::size_t a = 0; a < cores.size(); ++a)
        for (int i = 0; i < n; ++i) {
            if (std::abs(scopes_k(cores[a], i, n)) < w) continue;
            const Partition s = weyl_reflect_core(cores[a], i, n);
            auto it = id.find(s);
            if (it == id.end())
                leaks[a] = true;
            else
                uf.unite(static_cast<int>(a), it->second);
        }
    const Partition rho = w == 0 ? Partition{} : rouquier_core(n, w);
    std::map<int, OrbitClass> classes;
    for (std::size_t a = 0; a < cores.size(); ++a) {
        OrbitClass& c = classes[uf.find(static_cast<int>(a))];
        c.cores.push_back(cores[a]);
        c.rouquier = c.rouquier || cores[a] == rho;
        c.frontier = c.frontier || leaks[a];
    }
    std::vector<OrbitClass> out;
    for (auto& [root, c] : classes) {
        std::sort(c.cores.begin(), c.cores.end(), size_lex_less);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitClass& x, const OrbitClass& y) { return size_lex_less(x.cores.front(), y.cores.front()); });
    return out;
}

}  // namespace fockcb
