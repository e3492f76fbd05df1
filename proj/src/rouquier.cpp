#include "fockcb/rouquier.hpp"

#include "fockcb/canonical.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace fockcb {

namespace {

void require_params(int n, int w)
{
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (w < 1) throw std::invalid_argument("w must be at least 1");
}

int quotient_size_delta(const MultiPartition& a, const MultiPartition& b, int j)
{
    return a.components[j].size() - b.components[j].size();
}

void require_domain(const RouquierBlock& b, const Partition& p)
{
    if (!b.contains(p))
        throw DomainError(p.to_string() + " is not in P(rho, w) for rho = " + b.rho.to_string() +
                          ", w = " + std::to_string(b.w));
}

}  // namespace

CoreCoords rouquier_coords(int n, int w)
{
    require_params(n, w);
    CoreCoords c{n, std::vector<int>(n)};
    if (n % 2 == 1 || w % 2 == 1) {
        // (2i - 1 - n)(w - 1) / 2; when n is even, w - 1 is even.
        for (int i = 1; i <= n; ++i) c.a[i - 1] = (2 * i - 1 - n) * (w - 1) / 2;
    } else {
        for (int i = 1; i <= n / 2; ++i) {
            c.a[i - 1] = ((2 * i - 1) * w - 2 * (i - 1)) / 2;
            c.a[n - i] = -c.a[i - 1];
        }
    }
    return c;
}

Partition rouquier_core(int n, int w) { return core_from_coords(rouquier_coords(n, w)); }

RouquierBlock RouquierBlock::make(int n, int w)
{
    RouquierBlock b;
    b.n = n;
    b.w = w;
    b.rho = rouquier_core(n, w);
    b.r = residue(b.rho.part(0), n);
    return b;
}

bool RouquierBlock::contains(const Partition& lambda) const
{
    return n_weight(lambda, n) <= w && n_core(lambda, n) == rho;
}

std::vector<Partition> RouquierBlock::partitions() const
{
    std::vector<Partition> out;
    for (int u = 0; u <= w; ++u)
        for (auto& p : block_partitions(BlockId{n, rho, u})) out.push_back(std::move(p));
    return out;
}

MultiPartition RouquierBlock::quotient(const Partition& lambda) const { return n_quotient(lambda, n, rho); }

Partition RouquierBlock::from_quotient(const MultiPartition& q) const { return from_core_and_quotient(rho, q, rho); }

SymVec phi_map(const FockVec& x, const Partition& rho, int n)
{
    SymVec r(n);
    for (const auto& [lambda, c] : x.terms()) {
        if (n_core(lambda, n) != rho)
            throw std::invalid_argument(lambda.to_string() + " does not have core " + rho.to_string());
        r.add(n_quotient(lambda, n, rho), n_sign(lambda, n) > 0 ? c : -c);
    }
    return r;
}

FockVec phi_inverse(const SymVec& x, const Partition& rho)
{
    const int n = x.n();
    FockVec r;
    for (const auto& [q, c] : x.entries()) {
        const Partition lambda = from_core_and_quotient(rho, q, rho);
        r.add(lambda, n_sign(lambda, n) > 0 ? c : -c);
    }
    return r;
}

LaurentInt closed_d(const Partition& lambda, const Partition& mu, int n, int w)
{
    const RouquierBlock b = RouquierBlock::make(n, w);
    require_domain(b, lambda);
    require_domain(b, mu);
    const MultiPartition l = b.quotient(lambda), m = b.quotient(mu);
    int delta = 0;
    for (int j = 0; j + 1 < n; ++j) delta += (n - 1 - j) * quotient_size_delta(l, m, j);
    // The alternating coefficient <s_l, eta_m> carries (-1)^delta in front of the same sum.
    const LaurentInt c = eta_coefficient(l, m);
    return delta % 2 ? -c : c;
}

LaurentInt closed_e(const Partition& lambda, const Partition& mu, int n, int w)
{
    const RouquierBlock b = RouquierBlock::make(n, w);
    require_domain(b, lambda);
    require_domain(b, mu);
    return psi_coefficient(b.quotient(lambda), b.quotient(mu)).bar();
}

std::vector<int> h_operator_word(int j, int n, int r)
{
    if (n < 2 || j < 0 || j > n - 2) throw std::invalid_argument("H_{j,k} needs 0 <= j <= n-2");
    std::vector<int> word;
    for (int i = j + 1; i <= n - 1; ++i) word.push_back(residue(i + r, n));
    for (int i = j; i >= 0; --i) word.push_back(residue(i + r, n));
    return word;
}

FockVec H_operator(int j, int k, const FockVec& x, const RouquierBlock& block)
{
    if (k < 1) throw std::invalid_argument("H_{j,k} needs k >= 1");
    const std::vector<int> word = h_operator_word(j, block.n, block.r);
    FockVec y = x;
    for (auto it = word.rbegin(); it != word.rend(); ++it) y = apply_F_divided(*it, k, y, block.n);
    return y;
}

bool check_h_operator(const RouquierBlock& block, const Partition& lambda, int j, int k)
{
    const int n = block.n;
    const SymVec lhs = phi_map(H_operator(j, k, FockVec::basis(lambda), block), block.rho, n);
    const Alphabet a{{j + 1, 1, 0}, {j, -1, 1}};
    const Partition column(std::vector<int>(k, 1));
    const int sign = ((k * (n - j - 2)) % 2 ? -1 : 1) * n_sign(lambda, n);
    const SymVec rhs = (schur_of_alphabet(column, a, n) * SymVec::basis(block.quotient(lambda))).scaled(LaurentInt(sign));
    return lhs == rhs;
}

bool check_d_operator(const RouquierBlock& block, const Partition& lambda, int k)
{
    const int n = block.n;
    const SymVec lhs = phi_map(apply_D(k, FockVec::basis(lambda), n), block.rho, n);
    Alphabet a;
    for (int i = 0; i < n; ++i) a.push_back({i, 1, i - (n - 1)});
    const SymVec rhs = (schur_of_alphabet(Partition{k}, a, n) * SymVec::basis(block.quotient(lambda)))
                           .scaled(LaurentInt(n_sign(lambda, n)));
    return lhs == rhs;
}

bool Theorem1Report::all_ok() const
{
    return std::all_of(entries.begin(), entries.end(), [](const Theorem1Entry& e) { return e.plus_ok && e.minus_ok; });
}

Theorem1Report verify_theorem1(int n, int w, unsigned threads)
{
    const RouquierBlock b = RouquierBlock::make(n, w);
    Theorem1Report rep;
    rep.n = n;
    rep.w = w;
    rep.rho = b.rho;
    const std::vector<Partition> parts = b.partitions();
    rep.entries.resize(parts.size());
    auto check = [&](std::size_t idx) {
        const Partition& lambda = parts[idx];
        const MultiPartition q = b.quotient(lambda);
        const LaurentInt eps(n_sign(lambda, n));
        Theorem1Entry e;
        e.lambda = lambda;
        e.plus_ok = canonical_vector(lambda, n) == phi_inverse(eta_expansion(q).scaled(eps), b.rho);
        e.minus_ok = canonical_vector_minus(lambda, n) == phi_inverse(psi_expansion(q).scaled(eps), b.rho);
        rep.entries[idx] = std::move(e);
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        for (std::size_t i = 0; i < parts.size(); ++i) check(i);
        return rep;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < parts.size();) check(i);
        });
    for (auto& th : pool) th.join();
    return rep;
}

HookCheck prop73_structure_check(const Partition& lambda, const Partition& mu, int n, int w)
{
    const RouquierBlock b = RouquierBlock::make(n, w);
    require_domain(b, lambda);
    require_domain(b, mu);
    if (!lambda.contains(mu) || n_weight(mu, n) + 1 != n_weight(lambda, n))
        throw DomainError("mu must lie inside lambda with n-weight one less");
    const MultiPartition l = b.quotient(lambda), m = b.quotient(mu);
    HookCheck out;
    int changed = 0;
    for (int i = 0; i < n; ++i)
        if (l.components[i] != m.components[i]) {
            ++changed;
            if (l.components[i].contains(m.components[i])) out.colour = i;
        }
    if (changed != 1 || out.colour < 0) return out;
    // Cells of lambda/mu, and the hook (colour+1, 1^{n-colour-1}) anchored at the top-left cell.
    std::vector<Node> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = mu.part(r) + 1; c <= lambda.part(r); ++c) cells.push_back(Node{r + 1, c});
    if (cells.empty()) return out;
    const int arm = out.colour + 1, leg = n - out.colour - 1;
    const int top = cells.front().row;
    int left = cells.front().col;
    for (const Node& x : cells)
        if (x.row == top) left = std::min(left, x.col);
    std::vector<Node> hook;
    for (int c = 0; c < arm; ++c) hook.push_back(Node{top, left + c});
    for (int r = 1; r <= leg; ++r) hook.push_back(Node{top + r, left});
    std::sort(cells.begin(), cells.end());
    std::sort(hook.begin(), hook.end());
    out.hook_shape = cells == hook;
    out.spin = cells.back().row - cells.front().row;
    return out;
}

std::vector<ColouredRibbon> ribbon_colouring(const Partition& lambda, int n, int w)
{
    const RouquierBlock b = RouquierBlock::make(n, w);
    require_domain(b, lambda);
    std::vector<ColouredRibbon> out;
    Partition cur = lambda;
    while (cur != b.rho) {
        const auto hooks = removable_rim_hooks(cur, n);
        if (hooks.empty()) throw std::logic_error("no removable ribbon above the core");
        const RimHook& h = hooks.front();
        const HookCheck hc = prop73_structure_check(cur, h.inner, n, w);
        out.push_back(ColouredRibbon{hc.colour, h.ribbon.cells});
        cur = h.inner;
    }
    return out;
}

bool colours_separated(const std::vector<ColouredRibbon>& ribbons)
{
    for (const auto& a : ribbons)
        for (const auto& c : ribbons) {
            if (a.colour >= c.colour) continue;
            for (const Node& x : a.cells)
                for (const Node& y : c.cells)
                    if (x.col >= y.col) return false;
        }
    return true;
}

}  // namespace fockcb
