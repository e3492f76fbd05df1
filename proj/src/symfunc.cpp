#include "fockcb/symfunc.hpp"

#include "fockcb/memo.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace fockcb {

namespace {

using LRKey = std::tuple<Partition, Partition, Partition>;

Memo<LRKey, long>& lr_memo()
{
    static Memo<LRKey, long> m;
    return m;
}

Memo<std::pair<Partition, Partition>, std::map<Partition, long>>& product_memo()
{
    static Memo<std::pair<Partition, Partition>, std::map<Partition, long>> m;
    return m;
}

Memo<std::pair<Partition, Partition>, long>& character_memo()
{
    static Memo<std::pair<Partition, Partition>, long> m;
    return m;
}

// LR tableaux of shape lambda/mu and content nu, filled in reading order
// (rows top to bottom, each row right to left) so that the lattice
// condition can be checked as we go.
long count_lr_tableaux(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = lambda.part(r) - 1; c >= mu.part(r); --c) cells.push_back({r, c});
    std::vector<std::vector<int>> T(lambda.length());
    for (int r = 0; r < lambda.length(); ++r) T[r].assign(lambda.part(r), 0);
    std::vector<int> count(nu.length() + 1, 0);
    long total = 0;
    std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[k];
        int hi = nu.length();
        if (c + 1 < lambda.part(r)) hi = std::min(hi, T[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= mu.part(r - 1)) lo = T[r - 1][c] + 1;
        for (int x = lo; x <= hi; ++x) {
            if (count[x] + 1 > nu.part(x - 1)) continue;
            if (x > 1 && count[x] + 1 > count[x - 1]) continue;
            ++count[x];
            T[r][c] = x;
            fill(k + 1);
            --count[x];
        }
        T[r][c] = 0;
    };
    fill(0);
    return total;
}

int conj_sign(int sign, int size) { return sign < 0 && size % 2 ? -1 : 1; }

// Every partition contained in lambda.
std::vector<Partition> subpartitions(const Partition& lambda)
{
    std::vector<Partition> out;
    for (int k = 0; k <= lambda.size(); ++k)
        for (const auto& p : partitions_of(k))
            if (lambda.contains(p)) out.push_back(p);
    return out;
}

MultiPartition single_component(int n, int index, const Partition& p)
{
    MultiPartition m = empty_multipartition(n);
    m.components[index] = p;
    return m;
}

// s_alpha(sign v^e A_i) = (sign v^e)^{|alpha|} s_alpha or s_{alpha'} for negative sign.
SymVec schur_of_term(const Partition& alpha, const AlphabetTerm& t, int n)
{
    const int sz = alpha.size();
    const Partition shape = t.sign < 0 ? alpha.conjugate() : alpha;
    SymVec r(n);
    r.add(single_component(n, t.index, shape), LaurentInt::monomial(conj_sign(t.sign, sz), t.exponent * sz));
    return r;
}

SymVec schur_of_alphabet_skew(const Partition& lambda, const Alphabet& a, std::size_t from, int n)
{
    if (from == a.size()) {
        SymVec r(n);
        if (lambda.empty()) r.add(empty_multipartition(n), LaurentInt(1));
        return r;
    }
    SymVec r(n);
    for (const auto& alpha : subpartitions(lambda)) {
        const SymVec head = schur_of_term(alpha, a[from], n);
        for (const auto& [beta, c] : skew_schur_expand(lambda, alpha))
            r += (head * schur_of_alphabet_skew(beta, a, from + 1, n)).scaled(LaurentInt(c));
    }
    return r;
}

// --- power-sum route ------------------------------------------------------------

using RatLaurent = std::map<int, mpq_class>;
using PowerVec = std::map<MultiPartition, RatLaurent>;

void add_rat(RatLaurent& x, int e, const mpq_class& c)
{
    auto [it, inserted] = x.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) x.erase(it);
    }
}

mpq_class z_factor(const Partition& rho)
{
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int k : rho.parts()) ++mult[k];
    for (const auto& [k, m] : mult)
        for (int j = 1; j <= m; ++j) z *= k * j;
    return mpq_class(z);
}

Partition with_part(const Partition& p, int k)
{
    std::vector<int> parts = p.parts();
    parts.push_back(k);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

PowerVec power_image(const Partition& lambda, const Alphabet& a, int n)
{
    PowerVec out;
    for (const auto& rho : partitions_of(lambda.size())) {
        const long chi = character(lambda, rho);
        if (chi == 0) continue;
        const mpq_class base = mpq_class(chi) / z_factor(rho);
        // Expand prod_k (sum_t sign_t v^{e_t k} p_k(A_{i_t})).
        std::function<void(std::size_t, MultiPartition&, int, int)> rec = [&](std::size_t j, MultiPartition& key,
                                                                              int sign, int exp) {
            if (j == static_cast<std::size_t>(rho.length())) {
                add_rat(out[key], exp, base * sign);
                return;
            }
            const int k = rho.parts()[j];
            for (const auto& t : a) {
                const Partition old = key.components[t.index];
                key.components[t.index] = with_part(old, k);
                rec(j + 1, key, sign * t.sign, exp + t.exponent * k);
                key.components[t.index] = old;
            }
        };
        MultiPartition key = empty_multipartition(n);
        rec(0, key, 1, 0);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
    return out;
}

PowerVec power_multiply(const PowerVec& x, const PowerVec& y)
{
    PowerVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            MultiPartition key = a;
            for (std::size_t i = 0; i < key.components.size(); ++i)
                for (int k : b.components[i].parts()) key.components[i] = with_part(key.components[i], k);
            RatLaurent& dst = out[key];
            for (const auto& [ea, qa] : ca)
                for (const auto& [eb, qb] : cb) add_rat(dst, ea + eb, qa * qb);
        }
    return out;
}

SymVec power_to_schur(const PowerVec& x, int n)
{
    std::map<MultiPartition, RatLaurent> acc;
    for (const auto& [rho, c] : x) {
        std::function<void(int, MultiPartition&, long)> rec = [&](int i, MultiPartition& mu, long chi) {
            if (i == n) {
                RatLaurent& dst = acc[mu];
                for (const auto& [e, q] : c) add_rat(dst, e, q * chi);
                return;
            }
            for (const auto& p : partitions_of(rho.components[i].size())) {
                const long ch = character(p, rho.components[i]);
                if (ch == 0) continue;
                mu.components[i] = p;
                rec(i + 1, mu, chi * ch);
            }
        };
        MultiPartition mu = empty_multipartition(n);
        rec(0, mu, 1);
    }
    SymVec r(n);
    for (const auto& [mu, c] : acc) {
        LaurentInt coef;
        for (const auto& [e, q] : c) {
            if (q.get_den() != 1) throw std::logic_error("power-sum expansion is not integral");
            coef.add_term(e, q.get_num());
        }
        r.add(mu, coef);
    }
    return r;
}

void require_n(int n)
{
    if (n < 1) throw std::invalid_argument("number of alphabets must be positive");
}

// Product of s_{parts[j]}(alphabets[j]) by the chosen route.
SymVec product_of_alphabets(const std::vector<Partition>& parts, const std::vector<Alphabet>& alphabets, int n,
                            Route route)
{
    if (route == Route::PowerSum) {
        PowerVec acc;
        acc[empty_multipartition(n)][0] = 1;
        for (std::size_t j = 0; j < parts.size(); ++j) acc = power_multiply(acc, power_image(parts[j], alphabets[j], n));
        return power_to_schur(acc, n);
    }
    SymVec acc = SymVec::basis(empty_multipartition(n));
    for (std::size_t j = 0; j < parts.size(); ++j) acc = acc * schur_of_alphabet(parts[j], alphabets[j], n, Route::Skew);
    return acc;
}

template <class Coefficient>
SymVec by_formula(const MultiPartition& m, Coefficient coefficient)
{
    SymVec r(m.n());
    for (const auto& other : multipartitions_of(m.n(), m.size())) r.add(other, coefficient(other));
    return r;
}

}  // namespace

long lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda)
{
    if (mu.size() + nu.size() != lambda.size()) return 0;
    if (!lambda.contains(mu) || !lambda.contains(nu)) return 0;
    if (mu.empty() || nu.empty()) return 1;
    LRKey key{mu, nu, lambda};
    if (auto hit = lr_memo().find(key)) return *hit;
    return *lr_memo().insert(key, std::make_shared<long>(count_lr_tableaux(lambda, mu, nu)));
}

std::map<Partition, long> schur_product(const Partition& mu, const Partition& nu)
{
    const auto key = std::make_pair(mu, nu);
    if (auto hit = product_memo().find(key)) return *hit;
    auto out = std::make_shared<std::map<Partition, long>>();
    for (const auto& lambda : partitions_of(mu.size() + nu.size()))
        if (long c = lr_coefficient(mu, nu, lambda)) out->emplace(lambda, c);
    return *product_memo().insert(key, out);
}

long lr_multi(const std::vector<Partition>& factors, const Partition& lambda)
{
    std::map<Partition, long> cur{{Partition{}, 1}};
    for (const auto& f : factors) {
        std::map<Partition, long> next;
        for (const auto& [g, c] : cur)
            for (const auto& [h, d] : schur_product(g, f))
                if (lambda.contains(h)) next[h] += c * d;
        cur = std::move(next);
    }
    auto it = cur.find(lambda);
    return it == cur.end() ? 0 : it->second;
}

std::map<Partition, long> skew_schur_expand(const Partition& lambda, const Partition& beta)
{
    std::map<Partition, long> out;
    if (!lambda.contains(beta)) return out;
    for (const auto& eps : partitions_of(lambda.size() - beta.size()))
        if (long c = lr_coefficient(beta, eps, lambda)) out.emplace(eps, c);
    return out;
}

long character(const Partition& lambda, const Partition& rho)
{
    if (lambda.size() != rho.size()) throw std::invalid_argument("character: sizes differ");
    if (rho.empty()) return 1;
    const auto key = std::make_pair(lambda, rho);
    if (auto hit = character_memo().find(key)) return *hit;
    const int k = rho.parts().front();
    const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    long total = 0;
    if (k == 1) {
        for (int r = 0; r < lambda.length(); ++r)
            if (lambda.part(r) > lambda.part(r + 1)) {
                std::vector<int> parts = lambda.parts();
                --parts[r];
                total += character(Partition(parts), rest);
            }
        return *character_memo().insert(key, std::make_shared<long>(total));
    }
    for (const auto& h : removable_rim_hooks(lambda, k))
        total += (h.ribbon.spin % 2 ? -1 : 1) * character(h.inner, rest);
    return *character_memo().insert(key, std::make_shared<long>(total));
}

SymVec SymVec::basis(const MultiPartition& m)
{
    SymVec r(m.n());
    r.add(m, LaurentInt(1));
    return r;
}

LaurentInt SymVec::coeff(const MultiPartition& m) const
{
    auto it = entries_.find(m);
    return it == entries_.end() ? LaurentInt{} : it->second;
}

void SymVec::add(const MultiPartition& m, const LaurentInt& c)
{
    if (m.n() != n_) throw std::invalid_argument("multipartition has the wrong number of components");
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

SymVec& SymVec::operator+=(const SymVec& o)
{
    for (const auto& [m, c] : o.entries_) add(m, c);
    return *this;
}

SymVec& SymVec::operator-=(const SymVec& o)
{
    for (const auto& [m, c] : o.entries_) add(m, -c);
    return *this;
}

SymVec SymVec::scaled(const LaurentInt& c) const
{
    SymVec r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : entries_) r.entries_.emplace_hint(r.entries_.end(), m, x * c);
    return r;
}

SymVec SymVec::operator*(const SymVec& o) const
{
    if (o.n_ != n_) throw std::invalid_argument("product of vectors over different alphabets");
    SymVec r(n_);
    for (const auto& [a, ca] : entries_)
        for (const auto& [b, cb] : o.entries_) {
            const LaurentInt c = ca * cb;
            MultiPartition m = empty_multipartition(n_);
            std::function<void(int, long)> rec = [&](int i, long k) {
                if (i == n_) {
                    r.add(m, c * LaurentInt(k));
                    return;
                }
                for (const auto& [p, d] : schur_product(a.components[i], b.components[i])) {
                    m.components[i] = p;
                    rec(i + 1, k * d);
                }
            };
            rec(0, 1);
        }
    return r;
}

SymVec SymVec::conjugate() const
{
    SymVec r(n_);
    for (const auto& [m, c] : entries_) r.add(m.conjugate(), c.bar());
    return r;
}

bool SymVec::in_lattice() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.in_z_v(); });
}

bool SymVec::in_lattice_minus() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.second.in_z_vinv(); });
}

SymVec operator+(SymVec a, const SymVec& b) { return a += b; }
SymVec operator-(SymVec a, const SymVec& b) { return a -= b; }

LaurentInt scalar_product(const SymVec& x, const SymVec& y)
{
    LaurentInt r;
    for (const auto& [m, c] : x.entries()) {
        auto it = y.entries().find(m);
        if (it != y.entries().end()) r += c * it->second;
    }
    return r;
}

SymVec schur_of_alphabet(const Partition& lambda, const Alphabet& alphabet, int n, Route route)
{
    require_n(n);
    for (const auto& t : alphabet)
        if (t.index < 0 || t.index >= n || (t.sign != 1 && t.sign != -1))
            throw std::invalid_argument("malformed alphabet term");
    switch (route) {
    case Route::Skew:
        return schur_of_alphabet_skew(lambda, alphabet, 0, n);
    case Route::PowerSum:
        return power_to_schur(power_image(lambda, alphabet, n), n);
    case Route::Formula:
        break;
    }
    throw std::invalid_argument("no closed formula for a general alphabet");
}

SymVec eta_expansion(const MultiPartition& mu, Route route)
{
    const int n = mu.n();
    require_n(n);
    if (route == Route::Formula)
        return by_formula(mu, [&](const MultiPartition& lambda) { return eta_coefficient(lambda, mu); });
    std::vector<Alphabet> alphabets{{{0, 1, 0}}};
    for (int j = 1; j < n; ++j) alphabets.push_back({{j, 1, 0}, {j - 1, -1, 1}});
    return product_of_alphabets(mu.components, alphabets, n, route);
}

SymVec psi_expansion(const MultiPartition& lambda, Route route)
{
    const int n = lambda.n();
    require_n(n);
    if (route == Route::Formula)
        return by_formula(lambda, [&](const MultiPartition& mu) { return psi_coefficient(lambda, mu); });
    std::vector<Alphabet> alphabets;
    for (int j = 0; j < n; ++j) {
        Alphabet a;
        for (int i = 0; i <= j; ++i) a.push_back({i, 1, i - j});
        alphabets.push_back(a);
    }
    return product_of_alphabets(lambda.components, alphabets, n, route);
}

SymVec phi_expansion(const MultiPartition& lambda) { return psi_expansion(lambda.conjugate()).conjugate(); }

SymVec phi_expansion_direct(const MultiPartition& lambda, Route route)
{
    const int n = lambda.n();
    require_n(n);
    if (route == Route::Formula) throw std::invalid_argument("phi has no separate coefficient formula");
    std::vector<Alphabet> alphabets;
    for (int j = 0; j < n; ++j) {
        Alphabet a;
        for (int i = j; i < n; ++i) a.push_back({i, 1, i - j});
        alphabets.push_back(a);
    }
    return product_of_alphabets(lambda.components, alphabets, n, route);
}

LaurentInt eta_coefficient(const MultiPartition& lambda, const MultiPartition& mu)
{
    const int n = mu.n();
    if (lambda.n() != n) throw std::invalid_argument("multipartitions of different lengths");
    if (lambda.size() != mu.size()) return {};
    int delta = 0;
    for (int j = 0; j + 1 < n; ++j) delta += (n - 1 - j) * (lambda.components[j].size() - mu.components[j].size());
    // Chains alpha^0 = empty, beta^j in mu^j / alpha^j, (alpha^{j+1})' in lambda^j / beta^j, alpha^n = empty.
    long total = 0;
    std::function<void(int, const Partition&, long)> rec = [&](int j, const Partition& alpha, long acc) {
        if (j == n) {
            if (alpha.empty()) total += acc;
            return;
        }
        for (const auto& [beta, c1] : skew_schur_expand(mu.components[j], alpha))
            for (const auto& [gamma, c2] : skew_schur_expand(lambda.components[j], beta))
                rec(j + 1, gamma.conjugate(), acc * c1 * c2);
    };
    rec(0, Partition{}, 1);
    if (total == 0) return {};
    return LaurentInt::monomial(delta % 2 ? -total : total, delta);
}

LaurentInt psi_coefficient(const MultiPartition& lambda, const MultiPartition& mu)
{
    const int n = mu.n();
    if (lambda.n() != n) throw std::invalid_argument("multipartitions of different lengths");
    if (lambda.size() != mu.size()) return {};
    int Delta = 0;
    for (int j = 0; j < n; ++j) Delta += j * (lambda.components[j].size() - mu.components[j].size());

    // Ordered decompositions of p into m pieces with their multi-LR coefficients.
    using Decomp = std::map<std::vector<Partition>, long>;
    std::function<Decomp(const Partition&, int)> decompose = [&](const Partition& p, int m) {
        Decomp out;
        if (m == 1) {
            out[{p}] = 1;
            return out;
        }
        for (const auto& first : subpartitions(p))
            for (const auto& [rest, c] : skew_schur_expand(p, first))
                for (const auto& [tail, d] : decompose(rest, m - 1)) {
                    std::vector<Partition> key{first};
                    key.insert(key.end(), tail.begin(), tail.end());
                    out[key] += c * d;
                }
        return out;
    };

    // alpha[i][j] for i <= j: column j splits lambda^j, row i multiplies to mu^i.
    std::vector<std::vector<Partition>> alpha(n, std::vector<Partition>(n));
    std::vector<int> row_size(n, 0);
    long total = 0;
    std::function<void(int, long)> rec = [&](int j, long acc) {
        if (j == n) {
            long prod = acc;
            for (int i = 0; i < n && prod; ++i) {
                std::vector<Partition> factors(alpha[i].begin() + i, alpha[i].end());
                prod *= lr_multi(factors, mu.components[i]);
            }
            total += prod;
            return;
        }
        for (const auto& [pieces, c] : decompose(lambda.components[j], j + 1)) {
            bool ok = true;
            for (int i = 0; i <= j; ++i) ok = ok && row_size[i] + pieces[i].size() <= mu.components[i].size();
            if (!ok) continue;
            for (int i = 0; i <= j; ++i) {
                alpha[i][j] = pieces[i];
                row_size[i] += pieces[i].size();
            }
            rec(j + 1, acc * c);
            for (int i = 0; i <= j; ++i) row_size[i] -= pieces[i].size();
        }
    };
    rec(0, 1);
    if (total == 0) return {};
    return LaurentInt::monomial(total, -Delta);
}

bool cauchy_check(int n, int degree_cap)
{
    require_n(n);
    for (int d = 0; d <= degree_cap; ++d) {
        const auto all = multipartitions_of(n, d);
        std::vector<SymVec> phi, eta;
        for (const auto& m : all) {
            phi.push_back(phi_expansion(m));
            eta.push_back(eta_expansion(m));
        }
        for (std::size_t a = 0; a < all.size(); ++a)
            for (std::size_t b = 0; b < all.size(); ++b)
                if (scalar_product(phi[a], eta[b]) != LaurentInt(a == b ? 1 : 0)) return false;
    }
    return true;
}

}  // namespace fockcb
