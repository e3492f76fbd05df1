#include "fockcb/canonical.hpp"

#include "fockcb/memo.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

namespace fockcb {

namespace {

using u64 = std::uint64_t;
using ModMatrix = std::vector<std::vector<u64>>;

// Fixed evaluation point for rank selection, so results are reproducible.
constexpr u64 kRankPoint = 1234567891011ULL;

Memo<BlockId, std::vector<FockVec>>& span_memo()
{
    static Memo<BlockId, std::vector<FockVec>> m;
    return m;
}

Memo<BlockId, BarMatrix>& bar_memo()
{
    static Memo<BlockId, BarMatrix> m;
    return m;
}

Memo<std::pair<BlockId, bool>, DecompMatrix>& canonical_memo()
{
    static Memo<std::pair<BlockId, bool>, DecompMatrix> m;
    return m;
}

std::size_t index_in(const std::vector<Partition>& v, const Partition& p)
{
    auto it = std::find(v.begin(), v.end(), p);
    if (it == v.end()) throw std::out_of_range("partition " + p.to_string() + " is not in the block");
    return static_cast<std::size_t>(it - v.begin());
}

// Incremental row echelon form mod p.
class ModEchelon {
public:
    explicit ModEchelon(std::size_t dim) : dim_(dim) {}

    bool try_add(std::vector<u64> x)
    {
        for (const auto& [p, row] : rows_) {
            if (x[p] == 0) continue;
            const u64 c = x[p];
            for (std::size_t j = 0; j < dim_; ++j) x[j] = modp::sub(x[j], modp::mul(c, row[j]));
        }
        std::size_t p = 0;
        while (p < dim_ && x[p] == 0) ++p;
        if (p == dim_) return false;
        const u64 inv = modp::inv(x[p]);
        for (auto& e : x) e = modp::mul(e, inv);
        rows_.emplace_back(p, std::move(x));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<u64>>> rows_;
};

// X * Y^{-1} mod p, or nullopt if Y is singular.
std::optional<ModMatrix> right_divide(const ModMatrix& X, ModMatrix Y)
{
    const std::size_t N = Y.size();
    // Solve Z Y = X, i.e. Y^T Z^T = X^T: Gauss-Jordan on [Y^T | X^T].
    ModMatrix A(N, std::vector<u64>(2 * N));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            A[r][c] = Y[c][r];
            A[r][N + c] = X[c][r];
        }
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && A[piv][col] == 0) ++piv;
        if (piv == N) return std::nullopt;
        std::swap(A[piv], A[col]);
        const u64 inv = modp::inv(A[col][col]);
        for (auto& e : A[col]) e = modp::mul(e, inv);
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            const u64 c = A[r][col];
            for (std::size_t j = col; j < 2 * N; ++j) A[r][j] = modp::sub(A[r][j], modp::mul(c, A[col][j]));
        }
    }
    ModMatrix Z(N, std::vector<u64>(N));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) Z[c][r] = A[r][N + c];
    return Z;
}

// Coefficients (ascending) of the polynomial of degree < xs.size() through
// the points (xs[j], ys[j]).
std::vector<u64> interpolate(const std::vector<u64>& xs, std::vector<u64> ys)
{
    const std::size_t m = xs.size();
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) {
            ys[i] = modp::mul(modp::sub(ys[i], ys[i - 1]), modp::inv(modp::sub(xs[i], xs[i - j])));
            if (i == j) break;
        }
    std::vector<u64> coef(m, 0);
    for (std::size_t k = m; k-- > 0;) {
        // coef <- coef * (x - xs[k]) + ys[k]
        for (std::size_t j = m - 1; j > 0; --j) coef[j] = modp::sub(coef[j - 1], modp::mul(coef[j], xs[k]));
        coef[0] = modp::sub(0, modp::mul(coef[0], xs[k]));
        coef[0] = modp::add(coef[0], ys[k]);
    }
    return coef;
}

u64 horner(const std::vector<u64>& coef, u64 x)
{
    u64 r = 0;
    for (std::size_t j = coef.size(); j-- > 0;) r = modp::add(modp::mul(r, x), coef[j]);
    return r;
}

using LMatrix = std::vector<std::vector<LaurentInt>>;

LMatrix multiply(const LMatrix& a, const LMatrix& b)
{
    const std::size_t N = a.size();
    LMatrix c(N, std::vector<LaurentInt>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < N; ++j)
                if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

LMatrix bar_entries(const LMatrix& a)
{
    LMatrix r = a;
    for (auto& row : r)
        for (auto& e : row) e = e.bar();
    return r;
}

// Recover M = X * bar(X)^{-1} by evaluating at points mod p, interpolating
// v^E M, and checking the candidate exactly; E doubles until it fits.
LMatrix solve_bar_matrix(const LMatrix& X)
{
    const std::size_t N = X.size();
    const LMatrix Xbar = bar_entries(X);
    LMatrix identity(N, std::vector<LaurentInt>(N));
    for (std::size_t i = 0; i < N; ++i) identity[i][i] = LaurentInt(1);

    std::mt19937_64 rng(20011);
    std::vector<u64> xs;
    std::vector<std::vector<std::vector<u64>>> values;  // per point, N x N
    auto add_point = [&] {
        for (;;) {
            const u64 t = 2 + rng() % (modp::kPrime - 3);
            if (std::find(xs.begin(), xs.end(), t) != xs.end()) continue;
            const modp::PowerTable pt(t), pti(modp::inv(t));
            ModMatrix Xt(N, std::vector<u64>(N)), Yt(N, std::vector<u64>(N));
            for (std::size_t r = 0; r < N; ++r)
                for (std::size_t c = 0; c < N; ++c) {
                    Xt[r][c] = X[r][c].eval_mod(pt);
                    Yt[r][c] = X[r][c].eval_mod(pti);
                }
            auto M = right_divide(Xt, Yt);
            if (!M) continue;
            xs.push_back(t);
            values.push_back(std::move(*M));
            return;
        }
    };

    for (int E = 4; E <= 4096; E *= 2) {
        const std::size_t need = static_cast<std::size_t>(2 * E + 2);
        while (xs.size() < need) add_point();
        const std::vector<u64> fit(xs.begin(), xs.begin() + (need - 1));
        const u64 check = xs[need - 1];
        LMatrix M(N, std::vector<LaurentInt>(N));
        bool ok = true;
        for (std::size_t r = 0; r < N && ok; ++r)
            for (std::size_t c = 0; c < N && ok; ++c) {
                std::vector<u64> ys(need - 1);
                for (std::size_t j = 0; j + 1 < need; ++j)
                    ys[j] = modp::mul(values[j][r][c], modp::pow(xs[j], static_cast<u64>(E)));
                const auto coef = interpolate(fit, ys);
                if (horner(coef, check) != modp::mul(values[need - 1][r][c], modp::pow(check, static_cast<u64>(E)))) {
                    ok = false;
                    break;
                }
                for (std::size_t j = 0; j < coef.size(); ++j) M[r][c].add_term(static_cast<int>(j) - E, modp::lift(coef[j]));
            }
        if (!ok) continue;
        if (multiply(M, Xbar) != X) continue;
        if (multiply(M, bar_entries(M)) != identity) throw std::logic_error("recovered bar matrix is not an involution");
        return M;
    }
    throw std::logic_error("bar matrix degree bound exceeded");
}

}  // namespace

std::size_t BarMatrix::index(const Partition& p) const { return index_in(basis, p); }
std::size_t DecompMatrix::index(const Partition& p) const { return index_in(order, p); }

LaurentInt DecompMatrix::at(const Partition& lambda, const Partition& mu) const
{
    return entries[index(lambda)][index(mu)];
}

namespace {

// A weight space with bar-invariant generators stored densely over its basis.
struct Space {
    std::vector<Partition> basis;
    std::map<Partition, std::size_t> index;
    std::vector<std::vector<LaurentInt>> gens;  // gens[k][row]
    std::vector<std::vector<u64>> evals;        // gens evaluated at kRankPoint
};

Memo<BlockId, Space>& space_memo()
{
    static Memo<BlockId, Space> m;
    return m;
}

// One term sign * v^exp * s(basis[row]) of an operator image.
struct Mono {
    std::size_t row;
    int exp;
    int sign;
};

using OpTable = std::vector<std::vector<Mono>>;

template <class Op>
OpTable op_table(const Space& from, const Space& to, Op op)
{
    OpTable t(from.basis.size());
    for (std::size_t j = 0; j < from.basis.size(); ++j) {
        const FockVec img = op(FockVec::basis(from.basis[j]));
        for (const auto& [mu, c] : img.terms()) {
            auto it = to.index.find(mu);
            if (it == to.index.end()) throw std::logic_error("generator leaves its weight space");
            if (!c.is_monomial() || abs(c.coeff(c.min_degree())) != 1)
                throw std::logic_error("operator coefficient is not a signed monomial");
            t[j].push_back(Mono{it->second, c.min_degree(), sgn(c.coeff(c.min_degree()))});
        }
    }
    return t;
}

std::shared_ptr<const Space> space(const BlockId& b);

// Offer every image under `table` of the generators of `from`; the cheap
// evaluation decides independence before the exact image is formed.
void offer_images(Space& s, ModEchelon& ech, const Space& from, const OpTable& table, const modp::PowerTable& powers)
{
    const std::size_t N = s.basis.size();
    for (std::size_t k = 0; k < from.gens.size() && s.gens.size() < N; ++k) {
        std::vector<u64> ev(N, 0);
        bool nonzero = false;
        for (std::size_t j = 0; j < from.basis.size(); ++j) {
            const u64 y = from.evals[k][j];
            if (y == 0) continue;
            for (const Mono& m : table[j]) {
                const u64 term = modp::mul(y, powers(m.exp));
                ev[m.row] = m.sign > 0 ? modp::add(ev[m.row], term) : modp::sub(ev[m.row], term);
                nonzero = true;
            }
        }
        if (!nonzero) continue;
        std::vector<u64> keep = ev;
        if (!ech.try_add(std::move(ev))) continue;
        std::vector<LaurentInt> x(N);
        for (std::size_t j = 0; j < from.basis.size(); ++j) {
            const LaurentInt& y = from.gens[k][j];
            if (y.is_zero()) continue;
            for (const Mono& m : table[j])
                for (const auto& [e, c] : y.terms()) x[m.row].add_term(e + m.exp, m.sign > 0 ? c : BigInt(-c));
        }
        s.gens.push_back(std::move(x));
        s.evals.push_back(std::move(keep));
    }
}

std::shared_ptr<const Space> space(const BlockId& b)
{
    if (auto hit = space_memo().find(b)) return hit;
    static const modp::PowerTable powers(kRankPoint);
    auto s = std::make_shared<Space>();
    s->basis = block_partitions(b);
    const std::size_t N = s->basis.size();
    for (std::size_t r = 0; r < N; ++r) s->index.emplace(s->basis[r], r);
    ModEchelon ech(N);

    if (b.core.empty() && b.weight_w == 0) {
        s->gens.push_back({LaurentInt(1)});
        s->evals.push_back({1});
    } else {
        // Every vector of the weight space is F_i applied to a vector one
        // step up, or (on the empty core) D_k applied to a lower weight.
        const int n = b.n;
        const AffineWeight wt = AffineWeight::of_block(b);
        for (int i = 0; i < n && s->gens.size() < N; ++i) {
            const AffineWeight up = wt.plus_alpha(i);
            if (!up.in_fock()) continue;
            const auto from = space(up.block());
            const OpTable t = op_table(*from, *s, [&](const FockVec& x) { return apply_F(i, x, n); });
            offer_images(*s, ech, *from, t, powers);
        }
        if (b.core.empty())
            for (int k = 1; k <= b.weight_w && s->gens.size() < N; ++k) {
                const auto from = space(BlockId{n, b.core, b.weight_w - k});
                const OpTable t = op_table(*from, *s, [&](const FockVec& x) { return apply_D(k, x, n); });
                offer_images(*s, ech, *from, t, powers);
            }
    }
    if (s->gens.size() != N) throw std::logic_error("generator words do not span the weight space");
    return space_memo().insert(b, s);
}

}  // namespace

std::shared_ptr<const std::vector<FockVec>> spanning_vectors(const BlockId& b)
{
    if (auto hit = span_memo().find(b)) return hit;
    const auto s = space(b);
    auto out = std::make_shared<std::vector<FockVec>>();
    for (const auto& g : s->gens) {
        FockVec x;
        for (std::size_t r = 0; r < g.size(); ++r) x.add(s->basis[r], g[r]);
        out->push_back(std::move(x));
    }
    return span_memo().insert(b, out);
}

std::shared_ptr<const BarMatrix> bar_involution(const BlockId& b)
{
    if (auto hit = bar_memo().find(b)) return hit;
    auto out = std::make_shared<BarMatrix>();
    out->block = b;
    out->basis = block_partitions(b);
    const auto s = space(b);
    const std::size_t N = out->basis.size();
    LMatrix X(N, std::vector<LaurentInt>(N));
    for (std::size_t c = 0; c < N; ++c)
        for (std::size_t r = 0; r < N; ++r) X[r][c] = s->gens[c][r];
    out->entries = solve_bar_matrix(X);
    return bar_memo().insert(b, out);
}

FockVec bar(const FockVec& x, int n)
{
    FockVec r;
    for (const auto& [blk, part] : split_blocks(x, n)) {
        const auto M = bar_involution(blk);
        for (const auto& [mu, c] : part.terms()) {
            const std::size_t col = M->index(mu);
            const LaurentInt cb = c.bar();
            for (std::size_t row = 0; row < M->basis.size(); ++row)
                if (!M->entries[row][col].is_zero()) r.add(M->basis[row], cb * M->entries[row][col]);
        }
    }
    return r;
}

namespace {

// Order in which every basis vector comes after all vectors it feeds through
// the bar matrix (bar(s(l)) - s(l) is supported on later vectors).
std::vector<std::size_t> triangular_order(const BarMatrix& M, bool reverse_ties)
{
    const std::size_t N = M.basis.size();
    std::vector<int> indeg(N, 0);
    for (std::size_t r = 0; r < N; ++r) {
        if (M.entries[r][r] != LaurentInt(1)) throw std::logic_error("bar matrix has a non-unit diagonal");
        for (std::size_t c = 0; c < N; ++c)
            if (r != c && !M.entries[r][c].is_zero()) ++indeg[r];
    }
    auto cmp = [reverse_ties](std::size_t a, std::size_t b) { return reverse_ties ? a < b : a > b; };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(cmp)> ready(cmp);
    for (std::size_t i = 0; i < N; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        const std::size_t c = ready.top();
        ready.pop();
        order.push_back(c);
        for (std::size_t r = 0; r < N; ++r)
            if (r != c && !M.entries[r][c].is_zero() && --indeg[r] == 0) ready.push(r);
    }
    if (order.size() != N) throw std::logic_error("bar matrix is not triangular for any order");
    return order;
}

// Columns g[.][mu] of G(mu) (or G^-(mu)) in the basis of M.
LMatrix correct(const BarMatrix& M, const std::vector<std::size_t>& order, bool minus)
{
    const std::size_t N = M.basis.size();
    LMatrix g(N, std::vector<LaurentInt>(N));
    for (std::size_t mu = 0; mu < N; ++mu) {
        std::vector<LaurentInt> gbar(N);
        for (std::size_t nu : order) {
            if (nu == mu) {
                g[nu][mu] = LaurentInt(1);
                gbar[nu] = LaurentInt(1);
                continue;
            }
            LaurentInt r;
            for (std::size_t lam = 0; lam < N; ++lam)
                if (lam != nu && !M.entries[nu][lam].is_zero() && !gbar[lam].is_zero()) r += M.entries[nu][lam] * gbar[lam];
            if (r.is_zero()) continue;
            if (r.coeff(0) != 0)
                throw std::logic_error("bar correction has a nonzero constant term");
            const LaurentInt d = minus ? r.negative_part() : r.positive_part();
            if (d - d.bar() != r) throw std::logic_error("bar correction is not antisymmetric");
            g[nu][mu] = d;
            gbar[nu] = d.bar();
        }
    }
    return g;
}

std::shared_ptr<const DecompMatrix> build_canonical(const BlockId& b, bool minus, bool reverse_ties)
{
    const auto M = bar_involution(b);
    const auto order = triangular_order(*M, reverse_ties);
    const LMatrix g = correct(*M, order, minus);
    auto out = std::make_shared<DecompMatrix>();
    out->block = b;
    out->minus = minus;
    out->order = M->basis;
    for (std::size_t i : order) out->triangular_order.push_back(M->basis[i]);
    const std::size_t N = M->basis.size();
    out->entries.assign(N, std::vector<LaurentInt>(N));
    for (std::size_t r = 0; r < N; ++r)
        for (std::size_t c = 0; c < N; ++c) {
            if (!minus) {
                out->entries[r][c] = g[r][c];
                if (!g[r][c].has_nonnegative_coefficients()) throw std::logic_error("negative coefficient in d-polynomial");
            } else {
                out->entries[r][c] = g[c][r].substitute_neg_inverse();
                if (!out->entries[r][c].has_nonnegative_coefficients())
                    throw std::logic_error("negative coefficient in e-polynomial");
            }
        }
    return out;
}

}  // namespace

std::shared_ptr<const DecompMatrix> canonical_basis(const BlockId& b, bool minus, bool reverse_ties)
{
    if (reverse_ties) return build_canonical(b, minus, true);
    const auto key = std::make_pair(b, minus);
    if (auto hit = canonical_memo().find(key)) return hit;
    return canonical_memo().insert(key, build_canonical(b, minus, false));
}

FockVec canonical_vector(const Partition& lambda, int n)
{
    const auto D = canonical_basis(weight_of(lambda, n), false);
    const std::size_t c = D->index(lambda);
    FockVec r;
    for (std::size_t row = 0; row < D->order.size(); ++row) r.add(D->order[row], D->entries[row][c]);
    return r;
}

FockVec canonical_vector_minus(const Partition& lambda, int n)
{
    const auto D = canonical_basis(weight_of(lambda, n), true);
    const std::size_t row = D->index(lambda);
    FockVec r;
    for (std::size_t c = 0; c < D->order.size(); ++c) r.add(D->order[c], D->entries[row][c].substitute_neg_inverse());
    return r;
}

LaurentInt d_poly(const Partition& lambda, const Partition& mu, int n)
{
    const BlockId b = weight_of(mu, n);
    if (weight_of(lambda, n) != b) return {};
    return canonical_basis(b, false)->at(lambda, mu);
}

LaurentInt e_poly(const Partition& lambda, const Partition& mu, int n)
{
    const BlockId b = weight_of(lambda, n);
    if (weight_of(mu, n) != b) return {};
    return canonical_basis(b, true)->at(lambda, mu);
}

FockVec upper_basis_Gstar(const Partition& lambda, int n)
{
    const Partition lc = lambda.conjugate();
    const auto D = canonical_basis(weight_of(lc, n), true);
    const std::size_t row = D->index(lc);
    const int w = n_weight(lambda, n);
    FockVec r;
    for (std::size_t c = 0; c < D->order.size(); ++c) {
        // e(-v) from e(v).
        const LaurentInt e_neg = D->entries[row][c].substitute_neg_inverse().bar();
        r.add(D->order[c].conjugate(), e_neg.shifted(w));
    }
    return r;
}

void clear_canonical_caches()
{
    span_memo().clear();
    space_memo().clear();
    bar_memo().clear();
    canonical_memo().clear();
}

}  // namespace fockcb
