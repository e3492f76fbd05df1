#include "fockcb/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockcb {

LaurentInt FockVec::coeff(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? LaurentInt{} : it->second;
}

void FockVec::add(const Partition& p, const LaurentInt& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVec& FockVec::operator+=(const FockVec& o)
{
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

FockVec& FockVec::operator-=(const FockVec& o)
{
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

FockVec FockVec::operator-() const
{
    FockVec r = *this;
    for (auto& [p, c] : r.terms_) c = -c;
    return r;
}

FockVec FockVec::scaled(const LaurentInt& c) const
{
    FockVec r;
    if (c.is_zero()) return r;
    for (const auto& [p, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, x * c);
    return r;
}

FockVec FockVec::bar_coefficients() const
{
    FockVec r;
    for (const auto& [p, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), p, x.bar());
    return r;
}

FockVec FockVec::at_one() const
{
    FockVec r;
    for (const auto& [p, x] : terms_) {
        const mpq_class q = x.specialize(1);
        r.add(p, LaurentInt(BigInt(q.get_num())));
    }
    return r;
}

std::vector<std::pair<Partition, LaurentInt>> FockVec::sorted_terms() const
{
    std::vector<std::pair<Partition, LaurentInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return size_lex_less(y.first, x.first); });
    return out;
}

FockVec operator+(FockVec a, const FockVec& b) { return a += b; }
FockVec operator-(FockVec a, const FockVec& b) { return a -= b; }

BlockId weight_of(const Partition& lambda, int n)
{
    return BlockId{n, n_core(lambda, n), n_weight(lambda, n)};
}

std::vector<Partition> block_partitions(const BlockId& b, int bound)
{
    if (b.weight_w > bound) return {};
    return block_partitions(b);
}

std::vector<Partition> block_partitions(const BlockId& b)
{
    if (!is_n_core(b.core, b.n)) throw std::invalid_argument("block core is not an n-core");
    if (b.weight_w < 0) throw std::invalid_argument("negative block weight");
    std::vector<Partition> out;
    for (const auto& q : multipartitions_of(b.n, b.weight_w)) out.push_back(from_core_and_quotient(b.core, q));
    std::sort(out.begin(), out.end(), [](const Partition& x, const Partition& y) { return y < x; });
    return out;
}

long block_dimension(int n, int w)
{
    // Coefficient of x^w in (sum p(k) x^k)^n.
    std::vector<long> p(w + 1), acc(w + 1, 0);
    for (int k = 0; k <= w; ++k) p[k] = partition_count(k);
    acc[0] = 1;
    for (int r = 0; r < n; ++r) {
        std::vector<long> next(w + 1, 0);
        for (int s = 0; s <= w; ++s)
            for (int k = 0; s + k <= w; ++k) next[s + k] += acc[s] * p[k];
        acc = std::move(next);
    }
    return acc[w];
}

AffineWeight AffineWeight::of_block(const BlockId& b)
{
    const CoreCoords c = core_coords(b.core, b.n);
    AffineWeight wt;
    wt.n = b.n;
    wt.a.assign(c.a.begin(), c.a.end());
    long sq = 0;
    for (long x : wt.a) sq += x * x;
    wt.d = -sq / 2 - b.weight_w;
    return wt;
}

long AffineWeight::norm() const { return pairing(*this); }

long AffineWeight::pairing(const AffineWeight& o) const
{
    // Both have level one: (L0 + d delta + a, L0 + d' delta + a') = d + d' + a.a'.
    long r = d + o.d;
    for (int i = 0; i < n; ++i) r += a[i] * o.a[i];
    return r;
}

long AffineWeight::pairing_alpha(int i) const
{
    if (i == 0) return a[n - 1] - a[0] + 1;
    return a[i - 1] - a[i];
}

AffineWeight AffineWeight::plus_alpha(int i, long k) const
{
    AffineWeight r = *this;
    if (i == 0) {
        r.a[n - 1] += k;
        r.a[0] -= k;
        r.d += k;
    } else {
        r.a[i - 1] += k;
        r.a[i] -= k;
    }
    return r;
}

AffineWeight AffineWeight::plus_delta(long k) const
{
    AffineWeight r = *this;
    r.d += k;
    return r;
}

AffineWeight AffineWeight::reflect(int i) const { return plus_alpha(i, -pairing_alpha(i)); }

bool AffineWeight::in_fock() const { return norm() <= 0; }

long AffineWeight::fock_weight() const { return -norm() / 2; }

BlockId AffineWeight::block() const
{
    if (!in_fock()) throw std::domain_error("weight does not occur in the Fock space");
    CoreCoords c{n, std::vector<int>(a.begin(), a.end())};
    return BlockId{n, core_from_coords(c), static_cast<int>(fock_weight())};
}

namespace {

void require_residue(int i, int n)
{
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (i < 0 || i >= n) throw std::invalid_argument("residue out of range");
}

int count_right(const std::vector<Node>& nodes, int col)
{
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [&](const Node& x) { return x.col > col; }));
}

int count_left(const std::vector<Node>& nodes, int col)
{
    return static_cast<int>(std::count_if(nodes.begin(), nodes.end(), [&](const Node& x) { return x.col < col; }));
}

BigInt constant_of(const LaurentInt& c)
{
    if (c.is_zero()) return 0;
    if (c.size() != 1 || c.min_degree() != 0) throw std::invalid_argument("coefficient is not a constant");
    return c.coeff(0);
}

}  // namespace

FockVec apply_F(int i, const FockVec& x, int n)
{
    require_residue(i, n);
    FockVec r;
    for (const auto& [lambda, c] : x.terms()) {
        const AddRemNodes nodes = addable_removable_nodes(lambda, n, i);
        for (const Node& g : nodes.addable) {
            const int N = count_right(nodes.addable, g.col) - count_right(nodes.removable, g.col);
            r.add(add_node(lambda, g), c.shifted(N));
        }
    }
    return r;
}

FockVec apply_E(int i, const FockVec& x, int n)
{
    require_residue(i, n);
    FockVec r;
    for (const auto& [mu, c] : x.terms()) {
        for (const Node& g : addable_removable_nodes(mu, n, i).removable) {
            const Partition lambda = remove_node(mu, g);
            const AddRemNodes nodes = addable_removable_nodes(lambda, n, i);
            const int N = count_left(nodes.addable, g.col) - count_left(nodes.removable, g.col);
            r.add(lambda, c.shifted(-N));
        }
    }
    return r;
}

namespace {

FockVec divide_exact(const FockVec& y, const LaurentInt& den)
{
    FockVec r;
    for (const auto& [p, c] : y.terms()) {
        auto q = exact_quotient(c, den);
        if (!q) throw std::logic_error("divided power is not integral at " + p.to_string());
        r.add(p, *q);
    }
    return r;
}

}  // namespace

FockVec apply_F_divided(int i, int k, const FockVec& x, int n)
{
    if (k < 0) throw std::invalid_argument("negative divided power");
    FockVec y = x;
    for (int s = 0; s < k; ++s) y = apply_F(i, y, n);
    return k <= 1 ? y : divide_exact(y, gauss_factorial(k));
}

FockVec apply_E_divided(int i, int k, const FockVec& x, int n)
{
    if (k < 0) throw std::invalid_argument("negative divided power");
    FockVec y = x;
    for (int s = 0; s < k; ++s) y = apply_E(i, y, n);
    return k <= 1 ? y : divide_exact(y, gauss_factorial(k));
}

FockVec apply_D(int k, const FockVec& x, int n)
{
    if (k < 1) throw std::invalid_argument("D_k requires k >= 1");
    FockVec r;
    for (const auto& [lambda, c] : x.terms())
        for (const auto& t : horizontal_ribbon_strips(lambda, n, k))
            r.add(t.mu, c.shifted(-t.spin) * LaurentInt(t.spin % 2 == 0 ? 1 : -1));
    return r;
}

FockVec apply_D_word(const Partition& kappa, const FockVec& x, int n)
{
    FockVec y = x;
    for (int k : kappa.parts()) y = apply_D(k, y, n);
    return y;
}

LaurentInt scalar_product(const FockVec& x, const FockVec& y)
{
    LaurentInt r;
    for (const auto& [p, c] : x.terms()) {
        auto it = y.terms().find(p);
        if (it != y.terms().end()) r += c * it->second;
    }
    return r;
}

LaurentInt scalar_product_v(const FockVec& x, const FockVec& y, int n)
{
    LaurentInt r;
    for (const auto& [p, c] : x.terms()) {
        auto it = y.terms().find(p);
        if (it != y.terms().end()) r += (c * it->second).shifted(-n_weight(p, n));
    }
    return r;
}

FockVec classical_e(int i, const FockVec& x, int n)
{
    require_residue(i, n);
    FockVec r;
    for (const auto& [mu, c] : x.terms()) {
        const LaurentInt k(constant_of(c));
        for (const Node& g : addable_removable_nodes(mu, n, i).removable) r.add(remove_node(mu, g), k);
    }
    return r;
}

FockVec classical_f(int i, const FockVec& x, int n)
{
    require_residue(i, n);
    FockVec r;
    for (const auto& [lambda, c] : x.terms()) {
        const LaurentInt k(constant_of(c));
        for (const Node& g : addable_removable_nodes(lambda, n, i).addable) r.add(add_node(lambda, g), k);
    }
    return r;
}

namespace {

// exp(sign * X) x for a locally nilpotent X; the m-th term X^m x / m! is
// integral, so each step divides exactly.
template <class Op>
FockVec exp_apply(Op op, int sign, const FockVec& x)
{
    FockVec total = x, term = x;
    for (int m = 1; !term.is_zero(); ++m) {
        FockVec next = op(term);
        FockVec divided;
        for (const auto& [p, c] : next.terms()) {
            BigInt k = constant_of(c) * sign;
            if (!mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(m)))
                throw std::logic_error("exponential series is not integral");
            divided.add(p, LaurentInt(BigInt(k / m)));
        }
        term = std::move(divided);
        total += term;
    }
    return total;
}

void require_single_block(const FockVec& x, int n)
{
    if (split_blocks(x, n).size() > 1) throw std::invalid_argument("vector is not weight-homogeneous");
    for (const auto& [p, c] : x.terms()) constant_of(c);
}

}  // namespace

FockVec reflection_r(int i, const FockVec& x, int n)
{
    require_residue(i, n);
    require_single_block(x, n);
    auto e = [&](const FockVec& y) { return classical_e(i, y, n); };
    auto f = [&](const FockVec& y) { return classical_f(i, y, n); };
    return exp_apply(e, 1, exp_apply(f, -1, exp_apply(e, 1, x)));
}

FockVec reflection_r_alt(int i, const FockVec& x, int n)
{
    require_residue(i, n);
    require_single_block(x, n);
    auto e = [&](const FockVec& y) { return classical_e(i, y, n); };
    auto f = [&](const FockVec& y) { return classical_f(i, y, n); };
    return exp_apply(f, -1, exp_apply(e, 1, exp_apply(f, -1, x)));
}

std::map<BlockId, FockVec> split_blocks(const FockVec& x, int n)
{
    std::map<BlockId, FockVec> out;
    for (const auto& [p, c] : x.terms()) out[weight_of(p, n)].add(p, c);
    return out;
}

}  // namespace fockcb
