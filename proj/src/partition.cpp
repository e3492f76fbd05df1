#include "fockcb/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fockcb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const
{
    std::vector<int> c(parts_.empty() ? 0 : parts_.front(), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const
{
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < parts_.size();) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (i) os << ',';
        os << parts_[i];
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Partition parse_partition(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unbalanced brackets in partition: " + std::string(text));
        s = s.substr(1, s.size() - 2);
    } else if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("unbalanced brackets in partition: " + std::string(text));
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    if (s.empty()) return Partition{};
    std::stringstream ss(s);
    std::string tok;
    auto to_int = [&](const std::string& t) {
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw std::invalid_argument("unparseable partition: " + std::string(text));
        return std::stoi(t);
    };
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        int value = to_int(tok.substr(0, caret));
        int mult = caret == std::string::npos ? 1 : to_int(tok.substr(caret + 1));
        for (int k = 0; k < mult; ++k) parts.push_back(value);
    }
    return Partition(std::move(parts));
}

bool size_lex_less(const Partition& a, const Partition& b)
{
    const int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.parts() < b.parts();
}

std::vector<Partition> partitions_of(int m)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (m >= 0) rec(m, m);
    return out;
}

long partition_count(int m)
{
    if (m < 0) return 0;
    std::vector<long> p(m + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int s = part; s <= m; ++s) p[s] += p[s - part];
    return p[m];
}

int MultiPartition::size() const
{
    int s = 0;
    for (const auto& c : components) s += c.size();
    return s;
}

MultiPartition MultiPartition::conjugate() const
{
    MultiPartition r;
    for (auto it = components.rbegin(); it != components.rend(); ++it) r.components.push_back(it->conjugate());
    return r;
}

std::string MultiPartition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += ',';
        s += components[i].to_string();
    }
    return s + ")";
}

MultiPartition empty_multipartition(int n) { return MultiPartition{std::vector<Partition>(n)}; }

bool multi_less(const MultiPartition& a, const MultiPartition& b)
{
    for (int k = a.n() - 1; k >= 0; --k) {
        if (a.components[k] == b.components[k]) continue;
        return size_lex_less(a.components[k], b.components[k]);
    }
    return false;
}

std::vector<MultiPartition> multipartitions_of(int n, int m)
{
    std::vector<MultiPartition> out;
    MultiPartition cur = empty_multipartition(n);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == n - 1) {
            for (const auto& p : partitions_of(rest)) {
                cur.components[idx] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int s = 0; s <= rest; ++s)
            for (const auto& p : partitions_of(s)) {
                cur.components[idx] = p;
                rec(idx + 1, rest - s);
            }
    };
    if (n >= 1) rec(0, m);
    return out;
}

BetaSequence beta_numbers(const Partition& lambda, int count)
{
    if (count < lambda.length()) throw std::invalid_argument("beta_numbers: count must be at least the length");
    BetaSequence b;
    b.count = count;
    for (int i = 0; i < count; ++i) b.window.push_back(lambda.part(i) - i);
    return b;
}

Partition partition_from_beta(const BetaSequence& beta)
{
    std::vector<int> parts;
    for (int i = 0; i < static_cast<int>(beta.window.size()); ++i) {
        if (i > 0 && beta.window[i] >= beta.window[i - 1]) throw std::invalid_argument("beta-numbers must be strictly decreasing");
        parts.push_back(beta.window[i] + i);
    }
    if (!parts.empty() && parts.back() < 0) throw std::invalid_argument("beta window does not end in a partition tail");
    return Partition(std::move(parts));
}

namespace {

int round_up(int x, int n) { return ((x + n - 1) / n) * n; }

void require_n(int n)
{
    if (n < 2) throw std::invalid_argument("n must be at least 2");
}

// Positions lambda_i - i + N, i = 1..N, descending.
std::vector<int> positions(const Partition& lambda, int N)
{
    std::vector<int> q(N);
    for (int i = 0; i < N; ++i) q[i] = lambda.part(i) - (i + 1) + N;
    return q;
}

Partition from_positions(std::vector<int> q)
{
    std::sort(q.rbegin(), q.rend());
    const int N = static_cast<int>(q.size());
    std::vector<int> parts(N);
    for (int i = 0; i < N; ++i) {
        parts[i] = q[i] + (i + 1) - N;
        if (parts[i] < 0) throw std::logic_error("bead configuration is not a partition");
    }
    return Partition(std::move(parts));
}

}  // namespace

AbacusConfig abacus(const Partition& lambda, int n, int min_beads)
{
    require_n(n);
    AbacusConfig ab;
    ab.n = n;
    ab.bead_count = round_up(std::max({lambda.length(), min_beads, 1}), n);
    ab.runner_levels.assign(n, {});
    for (int q : positions(lambda, ab.bead_count)) ab.runner_levels[q % n].push_back(q / n);
    return ab;
}

Partition partition_from_abacus(const AbacusConfig& ab)
{
    std::vector<int> q;
    for (int j = 0; j < ab.n; ++j)
        for (int level : ab.runner_levels[j]) q.push_back(level * ab.n + j);
    if (static_cast<int>(q.size()) != ab.bead_count) throw std::invalid_argument("abacus bead count mismatch");
    return from_positions(std::move(q));
}

Partition n_core(const Partition& lambda, int n)
{
    AbacusConfig ab = abacus(lambda, n);
    for (auto& runner : ab.runner_levels) {
        const int c = static_cast<int>(runner.size());
        for (int s = 0; s < c; ++s) runner[s] = c - 1 - s;
    }
    return partition_from_abacus(ab);
}

int n_weight(const Partition& lambda, int n) { return (lambda.size() - n_core(lambda, n).size()) / n; }

bool is_n_core(const Partition& lambda, int n) { return n_core(lambda, n) == lambda; }

CoreCoords core_coords(const Partition& tau, int n)
{
    require_n(n);
    if (!is_n_core(tau, n)) throw std::invalid_argument(tau.to_string() + " is not an n-core");
    const AbacusConfig ab = abacus(tau, n);
    CoreCoords c{n, std::vector<int>(n)};
    for (int j = 0; j < n; ++j) c.a[j] = static_cast<int>(ab.runner_levels[j].size()) - ab.bead_count / n;
    return c;
}

Partition core_from_coords(const CoreCoords& coords)
{
    require_n(coords.n);
    if (static_cast<int>(coords.a.size()) != coords.n) throw std::invalid_argument("core coordinates have the wrong length");
    if (std::accumulate(coords.a.begin(), coords.a.end(), 0) != 0) throw std::invalid_argument("core coordinates must sum to zero");
    int amax = 0;
    for (int x : coords.a) amax = std::max(amax, std::abs(x));
    const int per_runner = amax + 1;
    AbacusConfig ab;
    ab.n = coords.n;
    ab.bead_count = coords.n * per_runner;
    ab.runner_levels.assign(coords.n, {});
    for (int j = 0; j < coords.n; ++j) {
        const int c = per_runner + coords.a[j];
        for (int s = c - 1; s >= 0; --s) ab.runner_levels[j].push_back(s);
    }
    return partition_from_abacus(ab);
}

namespace {

int quotient_label(int runner, int n, const Partition& convention) { return residue(runner - convention.part(0), n); }

Partition runner_partition(const std::vector<int>& levels)
{
    const int t = static_cast<int>(levels.size());
    std::vector<int> parts(t);
    for (int s = 0; s < t; ++s) parts[s] = levels[s] - (t - 1 - s);
    return Partition(std::move(parts));
}

}  // namespace

MultiPartition n_quotient(const Partition& lambda, int n, const Partition& convention)
{
    require_n(n);
    const AbacusConfig ab = abacus(lambda, n);
    MultiPartition q = empty_multipartition(n);
    for (int j = 0; j < n; ++j) q.components[quotient_label(j, n, convention)] = runner_partition(ab.runner_levels[j]);
    return q;
}

Partition from_core_and_quotient(const Partition& core, const MultiPartition& quotient, const Partition& convention)
{
    const int n = quotient.n();
    require_n(n);
    int need = core.length();
    for (const auto& c : quotient.components) need += c.length();
    AbacusConfig ab = abacus(core, n, n * (need + 1));
    for (int j = 0; j < n; ++j) {
        const Partition& p = quotient.components[quotient_label(j, n, convention)];
        auto& levels = ab.runner_levels[j];
        const int c = static_cast<int>(levels.size());
        if (p.length() > c) throw std::logic_error("abacus too small for quotient");
        for (int s = 0; s < c; ++s) levels[s] = p.part(s) + (c - 1 - s);
    }
    return partition_from_abacus(ab);
}

int n_sign(const Partition& lambda, int n)
{
    require_n(n);
    const int N = round_up(std::max(lambda.length(), 1), n);
    std::vector<int> q = positions(lambda, N);
    std::set<int> beads(q.begin(), q.end());
    int total_spin = 0;
    for (;;) {
        bool moved = false;
        for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
            const int b = *it;
            if (b - n < 0 || beads.count(b - n)) continue;
            total_spin += static_cast<int>(std::distance(beads.upper_bound(b - n), beads.lower_bound(b)));
            beads.erase(b);
            beads.insert(b - n);
            moved = true;
            break;
        }
        if (!moved) break;
    }
    return total_spin % 2 == 0 ? 1 : -1;
}

int n_sign_by_bead_permutation(const Partition& lambda, int n)
{
    require_n(n);
    const int N = round_up(std::max(lambda.length(), 1), n);
    const std::vector<int> q = positions(lambda, N);
    std::vector<int> seen(n, 0), count(n, 0);
    for (int x : q) ++count[x % n];
    std::vector<int> dest;
    for (int x : q) {
        const int j = x % n;
        dest.push_back(j + n * (count[j] - 1 - seen[j]));
        ++seen[j];
    }
    long inversions = 0;
    for (std::size_t a = 0; a < dest.size(); ++a)
        for (std::size_t b = a + 1; b < dest.size(); ++b)
            if (dest[a] < dest[b]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

AddRemNodes addable_removable_nodes(const Partition& lambda, int n, int i)
{
    AddRemNodes r;
    const int len = lambda.length();
    for (int row = 1; row <= len + 1; ++row) {
        const int part = lambda.part(row - 1);
        if (row == 1 || lambda.part(row - 2) > part) {
            Node nd{row, part + 1};
            if (residue(nd.content(), n) == i) r.addable.push_back(nd);
        }
        if (part > 0 && part > lambda.part(row)) {
            Node nd{row, part};
            if (residue(nd.content(), n) == i) r.removable.push_back(nd);
        }
    }
    auto by_col = [](const Node& a, const Node& b) { return a.col < b.col; };
    std::sort(r.addable.begin(), r.addable.end(), by_col);
    std::sort(r.removable.begin(), r.removable.end(), by_col);
    return r;
}

Partition add_node(const Partition& lambda, const Node& node)
{
    std::vector<int> parts = lambda.parts();
    if (node.row == lambda.length() + 1) parts.push_back(0);
    if (node.row < 1 || node.row > static_cast<int>(parts.size()) || parts[node.row - 1] + 1 != node.col)
        throw std::invalid_argument("node is not addable");
    ++parts[node.row - 1];
    return Partition(std::move(parts));
}

Partition remove_node(const Partition& lambda, const Node& node)
{
    std::vector<int> parts = lambda.parts();
    if (node.row < 1 || node.row > lambda.length() || parts[node.row - 1] != node.col)
        throw std::invalid_argument("node is not removable");
    --parts[node.row - 1];
    return Partition(std::move(parts));
}

std::vector<RimHook> removable_rim_hooks(const Partition& outer, int n)
{
    require_n(n);
    std::vector<RimHook> out;
    const int L = outer.length() + n;
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = outer.part(i) - (i + 1);
    const std::set<int> beads(beta.begin(), beta.end());
    for (int i = 0; i < L; ++i) {
        const int b = beta[i];
        if (b - n < -L || beads.count(b - n)) continue;
        std::vector<int> nb = beta;
        nb[i] = b - n;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> parts(L);
        for (int r = 0; r < L; ++r) parts[r] = nb[r] + r + 1;
        RimHook h;
        h.inner = Partition(std::move(parts));
        int top = -1, bottom = -1;
        for (int r = 0; r < outer.length(); ++r)
            for (int c = h.inner.part(r) + 1; c <= outer.part(r); ++c) {
                h.ribbon.cells.push_back(Node{r + 1, c});
                if (top < 0) top = r;
                bottom = r;
            }
        h.ribbon.spin = bottom - top;
        h.head = Node{top + 1, outer.part(top)};
        out.push_back(std::move(h));
    }
    return out;
}

std::optional<int> horizontal_strip_spin(const Partition& mu, const Partition& lambda, int n)
{
    require_n(n);
    if (!mu.contains(lambda) || (mu.size() - lambda.size()) % n != 0) return std::nullopt;
    using Tiling = std::vector<std::vector<Node>>;
    std::set<Tiling> tilings;
    std::map<Tiling, int> spins;
    Tiling current;
    std::function<void(const Partition&, int)> search = [&](const Partition& cur, int spin) {
        if (cur == lambda) {
            Tiling t = current;
            std::sort(t.begin(), t.end());
            if (tilings.insert(t).second) spins[t] = spin;
            return;
        }
        for (const RimHook& h : removable_rim_hooks(cur, n)) {
            if (!h.inner.contains(lambda)) continue;
            const Node& head = h.head;
            if (head.row > 1 && lambda.part(head.row - 2) < head.col) continue;
            current.push_back(h.ribbon.cells);
            search(h.inner, spin + h.ribbon.spin);
            current.pop_back();
        }
    };
    search(mu, 0);
    if (tilings.empty()) return std::nullopt;
    if (tilings.size() > 1) throw std::logic_error("horizontal ribbon strip with more than one admissible tiling");
    return spins.begin()->second;
}

namespace {

// All nu containing p such that nu / p is a horizontal strip of m boxes.
void horizontal_strips(const Partition& p, int m, std::vector<Partition>& out)
{
    const int len = p.length();
    std::vector<int> cur(len + 1);
    std::function<void(int, int)> rec = [&](int row, int rest) {
        if (row == len + 1) {
            if (rest == 0) out.emplace_back(cur);
            return;
        }
        const int lo = p.part(row);
        const int hi = row == 0 ? lo + rest : std::min(p.part(row - 1), lo + rest);
        for (int x = lo; x <= hi; ++x) {
            cur[row] = x;
            rec(row + 1, rest - (x - lo));
        }
    };
    rec(0, m);
}

}  // namespace

std::vector<StripTerm> horizontal_ribbon_strips(const Partition& lambda, int n, int k)
{
    require_n(n);
    std::vector<StripTerm> out;
    if (k < 0) return out;
    if (k == 0) return {StripTerm{lambda, 0}};
    const Partition core = n_core(lambda, n);
    const MultiPartition quot = n_quotient(lambda, n);
    MultiPartition next = quot;
    std::function<void(int, int)> rec = [&](int j, int rest) {
        if (j == n) {
            if (rest != 0) return;
            Partition mu = from_core_and_quotient(core, next);
            auto spin = horizontal_strip_spin(mu, lambda, n);
            if (!spin) throw std::logic_error("quotient horizontal strip without a horizontal ribbon tiling: " + mu.to_string());
            out.push_back(StripTerm{std::move(mu), *spin});
            return;
        }
        for (int s = 0; s <= rest; ++s) {
            std::vector<Partition> grown;
            horizontal_strips(quot.components[j], s, grown);
            for (auto& g : grown) {
                next.components[j] = g;
                rec(j + 1, rest - s);
            }
        }
        next.components[j] = quot.components[j];
    };
    rec(0, k);
    std::sort(out.begin(), out.end(), [](const StripTerm& a, const StripTerm& b) { return a.mu < b.mu; });
    return out;
}

namespace {

struct Signature {
    std::vector<Node> unpaired_addable;    // left to right
    std::vector<Node> unpaired_removable;  // left to right
};

Signature reduced_signature(const Partition& lambda, int n, int i)
{
    const AddRemNodes nodes = addable_removable_nodes(lambda, n, i);
    std::vector<std::pair<Node, bool>> word;  // true = removable
    for (const auto& a : nodes.addable) word.emplace_back(a, false);
    for (const auto& r : nodes.removable) word.emplace_back(r, true);
    std::sort(word.begin(), word.end(), [](const auto& x, const auto& y) { return x.first.col < y.first.col; });
    std::vector<std::pair<Node, bool>> stack;
    for (const auto& sym : word) {
        if (!sym.second && !stack.empty() && stack.back().second)
            stack.pop_back();
        else
            stack.push_back(sym);
    }
    Signature s;
    for (const auto& [node, removable] : stack) (removable ? s.unpaired_removable : s.unpaired_addable).push_back(node);
    return s;
}

}  // namespace

std::optional<Partition> crystal_e(const Partition& lambda, int n, int i)
{
    require_n(n);
    const Signature s = reduced_signature(lambda, n, i);
    if (s.unpaired_removable.empty()) return std::nullopt;
    return remove_node(lambda, s.unpaired_removable.front());
}

std::optional<Partition> crystal_f(const Partition& lambda, int n, int i)
{
    require_n(n);
    const Signature s = reduced_signature(lambda, n, i);
    if (s.unpaired_addable.empty()) return std::nullopt;
    return add_node(lambda, s.unpaired_addable.back());
}

int crystal_epsilon(const Partition& lambda, int n, int i)
{
    return static_cast<int>(reduced_signature(lambda, n, i).unpaired_removable.size());
}

}  // namespace fockcb
