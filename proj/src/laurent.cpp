#include "fockcb/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fockcb {

LaurentInt::LaurentInt(long c) : LaurentInt(BigInt(c)) {}

LaurentInt::LaurentInt(const BigInt& c)
{
    if (c != 0) terms_.emplace(0, c);
}

LaurentInt LaurentInt::monomial(const BigInt& c, int exponent)
{
    LaurentInt p;
    if (c != 0) p.terms_.emplace(exponent, c);
    return p;
}

BigInt LaurentInt::coeff(int e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentInt::min_degree() const
{
    if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
    return terms_.begin()->first;
}

int LaurentInt::max_degree() const
{
    if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentInt::add_term(int e, const BigInt& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o)
{
    *this = *this * o;
    return *this;
}

LaurentInt LaurentInt::operator-() const
{
    LaurentInt r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b)
{
    LaurentInt r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentInt LaurentInt::bar() const { return substitute_power(-1); }

LaurentInt LaurentInt::substitute_power(int k) const
{
    LaurentInt r;
    for (const auto& [e, c] : terms_) r.add_term(e * k, c);
    return r;
}

LaurentInt LaurentInt::substitute_neg_inverse() const
{
    LaurentInt r;
    for (const auto& [e, c] : terms_) r.add_term(-e, (e % 2 == 0) ? BigInt(c) : BigInt(-c));
    return r;
}

LaurentInt LaurentInt::shifted(int e) const
{
    LaurentInt r;
    for (const auto& [x, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), x + e, c);
    return r;
}

LaurentInt LaurentInt::positive_part() const
{
    LaurentInt r;
    for (auto it = terms_.upper_bound(0); it != terms_.end(); ++it) r.terms_.emplace_hint(r.terms_.end(), *it);
    return r;
}

LaurentInt LaurentInt::negative_part() const
{
    LaurentInt r;
    for (auto it = terms_.begin(); it != terms_.end() && it->first < 0; ++it) r.terms_.emplace_hint(r.terms_.end(), *it);
    return r;
}

bool LaurentInt::has_nonnegative_coefficients() const
{
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

mpq_class LaurentInt::specialize(const mpq_class& value) const
{
    if (value == 0) throw std::invalid_argument("cannot specialize a Laurent polynomial at v = 0");
    mpq_class r = 0;
    const mpq_class inv = 1 / value;
    for (const auto& [e, c] : terms_) {
        mpq_class pw = 1;
        const mpq_class& base = e >= 0 ? value : inv;
        for (int i = 0; i < std::abs(e); ++i) pw *= base;
        r += mpq_class(c) * pw;
    }
    r.canonicalize();
    return r;
}

std::uint64_t LaurentInt::eval_mod(std::uint64_t value) const
{
    std::uint64_t r = 0;
    const std::uint64_t inv = modp::inv(value);
    for (const auto& [e, c] : terms_) {
        const std::uint64_t pw = e >= 0 ? modp::pow(value, e) : modp::pow(inv, -static_cast<std::int64_t>(e));
        r = modp::add(r, modp::mul(modp::reduce(c), pw));
    }
    return r;
}

namespace {

std::uint64_t reduce_fast(const BigInt& c)
{
    constexpr long bound = static_cast<long>(modp::kPrime);
    if (c.fits_slong_p()) {
        const long x = c.get_si();
        if (x >= 0 && x < bound) return static_cast<std::uint64_t>(x);
        if (x < 0 && x > -bound) return modp::kPrime - static_cast<std::uint64_t>(-x);
    }
    return modp::reduce(c);
}

}  // namespace

std::uint64_t LaurentInt::eval_mod(const modp::PowerTable& powers) const
{
    std::uint64_t r = 0;
    for (const auto& [e, c] : terms_) r = modp::add(r, modp::mul(reduce_fast(c), powers(e)));
    return r;
}

std::vector<std::pair<int, BigInt>> LaurentInt::to_pairs() const
{
    return {terms_.begin(), terms_.end()};
}

std::string LaurentInt::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 'v';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentInt& p) { return os << p.to_string(); }

LaurentInt gauss_number(int j)
{
    if (j < 0) throw std::invalid_argument("gauss_number requires j >= 0");
    LaurentInt r;
    for (int e = -(j - 1); e <= j - 1; e += 2) r.add_term(e, 1);
    return r;
}

LaurentInt gauss_factorial(int k)
{
    LaurentInt r(1);
    for (int j = 2; j <= k; ++j) r *= gauss_number(j);
    return r;
}

std::optional<LaurentInt> exact_quotient(const LaurentInt& a, const LaurentInt& b)
{
    if (b.is_zero()) throw std::domain_error("division by the zero Laurent polynomial");
    if (a.is_zero()) return LaurentInt{};
    const int shift = a.min_degree() - b.min_degree();
    LaurentInt rem = a.shifted(-a.min_degree());
    const LaurentInt den = b.shifted(-b.min_degree());
    const int dtop = den.max_degree();
    const BigInt& lead = den.terms().rbegin()->second;
    LaurentInt q;
    while (!rem.is_zero()) {
        const int rtop = rem.max_degree();
        if (rtop < dtop) return std::nullopt;
        const BigInt& rc = rem.terms().rbegin()->second;
        if (!mpz_divisible_p(rc.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        BigInt c = rc / lead;
        const LaurentInt t = LaurentInt::monomial(c, rtop - dtop);
        q += t;
        rem -= t * den;
    }
    return q.shifted(shift);
}

LaurentInt parse_laurent(const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
    LaurentInt r;
    std::size_t i = 0;
    auto fail = [&] { throw std::invalid_argument("malformed Laurent polynomial: " + text); };
    auto read_int = [&](bool allow_sign) {
        std::size_t start = i;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == digits) fail();
        return s.substr(start, i - start);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail();
        }
        BigInt c = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) c = BigInt(read_int(false));
        int e = 0;
        if (i < s.size() && s[i] == 'v') {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = std::stoi(read_int(true));
            }
        } else if (i < s.size() && s[i] == '*') {
            fail();
        }
        r.add_term(e, sign * c);
    }
    return r;
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t r = lo + hi;
    if (r >= kPrime) r -= kPrime;
    return r;
}

std::uint64_t add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = a + b;
    return r >= kPrime ? r - kPrime : r;
}

std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a)
{
    if (a % kPrime == 0) throw std::domain_error("zero has no inverse mod p");
    return pow(a, kPrime - 2);
}

std::uint64_t reduce(const BigInt& c)
{
    static const BigInt P = [] {
        BigInt p;
        mpz_set_ui(p.get_mpz_t(), 1);
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), 61);
        return BigInt(p - 1);
    }();
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
    return static_cast<std::uint64_t>(mpz_get_ui(r.get_mpz_t()));
}

BigInt lift(std::uint64_t a)
{
    BigInt r;
    mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(a));
    if (a > kPrime / 2) {
        BigInt p;
        mpz_set_ui(p.get_mpz_t(), static_cast<unsigned long>(kPrime));
        r -= p;
    }
    return r;
}

PowerTable::PowerTable(std::uint64_t t, int radius) : t_(t), tinv_(inv(t)), radius_(radius), table_(2 * radius + 1)
{
    table_[radius] = 1;
    for (int e = 1; e <= radius; ++e) {
        table_[radius + e] = mul(table_[radius + e - 1], t_);
        table_[radius - e] = mul(table_[radius - e + 1], tinv_);
    }
}

std::uint64_t PowerTable::operator()(int e) const
{
    if (e >= -radius_ && e <= radius_) return table_[radius_ + e];
    return e >= 0 ? pow(t_, static_cast<std::uint64_t>(e)) : pow(tinv_, static_cast<std::uint64_t>(-static_cast<long>(e)));
}

}  // namespace modp

}  // namespace fockcb
