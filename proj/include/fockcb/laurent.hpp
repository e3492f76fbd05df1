#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fockcb {

using BigInt = mpz_class;

/// Laurent polynomial in v with arbitrary-precision integer coefficients.
///
/// Stored as an exponent -> coefficient map with no zero coefficients, so
/// two equal polynomials always have identical representations.
namespace modp {
class PowerTable;
}

class LaurentInt {
public:
    using Terms = std::map<int, BigInt>;

    LaurentInt() = default;
    LaurentInt(long c);  // NOLINT: implicit constant embedding is intended
    LaurentInt(const BigInt& c);  // NOLINT

    static LaurentInt monomial(const BigInt& c, int exponent);
    static LaurentInt v(int exponent = 1) { return monomial(1, exponent); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of v^e (zero when absent).
    BigInt coeff(int e) const;
    int min_degree() const;  // requires !is_zero()
    int max_degree() const;  // requires !is_zero()

    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    LaurentInt& operator*=(const LaurentInt& o);
    LaurentInt operator-() const;

    /// Adds c * v^e in place.
    void add_term(int e, const BigInt& c);

    /// v -> v^{-1}.
    LaurentInt bar() const;
    /// v -> v^k (k may be negative).
    LaurentInt substitute_power(int k) const;
    /// v -> -v^{-1}.
    LaurentInt substitute_neg_inverse() const;
    /// Multiplication by v^e.
    LaurentInt shifted(int e) const;

    /// Terms with exponent > 0 / < 0.
    LaurentInt positive_part() const;
    LaurentInt negative_part() const;

    bool has_nonnegative_coefficients() const;
    bool in_z_v() const { return is_zero() || min_degree() >= 0; }
    bool in_z_vinv() const { return is_zero() || max_degree() <= 0; }

    /// Evaluation homomorphism at a nonzero rational; throws
    /// std::invalid_argument for value == 0.
    mpq_class specialize(const mpq_class& value) const;

    /// Evaluation modulo modp::kPrime at an invertible residue.
    std::uint64_t eval_mod(std::uint64_t value) const;
    std::uint64_t eval_mod(const modp::PowerTable& powers) const;

    std::string to_string() const;
    /// Array of [exponent, coefficient] pairs sorted by exponent.
    std::vector<std::pair<int, BigInt>> to_pairs() const;

    friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }

private:
    Terms terms_;
};

LaurentInt operator+(LaurentInt a, const LaurentInt& b);
LaurentInt operator-(LaurentInt a, const LaurentInt& b);
LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);

/// Balanced quantum integer [j] = (v^j - v^-j)/(v - v^-1), j >= 0.
LaurentInt gauss_number(int j);
/// [k]! = [1][2]...[k].
LaurentInt gauss_factorial(int k);

/// Exact quotient a / b in Z[v, v^-1]; nullopt when b does not divide a.
/// Throws std::domain_error when b == 0.
std::optional<LaurentInt> exact_quotient(const LaurentInt& a, const LaurentInt& b);

/// Parses the to_string() syntax, e.g. "1 + 2v - v^-3".
LaurentInt parse_laurent(const std::string& text);

std::ostream& operator<<(std::ostream& os, const LaurentInt& p);

namespace modp {

/// Arithmetic modulo the Mersenne prime 2^61 - 1.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t add(std::uint64_t a, std::uint64_t b);
std::uint64_t sub(std::uint64_t a, std::uint64_t b);
std::uint64_t pow(std::uint64_t a, std::uint64_t e);
std::uint64_t inv(std::uint64_t a);
std::uint64_t reduce(const BigInt& c);
/// Symmetric lift into (-p/2, p/2].
BigInt lift(std::uint64_t a);

/// Powers t^e for |e| <= radius, with a fallback beyond.
class PowerTable {
public:
    PowerTable(std::uint64_t t, int radius = 64);
    std::uint64_t operator()(int e) const;
    std::uint64_t point() const { return t_; }

private:
    std::uint64_t t_, tinv_;
    int radius_;
    std::vector<std::uint64_t> table_;
};

}  // namespace modp

}  // namespace fockcb
