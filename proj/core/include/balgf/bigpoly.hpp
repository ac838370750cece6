#pragma once

/**
 * @file bigpoly.hpp
 * @brief Exact univariate arithmetic over Z[x] and its fraction field.
 *
 * Poly    - dense integer polynomial, coeffs[i] is the coefficient of x^i.
 * RatFunc - num/den kept in a unique canonical form:
 *             gcd(num, den) = 1 in Q[x],
 *             the integer content shared by num and den is 1,
 *             the lowest nonzero coefficient of den is positive.
 *           Two RatFunc values are equal iff their canonical parts match.
 * Series  - the first N Taylor coefficients of a RatFunc at x = 0.
 */

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace balgf {

using Integer = mpz_class;
using Rational = mpq_class;

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<long> coeffs);
    explicit Poly(std::vector<Integer> coeffs);

    static Poly constant(const Integer& c);
    static Poly monomial(const Integer& c, std::size_t degree);
    /// The polynomial x.
    static Poly x();

    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] std::span<const Integer> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i; zero beyond the degree.
    [[nodiscard]] Integer coeff(std::size_t i) const;
    [[nodiscard]] const Integer& leading() const;
    [[nodiscard]] const Integer& lowest_nonzero() const;

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    [[nodiscard]] Integer content() const;
    /// p / content(p) with positive leading coefficient.
    [[nodiscard]] Poly primitive_part() const;

    [[nodiscard]] Poly shifted(std::size_t n) const;  // x^n * p
    [[nodiscard]] Integer evaluate(const Integer& at) const;
    [[nodiscard]] Rational evaluate(const Rational& at) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Integer& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Integer& c) { return a *= c; }
    friend Poly operator*(const Integer& c, Poly a) { return a *= c; }
    friend Poly operator*(long c, Poly a) { return a *= Integer(c); }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable, lowest degree first: "1 - 3x^2 + x^4".
    [[nodiscard]] std::string to_string() const;

private:
    void normalize();

    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// Divide every coefficient by c; throws std::domain_error if c does not divide exactly.
Poly divide_exact(const Poly& p, const Integer& c);

/// Exact quotient p / d in Z[x]; throws std::domain_error when d does not divide p.
Poly divide_exact(const Poly& p, const Poly& d);

/// Pseudo-remainder prem(p, d) = lc(d)^(deg p - deg d + 1) * p mod d.
Poly pseudo_remainder(const Poly& p, const Poly& d);

/// Primitive gcd with positive leading coefficient. Throws std::invalid_argument if both are zero.
Poly gcd(const Poly& p, const Poly& q);

class RatFunc {
public:
    /// The zero function.
    RatFunc();
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error when den is zero.
    RatFunc(Poly num, Poly den);

    [[nodiscard]] const Poly& num() const noexcept { return num_; }
    [[nodiscard]] const Poly& den() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    Poly num_;
    Poly den_;
};

/// num(a)*den(b) == num(b)*den(a); agrees with == on canonical values.
bool cross_equal(const RatFunc& a, const RatFunc& b);

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

struct Series {
    std::vector<Integer> terms;
    std::string origin;
};

/**
 * First n_terms Taylor coefficients of f at 0, via the recurrence
 * den[0]*a_n = num[n] - sum_{i>=1} den[i]*a_{n-i}.
 *
 * Throws std::domain_error if den(0) == 0, or if a coefficient is not an
 * integer (every generating function here has an integer series).
 */
Series series_expand(const RatFunc& f, std::size_t n_terms, std::string origin = {});

}  // namespace balgf
