#include "balgf/bigpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace balgf {

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

Poly::Poly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Integer& c) { return Poly(std::vector<Integer>{c}); }

Poly Poly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> cs(degree + 1);
    cs[degree] = c;
    return Poly(std::move(cs));
}

Poly Poly::x() { return Poly{0, 1}; }

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const Integer& Poly::lowest_nonzero() const {
    auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
    if (it == coeffs_.end()) throw std::domain_error("lowest coefficient of the zero polynomial");
    return *it;
}

Integer Poly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (leading() < 0) c = -c;
    return divide_exact(*this, c);
}

Poly Poly::shifted(std::size_t n) const {
    if (is_zero() || n == 0) return *this;
    std::vector<Integer> cs(n + coeffs_.size());
    std::copy(coeffs_.begin(), coeffs_.end(), cs.begin() + static_cast<std::ptrdiff_t>(n));
    return Poly(std::move(cs));
}

Integer Poly::evaluate(const Integer& at) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Rational Poly::evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Rational(*it);
    acc.canonicalize();
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Integer& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly divide_exact(const Poly& p, const Integer& c) {
    if (c == 0) throw std::domain_error("division of a polynomial by zero");
    std::vector<Integer> cs(p.coefficients().begin(), p.coefficients().end());
    for (auto& v : cs) {
        if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t())) {
            throw std::domain_error("inexact integer division of a polynomial");
        }
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    }
    return Poly(std::move(cs));
}

Poly divide_exact(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("division of a polynomial by zero");
    if (p.is_zero()) return {};
    if (p.degree() < d.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
    const auto dc = d.coefficients();
    const std::size_t dd = dc.size() - 1;
    std::vector<Integer> quot(rem.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer& top = rem[i + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), dc[dd].get_mpz_t())) {
            throw std::domain_error("inexact polynomial division");
        }
        mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), dc[dd].get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j) {
            mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), dc[j].get_mpz_t());
        }
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& v) { return v != 0; })) {
        throw std::domain_error("inexact polynomial division");
    }
    return Poly(std::move(quot));
}

Poly pseudo_remainder(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw std::domain_error("pseudo-division by zero");
    if (p.degree() < d.degree()) return p;
    const Integer& lc = d.leading();
    Poly r = p;
    int steps = p.degree() - d.degree() + 1;
    while (!r.is_zero() && r.degree() >= d.degree()) {
        Poly t = Poly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - d.degree()));
        r = r * lc - t * d;
        --steps;
    }
    for (; steps > 0; --steps) r *= lc;
    return r;
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (p.is_zero()) return q.primitive_part();
    if (q.is_zero()) return p.primitive_part();

    // primitive polynomial remainder sequence
    Poly a = p.primitive_part();
    Poly b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

RatFunc::RatFunc() : num_(), den_{1} {}

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_{1} {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly{1};
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Integer c = ::gcd(num_.content(), den_.content());
    if (den_.lowest_nonzero() < 0) c = -c;
    if (c != 1) {
        num_ = divide_exact(num_, c);
        den_ = divide_exact(den_, c);
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
    } else {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    *this = RatFunc(num_ * o.num_, den_ * o.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("division by the zero rational function");
    *this = RatFunc(num_ * o.den_, den_ * o.num_);
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RatFunc::to_string() const {
    if (den_ == Poly{1}) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool cross_equal(const RatFunc& a, const RatFunc& b) {
    return a.num() * b.den() == b.num() * a.den();
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

Series series_expand(const RatFunc& f, std::size_t n_terms, std::string origin) {
    const Poly& num = f.num();
    const Poly& den = f.den();
    const Integer q0 = den.coeff(0);
    if (q0 == 0) throw std::domain_error("denominator vanishes at 0; no power series expansion");

    const auto dc = den.coefficients();
    Series out{std::vector<Integer>(n_terms), std::move(origin)};
    for (std::size_t n = 0; n < n_terms; ++n) {
        Integer acc = num.coeff(n);
        const std::size_t lim = std::min(n, dc.size() - 1);
        for (std::size_t i = 1; i <= lim; ++i) {
            mpz_submul(acc.get_mpz_t(), dc[i].get_mpz_t(), out.terms[n - i].get_mpz_t());
        }
        if (!mpz_divisible_p(acc.get_mpz_t(), q0.get_mpz_t())) {
            throw std::domain_error("non-integer series coefficient at index " + std::to_string(n) +
                                    " of " + f.to_string());
        }
        mpz_divexact(out.terms[n].get_mpz_t(), acc.get_mpz_t(), q0.get_mpz_t());
    }
    return out;
}

}  // namespace balgf
