#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace rtk {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Thin wrapper over GMP's mpq_class that adds checked
/// division and the canonical "p/q" string encoding used everywhere
/// in the JSON interfaces.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading '-'). Throws on anything else.
    static Rational parse(const std::string& s);

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Canonical encoding: "p" when the denominator is 1, else "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

private:
    mpq_class v_;
};

/// Exact square root of a nonnegative rational, when one exists in Q.
/// Returns nullopt when numerator or denominator is not a perfect square.
/// Throws std::domain_error on negative input.
std::optional<Rational> try_sqrt(const Rational& x);

/// Splits a positive integer as x = d * m^2 with d free of small square
/// factors (trial division up to 10^4, then a perfect-square check on the
/// remainder). For the desk-scale inputs this library targets, d is
/// square-free.
std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& x);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// An element with b == 0 is a plain rational and carries d == 0; it
/// combines with any discriminant. Mixing two elements whose radical
/// parts live over different d throws.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(long n) : a_(n), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero()) {
            d_ = 0;
        } else if (d_ <= 1) {
            throw std::invalid_argument("QuadExt: discriminant must be > 1 when b != 0");
        }
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long discriminant() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// Exact sign of a + b*sqrt(d).
    int sign() const;

    /// Galois conjugate a - b*sqrt(d).
    QuadExt conjugate() const { return b_.is_zero() ? *this : QuadExt(a_, -b_, d_); }

    /// Field norm a^2 - b^2 d; zero only for the zero element.
    Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

    QuadExt operator-() const { return b_.is_zero() ? QuadExt(-a_) : QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { a += b; return a; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { a -= b; return a; }
    friend QuadExt operator*(QuadExt a, const QuadExt& b) { a *= b; return a; }
    friend QuadExt operator/(QuadExt a, const QuadExt& b) { a /= b; return a; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const;

private:
    // invariant: b_ == 0  <=>  d_ == 0
    Rational a_, b_;
    long d_;

    static long merge_d(const QuadExt& x, const QuadExt& y);
};

/// sqrt(x) as an element of Q(sqrt(d)) for the canonical d of x.
/// Exact rational roots come back with empty radical part.
QuadExt sqrt_in_quadext(const Rational& x);

}  // namespace rtk
