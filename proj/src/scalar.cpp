#include "rtk/scalar.hpp"

namespace rtk {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!check_int(s)) throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    return Rational(mpz_class(num), d);
}

std::optional<Rational> try_sqrt(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("try_sqrt: negative input");
    if (x.is_zero()) return Rational(0);
    mpz_class num = x.num(), den = x.den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

std::pair<mpz_class, mpz_class> squarefree_split(const mpz_class& x) {
    if (x <= 0) throw std::domain_error("squarefree_split: input must be positive");
    mpz_class rest = x, m = 1, d = 1;
    for (long p = 2; p <= 10000 && rest > 1; p = (p == 2) ? 3 : p + 2) {
        mpz_class p2 = mpz_class(p) * p;
        while (mpz_divisible_p(rest.get_mpz_t(), p2.get_mpz_t())) {
            rest /= p2;
            m *= p;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            d *= p;
        }
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), rest.get_mpz_t());
            m *= r;
        } else {
            d *= rest;
        }
    }
    return {d, m};
}

int QuadExt::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    int sa = a_.sign(), sb = b_.sign();
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against b^2 d
    Rational a2 = a_ * a_, b2d = b_ * b_ * Rational(d_);
    if (a2 == b2d) return 0;  // cannot happen for square-free d > 1, kept for safety
    return (a2 > b2d) ? sa : sb;
}

long QuadExt::merge_d(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_)
        throw std::invalid_argument("QuadExt: mixed discriminants " + std::to_string(x.d_) +
                                    " and " + std::to_string(y.d_));
    return x.d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    long d = merge_d(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = b_.is_zero() ? 0 : d;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = merge_d(*this, o);
    Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    d_ = b_.is_zero() ? 0 : d;
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) throw std::domain_error("QuadExt: division by zero");
    long d = merge_d(*this, o);
    (void)d;
    // multiply by conjugate / norm
    QuadExt conj = o.conjugate();
    *this *= conj;
    Rational n = o.norm();
    a_ /= n;
    b_ /= n;
    d_ = b_.is_zero() ? 0 : d_;
    return *this;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    return a_.str() + " + " + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadExt sqrt_in_quadext(const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("sqrt_in_quadext: negative input");
    if (x.is_zero()) return QuadExt(Rational(0));
    // sqrt(p/q) = sqrt(p*q)/q
    auto [d, m] = squarefree_split(x.num() * x.den());
    Rational coeff(m, x.den());
    if (d == 1) return QuadExt(coeff);
    if (!d.fits_slong_p())
        throw std::domain_error("sqrt_in_quadext: discriminant too large");
    return QuadExt(Rational(0), coeff, d.get_si());
}

}  // namespace rtk
