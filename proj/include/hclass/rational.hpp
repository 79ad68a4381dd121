#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hclass {

using Int = boost::multiprecision::cpp_int;

// Exact rational: always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    // Integer power, negative exponents allowed for nonzero base.
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);
        if (num_ == 0) {
            if (e < 0) throw std::invalid_argument("Rational: 0 to negative power");
            return Rational(0);
        }
        Int n = num_, d = den_;
        unsigned long long a = static_cast<unsigned long long>(e < 0 ? -e : e);
        Int rn = 1, rd = 1;
        while (a) {
            if (a & 1) { rn *= n; rd *= d; }
            n *= n;
            d *= d;
            a >>= 1;
        }
        if (e < 0) return Rational(rd, rn);
        return Rational(rn, rd, already_reduced{});
    }

    double to_double() const {
        if (num_ == 0) return 0.0;
        Int n = num_ < 0 ? Int(-num_) : num_;
        Int d = den_;
        auto bn = boost::multiprecision::msb(n);
        auto bd = boost::multiprecision::msb(d);
        // keep both operands inside double range before converting
        if (bn > 900 || bd > 900) {
            unsigned shift = static_cast<unsigned>(std::max(bn, bd) - 800);
            n >>= shift;
            d >>= shift;
            if (d == 0) return num_ < 0 ? -HUGE_VAL : HUGE_VAL;
        }
        double v = n.convert_to<double>() / d.convert_to<double>();
        return num_ < 0 ? -v : v;
    }

    std::string to_string() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    struct already_reduced {};
    Rational(Int n, Int d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

inline Rational int_pow(long long base, long long e) { return Rational(base).pow(e); }

// Exact value coefficient * pi^pi_exponent.  Addition requires matching
// exponents unless one side is zero; products and quotients add exponents.
class PiRational {
public:
    PiRational() : coef_(0), pi_pow_(0) {}
    PiRational(Rational c) : coef_(std::move(c)), pi_pow_(0) {}
    PiRational(Rational c, int p) : coef_(std::move(c)), pi_pow_(p) {
        if (coef_.is_zero()) pi_pow_ = 0;
    }

    const Rational& coefficient() const { return coef_; }
    int pi_exponent() const { return pi_pow_; }
    bool is_zero() const { return coef_.is_zero(); }

    PiRational operator-() const { return PiRational(-coef_, pi_pow_); }

    PiRational& operator*=(const PiRational& o) {
        coef_ *= o.coef_;
        pi_pow_ = coef_.is_zero() ? 0 : pi_pow_ + o.pi_pow_;
        return *this;
    }
    PiRational& operator/=(const PiRational& o) {
        coef_ /= o.coef_;
        pi_pow_ = coef_.is_zero() ? 0 : pi_pow_ - o.pi_pow_;
        return *this;
    }
    PiRational& operator+=(const PiRational& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) { *this = o; return *this; }
        if (pi_pow_ != o.pi_pow_)
            throw std::invalid_argument("PiRational: addition with mismatched pi exponents");
        coef_ += o.coef_;
        if (coef_.is_zero()) pi_pow_ = 0;
        return *this;
    }
    PiRational& operator-=(const PiRational& o) { return *this += -o; }

    friend PiRational operator*(PiRational a, const PiRational& b) { return a *= b; }
    friend PiRational operator/(PiRational a, const PiRational& b) { return a /= b; }
    friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
    friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }

    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.coef_ == b.coef_ && (a.is_zero() || a.pi_pow_ == b.pi_pow_);
    }
    friend bool operator!=(const PiRational& a, const PiRational& b) { return !(a == b); }

    double to_double() const {
        if (coef_.is_zero()) return 0.0;
        return coef_.to_double() * std::pow(4.0 * std::atan(1.0), pi_pow_);
    }

    std::string to_string() const {
        if (pi_pow_ == 0 || coef_.is_zero()) return coef_.to_string();
        std::string s = "(" + coef_.to_string() + ")*pi";
        if (pi_pow_ != 1) s += "^" + std::to_string(pi_pow_);
        return s;
    }

private:
    Rational coef_;
    int pi_pow_;
};

}  // namespace hclass
