#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace hardsoft {

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
// Thin value wrapper over GMP's mpq_class so the generic polynomial/series
// code sees a plain regular type instead of gmpxx expression templates.
class BigRational {
  public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}
    BigRational(long num, long den);
    explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit BigRational(const mpz_class& z) : q_(z) {}

    // Parses "n", "n/d", optionally signed. Throws std::invalid_argument.
    static BigRational parse(const std::string& s);

    static BigRational factorial(unsigned long n);
    // C(alpha, k) = alpha (alpha-1) ... (alpha-k+1) / k! for rational alpha.
    static BigRational binomial(const BigRational& alpha, unsigned long k);

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const { return BigRational(mpq_class(-q_)); }
    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

    BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }
    BigRational pow(long e) const;  // e may be negative for nonzero values
    BigRational reciprocal() const;

    const mpq_class& raw() const { return q_; }
    std::string num_str() const { return q_.get_num().get_str(); }
    std::string den_str() const { return q_.get_den().get_str(); }
    // "n" when the denominator is 1, else "n/d".
    std::string str() const;
    double to_double() const { return q_.get_d(); }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace hardsoft
