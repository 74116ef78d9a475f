#pragma once

#include <complex>
#include <iosfwd>
#include <string>

#include "hardsoft/rational.hpp"

namespace hardsoft {

// Element of the field Q(i, sqrt(2)), stored on the basis {1, r2, i, i*r2}
// with r2 = sqrt(2). Every constant produced by the expansion engine lives
// here; leaving the field is impossible by construction, which doubles as a
// consistency check on the derivation.
class AlgNum {
  public:
    AlgNum() = default;
    AlgNum(long n) : a_(n) {}
    AlgNum(BigRational a) : a_(std::move(a)) {}
    AlgNum(BigRational a, BigRational b, BigRational c, BigRational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static AlgNum sqrt2() { return AlgNum(BigRational(0), BigRational(1), BigRational(0), BigRational(0)); }
    static AlgNum i() { return AlgNum(BigRational(0), BigRational(0), BigRational(1), BigRational(0)); }
    static AlgNum i_sqrt2() { return AlgNum(BigRational(0), BigRational(0), BigRational(0), BigRational(1)); }

    const BigRational& a() const { return a_; }
    const BigRational& b() const { return b_; }
    const BigRational& c() const { return c_; }
    const BigRational& d() const { return d_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    // Rational part; throws MathInvariantError unless is_rational().
    BigRational rational_part() const;

    AlgNum conj_i() const { return AlgNum(a_, b_, -c_, -d_); }      // i -> -i
    AlgNum conj_sqrt2() const { return AlgNum(a_, -b_, c_, -d_); }  // r2 -> -r2

    AlgNum operator-() const { return AlgNum(-a_, -b_, -c_, -d_); }
    AlgNum& operator+=(const AlgNum& o);
    AlgNum& operator-=(const AlgNum& o);
    AlgNum& operator*=(const AlgNum& o) { return *this = *this * o; }
    AlgNum& operator/=(const AlgNum& o) { return *this = *this * o.inverse(); }

    friend AlgNum operator+(AlgNum x, const AlgNum& y) { return x += y; }
    friend AlgNum operator-(AlgNum x, const AlgNum& y) { return x -= y; }
    friend AlgNum operator*(const AlgNum& x, const AlgNum& y);
    friend AlgNum operator/(AlgNum x, const AlgNum& y) { return x /= y; }
    friend bool operator==(const AlgNum& x, const AlgNum& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const AlgNum& x, const AlgNum& y) { return !(x == y); }

    // Field inverse via the product of the three Galois conjugates over the
    // rational norm. Throws std::invalid_argument on zero.
    AlgNum inverse() const;

    // Canonical text form "a + b*r2 + c*i + d*i*r2" with reduced fractions.
    std::string str() const;

    std::complex<double> to_complex() const;

  private:
    BigRational a_, b_, c_, d_;
};

inline AlgNum scale(const AlgNum& x, const BigRational& q) { return x * AlgNum(q); }
inline BigRational scale(const BigRational& x, const BigRational& q) { return x * q; }

std::ostream& operator<<(std::ostream& os, const AlgNum& x);

}  // namespace hardsoft
