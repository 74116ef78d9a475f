#include "hardsoft/algnum.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hardsoft/errors.hpp"

namespace hardsoft {

AlgNum& AlgNum::operator+=(const AlgNum& o) {
    a_ += o.a_;
    b_ += o.b_;
    c_ += o.c_;
    d_ += o.d_;
    return *this;
}

AlgNum& AlgNum::operator-=(const AlgNum& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    c_ -= o.c_;
    d_ -= o.d_;
    return *this;
}

AlgNum operator*(const AlgNum& x, const AlgNum& y) {
    // Basis products: r2*r2 = 2, i*i = -1, (i*r2)^2 = -2, r2*i = i*r2,
    // r2*(i*r2) = 2i, i*(i*r2) = -r2.
    const BigRational two(2);
    BigRational a = x.a_ * y.a_ + two * (x.b_ * y.b_) - x.c_ * y.c_ - two * (x.d_ * y.d_);
    BigRational b = x.a_ * y.b_ + x.b_ * y.a_ - x.c_ * y.d_ - x.d_ * y.c_;
    BigRational c = x.a_ * y.c_ + x.c_ * y.a_ + two * (x.b_ * y.d_ + x.d_ * y.b_);
    BigRational d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
    return AlgNum(std::move(a), std::move(b), std::move(c), std::move(d));
}

AlgNum AlgNum::inverse() const {
    if (is_zero()) throw std::invalid_argument("AlgNum: division by zero");
    AlgNum z1 = conj_i();
    AlgNum z2 = conj_sqrt2();
    AlgNum z3 = conj_i().conj_sqrt2();
    AlgNum prod = z1 * z2 * z3;
    AlgNum norm = *this * prod;
    if (!norm.is_rational())
        throw MathInvariantError("AlgNum: norm left the rational field");
    BigRational n = norm.a_;
    return prod * AlgNum(n.reciprocal());
}

BigRational AlgNum::rational_part() const {
    if (!is_rational())
        throw MathInvariantError("AlgNum: residual irrational component in " + str());
    return a_;
}

std::string AlgNum::str() const {
    return a_.str() + " + " + b_.str() + "*r2 + " + c_.str() + "*i + " + d_.str() + "*i*r2";
}

std::complex<double> AlgNum::to_complex() const {
    const double r2 = std::sqrt(2.0);
    return {a_.to_double() + b_.to_double() * r2, c_.to_double() + d_.to_double() * r2};
}

std::ostream& operator<<(std::ostream& os, const AlgNum& x) { return os << x.str(); }

}  // namespace hardsoft
