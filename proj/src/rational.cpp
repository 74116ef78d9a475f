#include "hardsoft/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hardsoft {

BigRational::BigRational(long num, long den) {
    if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::invalid_argument("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
}

BigRational BigRational::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("BigRational: zero denominator in '" + s + "'");
    q.canonicalize();
    return BigRational(q);
}

BigRational BigRational::factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return BigRational(f);
}

BigRational BigRational::binomial(const BigRational& alpha, unsigned long k) {
    BigRational num(1);
    for (unsigned long i = 0; i < k; ++i) num *= alpha - BigRational(static_cast<long>(i));
    return num / factorial(k);
}

BigRational BigRational::pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    mpq_class r(num, den);
    r.canonicalize();
    return BigRational(r);
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("BigRational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return BigRational(r);
}

std::string BigRational::str() const {
    return q_.get_den() == 1 ? num_str() : num_str() + "/" + den_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

}  // namespace hardsoft
