#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hardsoft/errors.hpp"
#include "hardsoft/poly.hpp"
#include "hardsoft/rational.hpp"

namespace hardsoft {

// Truncated Laurent/Taylor series in one formal variable over a ring R:
//   sum_{k=lo}^{ord} c_k X^k + O(X^{ord+1}).
// The window [lo, ord] is structural: lo of a product is the sum of the
// operands' lo even when leading coefficients vanish, and no operation ever
// reads or writes past ord. Mixing different truncation orders narrows to
// the minimum and sets the precision_loss flag instead of erroring.
template <class R>
class TruncSeries {
  public:
    TruncSeries() : lo_(0), ord_(-1) {}
    TruncSeries(std::string var, long lo, std::vector<R> coeffs)
        : var_(std::move(var)), lo_(lo), ord_(lo + static_cast<long>(coeffs.size()) - 1),
          c_(std::move(coeffs)) {}
    TruncSeries(std::string var, long lo, std::vector<R> coeffs, long ord)
        : var_(std::move(var)), lo_(lo), ord_(ord), c_(std::move(coeffs)) {
        if (ord_ - lo_ + 1 < static_cast<long>(c_.size()))
            throw std::invalid_argument("TruncSeries: more coefficients than the window holds");
        if (ord_ >= lo_)
            c_.resize(ord_ - lo_ + 1, R());
        else
            c_.clear();
    }

    static TruncSeries zero(const std::string& var, long ord) {
        return TruncSeries(var, 0, std::vector<R>(), ord);
    }
    static TruncSeries one(const std::string& var, long ord) {
        return constant(var, R(1), ord);
    }
    static TruncSeries constant(const std::string& var, R value, long ord) {
        TruncSeries s = zero(var, ord);
        if (ord >= 0) s.c_[0 - s.lo_] = std::move(value);
        return s;
    }
    static TruncSeries x_power(const std::string& var, long k, long ord) {
        TruncSeries s(var, k, std::vector<R>{R(1)}, std::max(ord, k));
        return s;
    }

    const std::string& var() const { return var_; }
    long lo() const { return lo_; }
    long order() const { return ord_; }
    bool precision_loss() const { return loss_; }
    TruncSeries& mark_loss(bool v = true) {
        loss_ = v;
        return *this;
    }

    // Coefficient of X^k. Reading past the truncation order is an error:
    // those coefficients were never computed.
    const R& coeff(long k) const {
        static const R kZero{};
        if (k > ord_)
            throw std::invalid_argument("TruncSeries: coefficient " + std::to_string(k) +
                                        " beyond truncation order " + std::to_string(ord_));
        if (k < lo_) return kZero;
        return c_[k - lo_];
    }
    void set_coeff(long k, R v) {
        if (k > ord_) throw std::invalid_argument("TruncSeries: set past truncation order");
        if (k < lo_) {
            c_.insert(c_.begin(), lo_ - k, R());
            lo_ = k;
        }
        c_[k - lo_] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        check_var(a, b);
        TruncSeries r;
        r.var_ = a.var_;
        r.lo_ = std::min(a.lo_, b.lo_);
        r.ord_ = std::min(a.ord_, b.ord_);
        r.loss_ = a.loss_ || b.loss_ || (a.ord_ != b.ord_);
        if (r.ord_ < r.lo_) r.lo_ = r.ord_ + 1;
        r.c_.assign(r.ord_ - r.lo_ + 1, R());
        for (long k = r.lo_; k <= r.ord_; ++k) {
            R v = (k >= a.lo_ && k <= a.ord_ ? a.coeff(k) : R()) +
                  (k >= b.lo_ && k <= b.ord_ ? b.coeff(k) : R());
            r.c_[k - r.lo_] = std::move(v);
        }
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        check_var(a, b);
        TruncSeries r;
        r.var_ = a.var_;
        r.lo_ = a.lo_ + b.lo_;
        long orda = a.ord_ + b.lo_, ordb = b.ord_ + a.lo_;
        r.ord_ = std::min(orda, ordb);
        r.loss_ = a.loss_ || b.loss_;
        if (r.ord_ < r.lo_) {
            r.lo_ = r.ord_ + 1;
            return r;
        }
        r.c_.assign(r.ord_ - r.lo_ + 1, R());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            long ka = a.lo_ + static_cast<long>(i);
            for (size_t j = 0; j < b.c_.size(); ++j) {
                long k = ka + b.lo_ + static_cast<long>(j);
                if (k > r.ord_) break;
                if (b.c_[j].is_zero()) continue;
                r.c_[k - r.lo_] = r.c_[k - r.lo_] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.var_ != b.var_ || a.ord_ != b.ord_) return false;
        long lo = std::min(a.lo_, b.lo_);
        for (long k = lo; k <= a.ord_; ++k) {
            R va = k >= a.lo_ ? a.coeff(k) : R();
            R vb = k >= b.lo_ ? b.coeff(k) : R();
            if (!(va == vb)) return false;
        }
        return true;
    }

    TruncSeries scaled(const BigRational& q) const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = scale(v, q);
        return r;
    }
    TruncSeries scaled_ring(const R& s) const {
        TruncSeries r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }

    // Multiplication by X^k (exact exponent bookkeeping).
    TruncSeries shifted(long k) const {
        TruncSeries r = *this;
        r.lo_ += k;
        r.ord_ += k;
        return r;
    }

    TruncSeries truncated(long new_ord) const {
        if (new_ord > ord_)
            throw std::invalid_argument("TruncSeries: cannot extend truncation order");
        TruncSeries r = *this;
        r.ord_ = new_ord;
        if (r.lo_ > new_ord) {
            r.lo_ = new_ord + 1;
            r.c_.clear();
        } else {
            r.c_.resize(new_ord - r.lo_ + 1);
        }
        return r;
    }

    // Strictly negative-exponent part. The result is a finite Laurent
    // polynomial, hence exact; it keeps the source truncation order.
    TruncSeries principal_part() const {
        if (lo_ >= 0 || ord_ < lo_) return zero(var_, ord_);
        std::vector<R> v(ord_ - lo_ + 1, R());
        for (long k = lo_; k < 0 && k <= ord_; ++k) v[k - lo_] = coeff(k);
        TruncSeries r(var_, lo_, std::move(v), ord_);
        r.loss_ = loss_;
        return r;
    }
    TruncSeries analytic_part() const { return *this - principal_part(); }

    // Raises lo past exactly-zero stored leading coefficients. Zero series
    // collapse to an empty window above ord.
    TruncSeries tightened() const {
        TruncSeries r = *this;
        while (!r.c_.empty() && r.c_.front().is_zero()) {
            r.c_.erase(r.c_.begin());
            ++r.lo_;
        }
        if (r.c_.empty()) r.lo_ = r.ord_ + 1;
        return r;
    }

    // Generalized binomial power (1 + u)^alpha with exact rational binomial
    // coefficients; requires constant term 1 (so u has positive valuation).
    TruncSeries pow_rational(const BigRational& alpha) const {
        if (lo_ > 0 || !(coeff(0) == R(1)))
            throw std::invalid_argument("TruncSeries: pow_rational needs constant term 1");
        for (long k = lo_; k < 0; ++k)
            if (!coeff(k).is_zero())
                throw std::invalid_argument("TruncSeries: pow_rational needs a Taylor series");
        TruncSeries u = *this - one(var_, ord_);
        TruncSeries acc = one(var_, ord_);
        TruncSeries upow = one(var_, ord_);
        for (long k = 1; k <= ord_; ++k) {
            upow = upow * u;
            if (upow.is_zero()) break;
            acc = acc + upow.scaled(BigRational::binomial(alpha, static_cast<unsigned long>(k)));
        }
        acc.loss_ = loss_;
        return acc;
    }

    // Multiplicative inverse for series with constant term 1.
    TruncSeries inverse_unit() const { return pow_rational(BigRational(-1)); }

    // Formal composition: substitutes sub (positive valuation, possibly a
    // different variable and coefficient ring) for this series' variable.
    // Requires a Taylor series. embed maps this ring into sub's ring.
    template <class R2, class Embed>
    TruncSeries<R2> compose(const TruncSeries<R2>& sub, Embed embed) const {
        for (long k = lo_; k < 0 && k <= ord_; ++k)
            if (!coeff(k).is_zero())
                throw std::invalid_argument("TruncSeries: compose needs a Taylor series");
        if (sub.lo() < 1) {
            bool ok = true;
            for (long k = sub.lo(); k <= std::min(0L, sub.order()); ++k)
                if (!sub.coeff(k).is_zero()) ok = false;
            if (!ok)
                throw std::invalid_argument("TruncSeries: substitution needs positive valuation");
        }
        long target = std::min(sub.order(), ord_);
        TruncSeries<R2> acc = TruncSeries<R2>::zero(sub.var(), target);
        TruncSeries<R2> subt = sub.truncated(target);
        for (long k = ord_; k >= 0; --k) {
            acc = acc * subt;
            R2 ck = embed(coeff(k));
            if (!ck.is_zero()) acc = acc + TruncSeries<R2>::constant(sub.var(), ck, target);
        }
        return acc;
    }

    // Numeric shadow: evaluates the series at a point of a target ring.
    template <class T, class Embed>
    T eval(const T& x, Embed embed) const {
        T acc{};
        for (long k = ord_; k >= std::min(lo_, 0L); --k) acc = acc * x + embed(coeff(k));
        for (long k = -1; k >= lo_; --k) {
            T p = embed(coeff(k));
            T xp = x;
            for (long i = 1; i < -k; ++i) xp = xp * x;
            acc = acc + p / xp;
        }
        return acc;
    }

    template <class R2, class F>
    TruncSeries<R2> map_coefficients(F f) const {
        std::vector<R2> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(f(x));
        TruncSeries<R2> r(var_, lo_, std::move(v), ord_);
        r.mark_loss(loss_);
        return r;
    }

  private:
    static void check_var(const TruncSeries& a, const TruncSeries& b) {
        if (a.var_ != b.var_)
            throw std::invalid_argument("TruncSeries: variable mismatch '" + a.var_ + "' vs '" +
                                        b.var_ + "'");
    }

    std::string var_;
    long lo_ = 0;
    long ord_ = -1;
    std::vector<R> c_;
    bool loss_ = false;
};

// 2x2 matrix over any ring-like S (series, polynomials, scalars).
template <class S>
struct Mat2 {
    S a, b, c, d;  // rows: (a b), (c d)

    static Mat2 from(S a, S b, S c, S d) {
        return Mat2{std::move(a), std::move(b), std::move(c), std::move(d)};
    }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return Mat2{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return Mat2{x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2{x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                    x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    Mat2 transpose() const { return Mat2{a, c, b, d}; }
    S det() const { return a * d - b * c; }

    template <class F>
    auto map(F f) const -> Mat2<decltype(f(a))> {
        return Mat2<decltype(f(a))>{f(a), f(b), f(c), f(d)};
    }
};

}  // namespace hardsoft
