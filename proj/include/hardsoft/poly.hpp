#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hardsoft/errors.hpp"
#include "hardsoft/rational.hpp"

namespace hardsoft {

// Dense univariate polynomial over a commutative ring R. R must be regular,
// default-construct to zero, construct from long, and provide +,-,*,==,
// is_zero(). Trailing zeros are always trimmed; the zero polynomial has
// degree -1.
template <class R>
class Poly1 {
  public:
    Poly1() = default;
    Poly1(long n) { c_.push_back(R(n)); trim(); }
    explicit Poly1(R constant) { c_.push_back(std::move(constant)); trim(); }
    explicit Poly1(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly1 monomial(int deg, R coeff) {
        Poly1 p;
        if (deg < 0) throw std::invalid_argument("Poly1: negative degree");
        p.c_.assign(deg + 1, R());
        p.c_[deg] = std::move(coeff);
        p.trim();
        return p;
    }
    static Poly1 x() { return monomial(1, R(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    R coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return R();
        return c_[k];
    }

    Poly1 operator-() const {
        Poly1 r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Poly1& operator+=(const Poly1& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly1& operator-=(const Poly1& o) { return *this += -o; }
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b) {
        if (a.is_zero() || b.is_zero()) return Poly1();
        Poly1 r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, R());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    Poly1 derivative() const {
        Poly1 r;
        for (int k = 1; k <= degree(); ++k) r.c_.push_back(R(k) * c_[k]);
        r.trim();
        return r;
    }

    // Horner evaluation in a target ring T; embed maps coefficients into T.
    template <class T, class Embed>
    T eval(const T& x, Embed embed) const {
        T acc{};
        for (int k = degree(); k >= 0; --k) acc = acc * x + embed(c_[k]);
        return acc;
    }
    R eval(const R& x) const {
        return eval<R>(x, [](const R& v) { return v; });
    }

    template <class R2, class F>
    Poly1<R2> map_coefficients(F f) const {
        std::vector<R2> v;
        v.reserve(c_.size());
        for (const auto& x : c_) v.push_back(f(x));
        return Poly1<R2>(std::move(v));
    }

    const std::vector<R>& coeffs() const { return c_; }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
Poly1<R> scale(const Poly1<R>& p, const BigRational& q) {
    return p.template map_coefficients<R>([&](const R& v) { return scale(v, q); });
}

// Key order for bivariate supports: graded, then x-degree descending. This
// is also the canonical emission order (constant first, x^2 before xy).
struct GradedLex {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        return a.first > b.first;
    }
};

// Sparse bivariate polynomial in (x, y) over R; no explicit zero entries.
template <class R>
class BivarPoly {
  public:
    using Key = std::pair<int, int>;
    using Map = std::map<Key, R, GradedLex>;

    BivarPoly() = default;
    BivarPoly(long n) { set(0, 0, R(n)); }
    explicit BivarPoly(R constant) { set(0, 0, std::move(constant)); }

    static BivarPoly monomial(int dx, int dy, R coeff) {
        if (dx < 0 || dy < 0) throw std::invalid_argument("BivarPoly: negative degree");
        BivarPoly p;
        p.set(dx, dy, std::move(coeff));
        return p;
    }
    static BivarPoly x() { return monomial(1, 0, R(1)); }
    static BivarPoly y() { return monomial(0, 1, R(1)); }
    static BivarPoly x_minus_y() { return x() - y(); }

    // Embeds a univariate polynomial as a polynomial in x alone (or y alone).
    static BivarPoly from_poly_x(const Poly1<R>& p) {
        BivarPoly r;
        for (int k = 0; k <= p.degree(); ++k) r.set(k, 0, p.coeff(k));
        return r;
    }
    static BivarPoly from_poly_y(const Poly1<R>& p) {
        BivarPoly r;
        for (int k = 0; k <= p.degree(); ++k) r.set(0, k, p.coeff(k));
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    R coeff(int dx, int dy) const {
        auto it = t_.find({dx, dy});
        return it == t_.end() ? R() : it->second;
    }
    int total_degree() const {
        int d = -1;
        for (const auto& [k, v] : t_) d = std::max(d, k.first + k.second);
        return d;
    }
    const Map& terms() const { return t_; }

    BivarPoly operator-() const {
        BivarPoly r = *this;
        for (auto& [k, v] : r.t_) v = -v;
        return r;
    }
    BivarPoly& operator+=(const BivarPoly& o) {
        for (const auto& [k, v] : o.t_) add(k.first, k.second, v);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o) {
        for (const auto& [k, v] : o.t_) add(k.first, k.second, -v);
        return *this;
    }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_)
                r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
        return r;
    }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    BivarPoly swap_xy() const {
        BivarPoly r;
        for (const auto& [k, v] : t_) r.set(k.second, k.first, v);
        return r;
    }
    bool is_symmetric() const { return *this == swap_xy(); }
    bool is_antisymmetric() const { return *this == -swap_xy(); }

    Poly1<R> subst_y_equals_x() const {
        Poly1<R> r;
        for (const auto& [k, v] : t_) r += Poly1<R>::monomial(k.first + k.second, v);
        return r;
    }

    // Exact division by (x - y). Throws MathInvariantError when the
    // remainder p(x, x) is nonzero: that always signals a broken identity
    // upstream, never a plain usage error.
    BivarPoly divide_exact_x_minus_y() const {
        // Synthetic division viewing p as a polynomial in x over R[y].
        std::map<int, std::map<int, R>> byx;  // dx -> dy -> coeff
        int dmax = -1;
        for (const auto& [k, v] : t_) {
            byx[k.first][k.second] = v;
            dmax = std::max(dmax, k.first);
        }
        BivarPoly q;
        for (int dx = dmax; dx >= 1; --dx) {
            auto it = byx.find(dx);
            if (it == byx.end()) continue;
            for (const auto& [dy, v] : it->second) {
                if (v.is_zero()) continue;
                q.add(dx - 1, dy, v);
                byx[dx - 1][dy + 1] = byx[dx - 1].count(dy + 1) ? byx[dx - 1][dy + 1] + v : v;
            }
        }
        for (const auto& [dy, v] : byx[0])
            if (!v.is_zero())
                throw MathInvariantError("BivarPoly: not divisible by (x-y), remainder has y^" +
                                         std::to_string(dy) + " coefficient");
        return q;
    }

    template <class T, class Embed>
    T eval(const T& x, const T& y, Embed embed) const {
        T acc{};
        for (const auto& [k, v] : t_) {
            T term = embed(v);
            for (int i = 0; i < k.first; ++i) term = term * x;
            for (int i = 0; i < k.second; ++i) term = term * y;
            acc = acc + term;
        }
        return acc;
    }

    template <class R2, class F>
    BivarPoly<R2> map_coefficients(F f) const {
        BivarPoly<R2> r;
        for (const auto& [k, v] : t_) {
            R2 w = f(v);
            if (!w.is_zero()) r += BivarPoly<R2>::monomial(k.first, k.second, std::move(w));
        }
        return r;
    }

    void set(int dx, int dy, R v) {
        if (v.is_zero())
            t_.erase({dx, dy});
        else
            t_[{dx, dy}] = std::move(v);
    }
    void add(int dx, int dy, const R& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = t_.try_emplace({dx, dy}, v);
        if (!fresh) {
            it->second = it->second + v;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

  private:
    Map t_;
};

template <class R>
BivarPoly<R> scale(const BivarPoly<R>& p, const BigRational& q) {
    return p.template map_coefficients<R>([&](const R& v) { return scale(v, q); });
}

}  // namespace hardsoft
