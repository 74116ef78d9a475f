#include "hardsoft/expansion.hpp"

#include <stdexcept>
#include <string>

#include "hardsoft/errors.hpp"

namespace hardsoft {

namespace {

AlgNum embed_q(const BigRational& q) { return AlgNum(q); }
BPolyA embed_q_bp(const BigRational& q) { return BPolyA(AlgNum(q)); }
BPolyA embed_a_bp(const AlgNum& a) { return BPolyA(a); }

// z - 1 = -h (2t - h t^2) with t = x or y.
HSeriesB substitution_series(int h_order, char which) {
    BPolyA t = which == 'x' ? BPolyA::monomial(1, 0, AlgNum(1)) : BPolyA::monomial(0, 1, AlgNum(1));
    HSeriesB sub = HSeriesB::zero(kVarH, h_order);
    if (h_order >= 1) sub.set_coeff(1, scale(t, BigRational(-2)));
    if (h_order >= 2) sub.set_coeff(2, t * t);
    return sub;
}

Mat2<HSeriesB> mat_identity_h(int ord) {
    HSeriesB one = HSeriesB::one(kVarH, ord), zero = HSeriesB::zero(kVarH, ord);
    return Mat2<HSeriesB>{one, zero, zero, one};
}

Mat2<HSeriesB> mat_constant_h(const AlgNum& a, const AlgNum& b, const AlgNum& c, const AlgNum& d,
                              int ord) {
    auto mk = [&](const AlgNum& v) { return HSeriesB::constant(kVarH, BPolyA(v), ord); };
    return Mat2<HSeriesB>{mk(a), mk(b), mk(c), mk(d)};
}

// Inverse of a matrix series with constant term I.
Mat2<HSeriesB> mat_inverse(const Mat2<HSeriesB>& m) {
    HSeriesB det_inv = m.det().pow_rational(BigRational(-1));
    return Mat2<HSeriesB>{m.d * det_inv, (-m.b) * det_inv, (-m.c) * det_inv, m.a * det_inv};
}

Mat2<SeriesA> mat_identity_s(long ord) {
    SeriesA one = SeriesA::one(kVarS, ord), zero = SeriesA::zero(kVarS, ord);
    return Mat2<SeriesA>{one, zero, zero, one};
}

// sqrt((1-hx)(1-hy)) / (1 - h(x+y)/2) over rational bivariate coefficients.
TruncSeries<BPolyQ> prefactor_rho(int j_max) {
    using HQ = TruncSeries<BPolyQ>;
    BPolyQ x = BPolyQ::x(), y = BPolyQ::y();
    HQ lin_x = HQ::one(kVarH, j_max);
    lin_x.set_coeff(1, -x);
    HQ lin_y = HQ::one(kVarH, j_max);
    lin_y.set_coeff(1, -y);
    HQ lin_m = HQ::one(kVarH, j_max);
    lin_m.set_coeff(1, scale(x + y, BigRational(-1, 2)));
    const BigRational half(1, 2);
    return lin_x.pow_rational(half) * lin_y.pow_rational(half) *
           lin_m.pow_rational(BigRational(-1));
}

BPolyQ to_rational_poly(const BPolyA& p, const std::string& where) {
    return p.map_coefficients<BigRational>([&](const AlgNum& a) {
        if (!a.is_rational())
            throw MathInvariantError("assemble: irrational coefficient in " + where + ": " + a.str());
        return a.rational_part();
    });
}

}  // namespace

std::vector<AiryPolyPair> airy_derivative_polys(int m_max) {
    if (m_max < 0) throw std::invalid_argument("airy_derivative_polys: m_max < 0");
    std::vector<AiryPolyPair> out;
    out.reserve(m_max + 1);
    PolyQ P(1), Q;
    PolyQ x = PolyQ::x();
    for (int m = 0; m <= m_max; ++m) {
        out.push_back({m, P, Q});
        PolyQ Pn = P.derivative() + x * Q;
        PolyQ Qn = Q.derivative() + P;
        P = std::move(Pn);
        Q = std::move(Qn);
    }
    return out;
}

std::vector<AsympCoeffs> airy_asymp_coeffs(int k_max) {
    if (k_max < 0) throw std::invalid_argument("airy_asymp_coeffs: k_max < 0");
    std::vector<AsympCoeffs> out;
    out.reserve(k_max + 1);
    BigRational u(1);
    out.push_back({0, u, u});
    for (int k = 1; k <= k_max; ++k) {
        u *= BigRational((6L * k - 5) * (6L * k - 3) * (6L * k - 1), 216L * (2 * k - 1) * k);
        BigRational v = u * BigRational(6L * k + 1, 1 - 6L * k);
        out.push_back({k, u, v});
    }
    return out;
}

bool lemma_identity_check(int N) {
    if (N < 1) throw std::invalid_argument("lemma_identity_check: N < 1");
    auto pq = airy_derivative_polys(N + 1);
    PolyQ acc;
    for (int j = 0; j <= N; ++j) {
        PolyQ term = pq[j].P * pq[N + 1 - j].Q - pq[j].Q * pq[N + 1 - j].P;
        acc += scale(term, (BigRational::factorial(j) * BigRational::factorial(N - j)).reciprocal());
    }
    return acc.is_zero();
}

FSeries f_series(int order) {
    if (order < 1) throw std::invalid_argument("f_series: order < 1");
    // 3g/2 -+ 3 pi i/4 = (w^3/2)(1 + sum_{k>=1} 3 w^{2k}/(2k+3)), w^2 = 1-z.
    int word = 2 * order;
    SeriesQ inner = SeriesQ::one("w", word);
    for (int k = 1; 2 * k <= word; ++k) inner.set_coeff(2 * k, BigRational(3, 2 * k + 3));
    SeriesQ u = inner.pow_rational(BigRational(2, 3));
    SeriesQ r = SeriesQ::zero(kVarS, order);
    for (int n = 0; n <= order; ++n) {
        BigRational c = u.coeff(2 * n);
        if (n % 2 == 1) c = -c;  // w^2 = -(z-1)
        r.set_coeff(n, c);
    }
    return FSeries{r, BigRational(-2, 3), BigRational(-1)};
}

HSeriesP scaled_f_series(int j_max) {
    if (j_max < 1) throw std::invalid_argument("scaled_f_series: j_max < 1");
    FSeries f = f_series(j_max);
    // nu^{2/3} = 2^{-1/3} h^{-1}; the 2-powers must combine integrally.
    BigRational two_exp = f.two_exponent + BigRational(-1, 3);
    if (!two_exp.is_integer())
        throw MathInvariantError("scaled_f_series: residual factor 2^(" + two_exp.str() + ")");
    long e = std::stol(two_exp.num_str());
    BigRational scale_q = f.sign * BigRational(2).pow(e);

    HSeriesP sub = HSeriesP::zero(kVarH, j_max + 1);
    sub.set_coeff(1, PolyQ::monomial(1, BigRational(-2)));
    sub.set_coeff(2, PolyQ::monomial(2, BigRational(1)));
    HSeriesP r_sub = f.r.compose(sub, [](const BigRational& q) { return PolyQ(q); });
    HSeriesP lead = sub.shifted(-1).scaled(scale_q);  // 2^e * sign * h^{-1} (z-1)
    HSeriesP res = lead * r_sub;
    if (!(res.coeff(0) == PolyQ::x()))
        throw MathInvariantError("scaled_f_series: constant term is not x");
    return res;
}

std::vector<std::vector<PolyQ>> p_coeff_table(int m_max, int j_max) {
    if (m_max < 0 || j_max < 0) throw std::invalid_argument("p_coeff_table: negative bound");
    std::vector<std::vector<PolyQ>> p(m_max + 1, std::vector<PolyQ>(j_max + 1));
    p[0][0] = PolyQ(1);
    if (m_max == 0) return p;
    HSeriesP S = scaled_f_series(std::max(j_max, 1)) -
                 HSeriesP::constant(kVarH, PolyQ::x(), std::max(j_max, 1));
    S = S.truncated(j_max);
    HSeriesP pw = HSeriesP::one(kVarH, j_max);
    BigRational mfac(1);
    for (int m = 1; m <= m_max; ++m) {
        pw = pw * S;
        mfac *= BigRational(m);
        HSeriesP row = pw.scaled(mfac.reciprocal());
        for (int j = 0; j <= j_max; ++j) p[m][j] = row.coeff(j);
    }
    return p;
}

std::vector<PolyQ> p_coeffs(int m, int j_max) {
    if (m < 1 || m > j_max) throw std::invalid_argument("p_coeffs: need 1 <= m <= j_max");
    return p_coeff_table(m, j_max)[m];
}

ACoeffsTriple a_coeffs(int N) {
    if (N < 1) throw std::invalid_argument("a_coeffs: N < 1");
    auto pq = airy_derivative_polys(N + 1);
    auto p = p_coeff_table(N, N);
    auto X = [](const PolyQ& q) { return BPolyQ::from_poly_x(q); };
    auto Y = [](const PolyQ& q) { return BPolyQ::from_poly_y(q); };

    BPolyQ a00, a01, a11;
    for (int n = 1; n <= N; ++n) {
        a00 += Y(p[n][N] * pq[n + 1].P) - X(p[n][N] * pq[n + 1].P);
        a01 += Y(p[n][N] * pq[n + 1].Q) + X(p[n][N] * pq[n].P);
        a11 += X(p[n][N] * pq[n].Q) - Y(p[n][N] * pq[n].Q);
    }
    for (int j = 1; j <= N - 1; ++j) {
        int k = N - j;
        for (int m = 1; m <= j; ++m) {
            for (int n = 1; n <= k; ++n) {
                BPolyQ pmx = X(p[m][j]), pmy = Y(p[m][j]);
                BPolyQ pnx = X(p[n][k]), pny = Y(p[n][k]);
                a00 += pmx * X(pq[m].P) * pny * Y(pq[n + 1].P) -
                       pmy * Y(pq[m].P) * pnx * X(pq[n + 1].P);
                a01 += pmx * pny * (X(pq[m].P) * Y(pq[n + 1].Q) - X(pq[m + 1].P) * Y(pq[n].Q));
                a11 += pmx * X(pq[m].Q) * pny * Y(pq[n + 1].Q) -
                       pmy * Y(pq[m].Q) * pnx * X(pq[n + 1].Q);
            }
        }
    }
    return ACoeffsTriple{a00, a01, a11};
}

std::vector<BPolyQ> prefactor_series(int j_max) {
    if (j_max < 2) throw std::invalid_argument("prefactor_series: j_max < 2");
    TruncSeries<BPolyQ> rho = prefactor_rho(j_max);
    if (!(rho.coeff(0) == BPolyQ(1)) || !rho.coeff(1).is_zero())
        throw MathInvariantError("prefactor_series: expansion does not start at j=2");
    std::vector<BPolyQ> out(j_max + 1);
    for (int j = 2; j <= j_max; ++j) {
        BPolyQ rj = (-rho.coeff(j)).divide_exact_x_minus_y().divide_exact_x_minus_y();
        out[j] = std::move(rj);
    }
    return out;
}

EFactorSeries e_factor_series(int order) {
    if (order < 0) throw std::invalid_argument("e_factor_series: order < 0");
    SeriesQ r = f_series(std::max(order, 1)).r.truncated(order);
    return EFactorSeries{r.pow_rational(BigRational(1, 4)), r.pow_rational(BigRational(-1, 4))};
}

Mat2<SeriesA> j_matrix_series(int k, int order) {
    if (k < 1) throw std::invalid_argument("j_matrix_series: k < 1");
    auto uv = airy_asymp_coeffs(k);
    const BigRational uk = uv[k].u, vk = uv[k].v;
    const BigRational three_k = BigRational(3).pow(k);
    SeriesA zero = SeriesA::zero(kVarS, order);

    if (k % 2 == 1) {
        // f^{-3k/2}(1-z)^{-+1/2} = -2 (-4)^m (z-1)^{-(3k+-1)/2} r^{-3k/2},
        // m = (k-1)/2; the sign is the k=1 boundary-data normalization.
        int m = (k - 1) / 2;
        int pole12 = 2 + 3 * m, pole21 = 1 + 3 * m;
        SeriesQ rp = f_series(order + pole12).r.pow_rational(BigRational(-3L * k, 2));
        // Overall -(3^k/2^{k/2}) u_k (-2)(-4)^m = 3^k u_k (-1)^m 2^m sqrt(2).
        BigRational mag = three_k * (m % 2 == 0 ? BigRational(1) : BigRational(-1)) *
                          BigRational(2).pow(m);
        AlgNum c12 = AlgNum(BigRational(0), mag * uk, BigRational(0), BigRational(0));
        AlgNum c21 = AlgNum(BigRational(0), mag * vk, BigRational(0), BigRational(0));
        SeriesA e12 = rp.map_coefficients<AlgNum>(embed_q)
                          .shifted(-pole12)
                          .truncated(order)
                          .scaled_ring(c12);
        SeriesA e21 = rp.truncated(order + pole21)
                          .map_coefficients<AlgNum>(embed_q)
                          .shifted(-pole21)
                          .truncated(order)
                          .scaled_ring(c21);
        return Mat2<SeriesA>{zero, e12, e21, zero};
    }

    // Even k: f^{-3k/2} = (f^{-3})^{k/2} with f^3 = -(z-1)^3 r^3 / 4 exact.
    int m = k / 2;
    int pole = 3 * m;
    SeriesQ rp = f_series(order + pole).r.pow_rational(BigRational(-3L * m));
    BigRational c = three_k * BigRational(-2).pow(m);
    SeriesA base = rp.map_coefficients<AlgNum>(embed_q).shifted(-pole).truncated(order);
    return Mat2<SeriesA>{base.scaled(c * uk), zero, zero, base.scaled(c * vk)};
}

std::vector<ROuterInner> r_outer_inner(int k_max, int order) {
    if (k_max < 1) throw std::invalid_argument("r_outer_inner: k_max < 1");
    long work = order + 2L * k_max + 2;
    std::vector<Mat2<SeriesA>> J;
    J.reserve(k_max);
    for (int l = 1; l <= k_max; ++l) J.push_back(j_matrix_series(l, work));

    std::vector<Mat2<SeriesA>> r_out;
    r_out.push_back(mat_identity_s(work));
    std::vector<ROuterInner> result;

    for (int k = 1; k <= k_max; ++k) {
        Mat2<SeriesA> q = r_out[k - 1] * J[0];
        for (int l = 2; l <= k; ++l) q = q + r_out[k - l] * J[l - 1];
        Mat2<SeriesA> outer = q.map([](const SeriesA& s) { return s.principal_part(); });
        Mat2<SeriesA> inner = (outer - q).map([](const SeriesA& s) { return s.tightened(); });

        auto check_analytic = [&](const SeriesA& s, const char* which) {
            if (!s.is_zero() && s.lo() < 0)
                throw MathInvariantError("r_outer_inner: R_" + std::to_string(k) + " " + which +
                                         " entry not analytic at z=1");
        };
        check_analytic(inner.a, "11");
        check_analytic(inner.b, "12");
        check_analytic(inner.c, "21");
        check_analytic(inner.d, "22");

        bool odd = k % 2 == 1;
        bool parity_ok = odd ? (q.a.is_zero() && q.d.is_zero()) : (q.b.is_zero() && q.c.is_zero());
        if (!parity_ok)
            throw MathInvariantError("r_outer_inner: parity structure broken at k=" +
                                     std::to_string(k));

        r_out.push_back(outer);
        auto cut = [&](const Mat2<SeriesA>& mm) {
            return mm.map([&](const SeriesA& s) { return s.truncated(order); });
        };
        result.push_back(ROuterInner{cut(outer), cut(inner)});
    }
    return result;
}

Mat2<HSeriesB> conjugated_r_series(int h_order, char which) {
    if (h_order < 1) throw std::invalid_argument("conjugated_r_series: h_order < 1");
    int k_max = std::max(1, 2 * h_order);
    // R_k first contributes at h^{(3k-1)/2}; skip k beyond the window.
    while (k_max > 1 && 3 * (k_max - 1) - 1 > 2 * h_order) --k_max;
    auto rr = r_outer_inner(k_max, h_order);
    HSeriesB sub = substitution_series(h_order, which);
    Mat2<HSeriesB> acc = mat_identity_h(h_order);

    for (int k = 1; k <= k_max; ++k) {
        auto add_entry = [&](const SeriesA& entry, int i, int j, HSeriesB& slot) {
            if (entry.is_zero()) return;
            long twice = 3L * k + (i == 0 && j == 1 ? 1 : (i == 1 && j == 0 ? -1 : 0));
            if (twice % 2 != 0)
                throw MathInvariantError("conjugated_r_series: half-integer h power at k=" +
                                         std::to_string(k));
            long shift = twice / 2;
            if (shift > h_order) return;
            HSeriesB comp = entry.compose(sub, embed_a_bp);
            slot = slot + comp.shifted(shift).truncated(h_order);
        };
        add_entry(rr[k - 1].inner.a, 0, 0, acc.a);
        add_entry(rr[k - 1].inner.b, 0, 1, acc.b);
        add_entry(rr[k - 1].inner.c, 1, 0, acc.c);
        add_entry(rr[k - 1].inner.d, 1, 1, acc.d);
    }
    return acc;
}

Mat2<HSeriesB> sandwich_matrix_series(int h_order) {
    Mat2<HSeriesB> rx = conjugated_r_series(h_order, 'x');
    Mat2<HSeriesB> ry_inv = mat_inverse(conjugated_r_series(h_order, 'y'));
    Mat2<HSeriesB> w = ry_inv * rx;

    // Conjugation by sigma3 e^{i pi sigma3/4} 2^{sigma3/4}: upper-right
    // times -i sqrt2, lower-left times i sqrt2 / 2, diagonal unchanged.
    w.b = w.b.scaled_ring(BPolyA(AlgNum(BigRational(0), BigRational(0), BigRational(0), BigRational(-1))));
    w.c = w.c.scaled_ring(BPolyA(AlgNum(BigRational(0), BigRational(0), BigRational(0), BigRational(1, 2))));

    EFactorSeries e = e_factor_series(h_order);
    HSeriesB sub_x = substitution_series(h_order, 'x');
    HSeriesB sub_y = substitution_series(h_order, 'y');
    HSeriesB ex_top = e.top.compose(sub_x, embed_q_bp);
    HSeriesB ex_bot = e.bot.compose(sub_x, embed_q_bp);
    HSeriesB ey_top_inv = e.bot.compose(sub_y, embed_q_bp);  // (r^{1/4})^{-1}
    HSeriesB ey_bot_inv = e.top.compose(sub_y, embed_q_bp);

    Mat2<HSeriesB> m{ey_top_inv * w.a * ex_top, ey_top_inv * w.b * ex_bot,
                     ey_bot_inv * w.c * ex_top, ey_bot_inv * w.d * ex_bot};

    if (!(m.a.coeff(0) == BPolyA(1)) || !(m.d.coeff(0) == BPolyA(1)) || !m.b.coeff(0).is_zero() ||
        !m.c.coeff(0).is_zero())
        throw MathInvariantError("sandwich_matrix_series: leading term is not the identity");
    for (int j = 1; j <= h_order; ++j) {
        Mat2<BPolyA> cj{m.a.coeff(j), m.b.coeff(j), m.c.coeff(j), m.d.coeff(j)};
        bool diag_ok = cj.a.subst_y_equals_x().is_zero() && cj.d.subst_y_equals_x().is_zero();
        bool off_ok = cj.b.subst_y_equals_x().is_zero() && cj.c.subst_y_equals_x().is_zero();
        if (!diag_ok || !off_ok)
            throw MathInvariantError("sandwich_matrix_series: not the identity at x=y, order " +
                                     std::to_string(j));
    }
    return m;
}

SandwichExpansion sandwich_series(int j_max) {
    if (j_max < 1) throw std::invalid_argument("sandwich_series: j_max < 1");
    Mat2<HSeriesB> m = sandwich_matrix_series(j_max);
    SandwichExpansion out;
    out.order = j_max;
    for (int j = 1; j <= j_max; ++j) {
        auto dv = [&](const HSeriesB& s) { return s.coeff(j).divide_exact_x_minus_y(); };
        out.e.push_back(Mat2<BPolyA>{dv(m.a), dv(m.b), dv(m.c), dv(m.d)});
    }
    return out;
}

KernelExpansion assemble_kernel_expansion(int m) {
    if (m < 1) throw std::invalid_argument("assemble_kernel_expansion: m < 1");
    const int w = m + 2;  // over-allocated working order

    Mat2<HSeriesB> sandwich = sandwich_matrix_series(w);
    const AlgNum zero_a(0), one_a(1), mi = -AlgNum::i();
    Mat2<HSeriesB> left = mat_constant_h(zero_a, mi, one_a, zero_a, w);
    Mat2<HSeriesB> right = mat_constant_h(one_a, zero_a, zero_a, mi, w);
    Mat2<HSeriesB> mhat = left * sandwich * right;

    auto pq = airy_derivative_polys(w + 1);
    auto p = p_coeff_table(w, w);

    // Reduction of Ai(arg), Ai'(arg) onto the basis {Ai, Ai'} at x (resp. y).
    auto build_c = [&](char which) {
        Mat2<HSeriesB> c = mat_identity_h(w);
        for (int j = 1; j <= w; ++j) {
            PolyQ c00, c01, c10, c11;
            for (int mm = 1; mm <= j; ++mm) {
                c00 += p[mm][j] * pq[mm].P;
                c01 += p[mm][j] * pq[mm].Q;
                c10 += p[mm][j] * pq[mm + 1].P;
                c11 += p[mm][j] * pq[mm + 1].Q;
            }
            auto lift = [&](const PolyQ& q) {
                BPolyQ b = which == 'x' ? BPolyQ::from_poly_x(q) : BPolyQ::from_poly_y(q);
                return b.map_coefficients<AlgNum>(embed_q);
            };
            c.a.set_coeff(j, lift(c00));
            c.b.set_coeff(j, lift(c01));
            c.c.set_coeff(j, lift(c10));
            c.d.set_coeff(j, lift(c11));
        }
        return c;
    };
    Mat2<HSeriesB> cx = build_c('x');
    Mat2<HSeriesB> cy_t = build_c('y').transpose();
    Mat2<HSeriesB> g = cy_t * mhat * cx;

    TruncSeries<BPolyQ> rho_q = prefactor_rho(w);
    HSeriesB rho = rho_q.map_coefficients<BPolyA>(
        [](const BPolyQ& b) { return b.map_coefficients<AlgNum>(embed_q); });
    Mat2<HSeriesB> pi = g.map([&](const HSeriesB& s) { return s * rho; });

    if (!pi.a.coeff(0).is_zero() || !pi.d.coeff(0).is_zero() ||
        !(pi.b.coeff(0) == BPolyA(AlgNum(-1))) || !(pi.c.coeff(0) == BPolyA(1)))
        throw MathInvariantError("assemble: order-0 term is not the Airy Wronskian combination");

    KernelExpansion out;
    out.order = m;
    for (int j = 1; j <= m; ++j) {
        auto dv = [&](const HSeriesB& s, const char* where) {
            return to_rational_poly(s.coeff(j).divide_exact_x_minus_y(),
                                    "j=" + std::to_string(j) + " " + where);
        };
        KernelExpansion::Term t;
        t.p00 = dv(pi.a, "p00");
        t.p10 = dv(pi.b, "p10");
        t.p01 = dv(pi.c, "p01");
        t.p11 = dv(pi.d, "p11");
        if (!t.p00.is_symmetric() || !t.p11.is_symmetric())
            throw MathInvariantError("assemble: p_{j,00}/p_{j,11} asymmetric at j=" +
                                     std::to_string(j));
        if (t.p01 != t.p10.swap_xy())
            throw MathInvariantError("assemble: p_{j,01} != p_{j,10}(y,x) at j=" +
                                     std::to_string(j));
        out.terms.push_back(std::move(t));
    }
    return out;
}

}  // namespace hardsoft
