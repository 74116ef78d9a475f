#pragma once

#include <string>
#include <vector>

#include "hardsoft/algnum.hpp"
#include "hardsoft/poly.hpp"
#include "hardsoft/rational.hpp"
#include "hardsoft/series.hpp"

namespace hardsoft {

using PolyQ = Poly1<BigRational>;
using BPolyQ = BivarPoly<BigRational>;
using BPolyA = BivarPoly<AlgNum>;
using SeriesQ = TruncSeries<BigRational>;    // series in s = z - 1
using SeriesA = TruncSeries<AlgNum>;         // Laurent series in s = z - 1
using HSeriesP = TruncSeries<PolyQ>;         // series in h, coefficients in x
using HSeriesB = TruncSeries<BPolyA>;        // series in h, bivariate coefficients

inline const char* kVarS = "s";  // s = z - 1
inline const char* kVarH = "h";  // h = h_nu

// Pair (P_m, Q_m) with Ai^{(m)} = P_m Ai + Q_m Ai'.
struct AiryPolyPair {
    int m;
    PolyQ P, Q;
};

// Standard large-argument Airy expansion coefficients u_k, v_k.
struct AsympCoeffs {
    int k;
    BigRational u, v;
};

// Derived table {p_{j,kappa lambda}} of the kernel expansion: all
// coefficients purely rational, p_{j,00} and p_{j,11} symmetric,
// p_{j,01}(x,y) = p_{j,10}(y,x). Enforced on construction.
struct KernelExpansion {
    struct Term {
        BPolyQ p00, p01, p10, p11;
        bool operator==(const Term&) const = default;
    };
    int order = 0;
    std::vector<Term> terms;  // terms[j-1] holds order j
    bool operator==(const KernelExpansion&) const = default;

    const Term& at(int j) const { return terms.at(j - 1); }
};

struct SandwichExpansion {
    int order = 0;
    std::vector<Mat2<BPolyA>> e;  // e[j-1] is e_j(x,y)
};

// --- Airy-side recurrences -------------------------------------------------

// (P_m, Q_m) for 0 <= m <= m_max via P_{m+1} = P_m' + x Q_m, Q_{m+1} = Q_m' + P_m.
std::vector<AiryPolyPair> airy_derivative_polys(int m_max);

// u_k, v_k for 0 <= k <= k_max.
std::vector<AsympCoeffs> airy_asymp_coeffs(int k_max);

// Exact check of sum_{j=0}^{N} [P_j Q_{N+1-j} - Q_j P_{N+1-j}]/(j!(N-j)!) = 0.
bool lemma_identity_check(int N);

// --- Conformal map and its scaled composition ------------------------------

// f(z) = sign * 2^{two_exponent} (z-1) r(z) with r a rational Taylor series
// in s = z-1, r(0) = 1. The power of two stays symbolic.
struct FSeries {
    SeriesQ r;
    BigRational two_exponent;  // -2/3
    BigRational sign;          // -1
};
FSeries f_series(int order);

// nu^{2/3} f((1-hx)^2) as a series in h with polynomial coefficients in x.
// Constant term x; coefficient of h^j is p_{1,j}(x). The 2^{+-1/3} factors
// must cancel to an integer power of two, otherwise MathInvariantError.
HSeriesP scaled_f_series(int j_max);

// p_{m,j}(x): (scaled_f - x)^m / m! = sum_{j>=m} p_{m,j} h^j. Row for fixed m.
std::vector<PolyQ> p_coeffs(int m, int j_max);
// Full table p[m][j] for 0 <= m <= m_max, 0 <= j <= j_max (p[0][0] = 1).
std::vector<std::vector<PolyQ>> p_coeff_table(int m_max, int j_max);

// --- Bilinear Airy coefficients a_{N,kl} ------------------------------------

struct ACoeffsTriple {
    BPolyQ a00, a01, a11;
};
// Direct evaluation of the double/triple sums for a_{N,00}, a_{N,01}, a_{N,11}.
ACoeffsTriple a_coeffs(int N);

// --- Algebraic prefactor ----------------------------------------------------

// sqrt((1-hx)(1-hy)) / (1 - h(x+y)/2) = 1 - (x-y)^2 sum_{j>=2} r_j(x,y) h^j;
// returns r_j indexed by j (entries 0 and 1 are zero), deg r_j = j-2.
std::vector<BPolyQ> prefactor_series(int j_max);

// --- Local parametrix ingredients -------------------------------------------

// Diagonal interior factor of E(z) about z=1: diag(r^{1/4}, r^{-1/4});
// the constant prefactor (2 h)^{-sigma3/4} e^{-i pi sigma3/4} sigma3 is
// handled symbolically by the sandwich assembly.
struct EFactorSeries {
    SeriesQ top;  // r(z)^{1/4}
    SeriesQ bot;  // r(z)^{-1/4}
};
EFactorSeries e_factor_series(int order);

// J_k(z) as a Laurent matrix series about z=1 over Q(i, sqrt 2). The branch
// of the half-integer powers is pinned so that k=1 reproduces the boundary
// data with entries 5*sqrt2/24, sqrt2/8, -7*sqrt2/24 and k=2 is diagonal.
Mat2<SeriesA> j_matrix_series(int k, int order);

// Additive splitting of the R-recursion: Q_k = sum_l R_{k-l}^out J_l,
// R_k^out = principal part, R_k^in = R_k^out - Q_k (analytic, enforced).
struct ROuterInner {
    Mat2<SeriesA> outer;  // valid off the disc; finite pole part
    Mat2<SeriesA> inner;  // Taylor about z=1
};
std::vector<ROuterInner> r_outer_inner(int k_max, int order);

// h^{sigma3/4} R((1-h t)^2) h^{-sigma3/4} as an integer-power h-series,
// t = x or y. Identity plus terms from R_k^in; parity makes every exponent
// integral.
Mat2<HSeriesB> conjugated_r_series(int h_order, char which);

// E((1-h y)^2)^{-1} R((1-h y)^2)^{-1} R((1-h x)^2) E((1-h x)^2) as an
// h-series; equals I at x=y (enforced).
Mat2<HSeriesB> sandwich_matrix_series(int h_order);

// Extracted e_j(x,y) with I + (x-y) sum e_j h^j.
SandwichExpansion sandwich_series(int j_max);

// --- Final assembly ----------------------------------------------------------

// Multiplies prefactor, Airy-reduction series and sandwich, checks the h^0
// term is the Wronskian combination, divides each order-j coefficient by
// (x-y) exactly and verifies rationality and the symmetry relations.
KernelExpansion assemble_kernel_expansion(int m);

// --- Emission ----------------------------------------------------------------

enum class EmitFormat { json, latex };
std::string emit_expansion(const KernelExpansion& k, EmitFormat format);
KernelExpansion parse_expansion_json(const std::string& text);

}  // namespace hardsoft
