#include <gmpxx.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "hardsoft/expansion.hpp"

namespace hardsoft {

namespace {

using nlohmann::json;

json poly_to_json(const BPolyQ& p) {
    json terms = json::array();
    for (const auto& [k, v] : p.terms()) {
        terms.push_back({{"dx", k.first}, {"dy", k.second}, {"num", v.num_str()}, {"den", v.den_str()}});
    }
    return terms;
}

BPolyQ poly_from_json(const json& j) {
    BPolyQ p;
    for (const auto& t : j) {
        BigRational c = BigRational::parse(t.at("num").get<std::string>() + "/" +
                                           t.at("den").get<std::string>());
        p += BPolyQ::monomial(t.at("dx").get<int>(), t.at("dy").get<int>(), c);
    }
    return p;
}

std::string monomial_str(int dx, int dy) {
    std::string s;
    if (dx == 1) s += "x";
    if (dx > 1) s += "x^" + std::to_string(dx);
    if (dy == 1) s += "y";
    if (dy > 1) s += "y^" + std::to_string(dy);
    return s;
}

// Integer bivariate polynomial as a LaTeX fragment, terms in canonical
// (graded, then dx-descending) order.
std::string integer_poly_str(const BivarPoly<BigRational>& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p.terms()) {
        mpz_class c = v.raw().get_num();
        std::string mono = monomial_str(k.first, k.second);
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (ac != 1 || mono.empty()) os << ac.get_str();
        os << mono;
        first = false;
    }
    return os.str();
}

// p scaled to integer coefficients by `den`, with numeric content factored
// out (the sign follows the leading canonical term).
std::string latex_poly(const BPolyQ& p, const mpz_class& den) {
    BPolyQ n = scale(p, BigRational(mpz_class(den)));
    mpz_class content = 0;
    bool neg_lead = false, first = true;
    for (const auto& [k, v] : n.terms()) {
        mpz_class c = v.raw().get_num();
        if (first) neg_lead = c < 0;
        first = false;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
        content = g;
    }
    if (n.terms().empty()) return "0";
    if (neg_lead) content = -content;
    if (n.terms().size() == 1 || content == 1) return integer_poly_str(n);
    BPolyQ inner = scale(n, BigRational(mpz_class(content)).reciprocal());
    std::string cs = content == -1 ? "-" : content.get_str();
    return cs + "(" + integer_poly_str(inner) + ")";
}

mpz_class common_denominator(const KernelExpansion::Term& t) {
    mpz_class den = 1;
    for (const BPolyQ* p : {&t.p00, &t.p01, &t.p10, &t.p11})
        for (const auto& [k, v] : p->terms())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.raw().get_den().get_mpz_t());
    return den;
}

}  // namespace

std::string emit_expansion(const KernelExpansion& k, EmitFormat format) {
    if (format == EmitFormat::json) {
        json doc;
        doc["order"] = k.order;
        json terms = json::array();
        for (int j = 1; j <= k.order; ++j) {
            const auto& t = k.at(j);
            const BPolyQ* ps[4] = {&t.p00, &t.p01, &t.p10, &t.p11};
            int idx = 0;
            for (int kappa = 0; kappa <= 1; ++kappa)
                for (int lambda = 0; lambda <= 1; ++lambda) {
                    terms.push_back({{"j", j},
                                     {"kappa", kappa},
                                     {"lambda", lambda},
                                     {"poly", poly_to_json(*ps[idx])}});
                    ++idx;
                }
        }
        doc["terms"] = terms;
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "\\[\n\\hat K_\\nu^{\\mathrm{Bes}}(x,y) \\sim K^{\\mathrm{Ai}}(x,y)";
    if (k.order > 0) os << " + \\sum_{j=1}^{" << k.order << "} K_j(x,y)\\, h_\\nu^j";
    os << "\n\\]\n";
    static const char* kBasis[4] = {"\\mathrm{Ai}(x)\\mathrm{Ai}(y)", "\\mathrm{Ai}(x)\\mathrm{Ai}'(y)",
                                    "\\mathrm{Ai}'(x)\\mathrm{Ai}(y)",
                                    "\\mathrm{Ai}'(x)\\mathrm{Ai}'(y)"};
    for (int j = 1; j <= k.order; ++j) {
        const auto& t = k.at(j);
        mpz_class den = common_denominator(t);
        os << "\\[\nK_" << j << "(x,y) = \\frac{1}{" << den.get_str() << "}\\Big(";
        const BPolyQ* ps[4] = {&t.p00, &t.p01, &t.p10, &t.p11};
        bool first = true;
        for (int b = 0; b < 4; ++b) {
            if (ps[b]->is_zero()) continue;
            std::string piece = latex_poly(*ps[b], den);
            if (!first && piece[0] != '-') os << " + ";
            if (!first && piece[0] == '-') {
                os << " - ";
                piece = piece.substr(1);
            }
            bool needs_parens = piece.find_first_of("+-", 1) != std::string::npos &&
                                piece.find('(') == std::string::npos;
            if (needs_parens)
                os << "(" << piece << ")";
            else
                os << piece;
            os << "\\," << kBasis[b];
            first = false;
        }
        os << "\\Big)\n\\]\n";
    }
    return os.str();
}

KernelExpansion parse_expansion_json(const std::string& text) {
    json doc = json::parse(text);
    KernelExpansion k;
    k.order = doc.at("order").get<int>();
    k.terms.resize(k.order);
    for (const auto& t : doc.at("terms")) {
        int j = t.at("j").get<int>();
        if (j < 1 || j > k.order) throw std::invalid_argument("expansion json: bad term index");
        BPolyQ p = poly_from_json(t.at("poly"));
        int kappa = t.at("kappa").get<int>(), lambda = t.at("lambda").get<int>();
        auto& term = k.terms[j - 1];
        if (kappa == 0 && lambda == 0)
            term.p00 = std::move(p);
        else if (kappa == 0 && lambda == 1)
            term.p01 = std::move(p);
        else if (kappa == 1 && lambda == 0)
            term.p10 = std::move(p);
        else
            term.p11 = std::move(p);
    }
    return k;
}

}  // namespace hardsoft
