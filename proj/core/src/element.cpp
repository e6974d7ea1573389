#include "kummer/element.hpp"

#include "kummer/basis.hpp"

namespace kummer {

QuarticElement QuarticElement::constant(GaussianInt m, GaussianRational v) {
    QuarticElement x(std::move(m));
    x.c_[0] = std::move(v);
    return x;
}

QuarticElement QuarticElement::alpha_power(GaussianInt m, unsigned k) {
    QuarticElement x(m);
    x.c_[k % 4] = GaussianRational(pow(m, k / 4));
    return x;
}

QuarticElement QuarticElement::from_numerator(GaussianInt m, std::span<GaussianInt const> numerator,
                                              GaussianInt const& den) {
    if (numerator.size() > 4) throw Error(ErrorCode::Domain, "numerator of degree > 3");
    QuarticElement x(std::move(m));
    for (std::size_t k = 0; k < numerator.size(); ++k) x.c_[k] = GaussianRational::quotient(numerator[k], den);
    return x;
}

QuarticElement& QuarticElement::operator+=(QuarticElement const& o) {
    if (!(m_ == o.m_)) throw Error(ErrorCode::Domain, "radicand mismatch");
    for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

QuarticElement& QuarticElement::operator-=(QuarticElement const& o) {
    if (!(m_ == o.m_)) throw Error(ErrorCode::Domain, "radicand mismatch");
    for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

QuarticElement& QuarticElement::operator*=(GaussianRational const& s) {
    for (auto& c : c_) c *= s;
    return *this;
}

std::string QuarticElement::to_string() const {
    std::string out;
    static char const* const kPowers[] = {"", "a", "a^2", "a^3"};
    for (std::size_t k = 0; k < 4; ++k) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string coeff = c_[k].to_string();
        if (k == 0)
            out += coeff;
        else if (coeff == "1")
            out += kPowers[k];
        else
            out += "(" + coeff + ")" + kPowers[k];
    }
    return out.empty() ? "0" : out;
}

QuarticElement mul(QuarticElement const& x, QuarticElement const& y) {
    if (!(x.m() == y.m())) throw Error(ErrorCode::Domain, "radicand mismatch");
    std::array<GaussianRational, 7> full;
    for (std::size_t i = 0; i < 4; ++i) {
        if (x.coeff(i).is_zero()) continue;
        for (std::size_t j = 0; j < 4; ++j) full[i + j] += x.coeff(i) * y.coeff(j);
    }
    GaussianRational const m(x.m());
    std::array<GaussianRational, 4> out{full[0], full[1], full[2], full[3]};
    for (std::size_t k = 4; k < 7; ++k) out[k - 4] += full[k] * m;
    return {x.m(), out};
}

std::vector<GaussianInt> NormalizedBasis::numerator(int degree) const {
    switch (degree) {
        case 0: return {1};
        case 1: return {a0, 1};
        case 2: return {b[0], b[1], 1};
        case 3: return {c[0], c[1], c[2], 1};
        default: throw Error(ErrorCode::Domain, "basis degree out of range");
    }
}

void NormalizedBasis::set_numerator(int degree, std::vector<GaussianInt> lower) {
    if (lower.size() != static_cast<std::size_t>(degree)) throw Error(ErrorCode::Domain, "numerator length");
    switch (degree) {
        case 1: a0 = lower[0]; break;
        case 2: b = {lower[0], lower[1]}; break;
        case 3: c = {lower[0], lower[1], lower[2]}; break;
        default: throw Error(ErrorCode::Domain, "basis degree out of range");
    }
}

QuarticElement NormalizedBasis::element(GaussianInt const& m, int degree) const {
    auto num = numerator(degree);
    return QuarticElement::from_numerator(m, num, degree == 0 ? GaussianInt(1) : denominator(degree));
}

std::array<QuarticElement, 4> NormalizedBasis::elements(GaussianInt const& m) const {
    return {element(m, 0), element(m, 1), element(m, 2), element(m, 3)};
}

NormalizedBasis NormalizedBasis::reduced() const {
    NormalizedBasis out;
    for (int k = 1; k <= 3; ++k) {
        out.d[k - 1] = canonical(denominator(k));
        auto num = numerator(k);
        num.pop_back();
        for (auto& x : num) x = residue(x, out.d[k - 1]);
        out.set_numerator(k, std::move(num));
    }
    return out;
}

bool same_denominators(NormalizedBasis const& x, NormalizedBasis const& y) {
    for (std::size_t k = 0; k < 3; ++k)
        if (!associates(x.d[k], y.d[k])) return false;
    return true;
}

}  // namespace kummer
