#include "kummer/verifier.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace kummer {

namespace {

using Matrix4 = std::array<std::array<GaussianRational, 4>, 4>;

/* column j holds x * a^j */
Matrix4 multiplication_matrix(QuarticElement const& x) {
    Matrix4 a;
    for (unsigned j = 0; j < 4; ++j) {
        QuarticElement col = mul(x, QuarticElement::alpha_power(x.m(), j));
        for (std::size_t r = 0; r < 4; ++r) a[r][j] = col.coeff(r);
    }
    return a;
}

Matrix4 matmul(Matrix4 const& x, Matrix4 const& y) {
    Matrix4 z;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t k = 0; k < 4; ++k) {
            if (x[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < 4; ++j)
                if (!y[k][j].is_zero()) z[i][j] += x[i][k] * y[k][j];
        }
    return z;
}

bool rational_integral_at(GaussianRational const& q, GaussianInt const& pi) {
    if (q.is_integral()) return true;
    GaussianInt den(q.den());
    if (!divides(pi, den)) return true;
    unsigned v = valuation(den, pi);
    return divides(pow(pi, v), q.num());
}

bool vector_less(std::vector<GaussianInt> const& x, std::vector<GaussianInt> const& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), residue_order_less);
}

/* Arithmetic in the residue field Z[i]/(pi). */
struct ResidueField {
    GaussianInt pi;

    GaussianInt reduce(GaussianInt const& z) const { return residue(z, pi); }
    GaussianInt inverse(GaussianInt const& z) const {
        Bezout const bz = xgcd(z, pi);
        if (!bz.g.is_unit()) throw Error(ErrorCode::Domain, "not invertible mod " + pi.to_string());
        return reduce(bz.s * bz.g.conj());
    }
    /* image of a pi-integral element of Q(i); nullopt if it is not pi-integral */
    std::optional<GaussianInt> image(GaussianRational const& q) const {
        GaussianInt num = q.num();
        GaussianInt den(q.den());
        while (divides(pi, den)) {
            if (!divides(pi, num)) return std::nullopt;
            num = divexact(num, pi);
            den = divexact(den, pi);
        }
        return reduce(num * inverse(den));
    }
};

GaussianRational trace(QuarticElement const& x) { return x.coeff(0) * GaussianRational(4); }

/*
 * Solutions u in (Z[i]/pi)^n of rows[r] . u + rhs[r] = 0, as a particular
 * solution plus a basis of the kernel. nullopt when inconsistent.
 */
struct AffineSpace {
    std::vector<GaussianInt> point;
    std::vector<std::vector<GaussianInt>> directions;
};

std::optional<AffineSpace> solve_mod(ResidueField const& F, std::vector<std::vector<GaussianInt>> rows,
                                     std::vector<GaussianInt> rhs, std::size_t n) {
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        std::swap(rhs[piv], rhs[rank]);
        GaussianInt const inv = F.inverse(rows[rank][col]);
        for (auto& v : rows[rank]) v = F.reduce(v * inv);
        rhs[rank] = F.reduce(rhs[rank] * inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            GaussianInt const f = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = F.reduce(rows[r][c] - f * rows[rank][c]);
            rhs[r] = F.reduce(rhs[r] - f * rhs[rank]);
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
        if (!rhs[r].is_zero()) return std::nullopt;

    AffineSpace out;
    out.point.assign(n, GaussianInt(0));
    for (std::size_t r = 0; r < rank; ++r) out.point[pivot_col[r]] = F.reduce(-rhs[r]);
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
        std::vector<GaussianInt> dir(n, GaussianInt(0));
        dir[free] = 1;
        for (std::size_t r = 0; r < rank; ++r) dir[pivot_col[r]] = F.reduce(-rows[r][free]);
        out.directions.push_back(std::move(dir));
    }
    return out;
}

}  // namespace

bool CharPoly::is_integral() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](GaussianRational const& c) { return c.is_integral(); });
}

CharPoly char_poly_faddeev(QuarticElement const& x) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k
    Matrix4 const a = multiplication_matrix(x);
    CharPoly p;
    p.coeffs[4] = GaussianRational(1);
    Matrix4 mk;  // M_0 = 0
    for (int k = 1; k <= 4; ++k) {
        Matrix4 next = matmul(a, mk);
        for (std::size_t i = 0; i < 4; ++i) next[i][i] += p.coeffs[5 - k];
        mk = std::move(next);
        Matrix4 am = matmul(a, mk);
        GaussianRational tr;
        for (std::size_t i = 0; i < 4; ++i) tr += am[i][i];
        p.coeffs[4 - k] = -tr / GaussianRational(k);
    }
    return p;
}

CharPoly char_poly(QuarticElement const& x) {
    // (X^2 - t X + n)(X^2 - t' X + n') with t, n the trace and norm down to M = K(a^2)
    // and ' the conjugation a^2 -> -a^2 of M/K.
    TraceNorm const tn = rel_trace_norm(x);
    GaussianRational const m(x.m());
    GaussianRational const two(2);
    auto const& [t0, t1] = tn.tr_nm;
    auto const& [n0, n1] = tn.nm_nm;
    CharPoly p;
    p.coeffs[4] = GaussianRational(1);
    p.coeffs[3] = -(two * t0);
    p.coeffs[2] = t0 * t0 - t1 * t1 * m + two * n0;
    p.coeffs[1] = -(two * (t0 * n0 - t1 * n1 * m));
    p.coeffs[0] = tn.nm_nk;
    return p;
}

bool is_algebraic_integer(QuarticElement const& x) { return char_poly(x).is_integral(); }

bool is_integral_at(QuarticElement const& x, GaussianInt const& pi) {
    auto p = char_poly(x);
    return std::all_of(p.coeffs.begin(), p.coeffs.end(),
                       [&](GaussianRational const& c) { return rational_integral_at(c, pi); });
}

TraceNorm rel_trace_norm(QuarticElement const& x) {
    // x = (x0 + x2 g) + (x1 + x3 g) a with g = a^2, g^2 = m; conjugate over M sends a -> -a
    GaussianRational const m(x.m());
    auto const& x0 = x.coeff(0);
    auto const& x1 = x.coeff(1);
    auto const& x2 = x.coeff(2);
    auto const& x3 = x.coeff(3);
    TraceNorm out;
    out.tr_nm = {x0 * GaussianRational(2), x2 * GaussianRational(2)};
    // (x0 + x2 g)^2 - g (x1 + x3 g)^2
    out.nm_nm = {x0 * x0 + x2 * x2 * m - GaussianRational(2) * x1 * x3 * m,
                 GaussianRational(2) * x0 * x2 - x1 * x1 - x3 * x3 * m};
    auto trace_mk = [](std::array<GaussianRational, 2> const& u) { return u[0] * GaussianRational(2); };
    auto norm_mk = [&](std::array<GaussianRational, 2> const& u) { return u[0] * u[0] - u[1] * u[1] * m; };
    out.tr_nk = trace_mk(out.tr_nm);
    out.nm_nk = norm_mk(out.nm_nm);
    return out;
}

GaussianRational trace_form_disc(std::span<QuarticElement const> family) {
    std::size_t const n = family.size();
    std::vector<std::vector<GaussianRational>> t(n, std::vector<GaussianRational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            // Tr_{N/K}(c0 + c1 a + c2 a^2 + c3 a^3) = 4 c0
            t[i][j] = mul(family[i], family[j]).coeff(0) * GaussianRational(4);
            t[j][i] = t[i][j];
        }
    GaussianRational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && t[piv][col].is_zero()) ++piv;
        if (piv == n) return GaussianRational(0);
        if (piv != col) {
            std::swap(t[piv], t[col]);
            det = -det;
        }
        det *= t[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (t[r][col].is_zero()) continue;
            GaussianRational f = t[r][col] / t[col][col];
            for (std::size_t c = col; c < n; ++c) t[r][c] -= f * t[col][c];
        }
    }
    return det;
}

BudgetExceeded::BudgetExceeded(GaussianInt partial, std::uint64_t tests)
    : Error(ErrorCode::Budget, "search budget exhausted after " + std::to_string(tests) +
                                   " integrality tests; partial bound " + canonical(partial).to_string()),
      partial_(canonical(partial)) {}

GaussianInt oracle_search_bound(Radicand const& r) {
    // disc(a) = (1+i)^16 f^3 g^6 h^9
    std::vector<PrimePower> v{{GaussianInt::one_plus_i(), 16}};
    auto add = [&](GaussianInt const& z, unsigned weight) {
        if (z.is_unit()) return;
        for (auto const& pp : factor(z).factors) {
            if (pp.prime == GaussianInt::one_plus_i())
                v[0].exponent += pp.exponent * weight;
            else
                v.push_back({pp.prime, pp.exponent * weight});
        }
    };
    add(r.f(), 3);
    add(r.g(), 6);
    add(r.h(), 9);
    GaussianInt bound(1);
    for (auto const& pp : v) bound *= pow(pp.prime, pp.exponent / 2);
    return canonical(bound);
}

DenominatorSearch max_denominator(Radicand const& r, int degree, GaussianInt const& bound,
                                  SearchOptions const& options, GaussianInt const& lower,
                                  std::span<QuarticElement const> known) {
    if (degree < 1 || degree > 3) throw Error(ErrorCode::Domain, "degree must be 1, 2 or 3");
    if (bound.is_zero()) throw Error(ErrorCode::Domain, "zero search bound");
    if (!divides(lower, bound))
        throw Error(ErrorCode::Domain, "lower bound " + lower.to_string() + " does not divide " + bound.to_string());

    auto const k_deg = static_cast<std::size_t>(degree);
    DenominatorSearch out;
    out.d = 1;
    out.coeffs.assign(k_deg, GaussianInt(0));
    if (bound.is_unit()) return out;

    std::vector<QuarticElement> power;
    for (unsigned j = 0; j < 4; ++j) power.push_back(QuarticElement::alpha_power(r.m(), j));
    std::vector<QuarticElement> probes = power;
    probes.insert(probes.end(), known.begin(), known.end());

    for (auto const& [pi, cap] : factor(bound).factors) {
        ResidueField const F{pi};
        unsigned const floor_level = valuation(lower, pi);
        auto const residues = residue_system(pi);
        std::vector<std::vector<GaussianInt>> level{std::vector<GaussianInt>(k_deg, GaussianInt(0))};
        GaussianInt pk(1);
        unsigned k = 0;
        while (k < cap) {
            GaussianInt const pk1 = pk * pi;
            std::vector<std::vector<GaussianInt>> next;
            std::vector<std::size_t> digit(k_deg, 0);
            for (auto const& w : level) {
                // lifts w + pi^k t; Tr(y s) must be pi-integral for each probe s
                std::vector<GaussianInt> num = w;
                num.emplace_back(1);
                QuarticElement const base = QuarticElement::from_numerator(r.m(), num, pk);
                std::vector<std::vector<GaussianInt>> rows;
                std::vector<GaussianInt> rhs;
                for (auto const& s : probes) {
                    auto const c = F.image(trace(mul(base, s)));
                    if (!c) continue;
                    std::vector<GaussianInt> row;
                    for (std::size_t j = 0; j < k_deg; ++j) row.push_back(*F.image(trace(mul(power[j], s))));
                    rows.push_back(std::move(row));
                    rhs.push_back(*c);
                }
                auto const space = solve_mod(F, rows, rhs, k_deg);
                if (!space) continue;
                std::size_t const dim = space->directions.size();
                std::fill(digit.begin(), digit.end(), 0);
                for (;;) {
                    std::vector<GaussianInt> cand(k_deg);
                    for (std::size_t j = 0; j < k_deg; ++j) {
                        GaussianInt t = space->point[j];
                        for (std::size_t q = 0; q < dim; ++q) t += residues[digit[q]] * space->directions[q][j];
                        cand[j] = residue(w[j] + pk * F.reduce(t), pk1);
                    }
                    if (++out.tests > options.budget) throw BudgetExceeded(out.d * pk, out.tests);
                    std::vector<GaussianInt> cnum = cand;
                    cnum.emplace_back(1);
                    if (is_integral_at(QuarticElement::from_numerator(r.m(), cnum, pk1), pi))
                        next.push_back(std::move(cand));
                    std::size_t q = 0;
                    while (q < dim && ++digit[q] == residues.size()) digit[q++] = 0;
                    if (q == dim) break;
                }
            }
            if (next.empty()) break;
            level = std::move(next);
            pk = pk1;
            ++k;
        }
        if (k < floor_level)
            throw Error(ErrorCode::Internal, "denominator search at " + pi.to_string() + " stopped at level " +
                                                 std::to_string(k) + " below the required " +
                                                 std::to_string(floor_level));
        if (k == 0) continue;

        auto const& witness = *std::min_element(level.begin(), level.end(), vector_less);
        // CRT: x = C (mod D), x = w (mod pk)
        Bezout bz = xgcd(out.d, pk);
        for (std::size_t j = 0; j < k_deg; ++j) {
            GaussianInt delta = residue((witness[j] - out.coeffs[j]) * bz.s, pk);
            out.coeffs[j] = out.coeffs[j] + out.d * delta;
        }
        out.d *= pk;
    }
    out.d = canonical(out.d);
    for (auto& c : out.coeffs) c = residue(c, out.d);

    std::vector<GaussianInt> num = out.coeffs;
    num.emplace_back(1);
    if (!is_algebraic_integer(QuarticElement::from_numerator(r.m(), num, out.d)))
        throw Error(ErrorCode::Internal, "glued denominator witness is not integral");
    return out;
}

NormalizedBasis normalized_basis_oracle(Radicand const& r, SearchOptions const& options) {
    GaussianInt const bound = oracle_search_bound(r);
    NormalizedBasis basis;
    std::vector<QuarticElement> found;
    // products of everything found so far with a^j and with each other are integral too
    auto probes = [&] {
        std::vector<QuarticElement> out;
        for (std::size_t i = 0; i < found.size(); ++i) {
            for (unsigned j = 1; j < 4; ++j) out.push_back(mul(found[i], QuarticElement::alpha_power(r.m(), j)));
            for (std::size_t k = i; k < found.size(); ++k) out.push_back(mul(found[i], found[k]));
        }
        out.insert(out.end(), found.begin(), found.end());
        return out;
    };
    auto d1 = max_denominator(r, 1, bound, options);
    basis.d[0] = d1.d;
    basis.a0 = d1.coeffs[0];
    found.push_back(basis.element(r.m(), 1));
    auto d2 = max_denominator(r, 2, bound, options, d1.d * d1.d, probes());
    basis.d[1] = d2.d;
    basis.b = {d2.coeffs[0], d2.coeffs[1]};
    found.push_back(basis.element(r.m(), 2));
    auto d3 = max_denominator(r, 3, bound, options, d1.d * d2.d, probes());
    basis.d[2] = d3.d;
    basis.c = {d3.coeffs[0], d3.coeffs[1], d3.coeffs[2]};
    return basis;
}

bool basis_is_integral(Radicand const& r, NormalizedBasis const& basis) {
    for (int k = 1; k <= 3; ++k)
        if (!is_algebraic_integer(basis.element(r.m(), k))) return false;
    return true;
}

bool denominator_is_maximal_at(Radicand const& r, NormalizedBasis const& basis, int degree, GaussianInt const& pi) {
    ResidueField const F{pi};
    auto const k_deg = static_cast<std::size_t>(degree);
    std::vector<QuarticElement> lower;
    for (int j = 0; j < degree; ++j) lower.push_back(basis.element(r.m(), j));
    QuarticElement const top = basis.element(r.m(), degree);

    // y = (top + sum u_j lower_j) / pi. Integrality of y forces Tr(y s) to be
    // pi-integral for every integral s, which is linear in u mod pi.
    std::vector<QuarticElement> probes;
    for (unsigned j = 0; j < 4; ++j) probes.push_back(QuarticElement::alpha_power(r.m(), j));
    for (int j = 1; j <= 3; ++j) {
        QuarticElement e = basis.element(r.m(), j);
        if (is_algebraic_integer(e)) probes.push_back(std::move(e));
    }
    std::vector<std::vector<GaussianInt>> rows;
    std::vector<GaussianInt> rhs;
    for (auto const& s : probes) {
        auto const c = F.image(trace(mul(top, s)));
        std::vector<GaussianInt> row;
        bool ok = c.has_value();
        for (std::size_t j = 0; j < k_deg && ok; ++j) {
            auto const v = F.image(trace(mul(lower[j], s)));
            ok = v.has_value();
            if (ok) row.push_back(*v);
        }
        if (!ok) continue;  // top or lower not integral at pi; leave it to the enumeration
        rows.push_back(std::move(row));
        rhs.push_back(*c);
    }
    auto const space = solve_mod(F, rows, rhs, k_deg);
    if (!space) return true;

    auto const residues = residue_system(pi);
    GaussianRational const inv_pi = GaussianRational::quotient(1, pi);
    std::size_t const dim = space->directions.size();
    std::vector<std::size_t> digit(dim, 0);
    for (;;) {
        std::vector<GaussianInt> u = space->point;
        for (std::size_t t = 0; t < dim; ++t)
            for (std::size_t j = 0; j < k_deg; ++j) u[j] += residues[digit[t]] * space->directions[t][j];
        QuarticElement y = top;
        for (std::size_t j = 0; j < k_deg; ++j) {
            GaussianInt const uj = F.reduce(u[j]);
            if (!uj.is_zero()) y += lower[j] * GaussianRational(uj);
        }
        y *= inv_pi;
        if (is_integral_at(y, pi)) return false;
        std::size_t t = 0;
        while (t < dim && ++digit[t] == residues.size()) digit[t++] = 0;
        if (t == dim) break;
    }
    return true;
}

namespace {

std::vector<GaussianInt> primes_of_2fgh(Radicand const& r) {
    std::vector<GaussianInt> primes{GaussianInt::one_plus_i()};
    for (auto const* z : {&r.f(), &r.g(), &r.h()}) {
        if (z->is_unit()) continue;
        for (auto const& pp : factor(*z).factors)
            if (!(pp.prime == GaussianInt::one_plus_i())) primes.push_back(pp.prime);
    }
    return primes;
}

}  // namespace

bool basis_is_maximal(Radicand const& r, NormalizedBasis const& basis) {
    auto const primes = primes_of_2fgh(r);
    for (int k = 1; k <= 3; ++k)
        for (auto const& pi : primes)
            if (!denominator_is_maximal_at(r, basis, k, pi)) return false;
    return true;
}

TheoremOneChecks check_theorem_one(Radicand const& r, NormalizedBasis const& basis) {
    TheoremOneChecks out;
    auto const& d = basis.d;
    out.integral = basis_is_integral(r, basis);

    out.replaceable = true;
    for (int k = 1; k <= 3 && out.replaceable; ++k) {
        auto num = basis.numerator(k);
        for (std::size_t j = 0; j + 1 < num.size(); ++j) {
            auto shifted = num;
            shifted[j] += basis.denominator(k);
            if (!is_algebraic_integer(QuarticElement::from_numerator(r.m(), shifted, basis.denominator(k)))) {
                out.replaceable = false;
                break;
            }
        }
    }

    out.maximal = out.integral && basis_is_maximal(r, basis);
    out.divisibility = divides(d[0] * d[0], d[1]) && divides(d[0] * d[1], d[2]);

    std::array<QuarticElement, 4> power{QuarticElement::alpha_power(r.m(), 0), QuarticElement::alpha_power(r.m(), 1),
                                        QuarticElement::alpha_power(r.m(), 2), QuarticElement::alpha_power(r.m(), 3)};
    GaussianRational const disc_power = trace_form_disc(power);
    auto const elems = basis.elements(r.m());
    GaussianRational const disc_basis = trace_form_disc(elems);
    GaussianInt const dprod = d[0] * d[1] * d[2];
    out.discriminant = disc_basis * GaussianRational(dprod * dprod) == disc_power;

    out.d1_power = disc_power.is_integral() && divides(pow(d[0], 12), disc_power.num());

    out.lemma2 = disc_power.is_integral();
    for (auto const& x : elems) {
        if (!out.lemma2) break;
        for (std::size_t j = 0; j < 4; ++j) {
            GaussianRational mj = x.coeff(j) * disc_power;
            if (!mj.is_integral() || !divides(disc_power.num(), mj.num() * mj.num())) {
                out.lemma2 = false;
                break;
            }
        }
    }
    return out;
}

}  // namespace kummer
