#include "kummer/ramification.hpp"

#include <algorithm>

namespace kummer {

namespace {

bool is_power_of_two(unsigned v) { return v != 0 && (v & (v - 1)) == 0; }

Rational slope(Filtration const& f, std::size_t i) { return Rational(f.order(i), f.order(0)); }

Integer floor_of(Rational const& q) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Filtration wild_filtration(unsigned e, long b) {
    // inertia of order e = 2 with a single break b
    return Filtration(std::vector<unsigned>(static_cast<std::size_t>(b + 1), e));
}

}  // namespace

Filtration::Filtration(std::vector<unsigned> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw Error(ErrorCode::Domain, "empty filtration");
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (!is_power_of_two(orders_[i])) throw Error(ErrorCode::Domain, "filtration order is not a power of 2");
        if (i > 0 && orders_[i] > orders_[i - 1]) throw Error(ErrorCode::Domain, "filtration is not non-increasing");
    }
    if (orders_.back() != 1) orders_.push_back(1);
    auto const breaks = lower_breaks();
    std::vector<long> wild;
    std::copy_if(breaks.begin(), breaks.end(), std::back_inserter(wild), [](long b) { return b >= 1; });
    for (long b : wild)
        if ((b - wild.front()) % 2 != 0) throw Error(ErrorCode::Domain, "lower breaks are not congruent mod 2");
}

Filtration Filtration::from_lower_breaks(std::vector<long> const& breaks) {
    if (breaks.empty()) return trivial();
    if (breaks.front() < 0) throw Error(ErrorCode::Domain, "negative break");
    for (std::size_t k = 1; k < breaks.size(); ++k)
        if (breaks[k] < breaks[k - 1]) throw Error(ErrorCode::Domain, "breaks not sorted");
    std::vector<unsigned> orders;
    for (long i = 0; i <= breaks.back(); ++i) {
        auto const above = std::count_if(breaks.begin(), breaks.end(), [i](long b) { return b >= i; });
        orders.push_back(1u << above);
    }
    return Filtration(std::move(orders));
}

std::vector<long> Filtration::lower_breaks() const {
    std::vector<long> out;
    for (std::size_t i = 0; i + 1 < orders_.size(); ++i)
        for (unsigned q = orders_[i]; q > orders_[i + 1]; q /= 2) out.push_back(static_cast<long>(i));
    return out;
}

Rational herbrand_phi(Filtration const& f, Rational const& u) {
    if (u < 0) throw Error(ErrorCode::Domain, "herbrand_phi of a negative argument");
    Integer const whole = floor_of(u);
    Rational acc = 0;
    std::size_t i = 1;
    for (; Integer(static_cast<unsigned long>(i)) <= whole; ++i) acc += slope(f, i);
    acc += (u - Rational(whole)) * slope(f, i);
    acc.canonicalize();
    return acc;
}

Rational herbrand_psi(Filtration const& f, Rational const& v) {
    if (v < 0) throw Error(ErrorCode::Domain, "herbrand_psi of a negative argument");
    Rational acc = 0;
    for (std::size_t i = 1;; ++i) {
        Rational const s = slope(f, i);
        if (acc + s >= v) {
            Rational out = Rational(static_cast<unsigned long>(i - 1)) + (v - acc) / s;
            out.canonicalize();
            return out;
        }
        acc += s;
    }
}

std::vector<long> lower_from_upper(std::vector<long> const& upper, unsigned p, unsigned /*e_abs*/) {
    std::vector<long> lower;
    long scale = 1;
    for (std::size_t k = 0; k < upper.size(); ++k) {
        if (k == 0) {
            lower.push_back(upper[0]);
            continue;
        }
        if (upper[k] <= upper[k - 1]) throw Error(ErrorCode::Domain, "upper breaks not strictly increasing");
        scale *= static_cast<long>(p);
        lower.push_back(lower.back() + scale * (upper[k] - upper[k - 1]));
    }
    return lower;
}

std::vector<Rational> upper_from_lower(Filtration const& f) {
    std::vector<Rational> out;
    for (long b : f.lower_breaks())
        if (b >= 1) out.push_back(herbrand_phi(f, Rational(b)));
    return out;
}

std::vector<long> wyman_upper_breaks(long b1, unsigned e_abs, unsigned n, unsigned p) {
    if (p < 2) throw Error(ErrorCode::Domain, "p must be prime");
    if (b1 * static_cast<long>(p - 1) <= static_cast<long>(e_abs))
        throw Error(ErrorCode::Hypothesis, "b1 = " + std::to_string(b1) + " is not > e'/(p-1)");
    std::vector<long> out;
    for (unsigned i = 0; i < n; ++i) out.push_back(b1 + static_cast<long>(i) * static_cast<long>(e_abs));
    return out;
}

long different_exponent(Filtration const& f) {
    long total = 0;
    for (unsigned q : f.orders()) total += static_cast<long>(q) - 1;
    return total;
}

long vanishing_bound(long e_abs, unsigned p) {
    if (e_abs < 1 || p < 2) throw Error(ErrorCode::Domain, "vanishing_bound needs e >= 1 and prime p");
    return e_abs / static_cast<long>(p - 1);
}

bool is_tame(long e, unsigned p) {
    if (e < 1) throw Error(ErrorCode::Domain, "ramification index must be positive");
    return e % static_cast<long>(p) != 0;
}

GaussianInt disc_tower(GaussianInt const& disc_nm_norm, GaussianInt const& disc_mk) {
    return disc_nm_norm * disc_mk * disc_mk;
}

CaseRamification ramification_case(Radicand const& r) {
    CaseRow const row = classify_case(r);
    CaseRamification out{row, {}, 1, 4, Filtration::trivial(), {}, 0, 0, {}};
    unsigned constexpr e_abs = 2;  // v_2 of 1+i in Z_2[i]

    auto tower_e2 = [&](std::string label, long b) {
        out.label = std::move(label);
        out.e = 2;
        out.multiplicity = 2;
        out.filtration = wild_filtration(2, b);
        out.breaks = {2, 1, {b}, {Rational(b)}, e_abs};
    };
    auto total = [&](std::string label, std::vector<long> lower) {
        out.label = std::move(label);
        out.e = 4;
        out.multiplicity = 1;
        out.filtration = Filtration::from_lower_breaks(lower);
        out.breaks = {2, 2, lower, upper_from_lower(out.filtration), e_abs};
    };
    auto wyman = [&](std::string label, long b1) {
        auto const upper = wyman_upper_breaks(b1, e_abs, 2, 2);
        total(std::move(label), lower_from_upper(upper, 2, e_abs));
    };

    switch (row) {
        case CaseRow::OneMod8:
        case CaseRow::OnePlus4iMod8:
            out.label = "unramified";
            out.breaks = {2, 0, {}, {}, e_abs};
            break;
        case CaseRow::ThreeMod4: tower_e2("1(a)", 3); break;
        case CaseRow::FiveMod8:
            tower_e2("1(a)", 1);
            out.note = "break 1 inferred from the basis discriminant";
            break;
        case CaseRow::GEvenFhOneMod4:
        case CaseRow::GEvenFhMinusOneMod4: tower_e2("2(b)", 4); break;
        case CaseRow::FOrHEvenOrIMod2:
            if (is_even(r.f()) || is_even(r.h()))
                wyman("3(c)", 4);
            else
                wyman("3(a)", 3);
            break;
        case CaseRow::FhIMod2GEven: wyman("3(b)", 3); break;
        case CaseRow::OnePlus2iMod4: total("3(d)", {1, 3}); break;
        case CaseRow::ThreePlus2iMod4:
            total("3(d)", {1, 5});
            out.note = "b2 = 5 gives v(disc) = 10 and delta2 delta3 = (1+i)^3, so (delta2, delta3) = (1+i, 2)";
            break;
        case CaseRow::GEvenFConjHOne:
        case CaseRow::GEvenFConjHMinusOne: total("3(e)", {1, 7}); break;
    }
    out.different = different_exponent(out.filtration);
    out.disc_valuation = static_cast<long>(out.multiplicity) * out.different;
    return out;
}

long disc_valuation_case(Radicand const& r) { return ramification_case(r).disc_valuation; }

}  // namespace kummer
