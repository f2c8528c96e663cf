/**
 * @file invariants.hh
 * @brief Width, height, and charge reports with built-in cross checks.
 */
#ifndef LOCALCHI_INVARIANTS_HH
#define LOCALCHI_INVARIANTS_HH

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "localchi/bundle.hh"
#include "localchi/errors.hh"
#include "localchi/linalg.hh"
#include "localchi/sections.hh"
#include "localchi/zupoly.hh"

namespace localchi {

inline int floor_div(int a, int b)
{
    int q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// contribution of the split bundle: the full gap count
inline long height_split(int k, int j)
{
    long total = 0;
    for (int r = 0; k * r <= j - 2; ++r)
        total += j - 1 - (long)k * r;
    return total;
}

// gap monomials u^r z^s: r >= 0 and k r - j + 1 <= s <= -1
inline std::vector<std::pair<int, int>> gap_slots(int k, int j)
{
    std::vector<std::pair<int, int>> out;
    for (int r = 0; k * r <= j - 2; ++r)
        for (int s = k * r - j + 1; s <= -1; ++s)
            out.emplace_back(r, s);
    return out;
}

// dimension of the first cohomology below the exceptional fibre: gap count
// minus the rank of the coboundary images cut to the gap window
template <class F>
long height_direct(const bundle<F>& b)
{
    auto slots = gap_slots(b.k, b.j);
    if (b.p.is_zero() || slots.empty())
        return (long)slots.size();
    auto at = [&](int r, int s) -> int {
        for (int i = 0; i < (int)slots.size(); ++i)
            if (slots[i].first == r && slots[i].second == s)
                return i;
        return -1;
    };
    int rho_max = slots.back().first;
    dense_matrix<F> rows;
    for (int rho = 0; rho <= rho_max; ++rho) {
        for (int sig = -b.j; sig <= b.k * rho; ++sig) {
            std::vector<F> row(slots.size(), F::zero());
            bool live = false;
            for (auto& t : b.p.terms()) {
                int idx = at(t.r + rho, t.s + sig);
                if (idx >= 0) {
                    row[idx] = row[idx] + t.c;
                    live = true;
                }
            }
            if (live)
                rows.push_back(std::move(row));
        }
    }
    return (long)slots.size() - rank(std::move(rows));
}

// a class is holomorphic on the surface when every term u^r z^s is regular
// on both charts: 0 <= s <= k r
template <class F>
bool holomorphic_on_surface(const zupoly<F>& p, int k)
{
    for (auto& t : p.terms())
        if (t.s < 0 || t.s > k * t.r)
            return false;
    return true;
}

// closed form: with m the least u-degree in the class and
// mu = min(m, floor((j-2)/k) + 1), the height is mu*(j-1) - k*mu*(mu-1)/2;
// exact for classes holomorphic on the surface, a lower bound otherwise
template <class F>
long height_closed_form(const bundle<F>& b)
{
    if (b.p.is_zero())
        throw validation_error("closed form requires a nonzero class");
    long m = b.p.min_u();
    long mu = std::min(m, (long)floor_div(b.j - 2, b.k) + 1);
    if (mu < 0)
        mu = 0;
    return mu * (b.j - 1) - (long)b.k * mu * (mu - 1) / 2;
}

inline long min_charge(int k)
{
    return k - 1;
}

// full report; heights are cross checked against the applicable formula
struct invariant_report {
    int k = 0, j = 0;
    raw_poly p;
    long width = 0, height = 0, chi = 0;
    bool instanton = false;
    int split_cls = 0;
    int r_used = 0;
    bool stabilized = false;
    bool ev_injective = false;
    std::string height_method; // which formula confirmed the direct value
};

template <class F>
invariant_report local_charge(int k, int j, const raw_poly& praw, int rmax = 0)
{
    bundle<F> b = make_bundle(k, j, make_zupoly<F>(praw));
    auto stab = stabilized_presentation(b, rmax);
    invariant_report rep;
    rep.k = k;
    rep.j = j;
    rep.p = praw;
    rep.width = stab.width;
    rep.height = height_direct(b);
    if (b.p.is_zero()) {
        rep.height_method = "split_formula";
        if (rep.height != height_split(k, j))
            throw crosscheck_error("height disagreement: direct "
                                   + std::to_string(rep.height) + " vs split formula "
                                   + std::to_string(height_split(k, j)));
    } else if (holomorphic_on_surface(b.p, k)) {
        rep.height_method = "closed_form";
        if (rep.height != height_closed_form(b))
            throw crosscheck_error("height disagreement: direct "
                                   + std::to_string(rep.height) + " vs closed form "
                                   + std::to_string(height_closed_form(b)));
    } else {
        rep.height_method = "direct";
        if (rep.height < height_closed_form(b))
            throw crosscheck_error("height below the closed-form bound: direct "
                                   + std::to_string(rep.height) + " vs "
                                   + std::to_string(height_closed_form(b)));
    }
    rep.chi = rep.width + rep.height;
    rep.instanton = is_instanton(b);
    rep.split_cls = split_class(b);
    rep.r_used = stab.r_used;
    rep.stabilized = stab.stabilized;
    rep.ev_injective = stab.ev_injective;
    return rep;
}

// ===== deterministic sampling of extension classes =====
// one generator stream; draws map the raw 64-bit output by remainder, so
// identical seeds give identical classes on every platform

struct class_sampler {
    std::mt19937_64 rng;

    explicit class_sampler(std::uint64_t seed) : rng(seed) {}

    // nonzero numerator in [-9, 9]
    long numer()
    {
        long m = (long)(rng() % 18);
        return m < 9 ? m - 9 : m - 8;
    }

    long denom() { return 1 + (long)(rng() % 4); }

    bool coin() { return (rng() % 2) == 1; }

    rational draw_coeff() { return rational::from_fraction(numer(), denom()); }
};

// index 0: the single lowest monomial with coefficient one
// index 1: the full support window with random coefficients
// index >= 2: a random sub-window with random coefficients
inline raw_poly sample_class(int k, int j, int index, class_sampler& sampler)
{
    auto support = class_support(k, j);
    if (support.empty())
        return raw_poly::zero();
    std::vector<zuterm<rational>> ts;
    if (index == 0) {
        auto [r, s] = support.front();
        ts.push_back({r, s, rational::one()});
    } else if (index == 1) {
        for (auto& [r, s] : support)
            ts.push_back({r, s, sampler.draw_coeff()});
    } else {
        std::vector<std::pair<int, int>> keep;
        for (auto& rs : support)
            if (sampler.coin())
                keep.push_back(rs);
        for (auto& [r, s] : keep)
            ts.push_back({r, s, sampler.draw_coeff()});
    }
    return raw_poly::from_terms(std::move(ts));
}

inline std::vector<raw_poly> sample_classes(int k, int j, int count, class_sampler& sampler)
{
    std::vector<raw_poly> out;
    for (int i = 0; i < count; ++i)
        out.push_back(sample_class(k, j, i, sampler));
    return out;
}

// ===== charge-gap scan =====

struct gap_row {
    int sample_index = 0;
    invariant_report rep;
};

struct gap_report {
    int k = 0, jmax = 0, samples = 0;
    std::uint64_t seed = 0;
    std::vector<gap_row> rows;
    long min_chi = 0;
    bool pass = false;
};

// every class with twist at least k must carry charge at least k - 1; the
// scan samples classes for each twist in [k, jmax] and checks the bound
template <class F>
gap_report gap_scan(int k, int jmax, int samples, std::uint64_t seed)
{
    if (jmax < k)
        throw validation_error("scan ceiling below the cone degree");
    gap_report rep;
    rep.k = k;
    rep.jmax = jmax;
    rep.samples = samples;
    rep.seed = seed;
    class_sampler sampler(seed);
    bool first = true;
    for (int j = k; j <= jmax; ++j) {
        for (int i = 0; i < samples; ++i) {
            raw_poly p = sample_class(k, j, i, sampler);
            gap_row row;
            row.sample_index = i;
            row.rep = local_charge<F>(k, j, p);
            if (first || row.rep.chi < rep.min_chi)
                rep.min_chi = row.rep.chi;
            first = false;
            rep.rows.push_back(std::move(row));
        }
    }
    rep.pass = !first && rep.min_chi >= min_charge(k);
    return rep;
}

} // namespace localchi

#endif
