/**
 * @file bundle.hh
 * @brief Rank-2 bundles on the resolved cone: classes, transitions, transforms.
 */
#ifndef LOCALCHI_BUNDLE_HH
#define LOCALCHI_BUNDLE_HH

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "localchi/errors.hh"
#include "localchi/linalg.hh"
#include "localchi/zupoly.hh"

namespace localchi {

// extension of the line bundle of twist j by its inverse over the total
// space of degree -k, cut out by an extension class p in the chart variables
template <class F>
struct bundle {
    int k = 1;
    int j = 0;
    zupoly<F> p;
};

// monomials z^s u^r carrying extension data: 1 <= r <= (2j-2)/k and
// k*r - j + 1 <= s <= j - 1
inline std::vector<std::pair<int, int>> class_support(int k, int j)
{
    std::vector<std::pair<int, int>> out;
    if (j < 1)
        return out;
    int rmax = (2 * j - 2) / k;
    for (int r = 1; r <= rmax; ++r)
        for (int s = k * r - j + 1; s <= j - 1; ++s)
            out.emplace_back(r, s);
    return out;
}

// number of free coefficients in a class for the pair (k, j)
inline long ext_param_count(int k, int j)
{
    if (k < 1)
        throw validation_error("cone degree must be at least 1");
    if (j < 0)
        throw validation_error("twist must be nonnegative");
    long total = 0;
    int rmax = j >= 1 ? (2 * j - 2) / k : 0;
    for (int r = 1; r <= rmax; ++r)
        total += 2 * j - 1 - (long)k * r;
    return total;
}

template <class F>
bundle<F> make_bundle(int k, int j, const zupoly<F>& p)
{
    if (k < 1)
        throw validation_error("cone degree must be at least 1, got " + std::to_string(k));
    if (j < 0)
        throw validation_error("twist must be nonnegative, got " + std::to_string(j));
    int rmax = j >= 1 ? (2 * j - 2) / k : 0;
    for (auto& t : p.terms()) {
        bool ok = t.r >= 1 && t.r <= rmax && t.s >= k * t.r - j + 1 && t.s <= j - 1;
        if (!ok)
            throw validation_error("class monomial at (r=" + std::to_string(t.r)
                                   + ", s=" + std::to_string(t.s)
                                   + ") lies outside the support window for k="
                                   + std::to_string(k) + ", j=" + std::to_string(j));
    }
    return bundle<F>{k, j, p};
}

// ===== transition matrices =====
// glueing convention: a section is a pair (v_U, v_V) with v_V = T * v_U

template <class F>
struct mat2 {
    zupoly<F> a, b, c, d; // [[a, b], [c, d]]

    mat2 operator*(const mat2& o) const
    {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    zupoly<F> det() const { return a * d - b * c; }

    mat2 scale(const zupoly<F>& f) const { return {a * f, b * f, c * f, d * f}; }
};

template <class F>
mat2<F> transition_matrix(const bundle<F>& b)
{
    return {zupoly<F>::monomial(0, b.j, F::one()), b.p, zupoly<F>::zero(),
            zupoly<F>::monomial(0, -b.j, F::one())};
}

namespace detail {

// does z^d * t0 * v have only nonpositive z-exponents for some nonzero
// polynomial vector v of degree at most 2*amax + d + 2?
template <class F>
bool has_twisted_section(const mat2<F>& t0, int d, int amax)
{
    int dcap = 2 * amax + d + 2;
    const zupoly<F>* col0[2] = {&t0.a, &t0.c};
    const zupoly<F>* col1[2] = {&t0.b, &t0.d};
    int emax = d + amax + dcap;
    // rows: (component, exponent e) for 1 <= e <= emax; cols: (component, deg)
    int ncols = 2 * (dcap + 1);
    dense_matrix<F> m(2 * emax, std::vector<F>(ncols, F::zero()));
    for (int comp = 0; comp < 2; ++comp) {
        for (int t = 0; t <= dcap; ++t) {
            int col = comp * (dcap + 1) + t;
            const zupoly<F>** src = comp == 0 ? col0 : col1;
            for (int out = 0; out < 2; ++out) {
                for (auto& tm : src[out]->terms()) {
                    int e = tm.s + d + t;
                    if (e >= 1 && e <= emax)
                        m[out * emax + (e - 1)][col] = m[out * emax + (e - 1)][col] + tm.c;
                }
            }
        }
    }
    return rank(std::move(m)) < ncols;
}

} // namespace detail

// largest d such that the restriction to the base curve, twisted down by d,
// still has a section; input is a transition matrix over the punctured chart
template <class F>
int splitting_type(const mat2<F>& t)
{
    const zupoly<F>* entries[4] = {&t.a, &t.b, &t.c, &t.d};
    for (auto* e : entries)
        for (auto& term : e->terms())
            if (term.r < 0)
                throw validation_error("transition has a pole along the base curve");
    mat2<F> t0{t.a.u_part(0), t.b.u_part(0), t.c.u_part(0), t.d.u_part(0)};
    zupoly<F> dt = t0.det();
    if (dt != zupoly<F>::constant(F::one()))
        throw validation_error("non-unimodular restriction to the base curve");
    int amax = 0;
    const zupoly<F>* restr[4] = {&t0.a, &t0.b, &t0.c, &t0.d};
    for (auto* e : restr)
        for (auto& term : e->terms())
            amax = std::max({amax, term.s, -term.s});
    for (int d = amax; d >= 1; --d)
        if (detail::has_twisted_section(t0, d, amax))
            return d;
    return 0;
}

// twist down at the zero section of the sub-line, twice, then renormalise;
// raises the splitting degree by k and keeps the class window
template <class F>
bundle<F> elementary_transform(const bundle<F>& b)
{
    int k = b.k, j = b.j;
    zupoly<F> corner = b.p.shift(-1, 0); // p / u
    corner = corner - corner.u_part(0);
    corner = corner.shift(-1, 0); // again, after killing the constant layer
    corner = corner.shift(0, -k); // overall twist back by z^-k
    corner = corner - corner.u_part(0);
    return make_bundle(k, j + k, corner);
}

template <class F>
bool is_instanton(const bundle<F>& b)
{
    return b.j % b.k == 0;
}

template <class F>
int split_class(const bundle<F>& b)
{
    return b.j % b.k;
}

template <class F>
bool iso_on_punctured(const bundle<F>& a, const bundle<F>& b)
{
    if (a.k != b.k)
        throw validation_error("bundles live over different base cones");
    return a.j % a.k == b.j % b.k;
}

// expected dimension of the space of classes with the given splitting data,
// modulo the filtered automorphism group; negative values flag empty strata
inline int moduli_dim(int k, int j)
{
    if (k < 1)
        throw validation_error("cone degree must be at least 1");
    if (j < k)
        throw validation_error("twist below the cone degree: split and rigid");
    return 2 * j - k - 2;
}

} // namespace localchi

#endif
