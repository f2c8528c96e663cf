/**
 * @file cone.hh
 * @brief Coordinate ring of the degree-k cone singularity and its chart pullback.
 */
#ifndef LOCALCHI_CONE_HH
#define LOCALCHI_CONE_HH

#include <memory>
#include <string>
#include <vector>

#include "localchi/errors.hh"
#include "localchi/groebner.hh"
#include "localchi/monomial.hh"
#include "localchi/poly.hh"
#include "localchi/zupoly.hh"

namespace localchi {

// S = F[x_0..x_k] / (2x2 minors of [[x_0..x_{k-1}],[x_1..x_k]]).
// Ring elements are rank-1 vectors (slot 0) over k+1 variables.
template <class F>
struct cone_ring {
    int k = 0;
    std::vector<std::string> names;
    std::vector<mvec<F>> relations; // the defining quadrics
    std::vector<mvec<F>> ideal_gb;  // reduced basis of the defining ideal
    pot_grevlex_order ord;

    int nvars() const { return k + 1; }
};

template <class F>
std::shared_ptr<const cone_ring<F>> make_cone_ring(int k)
{
    if (k < 1)
        throw validation_error("cone degree must be at least 1, got " + std::to_string(k));
    auto ring = std::make_shared<cone_ring<F>>();
    ring->k = k;
    for (int i = 0; i <= k; ++i)
        ring->names.push_back("x" + std::to_string(i));
    int n = k + 1;
    for (int t = 2; t <= k; ++t) {
        for (int i = 0; i + t <= k; ++i) {
            std::vector<int> ea(n, 0), eb(n, 0);
            ea[i] += 1;
            ea[i + t] += 1;
            eb[i + 1] += 1;
            eb[i + t - 1] += 1;
            std::vector<term<F>> ts = {{0, monomial(ea), F::one()},
                                       {0, monomial(eb), -F::one()}};
            mvec<F> rel(normalize(std::move(ts), ring->ord));
            bool dup = false;
            for (auto& r : ring->relations)
                if (r == rel)
                    dup = true;
            if (!dup)
                ring->relations.push_back(std::move(rel));
        }
    }
    ring->ideal_gb = groebner(ring->relations, ring->ord, /*rank_one=*/true);
    return ring;
}

// one copy of each defining-ideal basis element in every slot of S^nslots
template <class F>
std::vector<mvec<F>> ideal_pads(const cone_ring<F>& ring, int nslots)
{
    std::vector<mvec<F>> out;
    for (int s = 0; s < nslots; ++s)
        for (auto& g : ring.ideal_gb)
            out.push_back(shift_slots(g, s));
    return out;
}

// entry-wise normal form modulo the defining ideal
template <class F>
mvec<F> nf_mod_ideal(const cone_ring<F>& ring, const mvec<F>& v, const module_order& ord)
{
    int top = 0;
    for (auto& t : v.terms())
        top = std::max(top, t.slot + 1);
    return normal_form(v, ideal_pads(ring, top), ord);
}

// chart substitution x_i -> z^i * u
template <class F>
zupoly<F> pi_pullback(const cone_ring<F>& ring, const mvec<F>& f)
{
    std::vector<zuterm<F>> ts;
    for (auto& t : f.terms()) {
        int r = 0, s = 0;
        for (int i = 0; i <= ring.k; ++i) {
            r += t.m[i];
            s += i * t.m[i];
        }
        ts.push_back({r, s, t.c});
    }
    return zupoly<F>::from_terms(std::move(ts));
}

} // namespace localchi

#endif
