/**
 * @file fpmodule.hh
 * @brief Finitely presented graded modules over the cone ring.
 */
#ifndef LOCALCHI_FPMODULE_HH
#define LOCALCHI_FPMODULE_HH

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "localchi/cone.hh"
#include "localchi/errors.hh"
#include "localchi/groebner.hh"
#include "localchi/poly.hh"

namespace localchi {

// cokernel of rels: S(-shift_0) (+) ... (+) S(-shift_{n-1}) -> M -> 0
template <class F>
struct fpmodule {
    std::shared_ptr<const cone_ring<F>> ring;
    int ngens = 0;
    std::vector<int> shifts;
    std::vector<std::string> labels;
    std::vector<mvec<F>> rels; // rows over F[x]^ngens, reduced mod the defining ideal
    bool minimized = false;
};

template <class F>
fpmodule<F> make_module(std::shared_ptr<const cone_ring<F>> ring, std::vector<int> shifts,
                        std::vector<std::string> labels, const std::vector<mvec<F>>& rels)
{
    fpmodule<F> m;
    m.ring = std::move(ring);
    m.ngens = (int)shifts.size();
    m.shifts = std::move(shifts);
    m.labels = std::move(labels);
    if (m.labels.empty())
        for (int i = 0; i < m.ngens; ++i)
            m.labels.push_back("g" + std::to_string(i));
    for (auto& r : rels) {
        mvec<F> nf = nf_mod_ideal(*m.ring, r, m.ring->ord);
        if (nf.is_zero())
            continue;
        nf = make_monic(nf);
        bool dup = false;
        for (auto& have : m.rels)
            if (have == nf)
                dup = true;
        if (!dup)
            m.rels.push_back(std::move(nf));
    }
    return m;
}

// rank-1 polynomial collecting the slot-i component
template <class F>
mvec<F> entry(const mvec<F>& v, int slot)
{
    std::vector<term<F>> out;
    for (auto& t : v.terms())
        if (t.slot == slot)
            out.push_back({0, t.m, t.c});
    return mvec<F>(std::move(out));
}

// basis of rels + one ideal copy per slot, under the given order
template <class F>
std::vector<mvec<F>> presentation_gb(const fpmodule<F>& m, const module_order& ord)
{
    std::vector<mvec<F>> gens = m.rels;
    auto pads = ideal_pads(*m.ring, m.ngens);
    gens.insert(gens.end(), pads.begin(), pads.end());
    return groebner(gens, ord);
}

namespace detail {

// count monomials of F[x_0..x_n-1] not divisible by any of lts, one bucket
// per total degree <= dcap; caps bounds each exponent (empty = no bound)
inline void count_standard(const std::vector<monomial>& lts, int nvars, int dcap,
                           const std::vector<int>& caps, std::vector<long>& buckets,
                           std::vector<int>& e, int var, int used)
{
    if (var == nvars) {
        buckets[used] += 1;
        return;
    }
    int hi = dcap - used;
    if (!caps.empty())
        hi = std::min(hi, caps[var] - 1);
    for (int x = 0; x <= hi; ++x) {
        e[var] = x;
        monomial partial(e);
        bool dead = false;
        for (auto& lt : lts) {
            if (lt.divides(partial)) {
                dead = true;
                break;
            }
        }
        if (!dead)
            count_standard(lts, nvars, dcap, caps, buckets, e, var + 1, used + x);
        e[var] = 0;
        if (dead)
            break; // larger exponents stay divisible
    }
}

} // namespace detail

// dimension over F of the degree <= d filtration layer, for d = 0..dmax;
// a generator with shift s contributes standard monomials of degree <= d - s
template <class F>
std::vector<long> hilbert_function(const fpmodule<F>& m, int dmax)
{
    std::vector<long> hf(dmax + 1, 0);
    if (m.ngens == 0)
        return hf;
    shifted_top_order ord(m.shifts);
    auto gb = presentation_gb(m, ord);
    int nvars = m.ring->nvars();
    for (int slot = 0; slot < m.ngens; ++slot) {
        std::vector<monomial> lts;
        for (auto& g : gb)
            if (g.lt().slot == slot)
                lts.push_back(g.lt().m);
        int dcap = dmax - m.shifts[slot];
        if (dcap < 0)
            continue;
        std::vector<long> buckets(dcap + 1, 0);
        std::vector<int> e(nvars, 0);
        detail::count_standard(lts, nvars, dcap, {}, buckets, e, 0, 0);
        long acc = 0;
        for (int d = 0; d <= dcap; ++d) {
            acc += buckets[d];
            hf[d + m.shifts[slot]] += acc;
        }
    }
    return hf;
}

// total F-dimension; throws divergence_error when the module is not finite
// dimensional, naming a witness (slot, variable) pair
template <class F>
long finite_length(const fpmodule<F>& m)
{
    if (m.ngens == 0)
        return 0;
    shifted_top_order ord(m.shifts);
    auto gb = presentation_gb(m, ord);
    int nvars = m.ring->nvars();
    long total = 0;
    for (int slot = 0; slot < m.ngens; ++slot) {
        std::vector<monomial> lts;
        bool dead = false;
        for (auto& g : gb) {
            if (g.lt().slot != slot)
                continue;
            if (g.lt().m.is_one())
                dead = true; // the generator itself reduces away
            lts.push_back(g.lt().m);
        }
        if (dead)
            continue;
        std::vector<int> caps(nvars, -1);
        for (int v = 0; v < nvars; ++v) {
            for (auto& lt : lts) {
                if (lt[v] == 0 || lt.deg() != lt[v])
                    continue;
                caps[v] = caps[v] < 0 ? lt[v] : std::min(caps[v], lt[v]);
            }
            if (caps[v] < 0)
                throw divergence_error("not finite length: generator "
                                       + m.labels[slot] + " is free in direction "
                                       + m.ring->names[v]);
        }
        int dcap = 0;
        for (int v = 0; v < nvars; ++v)
            dcap += caps[v] - 1;
        std::vector<long> buckets(dcap + 1, 0);
        std::vector<int> e(nvars, 0);
        detail::count_standard(lts, nvars, dcap, caps, buckets, e, 0, 0);
        for (long b : buckets)
            total += b;
    }
    return total;
}

// Drop generators made redundant by a relation with a constant entry, when
// degree bookkeeping shows the substitution cannot raise any filtration
// level, then replace the relation rows by their reduced canonical basis.
// kept (if given) receives the original indices of the surviving generators;
// level_safe=false skips the filtration guard for callers that only use the
// presentation up to isomorphism.
template <class F>
fpmodule<F> minimize_presentation(const fpmodule<F>& m, std::vector<int>* kept = nullptr,
                                  bool level_safe = true)
{
    fpmodule<F> cur = m;
    const module_order& ord = cur.ring->ord;
    std::vector<int> surv(cur.ngens);
    for (int i = 0; i < cur.ngens; ++i)
        surv[i] = i;
    for (;;) {
        int hit_row = -1, hit_slot = -1;
        F hit_c = F::zero();
        for (int r = 0; r < (int)cur.rels.size() && hit_row < 0; ++r) {
            for (auto& t : cur.rels[r].terms()) {
                if (!t.m.is_one())
                    continue;
                int i = t.slot;
                if (entry(cur.rels[r], i).nterms() != 1)
                    continue;
                bool ok = true;
                for (int l = 0; l < cur.ngens && ok && level_safe; ++l) {
                    if (l == i)
                        continue;
                    mvec<F> el = entry(cur.rels[r], l);
                    for (auto& lt : el.terms())
                        if (lt.m.deg() + cur.shifts[l] > cur.shifts[i])
                            ok = false;
                }
                if (ok) {
                    hit_row = r;
                    hit_slot = i;
                    hit_c = t.c;
                    break;
                }
            }
        }
        if (hit_row < 0)
            break;
        // g_i = -c^{-1} * (other entries applied to their generators)
        std::vector<term<F>> sub_terms;
        for (auto& t : cur.rels[hit_row].terms())
            if (t.slot != hit_slot)
                sub_terms.push_back({t.slot, t.m, -(t.c / hit_c)});
        mvec<F> sub(normalize(std::move(sub_terms), ord));
        std::vector<mvec<F>> next_rels;
        for (int r = 0; r < (int)cur.rels.size(); ++r) {
            if (r == hit_row)
                continue;
            mvec<F> row = cur.rels[r];
            mvec<F> coef = entry(row, hit_slot);
            if (!coef.is_zero()) {
                std::vector<term<F>> rest;
                for (auto& t : row.terms())
                    if (t.slot != hit_slot)
                        rest.push_back(t);
                row = add(mvec<F>(std::move(rest)), poly_mul(coef, sub, ord), ord);
            }
            std::vector<term<F>> shifted;
            for (auto& t : row.terms())
                shifted.push_back({t.slot > hit_slot ? t.slot - 1 : t.slot, t.m, t.c});
            next_rels.push_back(mvec<F>(std::move(shifted)));
        }
        cur.rels = std::move(next_rels);
        cur.shifts.erase(cur.shifts.begin() + hit_slot);
        cur.labels.erase(cur.labels.begin() + hit_slot);
        surv.erase(surv.begin() + hit_slot);
        cur.ngens -= 1;
    }
    if (kept)
        *kept = surv;
    fpmodule<F> out = make_module(cur.ring, cur.shifts, cur.labels, cur.rels);
    if (out.ngens > 0 && !out.rels.empty()) {
        auto gb = presentation_gb(out, out.ring->ord);
        auto pads = ideal_pads(*out.ring, out.ngens);
        std::vector<mvec<F>> cleaned;
        for (auto& g : gb) {
            mvec<F> nf = normal_form(g, pads, out.ring->ord);
            if (!nf.is_zero())
                cleaned.push_back(make_monic(nf));
        }
        out = make_module(out.ring, out.shifts, out.labels, cleaned);
    }
    out.minimized = true;
    return out;
}

template <class F>
std::string module_str(const fpmodule<F>& m)
{
    std::string s = "generators:";
    for (int i = 0; i < m.ngens; ++i)
        s += " " + m.labels[i] + "(deg " + std::to_string(m.shifts[i]) + ")";
    s += "\nrelations:";
    if (m.rels.empty())
        s += " none";
    for (auto& r : m.rels)
        s += "\n  " + to_string(r, m.ring->names, m.labels) + " = 0";
    return s;
}

} // namespace localchi

#endif
