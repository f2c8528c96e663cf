/**
 * @file sections.hh
 * @brief Global sections of the bundle and the pushforward module they span.
 */
#ifndef LOCALCHI_SECTIONS_HH
#define LOCALCHI_SECTIONS_HH

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "localchi/bundle.hh"
#include "localchi/cone.hh"
#include "localchi/dual.hh"
#include "localchi/errors.hh"
#include "localchi/fpmodule.hh"
#include "localchi/groebner.hh"
#include "localchi/linalg.hh"
#include "localchi/zupoly.hh"

namespace localchi {

// a global section in first-chart components: v_U = (a, b), with the second
// chart value (z^j a + p b, z^-j b) holomorphic there
template <class F>
struct section {
    zupoly<F> a, b;
    int u_order = 0;
    char kind = 'b'; // originating free symbol family
    int r = 0, s = 0;

    std::string origin() const
    {
        return std::string(1, kind) + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
    }
};

// linear conditions on the coefficient symbols a(r,s), b(r,s) imposed by
// holomorphy on the second chart, up to u-degree R in the b symbols
template <class F>
struct constraint_system {
    struct sym {
        char kind;
        int r, s;
    };
    struct row {
        int r, s; // the monomial u^r z^s carrying the condition
        std::vector<std::pair<int, F>> coeffs;
    };
    std::vector<sym> symbols;
    std::vector<row> rows;

    int find(char kind, int r, int s) const
    {
        for (int i = 0; i < (int)symbols.size(); ++i)
            if (symbols[i].kind == kind && symbols[i].r == r && symbols[i].s == s)
                return i;
        return -1;
    }
};

template <class F>
constraint_system<F> second_chart_constraints(const bundle<F>& b, int rmax)
{
    if (rmax < 1)
        throw validation_error("truncation level must be at least 1");
    constraint_system<F> cs;
    int k = b.k, j = b.j;
    int du = b.p.is_zero() ? 0 : b.p.max_u();
    int dz = b.p.is_zero() ? 0 : std::max(0, b.p.max_z());
    for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= k * r + j; ++s)
            cs.symbols.push_back({'b', r, s});
    for (int r = 0; r <= rmax + du; ++r)
        for (int s = 0; s <= k * r + dz; ++s)
            cs.symbols.push_back({'a', r, s});
    // [z^j a + p b]_(r,s) = 0 whenever s > k r
    for (int r = 0; r <= rmax + du; ++r) {
        for (int s = k * r + 1; s <= k * r + dz + j; ++s) {
            typename constraint_system<F>::row row{r, s, {}};
            if (s >= j) {
                int ia = cs.find('a', r, s - j);
                if (ia < 0)
                    continue; // outside the inspection window
                row.coeffs.emplace_back(ia, F::one());
            }
            for (auto& t : b.p.terms()) {
                int rb = r - t.r, sb = s - t.s;
                int ib = cs.find('b', rb, sb);
                if (ib >= 0)
                    row.coeffs.emplace_back(ib, t.c);
            }
            if (!row.coeffs.empty())
                cs.rows.push_back(std::move(row));
        }
    }
    return cs;
}

namespace detail {

// solve the pure-b rows (no a symbol can absorb them: k r < s < j), then
// reconstruct each a exactly from p * b; returns validated sections
template <class F>
std::vector<section<F>> chart_sections(const bundle<F>& bd, int rmax)
{
    int k = bd.k, j = bd.j;
    std::vector<std::pair<int, int>> bsyms;
    for (int r = 0; r <= rmax; ++r)
        for (int s = 0; s <= k * r + j; ++s)
            bsyms.emplace_back(r, s);
    auto bindex = [&](int r, int s) -> int {
        if (r < 0 || r > rmax || s < 0 || s > k * r + j)
            return -1;
        for (int i = 0; i < (int)bsyms.size(); ++i)
            if (bsyms[i].first == r && bsyms[i].second == s)
                return i;
        return -1;
    };
    dense_matrix<F> rows;
    if (j >= 2) {
        for (int r = 0; k * r + 1 <= j - 1; ++r) {
            for (int s = k * r + 1; s <= j - 1; ++s) {
                std::vector<F> row(bsyms.size(), F::zero());
                bool live = false;
                for (auto& t : bd.p.terms()) {
                    int ib = bindex(r - t.r, s - t.s);
                    if (ib >= 0) {
                        row[ib] = row[ib] + t.c;
                        live = true;
                    }
                }
                if (live)
                    rows.push_back(std::move(row));
            }
        }
    }
    // pivots on high (r, s) symbols leave the low ones free
    std::vector<int> order;
    for (int i = (int)bsyms.size() - 1; i >= 0; --i)
        order.push_back(i);
    auto piv = rref(rows, order);
    std::vector<int> pivot_of(bsyms.size(), -1);
    for (auto& [pr, pc] : piv)
        pivot_of[pc] = pr;
    std::vector<section<F>> out;
    for (int f = 0; f < (int)bsyms.size(); ++f) {
        if (pivot_of[f] >= 0)
            continue;
        std::vector<zuterm<F>> bts = {{bsyms[f].first, bsyms[f].second, F::one()}};
        for (auto& [pr, pc] : piv)
            if (!rows[pr][f].is_zero())
                bts.push_back({bsyms[pc].first, bsyms[pc].second, -rows[pr][f]});
        section<F> sec;
        sec.b = zupoly<F>::from_terms(std::move(bts));
        zupoly<F> q = bd.p * sec.b;
        std::vector<zuterm<F>> ats;
        for (auto& t : q.terms()) {
            if (t.s <= k * t.r)
                continue;
            if (t.s < j)
                throw crosscheck_error("chart constraint survived the solve at (r="
                                       + std::to_string(t.r) + ", s=" + std::to_string(t.s)
                                       + ")");
            ats.push_back({t.r, t.s - j, -t.c});
        }
        sec.a = zupoly<F>::from_terms(std::move(ats));
        sec.kind = 'b';
        sec.r = bsyms[f].first;
        sec.s = bsyms[f].second;
        out.push_back(std::move(sec));
    }
    for (int r = 0; r <= rmax; ++r) {
        for (int s = 0; s <= k * r - j; ++s) {
            section<F> sec;
            sec.a = zupoly<F>::monomial(r, s, F::one());
            sec.kind = 'a';
            sec.r = r;
            sec.s = s;
            out.push_back(std::move(sec));
        }
    }
    for (auto& sec : out) {
        // holomorphy on the second chart, checked exactly on the components
        zupoly<F> g = sec.a.shift(0, j) + bd.p * sec.b;
        for (auto& t : g.terms())
            if (t.s > k * t.r)
                throw crosscheck_error("section fails holomorphy at (r=" + std::to_string(t.r)
                                       + ", s=" + std::to_string(t.s) + ")");
        for (auto& t : sec.b.terms())
            if (t.s > k * t.r + j)
                throw crosscheck_error("section second component fails holomorphy");
        int uo = rmax + 1;
        bool seen = false;
        for (auto& t : sec.a.terms()) {
            uo = seen ? std::min(uo, t.r) : t.r;
            seen = true;
        }
        for (auto& t : sec.b.terms()) {
            uo = seen ? std::min(uo, t.r) : t.r;
            seen = true;
        }
        sec.u_order = seen ? uo : 0;
    }
    std::sort(out.begin(), out.end(), [](const section<F>& x, const section<F>& y) {
        if (x.u_order != y.u_order)
            return x.u_order < y.u_order;
        if (x.kind != y.kind)
            return x.kind == 'b';
        if (x.r != y.r)
            return x.r < y.r;
        return x.s < y.s;
    });
    return out;
}

// incremental test for membership of targets in the span of accepted
// generators over the subring of chart functions z^w u^d with w <= k d:
// every multiplier*generator product seen so far stays in an exact echelon
// basis, so each query is one reduction instead of a fresh elimination.
// false negatives are harmless (the generator list only gets redundant
// entries, cleaned up exactly later); a hit is always a true span member,
// since the multiplier window only ever grows within the legal subring
template <class F>
class span_tracker {
public:
    explicit span_tracker(int k) : k_(k) {}

    void add_gen(const section<F>& g)
    {
        gens_.push_back(g);
        done_.emplace_back();
    }

    bool contains(const section<F>& v)
    {
        int dv = 0, zv = 0;
        for (auto& t : v.a.terms()) {
            dv = std::max(dv, t.r);
            zv = std::max(zv, t.s);
        }
        for (auto& t : v.b.terms()) {
            dv = std::max(dv, t.r);
            zv = std::max(zv, t.s);
        }
        for (int gi = 0; gi < (int)gens_.size(); ++gi) {
            auto& g = gens_[gi];
            for (int d = 0; d + g.u_order <= dv + 1; ++d)
                for (int w = 0; w <= std::min(k_ * d, zv + 1); ++w)
                    if (done_[gi].insert({d, w}).second)
                        insert_row(tovec(g.a.shift(d, w), g.b.shift(d, w)));
        }
        return reduce_build(tovec(v.a, v.b), rows_, idx_, ord_).is_zero();
    }

private:
    // coefficient vectors ride the module machinery: one slot per coordinate
    // (component, r, s) in discovery order, with trivial monomials
    int slot(int comp, int r, int s)
    {
        auto [it, fresh] = coords_.try_emplace({comp, r, s}, (int)coords_.size());
        (void)fresh;
        return it->second;
    }

    mvec<F> tovec(const zupoly<F>& a, const zupoly<F>& b)
    {
        std::vector<term<F>> ts;
        auto put = [&](int comp, const zupoly<F>& f) {
            for (auto& t : f.terms())
                ts.push_back({slot(comp, t.r, t.s), monomial(0), t.c});
        };
        put(0, a);
        put(1, b);
        return normalize(std::move(ts), ord_);
    }

    void insert_row(const mvec<F>& v)
    {
        mvec<F> r = reduce_build(v, rows_, idx_, ord_);
        if (r.is_zero())
            return;
        rows_.push_back(make_primitive(r));
        idx_.add(rows_, (int)rows_.size() - 1);
    }

    int k_;
    pot_grevlex_order ord_;
    std::vector<section<F>> gens_;
    std::vector<std::set<std::pair<int, int>>> done_;
    std::map<std::tuple<int, int, int>, int> coords_;
    std::vector<mvec<F>> rows_;
    lt_buckets<F> idx_;
};

} // namespace detail

template <class F>
struct build_result {
    fpmodule<F> module;
    std::vector<section<F>> gens;
};

// generators: greedy pass over the canonically ordered section list;
// relations: syzygies in the chart-variable graph, then elimination down to
// the cone variables
template <class F>
build_result<F> build_presentation(const bundle<F>& bd, int rmax)
{
    if (rmax < 1)
        throw validation_error("truncation level must be at least 1");
    int k = bd.k;
    auto ring = make_cone_ring<F>(k);
    auto sections = detail::chart_sections(bd, rmax);
    detail::span_tracker<F> span(k);
    std::vector<section<F>> gens;
    for (auto& s : sections) {
        if (s.a.is_zero() && s.b.is_zero())
            continue;
        if (!gens.empty() && span.contains(s))
            continue;
        gens.push_back(s);
        span.add_gen(s);
    }
    int n = (int)gens.size();
    int nv = k + 3; // x_0..x_k, then z, u
    pot_grevlex_order ordb;
    std::vector<mvec<F>> vectors;
    for (auto& g : gens) {
        std::vector<term<F>> ts;
        auto put = [&](const zupoly<F>& f, int slot) {
            for (auto& t : f.terms()) {
                std::vector<int> e(nv, 0);
                e[k + 1] = t.s;
                e[k + 2] = t.r;
                ts.push_back({slot, monomial(e), t.c});
            }
        };
        put(g.a, 0);
        put(g.b, 1);
        vectors.push_back(normalize(std::move(ts), ordb));
    }
    for (int t = 0; t <= k; ++t) {
        for (int c = 0; c < 2; ++c) {
            std::vector<int> ex(nv, 0), ezu(nv, 0);
            ex[t] = 1;
            ezu[k + 1] = t;
            ezu[k + 2] = 1;
            std::vector<term<F>> ts = {{c, monomial(ex), F::one()},
                                       {c, monomial(ezu), -F::one()}};
            vectors.push_back(normalize(std::move(ts), ordb));
        }
    }
    auto gg = graph_groebner(vectors, 2, ordb);
    elim_order orde(k + 1);
    std::vector<mvec<F>> kgens;
    for (auto& s : graph_syzygies(gg)) {
        mvec<F> v = normalize(slot_range(s, 0, n).terms(), orde);
        if (!v.is_zero())
            kgens.push_back(std::move(v));
    }
    std::vector<mvec<F>> rels;
    for (auto& g : groebner(kgens, orde)) {
        if (g.lt().m[k + 1] != 0 || g.lt().m[k + 2] != 0)
            continue;
        std::vector<term<F>> ts;
        for (auto& t : g.terms()) {
            std::vector<int> e;
            for (int i = 0; i <= k; ++i)
                e.push_back(t.m[i]);
            ts.push_back({t.slot, monomial(e), t.c});
        }
        rels.push_back(normalize(std::move(ts), ring->ord));
    }
    std::vector<int> shifts;
    std::vector<std::string> labels;
    for (auto& g : gens) {
        shifts.push_back(g.u_order);
        labels.push_back(g.origin());
    }
    build_result<F> out;
    out.module = make_module(ring, shifts, labels, rels);
    out.gens = std::move(gens);
    return out;
}

template <class F>
struct stab_result {
    build_result<F> raw;    // presentation at the certified truncation
    fpmodule<F> minimized;  // same module, generators pruned
    int r_used = 0;
    bool stabilized = false;
    long width = 0;
    bool ev_injective = false;
    std::vector<long> hf; // filtration dimensions 0..r_used+3
};

namespace detail {

template <class F>
struct probe {
    build_result<F> raw;
    fpmodule<F> min;
    std::vector<long> hf;
    long width = 0;
    bool inj = false;
};

template <class F>
probe<F> analyze_at(const bundle<F>& bd, int rmax)
{
    probe<F> p;
    p.raw = build_presentation(bd, rmax);
    p.min = minimize_presentation(p.raw.module);
    p.hf = hilbert_function(p.min, rmax + 3);
    auto dd = double_dual_with_ev(p.min);
    p.width = finite_length(dd.ev_coker);
    p.inj = dd.ev_injective;
    return p;
}

inline bool hf_agree(const std::vector<long>& a, const std::vector<long>& b, int upto)
{
    for (int d = 0; d <= upto; ++d)
        if (a[d] != b[d])
            return false;
    return true;
}

} // namespace detail

// escalate the truncation until two consecutive levels agree on the
// filtration dimensions and on the resulting width; rmax < 1 requests the
// automatic start level
template <class F>
stab_result<F> stabilized_presentation(const bundle<F>& bd, int rmax = 0)
{
    int k = bd.k, j = bd.j;
    int du = bd.p.is_zero() ? 0 : bd.p.max_u();
    bool escalate = rmax < 1;
    int r0 = escalate ? (2 * j + k - 1) / k + du + 1 : rmax;
    auto fill = [&](stab_result<F>& out, detail::probe<F>& a, detail::probe<F>& b, int r) {
        out.r_used = r;
        out.raw = std::move(a.raw);
        out.minimized = std::move(a.min);
        out.width = a.width;
        out.ev_injective = a.inj;
        out.hf = std::vector<long>(a.hf.begin(), a.hf.begin() + r + 4);
        out.stabilized = detail::hf_agree(a.hf, b.hf, r + 3) && a.width == b.width;
    };
    stab_result<F> out;
    detail::probe<F> cur = detail::analyze_at(bd, r0);
    int attempts = escalate ? 3 : 0;
    int r = r0;
    for (;;) {
        detail::probe<F> next = detail::analyze_at(bd, r + 1);
        fill(out, cur, next, r);
        if (out.stabilized || attempts == 0)
            break;
        cur = std::move(next);
        r += 1;
        attempts -= 1;
    }
    if (escalate && !out.stabilized)
        throw stabilization_error(
            "presentation did not stabilise between truncation levels "
            + std::to_string(r0) + " and " + std::to_string(r + 1));
    return out;
}

} // namespace localchi

#endif
