/**
 * @file groebner.hh
 * @brief Buchberger engine for submodules of free modules (ideals are the
 *        rank-1 case), normal forms, and the graph construction that yields
 *        syzygies and expression lifting in one computation.
 */
#ifndef LOCALCHI_GROEBNER_HH
#define LOCALCHI_GROEBNER_HH

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "localchi/poly.hh"

namespace localchi {

// ===== normal form =====

namespace detail {

// leading terms bucketed by slot; scan order inside a bucket follows
// insertion order, so lookups match a linear scan of the same list
template <class F>
class lt_buckets {
public:
    void add(const std::vector<mvec<F>>& basis, int i) {
        int s = basis[i].lt().slot;
        if (static_cast<int>(b_.size()) <= s) b_.resize(s + 1);
        b_[s].push_back(i);
    }
    void build(const std::vector<mvec<F>>& basis) {
        b_.clear();
        for (int i = 0; i < static_cast<int>(basis.size()); ++i)
            if (!basis[i].is_zero()) add(basis, i);
    }
    const mvec<F>* divisor(const std::vector<mvec<F>>& basis, const term<F>& t,
                           int skip = -1) const {
        if (t.slot < 0 || t.slot >= static_cast<int>(b_.size())) return nullptr;
        for (int i : b_[t.slot])
            if (i != skip && basis[i].lt().m.divides(t.m)) return &basis[i];
        return nullptr;
    }

private:
    std::vector<std::vector<int>> b_;
};

} // namespace detail

// Full reduction (head and tail) against `basis` in listed order; the
// remainder contains no term divisible by any basis leading term.
template <class F>
mvec<F> normal_form(const mvec<F>& f, const std::vector<mvec<F>>& basis,
                    const module_order& ord) {
    detail::lt_buckets<F> idx;
    idx.build(basis);
    std::vector<term<F>> rem;
    // inputs may arrive sorted under a different order
    mvec<F> h = normalize(f.terms(), ord);
    while (!h.is_zero()) {
        const term<F>& t = h.lt();
        if (const mvec<F>* g = idx.divisor(basis, t)) {
            h = sub_mul(h, *g, g->lt().m.quotient_of(t.m), t.c / g->lt().c, ord);
        } else {
            rem.push_back(t);
            std::vector<term<F>> rest(h.terms().begin() + 1, h.terms().end());
            h = mvec<F>(std::move(rest));
        }
    }
    return mvec<F>(std::move(rem));
}

namespace detail {

// full reduction used while building bases, where elements only matter up
// to a unit: each reducing step first multiplies the whole element by the
// divisor lead so coefficients stay fraction-free, then re-strips content
template <class F>
mvec<F> reduce_build(const mvec<F>& f, const std::vector<mvec<F>>& basis,
                     const lt_buckets<F>& idx, const module_order& ord, int skip = -1) {
    mvec<F> w = make_primitive(normalize(f.terms(), ord));
    size_t pos = 0;
    long steps = 0;
    while (pos < w.terms().size()) {
        term<F> t = w.terms()[pos];
        const mvec<F>* g = idx.divisor(basis, t, skip);
        if (!g) {
            ++pos;
            continue;
        }
        F lc = g->lt().c;
        mvec<F> scaled = lc.is_one() ? std::move(w) : scale(w, lc);
        w = add(scaled, mono_mul(*g, g->lt().m.quotient_of(t.m), -t.c), ord);
        if (!lc.is_one() || (++steps & 31) == 0) w = make_primitive(w);
    }
    return w;
}

} // namespace detail

// cross-multiplied to keep coefficients fraction-free; any unit multiple
// serves, since S-vectors are only ever tested for reduction to zero
template <class F>
mvec<F> s_vector(const mvec<F>& f, const mvec<F>& g, const module_order& ord) {
    const term<F>& lf = f.lt();
    const term<F>& lg = g.lt();
    assert(lf.slot == lg.slot);
    monomial l = lf.m.lcm(lg.m);
    mvec<F> a = mono_mul(f, lf.m.quotient_of(l), lg.c);
    mvec<F> b = mono_mul(g, lg.m.quotient_of(l), lf.c);
    return add(a, negate(b), ord);
}

// ===== Buchberger =====

namespace detail {

struct gb_pair {
    monomial lcm;
    int i, j;
};

// Gebauer-Moeller update: prune the pending pair set against the new
// element with index t, then add the surviving new pairs. The product
// criterion is only sound for ideals, so it is gated on rank one.
template <class F>
void gm_update(std::vector<gb_pair>& pairs, const std::vector<mvec<F>>& basis, int t,
               bool rank_one) {
    const term<F>& lt_t = basis[t].lt();

    std::vector<gb_pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
        bool drop = false;
        if (basis[p.i].lt().slot == lt_t.slot && lt_t.m.divides(p.lcm)) {
            monomial lit = lt_t.m.lcm(basis[p.i].lt().m);
            monomial ljt = lt_t.m.lcm(basis[p.j].lt().m);
            if (lit != p.lcm && ljt != p.lcm) drop = true;
        }
        if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);

    std::vector<gb_pair> fresh;
    for (int i = 0; i < t; ++i) {
        if (basis[i].is_zero()) continue;
        if (basis[i].lt().slot != lt_t.slot) continue;
        fresh.push_back({basis[i].lt().m.lcm(lt_t.m), i, t});
    }
    // M: keep only pairs with minimal lcm among the fresh ones; copy, the
    // whole of `fresh` is still scanned by later iterations
    std::vector<gb_pair> minimal;
    for (auto& p : fresh) {
        bool dominated = false;
        for (auto& q : fresh) {
            if (&p == &q) continue;
            if (q.lcm.divides(p.lcm) && q.lcm != p.lcm) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(p);
    }
    // F: one representative per lcm value
    std::vector<gb_pair> unique;
    for (auto& p : minimal) {
        bool seen = false;
        for (auto& q : unique) {
            if (q.lcm == p.lcm) {
                seen = true;
                break;
            }
        }
        if (!seen) unique.push_back(std::move(p));
    }
    // B: product criterion (ideals only)
    for (auto& p : unique) {
        if (rank_one && basis[p.i].lt().m.coprime(basis[p.j].lt().m)) continue;
        pairs.push_back(std::move(p));
    }
}

} // namespace detail

// Groebner basis of the submodule generated by `gens`, sorted by decreasing
// leading term. With `reduced` (the default) the result is the reduced monic
// basis, which is unique for a fixed order, so the output is deterministic;
// without it elements stay primitive and tails unreduced, which is cheaper
// and serves every use that only needs *a* basis of the span.
// Elements whose leading slot is at or beyond `pair_limit` join the basis as
// reducers but spawn no S-pairs and are all kept in the output: a graph run
// passes its main rank here, because rows with a pure witness head are
// accumulated syzygies, and pairs among them only rewrite known ones.
template <class F>
std::vector<mvec<F>> groebner(const std::vector<mvec<F>>& gens, const module_order& ord,
                              bool rank_one = false, bool reduced = true,
                              int pair_limit = -1) {
    std::vector<mvec<F>> basis;
    detail::lt_buckets<F> idx;
    std::vector<detail::gb_pair> pairs;
    auto push = [&](mvec<F> r) {
        basis.push_back(make_primitive(r));
        idx.add(basis, static_cast<int>(basis.size()) - 1);
        if (pair_limit < 0 || basis.back().lt().slot < pair_limit)
            detail::gm_update(pairs, basis, static_cast<int>(basis.size()) - 1, rank_one);
    };
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        // re-sort under ord: generators often arrive from another order
        mvec<F> r = detail::reduce_build(g, basis, idx, ord);
        if (r.is_zero()) continue;
        push(std::move(r));
    }

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t i = 1; i < pairs.size(); ++i) {
            const auto& a = pairs[i];
            const auto& b = pairs[best];
            int da = a.lcm.deg(), db = b.lcm.deg();
            if (da != db ? da < db : (a.j != b.j ? a.j < b.j : a.i < b.i)) best = i;
        }
        detail::gb_pair p = pairs[best];
        pairs.erase(pairs.begin() + best);

        mvec<F> s = s_vector(basis[p.i], basis[p.j], ord);
        mvec<F> r = detail::reduce_build(s, basis, idx, ord);
        if (r.is_zero()) continue;
        push(std::move(r));
    }

    // drop elements whose leading term another element's leading term
    // divides; rows past the pair limit stay, they are generators by
    // accumulation rather than members of a completed basis
    std::vector<mvec<F>> kept;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (pair_limit >= 0 && basis[i].lt().slot >= pair_limit) {
            kept.push_back(basis[i]);
            continue;
        }
        bool redundant = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            const auto& li = basis[i].lt();
            const auto& lj = basis[j].lt();
            if (lj.slot == li.slot && lj.m.divides(li.m) && !(li.m == lj.m && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(basis[i]);
    }

    if (reduced) {
        // leading terms are pairwise indivisible now, so one full-reduction
        // pass per element already gives the unique reduced tail form
        detail::lt_buckets<F> kidx;
        kidx.build(kept);
        for (size_t i = 0; i < kept.size(); ++i)
            kept[i] = make_monic(
                detail::reduce_build(kept[i], kept, kidx, ord, static_cast<int>(i)));
    }

    std::sort(kept.begin(), kept.end(), [&](const mvec<F>& a, const mvec<F>& b) {
        return ord.cmp(a.lt().slot, a.lt().m, b.lt().slot, b.lt().m) > 0;
    });
    return kept;
}

// check the defining property: every S-vector of every pair reduces to zero
template <class F>
bool is_groebner(const std::vector<mvec<F>>& basis, const module_order& ord) {
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (basis[i].lt().slot != basis[j].lt().slot) continue;
            mvec<F> s = s_vector(basis[i], basis[j], ord);
            if (!normal_form(s, basis, ord).is_zero()) return false;
        }
    }
    return true;
}

// ===== graph construction =====

// GB of the module generated by (v_i ; e_i) in F^main_rank (+) F^ngens under
// a block order with the main block dominant. Elements with zero main block
// are syzygies of the inputs; the others carry, in their witness block, an
// expression of the main part as a combination of the inputs.
template <class F>
struct graph_basis {
    int main_rank = 0;
    int ngens = 0;
    std::vector<mvec<F>> elems; // reduced GB of the graph module
};

namespace detail {

// orders for the graph module; constructed on demand so graph_basis stays
// self-contained (block_order holds references)
struct graph_orders {
    pot_grevlex_order witness;
    block_order block;
    explicit graph_orders(int main_rank, const module_order& main_ord)
        : witness(), block(main_rank, main_ord, witness) {}
};

} // namespace detail

template <class F>
graph_basis<F> graph_groebner(const std::vector<mvec<F>>& vectors, int main_rank,
                              const module_order& main_ord) {
    detail::graph_orders go(main_rank, main_ord);
    std::vector<mvec<F>> ext;
    ext.reserve(vectors.size());
    int nvars = 0;
    for (const auto& v : vectors)
        if (!v.is_zero()) nvars = v.lt().m.nvars();
    for (size_t i = 0; i < vectors.size(); ++i) {
        std::vector<term<F>> ts = vectors[i].terms();
        for (const auto& t : ts)
            assert(t.slot < main_rank);
        // witness term sorts below every main-block term: append at the end
        ts.push_back({main_rank + static_cast<int>(i), monomial(nvars), F::one()});
        ext.push_back(normalize(std::move(ts), go.block));
    }
    graph_basis<F> gb;
    gb.main_rank = main_rank;
    gb.ngens = static_cast<int>(vectors.size());
    // a primitive non-reduced basis serves: syzygy extraction and expression
    // lifting are scale-insensitive, and consumers canonicalize downstream
    gb.elems = groebner(ext, go.block, false, /*reduced=*/false,
                        /*pair_limit=*/main_rank);
    return gb;
}

// syzygies of the inputs: witness blocks of the zero-main-block elements
template <class F>
std::vector<mvec<F>> graph_syzygies(const graph_basis<F>& gb) {
    std::vector<mvec<F>> out;
    for (const auto& e : gb.elems) {
        if (e.lt().slot >= gb.main_rank)
            out.push_back(slot_range(e, gb.main_rank, gb.main_rank + gb.ngens));
    }
    return out;
}

// leading (nonzero main block) parts; a GB of the span of the inputs
template <class F>
std::vector<mvec<F>> graph_lead(const graph_basis<F>& gb) {
    std::vector<mvec<F>> out;
    for (const auto& e : gb.elems) {
        if (e.lt().slot < gb.main_rank) out.push_back(slot_range(e, 0, gb.main_rank));
    }
    return out;
}

template <class F>
struct expression {
    mvec<F> remainder;            // normal form of the input in the main block
    std::vector<mvec<F>> coeffs;  // rank-1 coefficient on each input generator
    bool member() const { return remainder.is_zero(); }
};

// reduce (v ; 0) by the graph basis; if the main block vanishes the witness
// block yields v = sum coeffs[i] * input[i] (an exact division certificate)
template <class F>
expression<F> express(const mvec<F>& v, const graph_basis<F>& gb,
                      const module_order& main_ord) {
    detail::graph_orders go(gb.main_rank, main_ord);
    detail::lt_buckets<F> idx;
    idx.build(gb.elems);
    mvec<F> h = normalize(v.terms(), go.block);
    // reduce only while the leading term sits in the main block; the witness
    // tail is bookkeeping, not data to normalize
    std::vector<term<F>> rem;
    while (!h.is_zero() && h.lt().slot < gb.main_rank) {
        const term<F>& t = h.lt();
        if (const mvec<F>* g = idx.divisor(gb.elems, t)) {
            h = sub_mul(h, *g, g->lt().m.quotient_of(t.m), t.c / g->lt().c, go.block);
        } else {
            rem.push_back(t);
            std::vector<term<F>> rest(h.terms().begin() + 1, h.terms().end());
            h = mvec<F>(std::move(rest));
        }
    }
    expression<F> out;
    out.remainder = mvec<F>(std::move(rem));
    out.coeffs.resize(gb.ngens);
    // remaining h lives in the witness block and equals -sum q_i e_i
    for (int i = 0; i < gb.ngens; ++i) {
        std::vector<term<F>> q;
        for (const auto& t : h.terms()) {
            if (t.slot == gb.main_rank + i) q.push_back({0, t.m, -t.c});
        }
        out.coeffs[i] = mvec<F>(std::move(q));
    }
    return out;
}

} // namespace localchi

#endif
