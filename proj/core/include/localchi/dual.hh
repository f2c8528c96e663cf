/**
 * @file dual.hh
 * @brief Module duals over the cone ring and the evaluation into the double dual.
 */
#ifndef LOCALCHI_DUAL_HH
#define LOCALCHI_DUAL_HH

#include <string>
#include <vector>

#include "localchi/cone.hh"
#include "localchi/errors.hh"
#include "localchi/fpmodule.hh"
#include "localchi/groebner.hh"

namespace localchi {

// Hom(M, S) presented by generators; embed[l] is the value vector
// (lambda_l(e_0), ..., lambda_l(e_{n-1})) of the l-th generator in S^n.
template <class F>
struct hom_result {
    fpmodule<F> dual;
    std::vector<mvec<F>> embed;
};

template <class F>
hom_result<F> hom_to_ring(const fpmodule<F>& m)
{
    const auto& ring = *m.ring;
    const module_order& ord = ring.ord;
    int n = m.ngens;
    hom_result<F> out;
    if (n == 0) {
        out.dual = make_module(m.ring, {}, {}, {});
        return out;
    }
    int q = (int)m.rels.size();
    std::vector<mvec<F>> kgens;
    if (q == 0) {
        for (int i = 0; i < n; ++i)
            kgens.push_back(monomial_vec(i, monomial(ring.nvars()), F::one()));
    } else {
        // a functional is a vector of values annihilating every relation:
        // the syzygies of the relation-matrix columns, taken modulo the ideal
        std::vector<mvec<F>> cols;
        for (int i = 0; i < n; ++i) {
            std::vector<term<F>> ts;
            for (int r = 0; r < q; ++r)
                for (auto& t : m.rels[r].terms())
                    if (t.slot == i)
                        ts.push_back({r, t.m, t.c});
            cols.push_back(normalize(std::move(ts), ord));
        }
        auto padsq = ideal_pads(ring, q);
        std::vector<mvec<F>> vectors = cols;
        vectors.insert(vectors.end(), padsq.begin(), padsq.end());
        auto gg = graph_groebner(vectors, q, ord);
        for (auto& s : graph_syzygies(gg)) {
            mvec<F> v = normalize(slot_range(s, 0, n).terms(), ord);
            v = nf_mod_ideal(ring, v, ord);
            if (!v.is_zero())
                kgens.push_back(v);
        }
    }
    auto padsn = ideal_pads(ring, n);
    std::vector<mvec<F>> span = kgens;
    span.insert(span.end(), padsn.begin(), padsn.end());
    for (auto& g : groebner(span, ord)) {
        mvec<F> nf = normal_form(g, padsn, ord);
        if (!nf.is_zero())
            out.embed.push_back(make_monic(nf));
    }
    int p = (int)out.embed.size();
    std::vector<mvec<F>> vecs2 = out.embed;
    vecs2.insert(vecs2.end(), padsn.begin(), padsn.end());
    auto gg2 = graph_groebner(vecs2, n, ord);
    std::vector<mvec<F>> draw;
    for (auto& s : graph_syzygies(gg2))
        draw.push_back(normalize(slot_range(s, 0, p).terms(), ord));
    // canonicalize the relation list like the embedding: reduced basis with
    // the ideal columns projected away
    auto padsp = ideal_pads(ring, p);
    std::vector<mvec<F>> span2 = draw;
    span2.insert(span2.end(), padsp.begin(), padsp.end());
    std::vector<mvec<F>> drels;
    for (auto& g : groebner(span2, ord)) {
        mvec<F> nf = normal_form(g, padsp, ord);
        if (!nf.is_zero())
            drels.push_back(make_monic(nf));
    }
    std::vector<std::string> labels;
    for (int l = 0; l < p; ++l)
        labels.push_back("f" + std::to_string(l));
    out.dual = make_module(m.ring, std::vector<int>(p, 0), labels, drels);
    return out;
}

// double dual with the evaluation map, an exactness certificate for ev on
// the presentation, and the kernel test deciding injectivity
template <class F>
struct bidual_result {
    fpmodule<F> ddual;
    std::vector<mvec<F>> ev_cols; // ev(e_i) over the ddual generators
    bool ev_injective = false;
    fpmodule<F> ev_coker;
};

// minimize a dual presentation and restrict its embedding to the surviving
// generators
template <class F>
void trim_dual(hom_result<F>& h)
{
    std::vector<int> kept;
    h.dual = minimize_presentation(h.dual, &kept, false);
    std::vector<mvec<F>> emb;
    emb.reserve(kept.size());
    for (int l : kept)
        emb.push_back(h.embed[l]);
    h.embed = std::move(emb);
}

template <class F>
bidual_result<F> double_dual_with_ev(const fpmodule<F>& m)
{
    const auto& ring = *m.ring;
    const module_order& ord = ring.ord;
    int n = m.ngens;
    bidual_result<F> out;
    hom_result<F> h1 = hom_to_ring(m);
    trim_dual(h1);
    int p = h1.dual.ngens;
    hom_result<F> h2 = hom_to_ring(h1.dual);
    trim_dual(h2);
    out.ddual = h2.dual;
    int bign = out.ddual.ngens;

    // ev(e_i) as a value vector on the dual generators
    std::vector<mvec<F>> vals;
    for (int i = 0; i < n; ++i) {
        std::vector<term<F>> ts;
        for (int l = 0; l < p; ++l)
            for (auto& t : h1.embed[l].terms())
                if (t.slot == i)
                    ts.push_back({l, t.m, t.c});
        vals.push_back(normalize(std::move(ts), ord));
    }

    // write each value vector over the embedded ddual generators
    std::vector<mvec<F>> vecs = h2.embed;
    auto padsp = ideal_pads(ring, p);
    vecs.insert(vecs.end(), padsp.begin(), padsp.end());
    auto gg = graph_groebner(vecs, p, ord);
    for (int i = 0; i < n; ++i) {
        auto ex = express(vals[i], gg, ord);
        if (!ex.member())
            throw crosscheck_error("evaluation image escaped the double dual");
        std::vector<term<F>> col;
        for (int l = 0; l < bign; ++l)
            for (auto& t : ex.coeffs[l].terms())
                col.push_back({l, t.m, t.c});
        out.ev_cols.push_back(nf_mod_ideal(ring, normalize(std::move(col), ord), ord));
    }

    // ev must send every relation of M to zero in the double dual
    auto dd_gb = presentation_gb(out.ddual, ord);
    for (auto& rel : m.rels) {
        mvec<F> img;
        for (int i = 0; i < n; ++i) {
            mvec<F> ci = entry(rel, i);
            if (!ci.is_zero())
                img = add(img, poly_mul(ci, out.ev_cols[i], ord), ord);
        }
        if (!normal_form(img, dd_gb, ord).is_zero())
            throw crosscheck_error("evaluation is not well defined on the presentation");
    }

    // kernel of ev: syzygies of the columns against the ddual relations;
    // injective when every kernel generator already lies in rel(M)
    auto mgb = presentation_gb(m, ord);
    out.ev_injective = true;
    if (bign == 0) {
        for (int i = 0; i < n && out.ev_injective; ++i) {
            mvec<F> ei = monomial_vec(i, monomial(ring.nvars()), F::one());
            if (!normal_form(ei, mgb, ord).is_zero())
                out.ev_injective = false;
        }
    } else {
        std::vector<mvec<F>> kin = out.ev_cols;
        kin.insert(kin.end(), out.ddual.rels.begin(), out.ddual.rels.end());
        auto padsP = ideal_pads(ring, bign);
        kin.insert(kin.end(), padsP.begin(), padsP.end());
        auto gg2 = graph_groebner(kin, bign, ord);
        for (auto& s : graph_syzygies(gg2)) {
            mvec<F> v = normalize(slot_range(s, 0, n).terms(), ord);
            if (!normal_form(v, mgb, ord).is_zero()) {
                out.ev_injective = false;
                break;
            }
        }
    }

    std::vector<mvec<F>> crels = out.ddual.rels;
    crels.insert(crels.end(), out.ev_cols.begin(), out.ev_cols.end());
    out.ev_coker = make_module(m.ring, std::vector<int>(bign, 0), {}, crels);
    return out;
}

} // namespace localchi

#endif
