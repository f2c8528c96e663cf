/**
 * @file poly.hh
 * @brief Sparse free-module vectors with exact coefficients; ring polynomials
 *        are the rank-1 case (every slot zero).
 */
#ifndef LOCALCHI_POLY_HH
#define LOCALCHI_POLY_HH

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "localchi/field.hh"
#include "localchi/monomial.hh"

namespace localchi {

template <class F>
struct term {
    int slot;
    monomial m;
    F c;
};

// Term list kept strictly decreasing under the module order in effect for
// the computation at hand; the zero vector is the empty list. The order is
// passed to each operation rather than stored, since the same vector may be
// re-sorted under several orders during a pipeline.
template <class F>
class mvec {
public:
    mvec() = default;
    explicit mvec(std::vector<term<F>> t) : t_(std::move(t)) {}

    bool is_zero() const { return t_.empty(); }
    int nterms() const { return static_cast<int>(t_.size()); }
    const term<F>& lt() const { return t_.front(); }
    const std::vector<term<F>>& terms() const { return t_; }
    std::vector<term<F>>& terms() { return t_; }

    bool operator==(const mvec& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (size_t i = 0; i < t_.size(); ++i) {
            if (t_[i].slot != o.t_[i].slot || t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c)
                return false;
        }
        return true;
    }

private:
    std::vector<term<F>> t_;
};

// collect duplicate terms, drop zeros, sort descending under ord
template <class F>
mvec<F> normalize(std::vector<term<F>> ts, const module_order& ord) {
    std::sort(ts.begin(), ts.end(), [&](const term<F>& x, const term<F>& y) {
        return ord.cmp(x.slot, x.m, y.slot, y.m) > 0;
    });
    std::vector<term<F>> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().slot == t.slot && out.back().m == t.m) {
            out.back().c += t.c;
            if (out.back().c.is_zero()) out.pop_back();
        } else if (!t.c.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return mvec<F>(std::move(out));
}

template <class F>
mvec<F> add(const mvec<F>& a, const mvec<F>& b, const module_order& ord) {
    std::vector<term<F>> out;
    out.reserve(a.nterms() + b.nterms());
    size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() && j < tb.size()) {
        int c = ord.cmp(ta[i].slot, ta[i].m, tb[j].slot, tb[j].m);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            out.push_back(tb[j++]);
        } else {
            F s = ta[i].c + tb[j].c;
            if (!s.is_zero()) out.push_back({ta[i].slot, ta[i].m, s});
            ++i;
            ++j;
        }
    }
    while (i < ta.size()) out.push_back(ta[i++]);
    while (j < tb.size()) out.push_back(tb[j++]);
    return mvec<F>(std::move(out));
}

template <class F>
mvec<F> scale(const mvec<F>& a, const F& c) {
    if (c.is_zero()) return mvec<F>();
    std::vector<term<F>> out = a.terms();
    for (auto& t : out) t.c *= c;
    return mvec<F>(std::move(out));
}

template <class F>
mvec<F> negate(const mvec<F>& a) {
    std::vector<term<F>> out = a.terms();
    for (auto& t : out) t.c = -t.c;
    return mvec<F>(std::move(out));
}

// multiply by a single monomial times a coefficient; relative term order is
// preserved by any monomial-compatible order, so no re-sort is needed
template <class F>
mvec<F> mono_mul(const mvec<F>& a, const monomial& m, const F& c) {
    if (c.is_zero()) return mvec<F>();
    std::vector<term<F>> out = a.terms();
    for (auto& t : out) {
        t.m = t.m * m;
        t.c *= c;
    }
    return mvec<F>(std::move(out));
}

template <class F>
mvec<F> sub_mul(const mvec<F>& a, const mvec<F>& b, const monomial& m, const F& c,
                const module_order& ord) {
    return add(a, mono_mul(b, m, -c), ord);
}

// rank-1 polynomial times a module vector
template <class F>
mvec<F> poly_mul(const mvec<F>& p, const mvec<F>& v, const module_order& ord) {
    mvec<F> acc;
    for (const auto& t : p.terms()) {
        assert(t.slot == 0);
        acc = add(acc, mono_mul(v, t.m, t.c), ord);
    }
    return acc;
}

template <class F>
mvec<F> make_monic(const mvec<F>& a) {
    if (a.is_zero()) return a;
    return scale(a, a.lt().c.inv());
}

// canonical unit multiple used while building bases: monic in general, and
// content-free integers with positive lead over the rationals, which keeps
// reduction arithmetic in small integers instead of nested fractions
template <class F>
mvec<F> make_primitive(const mvec<F>& a) {
    return make_monic(a);
}

inline mvec<rational> make_primitive(const mvec<rational>& a) {
    if (a.is_zero()) return a;
    mpz_class g = 0, l = 1;
    for (const auto& t : a.terms()) {
        g = gcd(g, t.c.raw().get_num());
        l = lcm(l, t.c.raw().get_den());
    }
    if (a.lt().c.raw() < 0) g = -g;
    return scale(a, rational(mpq_class(l, g)));
}

// ----- small constructors -----

template <class F>
mvec<F> monomial_vec(int slot, monomial m, F c) {
    if (c.is_zero()) return mvec<F>();
    std::vector<term<F>> t{{slot, std::move(m), std::move(c)}};
    return mvec<F>(std::move(t));
}

template <class F>
mvec<F> variable_poly(int var, int nvars) {
    monomial m(nvars);
    m[var] = 1;
    return monomial_vec<F>(0, m, F::one());
}

// re-embed every term's slot by offset (block constructions)
template <class F>
mvec<F> shift_slots(const mvec<F>& a, int offset) {
    std::vector<term<F>> out = a.terms();
    for (auto& t : out) t.slot += offset;
    return mvec<F>(std::move(out));
}

// extract the terms with slot in [lo, hi), renumbered to start at zero;
// result order is inherited (caller re-normalizes if the target order differs)
template <class F>
mvec<F> slot_range(const mvec<F>& a, int lo, int hi) {
    std::vector<term<F>> out;
    for (const auto& t : a.terms()) {
        if (t.slot >= lo && t.slot < hi) out.push_back({t.slot - lo, t.m, t.c});
    }
    return mvec<F>(std::move(out));
}

template <class F>
std::string to_string(const mvec<F>& a, const std::vector<std::string>& names,
                      const std::vector<std::string>& gens = {}) {
    if (a.is_zero()) return "0";
    std::string s;
    for (const auto& t : a.terms()) {
        if (!s.empty()) s += " + ";
        s += t.c.str();
        if (!t.m.is_one()) s += "*" + t.m.str(names);
        if (!gens.empty()) s += "*" + gens[t.slot];
    }
    return s;
}

} // namespace localchi

#endif
