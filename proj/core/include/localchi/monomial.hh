/**
 * @file monomial.hh
 * @brief Exponent vectors and the monomial orders used by the Groebner engine.
 */
#ifndef LOCALCHI_MONOMIAL_HH
#define LOCALCHI_MONOMIAL_HH

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace localchi {

// ===== monomial =====

class monomial {
public:
    monomial() = default;
    explicit monomial(int nvars) : e_(nvars, 0) {}
    explicit monomial(std::vector<int> e) : e_(std::move(e)) {}

    int nvars() const { return static_cast<int>(e_.size()); }
    int deg() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int deg(int lo, int hi) const {
        int d = 0;
        for (int i = lo; i < hi; ++i) d += e_[i];
        return d;
    }
    int operator[](int i) const { return e_[i]; }
    int& operator[](int i) { return e_[i]; }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
    }

    monomial operator*(const monomial& o) const {
        monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
        return r;
    }
    bool divides(const monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    // quotient o / this; caller guarantees divisibility
    monomial quotient_of(const monomial& o) const {
        monomial r(o);
        for (int i = 0; i < nvars(); ++i) r.e_[i] -= e_[i];
        return r;
    }
    monomial lcm(const monomial& o) const {
        monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }
    bool coprime(const monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    bool operator==(const monomial& o) const { return e_ == o.e_; }
    bool operator!=(const monomial& o) const { return e_ != o.e_; }

    std::string str(const std::vector<std::string>& names) const {
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            if (e_[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += names[i];
            if (e_[i] != 1) s += "^" + std::to_string(e_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    std::vector<int> e_;
};

// grevlex comparison restricted to the variable range [lo, hi):
// higher total degree wins; on ties the *last* differing variable
// with the smaller exponent wins. Returns <0, 0, >0 like strcmp.
inline int grevlex_cmp(const monomial& a, const monomial& b, int lo, int hi) {
    int da = a.deg(lo, hi), db = b.deg(lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

// ===== module orders =====

// A module term is a (slot, monomial) pair; orders compare them totally.
// All concrete orders below are compatible with multiplication by
// monomials and tie-break down to slot equality, so equal terms compare 0.
class module_order {
public:
    virtual ~module_order() = default;
    // <0 if a < b, 0 if equal, >0 if a > b
    virtual int cmp(int slot_a, const monomial& a, int slot_b, const monomial& b) const = 0;
};

// position over term: lower slot is bigger; ties by grevlex on all variables
class pot_grevlex_order final : public module_order {
public:
    int cmp(int sa, const monomial& a, int sb, const monomial& b) const override {
        if (sa != sb) return sa > sb ? -1 : 1;
        return grevlex_cmp(a, b, 0, a.nvars());
    }
};

// term over position with per-slot degree shifts: compares shifted total
// degree first (degree-compatible, which Hilbert-function counting needs),
// then grevlex, then lower slot bigger.
class shifted_top_order final : public module_order {
public:
    explicit shifted_top_order(std::vector<int> shifts) : shifts_(std::move(shifts)) {}
    int cmp(int sa, const monomial& a, int sb, const monomial& b) const override {
        int da = a.deg() + shifts_[sa], db = b.deg() + shifts_[sb];
        if (da != db) return da < db ? -1 : 1;
        int c = grevlex_cmp(a, b, 0, a.nvars());
        if (c != 0) return c;
        if (sa != sb) return sa > sb ? -1 : 1;
        return 0;
    }

private:
    std::vector<int> shifts_;
};

// two-block order: slots below `split` dominate the rest; each block is
// compared by its own order with slots renumbered to start at zero.
// Used for the graph construction (lead block = ambient module, witness
// block = coefficients on the input generators).
class block_order final : public module_order {
public:
    block_order(int split, const module_order& first, const module_order& second)
        : split_(split), first_(first), second_(second) {}
    int cmp(int sa, const monomial& a, int sb, const monomial& b) const override {
        bool la = sa < split_, lb = sb < split_;
        if (la != lb) return la ? 1 : -1;
        if (la) return first_.cmp(sa, a, sb, b);
        return second_.cmp(sa - split_, a, sb - split_, b);
    }

private:
    int split_;
    const module_order& first_;
    const module_order& second_;
};

// elimination order for the trailing variable block [elim_lo, nvars):
// any term containing an eliminated variable beats any term without one.
// Compares the eliminated part by grevlex, then the rest by grevlex,
// then lower slot bigger. GB elements of a submodule whose terms are all
// free of the eliminated variables generate the intersection with the
// subring's free module.
class elim_order final : public module_order {
public:
    explicit elim_order(int elim_lo) : elim_lo_(elim_lo) {}
    int cmp(int sa, const monomial& a, int sb, const monomial& b) const override {
        int c = grevlex_cmp(a, b, elim_lo_, a.nvars());
        if (c != 0) return c;
        c = grevlex_cmp(a, b, 0, elim_lo_);
        if (c != 0) return c;
        if (sa != sb) return sa > sb ? -1 : 1;
        return 0;
    }

private:
    int elim_lo_;
};

} // namespace localchi

#endif
