/**
 * @file zupoly.hh
 * @brief Laurent polynomials in z and u: arithmetic, parsing, canonical form.
 */
#ifndef LOCALCHI_ZUPOLY_HH
#define LOCALCHI_ZUPOLY_HH

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "localchi/errors.hh"
#include "localchi/field.hh"

namespace localchi {

// term c * z^s * u^r; both exponents may be negative
template <class F>
struct zuterm {
    int r = 0;
    int s = 0;
    F c;
};

// terms kept sorted ascending by (r, s), merged, zero-free
template <class F>
class zupoly {
public:
    zupoly() = default;

    static zupoly zero() { return zupoly(); }

    static zupoly monomial(int r, int s, const F& c)
    {
        zupoly p;
        if (!c.is_zero())
            p.terms_.push_back({r, s, c});
        return p;
    }

    static zupoly constant(const F& c) { return monomial(0, 0, c); }

    static zupoly from_terms(std::vector<zuterm<F>> ts)
    {
        zupoly p;
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<zuterm<F>>& terms() const { return terms_; }

    F coeff(int r, int s) const
    {
        for (auto& t : terms_)
            if (t.r == r && t.s == s)
                return t.c;
        return F::zero();
    }

    int min_u() const { return terms_.front().r; }
    int max_u() const { return terms_.back().r; }

    int min_z() const
    {
        int v = terms_.front().s;
        for (auto& t : terms_)
            v = std::min(v, t.s);
        return v;
    }

    int max_z() const
    {
        int v = terms_.front().s;
        for (auto& t : terms_)
            v = std::max(v, t.s);
        return v;
    }

    // terms with u-exponent exactly r
    zupoly u_part(int r) const
    {
        zupoly p;
        for (auto& t : terms_)
            if (t.r == r)
                p.terms_.push_back(t);
        return p;
    }

    zupoly operator+(const zupoly& o) const
    {
        std::vector<zuterm<F>> ts = terms_;
        ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
        return from_terms(std::move(ts));
    }

    zupoly operator-(const zupoly& o) const { return *this + o.negate(); }

    zupoly negate() const
    {
        zupoly p = *this;
        for (auto& t : p.terms_)
            t.c = F::zero() - t.c;
        return p;
    }

    zupoly operator*(const zupoly& o) const
    {
        std::vector<zuterm<F>> ts;
        ts.reserve(terms_.size() * o.terms_.size());
        for (auto& a : terms_)
            for (auto& b : o.terms_)
                ts.push_back({a.r + b.r, a.s + b.s, a.c * b.c});
        return from_terms(std::move(ts));
    }

    zupoly shift(int dr, int ds) const
    {
        zupoly p = *this;
        for (auto& t : p.terms_) {
            t.r += dr;
            t.s += ds;
        }
        return p;
    }

    zupoly scale(const F& c) const
    {
        if (c.is_zero())
            return zupoly();
        zupoly p = *this;
        for (auto& t : p.terms_)
            t.c = t.c * c;
        return p;
    }

    bool operator==(const zupoly& o) const
    {
        if (terms_.size() != o.terms_.size())
            return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].r != o.terms_[i].r || terms_[i].s != o.terms_[i].s
                || !(terms_[i].c == o.terms_[i].c))
                return false;
        return true;
    }

    bool operator!=(const zupoly& o) const { return !(*this == o); }

private:
    void normalize()
    {
        std::sort(terms_.begin(), terms_.end(), [](const zuterm<F>& a, const zuterm<F>& b) {
            if (a.r != b.r)
                return a.r < b.r;
            return a.s < b.s;
        });
        std::vector<zuterm<F>> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().r == t.r && out.back().s == t.s)
                out.back().c = out.back().c + t.c;
            else
                out.push_back(t);
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const zuterm<F>& t) { return t.c.is_zero(); }),
                  out.end());
        terms_ = std::move(out);
    }

    std::vector<zuterm<F>> terms_;
};

// ===== field-independent carrier for user-supplied classes =====

using raw_poly = zupoly<rational>;

template <class F>
zupoly<F> make_zupoly(const raw_poly& raw)
{
    std::vector<zuterm<F>> ts;
    for (auto& t : raw.terms()) {
        const auto& q = t.c.raw();
        if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
            throw validation_error("coefficient too large");
        ts.push_back({t.r, t.s, F::from_fraction(q.get_num().get_si(), q.get_den().get_si())});
    }
    return zupoly<F>::from_terms(std::move(ts));
}

// ===== canonical serialisation =====
// terms ascending by (r, s), every coefficient explicit: "1*z*u + 2*u^2"

namespace detail {

inline std::string zu_mono_str(int r, int s)
{
    std::string out;
    if (s != 0) {
        out += "z";
        if (s != 1)
            out += "^" + std::to_string(s);
    }
    if (r != 0) {
        if (!out.empty())
            out += "*";
        out += "u";
        if (r != 1)
            out += "^" + std::to_string(r);
    }
    return out;
}

} // namespace detail

inline std::string class_to_string(const raw_poly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto& t : p.terms()) {
        bool neg = t.c.raw() < 0;
        rational mag = neg ? rational::zero() - t.c : t.c;
        if (first) {
            out += (neg ? "-" : "") + mag.str();
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += mag.str();
        }
        std::string m = detail::zu_mono_str(t.r, t.s);
        if (!m.empty())
            out += "*" + m;
    }
    return out;
}

// ===== parser =====
// poly  := term (('+'|'-') term)*
// term  := coeff ('*'? mono)? | '-'? mono
// mono  := zpart ('*'? upart)? | upart
// zpart := 'z' ('^' int)?      upart := 'u' ('^' int)?
// coeff := int ('/' int)?      int   := '-'? digit+
// whitespace is permitted between tokens; exponents may be negative

namespace detail {

struct zu_scanner {
    const std::string& src;
    std::size_t pos = 0;

    explicit zu_scanner(const std::string& s) : src(s) {}

    void skip_ws()
    {
        while (pos < src.size() && std::isspace((unsigned char)src[pos]))
            ++pos;
    }

    bool eof()
    {
        skip_ws();
        return pos >= src.size();
    }

    char peek()
    {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what)
    {
        throw validation_error("class parse error at position " + std::to_string(pos) + ": "
                               + what);
    }

    long integer()
    {
        skip_ws();
        std::size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+'))
            ++pos;
        std::size_t digits = pos;
        while (pos < src.size() && std::isdigit((unsigned char)src[pos]))
            ++pos;
        if (pos == digits)
            fail("expected integer");
        try {
            return std::stol(src.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    // exponents for one variable; first = 'z' or 'u'
    int exponent()
    {
        if (accept('^')) {
            long e = integer();
            if (e < -1000000 || e > 1000000)
                fail("exponent out of range");
            return (int)e;
        }
        return 1;
    }

    // returns (r, s); requires peek() is 'z' or 'u'
    std::pair<int, int> mono()
    {
        int r = 0, s = 0;
        if (accept('z')) {
            s = exponent();
            std::size_t save = pos;
            bool star = accept('*');
            if (accept('u'))
                r = exponent();
            else if (star)
                fail("expected u after *");
            else
                pos = save;
        } else if (accept('u')) {
            r = exponent();
        } else {
            fail("expected monomial");
        }
        return {r, s};
    }

    zuterm<rational> term()
    {
        char c = peek();
        if (c == 'z' || c == 'u') {
            auto [r, s] = mono();
            return {r, s, rational::one()};
        }
        if (c == '-' || c == '+' || std::isdigit((unsigned char)c)) {
            std::size_t save = pos;
            if ((c == '-' || c == '+')) {
                ++pos;
                char n = peek();
                pos = save;
                if (n == 'z' || n == 'u') {
                    accept(c);
                    auto [r, s] = mono();
                    rational one = rational::one();
                    return {r, s, c == '-' ? rational::zero() - one : one};
                }
            }
            long num = integer();
            long den = 1;
            if (accept('/')) {
                den = integer();
                if (den == 0)
                    fail("zero denominator");
            }
            std::size_t mark = pos;
            bool star = accept('*');
            char n = peek();
            if (n == 'z' || n == 'u') {
                auto [r, s] = mono();
                return {r, s, rational::from_fraction(num, den)};
            }
            if (star)
                fail("expected monomial after *");
            pos = mark;
            return {0, 0, rational::from_fraction(num, den)};
        }
        fail("expected term");
    }
};

} // namespace detail

inline raw_poly parse_class(const std::string& text)
{
    detail::zu_scanner sc(text);
    std::vector<zuterm<rational>> ts;
    if (sc.eof())
        sc.fail("empty input");
    ts.push_back(sc.term());
    while (!sc.eof()) {
        char c = sc.peek();
        if (c == '+' || c == '-') {
            sc.accept(c);
            zuterm<rational> t = sc.term();
            if (c == '-')
                t.c = rational::zero() - t.c;
            ts.push_back(t);
        } else {
            sc.fail("expected + or -");
        }
    }
    return raw_poly::from_terms(std::move(ts));
}

} // namespace localchi

#endif
