/**
 * @file test_bundle.cc
 * @brief Bundle data: class windows, transition matrices, splitting, transforms.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localchi/bundle.hh"
#include "localchi/field.hh"

using namespace localchi;
using F = rational;

// ===== extension-class window =====

TEST_CASE("window acceptance matches the index inequalities")
{
    CHECK_NOTHROW(make_bundle<F>(2, 2, parse_class("z*u")));
    CHECK_NOTHROW(make_bundle<F>(3, 3, zupoly<F>::zero()));
    CHECK_NOTHROW(make_bundle<F>(1, 4, parse_class("z^-2*u + z^3*u^6")));
    CHECK_THROWS_AS(make_bundle<F>(3, 3, parse_class("z^3*u")), validation_error);
    CHECK_THROWS_AS(make_bundle<F>(2, 2, parse_class("u")), validation_error);
    CHECK_THROWS_AS(make_bundle<F>(2, 2, parse_class("z*u^2")), validation_error);
    CHECK_THROWS_AS(make_bundle<F>(1, 0, parse_class("z*u")), validation_error);
}

TEST_CASE("rejection names the offending monomial and window")
{
    try {
        make_bundle<F>(3, 3, parse_class("z^5*u"));
        FAIL("expected rejection");
    } catch (const validation_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("(r=1, s=5)") != std::string::npos);
        CHECK(msg.find("k=3, j=3") != std::string::npos);
    }
}

TEST_CASE("slot counts: closed form equals brute-force enumeration")
{
    CHECK(ext_param_count(1, 1) == 0);
    CHECK(ext_param_count(2, 2) == 1);
    CHECK(ext_param_count(3, 3) == 2);
    for (int k = 1; k <= 5; ++k) {
        for (int j = 0; j <= 10; ++j) {
            long brute = 0;
            for (int r = 1; r <= (j >= 1 ? (2 * j - 2) / k : 0); ++r) {
                for (int s = k * r - j + 1; s <= j - 1; ++s) {
                    bool ok = true;
                    try {
                        make_bundle<F>(k, j, zupoly<F>::monomial(r, s, F::one()));
                    } catch (const validation_error&) {
                        ok = false;
                    }
                    if (ok)
                        ++brute;
                }
            }
            CHECK(ext_param_count(k, j) == brute);
            CHECK((int)class_support(k, j).size() == brute);
        }
    }
}

// ===== transition matrices =====

TEST_CASE("canonical matrix entries and unit determinant")
{
    auto b = make_bundle<F>(2, 2, parse_class("z*u"));
    auto t = transition_matrix(b);
    CHECK(t.a == zupoly<F>::monomial(0, 2, F::one()));
    CHECK(t.b == zupoly<F>::monomial(1, 1, F::one()));
    CHECK(t.c.is_zero());
    CHECK(t.d == zupoly<F>::monomial(0, -2, F::one()));
    CHECK(t.a * t.d - t.b * t.c == zupoly<F>::constant(F::one()));

    auto split = transition_matrix(make_bundle<F>(3, 3, zupoly<F>::zero()));
    CHECK(split.b.is_zero());
    CHECK(split.a * split.d == zupoly<F>::constant(F::one()));

    auto triv = transition_matrix(make_bundle<F>(2, 0, zupoly<F>::zero()));
    CHECK(triv.a == zupoly<F>::constant(F::one()));
    CHECK(triv.d == zupoly<F>::constant(F::one()));
    CHECK(triv.b.is_zero());
}

TEST_CASE("splitting degree recovery from the restricted matrix")
{
    for (int j = 0; j <= 4; ++j) {
        mat2<F> diag{zupoly<F>::monomial(0, j, F::one()), zupoly<F>::zero(),
                     zupoly<F>::zero(), zupoly<F>::monomial(0, -j, F::one())};
        CHECK(splitting_type(diag) == j);
    }
    // an off-diagonal term can hide a lower splitting: [[z^2, z],[0, z^-2]] ~ O(1)+O(-1)
    mat2<F> mixed{zupoly<F>::monomial(0, 2, F::one()), zupoly<F>::monomial(0, 1, F::one()),
                  zupoly<F>::zero(), zupoly<F>::monomial(0, -2, F::one())};
    CHECK(splitting_type(mixed) == 1);
}

TEST_CASE("restriction of a canonical bundle splits at its twist")
{
    for (int k = 1; k <= 4; ++k) {
        for (int j = 0; j <= 2 * k; ++j) {
            auto support = class_support(k, j);
            zupoly<F> p = support.empty()
                              ? zupoly<F>::zero()
                              : zupoly<F>::monomial(support.front().first,
                                                    support.front().second, F::one());
            auto b = make_bundle<F>(k, j, p);
            auto t = transition_matrix(b);
            // the class has positive u-degree, so restriction kills it
            mat2<F> rest{t.a.u_part(0), t.b.u_part(0), t.c.u_part(0), t.d.u_part(0)};
            CHECK(splitting_type(rest) == j);
        }
    }
}

// ===== elementary transform =====

TEST_CASE("transform raises the twist by k and keeps the residue")
{
    auto b0 = make_bundle<F>(2, 0, zupoly<F>::zero());
    auto t0 = elementary_transform(b0);
    CHECK(t0.j == 2);
    CHECK(split_class(t0) == split_class(b0));

    auto b1 = make_bundle<F>(3, 3, parse_class("z*u"));
    auto t1 = elementary_transform(b1);
    CHECK(t1.j == 6);
    CHECK(split_class(t1) == 0);
    CHECK(splitting_type(transition_matrix(t1)) == 6);
    CHECK(iso_on_punctured(b1, t1));

    // twice: j + 2k
    auto t2 = elementary_transform(t1);
    CHECK(t2.j == 9);
    CHECK(split_class(t2) == 0);
}

TEST_CASE("transform output stays in the canonical window across a grid")
{
    for (int k = 2; k <= 4; ++k) {
        for (int j = k; j <= 2 * k; ++j) {
            for (auto& [r, s] : class_support(k, j)) {
                auto b = make_bundle<F>(k, j, zupoly<F>::monomial(r, s, F::one()));
                auto tb = elementary_transform(b); // construction revalidates
                CHECK(tb.j == j + k);
                CHECK(iso_on_punctured(b, tb));
                auto t = transition_matrix(tb);
                CHECK(t.a * t.d - t.b * t.c == zupoly<F>::constant(F::one()));
            }
        }
    }
}

// ===== predicates and dimensions =====

TEST_CASE("instanton predicate is divisibility of the twist")
{
    CHECK(is_instanton(make_bundle<F>(3, 3, zupoly<F>::zero())));
    CHECK(!is_instanton(make_bundle<F>(3, 2, zupoly<F>::zero())));
    CHECK(is_instanton(make_bundle<F>(4, 0, zupoly<F>::zero())));
    for (int k = 2; k <= 5; ++k)
        for (int j = 0; j <= 2 * k; ++j) {
            auto b = make_bundle<F>(k, j, zupoly<F>::zero());
            CHECK(is_instanton(b) == (split_class(b) == 0));
        }
}

TEST_CASE("punctured-surface equivalence is the residue test")
{
    auto a = make_bundle<F>(3, 2, zupoly<F>::zero());
    auto b = make_bundle<F>(3, 5, parse_class("u + z*u"));
    auto c = make_bundle<F>(3, 1, zupoly<F>::zero());
    CHECK(iso_on_punctured(a, b));
    CHECK(!iso_on_punctured(a, c));
    CHECK(iso_on_punctured(a, a));
}

TEST_CASE("moduli dimensions")
{
    CHECK(moduli_dim(3, 3) == 1);
    CHECK(moduli_dim(2, 4) == 4);
    for (int k = 2; k <= 6; ++k)
        CHECK(moduli_dim(k, k) == k - 2);
    CHECK(moduli_dim(1, 1) == -1); // empty stratum, reported verbatim
    CHECK_THROWS_AS(moduli_dim(3, 2), validation_error);
}

// ===== class polynomial grammar =====

TEST_CASE("parser round-trips canonical strings")
{
    std::vector<const char*> cases = {"1*z*u", "-4/3*z*u", "1*z^-1*u",
                                      "5/2*z^-1*u + 3*u + 2*z*u", "0",
                                      "2*u + 2/3*z*u - 5/4*z^2*u^2"};
    for (auto* s : cases) {
        raw_poly p = parse_class(s);
        CHECK(class_to_string(p) == s);
        CHECK(parse_class(class_to_string(p)) == p);
    }
}

TEST_CASE("parser accepts grammar variants")
{
    CHECK(parse_class("z*u") == parse_class("1*z*u"));
    CHECK(parse_class("zu") == parse_class("z*u"));
    CHECK(parse_class("u") == raw_poly::monomial(1, 0, rational::one()));
    CHECK(parse_class("3/4 * z^2 * u") == raw_poly::monomial(1, 2, rational::from_fraction(3, 4)));
    CHECK(parse_class("-z*u + u") == parse_class("u - z*u"));
    CHECK(parse_class("z^-1*u").terms()[0].s == -1);
    CHECK(parse_class("0").is_zero());
    CHECK_THROWS_AS(parse_class("z^*u"), validation_error);
    CHECK_THROWS_AS(parse_class("3//4*u"), validation_error);
    CHECK_THROWS_AS(parse_class(""), validation_error);
}
