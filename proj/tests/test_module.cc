/**
 * @file test_module.cc
 * @brief Finitely presented graded modules: Hilbert functions, length, minimization.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "localchi/fpmodule.hh"
#include "localchi/sections.hh"

using namespace localchi;
using F = rational;

static mvec<F> row(std::shared_ptr<const cone_ring<F>> ring,
                   std::vector<std::tuple<int, std::vector<int>, long>> ts)
{
    std::vector<term<F>> out;
    for (auto& [slot, e, c] : ts)
        out.push_back({slot, monomial(e), rational::from_fraction(c, 1)});
    return normalize(std::move(out), ring->ord);
}

// ===== finite length =====

TEST_CASE("residue-type quotients have the expected lengths")
{
    auto ring = make_cone_ring<F>(2);

    // zero module
    auto zero = make_module<F>(ring, {}, {}, {});
    CHECK(finite_length(zero) == 0);

    // S/(x0, x1, x2) has length 1
    std::vector<mvec<F>> maxi;
    for (int v = 0; v < 3; ++v)
        maxi.push_back(variable_poly<F>(v, 3));
    auto res = make_module<F>(ring, {0}, {"g"}, maxi);
    CHECK(finite_length(res) == 1);

    // S/(x0^2, x1, x2) has length 2 with basis {1, x0}
    auto two = make_module<F>(
        ring, {0}, {"g"},
        {row(ring, {{0, {2, 0, 0}, 1}}), row(ring, {{0, {0, 1, 0}, 1}}),
         row(ring, {{0, {0, 0, 1}, 1}})});
    CHECK(finite_length(two) == 2);
}

TEST_CASE("infinite length is detected rather than summed")
{
    auto ring = make_cone_ring<F>(2);
    auto free1 = make_module<F>(ring, {0}, {"g"}, {});
    CHECK_THROWS_AS(finite_length(free1), divergence_error);

    // killing two of three variables still leaves a curve's worth of monomials
    auto curve = make_module<F>(
        ring, {0}, {"g"}, {row(ring, {{0, {1, 0, 0}, 1}}), row(ring, {{0, {0, 1, 0}, 1}})});
    CHECK_THROWS_AS(finite_length(curve), divergence_error);
}

TEST_CASE("length agrees with degree-by-degree dimension counting")
{
    auto ring = make_cone_ring<F>(2);
    // S/(x0^2, x1, x2): filtration dimensions 1, 2, 2, 2, ...
    auto two = make_module<F>(
        ring, {0}, {"g"},
        {row(ring, {{0, {2, 0, 0}, 1}}), row(ring, {{0, {0, 1, 0}, 1}}),
         row(ring, {{0, {0, 0, 1}, 1}})});
    auto hf = hilbert_function(two, 5);
    CHECK(hf == std::vector<long>{1, 2, 2, 2, 2, 2});
    CHECK(finite_length(two) == hf.back());
}

// ===== Hilbert functions =====

TEST_CASE("free-module Hilbert function counts cone monomials with shifts")
{
    auto ring = make_cone_ring<F>(2);
    // rank 1, no shift: 1, 1+3, 1+3+5, ... (cone degrees are 2d+1 wide)
    auto free1 = make_module<F>(ring, {0}, {"g"}, {});
    CHECK(hilbert_function(free1, 3) == std::vector<long>{1, 4, 9, 16});

    // a shifted copy starts contributing at its shift
    auto shifted = make_module<F>(ring, {0, 1}, {"a", "b"}, {});
    CHECK(hilbert_function(shifted, 3) == std::vector<long>{1, 5, 13, 25});
}

TEST_CASE("flagship section module: frozen filtration dimensions")
{
    auto b = make_bundle<F>(2, 2, parse_class("z*u"));
    auto stab = stabilized_presentation(b);
    REQUIRE(stab.r_used == 4);
    CHECK(stab.hf == std::vector<long>{3, 11, 23, 39, 59, 83, 111, 143});
}

// ===== minimization =====

TEST_CASE("duplicate relation rows are dropped at construction")
{
    auto ring = make_cone_ring<F>(2);
    mvec<F> r = row(ring, {{0, {0, 1, 0}, 1}, {1, {1, 0, 0}, -1}});
    auto m = make_module<F>(ring, {0, 0}, {"a", "b"}, {r, r, scale(r, rational::from_fraction(3, 1))});
    CHECK((int)m.rels.size() == 1);
}

TEST_CASE("generator expressible through another is eliminated")
{
    auto ring = make_cone_ring<F>(2);
    // g1 = x0 g0 recorded as a unit-entry relation
    mvec<F> dep = row(ring, {{1, {0, 0, 0}, 1}, {0, {1, 0, 0}, -1}});
    auto m = make_module<F>(ring, {0, 1}, {"g0", "g1"}, {dep});
    auto before = hilbert_function(m, 6);
    auto mini = minimize_presentation(m);
    CHECK(mini.ngens == 1);
    CHECK(mini.rels.empty());
    CHECK(hilbert_function(mini, 6) == before);
}

TEST_CASE("minimization preserves Hilbert functions across the section corpus")
{
    struct probe {
        int k, j;
        const char* p;
    };
    std::vector<probe> grid = {{1, 2, "z*u"}, {2, 1, ""}, {2, 2, "z*u"}, {3, 3, "z*u"}};
    for (auto& g : grid) {
        auto b = make_bundle<F>(g.k, g.j, *g.p ? parse_class(g.p) : zupoly<F>::zero());
        auto built = build_presentation(b, 4);
        auto before = hilbert_function(built.module, 7);
        auto mini = minimize_presentation(built.module);
        CHECK(hilbert_function(mini, 7) == before);
        CHECK(mini.ngens <= built.module.ngens);
    }
}
