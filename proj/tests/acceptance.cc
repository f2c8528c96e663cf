/**
 * @file acceptance.cc
 * @brief Release gate: one pass/fail line per criterion, nonzero exit on any failure.
 */
#include <array>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "localchi/localchi.hh"

#ifndef LOCALCHI_CLI
#error "LOCALCHI_CLI must point at the command binary"
#endif

using namespace localchi;
using nlohmann::json;
using F = rational;

namespace {

// ===== helpers =====

struct run_result {
    int code = -1;
    std::string out;
};

run_result run_cli(const std::string& args)
{
    run_result res;
    std::string cmd = std::string(LOCALCHI_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        res.out = "popen failed";
        return res;
    }
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        res.out.append(buf.data(), n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// every bundle measured under criteria 1-4, kept for the stabilisation re-run
struct instance {
    int k, j;
    raw_poly p;
    long width, height, chi;
    int r_used;
};

std::vector<instance> measured;
std::set<std::string> measured_keys;

void record(const invariant_report& r)
{
    std::string key = std::to_string(r.k) + "|" + std::to_string(r.j) + "|"
                      + class_to_string(r.p);
    if (!measured_keys.insert(key).second)
        return;
    measured.push_back({r.k, r.j, r.p, r.width, r.height, r.chi, r.r_used});
}

void record_json(const json& o)
{
    invariant_report r;
    r.k = o["k"].get<int>();
    r.j = o["j"].get<int>();
    r.p = parse_class(o["p"].get<std::string>());
    r.width = o["width"].get<long>();
    r.height = o["height"].get<long>();
    r.chi = o["chi"].get<long>();
    r.r_used = o["R_used"].get<int>();
    record(r);
}

mvec<F> row(std::shared_ptr<const cone_ring<F>> ring,
            std::vector<std::tuple<int, std::vector<int>, long>> ts)
{
    std::vector<term<F>> out;
    for (auto& [slot, e, c] : ts)
        out.push_back({slot, monomial(e), F::from_fraction(c, 1)});
    return normalize(std::move(out), ring->ord);
}

std::string hf_str(const std::vector<long>& hf)
{
    std::string s;
    for (long v : hf)
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

// ===== criteria =====

struct verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        pass = false;
        detail = detail.empty() ? why : detail + "; " + why;
    }
};

// minimal nontrivial instantons: chi(k, k, zu) = (0) + (k-1) for k = 2..5
verdict criterion1()
{
    verdict v;
    for (int k = 2; k <= 5; ++k) {
        auto r = run_cli("chi --k " + std::to_string(k) + " --j " + std::to_string(k)
                         + " --p z*u --format json");
        if (r.code != 0) {
            v.fail("k=" + std::to_string(k) + " exited " + std::to_string(r.code));
            continue;
        }
        auto o = json::parse(r.out, nullptr, false);
        if (o.is_discarded()) {
            v.fail("k=" + std::to_string(k) + " produced unparsable output");
            continue;
        }
        long w = o["width"].get<long>(), h = o["height"].get<long>(),
             chi = o["chi"].get<long>();
        if (w != 0 || h != k - 1 || chi != k - 1)
            v.fail("k=" + std::to_string(k) + " got (w,h,chi)=(" + std::to_string(w) + ","
                   + std::to_string(h) + "," + std::to_string(chi) + ")");
        else
            record_json(o);
    }
    if (v.pass)
        v.detail = "chi(k,k,zu) = (0, k-1, k-1) for k = 2..5 via the command line";
    return v;
}

// split bundles below the cone degree: width 0 and chi = max(j-1, 0)
verdict criterion2()
{
    verdict v;
    int count = 0;
    for (int k = 2; k <= 5; ++k)
        for (int j = 0; j < k; ++j) {
            auto rep = local_charge<F>(k, j, raw_poly::zero());
            long want = j >= 1 ? j - 1 : 0;
            if (rep.width != 0 || rep.chi != want) {
                v.fail("(" + std::to_string(k) + "," + std::to_string(j) + ") got (w,chi)=("
                       + std::to_string(rep.width) + "," + std::to_string(rep.chi) + ")");
                continue;
            }
            record(rep);
            ++count;
        }
    if (v.pass)
        v.detail = "width 0 and chi = j-1 (j >= 1) or 0 (j = 0) on all "
                   + std::to_string(count) + " split bundles, k = 2..5";
    return v;
}

// height formula against the cohomology computation over the sampling grid
verdict criterion3()
{
    verdict v;
    class_sampler sampler(7);
    int eq_checked = 0, bound_checked = 0;
    for (int k = 2; k <= 4; ++k)
        for (int j = k; j <= 2 * k; ++j) {
            std::vector<raw_poly> draws;
            for (int i = 0; i < 6; ++i)
                draws.push_back(sample_class(k, j, i, sampler));

            // the closed form is exact only for classes holomorphic on the
            // surface, so the equality half samples inside that window
            std::vector<raw_poly> holo;
            std::set<std::string> seen;
            auto admissible = [&](const raw_poly& cand) {
                for (auto& t : cand.terms())
                    if (t.r < 1 || k * t.r > 2 * j - 2 || t.s < k * t.r - j + 1
                        || t.s > j - 1)
                        return false;
                return true;
            };
            auto push_holo = [&](const raw_poly& cand) {
                if ((int)holo.size() >= 3 || cand.is_zero())
                    return;
                if (!holomorphic_on_surface(cand, k) || !admissible(cand))
                    return;
                if (seen.insert(class_to_string(cand)).second)
                    holo.push_back(cand);
            };
            for (int i = 1; i < 6; ++i) {
                std::vector<zuterm<F>> keep;
                for (auto& t : draws[i].terms())
                    if (t.s >= 0 && t.s <= k * t.r)
                        keep.push_back(t);
                push_holo(raw_poly::from_terms(std::move(keep)));
            }
            push_holo(parse_class("z*u"));
            push_holo(raw_poly::monomial(1, std::min(k, j - 1), F::one()));
            push_holo(parse_class("z*u + z^2*u"));
            if ((int)holo.size() < 3) {
                v.fail("(" + std::to_string(k) + "," + std::to_string(j)
                       + ") found only " + std::to_string(holo.size())
                       + " holomorphic samples");
                continue;
            }

            for (auto& p : holo) {
                auto rep = local_charge<F>(k, j, p);
                auto b = make_bundle<F>(k, j, make_zupoly<F>(p));
                if (rep.height != height_closed_form(b)
                    || rep.height_method != "closed_form")
                    v.fail("equality failed at (" + std::to_string(k) + ","
                           + std::to_string(j) + "," + class_to_string(p) + ")");
                record(rep);
                ++eq_checked;
            }

            // raw window samples (negative or second-chart-polar powers) must
            // still respect the closed form as a lower bound
            for (int i : {0, 2}) {
                if (draws[i].is_zero() || holomorphic_on_surface(draws[i], k))
                    continue;
                auto rep = local_charge<F>(k, j, draws[i]);
                auto b = make_bundle<F>(k, j, make_zupoly<F>(draws[i]));
                if (rep.height < height_closed_form(b))
                    v.fail("bound failed at (" + std::to_string(k) + ","
                           + std::to_string(j) + "," + class_to_string(draws[i]) + ")");
                record(rep);
                ++bound_checked;
            }

            auto split = local_charge<F>(k, j, raw_poly::zero());
            if (split.height != height_split(k, j)
                || split.height_method != "split_formula")
                v.fail("split height failed at (" + std::to_string(k) + ","
                       + std::to_string(j) + ")");
            record(split);
        }
    if (v.pass)
        v.detail = "closed form = direct on " + std::to_string(eq_checked)
                   + " holomorphic samples (equality needs holomorphy; "
                   + std::to_string(bound_checked)
                   + " raw window samples satisfy it as a lower bound), split formula on "
                     "the full grid";
    return v;
}

// gap scans at the spec'd seeds PASS with minimum chi exactly k-1
verdict criterion4()
{
    verdict v;
    for (int k : {3, 4}) {
        int jmax = k == 3 ? 6 : 4;
        auto r = run_cli("gaps --k " + std::to_string(k) + " --jmax " + std::to_string(jmax)
                         + " --samples 5 --seed 7 --format json");
        if (r.code != 0) {
            v.fail("k=" + std::to_string(k) + " exited " + std::to_string(r.code));
            continue;
        }
        auto o = json::parse(r.out, nullptr, false);
        if (o.is_discarded()) {
            v.fail("k=" + std::to_string(k) + " produced unparsable output");
            continue;
        }
        if (!o["pass"].get<bool>() || o["min_chi"].get<long>() != k - 1) {
            v.fail("k=" + std::to_string(k) + " pass=" + o["pass"].dump() + " min_chi="
                   + o["min_chi"].dump());
            continue;
        }
        for (auto& entry : o["rows"])
            record_json(entry);
    }
    if (v.pass)
        v.detail = "gaps --k 3 --jmax 6 and --k 4 --jmax 4 (5 samples, seed 7) both PASS "
                   "with minimum chi k-1";
    return v;
}

// the built section module of the minimal k=2 instanton matches the explicit
// presentation; ev onto the double dual is surjective
verdict criterion5()
{
    verdict v;
    auto b = make_bundle<F>(2, 2, make_zupoly<F>(parse_class("z*u")));
    auto stab = stabilized_presentation(b);
    int upto = stab.r_used;
    auto built = hilbert_function(stab.minimized, upto);

    auto ring = make_cone_ring<F>(2);
    std::vector<int> shifts = {1, 0, 0, 0};
    std::vector<std::string> labels = {"a", "b0", "b1", "b2"};
    mvec<F> r1 = row(ring, {{2, {1, 0, 0}, 1}, {1, {0, 1, 0}, -1}});
    mvec<F> r2 = row(ring, {{3, {1, 0, 0}, 1}, {2, {0, 1, 0}, -1}, {0, {0, 1, 0}, -1}});
    mvec<F> r3 = row(ring, {{1, {0, 0, 1}, 1}, {2, {0, 1, 0}, -1}});
    mvec<F> r4 = row(ring, {{3, {0, 1, 0}, 1}, {2, {0, 0, 1}, -1}, {0, {0, 0, 1}, -1}});

    // the two chart relations r1, r2 alone present a strictly larger module;
    // the companion pair r3, r4 from the other chart completes the list
    auto partial = make_module<F>(ring, shifts, labels, {r1, r2});
    auto full = make_module<F>(ring, shifts, labels, {r1, r2, r3, r4});
    auto hf_partial = hilbert_function(partial, upto);
    auto hf_full = hilbert_function(full, upto);

    if (hf_full != built)
        v.fail("explicit presentation HF [" + hf_str(hf_full) + "] != built ["
               + hf_str(built) + "]");
    if (hf_partial == built)
        v.fail("two-relation form unexpectedly matched; completion check is vacuous");

    auto dd = double_dual_with_ev(stab.minimized);
    if (finite_length(dd.ev_coker) != 0)
        v.fail("ev is not surjective");
    if (v.pass)
        v.detail = "built module HF [" + hf_str(built)
                   + "] equals the explicit presentation completed to four relations "
                     "(the bare two-relation transcription gives ["
                   + hf_str(hf_partial) + "]); ev surjective";
    return v;
}

// structural invariants: certified bases, idempotent normal forms, reflexive
// double duals, chi additivity, unimodular transitions, transform laws
verdict criterion6()
{
    verdict v;
    for (int k = 2; k <= 5; ++k) {
        auto ring = make_cone_ring<F>(k);
        if (!is_groebner(ring->ideal_gb, ring->ord))
            v.fail("cone ideal basis k=" + std::to_string(k) + " failed the S-pair test");
    }
    {
        auto b = make_bundle<F>(2, 2, make_zupoly<F>(parse_class("z*u")));
        auto stab = stabilized_presentation(b);
        auto gb = presentation_gb(stab.minimized, stab.minimized.ring->ord);
        if (!is_groebner(gb, stab.minimized.ring->ord))
            v.fail("presentation basis (2,2,zu) failed the S-pair test");

        auto dd = double_dual_with_ev(stab.minimized);
        auto dd2 = double_dual_with_ev(dd.ddual);
        if (!dd2.ev_injective || finite_length(dd2.ev_coker) != 0)
            v.fail("double dual of (2,2,zu) is not reflexive");
    }
    {
        auto plane = make_cone_ring<F>(1);
        auto ideal = make_module<F>(plane, {0, 0}, {"g0", "g1"},
                                    {row(plane, {{0, {0, 1}, 1}, {1, {1, 0}, -1}})});
        auto dd = double_dual_with_ev(ideal);
        auto dd2 = double_dual_with_ev(dd.ddual);
        if (!dd2.ev_injective || finite_length(dd2.ev_coker) != 0)
            v.fail("double dual of the maximal ideal is not reflexive");
    }

    std::mt19937 rng(11);
    for (int k = 2; k <= 4; ++k) {
        auto ring = make_cone_ring<F>(k);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<term<F>> ts;
            for (int t = 0; t < 4; ++t) {
                std::vector<int> exps(ring->nvars());
                for (auto& e : exps)
                    e = (int)(rng() % 3);
                long c = (long)(rng() % 9) - 4;
                ts.push_back({0, monomial(exps), F::from_fraction(c ? c : 5, 1)});
            }
            mvec<F> f = normalize(std::move(ts), ring->ord);
            mvec<F> nf1 = normal_form(f, ring->ideal_gb, ring->ord);
            mvec<F> nf2 = normal_form(nf1, ring->ideal_gb, ring->ord);
            if (!(nf1 == nf2)) {
                v.fail("normal form is not idempotent at k=" + std::to_string(k));
                break;
            }
        }
    }

    for (auto& inst : measured) {
        if (inst.chi != inst.width + inst.height)
            v.fail("chi != w + h at (" + std::to_string(inst.k) + ","
                   + std::to_string(inst.j) + "," + class_to_string(inst.p) + ")");
        if (inst.k <= 4) {
            auto b = make_bundle<F>(inst.k, inst.j, make_zupoly<F>(inst.p));
            auto t = transition_matrix(b);
            if (!(t.a * t.d - t.b * t.c == zupoly<F>::constant(F::one())))
                v.fail("det != 1 at (" + std::to_string(inst.k) + ","
                       + std::to_string(inst.j) + "," + class_to_string(inst.p) + ")");
        }
    }

    int elms = 0;
    for (int k = 2; k <= 4; ++k)
        for (int j = k; j <= k + 1; ++j)
            for (auto* ps : {"z*u", "0"}) {
                raw_poly p = parse_class(ps);
                auto b = make_bundle<F>(k, j, make_zupoly<F>(p));
                auto e = elementary_transform(b);
                if (splitting_type(transition_matrix(e)) != j + k)
                    v.fail("transform splitting type off at (" + std::to_string(k) + ","
                           + std::to_string(j) + "," + ps + ")");
                if (split_class(e) != split_class(b))
                    v.fail("transform changed the class mod k at (" + std::to_string(k)
                           + "," + std::to_string(j) + "," + ps + ")");
                ++elms;
            }

    if (v.pass)
        v.detail = "S-pair certificates, idempotent normal forms, reflexive double "
                   "duals, chi = w + h and det T = 1 on "
                   + std::to_string(measured.size()) + " instances, "
                   + std::to_string(elms) + " elementary transforms verified";
    return v;
}

// every instance measured under criteria 1-4 keeps (w, h, chi) at R_used + 1
verdict criterion7()
{
    verdict v;
    int reran = 0;
    for (auto& inst : measured) {
        auto rep = local_charge<F>(inst.k, inst.j, inst.p, inst.r_used + 1);
        if (rep.width != inst.width || rep.height != inst.height || rep.chi != inst.chi) {
            v.fail("(" + std::to_string(inst.k) + "," + std::to_string(inst.j) + ","
                   + class_to_string(inst.p) + ") moved to (w,h,chi)=("
                   + std::to_string(rep.width) + "," + std::to_string(rep.height) + ","
                   + std::to_string(rep.chi) + ") at R=" + std::to_string(inst.r_used + 1));
            continue;
        }
        ++reran;
    }
    if (v.pass)
        v.detail = "all " + std::to_string(reran)
                   + " measured instances unchanged at truncation R_used + 1";
    return v;
}

// extension parameter counts against independent enumeration; moduli dimension
verdict criterion8()
{
    verdict v;
    for (int k = 1; k <= 5; ++k)
        for (int j = 0; j <= 10; ++j) {
            long brute = 0;
            for (int r = 1; r <= 2 * j; ++r)
                for (int s = -2 * j - k; s <= 2 * j + k; ++s)
                    if (k * r <= 2 * j - 2 && s >= k * r - j + 1 && s <= j - 1)
                        ++brute;
            if (ext_param_count(k, j) != brute)
                v.fail("count mismatch at (" + std::to_string(k) + "," + std::to_string(j)
                       + "): " + std::to_string(ext_param_count(k, j)) + " vs brute "
                       + std::to_string(brute));
            if ((long)class_support(k, j).size() != brute)
                v.fail("support enumeration mismatch at (" + std::to_string(k) + ","
                       + std::to_string(j) + ")");
        }
    for (int k = 2; k <= 6; ++k)
        if (moduli_dim(k, k) != k - 2)
            v.fail("moduli_dim(" + std::to_string(k) + "," + std::to_string(k)
                   + ") != " + std::to_string(k - 2));
    if (v.pass)
        v.detail = "ext_param_count = enumeration for k <= 5, j <= 10; "
                   "moduli_dim(k,k) = k-2 for k = 2..6";
    return v;
}

} // namespace

int main()
{
    int failures = 0;
    verdict (*criteria[])() = {criterion1, criterion2, criterion3, criterion4,
                               criterion5, criterion6, criterion7, criterion8};
    for (int i = 0; i < 8; ++i) {
        verdict v;
        try {
            v = criteria[i]();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %d: %s (%s)\n", i + 1, v.pass ? "PASS" : "FAIL",
                    v.detail.c_str());
        std::fflush(stdout);
        if (!v.pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
