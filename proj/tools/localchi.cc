/**
 * @file localchi.cc
 * @brief Command-line front end: invariant reports, scans, and ring info.
 */
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "localchi/localchi.hh"

using namespace localchi;
using ordered_json = nlohmann::ordered_json;

namespace {

// ===== run configuration =====

struct run_config {
    int k = 1;
    int j = 0;
    int jmax = 0;
    std::string j_range; // scan accepts "A..B" or a single value
    std::string p_text;
    std::string field = "q";
    std::string rmax = "auto";
    std::string format = "text";
    int samples = 5;
    std::uint64_t seed = 0;
    bool quiet = false;
    bool unsafe_no_confirm = false;
};

int parse_rmax(const std::string& text)
{
    if (text == "auto")
        return 0;
    try {
        size_t used = 0;
        int r = std::stoi(text, &used);
        if (used != text.size() || r < 1)
            throw validation_error("truncation override must be 'auto' or an integer >= 1");
        return r;
    } catch (const std::exception&) {
        throw validation_error("truncation override must be 'auto' or an integer >= 1");
    }
}

std::pair<int, int> parse_j_range(const std::string& text)
{
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            size_t used = 0;
            int j = std::stoi(text, &used);
            if (used != text.size())
                throw validation_error("");
            return {j, j};
        }
        size_t ua = 0, ub = 0;
        std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        int a = std::stoi(lo, &ua), b = std::stoi(hi, &ub);
        if (ua != lo.size() || ub != hi.size())
            throw validation_error("");
        return {a, b};
    } catch (const std::exception&) {
        throw validation_error("twist range must be an integer or A..B, got '" + text + "'");
    }
}

// ===== report serialisation =====

ordered_json report_json(const invariant_report& r)
{
    ordered_json o;
    o["k"] = r.k;
    o["j"] = r.j;
    o["p"] = class_to_string(r.p);
    o["width"] = r.width;
    o["height"] = r.height;
    o["chi"] = r.chi;
    o["is_instanton"] = r.instanton;
    o["split_class"] = r.split_cls;
    o["R_used"] = r.r_used;
    o["stabilized"] = r.stabilized;
    o["height_method"] = r.height_method;
    return o;
}

const char* csv_header = "k,j,p,width,height,chi,instanton,R_used";

std::string report_csv_row(const invariant_report& r)
{
    return std::to_string(r.k) + "," + std::to_string(r.j) + ",\"" + class_to_string(r.p)
           + "\"," + std::to_string(r.width) + "," + std::to_string(r.height) + ","
           + std::to_string(r.chi) + "," + (r.instanton ? "1" : "0") + ","
           + std::to_string(r.r_used);
}

void print_report_text(const invariant_report& r)
{
    std::printf("k=%d j=%d p=%s\n", r.k, r.j, class_to_string(r.p).c_str());
    std::printf("  width         %ld\n", r.width);
    std::printf("  height        %ld  (%s)\n", r.height, r.height_method.c_str());
    std::printf("  chi           %ld\n", r.chi);
    std::printf("  instanton     %s  (class %d mod %d)\n", r.instanton ? "yes" : "no",
                r.split_cls, r.k);
    std::printf("  R_used        %d%s\n", r.r_used, r.stabilized ? " (stabilized)" : "");
}

// ===== prime-field confirmation =====

void confirm_over_rationals(const invariant_report& g, int k, int j, const raw_poly& p,
                            int rmax)
{
    auto q = local_charge<rational>(k, j, p, rmax);
    if (q.width != g.width || q.height != g.height || q.chi != g.chi)
        throw crosscheck_error(
            "prime-field result differs from the rational confirmation pass: got (w="
            + std::to_string(g.width) + ", h=" + std::to_string(g.height)
            + ", chi=" + std::to_string(g.chi) + ") vs (w=" + std::to_string(q.width)
            + ", h=" + std::to_string(q.height) + ", chi=" + std::to_string(q.chi) + ")");
}

invariant_report run_charge(const run_config& cfg, int k, int j, const raw_poly& p)
{
    int rmax = parse_rmax(cfg.rmax);
    if (cfg.field == "q")
        return local_charge<rational>(k, j, p, rmax);
    auto rep = local_charge<gfp>(k, j, p, rmax);
    if (!cfg.unsafe_no_confirm)
        confirm_over_rationals(rep, k, j, p, rmax);
    return rep;
}

// ===== subcommands =====

int cmd_chi(const run_config& cfg)
{
    raw_poly p = cfg.p_text.empty() ? raw_poly::zero() : parse_class(cfg.p_text);
    auto rep = run_charge(cfg, cfg.k, cfg.j, p);
    if (cfg.quiet)
        return 0;
    if (cfg.format == "json")
        std::printf("%s\n", report_json(rep).dump(2).c_str());
    else if (cfg.format == "csv")
        std::printf("%s\n%s\n", csv_header, report_csv_row(rep).c_str());
    else
        print_report_text(rep);
    return 0;
}

int cmd_scan(const run_config& cfg)
{
    auto [jlo, jhi] = parse_j_range(cfg.j_range);
    class_sampler sampler(cfg.seed);
    std::vector<invariant_report> rows;
    for (int j = jlo; j <= jhi; ++j) {
        for (int i = 0; i < cfg.samples; ++i) {
            raw_poly p = sample_class(cfg.k, j, i, sampler);
            rows.push_back(run_charge(cfg, cfg.k, j, p));
        }
    }
    if (cfg.quiet)
        return 0;
    if (cfg.format == "json") {
        ordered_json o = ordered_json::array();
        for (auto& r : rows)
            o.push_back(report_json(r));
        std::printf("%s\n", o.dump(2).c_str());
    } else if (cfg.format == "csv") {
        std::printf("%s\n", csv_header);
        for (auto& r : rows)
            std::printf("%s\n", report_csv_row(r).c_str());
    } else {
        std::printf("%4s %4s %6s %6s %6s %5s %7s  %s\n", "j", "#", "width", "height", "chi",
                    "inst", "R_used", "p");
        for (size_t i = 0; i < rows.size(); ++i) {
            auto& r = rows[i];
            std::printf("%4d %4d %6ld %6ld %6ld %5s %7d  %s\n", r.j,
                        (int)(i % (cfg.samples > 0 ? cfg.samples : 1)), r.width, r.height,
                        r.chi, r.instanton ? "yes" : "no", r.r_used,
                        class_to_string(r.p).c_str());
        }
    }
    return 0;
}

int cmd_gaps(const run_config& cfg)
{
    gap_report rep;
    if (cfg.field == "q") {
        rep = gap_scan<rational>(cfg.k, cfg.jmax, cfg.samples, cfg.seed);
    } else {
        rep = gap_scan<gfp>(cfg.k, cfg.jmax, cfg.samples, cfg.seed);
        if (!cfg.unsafe_no_confirm) {
            auto conf = gap_scan<rational>(cfg.k, cfg.jmax, cfg.samples, cfg.seed);
            if (conf.min_chi != rep.min_chi || conf.pass != rep.pass)
                throw crosscheck_error(
                    "prime-field scan differs from the rational confirmation pass");
        }
    }
    const gap_row* violator = nullptr;
    for (auto& row : rep.rows)
        if (row.rep.chi < min_charge(cfg.k)) {
            violator = &row;
            break;
        }
    if (!cfg.quiet) {
        if (cfg.format == "json") {
            ordered_json o;
            o["k"] = rep.k;
            o["jmax"] = rep.jmax;
            o["samples"] = rep.samples;
            o["seed"] = rep.seed;
            o["min_chi"] = rep.min_chi;
            o["bound"] = min_charge(cfg.k);
            o["pass"] = rep.pass;
            ordered_json rows = ordered_json::array();
            for (auto& row : rep.rows)
                rows.push_back(report_json(row.rep));
            o["rows"] = rows;
            std::printf("%s\n", o.dump(2).c_str());
        } else if (cfg.format == "csv") {
            std::printf("%s\n", csv_header);
            for (auto& row : rep.rows)
                std::printf("%s\n", report_csv_row(row.rep).c_str());
        } else {
            for (auto& row : rep.rows)
                std::printf("  j=%-3d #%-2d chi=%-4ld %s\n", row.rep.j, row.sample_index,
                            row.rep.chi, class_to_string(row.rep.p).c_str());
            if (rep.pass)
                std::printf("PASS: minimum chi %ld over twists %d..%d (bound %ld)\n",
                            rep.min_chi, rep.k, rep.jmax, min_charge(cfg.k));
            else if (violator)
                std::printf("FAIL: chi %ld < %ld at k=%d j=%d #%d p=%s\n", violator->rep.chi,
                            min_charge(cfg.k), violator->rep.k, violator->rep.j,
                            violator->sample_index, class_to_string(violator->rep.p).c_str());
            else
                std::printf("FAIL: empty scan\n");
        }
    }
    return rep.pass ? 0 : 1;
}

int cmd_extdim(const run_config& cfg)
{
    long count = ext_param_count(cfg.k, cfg.j);
    auto slots = class_support(cfg.k, cfg.j);
    if (cfg.quiet)
        return 0;
    if (cfg.format == "json") {
        ordered_json o;
        o["k"] = cfg.k;
        o["j"] = cfg.j;
        o["count"] = count;
        ordered_json sl = ordered_json::array();
        for (auto& [r, s] : slots)
            sl.push_back({r, s});
        o["slots"] = sl;
        std::printf("%s\n", o.dump(2).c_str());
    } else {
        std::printf("count %ld\n", count);
        std::string line;
        for (auto& [r, s] : slots)
            line += (line.empty() ? "" : ", ") + ("(" + std::to_string(r) + ","
                    + std::to_string(s) + ")");
        std::printf("slots [%s]\n", line.c_str());
    }
    return 0;
}

int cmd_elm(const run_config& cfg)
{
    raw_poly p = cfg.p_text.empty() ? raw_poly::zero() : parse_class(cfg.p_text);
    auto b = make_bundle<rational>(cfg.k, cfg.j, p);
    auto e = elementary_transform(b);
    int split = splitting_type(transition_matrix(e));
    if (cfg.quiet)
        return 0;
    if (cfg.format == "json") {
        ordered_json o;
        o["k"] = e.k;
        o["j"] = e.j;
        o["p"] = class_to_string(e.p);
        o["splitting_type"] = split;
        o["split_class"] = split_class(e);
        std::printf("%s\n", o.dump(2).c_str());
    } else {
        std::printf("k=%d j=%d p=%s\n", e.k, e.j, class_to_string(e.p).c_str());
        std::printf("splitting type %d, class %d mod %d\n", split, split_class(e), e.k);
    }
    return 0;
}

std::string relation_str(const mvec<rational>& v, const std::vector<std::string>& names)
{
    std::string out;
    for (auto& t : v.terms()) {
        bool neg = t.c.raw() < 0;
        rational mag = neg ? rational::zero() - t.c : t.c;
        std::string piece = t.m.str(names);
        if (mag.str() != "1")
            piece = mag.str() + "*" + piece;
        if (out.empty())
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

int cmd_ring(const run_config& cfg)
{
    auto ring = make_cone_ring<rational>(cfg.k);
    if (cfg.quiet)
        return 0;
    if (cfg.format == "json") {
        ordered_json o;
        o["k"] = cfg.k;
        ordered_json rels = ordered_json::array();
        for (auto& r : ring->relations)
            rels.push_back(relation_str(r, ring->names));
        o["relations"] = rels;
        ordered_json subs = ordered_json::object();
        for (int i = 0; i <= cfg.k; ++i)
            subs[ring->names[i]] = class_to_string(
                raw_poly::monomial(1, i, rational::one()));
        o["substitutions"] = subs;
        std::printf("%s\n", o.dump(2).c_str());
    } else {
        std::printf("ring k=%d: %d variables", cfg.k, cfg.k + 1);
        std::printf(", %zu relations\n", ring->relations.size());
        for (auto& r : ring->relations)
            std::printf("  %s\n", relation_str(r, ring->names).c_str());
        for (int i = 0; i <= cfg.k; ++i)
            std::printf("  %s -> %s\n", ring->names[i].c_str(),
                        class_to_string(raw_poly::monomial(1, i, rational::one())).c_str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    run_config cfg;
    CLI::App app{"local invariants of rank-2 bundles on the resolved cone"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--field", cfg.field, "coefficient field")
        ->check(CLI::IsMember({"q", "gfp"}));
    app.add_option("--rmax", cfg.rmax, "truncation level override (auto or N >= 1)");
    app.add_option("--seed", cfg.seed, "sampling seed");
    app.add_option("--samples", cfg.samples, "samples per twist");
    app.add_flag("--quiet", cfg.quiet, "suppress output, use exit codes only");
    app.add_flag("--unsafe-no-confirm", cfg.unsafe_no_confirm,
                 "skip the rational confirmation pass in prime-field mode");

    auto* chi = app.add_subcommand("chi", "invariants of one bundle");
    chi->add_option("--k", cfg.k, "cone degree")->required();
    chi->add_option("--j", cfg.j, "twist")->required();
    chi->add_option("--p", cfg.p_text, "extension class (default 0)");

    auto* scan = app.add_subcommand("scan", "invariants over a twist range");
    scan->add_option("--k", cfg.k, "cone degree")->required();
    scan->add_option("--j", cfg.j_range, "twist or twist range A..B")->required();

    auto* gaps = app.add_subcommand("gaps", "charge-gap bound check");
    gaps->add_option("--k", cfg.k, "cone degree")->required();
    gaps->add_option("--jmax", cfg.jmax, "scan ceiling")->required();

    auto* extdim = app.add_subcommand("extdim", "extension class parameter count");
    extdim->add_option("--k", cfg.k, "cone degree")->required();
    extdim->add_option("--j", cfg.j, "twist")->required();

    auto* elm = app.add_subcommand("elm", "elementary transform of a bundle");
    elm->add_option("--k", cfg.k, "cone degree")->required();
    elm->add_option("--j", cfg.j, "twist")->required();
    elm->add_option("--p", cfg.p_text, "extension class (default 0)");

    auto* ring = app.add_subcommand("ring", "cone ring presentation");
    ring->add_option("--k", cfg.k, "cone degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (chi->parsed())
            return cmd_chi(cfg);
        if (scan->parsed())
            return cmd_scan(cfg);
        if (gaps->parsed())
            return cmd_gaps(cfg);
        if (extdim->parsed())
            return cmd_extdim(cfg);
        if (elm->parsed())
            return cmd_elm(cfg);
        if (ring->parsed())
            return cmd_ring(cfg);
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const stabilization_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const divergence_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const crosscheck_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
    return 0;
}
