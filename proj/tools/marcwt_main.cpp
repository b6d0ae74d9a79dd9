#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "marcwt/gauss_regions.hpp"
#include "marcwt/json_io.hpp"
#include "marcwt/region_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json scenario_params(const marcwt::GaussianScenario& s) {
    return {{"p1", s.p1}, {"p2", s.p2}, {"pr", s.pr}, {"nr", s.nr}, {"n1", s.n1}, {"n2", s.n2}};
}

struct StrategyOutput {
    marcwt::RateRegion region;
    json report;
};

StrategyOutput run_df(const marcwt::GaussianScenario& s, int gamma_steps) {
    const marcwt::RateRegion r = marcwt::df_region(s, gamma_steps);
    json params = scenario_params(s);
    params["gamma_steps"] = gamma_steps;
    return {r, marcwt::region_report("df", "", true, r, std::move(params))};
}

StrategyOutput run_nf(const marcwt::GaussianScenario& s) {
    const marcwt::NfResult nf = marcwt::nf_region(s);
    const marcwt::RateRegion r = marcwt::pentagon_vertices(nf.pentagon);
    return {r, marcwt::region_report("nf", marcwt::to_string(nf.branch), true, r, scenario_params(s))};
}

StrategyOutput run_cf(const marcwt::GaussianScenario& s, double q, int rstar_steps) {
    const marcwt::CfResult cf = marcwt::cf_region(s, q, rstar_steps);
    json params = scenario_params(s);
    params["q"] = q;
    params["r_star_steps"] = rstar_steps;
    return {cf.region,
            marcwt::region_report("cf", marcwt::to_string(cf.branch), cf.feasible, cf.region,
                                  std::move(params))};
}

StrategyOutput run_outer(const marcwt::GaussianScenario& s, int outer_steps) {
    const marcwt::RateRegion r = marcwt::outer_region(s, outer_steps);
    json params = scenario_params(s);
    params["outer_steps"] = outer_steps;
    return {r, marcwt::region_report("outer", "", true, r, std::move(params))};
}

StrategyOutput run_baseline(const marcwt::GaussianScenario& s) {
    const marcwt::RateRegion r = marcwt::pentagon_vertices(marcwt::baseline_region(s));
    return {r, marcwt::region_report("baseline", "", true, r, scenario_params(s))};
}

void write_strategy(const std::string& dir, const std::string& name, const StrategyOutput& out) {
    fs::create_directories(dir);
    marcwt::atomic_write_file((fs::path(dir) / (name + ".csv")).string(),
                              marcwt::region_to_csv(out.region));
    marcwt::atomic_write_file((fs::path(dir) / (name + ".json")).string(), out.report.dump(2) + "\n");
    std::printf("%s: area %.6f bits^2, %zu vertices -> %s/%s.{csv,json}\n", name.c_str(),
                marcwt::area(out.region), out.region.vertices().size(), dir.c_str(), name.c_str());
}

struct GaussOptions {
    std::string strategy;
    double p1 = 0, p2 = 0, pr = 0, nr = 0, n1 = 0, n2 = 0, q = 0;
    bool has_q = false;
    int gamma_steps = 101, outer_steps = 11, rstar_steps = 21;
    std::string out_dir;
};

int cmd_gauss(const GaussOptions& o) {
    const marcwt::GaussianScenario s{o.p1, o.p2, o.pr, o.nr, o.n1, o.n2};
    s.validate();
    const bool wants_cf = o.strategy == "cf" || o.strategy == "all";
    if (wants_cf && !o.has_q)
        throw std::domain_error("--q is required for the cf strategy");
    if (o.strategy == "df" || o.strategy == "all") write_strategy(o.out_dir, "df", run_df(s, o.gamma_steps));
    if (o.strategy == "nf" || o.strategy == "all") write_strategy(o.out_dir, "nf", run_nf(s));
    if (wants_cf) write_strategy(o.out_dir, "cf", run_cf(s, o.q, o.rstar_steps));
    if (o.strategy == "outer" || o.strategy == "all")
        write_strategy(o.out_dir, "outer", run_outer(s, o.outer_steps));
    if (o.strategy == "baseline" || o.strategy == "all")
        write_strategy(o.out_dir, "baseline", run_baseline(s));
    return 0;
}

int cmd_figure(int id, const std::string& out_dir) {
    const marcwt::GaussianScenario s = marcwt::figure_scenario(id);
    const StrategyOutput df = run_df(s, 101);
    const StrategyOutput nf = run_nf(s);
    const StrategyOutput cf = run_cf(s, marcwt::kFigureQ, 21);
    const StrategyOutput outer = run_outer(s, 11);
    const StrategyOutput baseline = run_baseline(s);
    write_strategy(out_dir, "df", df);
    write_strategy(out_dir, "nf", nf);
    write_strategy(out_dir, "cf", cf);
    write_strategy(out_dir, "outer", outer);
    write_strategy(out_dir, "baseline", baseline);
    char title[96];
    std::snprintf(title, sizeof(title), "secrecy rate regions, relay observation noise nr = %g", s.nr);
    const std::string svg = marcwt::render_regions_svg({{"outer", outer.region},
                                                        {"nf", nf.region},
                                                        {"cf", cf.region},
                                                        {"df", df.region},
                                                        {"baseline", baseline.region}},
                                                       title);
    const std::string svg_name = "figure" + std::to_string(id) + ".svg";
    marcwt::atomic_write_file((fs::path(out_dir) / svg_name).string(), svg);
    std::printf("plot -> %s/%s\n", out_dir.c_str(), svg_name.c_str());
    return 0;
}

int cmd_dm(const std::string& spec_path, const std::string& out_dir) {
    const std::string text = marcwt::read_file(spec_path);
    const json doc = json::parse(text);
    const marcwt::DmFactorization f = marcwt::dm_from_json(doc);
    marcwt::RateRegion region;
    std::string branch;
    bool feasible = true;
    json params{{"theorem", marcwt::to_string(f.theorem)}};
    switch (f.theorem) {
        case marcwt::DmTheorem::T1:
            region = marcwt::pentagon_vertices(marcwt::theorem1_pentagon(f));
            break;
        case marcwt::DmTheorem::T2: {
            const marcwt::Theorem2Result r = marcwt::theorem2_region(f);
            region = marcwt::pentagon_vertices(r.pentagon);
            branch = marcwt::to_string(r.branch);
            break;
        }
        case marcwt::DmTheorem::T3: {
            const marcwt::Theorem3Result r = marcwt::theorem3_region(f);
            region = r.feasible ? marcwt::pentagon_vertices(r.pentagon) : marcwt::RateRegion::empty_region();
            branch = marcwt::to_string(r.branch);
            feasible = r.feasible;
            params["r_star"] = f.r_star;
            break;
        }
        case marcwt::DmTheorem::T41:
            region = marcwt::pentagon_vertices(marcwt::theorem41_outer(f));
            break;
    }
    fs::create_directories(out_dir);
    marcwt::atomic_write_file((fs::path(out_dir) / "region.csv").string(), marcwt::region_to_csv(region));
    const json report =
        marcwt::region_report(marcwt::to_string(f.theorem), branch, feasible, region, std::move(params));
    marcwt::atomic_write_file((fs::path(out_dir) / "report.json").string(), report.dump(2) + "\n");
    std::printf("%s: area %.6f bits^2, %zu vertices -> %s/region.csv\n", marcwt::to_string(f.theorem),
                marcwt::area(region), region.vertices().size(), out_dir.c_str());
    return 0;
}

int cmd_compare(const std::string& path_a, const std::string& path_b) {
    const marcwt::RateRegion a = marcwt::region_from_csv(marcwt::read_file(path_a));
    const marcwt::RateRegion b = marcwt::region_from_csv(marcwt::read_file(path_b));
    const auto contains_at = [](const marcwt::RateRegion& outer, const marcwt::RateRegion& inner) {
        return json{{"0", marcwt::contains(outer, inner, 0)},
                    {"1e-09", marcwt::contains(outer, inner, 1e-9)},
                    {"0.01", marcwt::contains(outer, inner, 1e-2)}};
    };
    double deficit_a = -HUGE_VAL, deficit_b = -HUGE_VAL;
    for (int k = 0; k <= 180; ++k) {
        const double theta = k * M_PI / 360.0;
        const double dx = std::cos(theta), dy = std::sin(theta);
        const double sa = marcwt::support(a, dx, dy), sb = marcwt::support(b, dx, dy);
        deficit_a = std::max(deficit_a, sb - sa);
        deficit_b = std::max(deficit_b, sa - sb);
    }
    const json doc{{"area_a", marcwt::area(a)},
                   {"area_b", marcwt::area(b)},
                   {"a_contains_b", contains_at(a, b)},
                   {"b_contains_a", contains_at(b, a)},
                   {"max_support_deficit_a", deficit_a},
                   {"max_support_deficit_b", deficit_b}};
    std::printf("%s\n", doc.dump(2).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"secrecy rate regions for the two-user Gaussian relay wiretap setting"};
    app.require_subcommand(1);

    GaussOptions g;
    CLI::App* gauss = app.add_subcommand("gauss", "evaluate one relaying strategy on a scenario");
    gauss->add_option("--strategy", g.strategy, "df, nf, cf, outer, baseline, or all")
        ->required()
        ->check(CLI::IsMember({"df", "nf", "cf", "outer", "baseline", "all"}));
    gauss->add_option("--p1", g.p1, "transmitter 1 power")->required();
    gauss->add_option("--p2", g.p2, "transmitter 2 power")->required();
    gauss->add_option("--pr", g.pr, "relay power")->required();
    gauss->add_option("--nr", g.nr, "relay observation noise variance")->required();
    gauss->add_option("--n1", g.n1, "legitimate receiver noise variance")->required();
    gauss->add_option("--n2", g.n2, "wiretapper noise variance")->required();
    CLI::Option* qopt = gauss->add_option("--q", g.q, "compression noise variance (cf only)");
    gauss->add_option("--gamma-steps", g.gamma_steps, "relay power-split grid size (df)")
        ->capture_default_str()
        ->check(CLI::Range(2, 10000));
    gauss->add_option("--outer-steps", g.outer_steps, "outer-bound grid size per axis")
        ->capture_default_str()
        ->check(CLI::Range(2, 21));
    gauss->add_option("--rstar-steps", g.rstar_steps, "relay noise-rate grid size (cf)")
        ->capture_default_str()
        ->check(CLI::Range(1, 10000));
    gauss->add_option("--out", g.out_dir, "output directory")->required();

    int figure_id = 0;
    std::string figure_out;
    CLI::App* figure = app.add_subcommand("figure", "run a preset scenario and plot every strategy");
    figure->add_option("--id", figure_id, "preset id (2-5)")->required()->check(CLI::Range(2, 5));
    figure->add_option("--out", figure_out, "output directory")->required();

    std::string dm_spec, dm_out;
    CLI::App* dm = app.add_subcommand("dm", "evaluate a discrete-memoryless factorization file");
    dm->add_option("--spec", dm_spec, "factorization JSON file")->required();
    dm->add_option("--out", dm_out, "output directory")->required();

    std::string cmp_a, cmp_b;
    CLI::App* compare = app.add_subcommand("compare", "compare two region CSV files");
    compare->add_option("a", cmp_a, "first region CSV")->required();
    compare->add_option("b", cmp_b, "second region CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gauss->parsed()) {
            g.has_q = qopt->count() > 0;
            return cmd_gauss(g);
        }
        if (figure->parsed()) return cmd_figure(figure_id, figure_out);
        if (dm->parsed()) return cmd_dm(dm_spec, dm_out);
        if (compare->parsed()) return cmd_compare(cmp_a, cmp_b);
    } catch (const marcwt::not_applicable_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
