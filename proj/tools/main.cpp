// entdist: reproduce the entanglement-distribution protocol family, its
// parameter sweeps, and the verification suites from the command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "entdist/io.hpp"
#include "entdist/protocols.hpp"
#include "entdist/sweep.hpp"
#include "entdist/verify.hpp"

namespace {

using namespace entdist;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct FigureSpec {
    Scenario scenario;
    bool two_axis = false;
    std::string default_channel;
    Grouping grouping = fig3_grouping();
};

FigureSpec figure_spec(const std::string& name) {
    if (name == "fig3")
        return {Scenario::Ame, false, "", fig3_grouping()};
    if (name == "fig4")
        return {Scenario::Ame, false, "", fig4_grouping()};
    if (name == "fig5")
        return {Scenario::Catalysis, false, "", catalyzed_grouping()};
    if (name == "fig7")
        return {Scenario::Indirect, true, "depolarizing"};
    if (name == "fig9")
        return {Scenario::DirectThenIndirect, true, "depolarizing"};
    if (name == "fig11")
        return {Scenario::NoisyLabs, true, "ad"};
    throw CLI::ValidationError("figure", "unknown figure '" + name + "'");
}

void write_gnuplot(const std::string& csv_path, const SweepResult& result) {
    std::string gp_path = csv_path + ".gp";
    std::ofstream gp(gp_path);
    gp << "set datafile separator ','\n";
    if (result.axis_names.size() == 1) {
        gp << "set xlabel '" << result.axis_names[0] << "'\n"
           << "set ylabel 'log-negativity'\n"
           << "plot '" << csv_path << "' skip 1 using 2:4 with lines title 'e_in', \\\n"
           << "     '' skip 1 using 2:5 with lines title 'e_com', \\\n"
           << "     '' skip 1 using 2:7 with lines title 'delta_e'\n";
    } else {
        gp << "set xlabel '" << result.axis_names[1] << "'\n"
           << "set ylabel '" << result.axis_names[0] << "'\n"
           << "set view map\n"
           << "splot '" << csv_path << "' skip 1 using 3:2:7 with pm3d title 'delta_e'\n";
    }
}

int cmd_figure(const std::string& name, double step, const std::string& channel,
               std::optional<double> p, std::optional<double> s, bool lower,
               const std::string& out, bool gnuplot) {
    FigureSpec spec = figure_spec(name);
    SweepGrid grid;
    if (!spec.two_axis) {
        if (!channel.empty())
            throw CLI::ValidationError("--channel", name + " has a fixed channel-free scenario");
        if (lower)
            throw CLI::ValidationError("--lower", name + " has a single row");
        grid.axes = {{"q", 0.0, 1.0, step}};
        grid.grouping = spec.grouping;
    } else {
        grid.channel_spec = channel.empty() ? spec.default_channel : channel;
        if (spec.scenario == Scenario::NoisyLabs) {
            if (lower)
                throw CLI::ValidationError("--lower", name + " has a single row");
            grid.axes = {{"local_delta", 0.0, 1.0, step}, {"delta", 0.0, 1.0, step}};
            grid.fixed["p"] = p.value_or(0.34);
        } else if (!lower) {
            grid.axes = {{"s", 0.0, 1.0, step}, {"delta", 0.0, 1.0, step}};
            grid.fixed["p"] = p.value_or(0.34);
        } else {
            grid.axes = {{"p", 0.0, 1.0, step}, {"delta", 0.0, 1.0, step}};
            grid.fixed["s"] = s.value_or(2.0 / 3.0);
        }
    }

    SweepResult result = sweep(grid, spec.scenario);
    std::string path = out.empty() ? name + ".csv" : out;
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw std::runtime_error("cannot open output file '" + path + "'");
    write_sweep_csv(os, result);
    os.close();
    if (gnuplot)
        write_gnuplot(path, result);
    std::printf("%s: %zu rows -> %s\n", name.c_str(), result.rows.size(), path.c_str());
    return kExitOk;
}

int cmd_table1(std::optional<double> q, const std::string& out) {
    std::vector<double> qs;
    if (q) {
        qs.push_back(*q);
    } else {
        for (int i = 1; i <= 9; ++i)
            qs.push_back(0.1 * i);
    }

    std::ostringstream text;
    text << "q      ";
    for (const PartitionReport& r : table1_scan(qs.front()))
        text << "  " << r.partition;
    text << '\n';
    std::ostringstream csv;
    csv << "q,partition,negativity,flag\n";
    char buf[96];
    for (double qi : qs) {
        std::snprintf(buf, sizeof(buf), "%-6.3f ", qi);
        text << buf;
        for (const PartitionReport& r : table1_scan(qi)) {
            std::snprintf(buf, sizeof(buf), "  %6s", r.ppt ? "PPT" : "NPT");
            text << buf;
            std::snprintf(buf, sizeof(buf), "%.9g,%s,%.9g,%s\n", qi, r.partition.c_str(),
                          r.negativity, r.ppt ? "PPT" : "NPT");
            csv << buf;
        }
        text << '\n';
    }
    if (q) {
        // single-q detail: include the negativities
        text << "negativities:";
        for (const PartitionReport& r : table1_scan(*q)) {
            std::snprintf(buf, sizeof(buf), "  %s=%.6g", r.partition.c_str(), r.negativity);
            text << buf;
        }
        text << '\n';
    }

    if (!out.empty()) {
        std::ofstream os(out, std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot open output file '" + out + "'");
        os << csv.str();
        std::printf("table -> %s\n", out.c_str());
    } else {
        std::fputs(text.str().c_str(), stdout);
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed,
               std::optional<double> tol) {
    VerifyOptions opts;
    opts.trials = trials;
    opts.seed = seed;
    opts.tol = tol;

    std::vector<int> ids;
    if (suite == "paper")
        ids = paper_suite();
    else if (suite == "properties")
        ids = property_suite();
    else if (suite == "all")
        ids = all_criteria();
    else
        throw CLI::ValidationError("suite", "expected paper|properties|all");

    bool all_pass = true;
    for (int id : ids) {
        CriterionResult r = run_criterion(id, opts);
        all_pass = all_pass && r.pass;
        std::printf("%s  c%-2d  %s — %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        std::fflush(stdout);
    }
    return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_protocol(const std::string& scenario, std::optional<double> q, std::optional<double> p,
                 std::optional<double> s, std::optional<double> local_delta,
                 const std::string& channel, const std::string& grouping_text,
                 const std::string& timing_text) {
    EComTiming timing =
        timing_text == "before" ? EComTiming::BeforeChannel : EComTiming::AfterChannel;
    auto need = [](const std::optional<double>& v, const char* flag) {
        if (!v)
            throw CLI::ValidationError(flag, "required for this scenario");
        return *v;
    };
    auto need_channel = [&]() {
        if (channel.empty())
            throw CLI::ValidationError("--channel", "required for this scenario");
        return parse_channel_spec(channel);
    };

    nlohmann::json j;
    if (scenario == "ame") {
        Grouping g = grouping_text.empty() ? fig3_grouping() : parse_grouping(grouping_text);
        j = to_json(ame_protocol(need(q, "--q"), g));
    } else if (scenario == "catalysis") {
        auto [base, cat] = catalysis_compare(need(q, "--q"));
        j = {{"plain", to_json(base)}, {"catalyzed", to_json(cat)}};
    } else if (scenario == "indirect") {
        j = to_json(indirect_noisy(need(p, "--p"), need(s, "--s"), need_channel(), timing));
    } else if (scenario == "direct_then_indirect") {
        auto r = direct_then_indirect(need(p, "--p"), need(s, "--s"), need_channel(), timing);
        j = to_json(r.record);
        j["e_after_direct"] = r.e_after_direct;
    } else if (scenario == "noisy_labs") {
        j = to_json(noisy_labs(need(p, "--p"), need_channel(),
                               need(local_delta, "--local-delta"), timing));
    } else {
        throw CLI::ValidationError("scenario", "unknown scenario '" + scenario + "'");
    }
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_search(int d_a, int trials, std::uint64_t seed, const std::string& residual_name,
               const std::string& ensemble_name, const std::string& out_dir) {
    ResidualKind residual;
    if (residual_name == "theorem1")
        residual = ResidualKind::Theorem1;
    else if (residual_name == "theorem2")
        residual = ResidualKind::Theorem2;
    else
        throw CLI::ValidationError("--residual", "expected theorem1|theorem2");

    Ensemble ensemble;
    if (ensemble_name == "complex")
        ensemble = Ensemble::Complex;
    else if (ensemble_name == "real")
        ensemble = Ensemble::Real;
    else
        throw CLI::ValidationError("--ensemble", "expected complex|real");

    std::vector<PureState> witnesses = search_violation(d_a, trials, seed, residual, ensemble);
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "witness_%03zu.json", i);
        std::string path = out_dir + "/" + name;
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw std::runtime_error("cannot open output file '" + path + "'");
        nlohmann::json j = to_json(witnesses[i]);
        j["residual"] = residual_of(witnesses[i], residual);
        j["residual_kind"] = residual_name;
        os << j.dump(2) << '\n';
    }
    std::printf("%zu witnesses in %d trials (d_a=%d, %s, %s ensemble)\n", witnesses.size(), trials,
                d_a, residual_name.c_str(), ensemble_name.c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    omp_set_num_threads(entdist::effective_threads());

    CLI::App app{"entanglement distribution protocol simulator"};
    app.require_subcommand(1);

    // figure
    std::string fig_name, fig_channel, fig_out;
    double fig_step = 0.01;
    std::optional<double> fig_p, fig_s;
    bool fig_lower = false, fig_gnuplot = false;
    auto* figure = app.add_subcommand("figure", "emit the CSV data behind a figure");
    figure->add_option("name", fig_name, "fig3|fig4|fig5|fig7|fig9|fig11")->required();
    figure->add_option("--step", fig_step, "grid step per axis")->check(CLI::PositiveNumber);
    figure->add_option("--channel", fig_channel, "channel family for fig7/fig9/fig11");
    figure->add_option("--p", fig_p, "werner admixture override");
    figure->add_option("--s", fig_s, "ancilla purity override (lower row)");
    figure->add_flag("--lower", fig_lower, "emit the lower row (p on axis 1) for fig7/fig9");
    figure->add_option("--out,-o", fig_out, "output CSV path (default <name>.csv)");
    figure->add_flag("--gnuplot", fig_gnuplot, "also write a gnuplot script next to the CSV");

    // table1
    std::optional<double> tab_q;
    std::string tab_out;
    auto* table = app.add_subcommand("table1", "separability pattern of the five-qubit family");
    table->add_option("--q", tab_q, "single q instead of the default grid");
    table->add_option("--out,-o", tab_out, "write CSV here instead of printing text");

    // verify
    std::string ver_suite;
    int ver_trials = 1000;
    std::uint64_t ver_seed = entdist::VerifyOptions{}.seed;
    std::optional<double> ver_tol;
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("suite", ver_suite, "paper|properties|all")->required();
    verify->add_option("--trials", ver_trials, "base sample count (default 1000)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", ver_seed, "base seed");
    verify->add_option("--tol", ver_tol, "tolerance override");

    // protocol
    std::string pro_scenario, pro_channel, pro_grouping, pro_timing = "after";
    std::optional<double> pro_q, pro_p, pro_s, pro_local;
    auto* protocol = app.add_subcommand("protocol", "one protocol record as JSON");
    protocol->add_option("scenario", pro_scenario,
                         "ame|catalysis|indirect|direct_then_indirect|noisy_labs")
        ->required();
    protocol->add_option("--q", pro_q, "five-qubit family parameter");
    protocol->add_option("--p", pro_p, "werner admixture");
    protocol->add_option("--s", pro_s, "ancilla purity");
    protocol->add_option("--local-delta", pro_local, "local amplitude-damping strength");
    protocol->add_option("--channel", pro_channel, "transit channel spec");
    protocol->add_option("--grouping", pro_grouping,
                         "a,b,..:c,..:d,.. with 1-based qubit labels (ame)");
    protocol->add_option("--ecom-timing", pro_timing, "after|before the transit channel")
        ->check(CLI::IsMember({"after", "before"}));

    // search
    int sea_da = 3, sea_trials = 5000;
    std::uint64_t sea_seed = 1;
    std::string sea_residual = "theorem1", sea_ensemble = "complex", sea_out = ".";
    auto* search = app.add_subcommand("search", "random search for inequality violations");
    search->add_option("--da", sea_da, "dimension of subsystem A")->check(CLI::Range(2, 16));
    search->add_option("--trials", sea_trials, "number of samples")->check(CLI::PositiveNumber);
    search->add_option("--seed", sea_seed, "base seed");
    search->add_option("--residual", sea_residual, "theorem1|theorem2");
    search->add_option("--ensemble", sea_ensemble, "complex|real");
    search->add_option("--out-dir", sea_out, "directory for witness JSON files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (figure->parsed())
            return cmd_figure(fig_name, fig_step, fig_channel, fig_p, fig_s, fig_lower, fig_out,
                              fig_gnuplot);
        if (table->parsed())
            return cmd_table1(tab_q, tab_out);
        if (verify->parsed())
            return cmd_verify(ver_suite, ver_trials, ver_seed, ver_tol);
        if (protocol->parsed())
            return cmd_protocol(pro_scenario, pro_q, pro_p, pro_s, pro_local, pro_channel,
                                pro_grouping, pro_timing);
        if (search->parsed())
            return cmd_search(sea_da, sea_trials, sea_seed, sea_residual, sea_ensemble, sea_out);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitVerifyFail;
    }
    return kExitUsage;
}
