#include "entdist/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <omp.h>

namespace entdist {

namespace {

double lookup(const std::map<std::string, double>& env, const std::string& name) {
    auto it = env.find(name);
    if (it == env.end())
        throw std::invalid_argument("sweep: missing parameter '" + name + "'");
    return it->second;
}

KrausChannel resolve_channel(const std::string& spec,
                             const std::map<std::string, double>& env) {
    if (spec.empty())
        throw std::invalid_argument("sweep: scenario needs a channel spec");
    std::string family = spec.substr(0, spec.find(':'));
    auto it = env.find("delta");
    if (it == env.end())
        return parse_channel_spec(spec); // parameter (if any) comes from the spec string
    // a swept/fixed delta supersedes any parameter attached to the spec string
    if (family == "identity" || family == "lambda1")
        throw std::invalid_argument("sweep: channel '" + family + "' has no strength parameter");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s:%.17g", family.c_str(), it->second);
    return parse_channel_spec(buf);
}

ProtocolRecord evaluate_point(Scenario scenario, const std::map<std::string, double>& env,
                              const SweepGrid& grid) {
    switch (scenario) {
    case Scenario::Ame:
        return ame_protocol(lookup(env, "q"), grid.grouping.value_or(fig3_grouping()));
    case Scenario::Catalysis:
        return catalysis_compare(lookup(env, "q")).second;
    case Scenario::Indirect:
        return indirect_noisy(lookup(env, "p"), lookup(env, "s"),
                              resolve_channel(grid.channel_spec, env));
    case Scenario::DirectThenIndirect:
        return direct_then_indirect(lookup(env, "p"), lookup(env, "s"),
                                    resolve_channel(grid.channel_spec, env))
            .record;
    case Scenario::NoisyLabs: {
        double local = lookup(env, "local_delta");
        std::map<std::string, double> chan_env = env;
        chan_env.erase("local_delta");
        return noisy_labs(lookup(env, "p"), resolve_channel(grid.channel_spec, chan_env), local);
    }
    }
    throw std::logic_error("unreachable");
}

const std::vector<std::string>& allowed_axes(Scenario scenario) {
    static const std::vector<std::string> q_only{"q"};
    static const std::vector<std::string> noisy{"p", "s", "delta"};
    static const std::vector<std::string> labs{"local_delta", "delta"};
    switch (scenario) {
    case Scenario::Ame:
    case Scenario::Catalysis:
        return q_only;
    case Scenario::Indirect:
    case Scenario::DirectThenIndirect:
        return noisy;
    case Scenario::NoisyLabs:
        return labs;
    }
    throw std::logic_error("unreachable");
}

} // namespace

Scenario scenario_from_name(const std::string& name) {
    if (name == "ame")
        return Scenario::Ame;
    if (name == "catalysis")
        return Scenario::Catalysis;
    if (name == "indirect")
        return Scenario::Indirect;
    if (name == "direct_then_indirect")
        return Scenario::DirectThenIndirect;
    if (name == "noisy_labs")
        return Scenario::NoisyLabs;
    throw std::invalid_argument("unknown scenario '" + name + "'");
}

std::string scenario_name(Scenario s) {
    switch (s) {
    case Scenario::Ame:
        return "ame";
    case Scenario::Catalysis:
        return "catalysis";
    case Scenario::Indirect:
        return "indirect";
    case Scenario::DirectThenIndirect:
        return "direct_then_indirect";
    case Scenario::NoisyLabs:
        return "noisy_labs";
    }
    return "?";
}

std::vector<double> SweepAxis::values() const {
    if (step <= 0.0)
        throw std::invalid_argument("sweep axis '" + name + "': step must be > 0");
    if (min > max)
        throw std::invalid_argument("sweep axis '" + name + "': min > max");
    int count = static_cast<int>(std::floor((max - min) / step + 1e-9)) + 1;
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out[static_cast<std::size_t>(i)] = min + i * step;
    return out;
}

SweepResult sweep(const SweepGrid& grid, Scenario scenario, ExecPolicy policy) {
    if (grid.axes.empty() || grid.axes.size() > 2)
        throw std::invalid_argument("sweep: expected 1 or 2 axes");
    const std::vector<std::string>& legal = allowed_axes(scenario);
    for (const SweepAxis& ax : grid.axes) {
        if (std::find(legal.begin(), legal.end(), ax.name) == legal.end())
            throw std::invalid_argument("sweep: axis '" + ax.name + "' does not apply to scenario " +
                                        scenario_name(scenario));
    }
    if (grid.axes.size() == 2 && grid.axes[0].name == grid.axes[1].name)
        throw std::invalid_argument("sweep: duplicate axis name");

    std::vector<std::vector<double>> axis_values;
    for (const SweepAxis& ax : grid.axes)
        axis_values.push_back(ax.values());

    int n0 = static_cast<int>(axis_values[0].size());
    int n1 = grid.axes.size() == 2 ? static_cast<int>(axis_values[1].size()) : 1;
    int total = n0 * n1;

    SweepResult result;
    result.scenario = scenario;
    for (const SweepAxis& ax : grid.axes)
        result.axis_names.push_back(ax.name);
    result.rows.resize(static_cast<std::size_t>(total));

    auto run_point = [&](int idx) {
        int i0 = idx / n1;
        int i1 = idx % n1;
        std::map<std::string, double> env = grid.fixed;
        env[grid.axes[0].name] = axis_values[0][static_cast<std::size_t>(i0)];
        std::vector<double> coords{axis_values[0][static_cast<std::size_t>(i0)]};
        if (grid.axes.size() == 2) {
            env[grid.axes[1].name] = axis_values[1][static_cast<std::size_t>(i1)];
            coords.push_back(axis_values[1][static_cast<std::size_t>(i1)]);
        }
        result.rows[static_cast<std::size_t>(idx)] =
            SweepRow{std::move(coords), evaluate_point(scenario, env, grid)};
    };

    // validate the first point eagerly so bad grids fail before spawning threads
    if (total > 0)
        run_point(0);

    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(effective_threads())
        for (int idx = 1; idx < total; ++idx)
            run_point(idx);
    } else {
        for (int idx = 1; idx < total; ++idx)
            run_point(idx);
    }
    return result;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
    os << "scenario,axis1,axis2,e_in,e_com,e_fin,delta_e,classification\n";
    char buf[256];
    std::string name = scenario_name(result.scenario);
    for (const SweepRow& row : result.rows) {
        char axis2[32] = "";
        if (row.coords.size() == 2)
            std::snprintf(axis2, sizeof(axis2), "%.9g", row.coords[1]);
        std::snprintf(buf, sizeof(buf), "%s,%.9g,%s,%.9g,%.9g,%.9g,%.9g,%s\n", name.c_str(),
                      row.coords[0], axis2, row.record.e_in, row.record.e_com, row.record.e_fin,
                      row.record.delta_e, classification_name(row.record.classification).c_str());
        os << buf;
    }
}

} // namespace entdist
