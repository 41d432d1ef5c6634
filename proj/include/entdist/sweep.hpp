#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "entdist/protocols.hpp"

namespace entdist {

enum class Scenario { Ame, Catalysis, Indirect, DirectThenIndirect, NoisyLabs };

Scenario scenario_from_name(const std::string& name);
std::string scenario_name(Scenario s);

struct SweepAxis {
    std::string name; // "q", "p", "s", "delta", "local_delta"
    double min = 0.0;
    double max = 1.0;
    double step = 0.01;

    std::vector<double> values() const; // throws if step <= 0 or min > max
};

struct SweepGrid {
    std::vector<SweepAxis> axes;          // 1 or 2 axes, row-major order
    std::string channel_spec;             // family or "family:param"; may be empty
    std::map<std::string, double> fixed;  // parameters not swept
    std::optional<Grouping> grouping;     // ame scenario; defaults to fig3_grouping()
    std::uint64_t seed = 0;
};

struct SweepRow {
    std::vector<double> coords; // one value per axis
    ProtocolRecord record;
};

struct SweepResult {
    Scenario scenario = Scenario::Ame;
    std::vector<std::string> axis_names;
    std::vector<SweepRow> rows; // row-major over the axes
};

// One record per grid point; Parallel and Serial produce identical rows.
SweepResult sweep(const SweepGrid& grid, Scenario scenario,
                  ExecPolicy policy = ExecPolicy::Parallel);

// Header "scenario,axis1,axis2,e_in,e_com,e_fin,delta_e,classification";
// axis2 empty for 1-axis sweeps; floats with 9 significant digits; LF endings.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

} // namespace entdist
