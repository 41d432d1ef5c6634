#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entdist/states.hpp"

namespace entdist {

// Finite Kraus representation of a channel on one subsystem.
struct KrausChannel {
    std::vector<Matrix> kraus_ops;
    std::string label;
    std::optional<double> parameter;

    KrausChannel(std::vector<Matrix> ops, std::string lbl,
                 std::optional<double> param = std::nullopt); // checks completeness
    int dim() const;
};

// (I (x) Lambda)(|phi+><phi+|), normalized to trace 1, on [d,d].
struct ChoiMatrix {
    DensityMatrix state;
};

KrausChannel identity_channel();
KrausChannel dephasing(double delta);
KrausChannel depolarizing(double delta);
KrausChannel amplitude_damping(double delta);
KrausChannel lambda1();
KrausChannel lambda2(double q);

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch, int target);

ChoiMatrix choi(const KrausChannel& ch);

// Qubit channels only: PPT of the Choi matrix, exact for 2x2.
bool is_entanglement_breaking(const KrausChannel& ch);

// "dephasing:0.3", "depolarizing:0.5", "ad:1.0", "lambda2:0.4", "identity",
// "lambda1". Throws on unknown family or out-of-range parameter.
KrausChannel parse_channel_spec(const std::string& spec);

} // namespace entdist
