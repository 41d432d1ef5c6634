#pragma once

#include <string>
#include <vector>

#include "entdist/states.hpp"

namespace entdist {

// "Left" side of a cut, as subsystem indices into a Dims.
struct Bipartition {
    std::vector<int> left;
};

// Disjoint exhaustive split into the lab/lab/carrier roles A, B, C.
struct Grouping {
    std::vector<int> a;
    std::vector<int> b;
    std::vector<int> c;

    void validate(const Dims& dims) const; // throws on overlap/gap/empty part
};

enum class MeasureKind {
    Negativity,
    LogNegativity,
    VonNeumannEntropyOfCut, // globally pure states only
    LinearEntropyOfCut,     // globally pure states only
};

enum class Classification { Excessive, NonExcessive, NoGain };

// One protocol run: entanglement before/communicated/after and the verdict.
struct ProtocolRecord {
    double e_in = 0.0;
    double e_com = 0.0;
    double e_fin = 0.0;
    double delta_e = 0.0;
    MeasureKind measure = MeasureKind::Negativity;
    Classification classification = Classification::NoGain;
};

inline constexpr double kClassifyTol = 1e-9; // knife-edge cases stay NonExcessive

double negativity(const DensityMatrix& rho, const Bipartition& cut);
double log_negativity(const DensityMatrix& rho, const Bipartition& cut);

double von_neumann_entropy(const DensityMatrix& rho); // base-2
double linear_entropy(const DensityMatrix& rho);      // 1 - tr(rho^2)

// Cut value of `kind` across left:rest. Entropy kinds require pure rho.
double cut_entanglement(const DensityMatrix& rho, const Bipartition& cut, MeasureKind kind);

// S_B + S_C - S_BC  (von Neumann, base 2); nonnegative for all pure states.
double subadditivity_residual(const PureState& psi, const Grouping& g);

// N_{AC:B} + N_{AB:C} - sqrt(2/(d_A(d_A-1))) N_{A:CB} with d_A the Schmidt
// rank on A; +infinity when d_A = 1 (inequality vacuous).
double lemma1_residual(const PureState& psi, const Grouping& g);

// N_{AC:B} + N_{AB:C} - N_{A:CB}
double theorem1_residual(const PureState& psi, const Grouping& g);

// L_{AC:B} + L_{AB:C} - L_{A:CB}
double theorem2_residual(const PureState& psi, const Grouping& g);

ProtocolRecord protocol_record(const DensityMatrix& rho, const Grouping& g, MeasureKind kind);

Classification classify(double delta_e, double e_com);

std::string measure_name(MeasureKind kind);
std::string classification_name(Classification c);

// "measure,e_in,e_com,e_fin,delta_e,classification" with %.9g floats.
std::string record_csv_row(const ProtocolRecord& rec);

// Negativity of a pure state from its squared Schmidt coefficients,
// ((sum_a sqrt(p_a))^2 - 1)/2. Independent route used against the partial
// transpose definition.
double negativity_from_schmidt(const PureState& psi, const Bipartition& cut);

} // namespace entdist
