#pragma once

#include <cstdint>
#include <vector>

#include "entdist/tensor.hpp"

namespace entdist {

// Normalized state vector over a tensor-factor layout.
struct PureState {
    Dims dims;
    Vector amplitudes;

    PureState(Dims d, Vector a); // requires unit norm within 1e-10
};

// Hermitian, unit-trace operator over a tensor-factor layout. Positivity is
// checked separately (validate_psd) since it needs an eigensolve.
struct DensityMatrix {
    Dims dims;
    Matrix mat;

    DensityMatrix(Dims d, Matrix m);
    void validate_psd(double tol = 1e-9) const; // throws if min eigenvalue < -tol
};

// Squared Schmidt coefficients (descending, filtered at 1e-10) and rank.
struct SchmidtDecomposition {
    std::vector<double> coefficients;
    int rank = 0;
};

enum class Ensemble {
    Complex, // independent standard complex Gaussian entries (Haar)
    Real,    // independent real Gaussian entries (orthogonal-invariant)
};

PureState pure_from_amplitudes(const Dims& dims, Vector amplitudes);

// (|00> + |11>)/sqrt(2) on [2,2].
PureState bell_phi_plus();

// p |phi+><phi+| + (1-p) I/4 on [2,2].
DensityMatrix werner(double p);

// (I + s sigma_x)/2 on [2].
DensityMatrix ancilla_alpha(double s);

// Five-qubit state maximally entangled across every bipartition, 16 kets with
// coefficients +-1/4.
PureState ame5();

// (|200> + |001> + |110>)/sqrt(3) on [3,2,2]: the smallest pure state whose
// negativity gain beats the communicated negativity.
PureState excessive_witness_qutrit();

// (10|000> + |110> + |201> + |311>)/sqrt(103) on [4,2,2]: same for
// logarithmic negativity.
PureState excessive_witness_ququart();

SchmidtDecomposition schmidt(const PureState& psi, const std::vector<int>& left);

PureState haar_random_pure(const Dims& dims, std::uint64_t seed,
                           Ensemble ensemble = Ensemble::Complex);

DensityMatrix density_from_pure(const PureState& psi);

// Stable per-trial seed derivation for deterministic parallel sampling.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace entdist
