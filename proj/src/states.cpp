#include "entdist/states.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace entdist {

namespace {

constexpr double kNormTol = 1e-10;

void check_range01(double x, const char* name) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0,1], got " +
                                    std::to_string(x));
}

} // namespace

PureState::PureState(Dims d, Vector a) : dims(std::move(d)), amplitudes(std::move(a)) {
    if (amplitudes.size() != dims.total())
        throw std::invalid_argument("PureState: amplitude count does not match dims");
    if (std::abs(amplitudes.norm() - 1.0) > kNormTol)
        throw std::invalid_argument("PureState: vector is not normalized");
}

DensityMatrix::DensityMatrix(Dims d, Matrix m) : dims(std::move(d)), mat(std::move(m)) {
    if (mat.rows() != mat.cols() || mat.rows() != dims.total())
        throw std::invalid_argument("DensityMatrix: matrix size does not match dims");
    if (!is_hermitian(mat))
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(mat.trace().real() - 1.0) > kNormTol || std::abs(mat.trace().imag()) > kNormTol)
        throw std::invalid_argument("DensityMatrix: trace is not 1");
}

void DensityMatrix::validate_psd(double tol) const {
    HermitianSpectrum ev = hermitian_eigenvalues(mat);
    if (ev.back() < -tol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(ev.back()));
}

PureState pure_from_amplitudes(const Dims& dims, Vector amplitudes) {
    if (amplitudes.size() != dims.total())
        throw std::invalid_argument("pure_from_amplitudes: length mismatch");
    double n = amplitudes.norm();
    if (n <= 0.0)
        throw std::invalid_argument("pure_from_amplitudes: zero vector");
    return PureState(dims, amplitudes / n);
}

PureState bell_phi_plus() {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return PureState(Dims{2, 2}, v);
}

DensityMatrix werner(double p) {
    check_range01(p, "werner p");
    PureState bell = bell_phi_plus();
    Matrix proj = bell.amplitudes * bell.amplitudes.adjoint();
    Matrix m = p * proj + (1.0 - p) * Matrix::Identity(4, 4) / 4.0;
    return DensityMatrix(Dims{2, 2}, m);
}

DensityMatrix ancilla_alpha(double s) {
    check_range01(s, "ancilla s");
    Matrix m = (identity2() + s * pauli_x()) / 2.0;
    return DensityMatrix(Dims{2}, m);
}

PureState ame5() {
    // 16-ket presentation; the state is invariant in all the properties used
    // here under the choice among equivalent sign conventions.
    struct Term {
        const char* ket;
        double sign;
    };
    static const Term terms[] = {
        {"00000", +1}, {"10010", +1}, {"01001", +1}, {"10100", +1},
        {"01010", +1}, {"11011", -1}, {"00110", -1}, {"11000", -1},
        {"11101", -1}, {"00011", -1}, {"11110", -1}, {"01111", -1},
        {"10001", -1}, {"01100", -1}, {"10111", -1}, {"00101", +1},
    };
    Vector v = Vector::Zero(32);
    for (const Term& t : terms) {
        int idx = 0;
        for (const char* c = t.ket; *c; ++c)
            idx = idx * 2 + (*c - '0');
        v(idx) = t.sign * 0.25;
    }
    return PureState(Dims{2, 2, 2, 2, 2}, v);
}

PureState excessive_witness_qutrit() {
    Dims dims{3, 2, 2};
    Vector v = Vector::Zero(12);
    const double a = 1.0 / std::sqrt(3.0);
    v(dims.pack({2, 0, 0})) = a;
    v(dims.pack({0, 0, 1})) = a;
    v(dims.pack({1, 1, 0})) = a;
    return PureState(dims, v);
}

PureState excessive_witness_ququart() {
    Dims dims{4, 2, 2};
    Vector v = Vector::Zero(16);
    v(dims.pack({0, 0, 0})) = 10.0;
    v(dims.pack({1, 1, 0})) = 1.0;
    v(dims.pack({2, 0, 1})) = 1.0;
    v(dims.pack({3, 1, 1})) = 1.0;
    return pure_from_amplitudes(dims, v);
}

SchmidtDecomposition schmidt(const PureState& psi, const std::vector<int>& left) {
    std::vector<int> l = validated_subset(psi.dims, left);
    if (l.empty() || static_cast<int>(l.size()) == psi.dims.count())
        throw std::invalid_argument("schmidt: left side must be a nonempty proper subset");

    Matrix rho = psi.amplitudes * psi.amplitudes.adjoint();
    Matrix reduced = partial_trace(rho, psi.dims, l);
    HermitianSpectrum ev = hermitian_eigenvalues(reduced);

    SchmidtDecomposition out;
    for (double lambda : ev)
        if (lambda > kEigZero)
            out.coefficients.push_back(lambda);
    out.rank = static_cast<int>(out.coefficients.size());
    return out;
}

PureState haar_random_pure(const Dims& dims, std::uint64_t seed, Ensemble ensemble) {
    std::mt19937_64 rng(mix_seed(seed, 0x9e3779b97f4a7c15ull));
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dims.total());
    for (int i = 0; i < dims.total(); ++i) {
        double re = gauss(rng);
        double im = ensemble == Ensemble::Complex ? gauss(rng) : 0.0;
        v(i) = Complex(re, im);
    }
    return pure_from_amplitudes(dims, std::move(v));
}

DensityMatrix density_from_pure(const PureState& psi) {
    Matrix m = psi.amplitudes * psi.amplitudes.adjoint();
    return DensityMatrix(psi.dims, std::move(m));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over the combined value
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace entdist
