#include "entdist/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace entdist {

namespace {

constexpr double kPurityTol = 1e-8;

bool is_pure(const DensityMatrix& rho) {
    double purity = (rho.mat * rho.mat).trace().real();
    return purity >= 1.0 - kPurityTol;
}

std::vector<int> merged(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> out = x;
    out.insert(out.end(), y.begin(), y.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

void Grouping::validate(const Dims& dims) const {
    if (a.empty() || b.empty() || c.empty())
        throw std::invalid_argument("Grouping: every part must be nonempty");
    std::vector<int> all = a;
    all.insert(all.end(), b.begin(), b.end());
    all.insert(all.end(), c.begin(), c.end());
    std::vector<int> sorted = validated_subset(dims, all); // catches overlap and range
    if (static_cast<int>(sorted.size()) != dims.count())
        throw std::invalid_argument("Grouping: parts must cover all subsystems");
}

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
    std::vector<int> left = validated_subset(rho.dims, cut.left);
    if (left.empty() || static_cast<int>(left.size()) == rho.dims.count())
        throw std::invalid_argument("negativity: cut must be a nonempty proper subset");
    Matrix pt = partial_transpose(rho.mat, rho.dims, left);
    double n = (trace_norm(pt) - 1.0) / 2.0;
    if (n < 0.0) {
        if (n < -kEigZero)
            throw std::runtime_error("negativity: trace norm below 1 beyond tolerance");
        n = 0.0;
    }
    return n;
}

double log_negativity(const DensityMatrix& rho, const Bipartition& cut) {
    return std::log2(2.0 * negativity(rho, cut) + 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    HermitianSpectrum ev = hermitian_eigenvalues(rho.mat);
    double s = 0.0;
    for (double lambda : ev)
        if (lambda > 1e-12)
            s -= lambda * std::log2(lambda);
    return s;
}

double linear_entropy(const DensityMatrix& rho) {
    return 1.0 - (rho.mat * rho.mat).trace().real();
}

double cut_entanglement(const DensityMatrix& rho, const Bipartition& cut, MeasureKind kind) {
    switch (kind) {
    case MeasureKind::Negativity:
        return negativity(rho, cut);
    case MeasureKind::LogNegativity:
        return log_negativity(rho, cut);
    case MeasureKind::VonNeumannEntropyOfCut:
    case MeasureKind::LinearEntropyOfCut: {
        if (!is_pure(rho))
            throw std::invalid_argument("entropy-of-cut measures need a globally pure state");
        std::vector<int> left = validated_subset(rho.dims, cut.left);
        if (left.empty() || static_cast<int>(left.size()) == rho.dims.count())
            throw std::invalid_argument("cut must be a nonempty proper subset");
        Matrix red = partial_trace(rho.mat, rho.dims, left);
        DensityMatrix reduced(rho.dims.select(left), std::move(red));
        return kind == MeasureKind::VonNeumannEntropyOfCut ? von_neumann_entropy(reduced)
                                                           : linear_entropy(reduced);
    }
    }
    throw std::logic_error("unreachable");
}

double subadditivity_residual(const PureState& psi, const Grouping& g) {
    g.validate(psi.dims);
    DensityMatrix rho = density_from_pure(psi);
    auto entropy_of = [&](const std::vector<int>& part) {
        Matrix red = partial_trace(rho.mat, rho.dims, part);
        return von_neumann_entropy(DensityMatrix(rho.dims.select(part), std::move(red)));
    };
    return entropy_of(g.b) + entropy_of(g.c) - entropy_of(merged(g.b, g.c));
}

double lemma1_residual(const PureState& psi, const Grouping& g) {
    g.validate(psi.dims);
    int d_a = schmidt(psi, g.a).rank;
    if (d_a <= 1)
        return std::numeric_limits<double>::infinity();
    DensityMatrix rho = density_from_pure(psi);
    double n_acb = negativity(rho, {merged(g.a, g.c)});
    double n_abc = negativity(rho, {merged(g.a, g.b)});
    double n_a = negativity(rho, {g.a});
    return n_acb + n_abc - std::sqrt(2.0 / (d_a * (d_a - 1.0))) * n_a;
}

double theorem1_residual(const PureState& psi, const Grouping& g) {
    g.validate(psi.dims);
    DensityMatrix rho = density_from_pure(psi);
    return negativity(rho, {merged(g.a, g.c)}) + negativity(rho, {merged(g.a, g.b)}) -
           negativity(rho, {g.a});
}

double theorem2_residual(const PureState& psi, const Grouping& g) {
    g.validate(psi.dims);
    DensityMatrix rho = density_from_pure(psi);
    return log_negativity(rho, {merged(g.a, g.c)}) + log_negativity(rho, {merged(g.a, g.b)}) -
           log_negativity(rho, {g.a});
}

Classification classify(double delta_e, double e_com) {
    if (delta_e > e_com + kClassifyTol)
        return Classification::Excessive;
    if (delta_e <= kClassifyTol)
        return Classification::NoGain;
    return Classification::NonExcessive;
}

ProtocolRecord protocol_record(const DensityMatrix& rho, const Grouping& g, MeasureKind kind) {
    g.validate(rho.dims);
    ProtocolRecord rec;
    rec.measure = kind;
    rec.e_in = cut_entanglement(rho, {merged(g.a, g.c)}, kind);
    rec.e_com = cut_entanglement(rho, {merged(g.a, g.b)}, kind);
    rec.e_fin = cut_entanglement(rho, {g.a}, kind);
    rec.delta_e = rec.e_fin - rec.e_in;
    rec.classification = classify(rec.delta_e, rec.e_com);
    return rec;
}

std::string measure_name(MeasureKind kind) {
    switch (kind) {
    case MeasureKind::Negativity:
        return "negativity";
    case MeasureKind::LogNegativity:
        return "log_negativity";
    case MeasureKind::VonNeumannEntropyOfCut:
        return "von_neumann_entropy";
    case MeasureKind::LinearEntropyOfCut:
        return "linear_entropy";
    }
    return "?";
}

std::string classification_name(Classification c) {
    switch (c) {
    case Classification::Excessive:
        return "Excessive";
    case Classification::NonExcessive:
        return "NonExcessive";
    case Classification::NoGain:
        return "NoGain";
    }
    return "?";
}

std::string record_csv_row(const ProtocolRecord& rec) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s,%.9g,%.9g,%.9g,%.9g,%s", measure_name(rec.measure).c_str(),
                  rec.e_in, rec.e_com, rec.e_fin, rec.delta_e,
                  classification_name(rec.classification).c_str());
    return buf;
}

double negativity_from_schmidt(const PureState& psi, const Bipartition& cut) {
    SchmidtDecomposition sd = schmidt(psi, cut.left);
    double root_sum = 0.0;
    for (double p : sd.coefficients)
        root_sum += std::sqrt(p);
    double n = (root_sum * root_sum - 1.0) / 2.0;
    return n < 0.0 ? 0.0 : n;
}

} // namespace entdist
