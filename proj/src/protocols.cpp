#include "entdist/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <omp.h>

namespace entdist {

namespace {

// A=0, B=1, C=2 for the three-qubit noisy scenarios
const std::vector<int> kA{0};
const std::vector<int> kAB{0, 1};
const std::vector<int> kAC{0, 2};

DensityMatrix three_qubit_product(double p, double s) {
    DensityMatrix w = werner(p);
    DensityMatrix c = ancilla_alpha(s);
    return DensityMatrix(Dims{2, 2, 2}, kron(w.mat, c.mat));
}

ProtocolRecord noisy_record(double e_in, double e_com, double e_fin) {
    ProtocolRecord rec;
    rec.measure = MeasureKind::Negativity;
    rec.e_in = e_in;
    rec.e_com = e_com;
    rec.e_fin = e_fin;
    rec.delta_e = e_fin - e_in;
    rec.classification = classify(rec.delta_e, rec.e_com);
    return rec;
}

} // namespace

Grouping fig3_grouping() {
    return Grouping{{1, 3, 4}, {0}, {2}};
}

Grouping fig4_grouping() {
    return Grouping{{0, 3, 4}, {1}, {2}};
}

Grouping catalyzed_grouping() {
    return Grouping{{3, 4}, {0, 1}, {2}};
}

DensityMatrix rho_q(double q) {
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("rho_q: q must lie in [0,1]");
    DensityMatrix rho = density_from_pure(ame5());
    rho = apply_channel(rho, lambda1(), 0);
    rho = apply_channel(rho, lambda2(q), 1);
    return rho;
}

std::vector<PartitionReport> table1_scan(double q) {
    DensityMatrix rho = rho_q(q);
    struct Row {
        const char* name;
        std::vector<int> left;
    };
    static const Row rows[] = {
        {"12:345", {0, 1}}, {"2:1345", {1}},    {"1:2345", {0}},
        {"3:1245", {2}},    {"13:245", {0, 2}}, {"123:45", {0, 1, 2}},
    };
    std::vector<PartitionReport> out;
    out.reserve(6);
    for (const Row& r : rows) {
        double n = negativity(rho, {r.left});
        out.push_back({r.name, n, n <= kEigZero});
    }
    return out;
}

ProtocolRecord ame_protocol(double q, const Grouping& g) {
    return protocol_record(rho_q(q), g, MeasureKind::LogNegativity);
}

std::pair<ProtocolRecord, ProtocolRecord> catalysis_compare(double q) {
    DensityMatrix rho = rho_q(q);
    return {protocol_record(rho, fig4_grouping(), MeasureKind::LogNegativity),
            protocol_record(rho, catalyzed_grouping(), MeasureKind::LogNegativity)};
}

Matrix cphase() {
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    return cz;
}

ProtocolRecord indirect_noisy(double p, double s, const KrausChannel& ch, EComTiming timing) {
    DensityMatrix rho = three_qubit_product(p, s);
    double e_in = negativity(rho, {kAC});
    rho = DensityMatrix(rho.dims, apply_local(rho.mat, cphase(), {0, 2}, rho.dims));
    double e_com_before = negativity(rho, {kAB});
    rho = apply_channel(rho, ch, 2);
    double e_com =
        timing == EComTiming::AfterChannel ? negativity(rho, {kAB}) : e_com_before;
    return noisy_record(e_in, e_com, negativity(rho, {kA}));
}

DirectThenIndirectResult direct_then_indirect(double p, double s, const KrausChannel& ch,
                                              EComTiming timing) {
    DensityMatrix rho = three_qubit_product(p, s);
    rho = apply_channel(rho, ch, 1); // direct stage: B through the channel
    rho = DensityMatrix(rho.dims, apply_local(rho.mat, cphase(), {0, 2}, rho.dims));
    double e_after_direct = negativity(rho, {kAC});
    double e_com_before = negativity(rho, {kAB});
    rho = apply_channel(rho, ch, 2); // indirect stage: C through the channel
    double e_com =
        timing == EComTiming::AfterChannel ? negativity(rho, {kAB}) : e_com_before;
    return {e_after_direct, noisy_record(e_after_direct, e_com, negativity(rho, {kA}))};
}

ProtocolRecord noisy_labs(double p, const KrausChannel& ch, double local_delta,
                          EComTiming timing) {
    if (!(local_delta >= 0.0 && local_delta <= 1.0))
        throw std::invalid_argument("noisy_labs: local_delta must lie in [0,1]");
    KrausChannel local = amplitude_damping(local_delta);

    DensityMatrix rho = three_qubit_product(p, 1.0); // C in (|0>+|1>)/sqrt(2)
    rho = DensityMatrix(rho.dims, apply_local(rho.mat, cphase(), {0, 2}, rho.dims));
    // stage: B transits, A and C wait in Alice's lab
    rho = apply_channel(rho, ch, 1);
    rho = apply_channel(rho, local, 0);
    rho = apply_channel(rho, local, 2);
    double e_in = negativity(rho, {kAC});
    double e_com_before = negativity(rho, {kAB});
    // stage: C transits, A waits at Alice, B at Bob
    rho = apply_channel(rho, ch, 2);
    rho = apply_channel(rho, local, 0);
    rho = apply_channel(rho, local, 1);
    double e_com =
        timing == EComTiming::AfterChannel ? negativity(rho, {kAB}) : e_com_before;
    return noisy_record(e_in, e_com, negativity(rho, {kA}));
}

EbCheckResult eb_no_gain_check(const KrausChannel& ch, const DensityMatrix& rho,
                               const Grouping& g) {
    g.validate(rho.dims);
    EbCheckResult out;
    out.eb_certified = is_entanglement_breaking(ch);

    std::vector<int> ac = g.a;
    ac.insert(ac.end(), g.c.begin(), g.c.end());
    double e_in = negativity(rho, {ac});

    if (g.c.size() != 1)
        throw std::invalid_argument("eb_no_gain_check: carrier C must be a single subsystem");
    DensityMatrix after = apply_channel(rho, ch, g.c.front());
    double e_fin = negativity(after, {g.a});
    out.delta_e = e_fin - e_in;
    return out;
}

double residual_of(const PureState& psi, ResidualKind residual) {
    Grouping g{{0}, {1}, {2}};
    return residual == ResidualKind::Theorem1 ? theorem1_residual(psi, g)
                                              : theorem2_residual(psi, g);
}

std::vector<PureState> search_violation(int d_a, int trials, std::uint64_t seed,
                                        ResidualKind residual, Ensemble ensemble,
                                        ExecPolicy policy) {
    if (d_a < 2)
        throw std::invalid_argument("search_violation: d_a must be >= 2");
    if (trials < 1)
        throw std::invalid_argument("search_violation: trials must be >= 1");
    Dims dims{d_a, 2, 2};

    std::vector<char> hit(static_cast<std::size_t>(trials), 0);
    auto run_trial = [&](int i) {
        PureState psi = haar_random_pure(dims, mix_seed(seed, static_cast<std::uint64_t>(i)),
                                         ensemble);
        if (residual_of(psi, residual) < -kClassifyTol)
            hit[static_cast<std::size_t>(i)] = 1;
    };

    if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_threads())
        for (int i = 0; i < trials; ++i)
            run_trial(i);
    } else {
        for (int i = 0; i < trials; ++i)
            run_trial(i);
    }

    std::vector<PureState> witnesses;
    for (int i = 0; i < trials; ++i)
        if (hit[static_cast<std::size_t>(i)])
            witnesses.push_back(haar_random_pure(
                dims, mix_seed(seed, static_cast<std::uint64_t>(i)), ensemble));
    return witnesses;
}

} // namespace entdist
