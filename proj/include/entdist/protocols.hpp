#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "entdist/channels.hpp"
#include "entdist/exec.hpp"
#include "entdist/measures.hpp"

namespace entdist {

// When the communicated entanglement N_{AB:C} is read off in noisy
// protocols: after the transit channel has acted on C (default, the
// entanglement actually delivered) or just before C enters the channel.
enum class EComTiming { AfterChannel, BeforeChannel };

// Paper qubit labels 1..5 map to indices 0..4.
Grouping fig3_grouping();     // A={2,4,5} B={1} C={3}
Grouping fig4_grouping();     // A={1,4,5} B={2} C={3}
Grouping catalyzed_grouping(); // A={4,5} B={1,2} C={3}

// Five-qubit resource state: lambda1 on qubit 1, lambda2(q) on qubit 2 of the
// AME state.
DensityMatrix rho_q(double q);

struct PartitionReport {
    std::string partition; // paper notation, e.g. "12:345"
    double negativity = 0.0;
    bool ppt = false;
};

// Negativity and PPT/NPT flag for the six tabulated bipartitions of rho_q.
std::vector<PartitionReport> table1_scan(double q);

// Log-negativity protocol record of rho_q under the grouping.
ProtocolRecord ame_protocol(double q, const Grouping& g);

// (record for fig4_grouping, record for catalyzed_grouping) at the same q.
std::pair<ProtocolRecord, ProtocolRecord> catalysis_compare(double q);

// diag(1,1,1,-1) on two qubits.
Matrix cphase();

// Werner(p) on AB, alpha(s) on C; c-phase on (A,C) at Alice; channel carries
// C to Bob. Negativity measure.
ProtocolRecord indirect_noisy(double p, double s, const KrausChannel& ch,
                              EComTiming timing = EComTiming::AfterChannel);

struct DirectThenIndirectResult {
    double e_after_direct = 0.0;
    ProtocolRecord record;
};

// Werner prepared locally at Alice; B transits first (direct stage), then the
// indirect stage as above. The record's e_in is the post-direct entanglement.
DirectThenIndirectResult direct_then_indirect(double p, double s, const KrausChannel& ch,
                                              EComTiming timing = EComTiming::AfterChannel);

// Direct-then-indirect with C pure (|0>+|1>)/sqrt(2) and amplitude-damping
// local noise of strength local_delta acting in the labs during each transit.
ProtocolRecord noisy_labs(double p, const KrausChannel& ch, double local_delta,
                          EComTiming timing = EComTiming::AfterChannel);

struct EbCheckResult {
    double delta_e = 0.0;
    bool eb_certified = false; // precondition report; the check runs either way
};

// Sends the grouping's carrier C through `ch` and reports the entanglement
// change between the labs; <= 0 (up to tolerance) whenever ch is EB.
EbCheckResult eb_no_gain_check(const KrausChannel& ch, const DensityMatrix& rho,
                               const Grouping& g);

enum class ResidualKind { Theorem1, Theorem2 };

// Random search over pure states on [d_a,2,2]; returns every state whose
// residual is below -1e-9, in trial order, deterministic per seed.
std::vector<PureState> search_violation(int d_a, int trials, std::uint64_t seed,
                                        ResidualKind residual,
                                        Ensemble ensemble = Ensemble::Complex,
                                        ExecPolicy policy = ExecPolicy::Parallel);

double residual_of(const PureState& psi, ResidualKind residual);

} // namespace entdist
