#include "entdist/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include <omp.h>

#include "entdist/protocols.hpp"
#include "entdist/sweep.hpp"

namespace entdist {

namespace {

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

int scaled(int stated, const VerifyOptions& o) {
    double s = static_cast<double>(o.trials) / 1000.0;
    return std::max(1, static_cast<int>(std::lround(stated * s)));
}

// parallel map over trial indices with bitwise-deterministic collection
std::vector<double> map_trials(int n, const VerifyOptions& o,
                               const std::function<double(int)>& f) {
    std::vector<double> out(static_cast<std::size_t>(n));
    if (o.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_threads())
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = f(i);
    } else {
        for (int i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = f(i);
    }
    return out;
}

const Grouping kCanonical{{0}, {1}, {2}};

// d_B, d_C combinations used by the inequality property suites
const std::vector<std::pair<int, int>> kBCDims = {{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                                                  {3, 4}, {4, 2}, {4, 3}, {4, 4}};

CriterionResult c1(const VerifyOptions& o) {
    double tol = o.tol.value_or(1e-9);
    DensityMatrix rho = density_from_pure(excessive_witness_qutrit());
    double n_abc = negativity(rho, {{0, 1}});
    double n_acb = negativity(rho, {{0, 2}});
    double n_a = negativity(rho, {{0}});
    ProtocolRecord rec = protocol_record(rho, kCanonical, MeasureKind::Negativity);

    double expect_com = std::sqrt(2.0) / 3.0;
    bool pass = std::abs(n_abc - expect_com) <= tol &&
                std::abs((n_a - n_acb) - (1.0 - expect_com)) <= tol &&
                rec.classification == Classification::Excessive;
    return {1, "qutrit witness golden values",
            pass,
            fmt("N(AB:C)=%.12g (want %.12g), gain=%.12g (want %.12g), %s", n_abc, expect_com,
                n_a - n_acb, 1.0 - expect_com, classification_name(rec.classification).c_str())};
}

CriterionResult c2(const VerifyOptions& o) {
    double tol = o.tol.value_or(1e-3);
    DensityMatrix rho = density_from_pure(excessive_witness_ququart());
    double l_abc = log_negativity(rho, {{0, 1}});
    double gain = log_negativity(rho, {{0}}) - log_negativity(rho, {{0, 2}});
    bool pass = std::abs(l_abc - 0.352) <= tol && std::abs(gain - 0.363) <= tol && gain > l_abc;
    return {2, "ququart witness log-negativity values", pass,
            fmt("L(AB:C)=%.6g, gain=%.6g, gain>communicated=%d", l_abc, gain, gain > l_abc)};
}

CriterionResult c3(const VerifyOptions& o) {
    double floor = -o.tol.value_or(1e-9);
    int n = o.trials;
    std::vector<double> res = map_trials(n, o, [&](int i) {
        auto [db, dc] = kBCDims[static_cast<std::size_t>(i) % kBCDims.size()];
        PureState psi = haar_random_pure(Dims{2, db, dc}, mix_seed(o.seed, 0x1000 + i));
        return theorem1_residual(psi, kCanonical);
    });
    double worst = *std::min_element(res.begin(), res.end());

    int search_trials = scaled(5000, o);
    auto witnesses = search_violation(3, search_trials, mix_seed(o.seed, 0x13), ResidualKind::Theorem1,
                                      Ensemble::Complex, o.policy);
    bool pass = worst >= floor && !witnesses.empty();
    return {3, "negativity inequality: qubit A holds, qutrit A violated", pass,
            fmt("min residual (d_A=2, %d trials) = %.3g; d_A=3 violations: %zu/%d", n, worst,
                witnesses.size(), search_trials)};
}

CriterionResult c4(const VerifyOptions& o) {
    double floor = -o.tol.value_or(1e-9);
    int n = o.trials;
    std::vector<double> res = map_trials(n, o, [&](int i) {
        auto [db, dc] = kBCDims[static_cast<std::size_t>(i) % kBCDims.size()];
        PureState psi = haar_random_pure(Dims{2, db, dc}, mix_seed(o.seed, 0x2000 + i));
        return theorem2_residual(psi, kCanonical);
    });
    double worst = *std::min_element(res.begin(), res.end());

    int n3 = scaled(5000, o);
    auto w3 = search_violation(3, n3, mix_seed(o.seed, 0x23), ResidualKind::Theorem2,
                               Ensemble::Complex, o.policy);
    // d_A = 3 is a conjecture check: report, don't fail on it.

    // Violations at d_A = 4 are far too rare under the complex-Gaussian
    // measure (none in 2e5 samples); the real-Gaussian ensemble exhibits them
    // at ~1.5e-4 per trial, so the search runs there.
    int n4 = scaled(20000, o);
    auto w4 = search_violation(4, n4, mix_seed(o.seed, 0x24), ResidualKind::Theorem2,
                               Ensemble::Real, o.policy);

    bool pass = worst >= floor && !w4.empty();
    return {4, "log-negativity inequality: qubit A holds, ququart A violated", pass,
            fmt("min residual (d_A=2, %d trials) = %.3g; d_A=3 violations: %zu/%d (conjecture); "
                "d_A=4 violations: %zu/%d (real ensemble)",
                n, worst, w3.size(), n3, w4.size(), n4)};
}

CriterionResult c5(const VerifyOptions& o) {
    double floor = -o.tol.value_or(1e-9);
    static const std::vector<std::vector<int>> dim_sets = {
        {2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 3, 3},
        {3, 2, 3}, {3, 3, 3}, {4, 2, 2}, {4, 2, 3}, {4, 3, 3}};
    int n = o.trials;
    std::vector<double> res = map_trials(n, o, [&](int i) {
        const auto& d = dim_sets[static_cast<std::size_t>(i) % dim_sets.size()];
        PureState psi = haar_random_pure(Dims{d}, mix_seed(o.seed, 0x5000 + i));
        double r = lemma1_residual(psi, kCanonical);
        return std::isinf(r) ? 0.0 : r; // rank-1 sentinel is vacuous
    });
    double worst = *std::min_element(res.begin(), res.end());
    return {5, "rank-weighted negativity inequality", worst >= floor,
            fmt("min residual over %d trials (dims up to [4,3,3]) = %.3g", n, worst)};
}

CriterionResult c6(const VerifyOptions& o) {
    double floor = -o.tol.value_or(1e-9);
    static const std::vector<std::vector<int>> dim_sets = {
        {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 3}, {3, 3, 3}, {4, 2, 2}};
    int n = o.trials;
    int excessive_entropy = 0;
    std::vector<double> res(static_cast<std::size_t>(n));
    std::vector<char> exc(static_cast<std::size_t>(n), 0);
    auto run = [&](int i) {
        const auto& d = dim_sets[static_cast<std::size_t>(i) % dim_sets.size()];
        PureState psi = haar_random_pure(Dims{d}, mix_seed(o.seed, 0x6000 + i));
        res[static_cast<std::size_t>(i)] = subadditivity_residual(psi, kCanonical);
        ProtocolRecord rec = protocol_record(density_from_pure(psi), kCanonical,
                                             MeasureKind::VonNeumannEntropyOfCut);
        exc[static_cast<std::size_t>(i)] = rec.classification == Classification::Excessive;
    };
    if (o.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(effective_threads())
        for (int i = 0; i < n; ++i)
            run(i);
    } else {
        for (int i = 0; i < n; ++i)
            run(i);
    }
    for (char e : exc)
        excessive_entropy += e;
    double worst = *std::min_element(res.begin(), res.end());
    bool pass = worst >= floor && excessive_entropy == 0;
    return {6, "entropy sub-additivity", pass,
            fmt("min residual over %d trials = %.3g; excessive-under-entropy count = %d", n, worst,
                excessive_entropy)};
}

CriterionResult c7(const VerifyOptions&) {
    // expected PPT pattern over the six partitions per q-regime
    const std::vector<bool> low_ppt{true, true, true, false, false, false};
    const std::vector<bool> high_ppt{false, false, true, false, false, false};
    bool pattern_ok = true;
    std::string bad;
    for (int i = 2; i <= 9; ++i) { // q = 0.10 .. 0.45
        double q = 0.05 * i;
        if (q > 0.45 + 1e-12)
            break;
        auto scan = table1_scan(q);
        for (std::size_t k = 0; k < scan.size(); ++k)
            if (scan[k].ppt != low_ppt[k]) {
                pattern_ok = false;
                bad = fmt("q=%.2f %s", q, scan[k].partition.c_str());
            }
    }
    for (int i = 11; i <= 18; ++i) { // q = 0.55 .. 0.90
        double q = 0.05 * i;
        auto scan = table1_scan(q);
        for (std::size_t k = 0; k < scan.size(); ++k)
            if (scan[k].ppt != high_ppt[k]) {
                pattern_ok = false;
                bad = fmt("q=%.2f %s", q, scan[k].partition.c_str());
            }
    }
    auto at_half = table1_scan(0.5);
    auto above = table1_scan(0.55);
    bool boundary_ok = at_half[0].negativity < 1e-6 && at_half[1].negativity < 1e-6 &&
                       above[0].negativity > 1e-4 && above[1].negativity > 1e-4;
    return {7, "five-qubit family separability table", pattern_ok && boundary_ok,
            fmt("pattern %s%s; N(12:345|q=0.5)=%.2e, N(2:1345|q=0.5)=%.2e, "
                "N(12:345|q=0.55)=%.2e, N(2:1345|q=0.55)=%.2e",
                pattern_ok ? "ok" : "MISMATCH ", bad.c_str(), at_half[0].negativity,
                at_half[1].negativity, above[0].negativity, above[1].negativity)};
}

SweepResult ame_sweep(const Grouping& g, ExecPolicy policy) {
    SweepGrid grid;
    grid.axes = {{"q", 0.0, 1.0, 0.01}};
    grid.grouping = g;
    return sweep(grid, Scenario::Ame, policy);
}

CriterionResult c8(const VerifyOptions& o) {
    SweepResult res = ame_sweep(fig3_grouping(), o.policy);
    double max_e_in = 0.0;
    bool exc_ok = true, eq_ok = true;
    std::string detail;
    for (const SweepRow& row : res.rows) {
        double q = row.coords[0];
        max_e_in = std::max(max_e_in, row.record.e_in);
        auto near = [&](double x) { return std::abs(q - x) < 1e-9; };
        if (near(0.1) || near(0.5) || near(0.9))
            exc_ok = exc_ok && row.record.classification == Classification::Excessive;
        if (near(0.0) || near(0.25) || near(1.0))
            eq_ok = eq_ok && std::abs(row.record.delta_e - row.record.e_com) < 1e-6;
    }
    bool pass = max_e_in <= 1e-9 && exc_ok && eq_ok;
    return {8, "fig3 sweep: zero e_in, excessive except q in {0,1/4,1}", pass,
            fmt("max e_in=%.2e, excessive-at-{0.1,0.5,0.9}=%d, equality-at-{0,0.25,1}=%d",
                max_e_in, exc_ok, eq_ok)};
}

CriterionResult c9(const VerifyOptions& o) {
    SweepResult res = ame_sweep(fig4_grouping(), o.policy);
    auto excessive_at = [&](std::size_t i) {
        return res.rows[i].record.classification == Classification::Excessive;
    };
    auto flip_inside = [&](double lo, double hi) {
        for (std::size_t i = 0; i + 1 < res.rows.size(); ++i) {
            double q0 = res.rows[i].coords[0], q1 = res.rows[i + 1].coords[0];
            if (q0 > lo && q1 < hi && excessive_at(i) != excessive_at(i + 1))
                return true;
        }
        return false;
    };
    bool lower = flip_inside(0.38, 0.42);
    bool upper = flip_inside(0.53, 0.57);
    bool ein_ok = true;
    for (const SweepRow& row : res.rows) {
        double q = row.coords[0];
        bool positive = row.record.e_in > 1e-9;
        if (q <= 0.5 + 1e-12 ? positive : !positive)
            ein_ok = false;
    }
    return {9, "fig4 sweep: excessive window brackets and e_in onset", lower && upper && ein_ok,
            fmt("flip in (0.38,0.42)=%d, flip in (0.53,0.57)=%d, e_in>0 iff q>0.5: %d", lower,
                upper, ein_ok)};
}

CriterionResult c10(const VerifyOptions& o) {
    int n = 101;
    std::vector<std::pair<ProtocolRecord, ProtocolRecord>> recs(static_cast<std::size_t>(n));
    auto run = [&](int i) { recs[static_cast<std::size_t>(i)] = catalysis_compare(0.01 * i); };
    if (o.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 4) num_threads(effective_threads())
        for (int i = 0; i < n; ++i)
            run(i);
    } else {
        for (int i = 0; i < n; ++i)
            run(i);
    }
    double max_ein_diff = 0.0;
    int exc_base = 0, exc_cat = 0;
    bool subset_ok = true, gain_ok = true;
    for (const auto& [base, cat] : recs) {
        max_ein_diff = std::max(max_ein_diff, std::abs(base.e_in - cat.e_in));
        bool be = base.classification == Classification::Excessive;
        bool ce = cat.classification == Classification::Excessive;
        exc_base += be;
        exc_cat += ce;
        if (be && !ce)
            subset_ok = false;
        if (be && ce && !(cat.delta_e > base.delta_e))
            gain_ok = false;
    }
    bool wider = subset_ok && exc_cat > exc_base;
    bool pass = max_ein_diff <= 1e-10 && wider && gain_ok;
    return {10, "catalysis: same e_in, wider excessive range, larger gain", pass,
            fmt("max |e_in diff|=%.2e; excessive points %d -> %d; gain strictly larger: %d",
                max_ein_diff, exc_base, exc_cat, gain_ok)};
}

CriterionResult c11(const VerifyOptions&) {
    bool ok = true;
    std::string bad;
    for (int i = 0; i <= 1000; ++i) {
        double d = i / 1000.0;
        bool want_deph = i == 1000;
        bool want_depol = d >= 0.5;
        bool want_ad = i == 1000;
        bool want_l2 = d <= 0.5;
        if (is_entanglement_breaking(dephasing(d)) != want_deph) {
            ok = false;
            bad = fmt("dephasing %.3f", d);
        }
        if (is_entanglement_breaking(depolarizing(d)) != want_depol) {
            ok = false;
            bad = fmt("depolarizing %.3f", d);
        }
        if (is_entanglement_breaking(amplitude_damping(d)) != want_ad) {
            ok = false;
            bad = fmt("ad %.3f", d);
        }
        if (is_entanglement_breaking(lambda2(d)) != want_l2) {
            ok = false;
            bad = fmt("lambda2 %.3f", d);
        }
    }
    if (!is_entanglement_breaking(lambda1())) {
        ok = false;
        bad = "lambda1";
    }
    return {11, "entanglement-breaking thresholds", ok,
            ok ? "all five families match on the 1e-3 grid" : "first mismatch: " + bad};
}

CriterionResult c12(const VerifyOptions& o) {
    double bound = o.tol.value_or(1e-9);
    int n = scaled(200, o);
    std::vector<KrausChannel> channels;
    channels.push_back(depolarizing(0.6));
    channels.push_back(dephasing(1.0));
    channels.push_back(amplitude_damping(1.0));
    channels.push_back(lambda1());

    double worst = -1.0;
    bool all_certified = true;
    for (const KrausChannel& ch : channels) {
        std::vector<double> deltas = map_trials(n, o, [&](int i) {
            PureState psi = haar_random_pure(Dims{2, 2, 2}, mix_seed(o.seed, 0xc000 + i));
            return eb_no_gain_check(ch, density_from_pure(psi), kCanonical).delta_e;
        });
        worst = std::max(worst, *std::max_element(deltas.begin(), deltas.end()));
        all_certified = all_certified && is_entanglement_breaking(ch);
    }
    bool pass = worst <= bound && all_certified;
    return {12, "EB channels never increase lab entanglement", pass,
            fmt("max delta_e over %d states x 4 channels = %.3g", n, worst)};
}

CriterionResult c13(const VerifyOptions&) {
    const char* families[] = {"dephasing", "depolarizing", "ad"};
    bool argmax_ok = true, nonexc_ok = true, p_ok = true;
    std::string detail;

    auto argmax_s = [&](const KrausChannel& ch) {
        double best = -1.0;
        double best_s = 0.0;
        ProtocolRecord best_rec;
        for (int i = 0; i <= 100; ++i) {
            double s = 0.01 * i;
            ProtocolRecord rec = indirect_noisy(0.34, s, ch);
            if (rec.delta_e > best) {
                best = rec.delta_e;
                best_s = s;
                best_rec = rec;
            }
        }
        return std::pair<double, ProtocolRecord>(best_s, best_rec);
    };

    for (const char* fam : families) {
        for (double d : {0.1, 0.3}) {
            auto [s_star, rec] = argmax_s(parse_channel_spec(fmt("%s:%g", fam, d)));
            if (std::abs(s_star - 1.0) > 1e-9)
                argmax_ok = false;
        }
        // the optimum leaves the excessive region only at genuinely low noise
        auto [s_low, rec_low] = argmax_s(parse_channel_spec(fmt("%s:0.02", fam)));
        if (std::abs(s_low - 1.0) > 1e-9)
            argmax_ok = false;
        if (rec_low.classification == Classification::Excessive)
            nonexc_ok = false;
    }

    std::vector<KrausChannel> p_channels;
    p_channels.push_back(identity_channel());
    for (const char* fam : families)
        for (double d : {0.1, 0.3})
            p_channels.push_back(parse_channel_spec(fmt("%s:%g", fam, d)));
    for (const KrausChannel& ch : p_channels) {
        double best = -1.0, best_p = 0.0;
        for (int i = 0; i <= 100; ++i) {
            double p = 0.01 * i;
            ProtocolRecord rec = indirect_noisy(p, 2.0 / 3.0, ch);
            if (rec.delta_e > best) {
                best = rec.delta_e;
                best_p = p;
            }
        }
        if (std::abs(best_p - 1.0 / 3.0) > 0.01 + 1e-12)
            p_ok = false;
    }
    bool pass = argmax_ok && nonexc_ok && p_ok;
    return {13, "fig7 optima: pure ancilla best, non-excessive at low noise, p=1/3 best", pass,
            fmt("argmax_s=1: %d; low-noise optimum non-excessive: %d; argmax_p=1/3: %d", argmax_ok,
                nonexc_ok, p_ok)};
}

CriterionResult c14(const VerifyOptions&) {
    auto argmax_p = [&](double d) {
        double best = -1.0, best_p = 0.0;
        for (int i = 0; i <= 100; ++i) {
            double p = 0.01 * i;
            auto r = direct_then_indirect(p, 2.0 / 3.0, depolarizing(d));
            if (r.record.delta_e > best) {
                best = r.record.delta_e;
                best_p = p;
            }
        }
        return best_p;
    };
    double p1 = argmax_p(0.1), p3 = argmax_p(0.3);
    bool mono = p1 <= p3 + 1e-12;

    bool ident_ok = true;
    KrausChannel ident = identity_channel();
    for (double p : {0.0, 0.34, 2.0 / 3.0, 1.0})
        for (double s : {0.0, 0.5, 1.0}) {
            ProtocolRecord a = direct_then_indirect(p, s, ident).record;
            ProtocolRecord b = indirect_noisy(p, s, ident);
            if (std::abs(a.e_in - b.e_in) > 1e-12 || std::abs(a.e_com - b.e_com) > 1e-12 ||
                std::abs(a.e_fin - b.e_fin) > 1e-12 || a.classification != b.classification)
                ident_ok = false;
        }
    return {14, "fig9: stronger noise favors more initial entanglement; identity reduces to fig7",
            mono && ident_ok,
            fmt("argmax_p(0.1)=%.2f <= argmax_p(0.3)=%.2f: %d; identity reduction: %d", p1, p3,
                mono, ident_ok)};
}

CriterionResult c15(const VerifyOptions& o) {
    // matched case: transit channel and local noise both amplitude damping
    double best = -1.0, best_local = 0.0, best_chan = 0.0;
    Classification best_class = Classification::NoGain;
    int n = 101;
    std::vector<double> gains(static_cast<std::size_t>(n * n));
    std::vector<Classification> cls(static_cast<std::size_t>(n * n));
    auto run = [&](int idx) {
        int i = idx / n, j = idx % n;
        ProtocolRecord rec = noisy_labs(0.34, amplitude_damping(0.01 * j), 0.01 * i);
        gains[static_cast<std::size_t>(idx)] = rec.delta_e;
        cls[static_cast<std::size_t>(idx)] = rec.classification;
    };
    if (o.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(effective_threads())
        for (int idx = 0; idx < n * n; ++idx)
            run(idx);
    } else {
        for (int idx = 0; idx < n * n; ++idx)
            run(idx);
    }
    for (int idx = 0; idx < n * n; ++idx)
        if (gains[static_cast<std::size_t>(idx)] > best) {
            best = gains[static_cast<std::size_t>(idx)];
            best_local = 0.01 * (idx / n);
            best_chan = 0.01 * (idx % n);
            best_class = cls[static_cast<std::size_t>(idx)];
        }

    // reference: fig9 amplitude-damping panel maximum at the same p
    double fig9_max = -1.0;
    std::vector<double> ref(static_cast<std::size_t>(n * n));
    auto run_ref = [&](int idx) {
        int i = idx / n, j = idx % n;
        ref[static_cast<std::size_t>(idx)] =
            direct_then_indirect(0.34, 0.01 * i, amplitude_damping(0.01 * j)).record.delta_e;
    };
    if (o.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 8) num_threads(effective_threads())
        for (int idx = 0; idx < n * n; ++idx)
            run_ref(idx);
    } else {
        for (int idx = 0; idx < n * n; ++idx)
            run_ref(idx);
    }
    fig9_max = *std::max_element(ref.begin(), ref.end());

    bool location_ok = best_local >= 0.4 && best_local <= 0.6;
    bool class_ok = best_class == Classification::Excessive;
    bool ratio_ok = best < 0.3 * fig9_max;
    bool pass = location_ok && class_ok && ratio_ok;
    return {15, "fig11: local-noise grid maximum", pass,
            fmt("max gain %.5g at (local=%.2f, channel=%.2f) %s; fig9 max %.5g; ratio %.3g "
                "(want <0.3, local in [0.4,0.6], Excessive)",
                best, best_local, best_chan, classification_name(best_class).c_str(), fig9_max,
                best / fig9_max)};
}

CriterionResult c16(const VerifyOptions& o) {
    double tol = o.tol.value_or(1e-9);
    static const std::vector<std::vector<int>> dim_sets = {{2, 2, 2}, {3, 2, 2}, {2, 3, 2},
                                                           {2, 2, 4}, {3, 3, 2}};
    int n = scaled(500, o);
    std::vector<double> diffs = map_trials(n, o, [&](int i) {
        const auto& d = dim_sets[static_cast<std::size_t>(i) % dim_sets.size()];
        PureState psi = haar_random_pure(Dims{d}, mix_seed(o.seed, 0xf000 + i));
        DensityMatrix rho = density_from_pure(psi);
        double worst = 0.0;
        for (const std::vector<int>& left : {std::vector<int>{0}, {0, 1}, {0, 2}}) {
            double a = negativity(rho, {left});
            double b = negativity_from_schmidt(psi, {left});
            worst = std::max(worst, std::abs(a - b));
        }
        return worst;
    });
    double worst = *std::max_element(diffs.begin(), diffs.end());
    return {16, "negativity dual-route equivalence", worst <= tol,
            fmt("max |PT-route - Schmidt-route| over %d states x 3 cuts = %.3g", n, worst)};
}

} // namespace

std::vector<int> paper_suite() {
    return {1, 2, 7, 8, 9, 10, 11, 13, 14, 15};
}

std::vector<int> property_suite() {
    return {3, 4, 5, 6, 12, 16};
}

std::vector<int> all_criteria() {
    return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
    switch (id) {
    case 1: return c1(opts);
    case 2: return c2(opts);
    case 3: return c3(opts);
    case 4: return c4(opts);
    case 5: return c5(opts);
    case 6: return c6(opts);
    case 7: return c7(opts);
    case 8: return c8(opts);
    case 9: return c9(opts);
    case 10: return c10(opts);
    case 11: return c11(opts);
    case 12: return c12(opts);
    case 13: return c13(opts);
    case 14: return c14(opts);
    case 15: return c15(opts);
    case 16: return c16(opts);
    default:
        throw std::invalid_argument("unknown criterion id " + std::to_string(id));
    }
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& opts) {
    std::vector<CriterionResult> out;
    out.reserve(ids.size());
    for (int id : ids)
        out.push_back(run_criterion(id, opts));
    return out;
}

} // namespace entdist
