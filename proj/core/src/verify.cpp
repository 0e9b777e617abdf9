#include "cohchan/closedform.hpp"
#include "cohchan/errors.hpp"
#include "cohchan/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace cohchan {

namespace {

constexpr std::array<ChannelKind, 4> kAllKinds{ChannelKind::PhaseFlip, ChannelKind::BitFlip,
                                               ChannelKind::BitPhaseFlip,
                                               ChannelKind::Depolarizing};

std::vector<double> linspace01(int points) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
        grid[static_cast<std::size_t>(i)] = static_cast<double>(i) / (points - 1);
    return grid;
}

std::string format_tolerance(double tol) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0e", tol);
    return buf;
}

struct CheckRecorder {
    VerificationReport& report;

    void add(std::string name, double worst, double tol, std::string extra = "") {
        VerificationCheck check;
        check.name = std::move(name);
        check.worst_deviation = worst;
        check.passed = worst <= tol;
        check.detail = "tolerance " + format_tolerance(tol);
        if (!extra.empty()) check.detail += ", " + extra;
        report.checks.push_back(std::move(check));
    }
};

double min_eigenvalue(const ComplexMatrix& m) {
    const auto spectrum = hermitian_eigenvalues(m).eigenvalues;
    return spectrum.back();
}

}  // namespace

VerificationReport verify(int n_max) {
    if (n_max < 1 || n_max > 7)
        throw ArgumentError("verify: n_max must be in [1, 7]");

    VerificationReport report_out;
    CheckRecorder rec{report_out};

    const auto p11 = linspace01(11);
    const auto p21 = linspace01(21);
    const auto mu11 = linspace01(11);
    const std::vector<double> mu5{0.0, 0.25, 0.5, 0.75, 1.0};
    const int n_small = std::min(n_max, 5);

    // enumeration measure: probabilities sum to 1 for every kind
    {
        double worst = 0.0;
        for (const ChannelKind kind : kAllKinds)
            for (int n = 1; n <= n_max; ++n)
                for (const double p : p11)
                    for (const double mu : mu5) {
                        double sum = 0.0;
                        for (const auto& ps : enumerate_strings({kind, p, mu, n}))
                            sum += ps.probability;
                        worst = std::max(worst, std::abs(sum - 1.0));
                    }
        rec.add("string_probabilities_sum_to_one", worst, 1e-12);
    }

    // mu = 0 joint probabilities factorize exactly
    {
        double worst = 0.0;
        for (const ChannelKind kind : kAllKinds)
            for (int n = 1; n <= n_max; ++n)
                for (const double p : {0.1, 0.3, 0.7}) {
                    const auto probs = single_qubit_probs(kind, p);
                    for (const auto& ps : enumerate_strings({kind, p, 0.0, n})) {
                        double product = 1.0;
                        for (const std::uint8_t s : ps.word) product *= probs[s];
                        worst = std::max(worst, std::abs(ps.probability - product));
                    }
                }
        rec.add("mu_zero_probability_factorizes", worst, 0.0, "exact product ordering");
    }

    // channel application preserves the density-matrix structure
    {
        double worst_trace = 0.0, worst_herm = 0.0, worst_neg = 0.0;
        for (const ChannelKind kind : kAllKinds)
            for (int n = 1; n <= n_small; ++n)
                for (const std::uint64_t seed : {11u, 23u})
                    for (const auto& [p, mu] : std::initializer_list<std::pair<double, double>>{
                             {0.3, 0.4}, {0.7, 0.9}}) {
                        const ComplexMatrix rho0 = random_density_matrix(n, seed);
                        const ComplexMatrix out = apply_channel(rho0, {kind, p, mu, n});
                        worst_trace = std::max(worst_trace, std::abs(out.trace() - Complex{1.0}));
                        worst_herm =
                            std::max(worst_herm, (out - out.adjoint()).cwiseAbs().maxCoeff());
                        worst_neg = std::max(worst_neg, std::max(0.0, -min_eigenvalue(out)));
                    }
        rec.add("channel_preserves_trace", worst_trace, 1e-10);
        rec.add("channel_preserves_hermiticity", worst_herm, 1e-12);
        rec.add("channel_preserves_positivity", worst_neg, 1e-9);
    }

    // fast dephasing path against full enumeration
    {
        double worst = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : {0.25, 0.3, 0.5})
                for (const double mu : {0.0, 0.4, 0.75, 1.0}) {
                    const CorrelatedChannel channel(ChannelKind::PhaseFlip, p, mu, n);
                    const ComplexMatrix fast = apply_phase_flip_fast(input, channel);
                    const ComplexMatrix slow = apply_channel(input, channel);
                    worst = std::max(worst, (fast - slow).cwiseAbs().maxCoeff());
                }
        }
        for (int n = 1; n <= std::min(n_max, 4); ++n) {
            const ComplexMatrix rho0 = random_density_matrix(n, 5);
            const CorrelatedChannel channel(ChannelKind::PhaseFlip, 0.35, 0.6, n);
            worst = std::max(worst, (apply_phase_flip_fast(rho0, channel) -
                                     apply_channel(rho0, channel))
                                        .cwiseAbs()
                                        .maxCoeff());
        }
        rec.add("fast_path_matches_enumeration", worst, 1e-12);
    }

    // bit-phase flip reproduces the phase-flip coherence values
    {
        double worst = 0.0;
        for (int n = 1; n <= n_small; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (const double mu : {0.0, 0.5, 1.0}) {
                    const ComplexMatrix a =
                        apply_channel(input, {ChannelKind::BitPhaseFlip, p, mu, n});
                    const ComplexMatrix b = apply_channel(input, {ChannelKind::PhaseFlip, p, mu, n});
                    worst = std::max(worst, std::abs(coherence_l1(a) - coherence_l1(b)));
                    worst = std::max(worst, std::abs(coherence_relative_entropy(a) -
                                                     coherence_relative_entropy(b)));
                }
        }
        rec.add("bit_phase_flip_matches_phase_flip", worst, 1e-12);
    }

    // bit flip freezes both normalized measures at 1
    {
        double worst = 0.0;
        for (int n = 1; n <= n_small; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (const double mu : {0.0, 0.5, 1.0}) {
                    const auto rep = report(apply_channel(input, {ChannelKind::BitFlip, p, mu, n}));
                    worst = std::max(worst, std::abs(rep.c_l1_normalized - 1.0));
                    worst = std::max(worst, std::abs(rep.c_re_normalized - 1.0));
                }
        }
        rec.add("bit_flip_freezes_coherence", worst, 1e-12);
    }

    // depolarizing equals phase flip at p' = 2p/3
    {
        double worst = 0.0;
        for (int n = 1; n <= n_small; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : {0.0, 0.25, 0.5, 0.75, 1.0})
                for (const double mu : {0.0, 0.5, 1.0}) {
                    const ComplexMatrix a =
                        apply_channel(input, {ChannelKind::Depolarizing, p, mu, n});
                    const ComplexMatrix b =
                        apply_channel(input, {ChannelKind::PhaseFlip, 2.0 * p / 3.0, mu, n});
                    worst = std::max(worst, std::abs(coherence_l1(a) - coherence_l1(b)));
                    worst = std::max(worst, std::abs(coherence_relative_entropy(a) -
                                                     coherence_relative_entropy(b)));
                }
        }
        rec.add("depolarizing_reduces_to_phase_flip", worst, 1e-9);
    }

    // l1 closed forms against the enumeration engine
    {
        double worst = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            auto compare = [&](double p, double mu) {
                const auto closed = l1_phase_flip(n, p, mu);
                if (!closed) return;
                const double brute = normalized(
                    coherence_l1(apply_channel(input, {ChannelKind::PhaseFlip, p, mu, n})),
                    Measure::L1, n);
                worst = std::max(worst, std::abs(*closed - brute));
            };
            for (const double mu : {0.0, 0.5, 1.0})
                for (const double p : p21) compare(p, mu);
            for (const double mu : mu11) compare(0.5, mu);
        }
        rec.add("l1_closed_forms_match_brute_force", worst, 1e-10);
    }

    // relative-entropy closed form on the full (p, mu) grid
    {
        double worst = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : p11)
                for (const double mu : mu11) {
                    const double closed = re_phase_flip(n, p, mu);
                    const double brute =
                        normalized(coherence_relative_entropy(
                                       apply_channel(input, {ChannelKind::PhaseFlip, p, mu, n})),
                                   Measure::RelativeEntropy, n);
                    worst = std::max(worst, std::abs(closed - brute));
                }
        }
        rec.add("re_closed_form_matches_brute_force", worst, 1e-9);
    }

    // the k factor: epsilon route, conditional-entropy route, brute spectrum
    {
        double worst = 0.0;
        const ComplexMatrix psi2 = maximally_coherent_state(2);
        for (const double p : {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95})
            for (const double mu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                const double h = binary_entropy(p);
                const double k_eps = k_factor(p, mu);
                const double cond = (1.0 - p) * binary_entropy(p * (1.0 - mu)) +
                                    p * binary_entropy((1.0 - p) * (1.0 - mu));
                const double k_cond = (h - cond) / h;
                const auto spectrum =
                    hermitian_eigenvalues(
                        apply_channel(psi2, {ChannelKind::PhaseFlip, p, mu, 2}))
                        .eigenvalues;
                double sum = 0.0;
                for (const double lambda : spectrum)
                    if (lambda > 1e-12) sum += lambda * std::log2(lambda);
                const double k_brute = (sum + 2.0 * h) / h;
                worst = std::max({worst, std::abs(k_eps - k_cond), std::abs(k_eps - k_brute)});
            }
        rec.add("k_factor_routes_agree", worst, 1e-9);
    }

    // unlocalized coherence equals the mutual information on |Psi_N>
    {
        double worst = 0.0;
        for (const ChannelKind kind : kAllKinds)
            for (int n = 1; n <= n_small; ++n) {
                const ComplexMatrix input = maximally_coherent_state(n);
                for (const double p : {0.0, 0.2, 0.4, 0.6, 0.8, 1.0})
                    for (const double mu : mu5) {
                        const auto rep = report(apply_channel(input, {kind, p, mu, n}));
                        worst = std::max(worst, std::abs(rep.uqc - rep.mutual_information));
                    }
            }
        rec.add("uqc_equals_mutual_information", worst, 1e-9);
    }

    // fully correlated phase flip transfers (N-1) H2(p) of correlation
    {
        double worst = 0.0;
        for (int n = 1; n <= n_small; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : p11) {
                const auto rep = report(apply_phase_flip_fast(input, {ChannelKind::PhaseFlip, p, 1.0, n}));
                worst = std::max(worst,
                                 std::abs(rep.uqc - (n - 1) * binary_entropy(p)));
            }
        }
        rec.add("uqc_mu1_matches_formula", worst, 1e-9);
    }

    // phase flip: change of unlocalized coherence = total correlation gain
    {
        double worst = 0.0;
        for (int n = 2; n <= std::min(n_max, 4); ++n)
            for (const std::uint64_t seed : {3u, 17u, 29u})
                for (const auto& [p, mu] : std::initializer_list<std::pair<double, double>>{
                         {0.3, 0.6}, {0.7, 0.25}}) {
                    const ComplexMatrix rho0 = random_density_matrix(n, seed);
                    const auto before = report(rho0);
                    const auto after =
                        report(apply_phase_flip_fast(rho0, {ChannelKind::PhaseFlip, p, mu, n}));
                    const double lhs = after.uqc - before.uqc;
                    const double rhs = after.mutual_information - before.mutual_information;
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
        rec.add("phase_flip_delta_identity", worst, 1e-9);
    }

    // coherence is symmetric about p = 0.5
    {
        double worst = 0.0;
        for (int n = 1; n <= n_max; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : {0.1, 0.25, 0.45})
                for (const double mu : {0.0, 0.4, 1.0}) {
                    const ComplexMatrix lo =
                        apply_phase_flip_fast(input, {ChannelKind::PhaseFlip, p, mu, n});
                    const ComplexMatrix hi =
                        apply_phase_flip_fast(input, {ChannelKind::PhaseFlip, 1.0 - p, mu, n});
                    worst = std::max(worst, std::abs(coherence_l1(lo) - coherence_l1(hi)));
                    worst = std::max(worst, std::abs(coherence_relative_entropy(lo) -
                                                     coherence_relative_entropy(hi)));
                }
        }
        rec.add("coherence_symmetric_in_p", worst, 1e-12);
    }

    // both normalized measures are non-decreasing in mu for fixed p
    {
        double worst = 0.0;
        for (int n = 2; n <= n_small; ++n) {
            const ComplexMatrix input = maximally_coherent_state(n);
            for (const double p : {0.25, 0.4}) {
                double prev_l1 = -1.0, prev_re = -1.0;
                for (const double mu : mu11) {
                    const auto rep =
                        report(apply_phase_flip_fast(input, {ChannelKind::PhaseFlip, p, mu, n}));
                    if (prev_l1 >= 0.0) {
                        worst = std::max(worst, prev_l1 - rep.c_l1_normalized);
                        worst = std::max(worst, prev_re - rep.c_re_normalized);
                    }
                    prev_l1 = rep.c_l1_normalized;
                    prev_re = rep.c_re_normalized;
                }
            }
        }
        rec.add("coherence_monotone_in_mu", std::max(worst, 0.0), 1e-12);
    }

    // alpha coefficients are binomials (exact integer comparison)
    {
        double mismatches = 0.0;
        for (int n = 1; n <= 20; ++n) {
            const auto table = coefficients(CoefficientFamily::Alpha, n);
            BigInt binom = 1;
            for (int k = 1; k <= n; ++k) {
                binom = binom * (n - k + 1) / k;
                if (table.values[static_cast<std::size_t>(k - 1)] != binom) mismatches += 1.0;
            }
        }
        rec.add("alpha_equals_binomials", mismatches, 0.0, "N up to 20");
    }

    return report_out;
}

}  // namespace cohchan
