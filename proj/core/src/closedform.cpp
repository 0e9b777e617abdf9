#include "cohchan/closedform.hpp"

#include "cohchan/errors.hpp"
#include "cohchan/linalg.hpp"

#include <cmath>
#include <string>

namespace cohchan {

namespace {

void check_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0))
        throw ArgumentError(std::string(name) + " = " + std::to_string(value) + " outside [0, 1]");
}

// coefficient of order j (1-based) in a smaller table, 0 when absent
BigInt at(const std::vector<BigInt>& values, int j) {
    if (j < 1 || j > static_cast<int>(values.size())) return 0;
    return values[static_cast<std::size_t>(j - 1)];
}

std::vector<BigInt> alpha_values(int n_qubits) {
    std::vector<BigInt> cur{1};
    for (int n = 2; n <= n_qubits; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n));
        next.front() = n;
        next.back() = 1;
        for (int j = 2; j <= n - 1; ++j)
            next[static_cast<std::size_t>(j - 1)] = at(cur, j - 1) + at(cur, j);
        cur = std::move(next);
    }
    return cur;
}

std::vector<BigInt> beta_values(int n_qubits) {
    std::vector<BigInt> cur{1, 2};
    for (int n = 2; n <= n_qubits; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) + 1);
        next[0] = (BigInt(1) << n) - 1;
        next[1] = (BigInt(1) << (n - 1)) * (n + 1);
        for (int j = 3; j <= n + 1; ++j)
            next[static_cast<std::size_t>(j - 1)] = 2 * at(cur, j) + at(cur, j - 1);
        cur = std::move(next);
    }
    return cur;
}

std::vector<BigInt> eta_values(int n_qubits) {
    std::vector<BigInt> cur{1};
    for (int n = 3; n <= n_qubits; ++n) {
        std::vector<BigInt> next(static_cast<std::size_t>(n) - 1);
        next.front() = n - 1;
        next.back() = 1;
        for (int j = 2; j <= n - 2; ++j)
            next[static_cast<std::size_t>(j - 1)] = at(cur, j - 1) + at(cur, j);
        cur = std::move(next);
    }
    return cur;
}

double l1_denominator(int n_qubits) {
    return std::pow(2.0, n_qubits) - 1.0;
}

}  // namespace

CoefficientTable coefficients(CoefficientFamily family, int n_qubits) {
    CoefficientTable table;
    table.family = family;
    table.n_qubits = n_qubits;
    switch (family) {
        case CoefficientFamily::Alpha:
            if (n_qubits < 1) throw ArgumentError("alpha coefficients require N >= 1");
            table.values = alpha_values(n_qubits);
            break;
        case CoefficientFamily::Beta:
            if (n_qubits < 1) throw ArgumentError("beta coefficients require N >= 1");
            table.values = beta_values(n_qubits);
            break;
        case CoefficientFamily::Eta:
            if (n_qubits < 2) throw ArgumentError("eta coefficients require N >= 2");
            table.values = eta_values(n_qubits);
            break;
    }
    return table;
}

bool l1_closed_form_available(int n_qubits, double p, double mu) {
    return n_qubits == 1 || mu == 0.0 || mu == 0.5 || mu == 1.0 || p == 0.5;
}

std::optional<double> l1_phase_flip(int n_qubits, double p, double mu) {
    if (n_qubits < 1) throw ArgumentError("l1_phase_flip: qubit count must be positive");
    check_unit_interval(p, "p");
    check_unit_interval(mu, "mu");

    const double q = std::abs(1.0 - 2.0 * p);
    if (n_qubits == 1) return q;  // a single qubit never sees the correlation

    const double denom = l1_denominator(n_qubits);
    if (mu == 0.0) {
        const auto alpha = coefficients(CoefficientFamily::Alpha, n_qubits);
        double sum = 0.0;
        double qn = 1.0;
        for (const BigInt& a : alpha.values) {
            qn *= q;
            sum += a.convert_to<double>() * qn;
        }
        return sum / denom;
    }
    if (mu == 1.0)
        return (std::pow(2.0, n_qubits - 1) * (1.0 + q) - 1.0) / denom;
    if (mu == 0.5) {
        const double pe = std::min(p, 1.0 - p);  // curve is symmetric about p = 0.5
        const auto beta = coefficients(CoefficientFamily::Beta, n_qubits);
        double sum = 0.0;
        double pk = 1.0;
        double sgn = 1.0;
        for (const BigInt& b : beta.values) {
            sum += sgn * b.convert_to<double>() * pk;
            pk *= pe;
            sgn = -sgn;
        }
        return sum / denom;
    }
    if (p == 0.5) {
        const auto eta = coefficients(CoefficientFamily::Eta, n_qubits);
        double sum = 0.0;
        double mun = 1.0;
        for (const BigInt& e : eta.values) {
            mun *= mu;
            sum += e.convert_to<double>() * mun;
        }
        return sum / denom;
    }
    return std::nullopt;
}

double re_phase_flip(int n_qubits, double p, double mu) {
    if (n_qubits < 1) throw ArgumentError("re_phase_flip: qubit count must be positive");
    check_unit_interval(p, "p");
    check_unit_interval(mu, "mu");
    if (p == 0.0 || p == 1.0) return 1.0;
    const double h = binary_entropy(p);
    if (mu == 0.0) return 1.0 - h;
    if (mu == 1.0) return 1.0 - h / static_cast<double>(n_qubits);
    return 1.0 - h + k_factor(p, mu) * h * (1.0 - 1.0 / static_cast<double>(n_qubits));
}

std::array<double, 4> epsilon_eigenvalues(double p, double mu) {
    check_unit_interval(p, "p");
    check_unit_interval(mu, "mu");
    const double shared = p * (1.0 - p) * (1.0 - mu);
    return {shared, shared, p * (p + mu - p * mu), (1.0 - p) * (1.0 - p + p * mu)};
}

double k_factor(double p, double mu) {
    check_unit_interval(p, "p");
    check_unit_interval(mu, "mu");
    if (p == 0.0 || p == 1.0)
        throw SingularParameterError("k_factor is undefined where H2(p) = 0");
    if (mu == 0.0) return 0.0;
    if (mu == 1.0) return 1.0;
    const auto eps = epsilon_eigenvalues(p, mu);
    double sum = 0.0;
    for (const double e : eps)
        if (e > 0.0) sum += e * std::log2(e);
    const double h = binary_entropy(p);
    return (sum + 2.0 * h) / h;
}

double asymptotic_re(double p, double mu) {
    check_unit_interval(p, "p");
    check_unit_interval(mu, "mu");
    if (p == 0.0 || p == 1.0) return 1.0;
    return 1.0 - (1.0 - k_factor(p, mu)) * binary_entropy(p);
}

double asymptotic_l1_fully_correlated(double p) {
    check_unit_interval(p, "p");
    return (1.0 + std::abs(1.0 - 2.0 * p)) / 2.0;
}

std::optional<double> reduce_channel(ChannelKind kind, double p) {
    check_unit_interval(p, "p");
    switch (kind) {
        case ChannelKind::BitFlip: return std::nullopt;  // coherence frozen
        case ChannelKind::PhaseFlip: return p;
        case ChannelKind::BitPhaseFlip: return p;
        case ChannelKind::Depolarizing: return 2.0 * p / 3.0;
    }
    throw ArgumentError("unknown channel kind");
}

}  // namespace cohchan
