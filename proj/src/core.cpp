#include "winter/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

namespace winter {

namespace {

void require_N(int N) {
    if (N < 1) throw DomainError(fmt::format("cavity ratio N must be >= 1, got {}", N));
}

}  // namespace

CouplingSet CouplingSet::from_g(double g, int N) {
    require_N(N);
    const double z = -g;
    return {g, z, (1.0 + 1.0 / N) * z, N};
}

CouplingSet CouplingSet::from_z(double z, int N) {
    require_N(N);
    return {-z, z, (1.0 + 1.0 / N) * z, N};
}

CouplingSet CouplingSet::from_zeta(double zeta, int N) {
    require_N(N);
    const double z = zeta * N / (N + 1.0);
    return {-z, z, zeta, N};
}

double LevelIndex::free_momentum() const {
    if (kind == LevelKind::Exceptional) return n;
    return n + static_cast<double>(l) / N;
}

std::string LevelIndex::label() const {
    if (kind == LevelKind::Exceptional) return fmt::format("e_{}", n);
    const int s = free_numerator();
    const int d = std::gcd(s, N);
    if (N / d == 1) return fmt::format("k_{}", s / d);
    return fmt::format("k_{}/{}", s / d, N / d);
}

const char* to_string(LevelKind kind) {
    switch (kind) {
        case LevelKind::Exceptional: return "exceptional";
        case LevelKind::Resonant: return "resonant";
        case LevelKind::NonResonant: return "non-resonant";
    }
    return "?";
}

LevelIndex classify_free_momentum(int N, int s) {
    require_N(N);
    if (s < 1) throw DomainError(fmt::format("free-momentum numerator s must be >= 1, got {}", s));
    int n = s / N;
    int l = s % N;
    if (2 * l > N) {
        ++n;
        l -= N;
    }
    return {N, n, l, l == 0 ? LevelKind::Resonant : LevelKind::NonResonant};
}

LevelIndex normalize_index(int N, int n, int l) {
    require_N(N);
    const long s = static_cast<long>(n) * N + l;
    if (s < 1) throw DomainError(fmt::format("level (n={}, l={}) has non-positive free momentum", n, l));
    return classify_free_momentum(N, static_cast<int>(s));
}

LevelIndex exceptional_index(int N, int n) {
    require_N(N);
    if (n < 1) throw DomainError("exceptional levels start at n = 1");
    return {N, n, 0, LevelKind::Exceptional};
}

std::vector<LevelIndex> exceptional_levels(int N, double k_max) {
    std::vector<LevelIndex> out;
    for (int n = 1; n < k_max; ++n) out.push_back(exceptional_index(N, n));
    return out;
}

double critical_coupling(int n, int N, int j) {
    require_N(N);
    if (n < 1) throw DomainError("critical coupling needs n >= 1");
    return static_cast<double>(j) / (static_cast<double>(n) * N);
}

double midpoint_coupling(int n, int N, int l) {
    require_N(N);
    if (n < 1) throw DomainError("midpoint coupling needs n >= 1");
    return (l + 0.5) / (static_cast<double>(n) * N);
}

double level_range(int N, LevelKind kind) {
    require_N(N);
    switch (kind) {
        case LevelKind::Resonant: return 2.0 / (N + 1);
        case LevelKind::NonResonant: return 1.0 / (N + 1);
        case LevelKind::Exceptional: return 0.0;
    }
    return 0.0;
}

std::string Method::name() const {
    switch (kind) {
        case MethodKind::Exact: return "exact";
        case MethodKind::Perturbative: return fmt::format("perturbative{}", order);
        case MethodKind::FunctionSeries: return fmt::format("series{}", order);
        case MethodKind::Recursive: return fmt::format("recursive{}", order);
        case MethodKind::ResummedLargeN: return "large-n";
    }
    return "?";
}

void LevelCurve::push(double z, double k) {
    if (!samples_.empty() && !(z > samples_.back().first))
        throw DomainError(fmt::format("curve samples must be strictly increasing in z ({} after {})", z,
                                      samples_.back().first));
    samples_.emplace_back(z, k);
}

double LevelCurve::range() const {
    if (samples_.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(samples_.begin(), samples_.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    return hi->second - lo->second;
}

}  // namespace winter
