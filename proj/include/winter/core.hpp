#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace winter {

// Bad input or violated precondition. The CLI maps it to exit code 2.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Root count mismatch, stalled refinement, non-convergence. Exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Value-or-pole result for functions with simple poles on the real axis.
template <class T>
struct Eval {
    T value{};
    bool pole = false;

    explicit operator bool() const { return !pole; }
};

// Couplings in the three conventions used for this model.
// z = -g; zeta = (1 + 1/N) z. Built once and passed around.
class CouplingSet {
public:
    static CouplingSet from_g(double g, int N);
    static CouplingSet from_z(double z, int N);
    static CouplingSet from_zeta(double zeta, int N);

    double g() const { return g_; }
    double z() const { return z_; }
    double zeta() const { return zeta_; }
    int N() const { return N_; }

private:
    CouplingSet(double g, double z, double zeta, int N) : g_(g), z_(z), zeta_(zeta), N_(N) {}

    double g_, z_, zeta_;
    int N_;
};

enum class LevelKind { Exceptional, Resonant, NonResonant };

struct LevelIndex {
    int N = 1;
    int n = 0;
    int l = 0;
    LevelKind kind = LevelKind::Resonant;

    // s = nN + l; meaningless for exceptional levels.
    int free_numerator() const { return n * N + l; }
    double free_momentum() const;
    std::string label() const;

    friend bool operator==(const LevelIndex&, const LevelIndex&) = default;
};

const char* to_string(LevelKind kind);

LevelIndex classify_free_momentum(int N, int s);

// Accepts any remainder convention (0..N-1 included) and maps l into (-N/2, N/2].
LevelIndex normalize_index(int N, int n, int l);

LevelIndex exceptional_index(int N, int n);

// Exceptional levels with 0 < k < k_max, i.e. k = 1, 2, ...
std::vector<LevelIndex> exceptional_levels(int N, double k_max);

double critical_coupling(int n, int N, int j);
double midpoint_coupling(int n, int N, int l);
double level_range(int N, LevelKind kind);

enum class MethodKind { Exact, Perturbative, FunctionSeries, Recursive, ResummedLargeN };

struct Method {
    MethodKind kind = MethodKind::Exact;
    int order = 0;

    std::string name() const;
};

class LevelCurve {
public:
    LevelCurve(LevelIndex index, Method method) : index_(index), method_(method) {}

    // z must be strictly larger than the last stored z.
    void push(double z, double k);

    const LevelIndex& index() const { return index_; }
    const Method& method() const { return method_; }
    const std::vector<std::pair<double, double>>& samples() const { return samples_; }

    // max k - min k over the stored samples
    double range() const;

private:
    LevelIndex index_;
    Method method_;
    std::vector<std::pair<double, double>> samples_;
};

}  // namespace winter
