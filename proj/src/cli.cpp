#include "winter/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "winter/analysis.hpp"
#include "winter/core.hpp"
#include "winter/perturbation.hpp"
#include "winter/resummation.hpp"
#include "winter/spectrum.hpp"

namespace winter::cli {

namespace {

using nlohmann::json;

// value = mant * 10^exp10
struct Decimal {
    __int128 mant = 0;
    int exp10 = 0;
};

std::optional<Decimal> parse_decimal(std::string_view s) {
    Decimal d;
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    int digits = 0;
    bool dot = false, any = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '.' && !dot) {
            dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            any = true;
            if (d.mant != 0 || c != '0') ++digits;
            if (digits > 18) return std::nullopt;
            d.mant = d.mant * 10 + (c - '0');
            if (dot) --d.exp10;
        } else {
            break;
        }
    }
    if (!any) return std::nullopt;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        int e = 0;
        try {
            std::size_t used = 0;
            e = std::stoi(std::string(s.substr(i + 1)), &used);
            if (i + 1 + used != s.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        d.exp10 += e;
    } else if (i != s.size()) {
        return std::nullopt;
    }
    if (neg) d.mant = -d.mant;
    return d;
}

// Index of the grid point that is exactly zero, decided in integer arithmetic.
std::optional<std::optional<int>> exact_zero_index(const std::string& a_str, const std::string& b_str, int steps) {
    const auto a = parse_decimal(a_str), b = parse_decimal(b_str);
    if (!a || !b) return std::nullopt;
    const int e = std::min(a->exp10, b->exp10);
    if (a->exp10 - e > 18 || b->exp10 - e > 18) return std::nullopt;
    auto scale = [](__int128 m, int p) {
        for (int i = 0; i < p; ++i) m *= 10;
        return m;
    };
    const __int128 A = scale(a->mant, a->exp10 - e), B = scale(b->mant, b->exp10 - e);
    const __int128 limit = static_cast<__int128>(1) << 100;
    if (A > limit || -A > limit || B > limit || -B > limit) return std::nullopt;
    // z_i = (A (steps-1) + i (B - A)) / ((steps-1) 10^-e)
    const __int128 num = -A * (steps - 1), den = B - A;
    if (num % den != 0) return std::optional<int>{};
    const __int128 i = num / den;
    if (i < 0 || i > steps - 1) return std::optional<int>{};
    return std::optional<int>{static_cast<int>(i)};
}

double to_double(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw DomainError(fmt::format("{} = '{}' is not a number", what, s));
    }
}

template <class F>
auto parallel_map(std::size_t count, F f) -> std::vector<decltype(f(std::size_t{}))> {
    std::vector<decltype(f(std::size_t{}))> out(count);
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(count, 1));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
        }));
    for (auto& j : jobs) j.get();
    return out;
}

std::string fmt17(double v) { return fmt::format("{:.17g}", v); }

struct Sweep {
    int N = 1;
    std::string z_min = "-1", z_max = "1";
    int z_steps = 101;
    std::string output = "-";
    std::string format = "csv";
};

void add_sweep_options(CLI::App& cmd, Sweep& s) {
    cmd.add_option("--N", s.N, "cavity ratio N")->required()->check(CLI::PositiveNumber);
    cmd.add_option("--z-min", s.z_min, "lower end of the coupling grid");
    cmd.add_option("--z-max", s.z_max, "upper end of the coupling grid");
    cmd.add_option("--z-steps", s.z_steps, "number of grid points (>= 2)");
    cmd.add_option("--output,-o", s.output, "output file, '-' for stdout");
    cmd.add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

json sweep_json(const Sweep& s) {
    return {{"N", s.N}, {"z_min", s.z_min}, {"z_max", s.z_max}, {"z_steps", s.z_steps}, {"format", s.format}};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw DomainError(fmt::format("cannot open '{}' for writing", path));
    f << text;
    if (!f) throw DomainError(fmt::format("write to '{}' failed", path));
}

enum class Scheme { Exact, Perturbative, Recursive, Series, FixedPoint, LargeN };

const std::map<std::string, Scheme> kSchemes = {
    {"exact", Scheme::Exact},   {"perturbative", Scheme::Perturbative}, {"recursive", Scheme::Recursive},
    {"series", Scheme::Series}, {"fixed-point", Scheme::FixedPoint},    {"large-n", Scheme::LargeN},
};

std::string scheme_label(Scheme s, int order) {
    switch (s) {
        case Scheme::Exact: return Method{MethodKind::Exact, 0}.name();
        case Scheme::Perturbative: return Method{MethodKind::Perturbative, order}.name();
        case Scheme::Recursive: return Method{MethodKind::Recursive, order}.name();
        case Scheme::Series: return Method{MethodKind::FunctionSeries, order}.name();
        case Scheme::FixedPoint: return "fixed-point";
        case Scheme::LargeN: return Method{MethodKind::ResummedLargeN, 0}.name();
    }
    return "?";
}

// Rejects level/scheme combinations before any grid point is evaluated.
void check_admissible(const LevelIndex& idx, Scheme s, int order) {
    switch (s) {
        case Scheme::Exact: return;
        case Scheme::Perturbative:
            if (order < 1 || order > kMaxPerturbativeOrder)
                throw DomainError(fmt::format("perturbative order must be in 1..{}", kMaxPerturbativeOrder));
            return;
        case Scheme::Recursive:
        case Scheme::FixedPoint:
        case Scheme::Series:
            if (s == Scheme::Recursive && order < 1) throw DomainError("recursive order must be >= 1");
            if (s == Scheme::Series && (order < 0 || order > kJetCapacity))
                throw DomainError(fmt::format("series order must be in 0..{}", kJetCapacity));
            level_of(idx.N, branch_of(idx), idx.n);
            return;
        case Scheme::LargeN:
            if (idx.kind != LevelKind::Resonant) throw DomainError("the large-N form covers resonant levels only");
            return;
    }
}

double momentum(const LevelIndex& idx, Scheme s, int order, double z) {
    switch (s) {
        case Scheme::Exact: return exact_level(idx, z);
        case Scheme::Perturbative: return perturbative_momentum(idx, z, order);
        case Scheme::Recursive: return recursive_momentum(idx.N, branch_of(idx), idx.n, z, order).k();
        case Scheme::Series: return series_momentum(idx.N, branch_of(idx), idx.n, z, order).k();
        case Scheme::FixedPoint: {
            const auto r = fixed_point_momentum(idx.N, branch_of(idx), idx.n, z);
            if (!r.converged)
                throw NumericalError(fmt::format("fixed point for {} did not converge at z = {:.17g}", idx.label(), z));
            return r.k();
        }
        case Scheme::LargeN: {
            const auto r = resummed_large_n(idx.n, idx.N, z);
            if (r.pole) throw NumericalError(fmt::format("large-N form has a pole at z = {:.17g}", z));
            return r.value;
        }
    }
    return 0.0;
}

LevelIndex parse_level(int N, const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) throw DomainError(fmt::format("level '{}' must read n,l", spec));
    int n = 0, l = 0;
    try {
        n = std::stoi(spec.substr(0, comma));
        l = std::stoi(spec.substr(comma + 1));
    } catch (const std::exception&) {
        throw DomainError(fmt::format("level '{}' must read n,l", spec));
    }
    if (n < 0) throw DomainError(fmt::format("level '{}' has negative n", spec));
    return normalize_index(N, n, l);
}

void cmd_spectrum(const Sweep& sw, int levels, const std::vector<std::string>& level_list, const std::string& method,
                  int order, std::ostream& out) {
    std::vector<LevelIndex> idx;
    for (const auto& spec : level_list) idx.push_back(parse_level(sw.N, spec));
    if (level_list.empty())
        for (int s = 1; s <= levels; ++s) idx.push_back(classify_free_momentum(sw.N, s));
    if (idx.empty()) throw DomainError("empty level list: pass --levels <count> or --level n,l");

    const Scheme scheme = kSchemes.at(method);
    for (const auto& i : idx) check_admissible(i, scheme, order);
    const std::string label = scheme_label(scheme, order);
    const auto grid = make_z_grid(sw.z_min, sw.z_max, sw.z_steps);

    const auto rows = parallel_map(grid.size(), [&](std::size_t g) {
        std::vector<SpectrumRow> r;
        for (const auto& i : idx) r.push_back({grid[g], i.label(), momentum(i, scheme, order, grid[g]), label});
        return r;
    });

    std::string text;
    if (sw.format == "csv") {
        text = "z,label,k,method\n";
        for (const auto& block : rows)
            for (const auto& r : block) text += fmt::format("{},{},{},{}\n", fmt17(r.z), r.label, fmt17(r.k), r.method);
    } else {
        json j;
        j["command"] = "spectrum";
        j["config"] = sweep_json(sw);
        j["config"]["method"] = method;
        j["config"]["order"] = order;
        j["config"]["levels"] = json::array();
        for (const auto& i : idx) j["config"]["levels"].push_back({{"n", i.n}, {"l", i.l}, {"label", i.label()}});
        j["rows"] = json::array();
        for (const auto& block : rows)
            for (const auto& r : block) j["rows"].push_back({{"z", r.z}, {"label", r.label}, {"k", r.k}, {"method", r.method}});
        text = j.dump(2) + "\n";
    }
    emit(sw.output, text, out);
}

void cmd_compare(const Sweep& sw, int n, int l, std::vector<int> orders, const std::string& method, std::ostream& out) {
    const LevelIndex idx = normalize_index(sw.N, n, l);
    const Scheme scheme = kSchemes.at(method);
    if (scheme == Scheme::Exact || scheme == Scheme::FixedPoint || scheme == Scheme::LargeN)
        throw DomainError(fmt::format("compare needs an ordered scheme (perturbative, recursive, series), got {}", method));
    if (orders.empty()) throw DomainError("empty order list");
    for (int o : orders) check_admissible(idx, scheme, o);
    const auto grid = make_z_grid(sw.z_min, sw.z_max, sw.z_steps);

    const auto rows = parallel_map(grid.size(), [&](std::size_t g) {
        const double z = grid[g];
        const double exact = exact_level(idx, z);
        std::vector<CompareRow> r;
        for (int o : orders) r.push_back({z, o, 100.0 * (exact - momentum(idx, scheme, o, z)) / exact});
        return r;
    });

    std::string text;
    if (sw.format == "csv") {
        text = "z,order,percent_error\n";
        for (const auto& block : rows)
            for (const auto& r : block) text += fmt::format("{},{},{}\n", fmt17(r.z), r.order, fmt17(r.percent_error));
    } else {
        json j;
        j["command"] = "compare";
        j["config"] = sweep_json(sw);
        j["config"]["level"] = {{"n", idx.n}, {"l", idx.l}, {"label", idx.label()}};
        j["config"]["method"] = method;
        j["config"]["orders"] = orders;
        j["rows"] = json::array();
        for (const auto& block : rows)
            for (const auto& r : block)
                j["rows"].push_back({{"z", r.z}, {"order", r.order}, {"percent_error", r.percent_error}});
        text = j.dump(2) + "\n";
    }
    emit(sw.output, text, out);
}

void cmd_coeffs(int N, int n, int l, int order, const std::string& output, std::ostream& out) {
    if (N < 1) throw DomainError("N must be >= 1");
    const auto idx = normalize_index(N, n, l);
    const auto pc = coefficients(idx, order);
    json j;
    j["command"] = "coeffs";
    j["config"] = {{"N", N}, {"n", n}, {"l", l}, {"order", order}};
    j["level"] = {{"n", idx.n}, {"l", idx.l}, {"label", idx.label()}, {"kind", to_string(idx.kind)}};
    j["convention"] = "k = k_free (1 + sum_i g^i c_i), g = -z";
    j["coeffs"] = pc.coeffs;
    emit(output, j.dump(2) + "\n", out);
}

void cmd_diagnostics(int N, std::optional<double> k_in, std::optional<int> n, int l, std::optional<double> z,
                     const std::string& output, std::ostream& out) {
    if (N < 1) throw DomainError("N must be >= 1");
    json j;
    j["command"] = "diagnostics";
    j["config"] = {{"N", N}};
    double k = 0.0;
    std::optional<LevelIndex> idx;
    if (n) {
        idx = normalize_index(N, *n, l);
        j["config"]["n"] = *n;
        j["config"]["l"] = l;
        j["level"] = {{"label", idx->label()}, {"kind", to_string(idx->kind)}};
        if (!z) throw DomainError("a level needs --z to fix its momentum");
        k = exact_level(*idx, *z);
    } else if (k_in) {
        k = *k_in;
        j["config"]["k"] = k;
    } else {
        throw DomainError("diagnostics needs --k or --n [--l] --z");
    }
    if (z) j["config"]["z"] = *z;

    j["k"] = k;
    j["amplitude_ratio"] = amplitude_ratio(N, k);
    j["phase_shift"] = phase_shift(N, k);
    j["phase_shift_large_n"] = phase_shift_large_n(N, k);
    j["dk_dz"] = (z && *z != 0.0 && k != std::round(k)) ? json(dk_dz(N, *z, k)) : json(nullptr);
    if (z && idx && idx->kind == LevelKind::Resonant) {
        const double nN = static_cast<double>(idx->n) * N;
        j["critical_couplings"] = {{"below", std::floor(*z * nN) / nN + 0.0}, {"above", std::ceil(*z * nN) / nN + 0.0}};
    }
    emit(output, j.dump(2) + "\n", out);
}

}  // namespace

std::vector<double> make_z_grid(const std::string& z_min, const std::string& z_max, int steps) {
    if (steps < 2) throw DomainError(fmt::format("z-steps must be >= 2, got {}", steps));
    const double a = to_double(z_min, "z-min"), b = to_double(z_max, "z-max");
    if (!(a < b)) throw DomainError(fmt::format("z-min ({}) must be below z-max ({})", z_min, z_max));

    const double h = (b - a) / (steps - 1);
    std::vector<double> z(steps);
    for (int i = 0; i < steps; ++i) z[i] = i == steps - 1 ? b : a + (b - a) * i / (steps - 1);

    std::optional<int> zero;
    if (const auto exact = exact_zero_index(z_min, z_max, steps)) {
        zero = *exact;
    } else {
        for (int i = 0; i < steps; ++i)
            if (std::abs(z[i]) <= 1e-9 * h) zero = i;
    }
    if (zero) z[*zero] = h / 2;
    return z;
}

std::vector<SpectrumRow> parse_spectrum_json(const std::string& text) {
    const auto j = json::parse(text);
    std::vector<SpectrumRow> rows;
    for (const auto& r : j.at("rows"))
        rows.push_back({r.at("z").get<double>(), r.at("label").get<std::string>(), r.at("k").get<double>(),
                        r.at("method").get<std::string>()});
    return rows;
}

std::vector<CompareRow> parse_compare_json(const std::string& text) {
    const auto j = json::parse(text);
    std::vector<CompareRow> rows;
    for (const auto& r : j.at("rows"))
        rows.push_back({r.at("z").get<double>(), r.at("order").get<int>(), r.at("percent_error").get<double>()});
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectrum of the finite-volume delta-shell model"};
    app.require_subcommand(1);

    Sweep sp_sweep;
    int sp_levels = 0, sp_order = 1;
    std::vector<std::string> sp_level_list;
    std::string sp_method = "exact";
    auto* spectrum = app.add_subcommand("spectrum", "level curves k(z) on a coupling grid");
    add_sweep_options(*spectrum, sp_sweep);
    spectrum->add_option("--levels", sp_levels, "number of lowest normal levels");
    spectrum->add_option("--level", sp_level_list, "explicit level n,l (repeatable)");
    spectrum->add_option("--method", sp_method, "exact, perturbative, recursive, series, fixed-point, large-n")
        ->check(CLI::IsMember({"exact", "perturbative", "recursive", "series", "fixed-point", "large-n"}));
    spectrum->add_option("--order", sp_order, "order h (recursive), P (series) or perturbative order");

    Sweep cmp_sweep;
    int cmp_n = 1, cmp_l = 0;
    std::vector<int> cmp_orders = {1, 2, 3, 4, 5};
    std::string cmp_method = "recursive";
    auto* compare = app.add_subcommand("compare", "percent error of an approximation against the exact level");
    add_sweep_options(*compare, cmp_sweep);
    compare->add_option("--n", cmp_n, "level index n");
    compare->add_option("--l", cmp_l, "level sub-index l");
    compare->add_option("--orders", cmp_orders, "orders to compare")->delimiter(',');
    compare->add_option("--method", cmp_method, "perturbative, recursive or series")
        ->check(CLI::IsMember({"perturbative", "recursive", "series"}));

    int cf_N = 1, cf_n = 1, cf_l = 0, cf_order = kMaxPerturbativeOrder;
    std::string cf_output = "-";
    auto* coeffs = app.add_subcommand("coeffs", "perturbative coefficients as JSON");
    coeffs->add_option("--N", cf_N)->required();
    coeffs->add_option("--n", cf_n);
    coeffs->add_option("--l", cf_l);
    coeffs->add_option("--order", cf_order);
    coeffs->add_option("--output,-o", cf_output);

    int dg_N = 1, dg_l = 0;
    std::optional<double> dg_k, dg_z;
    std::optional<int> dg_n;
    std::string dg_output = "-";
    auto* diag = app.add_subcommand("diagnostics", "amplitude ratio, phase shift and slope as JSON");
    diag->add_option("--N", dg_N)->required();
    diag->add_option("--k", dg_k, "momentum");
    diag->add_option("--n", dg_n, "level index n (uses the exact level at --z)");
    diag->add_option("--l", dg_l, "level sub-index l");
    diag->add_option("--z", dg_z, "coupling");
    diag->add_option("--output,-o", dg_output);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*spectrum) cmd_spectrum(sp_sweep, sp_levels, sp_level_list, sp_method, sp_order, out);
        if (*compare) cmd_compare(cmp_sweep, cmp_n, cmp_l, cmp_orders, cmp_method, out);
        if (*coeffs) cmd_coeffs(cf_N, cf_n, cf_l, cf_order, cf_output, out);
        if (*diag) cmd_diagnostics(dg_N, dg_k, dg_n, dg_l, dg_z, dg_output, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace winter::cli
