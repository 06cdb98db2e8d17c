#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ccpb/grid.hpp"
#include "ccpb/ion_system.hpp"
#include "ccpb/solver.hpp"

namespace ccpb {

/// Stern coefficient rule: eta = 0, a constant, or coef * eps^power.
struct EtaRule {
    enum class Kind { zero, constant, scaled };
    Kind kind = Kind::zero;
    double coef = 0.0;
    double power = 0.0;

    double eta(double eps) const;
    /// lim_{eps->0} eta/eps; infinity is returned as such.
    double gamma_limit() const;

    static EtaRule zero() { return {}; }
    static EtaRule constant(double v) { return {Kind::constant, v, 0.0}; }
    static EtaRule scaled(double coef, double power) {
        return {Kind::scaled, coef, power};
    }
    bool operator==(const EtaRule&) const = default;
};

struct SpeciesSpec {
    // (valence, concentration) pairs
    std::vector<std::array<double, 2>> anions;
    std::vector<std::array<double, 2>> cations;

    IonSystem build() const;
    bool operator==(const SpeciesSpec&) const = default;
};

struct GridSpec {
    enum class Kind { uniform, graded, graded_auto };
    Kind kind = Kind::uniform;
    int n_cells = 4096;
    double min_cell = 0.0;
    double growth = 1.15;
    double interior_h = 0.0;

    /// graded_auto picks min_cell = eps^2/20 per epsilon.
    std::shared_ptr<const Grid> build(double eps) const;
    bool operator==(const GridSpec&) const = default;
};

struct SolverSpec {
    double relax_s = 0.0; // 0 = auto C*eps^2
    double relax_c = 0.5;
    double tol = 1e-6;
    long max_iter = 2'000'000;
    std::string init = "linear"; // or "zero"

    SolverConfig build() const;
    bool operator==(const SolverSpec&) const = default;
};

struct OutputSpec {
    std::string dir = ".";
    int precision = 6;
    bool operator==(const OutputSpec&) const = default;
};

struct GammaSpec {
    enum class Kind { list, log };
    Kind kind = Kind::log;
    std::vector<double> values;
    double log_min = 1e-3;
    double log_max = 1e3;
    std::size_t count = 200;

    std::vector<double> build() const;
    bool operator==(const GammaSpec&) const = default;
};

/// Full experiment description; parses from / dumps to JSON with unknown keys
/// rejected.
struct ExperimentConfig {
    std::string model = "ccpb"; // ccpb | pb
    SpeciesSpec species;
    double phi_plus = 1.0;
    double phi_minus = -1.0;
    EtaRule eta_rule;
    std::vector<double> eps;
    GridSpec grid;
    SolverSpec solver;
    OutputSpec outputs;
    GammaSpec gammas;
    double kappa = 0.5;

    Model model_enum() const;
    bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);
std::string dump_config(const ExperimentConfig& cfg);

} // namespace ccpb
