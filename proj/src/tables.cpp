#include "ccpb/tables.hpp"

#include <limits>

namespace ccpb {

CsvTable solution_table(const Field& field, int precision) {
    CsvTable t;
    t.header = {"x", "phi"};
    t.precision = precision;
    for (std::size_t i = 0; i < field.size(); ++i) {
        t.add_row({field.grid->node(i), field.values[i]});
    }
    return t;
}

CsvTable summary_table(int precision) {
    CsvTable t;
    t.header = {"eps", "phi0", "phi1", "iters", "c_eps"};
    t.precision = precision;
    return t;
}

CsvTable limit_table(const IonSystem& sys, double phi_plus,
                     const std::vector<double>& gammas, int precision,
                     SweepTable* sweep_out) {
    CsvTable t;
    t.header = {"gamma", "t", "c", "t_minus_c", "c_star_neutral", "c_star_bracket"};
    t.precision = precision;
    double cs_neutral = c_star_neutral(sys, phi_plus);
    bool b2 = sys.anions().size() == 1 && sys.cations().size() == 2 &&
              sys.anions()[0].valence == 1.0 && sys.cations()[0].valence == 1.0 &&
              sys.cations()[1].valence == 2.0;
    SweepTable sweep = gamma_sweep(sys, phi_plus, gammas);
    for (const SweepRow& row : sweep.rows) {
        double bracket = (b2 && row.t > 0.0)
                             ? c_star_bracket(row.t)
                             : std::numeric_limits<double>::quiet_NaN();
        t.add_row({row.gamma, row.t, row.c, row.t - row.c, cs_neutral, bracket});
    }
    if (sweep_out) *sweep_out = std::move(sweep);
    return t;
}

} // namespace ccpb
