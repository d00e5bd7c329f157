#ifndef AGING_VARCHECK_HPP
#define AGING_VARCHECK_HPP

// Randomized verification of the analytic variation rows against central
// finite differences of the discretized action.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aging/variations.hpp"

namespace aging {

VariationFields random_variation_fields(const VariationGrid& grid, std::mt19937_64& rng);
VariationParams random_variation_params(std::mt19937_64& rng);

// One probe: perturb a single nodal component (0 = lapse, 1..3 = shift,
// 4..9 = symmetric metric basis) and compare dA/de against the analytic row.
struct VariationProbe {
  double fd;
  double predicted;
  double error;  // |fd - predicted| / (1 + |predicted|)
};

VariationProbe probe_variation(VariationRow row, const VariationGrid& grid,
                               const VariationFields& fields, const VariationParams& params,
                               const VariationDensity& analytic, int node, int component);

struct VarcheckRow {
  std::string name;
  int samples;
  double max_error;
};

// Runs `samples_per_row` randomized probes per variation row on a seeded
// random field configuration and reports the worst error per row.
std::vector<VarcheckRow> run_varcheck(std::uint64_t seed, int samples_per_row);

}  // namespace aging

#endif
