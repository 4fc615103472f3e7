#pragma once

#include <ostream>
#include <vector>

namespace safecampus {

// Transmission constants of the approximate SI estimator.
struct SIParams {
  double alpha_m = 0.005;  // in-class transmission per (infected x occupant)
  double beta = 0.01;      // community-risk coupling per occupant^2

  void validate() const;
};

struct InfectionInput {
  int current_infected = 0;
  int allowed = 0;
  double community_risk = 0.0;  // in [0, 1]

  void validate() const;
};

struct DynamicsRecord {
  int current_infected;
  int allowed;
  double community_risk;
  int new_infected;
};

// One-week infection projection:
//   min(round(alpha_m * I * N + beta * c * N^2), N)
// with round = nearest integer, ties away from zero. The min-clamp keeps the
// result within the room's occupancy.
int project_new_infections(const SIParams& params, const InfectionInput& input);

// Sweeps the Cartesian product of the three input lists. Within each
// (allowed, risk) series the infection count is chained: step k+1 consumes
// step k's output, seeded by the first entry of `initial_infected`. Output
// size is |initial_infected| * |allowed| * |community_risk|.
std::vector<DynamicsRecord> simulate_dynamics_grid(const SIParams& params,
                                                   const std::vector<int>& initial_infected,
                                                   const std::vector<int>& allowed,
                                                   const std::vector<double>& community_risk);

// CSV with header `current_infected,allowed,community_risk,new_infected`.
void write_dynamics_csv(const std::vector<DynamicsRecord>& records, std::ostream& out);

}  // namespace safecampus
