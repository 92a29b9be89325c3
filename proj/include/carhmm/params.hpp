#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace carhmm {

// Transition rows follow the off-diagonal order of the 3x3 chain.
inline constexpr int kNumTransitions = 6;
inline constexpr const char* kTransitionLabels[kNumTransitions] = {
    "1->2", "1->3", "2->1", "2->3", "3->1", "3->2"};
inline constexpr const char* kBetaLabels[2] = {"state2", "state3"};

// Full model parameterization.  With d covariates there are 8d + 6 free
// parameters: zeta (6 x d), beta (2 x d), a1 <= a2 <= a3, c, and pi (2 free
// components).  Identification constraints: a ordered, and the state-2 rho
// intercept must not exceed the state-3 one (beta[0][0] <= beta[1][0]).
struct ParameterSet {
  int d = 0;
  std::vector<double> zeta;  // 6 x d, row-major, rows in kTransitionLabels order
  std::vector<double> beta;  // 2 x d, row-major, rows state 2 then state 3
  std::array<double, 3> a{};
  double c = 0.0;
  std::array<double, 3> pi{};

  double zeta_at(int row, int col) const { return zeta[std::size_t(row) * d + col]; }
  double beta_at(int row, int col) const { return beta[std::size_t(row) * d + col]; }

  // shape only: vector sizes match d, d >= 1
  bool shape_ok() const;
  // ordering constraints, positivity, pi simplex
  bool satisfies_constraints() const;
  // throws ValidationError when either check fails
  void validate() const;
};

// Unconstrained coordinates, in order:
//   zeta row-major (6d), beta row-major (2d),
//   log a1, log a2, log a3, log c, log(pi2/pi1), log(pi3/pi1).
std::size_t unconstrained_dim(int d);
std::vector<double> to_unconstrained(const ParameterSet& p);
ParameterSet from_unconstrained(const std::vector<double>& u, int d);

// Column names for draw matrices / CSV headers.  `covariate_names` may be
// empty, in which case x0..x{d-1} is used.
std::vector<std::string> unconstrained_names(int d,
                                             const std::vector<std::string>& covariate_names);

// Constrained coordinates: [zeta (6d), beta (2d), a1, a2, a3, c, pi2, pi3].
// Identity for zeta/beta, exp for a and c, softmax pair for pi.
std::vector<std::string> constrained_names(int d,
                                           const std::vector<std::string>& covariate_names);
std::vector<double> constrained_draw(const std::vector<double>& u, int d);

std::string params_to_json(const ParameterSet& p,
                           const std::vector<std::string>& covariate_names = {});
ParameterSet params_from_json(const std::string& json_text);
ParameterSet load_params_file(const std::string& path);
void save_params_file(const ParameterSet& p, const std::string& path,
                      const std::vector<std::string>& covariate_names = {});

}  // namespace carhmm
