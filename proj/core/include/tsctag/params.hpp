// Hyperparameters shared by graph construction, clustering and weighting.
#pragma once

#include <cmath>
#include <stdexcept>

namespace tsctag {

inline constexpr double kDialogueGamma = 0.12;
inline constexpr double kTopicCenterGamma = 0.13;
inline constexpr double kDefaultRhoD = 0.34;
inline constexpr double kDefaultRhoC = 0.38;
inline constexpr int kDefaultTurns = 50;
inline constexpr double kDefaultConvergenceTol = 0.05;
inline constexpr double kDefaultEdgeCutoff = 1e-4;

struct Params {
  double gamma_t = kDialogueGamma;  // decay per second
  double rho_d = kDefaultRhoD;      // dialogue density threshold
  double rho_c = kDefaultRhoC;      // topic-center affinity threshold
  int turns = kDefaultTurns;        // influence iteration turns (T)
  double tol = kDefaultConvergenceTol;
  double edge_cutoff_eps = kDefaultEdgeCutoff;

  void validate() const {
    if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t))
      throw std::invalid_argument("gamma_t must be finite and >= 0");
    if (!(rho_d >= 0.0 && rho_d <= 1.0))
      throw std::invalid_argument("rho_d must lie in [0, 1]");
    if (!(rho_c >= 0.0 && rho_c <= 1.0))
      throw std::invalid_argument("rho_c must lie in [0, 1]");
    if (turns < 1) throw std::invalid_argument("turns must be >= 1");
    if (!(tol >= 0.0)) throw std::invalid_argument("tol must be >= 0");
    if (!(edge_cutoff_eps >= 0.0 && edge_cutoff_eps < 1.0))
      throw std::invalid_argument("edge_cutoff_eps must lie in [0, 1)");
  }
};

}  // namespace tsctag
