#ifndef UDW_STRESS_HPP
#define UDW_STRESS_HPP

#include <vector>

#include "udw/fluid.hpp"
#include "udw/profiles.hpp"

namespace udw {

/// Diagonal orthonormal-frame components on a radial grid, nondimensional
/// (values of ell^4 T). rhoE = T(u,u), R = T(r,r), Pperp = angular diagonal.
struct StressComponents {
  ModelParams params;
  DetectorState state;
  std::vector<double> grid;
  std::vector<double> rhoE;
  std::vector<double> R;
  std::vector<double> Pperp;

  struct PieceSet {
    std::vector<double> rhoE, R, Pperp;
  };
  /// Optional per-term breakdown; populated by assemble_total.
  struct Pieces {
    bool present = false;
    PieceSet psi_c;         // confining-field tensor
    PieceSet psi_c_fluid;   // -mu |psi_c|^2 T_fluid coupling
    PieceSet fluid;         // bare perfect-fluid tensor
    PieceSet phi_d;         // normal-ordered detector-field tensor
    PieceSet phi_d_psi_c;   // detector-confinement coupling
  } pieces;
};

/// Per-term assembly of the total tensor. The fluid solution must have been
/// computed for the same parameters and detector state.
StressComponents assemble_total(const ModelParams& params, const DetectorState& state,
                                const FluidSolution& fluid_solution);

/// The ground-state component formulas as printed in the source material,
/// evaluated verbatim for audit purposes (they fail the conservation check).
StressComponents printed_components(const ModelParams& params,
                                    const FluidSolution& fluid_solution);

struct LandauDecomposition {
  std::vector<double> p;   // isotropic pressure (R + 2 Pperp)/3
  std::vector<double> Pi;  // pressure deviator (2/3)(R - Pperp)
};

LandauDecomposition landau_decompose(const StressComponents& components);

struct ConservationResidual {
  double sup = 0.0;              // over x in [0.05, 10]
  double fd_error_estimate = 0.0;
  std::vector<double> x;
  std::vector<double> residual;  // dR/dx + (2/x)(R - Pperp)
};

/// Radial conservation identity on the sampled grid, 4th-order differences.
/// Throws when the grid is too coarse to certify the residual.
ConservationResidual conservation_residual(const StressComponents& components);

/// Demo of the prescribed-potential model's failure: divergence of the
/// naive tensor (a) versus the on-shell source -1/2 g(x) dV/dx (b).
struct NaiveDemo {
  std::vector<double> x;
  std::vector<double> divergence;  // (a)
  std::vector<double> source;      // (b)
  std::vector<double> difference;  // (a) - (b)
  double sup_difference = 0.0;
  double peak_divergence = 0.0;
};

NaiveDemo naive_nonconservation(const ModelParams& params);

/// T = (1 - lambda^2 L) T0 + lambda^2 L T1, componentwise on a common grid.
StressComponents mixture_tensor(const StressComponents& T0, const StressComponents& T1,
                                double lambda_coupling, double L);

}  // namespace udw

#endif
