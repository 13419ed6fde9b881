#pragma once

#include <string>
#include <vector>

#include "qk/arrangement.hpp"
#include "qk/git_model.hpp"

namespace qk {

enum class InvariantMode { equivariant, nonequivariant };

struct InvariantRequest {
  GitPresentation presentation;
  GDegree degree;
  Polynomial insertion{0};
  InvariantMode mode = InvariantMode::nonequivariant;
  bool dualize = false;            // pair with the dual Chern roots (u -> -u)
  bool skip_symmetry_check = false;
};

struct TermContribution {
  DegreeVector lift;
  DegreeVector split1, split2;  // equivariant mode only
  bool has_split = false;
  ScalarZ value;
};

struct InvariantResult {
  ScalarZ value;            // per the dualize flag
  ScalarZ dualized_value;   // the other sign convention, for reports
  std::vector<TermContribution> breakdown;
};

/// The three-case D-product for a single weight.
ArrangementFraction d_factor(const DegreeVector& delta_t, const CharacterVector& w);

/// Product over positive roots of (-1)^{<d,a>+1} a (a + <d,a> z).
ArrangementFraction root_factor(const DegreeVector& delta_t, const GitPresentation& p);

/// Product of inverted weight D-factors times the root factor.
ArrangementFraction z_integrand(const DegreeVector& delta_t, const GitPresentation& p);

/// The z-free integrand prod_rho rho^{-1-<d,rho>} prod_{a>0} (-1)^{1+<d,a>} a^2.
ArrangementFraction nonequivariant_integrand(const DegreeVector& delta_t,
                                             const GitPresentation& p);

InvariantResult equivariant_invariant(const InvariantRequest& req,
                                      std::string* trace = nullptr);

InvariantResult nonequivariant_invariant(const InvariantRequest& req,
                                         std::string* trace = nullptr);

std::int64_t virtual_dimension(const GDegree& delta, const GitPresentation& p);
std::int64_t virtual_dimension(const DegreeVector& delta_t, const GitPresentation& p);

/// Actual dimension of the toric quasimap space (torus presentations only).
std::int64_t toric_dimension_actual(const DegreeVector& delta_t, const GitPresentation& p);

/// |W| * sum over effective degrees with <lift, kappa> <= kappa_bound of
/// q^delta times the nonequivariant invariant. q_coords are the coordinates
/// of q on the dual group in the degree basis; q^delta = prod q_j^{delta_j}.
/// last_term, when given, receives the magnitude of the deepest included term.
Complex generating_series_truncated(const GitPresentation& p, const Polynomial& insertion,
                                    const std::vector<Complex>& q_coords,
                                    std::int64_t kappa_bound, double* last_term = nullptr);

std::string result_to_json(const InvariantResult& r);

}  // namespace qk
