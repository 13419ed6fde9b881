#pragma once

#include <string>
#include <vector>

#include "qk/git_model.hpp"
#include "qk/polynomial.hpp"

namespace qk {

/// Point of the dual torus. For basis_id "standard"/"custom", q_coords[i] is
/// the value of the i-th cocharacter basis vector (rows of basis, standard =
/// identity). For basis_id "dual-group", q_coords[j] is the coordinate dual
/// to the j-th degree-basis character, and the point lies on the dual group.
struct DualTorusPoint {
  std::vector<Complex> q_coords;
  std::string basis_id;
  std::vector<IntVec> basis;  // cocharacter basis rows; empty for standard/dual-group
};

DualTorusPoint torus_point(std::vector<Complex> coords);
DualTorusPoint torus_point(std::vector<Complex> coords, std::vector<IntVec> basis);
DualTorusPoint dual_group_point(std::vector<Complex> coords, const GitPresentation& p);

/// Rewrites any point in standard torus coordinates; for dual-group points
/// q_i = prod_j Q_j^{(b_j)_i} with b_j the degree basis.
DualTorusPoint to_standard_torus(const DualTorusPoint& q, const GitPresentation& p);

struct FiberSolution {
  std::vector<Complex> u;
};

/// p_i(u) = prod_rho rho(u)^{<lambda_i, rho>} in the given cocharacter basis.
DualTorusPoint p_map(const std::vector<Complex>& u, const GitPresentation& p,
                     const std::vector<IntVec>& basis = {});

/// det of the matrix sum_rho <lambda_i,rho><lambda_j,rho>/rho(u).
Complex jacobian_dA(const std::vector<Complex>& u, const GitPresentation& p,
                    const std::vector<IntVec>& basis = {});

/// The involution shifting by half the sum of positive roots: multiplies the
/// i-th coordinate by exp(pi*i*<lambda_i, sum of positive roots>).
DualTorusPoint sigma_shift(const DualTorusPoint& q, const GitPresentation& p);

/// The fiber p^{-1}(q). Decoupled systems are solved by radical extraction;
/// otherwise the caller must supply candidate roots to polish.
std::vector<FiberSolution> solve_fiber(const DualTorusPoint& q, const GitPresentation& p,
                                       const std::vector<std::vector<Complex>>* candidates = nullptr);

/// The finite sum over the fiber of P * prod_roots / (D_A * prod_weights).
Complex vi_sum(const Polynomial& insertion, const DualTorusPoint& q, const GitPresentation& p);

struct ViCheckReport {
  std::vector<Complex> q, sigma_q;  // dual-group coordinates
  Complex series_value, vi_value;
  double abs_diff = 0, rel_diff = 0, last_term = 0;
  std::int64_t kappa_bound = 0;
};

ViCheckReport vi_vs_series_check(const Polynomial& insertion, const DualTorusPoint& q,
                                 const GitPresentation& p, std::int64_t kappa_bound);

std::string report_to_json(const ViCheckReport& r);

}  // namespace qk
