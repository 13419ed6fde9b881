#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qk/polynomial.hpp"

namespace qk {

/// Element of the character lattice of T in a fixed basis.
struct CharacterVector {
  IntVec coords;
  bool operator==(const CharacterVector& o) const { return coords == o.coords; }
  bool operator<(const CharacterVector& o) const { return coords < o.coords; }
};

/// Cocharacter of T (a lift) in the dual basis.
struct DegreeVector {
  IntVec coords;
  bool operator==(const DegreeVector& o) const { return coords == o.coords; }
  bool operator<(const DegreeVector& o) const { return coords < o.coords; }
};

/// Degree of a quasimap to V//G: pairings against the degree-sublattice basis.
struct GDegree {
  IntVec pairings;
  bool operator==(const GDegree& o) const { return pairings == o.pairings; }
  bool operator<(const GDegree& o) const { return pairings < o.pairings; }
};

/// Rational polyhedral cone with both descriptions.
struct Cone {
  std::vector<IntVec> generators;
  std::vector<IntVec> halfspaces;  // covectors; cone = {x : h·x >= 0 for all h}

  bool contains(const IntVec& x) const;
};

struct GitPresentation {
  int rank = 0;
  std::vector<CharacterVector> weights;         // the multiset of T-weights of V
  std::vector<CharacterVector> positive_roots;  // a chosen half of the roots of G
  std::int64_t weyl_order = 1;
  std::vector<std::vector<IntVec>> weyl_generators;  // r x r integer matrices, optional
  CharacterVector stability;                         // xi
  std::vector<CharacterVector> degree_basis;         // Weyl-invariant basis of chi(G)
  std::optional<std::vector<IntVec>> effective_cone_generators;
  std::string label;

  int dim_v() const { return static_cast<int>(weights.size()); }
  int num_roots() const { return 2 * static_cast<int>(positive_roots.size()); }
  int degree_rank() const { return static_cast<int>(degree_basis.size()); }

  /// Checks the structural invariants; throws on violation.
  void validate() const;
};

std::int64_t pairing(const DegreeVector& d, const CharacterVector& w);

CharacterVector anticanonical(const GitPresentation& p);

/// The closure of the chamber of the stability inside the complement of all
/// hyperplanes spanned by rank-(r-1) subsets of the weights.
Cone chamber(const GitPresentation& p);

/// The effective cone of degrees (dual of the chamber, or the explicit
/// override when the presentation carries one).
Cone effective_cone(const GitPresentation& p);

bool is_effective(const DegreeVector& d, const GitPresentation& p);
bool is_effective(const DegreeVector& d, const Cone& effective);

GDegree restrict_degree(const DegreeVector& d, const GitPresentation& p);

/// Pairing of any lift of delta with the anticanonical character (well
/// defined because that character lies in the span of the degree basis).
Rational anticanonical_pairing(const GDegree& delta, const GitPresentation& p);

/// All splittings d = d1 + d2 with both parts effective, ordered lex by d2.
std::vector<std::pair<DegreeVector, DegreeVector>> effective_splittings(
    const DegreeVector& d, const GitPresentation& p);

/// All effective lifts of delta, in lexicographic order.
std::vector<DegreeVector> enumerate_lifts(const GDegree& delta, const GitPresentation& p);

/// All degrees admitting an effective lift with pairing against the
/// anticanonical character at most kappa_bound, in lexicographic order.
std::vector<GDegree> enumerate_effective_degrees(const GitPresentation& p,
                                                 std::int64_t kappa_bound,
                                                 std::size_t point_cap = 200000);

/// True iff the insertion is fixed by every supplied Weyl generator. When no
/// generators are supplied, returns true and sets *unverified when provided.
bool validate_insertion(const Polynomial& insertion, const GitPresentation& p,
                        bool* unverified = nullptr);

/// Reads the presentation JSON schema.
GitPresentation presentation_from_json(const std::string& json_text);

}  // namespace qk
