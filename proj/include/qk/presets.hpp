#pragma once

#include <string>
#include <vector>

#include "qk/git_model.hpp"

namespace qk {

/// P^{n-1} as C^n // C*.
GitPresentation projective(int n);

/// Product of projective spaces, block-diagonal.
GitPresentation product_projective(const std::vector<int>& ns);

/// Gr(r,n) in the torus picture: weights eps_i with multiplicity n each,
/// positive roots eps_i - eps_j (i<j), determinant stability, degree basis
/// {eps_1 + ... + eps_r}.
GitPresentation grassmannian(int r, int n);

/// Reads a presentation JSON file.
GitPresentation custom_preset(const std::string& path);

/// Parses "p:n", "pp:n1,n2,...", "gr:r,n" or a path to a JSON file.
GitPresentation preset_from_spec(const std::string& spec);

/// Human-readable list of the built-in preset syntaxes.
std::string preset_catalogue();

}  // namespace qk
