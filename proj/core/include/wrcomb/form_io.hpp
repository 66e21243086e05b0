#pragma once

#include "wrcomb/binary_form.hpp"
#include "wrcomb/combinant.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace wrcomb::io {

// Reads a binary form from any of the accepted spellings:
//   * a JSON array of coefficients, ["1", "-2/3", 0, ...], constants as
//     integers or "p/q" strings, index = degree in x2;
//   * a JSON object {"order": d, "coeffs": [...]};
//   * a polynomial expression such as "3*x1^2*x2 - 1/2*x2^3", which must be
//     homogeneous; the form's order is the common degree of its terms.
// With binomial = true the JSON coefficient lists are interpreted in the
// binomially weighted convention (entry j is divided by C(d, j) relative to
// the raw convention); expressions are always literal polynomials.
BinaryForm parse_form(std::string_view text, bool binomial = false);

// {"coeffs": [...], "order": d} with every coefficient as a decimal string.
std::string form_json(const BinaryForm& f, bool binomial = false, int indent = 2);

// Coefficient list of f as decimal strings, optionally binomially weighted;
// the building block for callers assembling larger JSON documents.
std::vector<std::string> coeff_strings(const BinaryForm& f, bool binomial = false);

// Combinant vectors travel as {"r": r, "d": d, "components": {"q": form}}
// with every slot of CombinantVector::slots(r, d) present.
CombinantVector parse_combinants(std::string_view text, bool binomial = false);
std::string combinants_json(const CombinantVector& e, bool binomial = false,
                            int indent = 2);

} // namespace wrcomb::io
