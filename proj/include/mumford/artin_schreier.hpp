#pragma once

#include <string>
#include <variant>

#include "mumford/laurent.hpp"

namespace mumford {

/// The smallest extension (ramification factor, residue degree factor)
/// found by the leading-term analysis that a solution would need.
struct ExtensionRequired {
  int e_factor = 1;
  int f_factor = 1;
  std::string reason;
};

using ArtinSchreierResult = std::variant<LaurentElem, ExtensionRequired>;

/// Solve y^p - y = c over the field of c.
///
/// Positive valuation: y = -(c + c^p + c^{p^2} + ...), truncated.
/// Negative-exponent terms a*pi^{-k} with p | k are peeled off with
/// b*pi^{-k/p}, b^p = a; a term with p not dividing k needs ramification p.
/// The constant term needs ybar^p - ybar = cbar over the residue field,
/// which fails exactly when its trace is nonzero (then residue degree p).
ArtinSchreierResult artin_schreier_solve(const LaurentElem& c);

}  // namespace mumford
