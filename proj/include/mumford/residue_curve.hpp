#pragma once

#include <string>
#include <vector>

#include "mumford/finite_field.hpp"

namespace mumford {

/// Polynomial over a finite field, coefficients from degree 0 upwards.
using Poly = std::vector<Fq>;

Poly poly_trim(Poly a);
Poly poly_add(const GaloisField& k, const Poly& a, const Poly& b);
Poly poly_sub(const GaloisField& k, const Poly& a, const Poly& b);
Poly poly_mul(const GaloisField& k, const Poly& a, const Poly& b);
Poly poly_mod(const GaloisField& k, const Poly& a, const Poly& b);
Poly poly_derivative(const GaloisField& k, const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const GaloisField& k, Poly a, Poly b);
Fq poly_eval(const GaloisField& k, const Poly& a, Fq x);
/// Coefficients of a(x0 + Y) in Y.
Poly poly_taylor(const GaloisField& k, const Poly& a, Fq x0);
int poly_degree(const Poly& a);

struct SingularPoint {
  int field_degree;  // degree over the base residue field of the point's field
  Fq x;              // coordinates in that field
  Fq y;
  bool ordinary_double;
  bool non_reduced;
};

/// Plane curve X*A(Y) + B(Y) = 0 over F_q, analysed over the algebraic closure.
/// Its components are the lines Y = y0 for roots y0 of gcd(A, B), plus the graph
/// X = -B/A after removing that gcd, all rational.
struct CurveAnalysis {
  int line_components = 0;
  bool has_graph_component = false;
  bool all_rational = true;
  std::vector<SingularPoint> singular;
  bool all_ordinary_double = true;
  bool passes() const { return all_rational && all_ordinary_double; }
  std::string describe() const;
};

CurveAnalysis analyse_linear_curve(const GaloisField& k, const Poly& a, const Poly& b);

/// Whether a one-variable polynomial has distinct roots over the closure.
bool is_separable(const GaloisField& k, const Poly& a);

}  // namespace mumford
