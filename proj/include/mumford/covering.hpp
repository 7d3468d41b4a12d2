#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "mumford/artin_schreier.hpp"
#include "mumford/criterion.hpp"
#include "mumford/residue_curve.hpp"
#include "mumford/tree.hpp"

namespace mumford {

/// Valuation in Q extended by both infinities. A radius |pi|^v is stored as v:
/// radius 0 is +inf and radius infinity is -inf, so larger radii compare smaller.
struct ExtVal {
  int inf = 0;  // -1, 0 or +1
  Valu v{0};

  ExtVal() = default;
  ExtVal(Valu x) : inf(x.is_infinite() ? 1 : 0), v(x.is_infinite() ? Valu(0) : x) {}
  static ExtVal plus_inf() { ExtVal e; e.inf = 1; return e; }
  static ExtVal minus_inf() { ExtVal e; e.inf = -1; return e; }
  bool finite() const noexcept { return inf == 0; }

  friend std::strong_ordering operator<=>(const ExtVal& a, const ExtVal& b);
  friend bool operator==(const ExtVal& a, const ExtVal& b) { return (a <=> b) == 0; }
  std::string str() const;
};

/// Closed, open or half-open interval of extended valuations.
struct Interval {
  ExtVal lo, hi;
  bool lo_open = false, hi_open = false;
  bool empty() const;
  bool contains(const ExtVal& x) const;
  /// Some point of a nonempty interval.
  ExtVal sample() const;
};
using IntervalSet = std::vector<Interval>;  // sorted, disjoint

IntervalSet interval_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b);
/// Complement inside [-inf, +inf].
IntervalSet interval_complement(const IntervalSet& a);

struct ThresholdEntry {
  ExtVal radius;
  std::vector<std::string> tags;  // eps, lambda, dist, quotient, midpoint, zeta, sentinel
};

struct ThresholdTable {
  /// rows[i][n] = alpha_{i,n}, from radius 0 up to radius infinity.
  std::vector<std::vector<ThresholdEntry>> rows;
  int e_used = 1;  // ramification index over the input field that realizes every radius

  const ExtVal& alpha(int i, int n) const { return rows[i][n].radius; }
  int M(int i) const { return static_cast<int>(rows[i].size()) - 1; }
};

ThresholdTable build_thresholds(const BranchData& bd);

/// Constraint val(x - a_index) in [lo, hi].
struct ValConstraint {
  int index;
  ExtVal lo, hi;
};

struct Hole {
  int center;     // branch point index
  ExtVal radius;  // open disk {|x - a_center| < radius}
};

/// U_n = {|x - a_center| <= outer} minus the holes; holes[0] is centered at a_center
/// (possibly of radius 0).
struct Piece {
  std::vector<int> index;
  int center;
  ExtVal outer;
  std::vector<Hole> holes;

  std::vector<ValConstraint> constraints() const;
  bool contains(const BranchData& bd, const LaurentElem& x) const;
  std::string str() const;
};

struct PieceStats {
  std::size_t in_i = 0, in_j = 0, nonempty = 0;
};

std::vector<Piece> enumerate_pieces(const ThresholdTable& tt, const BranchData& bd,
                                    PieceStats* stats = nullptr);

/// The annulus constraints alpha_{i,n_i} <= |x - a_i| <= alpha_{i,n_i+1}.
std::vector<ValConstraint> annulus_constraints(const ThresholdTable& tt, const std::vector<int>& n);

/// Points of P^1 as (branch k, rho = val(x - a_k)) with a_k a closest branch point.
IntervalSet branch_set(const BranchData& bd, const std::vector<ValConstraint>& cs, int k);
std::vector<ExtVal> tuple_at(const BranchData& bd, int k, const ExtVal& rho);

struct CoverSegment {
  Interval rho;
  int piece;
};

struct CoverCertificate {
  bool ok = true;
  std::vector<std::vector<CoverSegment>> branches;
  std::optional<std::vector<ExtVal>> uncovered;  // val(x - a_i) tuple of an uncovered point
  std::optional<int> uncovered_branch;
};

CoverCertificate verify_cover(const std::vector<Piece>& pieces, const BranchData& bd);

/// inf over the piece of |a - u|, as a radius.
ExtVal dist_to_piece(const LaurentElem& a, const Piece& piece, const BranchData& bd);
/// sup over the piece of |x - a|, as a radius.
ExtVal sup_dist(const LaurentElem& a, const Piece& piece, const BranchData& bd);
/// |lambda_i / (x - a_i)|_sp on the piece, as a radius (-inf when unbounded).
ExtVal sup_norm_zi(const Piece& piece, const BranchData& bd, int i);

/// Normal form checks: hole radii equal |d_0 - d_nu| and take one of
/// the two values |b_1| or |b_2|; holes disjoint and inside the outer ball.
bool check_piece_shape(const Piece& piece, const BranchData& bd, std::string* why = nullptr);

enum class ReductionCase { LambdaEmpty, SmallB2, BigB1 };
enum class RingShape { SplitSheets, NodalSplit, RationalGraph, NodePair, SmoothGm, Line };
std::string to_string(ReductionCase c);
std::string to_string(RingShape s);

/// Element known through its valuation and leading coefficient, or 0 / infinity.
struct ScaledValue {
  ExtVal val;
  Fq lead = 0;  // meaningful when val is finite
};

struct ReductionReport {
  std::vector<int> lambda_set;
  std::optional<int> m;
  ReductionCase reduction_case = ReductionCase::LambdaEmpty;
  ScaledValue b1, b2;    // radii |b_1|, |b_2| of the piece
  ScaledValue b1p, b2p;  // b_1', b_2'
  std::optional<LaurentElem> cp;
  std::optional<LaurentElem> c;  // constant C
  /// Solution or required extension of C''^p - C'' = C - C'.
  std::optional<ArtinSchreierResult> c_second;
  RingShape ring_shape = RingShape::SplitSheets;
  std::string ring;
  Fq residue_parameter = 0;
  bool dist_split = true;  // dist(a_i, U) = |b_1| or >= |b_2|
  bool tail_small = true;  // |lambda_i/(x - a_i) + lambda_i/(a_i - a_m)| < 1
  bool b_ordered = true;  // |b_1'| <= |b_2'| <= 1 or 1 <= |b_1'| <= |b_2'|
  CurveAnalysis curve;
  bool sheets_separable = true;
  bool passes_condition = false;
  std::string note;
};

ReductionReport classify_reduction(const Piece& piece, const BranchData& bd);

}  // namespace mumford
