#include <doctest.h>

#include <algorithm>
#include <set>

#include "mumford/covering.hpp"
#include "mumford/error.hpp"
#include "support.hpp"

using namespace mumford;
using testing_support::Gen;
using testing_support::lit;

namespace {

ExtVal val_of(const LaurentElem& x) { return x.is_zero() ? ExtVal::plus_inf() : ExtVal(x.valuation()); }

BranchData example(int p = 3) {
  const FieldParams F(p);
  return make_branch_data(F, {End::at(LaurentElem(F)), End::at(lit(F, "1"))}, {lit(F, "t"), lit(F, "t")});
}

// Point near a random branch point or far away.
LaurentElem sample_point(Gen& gen, const BranchData& bd) {
  const int k = gen.uniform(0, bd.r());
  const LaurentElem off = gen.laurent(bd.params, gen.uniform(-6, 8), 2, 3);
  return k == bd.r() ? off : bd.a[k] + off;
}

bool tuple_in(const std::vector<ValConstraint>& cs, const std::vector<ExtVal>& tuple) {
  for (const auto& c : cs)
    if (tuple[c.index] < c.lo || tuple[c.index] > c.hi) return false;
  return true;
}

// Direct check of the hole layout of a piece.
bool holes_well_placed(const Piece& piece, const BranchData& bd) {
  const LaurentElem& d0 = bd.a[piece.center];
  if (piece.holes.empty() || piece.holes[0].center != piece.center) return false;
  for (std::size_t v = 1; v < piece.holes.size(); ++v) {
    const Hole& h = piece.holes[v];
    const ExtVal dist = val_of(d0 - bd.a[h.center]);
    if (!(h.radius == dist) || dist < piece.outer) return false;
    for (std::size_t w = 1; w < v; ++w) {
      const ExtVal apart = val_of(bd.a[h.center] - bd.a[piece.holes[w].center]);
      if (apart > h.radius || apart > piece.holes[w].radius) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("threshold table of the two point example") {
  const BranchData bd = example();
  const ThresholdTable tt = build_thresholds(bd);
  REQUIRE(tt.rows.size() == 2);
  for (int i = 0; i < 2; ++i) {
    CHECK(tt.M(i) == 5);
    CHECK(tt.alpha(i, 0) == ExtVal::plus_inf());
    CHECK(tt.alpha(i, 1) == ExtVal(Valu(2)));
    CHECK(tt.alpha(i, 2) == ExtVal(Valu(1)));
    CHECK(tt.alpha(i, 3) == ExtVal(Valu(0)));
    CHECK(tt.alpha(i, 4) == ExtVal(Valu(-1)));
    CHECK(tt.alpha(i, 5) == ExtVal::minus_inf());
  }
  const FieldParams F(3);
  const BranchData bad = make_branch_data(F, {End::at(LaurentElem(F)), End::at(lit(F, "1"))}, {lit(F, "1"), lit(F, "1")});
  try {
    (void)build_thresholds(bad);
    FAIL("expected CriterionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CriterionViolated);
  }
}

TEST_CASE("thresholds separate every pair and swap with the indices") {
  Gen gen(testing_support::property_seed() + 40);
  for (int p : {2, 3}) {
    const FieldParams F(p);
    for (int trial = 0; trial < 30; ++trial) {
      const BranchData bd = testing_support::random_instance(gen, F, gen.uniform(2, 4), true);
      const ThresholdTable tt = build_thresholds(bd);
      for (int i = 0; i < bd.r(); ++i) {
        const auto& row = tt.rows[i];
        for (std::size_t n = 1; n < row.size(); ++n) CHECK(row[n].radius < row[n - 1].radius);
        for (std::size_t n = 2; n + 1 < row.size(); ++n) CHECK(row[1].radius > row[n].radius);
        for (const auto& entry : row)
          if (entry.radius.finite()) CHECK((entry.radius.v * Valu(tt.e_used)).den() == 1);
        for (int j = 0; j < bd.r(); ++j) {
          if (i == j) continue;
          const Valu lo = bd.lambda[i].valuation();
          const Valu hi = Valu(2) * (bd.a[i] - bd.a[j]).valuation() - bd.lambda[j].valuation();
          bool separated = false;
          for (const auto& entry : row)
            separated = separated || (entry.radius.finite() && entry.radius.v < lo && hi < entry.radius.v);
          CHECK(separated);
        }
      }
      BranchData rev = bd;
      std::reverse(rev.a.begin(), rev.a.end());
      std::reverse(rev.lambda.begin(), rev.lambda.end());
      const ThresholdTable tr = build_thresholds(rev);
      for (int i = 0; i < bd.r(); ++i) {
        REQUIRE(tt.M(i) == tr.M(bd.r() - 1 - i));
        for (int n = 0; n <= tt.M(i); ++n) CHECK(tt.alpha(i, n) == tr.alpha(bd.r() - 1 - i, n));
      }
    }
  }
}

TEST_CASE("pieces of the two point example") {
  const BranchData bd = example();
  const ThresholdTable tt = build_thresholds(bd);
  const auto pieces = enumerate_pieces(tt, bd);
  bool ball = false, annulus = false;
  for (const auto& pc : pieces) {
    CHECK(check_piece_shape(pc, bd));
    if (pc.center == 0 && pc.outer == ExtVal(Valu(2)) && pc.holes.size() == 1 && pc.holes[0].radius.inf > 0) ball = true;
    if (pc.center == 0 && pc.outer == ExtVal(Valu(1)) && pc.holes.size() == 1 && pc.holes[0].radius == ExtVal(Valu(2)))
      annulus = true;
  }
  CHECK(ball);
  CHECK(annulus);
  const CoverCertificate cert = verify_cover(pieces, bd);
  CHECK(cert.ok);
  CHECK_FALSE(cert.uncovered);
}

TEST_CASE("covering properties on random criterion instances") {
  Gen gen(testing_support::property_seed() + 41);
  for (int p : {2, 3}) {
    const FieldParams F(p);
    PrecisionScope scope(48);
    for (int trial = 0; trial < 12; ++trial) {
      const BranchData bd = testing_support::random_instance(gen, F, gen.uniform(2, 4), true);
      std::string desc;
      for (int i = 0; i < bd.r(); ++i) desc += bd.a[i].str() + " : " + bd.lambda[i].str() + "; ";
      CAPTURE(desc);
      const ThresholdTable tt = build_thresholds(bd);
      const auto pieces = enumerate_pieces(tt, bd);
      REQUIRE_FALSE(pieces.empty());
      CHECK(verify_cover(pieces, bd).ok);

      for (const auto& pc : pieces) {
        CHECK(check_piece_shape(pc, bd));
        CHECK(holes_well_placed(pc, bd));
        const ReductionReport rep = classify_reduction(pc, bd);
        CHECK(rep.passes_condition);
        CHECK(rep.dist_split);
        CHECK(rep.tail_small);
        CHECK(rep.b_ordered);
        CHECK((rep.reduction_case == ReductionCase::LambdaEmpty) == rep.lambda_set.empty());
        CHECK(rep.m.has_value() == !rep.lambda_set.empty());
        for (int i = 0; i < bd.r(); ++i) {
          const bool in_lambda = std::find(rep.lambda_set.begin(), rep.lambda_set.end(), i) != rep.lambda_set.end();
          CHECK(in_lambda == (sup_norm_zi(pc, bd, i) <= ExtVal(Valu(0))));
        }
        switch (rep.ring_shape) {
          case RingShape::NodalSplit:
          case RingShape::RationalGraph:
            CHECK(rep.b2p.val == ExtVal(Valu(0)));
            CHECK((rep.ring_shape == RingShape::RationalGraph) == (rep.b1p.val == ExtVal(Valu(0))));
            break;
          case RingShape::NodePair:
          case RingShape::SmoothGm:
            CHECK(rep.b2p.val.finite());
            CHECK(rep.b1p.val <= ExtVal(Valu(0)));
            if (rep.ring_shape == RingShape::SmoothGm) CHECK(rep.b1p.val == rep.b2p.val);
            break;
          case RingShape::Line:
            CHECK(rep.b2p.val == ExtVal::minus_inf());
            break;
          case RingShape::SplitSheets:
            break;
        }
      }

      // a piece holding a branch point is the small ball around it
      for (int i = 0; i < bd.r(); ++i) {
        int holders = 0;
        for (const auto& pc : pieces)
          if (pc.contains(bd, bd.a[i])) {
            ++holders;
            CHECK(pc.center == i);
            CHECK(pc.outer == tt.alpha(i, 1));
            for (const auto& h : pc.holes) CHECK(h.radius.inf > 0);
          }
        CHECK(holders >= 1);
      }

      // sampling: coverage, normal form vs annuli, distance and norm bounds
      for (int s = 0; s < 60; ++s) {
        const LaurentElem x = sample_point(gen, bd);
        std::vector<ExtVal> tuple;
        for (int i = 0; i < bd.r(); ++i) tuple.push_back(val_of(x - bd.a[i]));
        bool covered = false;
        for (const auto& pc : pieces) {
          const bool in = pc.contains(bd, x);
          CHECK(in == tuple_in(annulus_constraints(tt, pc.index), tuple));
          covered = covered || in;
          if (!in) continue;
          for (int i = 0; i < bd.r(); ++i) {
            CHECK(tuple[i] <= dist_to_piece(bd.a[i], pc, bd));
            CHECK(tuple[i] >= sup_dist(bd.a[i], pc, bd));
            if (!tuple[i].finite()) continue;
            CHECK(ExtVal(bd.lambda[i].valuation() - tuple[i].v) >= sup_norm_zi(pc, bd, i));
          }
        }
        CHECK(covered);
      }
    }
  }
}

TEST_CASE("removing a piece exposes an uncovered tuple") {
  Gen gen(testing_support::property_seed() + 42);
  const FieldParams F(3);
  for (int trial = 0; trial < 6; ++trial) {
    const BranchData bd = trial == 0 ? example() : testing_support::random_instance(gen, F, 3, true);
    const auto pieces = enumerate_pieces(build_thresholds(bd), bd);
    int failures = 0;
    for (std::size_t drop = 0; drop < pieces.size(); ++drop) {
      auto rest = pieces;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
      const CoverCertificate cert = verify_cover(rest, bd);
      if (cert.ok) continue;
      ++failures;
      REQUIRE(cert.uncovered);
      for (const auto& pc : rest) CHECK_FALSE(tuple_in(pc.constraints(), *cert.uncovered));
      CHECK(tuple_in(pieces[drop].constraints(), *cert.uncovered));
    }
    CHECK(failures > 0);
  }
}

TEST_CASE("reductions of the two point example") {
  const BranchData bd = example();
  const auto pieces = enumerate_pieces(build_thresholds(bd), bd);
  std::set<RingShape> seen;
  for (const auto& pc : pieces) {
    const ReductionReport rep = classify_reduction(pc, bd);
    seen.insert(rep.ring_shape);
    if (rep.ring_shape == RingShape::NodalSplit) {
      CHECK(rep.reduction_case == ReductionCase::SmallB2);
      CHECK(rep.b1p.val > ExtVal(Valu(0)));
    }
    if (rep.ring_shape == RingShape::NodePair) CHECK(rep.b1p.val > rep.b2p.val);
  }
  CHECK(seen.count(RingShape::SplitSheets));
  CHECK(seen.count(RingShape::NodalSplit));
  CHECK(seen.count(RingShape::NodePair));
  CHECK(seen.count(RingShape::Line));
}

TEST_CASE("distance to a piece") {
  const BranchData bd = example();
  const FieldParams& F = bd.params;
  const auto pieces = enumerate_pieces(build_thresholds(bd), bd);
  for (const auto& pc : pieces) {
    if (pc.center != 0 || !(pc.outer == ExtVal(Valu(1)))) continue;
    // annulus t^2 <= |x| <= t about 0
    CHECK(dist_to_piece(lit(F, "t^3"), pc, bd) == ExtVal(Valu(2)));
    CHECK(dist_to_piece(lit(F, "1"), pc, bd) == ExtVal(Valu(0)));
    CHECK(dist_to_piece(lit(F, "t + t^2"), pc, bd) == ExtVal::plus_inf());
    CHECK(sup_norm_zi(pc, bd, 0) == ExtVal(Valu(-1)));
  }
}
