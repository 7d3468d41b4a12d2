#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mumford/tree.hpp"

namespace mumford {

/// Element of order p with a unique fixed point.
struct ParabolicGen {
  Moebius matrix;
  End fixed_point;
  /// (P, eta) when the element is z -> fixed P in the eta-form
  /// [[P(P-eta), eta P^2], [-eta, P(P+eta)]].
  std::optional<std::pair<LaurentElem, LaurentElem>> eta_form;
};

/// Reduced word in the free product of r cyclic groups of order p:
/// letters (generator index, exponent in 1..p-1), adjacent indices distinct.
struct WordNF {
  std::vector<std::pair<int, int>> letters;

  bool empty() const noexcept { return letters.empty(); }
  std::size_t length() const noexcept { return letters.size(); }
  WordNF inverse(int p) const;
  /// Concatenation followed by free reduction.
  WordNF times(const WordNF& o, int p) const;
  std::string str() const;
  friend bool operator==(const WordNF&, const WordNF&) = default;
};

struct GroupData {
  int p;
  std::vector<ParabolicGen> generators;
  bool p1_is_zero = false;
  std::optional<End> u;

  int r() const noexcept { return static_cast<int>(generators.size()); }
  const FieldParams& params() const { return generators.front().matrix.params(); }
};

ParabolicGen make_parabolic(const End& fixed, const LaurentElem& eta);
/// Validates order p and a unique fixed point.
ParabolicGen parabolic_from_matrix(const Moebius& g);
GroupData make_group(std::vector<ParabolicGen> gens);

std::uint64_t word_count(int r, int p, int length);
std::vector<WordNF> enumerate_words(const GroupData& g, int max_length);
std::vector<WordNF> enumerate_words(int r, int p, int max_length);
Moebius eval_word(const GroupData& g, const WordNF& w);

/// s_i^n s_{i+1}^{-n}, 1 <= i <= r-1, 1 <= n <= p-1 (indices 0-based).
std::vector<WordNF> schottky_gens(const GroupData& g);

/// Sum over ordered pairs i != j of the mirror distances.
std::int64_t mirror_metric(const GroupData& g);

struct NormalizeResult {
  GroupData group;
  int rewrites = 0;
  std::vector<std::int64_t> metric_trace;
  /// Output generator i equals conj[i] * input_i * conj[i]^-1.
  std::vector<WordNF> conjugators;
};

/// Removes foldings e_m(k) = s_m^n(e_m(l)) by conjugating subfamilies until
/// none remains. `radius` <= 0 selects twice the largest mirror distance.
NormalizeResult normalize_generators(const GroupData& g, std::int64_t radius = 0);

/// Moves P_1 to 0, P_2 to a finite point and puts s_1 = [[1,0],[1,1]];
/// returns the conjugated group with the coordinate change.
std::pair<GroupData, Moebius> standard_frame(const GroupData& g);

struct HutiItem {
  int item;  // 1..6
  bool ok;
  std::string witness;
};

struct HutiReport {
  bool ok = true;
  LaurentElem eta;
  LaurentElem p2;
  std::vector<HutiItem> items;
  std::size_t words_checked = 0;
};

/// Valuation form of the six assertions about orbits of P_1, P_i and u.
HutiReport huti_check(const GroupData& g, const End& u, int max_length);

}  // namespace mumford
