#include <doctest.h>

#include <algorithm>
#include <set>

#include "mumford/error.hpp"
#include "mumford/groups.hpp"
#include "support.hpp"

using namespace mumford;
using testing_support::Gen;
using testing_support::lit;

namespace {

// Every letter sequence of length <= L, keeping those without equal neighbours.
std::set<std::vector<std::pair<int, int>>> brute_words(int r, int p, int L) {
  std::set<std::vector<std::pair<int, int>>> out{{}};
  std::vector<std::vector<std::pair<int, int>>> layer{{}};
  for (int len = 1; len <= L; ++len) {
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& w : layer)
      for (int i = 0; i < r; ++i)
        for (int n = 1; n < p; ++n) {
          auto v = w;
          v.emplace_back(i, n);
          next.push_back(v);
        }
    for (const auto& w : next) {
      bool reduced = true;
      for (std::size_t k = 1; k < w.size(); ++k) reduced = reduced && w[k].first != w[k - 1].first;
      if (reduced) out.insert(w);
    }
    layer = std::move(next);
  }
  return out;
}

WordNF random_word(Gen& gen, int r, int p, int len) {
  WordNF w;
  for (int k = 0; k < len; ++k) w.letters.emplace_back(gen.uniform(0, r - 1), gen.uniform(1, p - 1));
  // canonical form via multiplication by the empty word
  return WordNF{}.times(w, p);
}

}  // namespace

TEST_CASE("word enumeration matches brute force") {
  for (auto [r, p, L] : {std::tuple{2, 3, 4}, {3, 2, 5}, {3, 3, 3}, {4, 5, 2}}) {
    const auto words = enumerate_words(r, p, L);
    std::set<std::vector<std::pair<int, int>>> got;
    for (const auto& w : words) got.insert(w.letters);
    CHECK(got.size() == words.size());
    CHECK(got == brute_words(r, p, L));
    std::uint64_t total = 0;
    for (int len = 0; len <= L; ++len) total += word_count(r, p, len);
    CHECK(total == words.size());
  }
}

TEST_CASE("word products reduce freely") {
  const int p = 3;
  WordNF a{{{0, 1}, {1, 2}}};
  WordNF b{{{1, 1}, {0, 1}}};
  CHECK(a.times(b, p) == WordNF{{{0, 2}}});
  CHECK(a.times(a.inverse(p), p).empty());
  CHECK(WordNF{{{0, 1}}}.times(WordNF{{{0, 2}}}, p).empty());
  CHECK(a.str() == "s1^1 s2^2");
}

TEST_CASE("word evaluation is a homomorphism") {
  Gen gen(testing_support::property_seed() + 20);
  const FieldParams F(3);
  PrecisionScope scope(40);
  const GroupData g = make_group({make_parabolic(End::at(LaurentElem(F)), lit(F, "1")),
                                  make_parabolic(End::at(lit(F, "1")), lit(F, "t^-2")),
                                  make_parabolic(End::infinity(F), lit(F, "t^-5"))});
  for (int trial = 0; trial < 30; ++trial) {
    const WordNF x = random_word(gen, 3, 3, gen.uniform(0, 4));
    const WordNF y = random_word(gen, 3, 3, gen.uniform(0, 4));
    CHECK(eval_word(g, x.times(y, 3)).equals(eval_word(g, x) * eval_word(g, y)));
    CHECK(eval_word(g, x.inverse(3)).equals(eval_word(g, x).inverse()));
  }
}

TEST_CASE("parabolic generators") {
  const FieldParams F(5);
  PrecisionScope scope(40);
  const ParabolicGen s = make_parabolic(End::at(lit(F, "t + 2")), lit(F, "t^-1"));
  CHECK(s.matrix.pow(5).is_identity());
  CHECK_FALSE(s.matrix.pow(2).is_identity());
  CHECK(same_end(s.matrix.apply(s.fixed_point), s.fixed_point));
  CHECK(same_end(parabolic_from_matrix(s.matrix).fixed_point, s.fixed_point));
  CHECK_THROWS_AS(make_parabolic(End::at(LaurentElem(F)), LaurentElem(F)), Error);
  const LaurentElem one = LaurentElem::from_int(F, 1);
  CHECK_THROWS_AS(parabolic_from_matrix(Moebius(lit(F, "t"), LaurentElem(F), LaurentElem(F), one)), Error);
  CHECK_THROWS_AS(make_group({s, make_parabolic(End::at(lit(F, "t + 2")), lit(F, "t^-3"))}), Error);
}

TEST_CASE("schottky generators") {
  const FieldParams F(3);
  const GroupData g = make_group({make_parabolic(End::at(LaurentElem(F)), lit(F, "1")),
                                  make_parabolic(End::at(lit(F, "1")), lit(F, "t^-2")),
                                  make_parabolic(End::at(lit(F, "t^-3")), lit(F, "t^-5"))});
  const auto gens = schottky_gens(g);
  CHECK(gens.size() == 4);
  CHECK(gens.front() == WordNF{{{0, 1}, {1, 2}}});
}

TEST_CASE("normalisation removes a folding and lowers the metric") {
  const FieldParams F(3);
  PrecisionScope scope(48);
  const LaurentElem one = LaurentElem::from_int(F, 1);
  const ParabolicGen s1 = make_parabolic(End::at(LaurentElem(F)), one);
  const ParabolicGen s2 = make_parabolic(End::at(one), lit(F, "t^-2"));
  const ParabolicGen t3 = make_parabolic(End::at(lit(F, "1 + t")), lit(F, "t^-4"));
  // s_3 = s_1 t_3 s_1^-1 folds onto the edge leaving M(s_1) towards M(s_2)
  const ParabolicGen s3 = parabolic_from_matrix(s1.matrix * t3.matrix * s1.matrix.inverse());
  const GroupData g = make_group({s1, s2, s3});
  const NormalizeResult res = normalize_generators(g);
  CHECK(res.rewrites >= 1);
  for (std::size_t k = 1; k < res.metric_trace.size(); ++k) CHECK(res.metric_trace[k] < res.metric_trace[k - 1]);
  CHECK(mirror_metric(res.group) < mirror_metric(g));
  for (int i = 0; i < g.r(); ++i) {
    const Moebius c = eval_word(g, res.conjugators[i]);
    CHECK(res.group.generators[i].matrix.equals(c * g.generators[i].matrix * c.inverse()));
  }
  CHECK(normalize_generators(res.group).rewrites == 0);
}

TEST_CASE("standard frame") {
  for (int p : {2, 3}) {
    const FieldParams F = testing_support::theta_field(p);
    PrecisionScope scope(40);
    for (int d = 1; d <= 3; ++d) {
      const GroupData g = testing_support::standard_pair(F, d);
      const auto [h, frame] = standard_frame(g);
      const End& q1 = h.generators[0].fixed_point;
      const End& q2 = h.generators[1].fixed_point;
      REQUIRE_FALSE(q1.is_infinite());
      REQUIRE_FALSE(q2.is_infinite());
      CHECK(q1.value().is_zero());
      const LaurentElem one = LaurentElem::from_int(F, 1);
      CHECK(h.generators[0].matrix.equals(Moebius(one, LaurentElem(F), one, one)));
      REQUIRE(h.generators[1].eta_form);
      CHECK(h.generators[1].eta_form->second.ord() > q2.value().ord());
      CHECK(mirror_metric(h) == mirror_metric(g));
      CHECK(h.generators[1].matrix.equals(frame * g.generators[1].matrix * frame.inverse()));
    }
  }
}

TEST_CASE("huti assertions on standard pairs") {
  for (int p : {2, 3}) {
    const FieldParams F = testing_support::theta_field(p);
    PrecisionScope scope(40);
    for (int d = 1; d <= 3; ++d) {
      const GroupData h = standard_frame(testing_support::standard_pair(F, d)).first;
      const LaurentElem p2 = h.generators[1].fixed_point.value();
      const Fq c = F.residue().q() - 1;  // a residue class other than 0 and 1
      const HutiReport rep = huti_check(h, End::at(p2 * LaurentElem::monomial(F, c, 0)), 5);
      CHECK(rep.ok);
      CHECK(rep.items.size() == 6);
      CHECK(rep.words_checked == enumerate_words(h, 5).size());
    }
  }
}

TEST_CASE("huti preconditions") {
  const FieldParams F(3);
  PrecisionScope scope(40);
  const GroupData g = testing_support::standard_pair(F, 2);
  // P_2 = 1 with |eta| > |P_2|
  try {
    (void)huti_check(g, End::at(lit(F, "2")), 2);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
  const GroupData h = standard_frame(g).first;
  const LaurentElem p2 = h.generators[1].fixed_point.value();
  CHECK_THROWS_AS(huti_check(h, End::at(p2 * lit(F, "t")), 2), Error);
}
