#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wreathlab/ball.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/level1.hpp"
#include "wreathlab/level2.hpp"

using namespace wreathlab;

namespace {

Word w(const std::string& text) { return parse_generator_word(text); }
Word sf(const std::string& text) { return parse_sf_word(text); }

Family zz() { return Family::finite({make_integers(), make_integers()}); }

Family z_inf() {
  return Family::enumerated([](int) { return make_integers(); },
                            TorsionPolicy::torsion_free_generators);
}

}  // namespace

TEST_CASE("first-level arithmetic") {
  const Family fam = zz();
  const Level1Element t = l1_t(1);
  const Level1Element f1 = l1_f(1);

  // Multiplying by t on the left shifts the right factor's support.
  const Level1Element tf = l1_mul(t, f1);
  CHECK(tf.factors == std::vector<Level1Factor>{{1, 1, +1}});
  CHECK(tf.t_exp == 1);
  const Level1Element ft = l1_mul(f1, t);
  CHECK(ft.factors == std::vector<Level1Factor>{{1, 0, +1}});
  CHECK(ft.t_exp == 1);
  CHECK_FALSE(l1_equal(tf, ft, fam));

  for (const Level1Element& e : {tf, ft, l1_mul(tf, l1_inv(ft)), psi_gen(fam, 2)}) {
    CHECK(l1_is_trivial(l1_mul(e, l1_inv(e)), fam));
    CHECK(l1_is_trivial(l1_mul(l1_inv(e), e), fam));
  }
}

TEST_CASE("psi generator images and their evaluation") {
  const Family fam = zz();
  const Level1Element p = psi_gen(fam, 1);
  CHECK(p.factors == std::vector<Level1Factor>{{1, 1, +1}, {1, 0, -1}});
  CHECK(p.t_exp == 0);
  CHECK(l1_window(p) == std::pair{0LL, 1LL});

  // The image is the indicator function: x1 at coordinate 0, trivial elsewhere.
  CHECK(eval_l1(p, 0) == Word{{1, +1}});
  CHECK(direct_sum_trivial(fam, eval_l1(p, 1)));
  CHECK(eval_l1(p, -1).empty());
  CHECK(eval_l1(p, 5) == Word{{1, +1}, {1, -1}});

  CHECK_THROWS_AS(psi_gen(fam, 3), InputError);
  CHECK_THROWS_AS(psi_gen(fam, 0), InputError);

  const Level1Element q = psi_word(fam, 2, w("x1^-1"));
  CHECK(l1_equal(q, l1_inv(psi_gen(fam, 2)), fam));
}

TEST_CASE("first-level triviality sees the group structure") {
  const Level1Element f_squared = l1_mul(l1_f(1), l1_f(1));
  CHECK(l1_is_trivial(f_squared, Family::finite({make_symmetric(2)})));
  CHECK_FALSE(l1_is_trivial(f_squared, Family::finite({make_integers()})));
  CHECK_FALSE(l1_is_trivial(l1_t(1), zz()));
  CHECK(l1_is_trivial(l1_identity(), zz()));
}

TEST_CASE("first-level keys are window independent") {
  const Family fam = zz();
  const Level1Element a = l1_mul(l1_f(1), l1_t(2));
  const Level1Element b = l1_mul(l1_mul(l1_f(1), l1_t(1)), l1_t(1));
  CHECK(l1_equal(a, b, fam));
  CHECK(l1_key(a, fam) == l1_key(b, fam));

  // Commuting-coordinate commutator: eight factors, yet the identity.
  const Level1Element p1 = psi_gen(fam, 1), p2 = psi_gen(fam, 2);
  const Level1Element comm =
      l1_mul(l1_mul(p1, p2), l1_mul(l1_inv(p1), l1_inv(p2)));
  CHECK(comm.factors.size() == 8);
  CHECK(l1_is_trivial(comm, fam));
  CHECK(l1_key(comm, fam) == l1_key(l1_identity(), fam));

  CHECK_FALSE(l1_equal(l1_f(1), l1_mul(l1_mul(l1_t(1), l1_f(1)), l1_t(-1)), fam));
  CHECK(l1_key(p1, fam) != l1_key(p2, fam));
}

TEST_CASE("collection of sf words") {
  CHECK(l2_collect(sf("s F s^-1")).factors == std::vector<Level2Factor>{{1, +1}});
  CHECK(l2_collect(sf("s F s^-1")).s_exp == 0);
  CHECK(l2_collect(sf("F F^-1")) == l2_identity());
  CHECK(l2_collect(sf("s^3")) == l2_s(3));
  CHECK(l2_collect(sf("F^-1")) == l2_F(-1));

  const Level2Element e = l2_collect(sf("F s F s^-1 F^-1 s F^-1 s^-1"));
  CHECK(e == Psi_gen(zz(), 1));
  CHECK_THROWS_AS(l2_collect({{3, +1}}), InputError);
}

TEST_CASE("letter expansion inverts collection") {
  CHECK(letter_expansion(l2_identity()).empty());
  CHECK(letter_expansion(l2_s(3)) == sf("s^3"));
  CHECK(letter_expansion(l2_F(-1)) == sf("F^-1"));
  CHECK(letter_expansion(Psi_gen(zz(), 1)) == sf("F s F s^-1 F^-1 s F^-1 s^-1"));

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Level2Element e = oracle::random_element(rng, 5, 6, 3);
    CHECK(l2_collect(letter_expansion(e)) == e);
  }

  Level2Element far;
  l2_push(far, {9'000'000, +1});
  CHECK_THROWS_AS(letter_expansion(far), BudgetExceeded);
}

TEST_CASE("second-level generator images") {
  const Family fam = Family::finite({make_free_abelian(3)});
  CHECK(Psi_gen(fam, 1).factors ==
        std::vector<Level2Factor>{{0, +1}, {1, +1}, {0, -1}, {1, -1}});
  CHECK(Psi_gen(fam, 2).factors ==
        std::vector<Level2Factor>{{0, +1}, {3, +1}, {0, -1}, {3, -1}});
  CHECK(Psi_gen(fam, 3).factors ==
        std::vector<Level2Factor>{{0, +1}, {7, +1}, {0, -1}, {7, -1}});
  CHECK(Psi_gen(fam, 1).s_exp == 0);

  // Image word lengths double with the generator index: 2^(i+2).
  CHECK(letter_expansion(Psi_gen(fam, 1)).size() == 8);
  CHECK(letter_expansion(Psi_gen(fam, 2)).size() == 16);
  CHECK(letter_expansion(Psi_gen(fam, 3)).size() == 32);

  CHECK_THROWS_AS(Psi_gen(fam, 4), InputError);
  CHECK_THROWS_AS(Psi_gen(fam, 0), InputError);
  CHECK_THROWS_AS(Psi_gen(z_inf(), 63), UnsupportedError);
  CHECK(Psi_gen(z_inf(), 62).factors.size() == 4);
}

TEST_CASE("embedding words") {
  const Family fam = Family::finite({make_integers(), make_klein_bottle()});

  // Local and global words name the same generators.
  CHECK(embed(fam, 2, w("x1")) == embed(fam, 0, w("x2")));
  CHECK(embed(fam, 1, w("x1")) == Psi_gen(fam, 1));
  CHECK(embed(fam, 2, w("x1^-1")) == l2_inv(Psi_gen(fam, 2)));

  // The defining relation of the second group dies under the embedding.
  CHECK(l2_is_trivial(embed(fam, 2, w("x1 x2 x1^-1 x2")), fam));
  CHECK_FALSE(l2_is_trivial(embed(fam, 2, w("x1 x2 x1^-1 x2^-1")), fam));

  // embed_word expands to the same element it embeds.
  for (const char* text : {"x1", "x2 x3", "x1^-1 x3 x2", "x2^2"}) {
    const Word word = w(text);
    CHECK(l2_equal(l2_collect(embed_word(fam, 0, word)), embed(fam, 0, word), fam));
  }
  CHECK(embed_word(fam, 1, w("x1")).size() == 8);

  CHECK_THROWS_AS(embed(fam, 1, w("x2")), InputError);
  CHECK_THROWS_AS(embed(fam, 0, w("x4")), InputError);
  CHECK_THROWS_AS(embed(fam, 3, w("x1")), InputError);
}

TEST_CASE("embedding is a homomorphism with injective radius-2 behavior") {
  const Family fam = zz();
  const BallResult b = ball(direct_sum_descriptor(fam), 2);
  REQUIRE_FALSE(b.capped);
  for (const Word& u : b.words)
    for (const Word& v : b.words) {
      const Level2Element prod = l2_mul(embed(fam, 0, u), embed(fam, 0, v));
      CHECK(l2_equal(prod, embed(fam, 0, concat(u, v)), fam));
    }
  for (size_t i = 0; i < b.words.size(); ++i)
    for (size_t j = i + 1; j < b.words.size(); ++j)
      CHECK_FALSE(l2_equal(embed(fam, 0, b.words[i]), embed(fam, 0, b.words[j]), fam));
}

TEST_CASE("pointwise evaluation of embedded generators") {
  const Family fam = zz();
  const Level2Element E = Psi_gen(fam, 1);

  CHECK(l1_equal(eval_l2(E, 1, fam), psi_gen(fam, 1), fam));
  CHECK(l2_support_points(E, fam) == std::vector<long long>{0, 1, 2, 3, 4});
  for (long long k = -12; k <= 12; ++k)
    if (k != 1) CHECK(l1_is_trivial(eval_l2(E, k, fam), fam));

  // Evaluation at 1 is multiplicative on the embedded subgroup.
  const BallResult b = ball(direct_sum_descriptor(fam), 2);
  for (const Word& u : b.words) {
    Level1Element expect;
    for (const Letter& l : u) {
      const Level1Element g = psi_gen(fam, l.gen);
      expect = l1_mul(expect, l.sign > 0 ? g : l1_inv(g));
    }
    CHECK(l1_equal(eval_l2(embed(fam, 0, u), 1, fam), expect, fam));
  }
}

TEST_CASE("second-level triviality") {
  const Family fam = zz();
  CHECK(l2_is_trivial(l2_identity(), fam));
  CHECK_FALSE(l2_is_trivial(l2_s(1), fam));
  CHECK_FALSE(l2_is_trivial(l2_F(+1), fam));
  const Level2Element E = Psi_gen(fam, 2);
  CHECK(l2_is_trivial(l2_mul(E, l2_inv(E)), fam));
  CHECK_FALSE(l2_is_trivial(E, fam));

  // Generators of different summands commute after embedding.
  CHECK(l2_is_trivial(embed(fam, 0, w("x1 x2 x1^-1 x2^-1")), fam));
  const Family free2 = Family::finite({make_free_group(2)});
  CHECK_FALSE(l2_is_trivial(embed(free2, 1, w("x1 x2 x1^-1 x2^-1")), free2));
}

TEST_CASE("triviality agrees with the wide-window oracle on random elements") {
  std::mt19937 rng(20260823);
  const Family fams[] = {zz(), Family::finite({make_integers(), make_klein_bottle()}),
                         Family::finite({make_symmetric(3)})};
  for (const Family& fam : fams) {
    int trivial_seen = 0;
    for (int i = 0; i < 250; ++i) {
      const Level2Element e = oracle::random_element(rng, 6, 4, i % 5 == 0 ? 1 : 0);
      const bool got = l2_is_trivial(e, fam);
      CHECK(got == oracle::brute_l2_trivial(e, fam));
      trivial_seen += got ? 1 : 0;
    }
    CHECK(trivial_seen > 0);  // the sample exercises both outcomes
  }
}

TEST_CASE("keys separate elements exactly") {
  const Family fam = zz();
  std::mt19937 rng(99);
  std::vector<Level2Element> sample;
  for (int i = 0; i < 40; ++i) sample.push_back(oracle::random_element(rng, 4, 3, 1));
  sample.push_back(l2_identity());
  sample.push_back(Psi_gen(fam, 1));
  for (const Level2Element& a : sample)
    for (const Level2Element& b : sample)
      CHECK(l2_equal(a, b, fam) == (l2_key(a, fam) == l2_key(b, fam)));
}

TEST_CASE("infinite families are decided without consulting the tail oracle") {
  bool oracle_called = false;
  const Family z_tail = Family::enumerated(
      [](int) { return make_integers(); }, TorsionPolicy::generator_order_oracle,
      [&oracle_called](long long, long long) -> std::optional<bool> {
        oracle_called = true;
        return std::nullopt;
      });
  const Family s2_inf = Family::enumerated(
      [](int) { return make_symmetric(2); }, TorsionPolicy::generator_order_oracle,
      [&oracle_called](long long power, long long) -> std::optional<bool> {
        oracle_called = true;
        return power % 2 == 0;
      });

  // F and its s^5-conjugate commute: no offset pair lands on two live slots.
  Level2Element far_comm;
  for (auto [shift, sign] : {std::pair{0LL, +1}, {5LL, +1}, {0LL, -1}, {5LL, -1}})
    l2_push(far_comm, {shift, sign});
  CHECK(l2_is_trivial(far_comm, z_tail));

  // The s^3-conjugate does interact: offsets 1 and 4 are both live at k = 1.
  Level2Element near_comm;
  for (auto [shift, sign] : {std::pair{0LL, +1}, {3LL, +1}, {0LL, -1}, {3LL, -1}})
    l2_push(near_comm, {shift, sign});
  CHECK_FALSE(l2_is_trivial(near_comm, z_tail));

  // F^2 exposes a nonzero t-exponent at the offset-1 slot even when every
  // group generator is an involution.
  const Level2Element f_squared = l2_mul(l2_F(+1), l2_F(+1));
  CHECK_FALSE(l2_is_trivial(f_squared, s2_inf));

  // The squared commutator dies over involutions but not over the integers.
  const Level2Element comm_squared = l2_mul(near_comm, near_comm);
  CHECK(l2_is_trivial(comm_squared, s2_inf));
  CHECK_FALSE(l2_is_trivial(comm_squared, z_tail));

  CHECK_FALSE(oracle_called);
}

TEST_CASE("evaluation refuses offsets that name unrepresentable generators") {
  // Commutator of conjugates 2^62 apart. Its only candidate interaction point
  // pairs offset 2^62 with offset 2^63.
  const long long max_shift = (1LL << 62) - 1;
  Level2Element e;
  for (auto [shift, sign] :
       {std::pair{-1LL, +1}, {max_shift, +1}, {-1LL, -1}, {max_shift, -1}})
    l2_push(e, {shift, sign});
  // Over a finite family both huge offsets are dead, so the factors commute.
  CHECK(l2_is_trivial(e, zz()));
  // Over an enumerated family offset 2^63 would name generator 63, which no
  // 64-bit shift can represent; the decider refuses instead of guessing.
  CHECK_THROWS_AS(l2_is_trivial(e, z_inf()), UnsupportedError);
}

TEST_CASE("element JSON round trip and strict parsing") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Level2Element e = oracle::random_element(rng, 5, 9, 4);
    CHECK(l2_from_json(l2_to_json(e)) == e);
  }
  CHECK(l2_to_json(Psi_gen(zz(), 1)).dump() ==
        R"({"factors":[[0,1],[1,1],[0,-1],[1,-1]],"sExp":0})");

  auto reject = [](const char* text) {
    CHECK_THROWS_AS(l2_from_json(nlohmann::json::parse(text)), InputError);
  };
  reject(R"([1])");
  reject(R"({"factors": [], "sExp": 0, "extra": 1})");
  reject(R"({"factors": []})");
  reject(R"({"sExp": 0})");
  reject(R"({"factors": 3, "sExp": 0})");
  reject(R"({"factors": [[1]], "sExp": 0})");
  reject(R"({"factors": [[1, 2]], "sExp": 0})");
  reject(R"({"factors": [[1, 0]], "sExp": 0})");
  reject(R"({"factors": [[1.5, 1]], "sExp": 0})");
  reject(R"({"factors": [[4611686018427387904, 1]], "sExp": 0})");
  reject(R"({"factors": [], "sExp": 4611686018427387904})");
  reject(R"({"factors": [], "sExp": 9223372036854775808})");

  const Level2Element edge =
      l2_from_json(nlohmann::json::parse(R"({"factors": [[4611686018427387903, -1]], "sExp": -4611686018427387903})"));
  CHECK(edge.factors.front().shift == (1LL << 62) - 1);
  CHECK(edge.s_exp == -((1LL << 62) - 1));
}
