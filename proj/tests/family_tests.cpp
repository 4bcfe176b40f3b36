#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "wreathlab/errors.hpp"
#include "wreathlab/family.hpp"
#include "wreathlab/family_config.hpp"

using namespace wreathlab;

namespace {

Word w(const std::string& text) { return parse_generator_word(text); }

Family zzk() {
  return Family::finite({make_integers(), make_free_abelian(2), make_klein_bottle()});
}

}  // namespace

TEST_CASE("global numbering concatenates the groups' generators") {
  const Family fam = zzk();
  CHECK(fam.is_finite());
  CHECK(fam.group_count() == 3);
  CHECK(fam.global_generator_count() == 5);
  CHECK(fam.group(2).name == "Z^2");
  CHECK(fam.global_index(1, 1) == 1);
  CHECK(fam.global_index(2, 1) == 2);
  CHECK(fam.global_index(2, 2) == 3);
  CHECK(fam.global_index(3, 2) == 5);
  CHECK(fam.resolve(1) == std::pair{1, 1});
  CHECK(fam.resolve(3) == std::pair{2, 2});
  CHECK(fam.resolve(4) == std::pair{3, 1});
  CHECK(fam.max_global_index(2) == 3);
  CHECK(fam.global_exists(5));
  CHECK_FALSE(fam.global_exists(6));
  CHECK_FALSE(fam.global_exists(0));

  CHECK_THROWS_AS(fam.resolve(6), InputError);
  CHECK_THROWS_AS(fam.resolve(0), InputError);
  CHECK_THROWS_AS(fam.group(4), InputError);
  CHECK_THROWS_AS(fam.group(0), InputError);
  CHECK_THROWS_AS(fam.global_index(2, 3), InputError);
}

TEST_CASE("zero-generator groups own no global indices") {
  const Family fam = Family::finite({make_integers(), make_free_abelian(0), make_integers()});
  CHECK(fam.global_generator_count() == 2);
  CHECK(fam.resolve(2) == std::pair{3, 1});
  CHECK(fam.max_global_index(2) == 0);
}

TEST_CASE("component projection keeps within-group letter order") {
  const Family fam = zzk();
  const auto parts = project_components(fam, w("x1 x4 x2 x4^-1 x3"));
  CHECK(parts.size() == 3);
  CHECK(parts.at(1) == Word{{1, +1}});
  CHECK(parts.at(2) == Word{{1, +1}, {2, +1}});
  CHECK(parts.at(3) == Word{{1, +1}, {1, -1}});
  CHECK(project_components(fam, {}).empty());
}

TEST_CASE("direct sum word problem and key") {
  const Family fam = zzk();
  // Letters of different groups commute; within a group they need not.
  CHECK(direct_sum_trivial(fam, w("x1 x2 x1^-1 x2^-1")));
  CHECK(direct_sum_trivial(fam, w("x4 x5 x4^-1 x5")));
  CHECK_FALSE(direct_sum_trivial(fam, w("x4 x5 x4^-1 x5^-1")));
  CHECK_FALSE(direct_sum_trivial(fam, w("x1")));

  CHECK(direct_sum_key(fam, w("x1 x1^-1 x3")) == direct_sum_key(fam, w("x3")));
  CHECK(direct_sum_key(fam, w("x1 x3")) != direct_sum_key(fam, w("x3")));
  CHECK(direct_sum_key(fam, {}) == "");
}

TEST_CASE("direct sum sign is lexicographic over the groups") {
  const Family fam = zzk();
  CHECK(direct_sum_sign(fam, w("x2^5")) == OrderSign::positive);
  CHECK(direct_sum_sign(fam, w("x1^-1 x2^5")) == OrderSign::negative);
  CHECK(direct_sum_sign(fam, w("x1 x1^-1")) == OrderSign::zero);
  CHECK(direct_sum_sign(fam, w("x4 x5 x4^-1")) == OrderSign::negative);

  // A finite family with any unorderable member refuses sign queries outright.
  const Family torsion = Family::finite({make_integers(), make_cyclic(4)});
  CHECK_THROWS_AS(direct_sum_sign(torsion, w("x1")), UnsupportedError);
}

TEST_CASE("whole-direct-sum descriptor") {
  const Family fam = zzk();
  const GroupDescriptor g = direct_sum_descriptor(fam);
  CHECK(g.generator_count == 5);
  CHECK(g.orderable());
  CHECK(g.trivial(w("x2 x3 x2^-1 x3^-1")));
  CHECK(g.order(w("x5")) == OrderSign::positive);
  CHECK(g.element_key(w("x1 x4")) == direct_sum_key(fam, w("x1 x4")));

  const GroupDescriptor torsion = direct_sum_descriptor(Family::finite({make_cyclic(3)}));
  CHECK_FALSE(torsion.orderable());
  CHECK(torsion.trivial(w("x1^3")));
}

TEST_CASE("enumerated families grow lazily and memoize") {
  int calls = 0;
  const Family fam = Family::enumerated(
      [&calls](int index) {
        ++calls;
        return index % 2 == 1 ? make_integers() : make_free_abelian(2);
      },
      TorsionPolicy::torsion_free_generators, {}, "alternating");
  CHECK_FALSE(fam.is_finite());
  CHECK(calls == 0);

  CHECK(fam.group(2).name == "Z^2");
  CHECK(calls == 2);
  CHECK(fam.group(1).name == "Z");
  CHECK(calls == 2);  // memoized, not re-enumerated

  // Groups 1..4 contribute 1, 2, 1, 2 generators.
  CHECK(fam.resolve(4) == std::pair{3, 1});
  CHECK(fam.resolve(6) == std::pair{4, 2});
  CHECK(fam.global_index(4, 1) == 5);
  CHECK(fam.global_exists(1000000));
  CHECK(fam.torsion_policy() == TorsionPolicy::torsion_free_generators);
  CHECK(fam.signature() == "fam-enum[alternating]");

  CHECK_THROWS_AS(fam.group_count(), UnsupportedError);
  CHECK_THROWS_AS(fam.global_generator_count(), UnsupportedError);
  CHECK_THROWS_AS(direct_sum_descriptor(fam), UnsupportedError);
}

TEST_CASE("enumerated family construction rules") {
  CHECK_THROWS_AS(
      Family::enumerated([](int) { return make_integers(); }, TorsionPolicy::finite_family),
      InputError);

  const Family bad = Family::enumerated([](int) { return make_free_abelian(0); },
                                        TorsionPolicy::torsion_free_generators);
  CHECK_THROWS_AS(bad.group(1), InputError);

  const Family throwing = Family::enumerated(
      [](int) -> GroupDescriptor { throw std::runtime_error("boom"); },
      TorsionPolicy::generator_order_oracle);
  CHECK_THROWS_AS(throwing.group(1), InputError);
}

TEST_CASE("signatures and digests are stable and discriminating") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  const Family a = Family::finite({make_integers(), make_free_abelian(2)});
  CHECK(a.signature() == "fam[Z,Z^n:2]");
  CHECK(a.digest() == Family::finite({make_integers(), make_free_abelian(2)}).digest());
  CHECK(a.digest() != Family::finite({make_free_abelian(2), make_integers()}).digest());
  CHECK(a.digest() != Family::finite({make_integers()}).digest());
}

TEST_CASE("family config parsing") {
  const auto doc = nlohmann::json::parse(R"({"groups": [
    {"name": "Z"},
    {"name": "Z^n", "params": {"n": 2}},
    {"name": "F_k", "params": {"k": 3}},
    {"name": "Klein"},
    {"name": "Z/m", "params": {"m": 6}},
    {"name": "S_n", "params": {"n": 3}}
  ]})");
  const Family fam = family_from_json(doc);
  CHECK(fam.group_count() == 6);
  CHECK(fam.global_generator_count() == 1 + 2 + 3 + 2 + 1 + 2);
  CHECK(fam.group(3).name == "F_3");
  CHECK(fam.digest() ==
        Family::finite({make_integers(), make_free_abelian(2), make_free_group(3),
                        make_klein_bottle(), make_cyclic(6), make_symmetric(3)})
            .digest());
}

TEST_CASE("family config rejects malformed documents with located messages") {
  auto reject = [](const char* text, const char* needle) {
    try {
      family_from_json(nlohmann::json::parse(text));
      FAIL_CHECK("expected InputError for " << text);
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  reject(R"([1, 2])", "must be a JSON object");
  reject(R"({"group": []})", "unknown key 'group'");
  reject(R"({})", "'groups' array");
  reject(R"({"groups": []})", "at least one group");
  reject(R"({"groups": [17]})", "groups[0] must be an object");
  reject(R"({"groups": [{"name": "Z"}, {"nome": "Z"}]})", "groups[1]: unknown key 'nome'");
  reject(R"({"groups": [{"name": 3}]})", "string 'name'");
  reject(R"({"groups": [{"name": "Quaternion"}]})", "unknown group name");
  reject(R"({"groups": [{"name": "Z", "params": {"n": 1}}]})", "takes no parameters");
  reject(R"({"groups": [{"name": "Z^n"}]})", "needs params.n");
  reject(R"({"groups": [{"name": "Z^n", "params": {"k": 2}}]})", "unknown key 'k'");
  reject(R"({"groups": [{"name": "Z^n", "params": {"n": 2.5}}]})", "must be an integer");
  reject(R"({"groups": [{"name": "Z^n", "params": {"n": -1}}]})", "Z^n needs");
}

TEST_CASE("family config from file") {
  const std::string path = "family_tests_tmp.json";
  {
    std::ofstream out(path);
    out << R"({"groups": [{"name": "Z"}, {"name": "Klein"}]})";
  }
  const Family fam = family_from_file(path);
  CHECK(fam.global_generator_count() == 3);

  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(family_from_file(path), InputError);
  CHECK_THROWS_AS(family_from_file("does_not_exist_anywhere.json"), InputError);
  std::remove(path.c_str());
}
