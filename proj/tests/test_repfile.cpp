#include <doctest.h>

#include <string>

#include "canrep/repfile.hpp"
#include "canrep/small_rank.hpp"

using namespace canrep;

namespace {

CanonicalAlgebra alg237() {
  return CanonicalAlgebra(make_weights({2, 3, 7}), {Rat(0), Rat(1)});
}

bool same_rep(const Rep& a, const Rep& b) {
  return a.alg == b.alg && a.dims == b.dims && a.mats == b.mats;
}

}  // namespace

TEST_CASE("algebra descriptor round-trip") {
  const CanonicalAlgebra alg(make_weights({2, 2, 2, 2}),
                             {Rat(0), Rat(1), rat_frac(-3, 2)});
  const std::string text = emit_algebra(alg);
  CHECK(text.find("\"-3/2\"") != std::string::npos);
  CHECK(parse_algebra(text) == alg);
  CHECK(emit_algebra(parse_algebra(text)) == text);
}

TEST_CASE("representation file round-trip") {
  const CanonicalAlgebra alg = alg237();

  const Rep reps[] = {
      rank_one(alg, {{1, 1, 1}, 0}),
      rank_one(alg, {{1, 2, 6}, 2}),
      regular_exceptional(alg, {3, 2, 6}),
      regular_exceptional(alg, {1, 2, 1}),
      zero_rep(alg),
      simple_rep(alg, alg.vertex_zero()),
      projective_rep(alg, alg.vertex_zero()),
  };
  for (const Rep& m : reps) {
    const std::string text = emit_rep(m);
    CHECK(same_rep(parse_rep(text), m));
    CHECK(emit_rep(parse_rep(text)) == text);
  }
}

TEST_CASE("file layout is stable") {
  const Rep m = rank_one(alg237(), {{0, 0, 0}, 0});
  const std::string text = emit_rep(m);
  CHECK(text == emit_rep(m));
  CHECK(text.find("\"v0\": 1") != std::string::npos);
  CHECK(text.find("\"vc\": 0") != std::string::npos);

  // Empty shapes survive: alpha_1_2 is 0 x 0, alpha_1_1 is 1 x 0 with its
  // column count recovered from dims.
  CHECK(text.find("\"alpha_1_2\": []") != std::string::npos);
  CHECK(text.find("\"alpha_1_1\": [\n      []\n    ]") != std::string::npos);
  CHECK(text.back() == '\n');
}

TEST_CASE("parse errors carry context") {
  const CanonicalAlgebra alg = alg237();
  const std::string good = emit_rep(rank_one(alg, {{1, 1, 1}, 0}));

  auto message_of = [](const std::string& text) -> std::string {
    try {
      parse_rep(text);
    } catch (const RepFileError& e) {
      return e.what();
    }
    return "";
  };

  CHECK(message_of("{\"algebra\": ").find("line 1") != std::string::npos);

  std::string truncated = good;
  truncated.replace(truncated.find("\"x_1_1\""), 7, "\"x_9_9\"");
  CHECK(message_of(truncated).find("x_9_9") != std::string::npos);

  std::string bad_entry = good;
  bad_entry.replace(bad_entry.find("\"1\""), 3, "\"one\"");
  CHECK(message_of(bad_entry).find("not a rational") != std::string::npos);

  const auto cut = good.find(",\n  \"mats\"");
  REQUIRE(cut != std::string::npos);
  const std::string no_mats = good.substr(0, cut) + "\n}\n";
  CHECK(message_of(no_mats).find("mats") != std::string::npos);

  std::string negative_dim = good;
  negative_dim.replace(negative_dim.find("\"v0\": 1"), 7, "\"v0\": -1");
  CHECK(message_of(negative_dim).find("v0") != std::string::npos);
}

TEST_CASE("shape mismatches are rejected against dims") {
  const CanonicalAlgebra alg = alg237();
  std::string text = emit_rep(rank_one(alg, {{1, 1, 1}, 0}));
  const auto pos = text.find("\"alpha_3_2\": [");
  REQUIRE(pos != std::string::npos);
  text.insert(text.find('[', pos) + 1, "[\"1\"],");
  try {
    parse_rep(text);
    CHECK(false);
  } catch (const RepFileError& e) {
    const std::string what = e.what();
    CHECK(what.find("alpha_3_2") != std::string::npos);
    CHECK(what.find("rows") != std::string::npos);
  }
}

TEST_CASE("latex rendering") {
  const CanonicalAlgebra alg = alg237();
  Rep m = rank_one(alg, {{1, 1, 1}, 1});
  m.mats[alg.arrow_id(3, 2)].at(0, 0) = rat_frac(-3, 2);
  const std::string tex = latex_matrices(m);
  CHECK(tex.find("\\alpha^{(3)}_{2}") != std::string::npos);
  CHECK(tex.find("-\\tfrac{3}{2}") != std::string::npos);
  CHECK(tex.find("1 & 0") != std::string::npos);
  CHECK(tex.find("\\begin{pmatrix}") != std::string::npos);
}
