#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "jnr/fixtures.hpp"
#include "jnr/io.hpp"

using namespace jnr;

TEST_CASE("symbolic entry parser", "[io]") {
  REQUIRE(parse_symbolic("3/4") == Catch::Approx(0.75));
  REQUIRE(parse_symbolic("-3/4") == Catch::Approx(-0.75));
  REQUIRE(parse_symbolic("sqrt(2)") == Catch::Approx(std::sqrt(2.0)));
  REQUIRE(parse_symbolic("-1/sqrt(2)") == Catch::Approx(-1.0 / std::sqrt(2.0)));
  REQUIRE(parse_symbolic("sqrt(3)/2") == Catch::Approx(std::sqrt(3.0) / 2.0));
  REQUIRE(parse_symbolic(" 2.5 ") == Catch::Approx(2.5));
  REQUIRE(parse_symbolic("-4") == Catch::Approx(-4.0));
  REQUIRE_THROWS_AS(parse_symbolic("sqrt(-1)"), ParseError);
  REQUIRE_THROWS_AS(parse_symbolic("1/0"), ParseError);
  REQUIRE_THROWS_AS(parse_symbolic("fred"), ParseError);
  REQUIRE_THROWS_AS(parse_symbolic("1.5x"), ParseError);
}

TEST_CASE("triple files round-trip through json", "[io]") {
  for (const std::string& id : fixtures::ids()) {
    GalleryExample ex = fixtures::load(id);
    ojson doc = triple_to_json(ex.file.triple);
    TripleFile back = parse_triple_json(doc);
    INFO(id);
    REQUIRE(back.triple.dim() == ex.file.triple.dim());
    REQUIRE(input_digest(back.triple) == input_digest(ex.file.triple));
  }
}

TEST_CASE("digest is stable and separates fixtures", "[io]") {
  GalleryExample a = fixtures::load("E5");
  GalleryExample b = fixtures::load("E7a");
  std::string d1 = input_digest(a.file.triple);
  REQUIRE(d1.size() == 16);
  REQUIRE(d1.find_first_not_of("0123456789abcdef") == std::string::npos);
  REQUIRE(d1 == input_digest(a.file.triple));
  REQUIRE(d1 != input_digest(b.file.triple));
}

TEST_CASE("text parser accepts comments and validates the header", "[io]") {
  std::string good = R"(// commuting pair, zero third matrix
{"n": 2,
 "matrices": [[[[1,0],[0,0]],[[0,0],[2,0]]],
              [[[0,0],[0,-1]],[[0,1],[0,0]]],
              [[[0,0],[0,0]],[[0,0],[0,0]]]]}
)";
  TripleFile tf = parse_triple_text(good);
  REQUIRE(tf.triple.dim() == 2);
  REQUIRE(tf.triple.a2.mat().at(0, 1) == cplx{0.0, -1.0});

  std::string bad_n = R"({"n": 7, "matrices": [[],[],[]]})";
  REQUIRE_THROWS_AS(parse_triple_text(bad_n), ParseError);

  std::string not_hermitian = R"({"n": 2,
 "matrices": [[[[0,0],[1,0]],[[0,0],[0,0]]],
              [[[0,0],[0,0]],[[0,0],[0,0]]],
              [[[0,0],[0,0]],[[0,0],[0,0]]]]})";
  REQUIRE_THROWS_AS(parse_triple_text(not_hermitian), ParseError);

  REQUIRE_THROWS_AS(parse_triple_text("not json at all"), ParseError);
}

TEST_CASE("all bundled fixtures load with three labels and a valid order", "[io]") {
  std::vector<std::string> ids = fixtures::ids();
  REQUIRE(ids.size() >= 25);
  for (const std::string& id : ids) {
    GalleryExample ex = fixtures::load(id);
    REQUIRE(ex.id == id);
    REQUIRE(ex.file.triple.dim() >= 2);
    REQUIRE(ex.file.triple.dim() <= kMaxDim);
    if (ex.class_column >= 0) REQUIRE(ex.file.triple.dim() == 4);
  }
  REQUIRE_THROWS_AS(fixtures::load("nope"), std::invalid_argument);
}

TEST_CASE("gap csv has the documented header and row count", "[io]") {
  SepSample s;
  s.dirs = {{1, 0, 0}, {0, 1, 0}};
  s.jnr_values = {-1.0, -2.0};
  s.sep_values = {-0.5, -2.0};
  s.points = {{1, 0, 0}, {0, 1, 0}};
  std::ostringstream os;
  write_gap_csv(os, s);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  REQUIRE(line == "ux,uy,uz,w_support,sep_support,gap");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  REQUIRE(rows == 2);
}
