#include "cgk/diagram.hpp"
#include "cgk/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cgk;

namespace {

const char* kTrefoil = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]";
const char* kFigureEight = "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]";

ErrorKind kind_of(const std::string& text) {
  try {
    validate_diagram(parse_pd(text));
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("parsing the standard codes") {
  Diagram t = parse_pd(kTrefoil);
  CHECK(t.arcs == 3);
  CHECK(t.crossings.size() == 3);
  int writhe = 0;
  for (const auto& c : t.crossings) writhe += c.sign;
  CHECK(std::abs(writhe) == 3);

  Diagram f = parse_pd(kFigureEight);
  CHECK(f.arcs == 4);
  writhe = 0;
  for (const auto& c : f.crossings) writhe += c.sign;
  CHECK(writhe == 0);

  // Explicit signs override the label rule; brackets are optional.
  Diagram s = parse_pd("X[1,5,2,4]- X[3,1,4,6]- X[5,3,6,2]-");
  for (const auto& c : s.crossings) CHECK(c.sign == -1);
}

TEST_CASE("parse and incidence errors") {
  CHECK(kind_of("PD[X[1,5,2,4], X[3,1,4") == ErrorKind::ParseError);
  CHECK(kind_of("PD[Y[1,2,3,4]]") == ErrorKind::ParseError);
  CHECK(kind_of("PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,9]]") == ErrorKind::IncidenceError);
  try {
    parse_pd("PD[X[1,2,3,a]]");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("dihedral labeling counts") {
  CHECK(labeling_space(parse_pd(kTrefoil), MetacyclicGroup::dihedral(3)).size == 9);
  CHECK(labeling_space(parse_pd(kFigureEight), MetacyclicGroup::dihedral(5)).size == 25);
  CHECK(labeling_space(parse_pd(kTrefoil), MetacyclicGroup::dihedral(5)).size == 5);
  CHECK(labeling_space(parse_pd(kFigureEight), MetacyclicGroup::dihedral(3)).size == 3);
  CHECK(oracle::brute_labelings(parse_pd(kTrefoil), 3, -1) == 9);
  CHECK(oracle::brute_labelings(parse_pd(kFigureEight), 5, -1) == 25);
}

TEST_CASE("labeling counts agree with brute force") {
  std::vector<Diagram> ds{parse_pd(kTrefoil), parse_pd(kFigureEight),
                          connected_sum(parse_pd(kTrefoil), parse_pd(kTrefoil)),
                          connected_sum(parse_pd(kTrefoil), parse_pd(kFigureEight))};
  std::vector<MetacyclicGroup> gs{MetacyclicGroup::dihedral(3), MetacyclicGroup::dihedral(5),
                                  MetacyclicGroup::dihedral(9), {3, 7, 2}, {6, 7, 3}, {2, 15, -1}};
  for (const auto& d : ds)
    for (const auto& g : gs) {
      if (std::pow(static_cast<double>(g.n), static_cast<double>(d.arcs)) > 2e6) continue;
      CAPTURE(g.n);
      CHECK(labeling_space(d, g).size == oracle::brute_labelings(d, g.n, g.q));
    }
}

TEST_CASE("labeling counts survive Reidemeister I rewrites") {
  for (const char* code : {kTrefoil, kFigureEight}) {
    Diagram d = parse_pd(code);
    for (const auto& g : {MetacyclicGroup::dihedral(3), MetacyclicGroup::dihedral(5), MetacyclicGroup{3, 7, 2}}) {
      Int base = labeling_space(d, g).size;
      for (std::size_t x = 0; x < d.arcs; ++x)
        for (int sign : {1, -1}) {
          Diagram k = add_kink(d, x, sign);
          CHECK_NOTHROW(validate_diagram(k));
          CHECK(k.arcs == d.arcs + 1);
          CHECK(labeling_space(k, g).size == base);
        }
    }
  }
}

TEST_CASE("labelings modulo translation") {
  LabelingSpace t = labeling_space(parse_pd(kTrefoil), MetacyclicGroup::dihedral(3));
  CHECK(t.mod_translation == std::vector<i64>{3});
  CHECK(t.classes_up_to_scaling == 1);
  Diagram tt = connected_sum(parse_pd(kTrefoil), parse_pd(kTrefoil));
  CHECK(classify_characters(tt, MetacyclicGroup::dihedral(3)) == std::vector<i64>{3, 3});
  CHECK(labeling_space(tt, MetacyclicGroup::dihedral(3)).size == 27);
  CHECK_THROWS(classify_characters(tt, MetacyclicGroup::dihedral(15)));
}

TEST_CASE("group validation") {
  CHECK_THROWS((MetacyclicGroup{3, 7, 3}.validate()));  // 3^3 != 1 mod 7
  CHECK_NOTHROW((MetacyclicGroup{3, 7, 2}.validate()));
}
