#include <doctest.h>

#include "projgap/verify.hpp"

using namespace projgap;

TEST_CASE("lemma suite passes and is reproducible") {
  VerifyConfig cfg;
  cfg.suite = Suite::lemmas;
  cfg.seed = 42;
  cfg.cases = 150;
  cfg.n_max = 4;
  const VerifyReport a = run_verify(cfg);
  INFO(a.text());
  CHECK(a.all_passed());
  CHECK(a.text() == run_verify(cfg).text());
  for (const char* name : {"gap-nonnegative", "projection-containment", "complete-compression",
                           "reduce-to-downset", "balanced-compression", "layer-remainder-empty"}) {
    const PropertyResult* r = a.find(name);
    REQUIRE(r != nullptr);
    CHECK(r->passed == 3 * cfg.cases);
  }
}

TEST_CASE("extremal suite passes on small sizes") {
  VerifyConfig cfg;
  cfg.suite = Suite::extremal;
  cfg.n_max = 3;
  cfg.m_max = 8;
  const VerifyReport r = run_verify(cfg);
  INFO(r.text());
  CHECK(r.all_passed());
}

TEST_CASE("a corrupted order is caught") {
  VerifyConfig cfg;
  cfg.suite = Suite::extremal;
  cfg.n_max = 3;
  cfg.m_max = 8;
  // Coordinate sum, then lexicographic: a valid total order on X_n, but not the balanced one.
  cfg.order = [](const Point& x, const Point& y) {
    const auto sx = x.sum(), sy = y.sum();
    return sx != sy ? sx <=> sy : x <=> y;
  };
  const VerifyReport r = run_verify(cfg);
  CHECK_FALSE(r.all_passed());
  REQUIRE(r.find("oracle-min-gap") != nullptr);
  CHECK_FALSE(r.find("oracle-min-gap")->ok());
  CHECK(r.text().find("FAIL oracle-min-gap") != std::string::npos);
}
