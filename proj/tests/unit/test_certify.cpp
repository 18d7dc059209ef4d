#include "doctest.h"
#include "umtlab/error.hpp"
#include "umtlab/experiments/certify.hpp"

using namespace umtlab;

TEST_CASE("certification needs samples") {
  CertifyConfig cfg;
  cfg.m = 0;
  CHECK_THROWS_AS(certify_plausible_loss_bound(cfg), ParameterError);
}

TEST_CASE("a quick certification run holds the advertised rate") {
  CertifyConfig cfg;
  cfg.seed = 2;
  cfg.n = 4;
  cfg.r = 3;
  cfg.m = 10;
  cfg.trials = 60;
  const CertifyReport report = certify_plausible_loss_bound(cfg);
  CHECK(report.family_size == 24);  // 4!/(4-3)!
  CHECK(report.gamma > 0.0);
  CHECK(report.plausible_members >= 1);
  CHECK(report.trials == 60);
  CHECK(report.pass);
}

TEST_CASE("the report is reproducible") {
  CertifyConfig cfg;
  cfg.seed = 5;
  cfg.n = 4;
  cfg.r = 3;
  cfg.m = 8;
  cfg.trials = 40;
  const CertifyReport a = certify_plausible_loss_bound(cfg);
  const CertifyReport b = certify_plausible_loss_bound(cfg);
  CHECK(a.successes == b.successes);
  CHECK(a.epsilon == b.epsilon);
  CHECK(a.instance_seed == b.instance_seed);
}
