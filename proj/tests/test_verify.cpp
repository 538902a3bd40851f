#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "sforge/io.hpp"
#include "sforge/verify.hpp"

using namespace sforge;

TEST_CASE("the driver verifies the loop-free nakayama case end to end") {
  Field F = Field::prime(5);
  AlgebraPresentation P = oracle::pres_nakayama(F, 2, 3);
  VerifyOptions opt;
  opt.vertex = 0;
  VerificationReport rep = run_verification(P, opt);
  CHECK(rep.period == std::optional<int>(4));
  CHECK(rep.hypothesis == "interior of the projective resolution stays in add Q");
  CHECK(rep.steps == 2);
  REQUIRE(rep.tilting.size() == 2);
  CHECK(rep.tilting[0]);
  CHECK(rep.tilting[1]);
  CHECK(rep.phi_established);
  bool settled = rep.verdict == VerdictKind::Isomorphic ||
                 rep.verdict == VerdictKind::SocleEquivalentAt;
  CHECK(settled);
  CHECK(rep.algebra_id == sha256_hex(presentation_to_json(P)));
  CHECK(rep.rendered.find("verdict:") != std::string::npos);
  CHECK(rep.rendered.find("timings: zeroed") != std::string::npos);

  // the other vertex reaches the same outcome
  opt.vertex = 1;
  VerificationReport rep2 = run_verification(P, opt);
  CHECK(rep2.phi_established);
  CHECK(rep2.verdict == rep.verdict);
}

TEST_CASE("identical runs render identical bytes") {
  Field F = Field::prime(5);
  AlgebraPresentation P = oracle::pres_nakayama(F, 2, 3);
  VerifyOptions opt;
  opt.vertex = 0;
  CHECK(run_verification(P, opt).rendered == run_verification(P, opt).rendered);
}

TEST_CASE("the weighted surface verdicts split across the two loop kinds") {
  AlgebraPresentation P = oracle::pres_wsa123_f5();
  VerifyOptions opt;

  // self-folded vertex: the found isomorphism is stable, so it is the verdict
  opt.vertex = 4;
  VerificationReport rep5 = run_verification(P, opt);
  CHECK(rep5.period == std::optional<int>(4));
  CHECK(rep5.steps == 2);
  CHECK(rep5.phi_established);
  CHECK(rep5.iso.kind == VerdictKind::Isomorphic);
  CHECK(rep5.verdict == VerdictKind::Isomorphic);
  CHECK(rep5.rendered.find("d+ = [eta]") != std::string::npos);

  // border vertex: iso search still lands, but the socle scalar of the loop
  // relation is free to move, so the verdict stays at the certified claim
  opt.vertex = 0;
  VerificationReport rep1 = run_verification(P, opt);
  CHECK(rep1.period == std::optional<int>(4));
  CHECK(rep1.phi_established);
  CHECK(rep1.iso.kind == VerdictKind::Isomorphic);
  CHECK(rep1.verdict == VerdictKind::SocleEquivalentAt);
  CHECK(rep1.rendered.find("verdict: SocleEquivalentAt(1)") != std::string::npos);
  CHECK(rep1.rendered.find("free socle coefficient") != std::string::npos);
}

TEST_CASE("a period below three needs no mutation at all") {
  Field F = Field::prime(5);
  VerifyOptions opt;
  opt.vertex = 0;
  VerificationReport rep = run_verification(oracle::pres_dual_numbers(F), opt);
  CHECK(rep.period == std::optional<int>(1));
  CHECK(rep.steps == 0);
  CHECK(rep.verdict == VerdictKind::Isomorphic);
}

TEST_CASE("vertex range and symmetry guards fire before any work") {
  Field F = Field::prime(5);
  AlgebraPresentation P = oracle::pres_nakayama(F, 2, 3);
  VerifyOptions opt;
  opt.vertex = 7;
  try {
    run_verification(P, opt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "ParseError");
  }
  opt.vertex = 0;
  try {
    run_verification(oracle::pres_nakayama(F, 2, 4), opt);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "NotWeaklySymmetric");
  }
}

TEST_CASE("the cache stores and returns the exact bytes") {
  std::string dir =
      (std::filesystem::temp_directory_path() / "sforge_test_cache").string();
  setenv("SFORGE_CACHE_DIR", dir.c_str(), 1);
  std::string key(64, 'a');
  cache_store(key, "payload\n");
  CHECK(cache_lookup(key) == std::optional<std::string>("payload\n"));
  CHECK(cache_lookup(std::string(64, 'b')) == std::nullopt);
  unsetenv("SFORGE_CACHE_DIR");
  CHECK(cache_lookup(key) == std::nullopt);
  std::filesystem::remove_all(dir);
}
