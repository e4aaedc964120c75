#include <gtest/gtest.h>

#include <forestbound/errors.hpp>
#include <forestbound/verify.hpp>

using namespace forestbound;

namespace {

VerifyOptions quick() {
  VerifyOptions o;
  o.samples = 3;
  o.max_vertices = 10;
  return o;
}

}  // namespace

TEST(Report, ExitStatus) {
  VerificationReport r("x");
  EXPECT_EQ(r.exit_status(), 0);
  r.check("a", "in", true);
  EXPECT_EQ(r.exit_status(), 0);
  r.add({"c", "in", "", "", CheckStatus::kCritical, "", nullptr});
  EXPECT_EQ(r.exit_status(), 4);
  r.check("b", "in", false);
  EXPECT_EQ(r.exit_status(), 1);
  EXPECT_EQ(r.passed(), 1u);
  EXPECT_EQ(r.failed(), 1u);
  EXPECT_EQ(r.critical(), 1u);
  const auto j = r.to_json();
  EXPECT_EQ(j["suite"], "x");
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(j["checks"].size(), 3u);
}

TEST(Verify, EverySuitePasses) {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, quick());
    EXPECT_GT(r.count(CheckStatus::kPass), 0u) << name;
    EXPECT_EQ(r.failed(), 0u) << name;
    EXPECT_EQ(r.critical(), 0u) << name;
    for (const auto& c : r.checks())
      if (c.status != CheckStatus::kPass) ADD_FAILURE() << name << ": " << c.claim << " " << c.inputs;
  }
  EXPECT_THROW(run_suite("nope", quick()), InputError);
}

TEST(Verify, DeterministicForFixedSeed) {
  auto strip = [](nlohmann::json j) {
    j.erase("duration_seconds");
    return j.dump();
  };
  EXPECT_EQ(strip(run_suite("identities", quick()).to_json()), strip(run_suite("identities", quick()).to_json()));
  VerifyOptions other = quick();
  other.seed = 1;
  EXPECT_NE(strip(run_suite("identities", quick()).to_json()), strip(run_suite("identities", other).to_json()));
}

TEST(Verify, HeilmannLiebCover) {
  EXPECT_EQ(heilmann_lieb_cover(3), BigRational(2829, 1000));
  EXPECT_EQ(heilmann_lieb_cover(2), BigRational(2));
  EXPECT_EQ(heilmann_lieb_cover(5), BigRational(4));
}

TEST(Verify, SignificantAgreement) {
  EXPECT_TRUE(agrees_to_significant(BigReal::exact(BigRational(27, 7)), "3.85714285714286", 12));
  EXPECT_FALSE(agrees_to_significant(BigReal::exact(BigRational(27, 7)), "3.85714385714286", 12));
}
