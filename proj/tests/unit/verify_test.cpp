#include <gtest/gtest.h>

#include "zk/errors.hpp"
#include "zk/verify.hpp"

namespace zk {
namespace {

ScanOptions opts() {
  ScanOptions o;
  o.workers = 2;
  o.chunk = 1000;
  return o;
}

TEST(Properties, SmallBoundsPass) {
  EXPECT_TRUE(check_lemma1().pass());
  EXPECT_TRUE(check_practical(5000, opts()).pass());
  EXPECT_TRUE(check_quasi_practical(3000, opts()).pass());
  EXPECT_TRUE(check_oracle(600, opts()).pass());
  EXPECT_TRUE(check_practical_lift(60, 20, 2, {}).pass());
  EXPECT_TRUE(check_nonzumkeller_base(60, 20, {}).pass());
  EXPECT_TRUE(check_multiplyz(60).pass());
  EXPECT_TRUE(check_prefilter(20000, opts()).pass());
  EXPECT_TRUE(check_odd_signature(20000, opts()).pass());
  EXPECT_TRUE(check_constructions(10, 1).pass());
  EXPECT_TRUE(check_conjecture2(20000, opts()).pass());
}

TEST(Properties, Dispatch) {
  const auto names = property_names();
  EXPECT_EQ(names.size(), 11U);
  PropertyOptions o;
  o.to = 500;
  o.scan = opts();
  const auto r = run_property("oracle", o);
  EXPECT_EQ(r.name, "oracle");
  EXPECT_EQ(r.checked, 500U);
  EXPECT_THROW(run_property("nope", o), DomainError);
}

TEST(Properties, ConjectureCap) {
  PropertyOptions o;
  o.to = 2'000'000;
  EXPECT_THROW(run_property("conjecture2", o), DomainError);
}

}  // namespace
}  // namespace zk
