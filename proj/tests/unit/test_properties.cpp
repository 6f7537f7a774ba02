#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

class Invariant : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Invariant, HoldsOnRandomFixtures) {
  const auto suite = props::invariant_suite();
  const auto& [name, check] = suite.at(GetParam());
  const auto result = check(250, 0xC0FFEE + GetParam());
  EXPECT_TRUE(result.ok()) << name << ": " << result.failures << " failing case(s); " << result.first_failure;
}

INSTANTIATE_TEST_SUITE_P(Suite, Invariant, ::testing::Range<std::size_t>(0, props::invariant_suite().size()),
                         [](const auto& info) {
                           std::string label = props::invariant_suite()[info.param].first;
                           for (auto& ch : label) {
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           }
                           return label;
                         });

}  // namespace
