#pragma once

#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "convoscale/textprep.hpp"

namespace convoscale {

/// Profiles compiled once for bulk cleaning. Rules run in profile order.
class TextCleaner {
 public:
  explicit TextCleaner(const std::vector<CleanProfile>& profiles);

  std::string operator()(std::string_view text) const;

 private:
  struct Compiled {
    std::regex pattern;
    std::string replacement;
  };
  std::vector<Compiled> rules_;
};

}  // namespace convoscale
