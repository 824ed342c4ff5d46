#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wa {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

// Randomised law checks, each seeded from `seed` and its own name so that a
// battery's cases do not depend on which others run.
std::vector<PropertyResult> run_properties(std::uint64_t seed, std::size_t cases = 200);

std::vector<std::string> property_names();
PropertyResult run_property(const std::string& name, std::uint64_t seed, std::size_t cases = 200);

}  // namespace wa
