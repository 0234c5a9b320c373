#pragma once

#include <cstdint>
#include <string>

#include "widgetforge/dsl.hpp"

namespace wf::test {

// Seeded random widget document covering every component kind across seeds.
// Every generated document validates without errors.
std::string random_spec_json(std::uint64_t seed);
dsl::WidgetSpec random_spec(std::uint64_t seed);

} // namespace wf::test
