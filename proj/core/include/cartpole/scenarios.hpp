#pragma once

#include <span>
#include <string_view>

#include "cartpole/simulate.hpp"

namespace cartpole {

// Named experiment presets: the manual-tuning progression (fig2..fig4), the
// optimized controllers (fig5, fig7), and the shallower-start check (fig6).
struct Scenario {
  std::string_view name;
  std::string_view description;
  SimConfig config;
};

std::span<const Scenario> scenarios();

// nullptr when the name is unknown.
const Scenario* find_scenario(std::string_view name);

}  // namespace cartpole
