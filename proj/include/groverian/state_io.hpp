#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "groverian/state.hpp"

namespace groverian {

/// {"n": <int>, "amplitudes": [[re, im], ...]} in basis-index order.
/// With `normalize`, a non-unit vector is rescaled instead of rejected.
PureState parse_state(std::string_view text, bool normalize = false);
PureState read_state_file(const std::filesystem::path& path, bool normalize = false);

/// Doubles are written with 17 significant digits.
std::string format_state(const PureState& state);
void write_state_file(const std::filesystem::path& path, const PureState& state);

}  // namespace groverian
