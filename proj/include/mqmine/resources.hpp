#pragma once

#include <string_view>

namespace mqmine {

/// Contents of a packaged data file (e.g. "units.catalog"). Throws LoadError
/// for unknown names.
std::string_view resource(std::string_view name);

}  // namespace mqmine
