#pragma once

#include <string_view>

namespace dt {

// Contents of data/<name>.json, embedded at build time.
std::string_view fixture(std::string_view name);

} // namespace dt
