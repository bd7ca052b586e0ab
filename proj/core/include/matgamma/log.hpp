#pragma once

#include <functional>
#include <string_view>

namespace matgamma {

// Non-fatal numerical warnings (e.g. an ill-conditioned inversion). The
// default handler writes one line to stderr; pass an empty function to mute.
using WarningHandler = std::function<void(std::string_view)>;

void set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace matgamma
