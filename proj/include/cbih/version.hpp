#pragma once

namespace cbih {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cbih
