#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace recipart {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Thrown when a computation would exceed a configured memory or
/// enumeration ceiling. Callers are expected to fall back to targeted
/// searches or raise the ceiling explicitly.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace recipart
