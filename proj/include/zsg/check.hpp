#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace zsg {

// Always-on contract checks (NDEBUG does not disable them).
#define ZSG_CHECK(cond, msg)                                   \
  do {                                                         \
    if (!(cond)) {                                             \
      std::ostringstream oss_;                                 \
      oss_ << "check failed: " << #cond << " — " << msg;       \
      throw std::logic_error(oss_.str());                      \
    }                                                          \
  } while (0)

#define ZSG_FAIL(msg)                          \
  do {                                         \
    std::ostringstream oss_;                   \
    oss_ << msg;                               \
    throw std::logic_error(oss_.str());        \
  } while (0)

}  // namespace zsg
