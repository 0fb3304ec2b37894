#pragma once

#include <optional>

#include "monospec/error.hpp"

namespace testsupport {

/// Kind of the monospec::Error thrown by fn, or nullopt when nothing is thrown.
template <class Fn>
std::optional<monospec::ErrorKind> kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const monospec::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testsupport
