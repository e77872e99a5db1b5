#pragma once

#include <gtest/gtest.h>

#include <functional>

#include "gtsp/error.hpp"

/// Runs `f` and returns the code of the gtsp::Error it throws.
inline gtsp::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const gtsp::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gtsp::Error thrown";
  return gtsp::ErrorCode::Io;
}
