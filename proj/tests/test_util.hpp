#pragma once

#include <doctest.h>

#include "foolset/error.hpp"

// Code of the foolset::Error thrown by fn; fails the test if none is thrown.
template <class Fn>
foolset::Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const foolset::Error& e) {
    return e.code();
  }
  FAIL("expected foolset::Error");
  return foolset::Errc::Parse;
}
