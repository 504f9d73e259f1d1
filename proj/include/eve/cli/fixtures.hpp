#pragma once

#include <span>
#include <string_view>

#include "eve/confusion.hpp"

namespace eve::cli {

/// A bundled reference matrix, kept as the decimal text it was published
/// with. Columns are true classes.
struct Fixture {
  std::string_view id;
  std::string_view description;
  std::string_view csv;
};

std::span<const Fixture> fixtures();

/// Parses the fixture with the given id ("Ma", "Mb", "Mc", "M1" ... "M9").
/// Throws std::out_of_range for an unknown id.
ConfusionMatrix fixture(std::string_view id);

}  // namespace eve::cli
