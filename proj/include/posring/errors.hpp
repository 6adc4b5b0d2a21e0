#pragma once

#include <stdexcept>
#include <string>

namespace posring {

enum class Errc {
  not_divisible,
  all_zero,
  zero_input,
  zero_entry,
  zero_polynomial,
  endpoint_is_root,
  length_mismatch,
  search_space_too_large,
  bad_index,
  too_large,
  invalid_witness,
  invalid_input,
  schema,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace posring
