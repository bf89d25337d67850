#pragma once

#include <stdexcept>
#include <string>

namespace kunzcount {

// Every failure mode of the library maps to one code; callers that want to
// treat a condition as data (e.g. frobenius_divisible => count 0) can catch
// and inspect it.
enum class errc {
  empty_input,
  non_cofinite,
  multiplicity_one,
  invalid_kunz,
  dimension_mismatch,
  bad_multiplicity,
  frobenius_divisible,
  duplicate_cut,
  unbounded,
  resource_limit,
  domain_error,
  overflow,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::empty_input: return "empty_input";
    case errc::non_cofinite: return "non_cofinite";
    case errc::multiplicity_one: return "multiplicity_one";
    case errc::invalid_kunz: return "invalid_kunz";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::bad_multiplicity: return "bad_multiplicity";
    case errc::frobenius_divisible: return "frobenius_divisible";
    case errc::duplicate_cut: return "duplicate_cut";
    case errc::unbounded: return "unbounded";
    case errc::resource_limit: return "resource_limit";
    case errc::domain_error: return "domain_error";
    case errc::overflow: return "overflow";
    case errc::io_error: return "io_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace kunzcount
