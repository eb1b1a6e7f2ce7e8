#pragma once

#include <stdexcept>
#include <string>

namespace hls {

// Process-level failure categories. The CLI maps these 1:1 onto exit codes;
// library callers can catch hls::error and inspect the category.
enum class errc : int {
  usage = 1,       // bad invocation / unknown catalog name / bad parameters
  parse = 2,       // malformed or inconsistent input document
  validation = 3,  // axioms or MAGSA requirements fail on well-formed input
  not_split = 4,   // valid algebra, but no split root-space decomposition
  internal = 5,    // proven invariant violated: always a bug, never bad input
};

class error : public std::runtime_error {
 public:
  error(errc category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  errc category() const { return category_; }
  int exit_code() const { return static_cast<int>(category_); }

 private:
  errc category_;
};

inline const char* category_name(errc c) {
  switch (c) {
    case errc::usage: return "usage";
    case errc::parse: return "parse";
    case errc::validation: return "validation";
    case errc::not_split: return "not_split";
    case errc::internal: return "internal";
  }
  return "unknown";
}

// Throws errc::internal. Used wherever a mathematically guaranteed property
// is re-checked at runtime; tripping one of these is a defect in this
// library, not in the caller's data.
[[noreturn]] inline void internal_failure(const std::string& what) {
  throw error(errc::internal, "internal invariant violated: " + what);
}

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) internal_failure(what);
}

}  // namespace hls
