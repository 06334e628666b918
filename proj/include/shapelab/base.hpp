#pragma once

#include <gmpxx.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shapelab {

// Arbitrary-precision integer used throughout. All arithmetic is exact;
// nothing in this library ever rounds.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int int_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  mpz_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("bad integer literal: " + s);
  return v;
}

// Raised when a validating constructor or checker rejects its input.
// `code` is a stable machine-readable tag; `witness` carries the indices
// (or labels, formatted into the message) that exhibit the failure.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string code, std::string message,
                  std::vector<long> witness = {})
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::vector<long>& witness() const { return witness_; }

 private:
  std::string code_;
  std::vector<long> witness_;
};

// Non-throwing validation outcome. `ok` true means the remaining fields
// are empty; otherwise `code` matches the ValidationError that the
// corresponding throwing validator would raise.
struct ValidationReport {
  bool ok = true;
  std::string code;
  std::string message;
  std::vector<long> witness;

  static ValidationReport pass() { return ValidationReport{}; }
  static ValidationReport fail(std::string code, std::string message,
                               std::vector<long> witness = {}) {
    return ValidationReport{false, std::move(code), std::move(message),
                            std::move(witness)};
  }

  // Escalate a failed report into the exception it describes.
  void require() const {
    if (!ok) throw ValidationError(code, message, witness);
  }
};

namespace detail {

template <class Seq>
std::string join(const Seq& xs, const char* sep = ", ") {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out << sep;
    first = false;
    out << x;
  }
  return out.str();
}

}  // namespace detail

}  // namespace shapelab
