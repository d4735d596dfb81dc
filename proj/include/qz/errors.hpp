#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qz {

/* Tri-state verdict for procedures that may hit a search bound. */
enum class Ternary { yes, no, unknown };

inline const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::yes: return "yes";
    case Ternary::no: return "no";
    default: return "unknown";
  }
}

/* Error with a stable kind tag.  The CLI maps kinds to exit codes:
 * undecidable/search-bound kinds exit 3, everything else exits 2. */
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

  bool undecidable() const {
    return kind_ == "UndecidableAtBound" || kind_ == "SearchExhausted";
  }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace qz
