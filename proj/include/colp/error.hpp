#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace colp {

// Malformed input: bad JSON, invalid poset, map outside the alphabet...
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable size cap was exceeded. Carries the guard name.
class GuardError : public std::runtime_error {
 public:
  GuardError(std::string guard, std::size_t limit)
      : std::runtime_error("guard '" + guard + "' exceeded (limit " + std::to_string(limit) + ")"),
        guard_(std::move(guard)),
        limit_(limit) {}

  const std::string& guard() const noexcept { return guard_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string guard_;
  std::size_t limit_;
};

// An internal certificate failed. Always indicates a bug or a false claim.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size caps used throughout the library. Every cap has a name so the CLI can
// override it with `--guard name=value`.
struct Guards {
  std::size_t poset_elements = 64;
  std::size_t hom_maps = 100000;
  std::size_t basis = 100000;
  std::size_t chains = 100000;
  std::size_t hilbert_inclusion_exclusion = 20;
  std::size_t hilbert_generators = 5000;
  std::size_t taylor_generators = 22;
  std::size_t koszul_vertices = 24;
  std::size_t faces = 100000;
  std::size_t bijection_variables = 10;
  std::size_t strands = 200000;

  // Sets a guard by name; throws InputError on an unknown name.
  void set(const std::string& name, std::size_t value);
  std::map<std::string, std::size_t> as_map() const;
};

inline const Guards& default_guards() {
  static const Guards g{};
  return g;
}

inline void check_guard(bool ok, const char* name, std::size_t limit) {
  if (!ok) throw GuardError(name, limit);
}

inline void verify(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

}  // namespace colp
