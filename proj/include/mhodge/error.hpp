#pragma once

#include <stdexcept>
#include <string>

namespace mhodge {

enum class Errc {
  axiom_violation_i,
  axiom_violation_ii,
  exchange_violation,
  circuit_violation,
  not_prime,
  bad_parameters,
  index_out_of_range,
  nonzero_remainder,
  has_loops,
  invalid_filter,
  not_top_degree,
  not_ample,
  not_maximal_flat,
  relation_not_preserved,
  cone_not_in_fan,
  not_unimodular,
  too_large,
  parse_error,
  internal,
};

// Single exception type for the whole library; `code` tells callers what
// went wrong, `what()` carries a witness where one exists.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// Internal consistency checks; these guard invariants that should be
// unbreakable and stay active in release builds.
#define MHODGE_CHECK(cond, msg)                                  \
  do {                                                           \
    if (!(cond)) ::mhodge::fail(::mhodge::Errc::internal, msg);  \
  } while (0)

}  // namespace mhodge
