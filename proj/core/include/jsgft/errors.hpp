#pragma once

#include <stdexcept>
#include <string>

namespace jsgft {

enum class Errc {
  singular_matrix,
  dimension_mismatch,
  zero_spectral_radius,
  irrational_spectrum,
  bad_supplied_spectrum,
  not_an_eigenvalue,
  chain_defect,
  unknown_subspace,
  unknown_eigenvalue,
  parse_error,
  inconsistent_dimensions,
  unknown_node,
  zero_signal,
  numerical_conformance,
  io_error,
  invalid_config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

// Process exit codes used by the CLI: 0 success, 2 parse error,
// 3 numerical-conformance failure, 4 spectrum error.
int exit_code_for(Errc c);

}  // namespace jsgft
