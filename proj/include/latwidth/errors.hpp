#pragma once

#include <stdexcept>
#include <string>

namespace latwidth {

// Every failure the library can signal. CLI maps all of these to exit code 2
// except where a command semantically returns "property is false" (exit 1).
enum class errc {
  parse_error,
  radicand_mismatch,
  division_by_zero,
  singular_matrix,
  not_rational_direction,
  dimension_too_large,
  degenerate_polytope,
  not_a_simplex,
  vertices_not_in_lattice,
  origin_not_contained,
  origin_not_vertex,
  not_empty_simplex,
  not_on_circle,
  inside_triangle,
  on_or_inside_singular_circle,
  cover_too_large,
  invalid_argument,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace latwidth
