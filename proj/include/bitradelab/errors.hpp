#pragma once

#include <stdexcept>
#include <string>

namespace btl {

enum class ErrorKind {
  parse_error,
  duplicate_edge_use,
  unmatched_edge,
  malformed_gluing,
  disconnected,
  not_surface,
  not_sphere,
  not_three_coloured,
  not_square,
  dimension_mismatch,
  group_mismatch,
  not_finite,
  no_free_factor,
  too_large,
  not_pls,
  not_disjoint,
  missing_mate,
  non_unique_mate,
  internal_invariant_violation,
  invalid_params,
  unknown_fixture,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::duplicate_edge_use: return "DuplicateEdgeUse";
    case ErrorKind::unmatched_edge: return "UnmatchedEdge";
    case ErrorKind::malformed_gluing: return "MalformedGluing";
    case ErrorKind::disconnected: return "Disconnected";
    case ErrorKind::not_surface: return "NotSurface";
    case ErrorKind::not_sphere: return "NotSphere";
    case ErrorKind::not_three_coloured: return "NotThreeColoured";
    case ErrorKind::not_square: return "NotSquare";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::group_mismatch: return "GroupMismatch";
    case ErrorKind::not_finite: return "NotFinite";
    case ErrorKind::no_free_factor: return "NoFreeFactor";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::not_pls: return "NotPLS";
    case ErrorKind::not_disjoint: return "NotDisjoint";
    case ErrorKind::missing_mate: return "MissingMate";
    case ErrorKind::non_unique_mate: return "NonUniqueMate";
    case ErrorKind::internal_invariant_violation: return "InternalInvariantViolation";
    case ErrorKind::invalid_params: return "InvalidParams";
    case ErrorKind::unknown_fixture: return "UnknownFixture";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace btl
