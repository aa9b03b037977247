#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace haggelab {

enum class errc {
  // numeric
  division_by_zero,
  mixed_backend,
  negative_argument,
  irrational_in_rational_backend,
  parse_error,
  // geom
  coincident_points,
  parallel_lines,
  coincident_lines,
  point_not_on_circle,
  point_not_on_line,
  collinear_points,
  duplicate_points,
  degenerate_configuration,
  parabolic_conic,
  concentric_circles,
  collinear_centers,
  point_not_on_circumcircle,
  degenerate_triangle,
  // centers
  equilateral_euler_line,
  on_sideline,
  on_circumcircle,
  rational_backend_unsupported,
  // hagge
  p_on_circumcircle,
  p_on_sideline,
  // speckman
  ratio_one,
  degenerate_pair,
  invalid_ratio,
  not_perspective,
  parallel_perspective,
  parallel_sides,
  not_indirectly_similar,
  not_orthologic,
  not_paralogic,
  no_real_second_intersection,
  degenerate_parameters,
  // harness
  syntax_error,
  unknown_name,
  arity_error,
  use_before_def,
  type_error,
  redefinition,
  empty_draw_list,
};

/// Stable external name of an error kind, as written into reports.
constexpr std::string_view error_name(errc e) noexcept {
  switch (e) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_backend: return "MixedBackend";
    case errc::negative_argument: return "NegativeArgument";
    case errc::irrational_in_rational_backend: return "IrrationalInRationalBackend";
    case errc::parse_error: return "ParseError";
    case errc::coincident_points: return "CoincidentPoints";
    case errc::parallel_lines: return "ParallelLines";
    case errc::coincident_lines: return "CoincidentLines";
    case errc::point_not_on_circle: return "PointNotOnCircle";
    case errc::point_not_on_line: return "PointNotOnLine";
    case errc::collinear_points: return "CollinearPoints";
    case errc::duplicate_points: return "DuplicatePoints";
    case errc::degenerate_configuration: return "DegenerateConfiguration";
    case errc::parabolic_conic: return "ParabolicConic";
    case errc::concentric_circles: return "ConcentricCircles";
    case errc::collinear_centers: return "CollinearCenters";
    case errc::point_not_on_circumcircle: return "PointNotOnCircumcircle";
    case errc::degenerate_triangle: return "DegenerateTriangle";
    case errc::equilateral_euler_line: return "EquilateralEulerLine";
    case errc::on_sideline: return "OnSideline";
    case errc::on_circumcircle: return "OnCircumcircle";
    case errc::rational_backend_unsupported: return "RationalBackendUnsupported";
    case errc::p_on_circumcircle: return "POnCircumcircle";
    case errc::p_on_sideline: return "POnSideline";
    case errc::ratio_one: return "RatioOne";
    case errc::degenerate_pair: return "DegeneratePair";
    case errc::invalid_ratio: return "InvalidRatio";
    case errc::not_perspective: return "NotPerspective";
    case errc::parallel_perspective: return "ParallelPerspective";
    case errc::parallel_sides: return "ParallelSides";
    case errc::not_indirectly_similar: return "NotIndirectlySimilar";
    case errc::not_orthologic: return "NotOrthologic";
    case errc::not_paralogic: return "NotParalogic";
    case errc::no_real_second_intersection: return "NoRealSecondIntersection";
    case errc::degenerate_parameters: return "DegenerateParameters";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_name: return "UnknownName";
    case errc::arity_error: return "ArityError";
    case errc::use_before_def: return "UseBeforeDef";
    case errc::type_error: return "TypeError";
    case errc::redefinition: return "Redefinition";
    case errc::empty_draw_list: return "EmptyDrawList";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  explicit error(errc code) : std::runtime_error(std::string(error_name(code))), code_(code) {}

  errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  errc code_;
};

}  // namespace haggelab
