#include "latstick/errors.hpp"

#include "latstick/rational.hpp"

namespace latstick {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownBindingPoint: return "UnknownBindingPoint";
    case ErrorCode::UnlabeledEndpoint: return "UnlabeledEndpoint";
    case ErrorCode::NoValidRoot: return "NoValidRoot";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidCounts: return "InvalidCounts";
    case ErrorCode::AssemblyCollision: return "AssemblyCollision";
    case ErrorCode::NoFreeDirection: return "NoFreeDirection";
    case ErrorCode::MergeCollision: return "MergeCollision";
    case ErrorCode::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x() << ", " << p.y() << ", " << p.z() << ')';
}

std::ostream& operator<<(std::ostream& os, const Direction& d) {
  return os << (d.sign > 0 ? '+' : '-') << axis_name(d.axis);
}

}  // namespace latstick
