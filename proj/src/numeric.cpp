#include "torsion/numeric.hpp"

#include "torsion/errors.hpp"

#include <cctype>
#include <limits>

namespace torsion {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::Topology: return "TopologyError";
    case ErrorKind::OddCrossingParity: return "OddCrossingParity";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::NonUnitMismatch: return "NonUnitMismatch";
    case ErrorKind::NotAlgebraicallySplit: return "NotAlgebraicallySplit";
    case ErrorKind::BettiOutOfScope: return "BettiOutOfScope";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NoDualityWitness: return "NoDualityWitness";
    case ErrorKind::ZeroTorsion: return "ZeroTorsion";
    case ErrorKind::BettiMismatch: return "BettiMismatch";
    case ErrorKind::NegativeSquare: return "NegativeSquare";
    case ErrorKind::BadGenus: return "BadGenus";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Consistency: return "ConsistencyFailure";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Integer parse_integer(const std::string& text) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorKind::Syntax, "not an integer literal: '" + text + "'");
  }
  if (text[0] == '+') return Integer(text.substr(1));
  return Integer(text);
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::Syntax, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

long long to_int64(const Integer& value) {
  if (value > std::numeric_limits<long long>::max() ||
      value < std::numeric_limits<long long>::min()) {
    throw Error(ErrorKind::InvalidArgument, "integer out of 64-bit range: " + value.str());
  }
  return value.convert_to<long long>();
}

}  // namespace torsion
