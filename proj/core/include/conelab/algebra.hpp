#pragma once

#include <stdexcept>
#include <string>

namespace conelab {

// The four Euclidean Hurwitz algebras.
enum class Algebra : int { R = 0, C = 1, H = 2, O = 3 };

constexpr int algebra_dim(Algebra a) {
  switch (a) {
    case Algebra::R: return 1;
    case Algebra::C: return 2;
    case Algebra::H: return 4;
    case Algebra::O: return 8;
  }
  return 0;
}

constexpr bool is_associative(Algebra a) { return a != Algebra::O; }

inline const char* algebra_name(Algebra a) {
  switch (a) {
    case Algebra::R: return "R";
    case Algebra::C: return "C";
    case Algebra::H: return "H";
    case Algebra::O: return "O";
  }
  return "?";
}

inline Algebra algebra_from_name(const std::string& s) {
  if (s == "R" || s == "r") return Algebra::R;
  if (s == "C" || s == "c") return Algebra::C;
  if (s == "H" || s == "h") return Algebra::H;
  if (s == "O" || s == "o") return Algebra::O;
  throw std::invalid_argument("unknown algebra tag: " + s);
}

}  // namespace conelab
