#pragma once

#include <stdexcept>
#include <string>

namespace halfshift {

// Lie family of the ambient split real group. B and C share the same Weyl
// group (signed permutations of n letters); D acts on n+1 letters with an
// even number of sign changes. The families differ at the level of roots.
enum class Family { B, C, D };

// Number of letters moved by the Weyl group: n for B/C, n+1 for D.
// Simple reflections are indexed 0 .. letters(f,n)-1 in every family.
inline int letters(Family f, int n) { return f == Family::D ? n + 1 : n; }

inline char family_char(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

inline Family family_from_string(const std::string& s) {
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unknown family: " + s);
}

}  // namespace halfshift
