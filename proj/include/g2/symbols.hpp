#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "g2/errors.hpp"

namespace g2 {

// The fixed variable namespace shared by every polynomial in the library.
// a,b        torus coordinates
// x10..x32   coordinates on the positive root spaces (x_{ij} <-> i*alpha+j*beta)
// y10..y32   coordinates on the negative root spaces
// s          complex-parameter stand-in for exponent bookkeeping
// t          scaling / torus-element parameter
// x          generic unipotent parameter
// y10p..y32q primed and double-primed copies of the y-block, used when a law
//            needs two or three independent points of the opposite unipotent
enum class Sym : uint8_t {
  a, b,
  x01, x10, x11, x21, x31, x32,
  y01, y10, y11, y21, y31, y32,
  s, t, x,
  y10p, y11p, y21p, y31p, y32p,
  y10q, y11q, y21q, y31q, y32q,
};

inline constexpr int kNumSyms = 27;

inline constexpr std::array<std::string_view, kNumSyms> kSymNames = {
    "a", "b",
    "x01", "x10", "x11", "x21", "x31", "x32",
    "y01", "y10", "y11", "y21", "y31", "y32",
    "s", "t", "x",
    "y10p", "y11p", "y21p", "y31p", "y32p",
    "y10q", "y11q", "y21q", "y31q", "y32q",
};

inline constexpr std::array<std::string_view, kNumSyms> kSymLatex = {
    "a", "b",
    "x_{01}", "x_{10}", "x_{11}", "x_{21}", "x_{31}", "x_{32}",
    "y_{01}", "y_{10}", "y_{11}", "y_{21}", "y_{31}", "y_{32}",
    "s", "t", "x",
    "y_{10}'", "y_{11}'", "y_{21}'", "y_{31}'", "y_{32}'",
    "y_{10}''", "y_{11}''", "y_{21}''", "y_{31}''", "y_{32}''",
};

inline constexpr int sym_index(Sym v) { return static_cast<int>(v); }

inline std::string_view sym_name(Sym v) { return kSymNames[sym_index(v)]; }
inline std::string_view sym_latex(Sym v) { return kSymLatex[sym_index(v)]; }

inline Sym sym_named(std::string_view name) {
  for (int i = 0; i < kNumSyms; ++i)
    if (kSymNames[i] == name) return static_cast<Sym>(i);
  throw input_error("unknown symbol: " + std::string(name));
}

}  // namespace g2
