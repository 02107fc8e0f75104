#pragma once

#include <cstddef>
#include <string>

#include "braidq/braid.hpp"
#include "braidq/rules.hpp"

namespace braidq {

// Geometry constants for the strand diagrams. Chosen so every coordinate,
// including the under-strand break points at 3/8 and 5/8 of a column, lands
// on an integer; output is byte-deterministic.
namespace svg {
inline constexpr int kColumnWidth = 48;
inline constexpr int kStrandGap = 40;
inline constexpr int kMargin = 16;
}  // namespace svg

namespace detail {

inline void svg_line(std::string& out, int x1, int y1, int x2, int y2) {
  out += "    <line x1=\"" + std::to_string(x1) + "\" y1=\"" +
         std::to_string(y1) + "\" x2=\"" + std::to_string(x2) + "\" y2=\"" +
         std::to_string(y2) + "\"/>\n";
}

}  // namespace detail

// One fixed-width column per letter, left to right: straight segments for
// identity letters, one crossing per generator. The over strand runs
// unbroken; the under strand is split around the intersection, which is what
// tells A from a and B from b. Uppercase letters (and plain `a` on two
// strands) send the upper strand over.
inline std::string render_svg(const BraidWord& word, const RuleSet& rules) {
  using namespace svg;
  const int strands = static_cast<int>(rules.strands());
  const int n = static_cast<int>(word.size());
  const int width = 2 * kMargin + n * kColumnWidth;
  const int height = 2 * kMargin + (strands - 1) * kStrandGap;

  auto strand_y = [](int i) { return kMargin + i * kStrandGap; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "  <g stroke=\"#222222\" stroke-width=\"3\" fill=\"none\" "
         "stroke-linecap=\"round\">\n";

  for (int col = 0; col < n; ++col) {
    const char c = word.text()[static_cast<std::size_t>(col)];
    const int x0 = kMargin + col * kColumnWidth;
    const int x1 = x0 + kColumnWidth;
    out += "  <g class=\"col\" data-letter=\"" + std::string(1, c) + "\">\n";
    if (c == '1') {
      for (int s = 0; s < strands; ++s) {
        detail::svg_line(out, x0, strand_y(s), x1, strand_y(s));
      }
    } else {
      // Upper strand of the crossing: B/b cross strands 2-3; on two strands
      // everything crosses the only pair.
      const int top = (rules.three() && (c == 'B' || c == 'b')) ? 1 : 0;
      // `a` on two strands takes the over role; `b` is its mirror.
      const bool descend_over =
          rules.three() ? (c == 'A' || c == 'B') : (c == 'a');
      for (int s = 0; s < strands; ++s) {
        if (s == top || s == top + 1) continue;
        detail::svg_line(out, x0, strand_y(s), x1, strand_y(s));
      }
      const int ya = strand_y(top);
      const int yb = strand_y(top + 1);
      out += "  <g class=\"crossing\">\n";
      if (descend_over) {
        detail::svg_line(out, x0, ya, x1, yb);  // over, upper-left to lower-right
        detail::svg_line(out, x0, yb, x0 + 3 * kColumnWidth / 8,
                         yb - 3 * kStrandGap / 8);
        detail::svg_line(out, x0 + 5 * kColumnWidth / 8,
                         yb - 5 * kStrandGap / 8, x1, ya);
      } else {
        detail::svg_line(out, x0, yb, x1, ya);  // over, lower-left to upper-right
        detail::svg_line(out, x0, ya, x0 + 3 * kColumnWidth / 8,
                         ya + 3 * kStrandGap / 8);
        detail::svg_line(out, x0 + 5 * kColumnWidth / 8,
                         ya + 5 * kStrandGap / 8, x1, yb);
      }
      out += "  </g>\n";
    }
    out += "  </g>\n";
  }

  out += "  </g>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace braidq
