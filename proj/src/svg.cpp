#include "radon/svg.hpp"

#include <algorithm>
#include <sstream>

#include "radon/errors.hpp"

namespace radon {

namespace {

constexpr int kSize = 640;
constexpr int kMargin = 60;

struct Mapper {
  double x0, x1, y0, y1;
  double px(double x) const {
    return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin);
  }
  double py(double y) const {
    return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin);
  }
};

void header(std::ostringstream& os) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
     << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void frame(std::ostringstream& os, const Mapper& m, const std::string& xlab,
           const std::string& ylab) {
  os << "<rect x=\"" << m.px(m.x0) << "\" y=\"" << m.py(m.y1) << "\" width=\""
     << m.px(m.x1) - m.px(m.x0) << "\" height=\"" << m.py(m.y0) - m.py(m.y1)
     << "\" fill=\"none\" stroke=\"#888\"/>\n";
  os << "<text x=\"" << kSize / 2 << "\" y=\"" << kSize - 15
     << "\" text-anchor=\"middle\" font-size=\"16\">" << xlab << "</text>\n";
  os << "<text x=\"18\" y=\"" << kSize / 2 << "\" text-anchor=\"middle\" font-size=\"16\" "
     << "transform=\"rotate(-90 18 " << kSize / 2 << ")\">" << ylab << "</text>\n";
}

std::string frac_label(const Rat& x, const Rat& y) {
  return "(" + rat_str(x) + ", " + rat_str(y) + ")";
}

}  // namespace

std::string svg_region2(const Region2& r) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  header(os);
  Mapper m{0.0, 1.0, 0.0, 1.0};
  // widen the frame when the region sticks out of the unit square (s < 0)
  for (const auto& [x, y] : r.vertices) {
    m.y0 = std::min(m.y0, rat_double(y));
    m.y1 = std::max(m.y1, rat_double(y));
  }
  frame(os, m, "1/p", r.name == "B" || r.name == "A" || r.name == "D" ? "s" : "1/q");
  os << "<polygon points=\"";
  for (const auto& [x, y] : r.vertices) os << m.px(rat_double(x)) << "," << m.py(rat_double(y)) << " ";
  os << "\" fill=\"#9ecae1\" fill-opacity=\"0.55\" stroke=\"#3182bd\" stroke-width=\"2\"/>\n";
  for (const auto& [x, y] : r.vertices) {
    os << "<circle cx=\"" << m.px(rat_double(x)) << "\" cy=\"" << m.py(rat_double(y))
       << "\" r=\"3\" fill=\"#08519c\"/>\n";
    os << "<text x=\"" << m.px(rat_double(x)) + 6 << "\" y=\"" << m.py(rat_double(y)) - 6
       << "\" font-size=\"13\">" << frac_label(x, y) << "</text>\n";
  }
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 20 << "\" font-size=\"18\">"
     << r.name << " (" << r.theorem << ")</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string svg_family_slice(const RegionFamily& f, char axis, const Rat& value) {
  auto segs = axis == 'z' ? slice_family_z(f, value) : slice_family_x(f, value);
  if (segs.empty()) throw input_error("empty slice");
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  header(os);
  Mapper m{0.0, 1.0, 0.0, 1.0};
  for (const auto& s : segs)
    for (const auto& [a, b] : s) {
      m.x0 = std::min(m.x0, rat_double(a));
      m.x1 = std::max(m.x1, rat_double(a));
      m.y0 = std::min(m.y0, rat_double(b));
      m.y1 = std::max(m.y1, rat_double(b));
    }
  frame(os, m, axis == 'z' ? "1/p" : "1/q", axis == 'z' ? "1/q" : "s");
  const char* colors[3] = {"#e6550d", "#31a354", "#756bb1"};
  for (size_t i = 0; i < segs.size(); ++i) {
    const auto& [p, q] = std::pair{segs[i][0], segs[i][1]};
    os << "<line x1=\"" << m.px(rat_double(p.first)) << "\" y1=\"" << m.py(rat_double(p.second))
       << "\" x2=\"" << m.px(rat_double(q.first)) << "\" y2=\"" << m.py(rat_double(q.second))
       << "\" stroke=\"" << colors[i % 3] << "\" stroke-width=\"3\"/>\n";
    const std::string label = segs.size() == f.triangles.size()
                                  ? f.triangles[i].name
                                  : "trace " + std::to_string(i + 1);
    os << "<text x=\"" << m.px(rat_double(p.first)) + 5 << "\" y=\""
       << m.py(rat_double(p.second)) - 5 << "\" font-size=\"13\">" << label << "</text>\n";
  }
  os << "<text x=\"" << kMargin << "\" y=\"" << kMargin - 20 << "\" font-size=\"18\">"
     << f.family << " slice " << axis << " = " << rat_str(value) << " (" << f.theorem
     << ")</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace radon
