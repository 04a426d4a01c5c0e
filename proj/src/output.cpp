#include "digm/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace digm {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_snapshot_csv(std::ostream& out, const NodalVectorField& x,
                        const NodalScalarField& w) {
  if (!x.mesh().same_nodes_as(w.mesh())) {
    throw std::invalid_argument("snapshot fields live on different meshes");
  }
  out << "rho,x0,x1,w\n";
  for (int j = 0; j < x.node_count(); ++j) {
    out << format_double(x.mesh().node(j)) << ',' << format_double(x[j].x) << ','
        << format_double(x[j].y) << ',' << format_double(w[j]) << '\n';
  }
}

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr double kMargin = 48.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#17becf", "#8c564b", "#7f7f7f"};
constexpr int kPaletteSize = 8;

struct Box {
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;

  void grow(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  void pad() {
    const double dx = std::max(xmax - xmin, 1e-9), dy = std::max(ymax - ymin, 1e-9);
    xmin -= 0.05 * dx; xmax += 0.05 * dx;
    ymin -= 0.05 * dy; ymax += 0.05 * dy;
  }
};

// Data coordinates -> SVG pixel coordinates (y axis flipped).
struct Projection {
  Box box;
  double px(double x) const {
    return kMargin + (x - box.xmin) / (box.xmax - box.xmin) * (kWidth - 2 * kMargin);
  }
  double py(double y) const {
    return kHeight - kMargin - (y - box.ymin) / (box.ymax - box.ymin) * (kHeight - 2 * kMargin);
  }
};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void open_svg(std::ostream& out, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\" stroke=\"none\"/>\n"
      << "<text x=\"" << kMargin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
      << title << "</text>\n";
}

void legend(std::ostream& out, const std::vector<Snapshot>& snapshots) {
  for (std::size_t k = 0; k < snapshots.size(); ++k) {
    char label[64];
    std::snprintf(label, sizeof label, "t = %g", snapshots[k].time);
    const double y = 40.0 + 16.0 * k;
    out << "<text x=\"" << kWidth - 120 << "\" y=\"" << coord(y)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
        << kPalette[k % kPaletteSize] << "\">" << label << "</text>\n";
  }
}

void polyline(std::ostream& out, const std::vector<Vec2>& pts, const Projection& proj,
              const char* color) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << coord(proj.px(pts[i].x)) << ',' << coord(proj.py(pts[i].y));
  }
  out << "\"/>\n";
}

void wall_path(std::ostream& out, const std::vector<Vec2>& pts, const Projection& proj) {
  out << "<path fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out << (i == 0 ? 'M' : 'L') << coord(proj.px(pts[i].x)) << ' ' << coord(proj.py(pts[i].y));
  }
  out << "\"/>\n";
}

}  // namespace

void write_interface_svg(std::ostream& out, const std::vector<Snapshot>& snapshots,
                         const WallSampler& walls) {
  if (snapshots.empty()) throw std::invalid_argument("interface figure needs snapshots");

  Box box{snapshots[0].curve[0].x, snapshots[0].curve[0].x, snapshots[0].curve[0].y,
          snapshots[0].curve[0].y};
  for (const Snapshot& snap : snapshots) {
    for (const Vec2 p : snap.curve.values()) box.grow(p.x, p.y);
  }
  box.pad();

  std::vector<std::vector<Vec2>> wall_lines;
  if (walls) {
    wall_lines = walls(box.xmin, box.xmax, box.ymin, box.ymax);
    for (const auto& line : wall_lines) {
      for (const Vec2 p : line) box.grow(p.x, p.y);
    }
  }

  const Projection proj{box};
  open_svg(out, "interface positions");
  for (const auto& line : wall_lines) wall_path(out, line, proj);
  for (std::size_t k = 0; k < snapshots.size(); ++k) {
    polyline(out, snapshots[k].curve.values(), proj, kPalette[k % kPaletteSize]);
  }
  legend(out, snapshots);
  out << "</svg>\n";
}

void write_solute_svg(std::ostream& out, const std::vector<Snapshot>& snapshots) {
  if (snapshots.empty()) throw std::invalid_argument("solute figure needs snapshots");

  Box box{0.0, 1.0, snapshots[0].solute[0], snapshots[0].solute[0]};
  for (const Snapshot& snap : snapshots) {
    for (int j = 0; j < snap.solute.node_count(); ++j) {
      box.grow(snap.solute.mesh().node(j), snap.solute[j]);
    }
  }
  box.pad();

  const Projection proj{box};
  open_svg(out, "solute profiles over the reference coordinate");
  for (std::size_t k = 0; k < snapshots.size(); ++k) {
    const Snapshot& snap = snapshots[k];
    std::vector<Vec2> pts(snap.solute.node_count());
    for (int j = 0; j < snap.solute.node_count(); ++j) {
      pts[j] = {snap.solute.mesh().node(j), snap.solute[j]};
    }
    polyline(out, pts, proj, kPalette[k % kPaletteSize]);
  }
  legend(out, snapshots);
  out << "</svg>\n";
}

}  // namespace digm
