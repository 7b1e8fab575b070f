#include "lozenge/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

namespace lozenge {

namespace {

struct Point {
  double u;
  double v;
};

// Skewed lattice (t, x) to the 60-degree picture: t moves along
// (sqrt(3)/2, -1/2), x along (0, 1), so the diagonal (1, 1) is also a unit
// lattice direction.
Point to_plane(double t, double x) {
  return {t * std::sqrt(3.0) / 2.0, x - t / 2.0};
}

std::vector<std::pair<double, double>> corners(const Lozenge& l) {
  const double t = static_cast<double>(l.t), x = static_cast<double>(l.x);
  switch (l.type) {
    case LozengeType::stay:
      return {{t, x}, {t + 1, x}, {t + 1, x + 1}, {t, x + 1}};
    case LozengeType::jump:
      return {{t, x}, {t + 1, x + 1}, {t + 1, x + 2}, {t, x + 1}};
    case LozengeType::empty:
      return {{t - 1, x}, {t, x}, {t + 1, x + 1}, {t, x + 1}};
  }
  return {};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

class SvgCanvas {
 public:
  SvgCanvas(const EnsembleSpec& spec, double scale) : scale_(scale) {
    for (Int t = 0; t <= spec.steps; ++t) {
      auto [lo, hi] = region_column(spec, t);
      for (Int x : {lo - 1, hi + 2}) {
        Point p = to_plane(static_cast<double>(t), static_cast<double>(x));
        u_min_ = std::min(u_min_, p.u);
        u_max_ = std::max(u_max_, p.u);
        v_min_ = std::min(v_min_, p.v);
        v_max_ = std::max(v_max_, p.v);
      }
    }
  }

  std::string point(double t, double x) const {
    Point p = to_plane(t, x);
    return fmt((p.u - u_min_) * scale_ + margin_) + "," + fmt((v_max_ - p.v) * scale_ + margin_);
  }

  std::string header() const {
    const std::string w = fmt((u_max_ - u_min_) * scale_ + 2 * margin_);
    const std::string h = fmt((v_max_ - v_min_) * scale_ + 2 * margin_);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  }

 private:
  double scale_;
  double margin_ = 4.0;
  double u_min_ = 1e300, u_max_ = -1e300, v_min_ = 1e300, v_max_ = -1e300;
};

const char* fill(LozengeType type) {
  switch (type) {
    case LozengeType::stay: return "#e8b04a";
    case LozengeType::jump: return "#4a7fe8";
    case LozengeType::empty: return "#9be84a";
  }
  return "#000000";
}

char glyph(LozengeType type) {
  switch (type) {
    case LozengeType::stay: return '-';
    case LozengeType::jump: return '/';
    case LozengeType::empty: return 'o';
  }
  return '?';
}

std::string lozenges_ascii(const EnsembleSpec& spec, const std::vector<Lozenge>& tiles) {
  Int lo = tiles.front().x, hi = tiles.front().x;
  for (const auto& l : tiles) {
    lo = std::min(lo, l.x);
    hi = std::max(hi, l.x);
  }
  const std::size_t width = static_cast<std::size_t>(spec.steps);
  std::vector<std::string> rows(static_cast<std::size_t>(hi - lo + 1), std::string(width, ' '));
  for (const auto& l : tiles)
    rows[static_cast<std::size_t>(hi - l.x)][static_cast<std::size_t>(l.t)] = glyph(l.type);
  std::string out;
  for (auto& r : rows) {
    r.erase(r.find_last_not_of(' ') + 1);
    out += r + '\n';
  }
  return out;
}

std::string lozenges_svg(const EnsembleSpec& spec, const std::vector<Lozenge>& tiles) {
  SvgCanvas canvas(spec, 20.0);
  std::string out = canvas.header();
  for (const auto& l : tiles) {
    out += "<polygon points=\"";
    bool first = true;
    for (auto [t, x] : corners(l)) {
      out += (first ? "" : " ") + canvas.point(t, x);
      first = false;
    }
    out += "\" fill=\"" + std::string(fill(l.type)) + "\" stroke=\"#222\" stroke-width=\"0.8\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string paths_svg(const EnsembleSpec& spec, const Configuration& c) {
  SvgCanvas canvas(spec, 20.0);
  std::string out = canvas.header();
  for (std::size_t i = 1; i <= c.walkers(); ++i) {
    out += "<polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
    for (Int t = 0; t <= c.steps(); ++t) {
      out += (t ? " " : "") +
             canvas.point(static_cast<double>(t), static_cast<double>(c.at(t, i)) + 0.5);
    }
    out += "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::pair<Int, Int> region_column(const EnsembleSpec& spec, Int t) {
  if (t == 0) return {spec.start(1), spec.start(spec.n)};
  if (t == spec.steps) return {spec.end(1), spec.end(spec.n)};
  const Int lo = std::max(spec.start(1), spec.end(1) - (spec.steps - t));
  const Int hi = std::min(spec.start(spec.n) + t, spec.end(spec.n));
  return {lo, hi};
}

std::vector<Lozenge> lozenges(const EnsembleSpec& spec, const Configuration& c) {
  if (auto err = check_configuration(spec, c); !err.empty()) {
    throw std::invalid_argument("render: " + err);
  }
  std::vector<Lozenge> out;
  for (Int t = 0; t < spec.steps; ++t) {
    for (std::size_t i = 1; i <= spec.n; ++i) {
      const Int x = c.at(t, i);
      out.push_back({c.at(t + 1, i) == x ? LozengeType::stay : LozengeType::jump, t, x});
    }
    if (t == 0) continue;
    auto [lo, hi] = region_column(spec, t);
    for (Int x = lo; x <= hi; ++x)
      if (!c.occupied(t, x)) out.push_back({LozengeType::empty, t, x});
  }
  std::sort(out.begin(), out.end(), [](const Lozenge& a, const Lozenge& b) {
    return std::tie(a.t, a.x) < std::tie(b.t, b.x);
  });
  return out;
}

std::string render(const EnsembleSpec& spec, const Configuration& c, RenderMode mode,
                   RenderFormat format) {
  if (mode == RenderMode::paths) {
    if (auto err = check_configuration(spec, c); !err.empty()) {
      throw std::invalid_argument("render: " + err);
    }
    return format == RenderFormat::ascii ? serialize(c) : paths_svg(spec, c);
  }
  const auto tiles = lozenges(spec, c);
  return format == RenderFormat::ascii ? lozenges_ascii(spec, tiles) : lozenges_svg(spec, tiles);
}

}  // namespace lozenge
