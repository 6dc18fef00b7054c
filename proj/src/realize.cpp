#include "relufibre/realize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "relufibre/error.hpp"
#include "relufibre/random.hpp"

namespace relufibre {

namespace {

void check_input(const Parameter& theta, std::size_t len) {
  if (len != theta.m())
    throw Error(ErrorCode::DimensionMismatch,
                "point has dimension " + std::to_string(len) + ", parameter expects m = " +
                    std::to_string(theta.m()));
}

void require_scalar(const Parameter& theta) {
  if (theta.m() != 1 || theta.k() != 1)
    throw Error(ErrorCode::Precondition,
                "1-D oracle needs m = 1 and k = 1, got " + to_string(theta.arch()));
}

}  // namespace

RatVec eval(const Parameter& theta, std::span<const Rat> x) {
  check_input(theta, x.size());
  RatVec y = theta.c();
  for (std::size_t i = 0; i < theta.n(); ++i) {
    const Rat h = relu(dot(theta.A().row(i), x) + theta.b()[i]);
    if (h.is_zero()) continue;
    for (std::size_t t = 0; t < theta.k(); ++t) y[t] += theta.M()(t, i) * h;
  }
  return y;
}

std::vector<int> activation_pattern(const Parameter& theta, std::span<const Rat> x) {
  check_input(theta, x.size());
  std::vector<int> pattern(theta.n());
  for (std::size_t i = 0; i < theta.n(); ++i)
    pattern[i] = (dot(theta.A().row(i), x) + theta.b()[i]).sign();
  return pattern;
}

bool exact_equal_1d(const Parameter& theta1, const Parameter& theta2) {
  require_scalar(theta1);
  require_scalar(theta2);
  RatVec breaks;
  for (const Parameter* p : {&theta1, &theta2})
    for (std::size_t i = 0; i < p->n(); ++i)
      if (const Rat& a = p->A()(i, 0); !a.is_zero()) breaks.push_back(-p->b()[i] / a);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  RatVec probes;
  if (breaks.empty()) {
    probes = {Rat(0), Rat(1)};
  } else {
    probes.push_back(breaks.front() - Rat(2));
    probes.push_back(breaks.front() - Rat(1));
    for (std::size_t i = 0; i < breaks.size(); ++i) {
      probes.push_back(breaks[i]);
      if (i + 1 < breaks.size()) probes.push_back((breaks[i] + breaks[i + 1]) / Rat(2));
    }
    probes.push_back(breaks.back() + Rat(1));
    probes.push_back(breaks.back() + Rat(2));
  }
  for (const auto& x : probes) {
    const RatVec pt{x};
    if (eval(theta1, pt) != eval(theta2, pt)) return false;
  }
  return true;
}

std::vector<RatVec> sample_points(std::size_t m, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RatVec> pts(count, RatVec(m));
  for (auto& p : pts)
    for (auto& x : p) x = Rat(static_cast<long>(rng.uniform(-1000, 1000)));
  return pts;
}

SampleComparison equal_on_samples(const Parameter& theta1, const Parameter& theta2,
                                  std::size_t count, std::uint64_t seed) {
  if (theta1.m() != theta2.m() || theta1.k() != theta2.k())
    throw Error(ErrorCode::DimensionMismatch,
                "sample comparison needs equal m and k: " + to_string(theta1.arch()) +
                    " vs " + to_string(theta2.arch()));
  SampleComparison result;
  for (auto& x : sample_points(theta1.m(), count, seed)) {
    if (eval(theta1, x) != eval(theta2, x)) {
      result.equal = false;
      result.counterexample = std::move(x);
      break;
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

struct Pt {
  double x, y;
};

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c",
                                    "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Sutherland-Hodgman clip of a convex polygon to {p : a.p + b >= 0}.
std::vector<Pt> clip_halfplane(const std::vector<Pt>& poly, double ax, double ay, double b) {
  std::vector<Pt> out;
  auto side = [&](const Pt& p) { return ax * p.x + ay * p.y + b; };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Pt& p = poly[i];
    const Pt& q = poly[(i + 1) % poly.size()];
    const double sp = side(p), sq = side(q);
    if (sp >= 0) out.push_back(p);
    if ((sp >= 0) != (sq >= 0)) {
      const double t = sp / (sp - sq);
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

}  // namespace

std::string arrangement_svg(const Parameter& theta, const PlotOptions& opt) {
  if (theta.m() != 2 || theta.k() != 1)
    throw Error(ErrorCode::Precondition,
                "arrangement plot needs m = 2 and k = 1, got " + to_string(theta.arch()));
  const auto& box = opt.bbox;
  if (!(box.x1 > box.x0) || !(box.y1 > box.y0))
    throw Error(ErrorCode::Precondition, "bounding box is empty");
  if (opt.grid < 1) throw Error(ErrorCode::Precondition, "grid must be positive");

  const double W = opt.pixels, H = opt.pixels;
  auto px = [&](double x) { return (x - box.x0) / (box.x1 - box.x0) * W; };
  auto py = [&](double y) { return (box.y1 - y) / (box.y1 - box.y0) * H; };

  const std::size_t n = theta.n();
  std::vector<double> ax(n), ay(n), bb(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    ax[i] = theta.A()(i, 0).to_double();
    ay[i] = theta.A()(i, 1).to_double();
    bb[i] = theta.b()[i].to_double();
    v[i] = theta.M()(0, i).to_double();
  }
  const double C = theta.c()[0].to_double();

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.pixels
      << "\" height=\"" << opt.pixels << "\" viewBox=\"0 0 " << opt.pixels << ' '
      << opt.pixels << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << opt.pixels << "\" height=\"" << opt.pixels
      << "\" fill=\"white\" stroke=\"black\"/>\n";

  const std::vector<Pt> frame{{box.x0, box.y0}, {box.x1, box.y0}, {box.x1, box.y1}, {box.x0, box.y1}};
  for (std::size_t i = 0; i < n; ++i) {
    auto region = clip_halfplane(frame, ax[i], ay[i], bb[i]);
    if (region.size() < 3) continue;
    svg << "<polygon fill=\"" << kPalette[i % std::size(kPalette)] << "\" fill-opacity=\""
        << fmt(opt.opacity) << "\" stroke=\"none\" points=\"";
    for (std::size_t p = 0; p < region.size(); ++p)
      svg << (p ? " " : "") << fmt(px(region[p].x)) << ',' << fmt(py(region[p].y));
    svg << "\"/>\n";
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (ax[i] == 0 && ay[i] == 0) continue;
    // The line is the shared edge of the two clipped half-planes; its
    // endpoints are the frame crossings.
    std::vector<Pt> hits;
    for (std::size_t e = 0; e < 4; ++e) {
      const Pt& p = frame[e];
      const Pt& q = frame[(e + 1) % 4];
      const double sp = ax[i] * p.x + ay[i] * p.y + bb[i];
      const double sq = ax[i] * q.x + ay[i] * q.y + bb[i];
      if (sp == 0) hits.push_back(p);
      if ((sp < 0 && sq > 0) || (sp > 0 && sq < 0)) {
        const double t = sp / (sp - sq);
        hits.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
      }
    }
    if (hits.size() < 2) continue;
    const Pt& s = hits.front();
    const Pt& t = hits.back();
    if (s.x == t.x && s.y == t.y) continue;
    svg << "<line x1=\"" << fmt(px(s.x)) << "\" y1=\"" << fmt(py(s.y)) << "\" x2=\""
        << fmt(px(t.x)) << "\" y2=\"" << fmt(py(t.y)) << "\" stroke=\""
        << kPalette[i % std::size(kPalette)] << "\" stroke-width=\"1.5\"/>\n";
  }

  // Marching squares on the realization.
  const std::size_t N = opt.grid;
  const double dx = (box.x1 - box.x0) / static_cast<double>(N);
  const double dy = (box.y1 - box.y0) / static_cast<double>(N);
  auto f = [&](double x, double y) {
    double s = C;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * std::max(0.0, ax[i] * x + ay[i] * y + bb[i]);
    return s;
  };
  std::vector<double> val((N + 1) * (N + 1));
  for (std::size_t j = 0; j <= N; ++j)
    for (std::size_t i = 0; i <= N; ++i)
      val[j * (N + 1) + i] = f(box.x0 + dx * static_cast<double>(i), box.y0 + dy * static_cast<double>(j));

  std::ostringstream path;
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < N; ++i) {
      const double x = box.x0 + dx * static_cast<double>(i);
      const double y = box.y0 + dy * static_cast<double>(j);
      const Pt corner[4] = {{x, y}, {x + dx, y}, {x + dx, y + dy}, {x, y + dy}};
      const double fv[4] = {val[j * (N + 1) + i], val[j * (N + 1) + i + 1],
                            val[(j + 1) * (N + 1) + i + 1], val[(j + 1) * (N + 1) + i]};
      // Edges in order: bottom, right, top, left.
      Pt cross[4];
      bool has[4] = {false, false, false, false};
      int count = 0;
      for (int e = 0; e < 4; ++e) {
        const int a = e, b = (e + 1) % 4;
        if ((fv[a] > 0) != (fv[b] > 0)) {
          const double t = fv[a] / (fv[a] - fv[b]);
          cross[e] = {corner[a].x + t * (corner[b].x - corner[a].x),
                      corner[a].y + t * (corner[b].y - corner[a].y)};
          has[e] = true;
          ++count;
        }
      }
      auto segment = [&](int e1, int e2) {
        path << 'M' << fmt(px(cross[e1].x)) << ' ' << fmt(py(cross[e1].y)) << 'L'
             << fmt(px(cross[e2].x)) << ' ' << fmt(py(cross[e2].y));
      };
      if (count == 2) {
        int first = -1;
        for (int e = 0; e < 4; ++e) {
          if (!has[e]) continue;
          if (first < 0) {
            first = e;
          } else {
            segment(first, e);
          }
        }
      } else if (count == 4) {
        const bool center = f(x + dx / 2, y + dy / 2) > 0;
        if (center == (fv[0] > 0)) {
          segment(0, 1);
          segment(2, 3);
        } else {
          segment(3, 0);
          segment(1, 2);
        }
      }
    }
  }
  svg << "<path fill=\"none\" stroke=\"black\" stroke-width=\"2\" d=\"" << path.str() << "\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace relufibre
