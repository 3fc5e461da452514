// Copyright 2026 The depthcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "depthcut/cutting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace depthcut {

namespace {

constexpr double kEps = 1.0 / 4503599627370496.0;  // 2^-52

std::uint64_t Mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Sign of a*x + b*y - c, decided in doubles when the error bound allows.
int LineSign(const Line2& l, const Point2& p) {
  const double a = l.a.get_d(), b = l.b.get_d(), c = l.c.get_d();
  const double x = p.x.get_d(), y = p.y.get_d();
  const double v = a * x + b * y - c;
  const double bound = 16 * kEps * (std::fabs(a * x) + std::fabs(b * y) + std::fabs(c));
  if (std::isfinite(v) && std::fabs(v) > bound) return v > 0 ? 1 : -1;
  return sgn(l.Eval(p));
}

// Intersection x of two non-vertical, non-parallel lines.
bool IntersectX(const Line2& l, const Line2& m, Rational& x) {
  const Rational det = l.a * m.b - m.a * l.b;
  if (det == 0) return false;
  x = (l.c * m.b - m.c * l.b) / det;
  return true;
}

struct WallFeatures {
  std::vector<Rational> points;                  // y values of vertices on the wall
  std::vector<std::pair<Rational, Rational>> spans;  // vertical pieces [y0, y1]
  bool full = false;                             // a vertical line
};

}  // namespace

std::vector<Point2> Trapezoid::Vertices() const {
  const Point2 bl{xl, bottom.YAt(xl)}, br{xr, bottom.YAt(xr)};
  const Point2 tr{xr, top.YAt(xr)}, tl{xl, top.YAt(xl)};
  std::vector<Point2> v{bl, br};
  if (!(tr == br)) v.push_back(tr);
  if (!(tl == bl)) v.push_back(tl);
  return v;
}

Cell2 Trapezoid::ToCell() const {
  auto above = [](const Line2& l) {
    HalfPlane h{l.a, l.b, -l.c};
    return l.b > 0 ? h : h.Flipped();
  };
  Cell2 cell;
  cell.boundary = Vertices();
  const bool right = !(top.YAt(xr) == bottom.YAt(xr));
  const bool left = !(top.YAt(xl) == bottom.YAt(xl));
  cell.sides.push_back(above(bottom));
  if (right) cell.sides.push_back(HalfPlane::XAtMost(xr));
  cell.sides.push_back(above(top).Flipped());
  if (left) cell.sides.push_back(HalfPlane::XAtLeast(xl));
  return cell;
}

Rational Trapezoid::TwiceArea() const {
  return (xr - xl) * (top.YAt(xl) - bottom.YAt(xl) + top.YAt(xr) - bottom.YAt(xr));
}

Point2 Trapezoid::InteriorPoint() const {
  const Rational x = (xl + xr) / 2;
  return {x, (bottom.YAt(x) + top.YAt(x)) / 2};
}

bool Trapezoid::ContainsStrictly(const Point2& p) const {
  return xl < p.x && p.x < xr && bottom.YAt(p.x) < p.y && p.y < top.YAt(p.x);
}

CutItem CutItem::FromLine(const Line2& l, int weight) {
  CutItem it;
  it.line = l;
  it.line.Normalize();
  it.weight = weight;
  return it;
}

CutItem CutItem::FromSegment(const Point2& p, const Point2& q) {
  CutItem it;
  it.line = Line2::Through(p, q);
  it.bounded = true;
  it.a = LexLess(q, p) ? q : p;
  it.b = LexLess(q, p) ? p : q;
  return it;
}

bool CrossesInterior(const CutItem& item, const Trapezoid& cell) {
  if (item.line.IsVertical()) {
    const Rational& c = item.line.c;
    if (!(cell.xl < c && c < cell.xr)) return false;
    if (!item.bounded) return true;
    return item.a.y < cell.top.YAt(c) && item.b.y > cell.bottom.YAt(c);
  }
  if (!item.bounded) {
    bool pos = false, neg = false;
    for (const auto& v : cell.Vertices()) {
      const int s = LineSign(item.line, v);
      pos |= s > 0;
      neg |= s < 0;
    }
    return pos && neg;
  }
  // Liang-Barsky on the open cell with strict constraints alpha + beta*t > 0.
  if (item.b.x <= cell.xl || item.a.x >= cell.xr) return false;
  const Rational dx = item.b.x - item.a.x, dy = item.b.y - item.a.y;
  Rational lo = 0, hi = 1;
  auto constrain = [&](const Rational& alpha, const Rational& beta) {
    if (beta == 0) return alpha > 0;
    const Rational t = -alpha / beta;
    if (beta > 0) {
      if (t > lo) lo = t;
    } else if (t < hi) {
      hi = t;
    }
    return lo < hi;
  };
  if (!constrain(item.a.x - cell.xl, dx)) return false;
  if (!constrain(cell.xr - item.a.x, -dx)) return false;
  // y - bottom(x): bottom(x) = (c - a x) / b.
  const Line2& bo = cell.bottom;
  if (!constrain(item.a.y - (bo.c - bo.a * item.a.x) / bo.b, dy + bo.a * dx / bo.b)) return false;
  const Line2& to = cell.top;
  if (!constrain((to.c - to.a * item.a.x) / to.b - item.a.y, -(dy + to.a * dx / to.b))) return false;
  return lo < hi;
}

Trapezoid ClipBox(const std::vector<Point2>& points) {
  Rational x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (!points.empty()) {
    x0 = x1 = points[0].x;
    y0 = y1 = points[0].y;
  }
  for (const auto& p : points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Rational w = x1 - x0, h = y1 - y0;
  if (w == 0) w = 1;
  if (h == 0) h = 1;
  return {x0 - w, x1 + w, Line2::Horizontal(y0 - h), Line2::Horizontal(y1 + h)};
}

std::vector<CutItem> MergeLines(const std::vector<Line2>& lines) {
  std::map<Line2, int> count;
  for (auto l : lines) {
    l.Normalize();
    ++count[l];
  }
  std::vector<CutItem> out;
  for (const auto& [l, w] : count) out.push_back(CutItem::FromLine(l, w));
  return out;
}

std::vector<Trapezoid> Decompose(const Trapezoid& cell, const std::vector<const CutItem*>& sample) {
  // Distinct supporting lines: 0 = bottom, 1 = top, then the sample's.
  std::vector<Line2> lines{cell.bottom, cell.top};
  struct Entry {
    const CutItem* item;
    int line;
  };
  std::vector<Entry> flat;       // non-vertical items
  std::map<Rational, WallFeatures> walls;
  auto inside_x = [&](const Rational& x) { return cell.xl < x && x < cell.xr; };
  auto in_range = [](const CutItem* it, const Rational& x) {
    return !it->bounded || (it->a.x <= x && x <= it->b.x);
  };
  auto closed_y = [&](const Rational& x, const Rational& y) {
    return cell.bottom.YAt(x) <= y && y <= cell.top.YAt(x);
  };

  for (const CutItem* it : sample) {
    if (it->line.IsVertical()) {
      const Rational& c = it->line.c;
      if (!inside_x(c)) continue;
      auto& w = walls[c];
      if (it->bounded) w.spans.emplace_back(it->a.y, it->b.y);
      else w.full = true;
      continue;
    }
    int id = -1;
    for (std::size_t k = 2; k < lines.size(); ++k)
      if (lines[k] == it->line) id = static_cast<int>(k);
    if (id == -1) {
      id = static_cast<int>(lines.size());
      lines.push_back(it->line);
    }
    flat.push_back({it, id});
    if (it->bounded) {
      for (const Point2* p : {&it->a, &it->b})
        if (inside_x(p->x) && closed_y(p->x, p->y)) walls[p->x].points.push_back(p->y);
    }
    for (const Line2* boundary : {&cell.bottom, &cell.top}) {
      Rational x;
      if (IntersectX(it->line, *boundary, x) && inside_x(x) && in_range(it, x))
        walls[x].points.push_back(boundary->YAt(x));
    }
  }
  for (std::size_t i = 0; i < flat.size(); ++i) {
    for (std::size_t j = i + 1; j < flat.size(); ++j) {
      if (flat[i].line == flat[j].line) continue;
      Rational x;
      if (!IntersectX(flat[i].item->line, flat[j].item->line, x) || !inside_x(x)) continue;
      if (!in_range(flat[i].item, x) || !in_range(flat[j].item, x)) continue;
      const Rational y = flat[i].item->line.YAt(x);
      if (closed_y(x, y)) walls[x].points.push_back(y);
    }
  }

  std::vector<Rational> events{cell.xl};
  for (const auto& [x, w] : walls) events.push_back(x);
  events.push_back(cell.xr);

  auto blocked = [&](const Rational& x, int b, int t) {
    auto it = walls.find(x);
    if (it == walls.end()) return false;
    const WallFeatures& w = it->second;
    if (w.full) return true;
    const Rational yb = lines[b].YAt(x), yt = lines[t].YAt(x);
    for (const auto& y : w.points)
      if (yb <= y && y <= yt) return true;
    for (const auto& [y0, y1] : w.spans)
      if (y0 <= yt && y1 >= yb) return true;
    return false;
  };

  std::vector<Trapezoid> out;
  // Trapezoids of the previous slab, as (bottom id, top id, output index).
  std::vector<std::tuple<int, int, std::size_t>> prev, cur;
  for (std::size_t s = 0; s + 1 < events.size(); ++s) {
    const Rational& lo = events[s];
    const Rational& hi = events[s + 1];
    const Rational mid = (lo + hi) / 2;
    const Rational yb = cell.bottom.YAt(mid), yt = cell.top.YAt(mid);
    std::vector<std::pair<Rational, int>> active;
    for (const auto& e : flat) {
      if (e.item->bounded && !(e.item->a.x <= lo && e.item->b.x >= hi)) continue;
      Rational y = e.item->line.YAt(mid);
      if (!(yb < y && y < yt)) continue;
      if (std::any_of(active.begin(), active.end(), [&](const auto& a) { return a.second == e.line; })) continue;
      active.emplace_back(std::move(y), e.line);
    }
    std::sort(active.begin(), active.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<int> order{0};
    for (const auto& a : active) order.push_back(a.second);
    order.push_back(1);
    cur.clear();
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const int b = order[k], t = order[k + 1];
      std::size_t target = out.size();
      if (s > 0 && !blocked(lo, b, t)) {
        for (const auto& [pb, pt, idx] : prev)
          if (pb == b && pt == t) target = idx;
      }
      if (target == out.size()) out.push_back({lo, hi, lines[b], lines[t]});
      else out[target].xr = hi;
      cur.emplace_back(b, t, target);
    }
    std::swap(prev, cur);
  }
  return out;
}

namespace {

struct Refiner {
  const std::vector<CutItem>& items;
  const CuttingParams& params;
  long resamples = 0;

  int WeightOf(const std::vector<int>& crossing) const {
    int w = 0;
    for (int i : crossing) w += items[i].weight;
    return w;
  }

  void Refine(const Trapezoid& cell, const std::vector<int>& crossing, long bound, std::uint64_t seed,
              std::vector<std::pair<Trapezoid, std::vector<int>>>& out, bool first = true) {
    const int weight = WeightOf(crossing);
    if (weight <= bound) {
      out.emplace_back(cell, crossing);
      return;
    }
    if (!first) ++resamples;
    std::size_t s = crossing.size();
    if (bound > 0) {
      const double ratio = std::max(2.0, static_cast<double>(weight) / static_cast<double>(bound));
      const double want = std::ceil(params.sample_constant * ratio * std::log(ratio));
      s = std::min(s, static_cast<std::size_t>(std::max(1.0, want)));
    }
    std::vector<int> pool = crossing;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < s; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
      std::swap(pool[i], pool[pick(rng)]);
    }
    std::vector<const CutItem*> sample;
    for (std::size_t i = 0; i < s; ++i) sample.push_back(&items[pool[i]]);
    std::vector<int> rest(pool.begin() + static_cast<long>(s), pool.end());
    std::sort(rest.begin(), rest.end());
    const std::vector<Trapezoid> pieces = Decompose(cell, sample);
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      std::vector<int> sub;
      for (int i : rest)
        if (CrossesInterior(items[i], pieces[p])) sub.push_back(i);
      Refine(pieces[p], sub, bound, Mix(seed, p), out, false);
    }
  }
};

// Padded double bounding box of a cell; a filter only, never a verdict.
struct Box {
  double x0, y0, x1, y1;
};

Box PaddedBox(const Trapezoid& cell) {
  Box b{HUGE_VAL, HUGE_VAL, -HUGE_VAL, -HUGE_VAL};
  for (const auto& v : cell.Vertices()) {
    const double x = ToDouble(v.x), y = ToDouble(v.y);
    b.x0 = std::min(b.x0, x);
    b.y0 = std::min(b.y0, y);
    b.x1 = std::max(b.x1, x);
    b.y1 = std::max(b.y1, y);
  }
  const double pad = 1e-9 * (1 + std::max({std::abs(b.x0), std::abs(b.x1), std::abs(b.y0), std::abs(b.y1)}));
  return {b.x0 - pad, b.y0 - pad, b.x1 + pad, b.y1 + pad};
}

// Double image of an item for the filter.
struct ItemBox {
  double a, b, c;
  bool bounded;
  double x0, y0, x1, y1;
};

ItemBox ToItemBox(const CutItem& item) {
  ItemBox ib{ToDouble(item.line.a), ToDouble(item.line.b), ToDouble(item.line.c), item.bounded, 0, 0, 0, 0};
  if (item.bounded) {
    const double ax = ToDouble(item.a.x), bx = ToDouble(item.b.x);
    const double ay = ToDouble(item.a.y), by = ToDouble(item.b.y);
    ib.x0 = std::min(ax, bx);
    ib.x1 = std::max(ax, bx);
    ib.y0 = std::min(ay, by);
    ib.y1 = std::max(ay, by);
  }
  return ib;
}

// True when the item provably misses the box.
bool Misses(const ItemBox& item, const Box& box) {
  if (item.bounded && (item.x1 < box.x0 || item.x0 > box.x1 || item.y1 < box.y0 || item.y0 > box.y1)) return true;
  const double m = std::max({std::abs(box.x0), std::abs(box.x1), std::abs(box.y0), std::abs(box.y1)});
  const double tol = 1e-9 * (std::abs(item.a) * m + std::abs(item.b) * m + std::abs(item.c) + 1);
  bool pos = false, neg = false;
  for (double x : {box.x0, box.x1})
    for (double y : {box.y0, box.y1}) {
      const double f = item.a * x + item.b * y - item.c;
      pos |= f > -tol;
      neg |= f < tol;
    }
  return !(pos && neg);
}

std::vector<int> CrossingAll(const std::vector<CutItem>& items, const std::vector<ItemBox>& boxes,
                             const Trapezoid& cell) {
  std::vector<int> out;
  const Box box = PaddedBox(cell);
  const std::vector<Point2> vertices = cell.Vertices();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const CutItem& item = items[i];
    if (Misses(boxes[i], box)) continue;
    bool crosses = false;
    if (!item.bounded && !item.line.IsVertical()) {
      bool pos = false, neg = false;
      for (const auto& v : vertices) {
        const int sign = LineSign(item.line, v);
        pos |= sign > 0;
        neg |= sign < 0;
      }
      crosses = pos && neg;
    } else {
      crosses = CrossesInterior(item, cell);
    }
    if (crosses) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<ItemBox> ItemBoxes(const std::vector<CutItem>& items) {
  std::vector<ItemBox> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(ToItemBox(item));
  return out;
}

std::vector<int> CrossingAll(const std::vector<CutItem>& items, const Trapezoid& cell) {
  return CrossingAll(items, ItemBoxes(items), cell);
}

}  // namespace

int LevelsFor(long r, int rho) {
  int k = 0;
  long p = 1;
  while (p < r) {
    p *= rho;
    ++k;
  }
  return k;
}

long LevelBound(long total_weight, long r, int i, int k) {
  if (k == 0 || i == 0) return total_weight;
  mpz_class num, den, q, root;
  mpz_pow_ui(num.get_mpz_t(), mpz_class(total_weight).get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(den.get_mpz_t(), mpz_class(r).get_mpz_t(), static_cast<unsigned long>(i));
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
  return root.get_si();
}

CuttingLevel OneLevelCutting(const std::vector<CutItem>& items, const Trapezoid& within,
                             const CuttingParams& params) {
  Refiner refiner{items, params};
  const std::vector<int> crossing = CrossingAll(items, within);
  const long bound = refiner.WeightOf(crossing) / params.rho;
  std::vector<std::pair<Trapezoid, std::vector<int>>> pieces;
  refiner.Refine(within, crossing, bound, Mix(params.seed, 0), pieces);
  CuttingLevel level;
  level.index = 1;
  level.bound = bound;
  for (auto& [trap, cross] : pieces) {
    CuttingCell c;
    c.trap = trap;
    c.weight = refiner.WeightOf(cross);
    c.crossing = std::move(cross);
    level.cells.push_back(std::move(c));
  }
  return level;
}

CuttingHierarchy BuildHierarchy(const std::vector<CutItem>& items, const Trapezoid& root, long r,
                                const CuttingParams& params) {
  if (params.rho < 2) throw std::invalid_argument("rho must be at least 2");
  CuttingHierarchy h;
  h.items = items;
  h.root = root;
  h.rho = params.rho;
  h.r = std::max(1L, r);
  Refiner refiner{h.items, params};
  for (const auto& it : h.items) h.total_weight += it.weight;

  CuttingLevel level0;
  CuttingCell rootcell;
  rootcell.trap = root;
  rootcell.crossing = CrossingAll(h.items, root);
  rootcell.weight = refiner.WeightOf(rootcell.crossing);
  rootcell.seed = Mix(params.seed, 0);
  level0.bound = h.total_weight;
  level0.cells.push_back(std::move(rootcell));
  h.levels.push_back(std::move(level0));

  const int k = LevelsFor(h.r, params.rho);
  for (int i = 1; i <= k; ++i) {
    CuttingLevel next;
    next.index = i;
    next.bound = LevelBound(h.total_weight, h.r, i, k);
    auto& prev = h.levels.back();
    for (std::size_t u = 0; u < prev.cells.size(); ++u) {
      std::vector<std::pair<Trapezoid, std::vector<int>>> pieces;
      refiner.Refine(prev.cells[u].trap, prev.cells[u].crossing, next.bound, prev.cells[u].seed, pieces);
      h.max_children = std::max(h.max_children, static_cast<int>(pieces.size()));
      for (std::size_t p = 0; p < pieces.size(); ++p) {
        CuttingCell c;
        c.trap = std::move(pieces[p].first);
        c.crossing = std::move(pieces[p].second);
        c.weight = refiner.WeightOf(c.crossing);
        c.parent = static_cast<int>(u);
        c.seed = Mix(prev.cells[u].seed, p + 1);
        prev.cells[u].children.push_back(static_cast<int>(next.cells.size()));
        next.cells.push_back(std::move(c));
      }
    }
    h.levels.push_back(std::move(next));
  }
  h.resamples = refiner.resamples;
  return h;
}

namespace {

bool InteriorsDisjoint(const Trapezoid& p, const Trapezoid& q) {
  const Rational lo = std::max(p.xl, q.xl), hi = std::min(p.xr, q.xr);
  if (lo >= hi) return true;
  // Over the common x-range both are vertical intervals of linear bounds.
  auto below = [&](const Trapezoid& u, const Trapezoid& v) {
    return u.top.YAt(lo) <= v.bottom.YAt(lo) && u.top.YAt(hi) <= v.bottom.YAt(hi);
  };
  return below(p, q) || below(q, p);
}

bool ContainedIn(const Trapezoid& inner, const Trapezoid& outer) {
  const Cell2 cell = outer.ToCell();
  for (const auto& v : inner.Vertices())
    if (!cell.ContainsClosed(v)) return false;
  return true;
}

}  // namespace

std::string VerifyHierarchy(const CuttingHierarchy& h) {
  std::ostringstream err;
  const Rational root_area = h.root.TwiceArea();
  if (h.levels.empty() || h.levels[0].cells.size() != 1) return "level 0 is not a single root cell";
  const int k = h.k();
  long pk = 1, pk1 = 1;
  for (int i = 0; i < k; ++i) pk *= h.rho;
  for (int i = 0; i + 1 < k; ++i) pk1 *= h.rho;
  if (!(k == 0 ? h.r <= 1 : (pk1 < h.r && h.r <= pk))) err << "level count " << k << " does not fit r\n";
  const std::vector<ItemBox> boxes = ItemBoxes(h.items);
  for (std::size_t i = 0; i < h.levels.size(); ++i) {
    const auto& level = h.levels[i];
    Rational area = 0;
    for (std::size_t c = 0; c < level.cells.size(); ++c) {
      const auto& cell = level.cells[c];
      area += cell.trap.TwiceArea();
      if (cell.trap.TwiceArea() <= 0) err << "level " << i << " cell " << c << " is empty\n";
      const std::vector<int> brute = CrossingAll(h.items, boxes, cell.trap);
      if (brute != cell.crossing) err << "level " << i << " cell " << c << " crossing list mismatch\n";
      long weight = 0;
      for (int it : brute) weight += h.items[it].weight;
      if (c == 0 && level.bound != LevelBound(h.total_weight, h.r, static_cast<int>(i), k))
        err << "level " << i << " bound " << level.bound << " is not floor(N / r^(i/k))\n";
      if (weight > level.bound)
        err << "level " << i << " cell " << c << " crossed by weight " << weight << " > " << level.bound << "\n";
      if (i > 0) {
        const auto& parent = h.levels[i - 1].cells.at(cell.parent);
        if (!ContainedIn(cell.trap, parent.trap)) err << "level " << i << " cell " << c << " escapes its parent\n";
      }
      if (static_cast<int>(cell.children.size()) > h.max_children) err << "too many children\n";
      if (i + 1 < h.levels.size()) {
        // Siblings sorted by left wall; only x-overlapping ones can meet.
        std::vector<const Trapezoid*> kids;
        for (int kid : cell.children) kids.push_back(&h.levels[i + 1].cells[kid].trap);
        std::sort(kids.begin(), kids.end(), [](const Trapezoid* a, const Trapezoid* b) { return a->xl < b->xl; });
        Rational kid_area = 0;
        for (std::size_t a = 0; a < kids.size(); ++a) {
          kid_area += kids[a]->TwiceArea();
          for (std::size_t b = a + 1; b < kids.size() && kids[b]->xl < kids[a]->xr; ++b)
            if (!InteriorsDisjoint(*kids[a], *kids[b])) err << "level " << i + 1 << " siblings overlap\n";
        }
        if (kid_area != cell.trap.TwiceArea()) err << "level " << i << " cell " << c << " children do not tile it\n";
      }
    }
    if (area != root_area) err << "level " << i << " does not tile the root\n";
  }
  return err.str();
}

long InteriorIntersections(const std::vector<CutItem>& items, const CuttingCell& cell) {
  long count = 0;
  for (std::size_t i = 0; i < cell.crossing.size(); ++i) {
    for (std::size_t j = i + 1; j < cell.crossing.size(); ++j) {
      const CutItem& p = items[cell.crossing[i]];
      const CutItem& q = items[cell.crossing[j]];
      if (!p.bounded || !q.bounded) {
        if (p.line == q.line) continue;
        const Rational det = p.line.a * q.line.b - q.line.a * p.line.b;
        if (det == 0) continue;
        const Point2 x{(p.line.c * q.line.b - q.line.c * p.line.b) / det,
                       (p.line.a * q.line.c - q.line.a * p.line.c) / det};
        if (cell.trap.ContainsStrictly(x) && (!p.bounded || OnSegment(x, {p.a, p.b})) &&
            (!q.bounded || OnSegment(x, {q.a, q.b})))
          ++count;
        continue;
      }
      const auto hit = SegmentsIntersect2d({p.a, p.b}, {q.a, q.b});
      if (hit.kind == SegmentIntersection2::Kind::kPoint && cell.trap.ContainsStrictly(hit.p)) ++count;
    }
  }
  return count;
}

}  // namespace depthcut
