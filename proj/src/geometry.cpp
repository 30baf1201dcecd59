#include "polywang/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace polywang {

namespace {
constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, -1, 0, 1};

std::uint64_t pack_vertex(std::int64_t x, std::int64_t y) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
         static_cast<std::uint32_t>(y);
}
}  // namespace

char dir_letter(Dir d) { return "rdlu"[static_cast<int>(d)]; }
int dir_dx(Dir d) { return kDx[static_cast<int>(d)]; }
int dir_dy(Dir d) { return kDy[static_cast<int>(d)]; }
Dir rotate_cw(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 1) & 3); }
Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) & 3); }

BoundaryWord::BoundaryWord(std::vector<Step> steps) : steps_(std::move(steps)) {
  for (const Step& s : steps_)
    if (s.count <= 0) throw std::invalid_argument("boundary word: nonpositive count");
}

const BoundaryWord& tooth_excursion_right() {
  static const BoundaryWord t{std::vector<Step>{
      {Dir::R, 2}, {Dir::D, 2}, {Dir::R, 1}, {Dir::U, 2}, {Dir::R, 2}, {Dir::U, 1},
      {Dir::L, 2}, {Dir::U, 2}, {Dir::L, 1}, {Dir::D, 2}, {Dir::L, 2}}};
  return t;
}

const BoundaryWord& tooth_excursion_left() {
  static const BoundaryWord t{std::vector<Step>{
      {Dir::L, 2}, {Dir::D, 2}, {Dir::L, 1}, {Dir::U, 2}, {Dir::L, 2}, {Dir::U, 1},
      {Dir::R, 2}, {Dir::U, 2}, {Dir::R, 1}, {Dir::D, 2}, {Dir::R, 2}}};
  return t;
}

BoundaryWord BoundaryWord::parse(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  const std::size_t n = text.size();
  bool any = false;
  while (i < n) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    any = true;
    if (c == 't' || c == 'T') {
      const BoundaryWord& macro =
          (c == 't') ? tooth_excursion_right() : tooth_excursion_left();
      steps.insert(steps.end(), macro.steps().begin(), macro.steps().end());
      ++i;
      if (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("boundary word: macro takes no repeat count");
      continue;
    }
    Dir d;
    switch (c) {
      case 'r': d = Dir::R; break;
      case 'd': d = Dir::D; break;
      case 'l': d = Dir::L; break;
      case 'u': d = Dir::U; break;
      default:
        throw std::invalid_argument(std::string("boundary word: unknown letter '") + c +
                                    "'");
    }
    ++i;
    std::int64_t count = 1;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      count = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        count = count * 10 + (text[i] - '0');
        if (count > (1LL << 40)) throw std::invalid_argument("boundary word: count overflow");
        ++i;
      }
      if (count == 0) throw std::invalid_argument("boundary word: zero count");
    }
    steps.push_back({d, count});
  }
  if (!any) throw std::invalid_argument("boundary word: empty input");
  return BoundaryWord(std::move(steps));
}

std::string BoundaryWord::emit() const {
  std::string out;
  for (const Step& s : steps_) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(dir_letter(s.dir));
    if (s.count != 1) out += std::to_string(s.count);
  }
  return out;
}

std::int64_t BoundaryWord::step_count() const {
  std::int64_t n = 0;
  for (const Step& s : steps_) n += s.count;
  return n;
}

std::pair<std::int64_t, std::int64_t> BoundaryWord::displacement() const {
  std::int64_t x = 0, y = 0;
  for (const Step& s : steps_) {
    x += dir_dx(s.dir) * s.count;
    y += dir_dy(s.dir) * s.count;
  }
  return {x, y};
}

bool BoundaryWord::closes() const { return displacement() == std::pair<std::int64_t, std::int64_t>{0, 0}; }

bool BoundaryWord::is_simple() const {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(static_cast<std::size_t>(step_count()) * 2);
  std::int64_t x = 0, y = 0;
  seen.insert(pack_vertex(0, 0));
  const bool closed = closes();
  std::int64_t remaining = step_count();
  for (const Step& s : steps_) {
    for (std::int64_t k = 0; k < s.count; ++k) {
      x += dir_dx(s.dir);
      y += dir_dy(s.dir);
      --remaining;
      if (closed && remaining == 0) return x == 0 && y == 0;
      if (!seen.insert(pack_vertex(x, y)).second) return false;
    }
  }
  return true;
}

BoundaryWord BoundaryWord::normalized() const {
  std::vector<Step> out;
  for (const Step& s : steps_) {
    if (!out.empty() && out.back().dir == s.dir)
      out.back().count += s.count;
    else
      out.push_back(s);
  }
  return BoundaryWord(std::move(out));
}

BoundaryWord BoundaryWord::reversed() const {
  std::vector<Step> out;
  out.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
    out.push_back({opposite(it->dir), it->count});
  return BoundaryWord(std::move(out));
}

BoundaryWord BoundaryWord::rotated_cw(int quarter_turns) const {
  quarter_turns &= 3;
  std::vector<Step> out = steps_;
  for (Step& s : out)
    for (int k = 0; k < quarter_turns; ++k) s.dir = rotate_cw(s.dir);
  return BoundaryWord(std::move(out));
}

BoundaryWord& BoundaryWord::append(const BoundaryWord& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

BoundaryWord& BoundaryWord::append(Dir d, std::int64_t count) {
  if (count <= 0) throw std::invalid_argument("append: nonpositive count");
  steps_.push_back({d, count});
  return *this;
}

std::int64_t BoundaryWord::signed_area_x2() const {
  // Shoelace over the polyline; meaningful for closed words.
  std::int64_t x = 0, y = 0, acc = 0;
  for (const Step& s : steps_) {
    std::int64_t nx = x + dir_dx(s.dir) * s.count;
    std::int64_t ny = y + dir_dy(s.dir) * s.count;
    acc += x * ny - nx * y;
    x = nx;
    y = ny;
  }
  return acc;
}

// ---------------------------------------------------------------------------

Polyomino Polyomino::from_rows(std::vector<PolyRow> rows) {
  // Normalize: sort rows, sort runs, merge touching runs, drop empties.
  std::vector<PolyRow> norm;
  std::sort(rows.begin(), rows.end(),
            [](const PolyRow& a, const PolyRow& b) { return a.y < b.y; });
  for (auto& row : rows) {
    if (!norm.empty() && norm.back().y == row.y) {
      auto& dst = norm.back().runs;
      dst.insert(dst.end(), row.runs.begin(), row.runs.end());
    } else {
      norm.push_back(std::move(row));
    }
  }
  std::int64_t area = 0;
  for (auto& row : norm) {
    std::sort(row.runs.begin(), row.runs.end(),
              [](const Interval& a, const Interval& b) { return a.x0 < b.x0; });
    std::vector<Interval> merged;
    for (const Interval& iv : row.runs) {
      if (iv.x1 <= iv.x0) throw std::invalid_argument("polyomino: empty interval");
      if (!merged.empty() && iv.x0 < merged.back().x1)
        throw std::invalid_argument("polyomino: overlapping intervals in a row");
      if (!merged.empty() && iv.x0 == merged.back().x1)
        merged.back().x1 = iv.x1;
      else
        merged.push_back(iv);
    }
    row.runs = std::move(merged);
    for (const Interval& iv : row.runs) area += iv.length();
  }
  std::erase_if(norm, [](const PolyRow& r) { return r.runs.empty(); });

  Polyomino p;
  p.rows_ = std::move(norm);
  p.area_ = area;
  if (p.rows_.empty()) return p;

  // Edge-connectivity over runs (union-find).
  std::vector<int> first_run(p.rows_.size() + 1, 0);
  for (std::size_t i = 0; i < p.rows_.size(); ++i)
    first_run[i + 1] = first_run[i] + static_cast<int>(p.rows_[i].runs.size());
  const int total = first_run.back();
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (std::size_t i = 0; i + 1 < p.rows_.size(); ++i) {
    if (p.rows_[i + 1].y != p.rows_[i].y + 1) continue;
    const auto& lo = p.rows_[i].runs;
    const auto& hi = p.rows_[i + 1].runs;
    std::size_t a = 0, b = 0;
    while (a < lo.size() && b < hi.size()) {
      if (std::max(lo[a].x0, hi[b].x0) < std::min(lo[a].x1, hi[b].x1))
        unite(first_run[i] + static_cast<int>(a), first_run[i + 1] + static_cast<int>(b));
      if (lo[a].x1 < hi[b].x1)
        ++a;
      else
        ++b;
    }
  }
  const int root = find(0);
  for (int v = 1; v < total; ++v)
    if (find(v) != root) throw std::invalid_argument("polyomino: disconnected cell set");
  return p;
}

Polyomino Polyomino::from_cells(const std::vector<Cell>& cells) {
  std::map<std::int32_t, std::vector<std::int32_t>> by_row;
  for (const Cell& c : cells) by_row[c.y].push_back(c.x);
  std::vector<PolyRow> rows;
  for (auto& [y, xs] : by_row) {
    std::sort(xs.begin(), xs.end());
    PolyRow row{y, {}};
    for (std::int32_t x : xs) {
      if (!row.runs.empty() && row.runs.back().x1 == x)
        row.runs.back().x1 = x + 1;
      else if (!row.runs.empty() && x < row.runs.back().x1)
        throw std::invalid_argument("polyomino: duplicate cell");
      else
        row.runs.push_back({x, x + 1});
    }
    rows.push_back(std::move(row));
  }
  return from_rows(std::move(rows));
}

Polyomino::Box Polyomino::bbox() const {
  if (rows_.empty()) return {};
  std::int32_t x0 = rows_[0].runs[0].x0, x1 = rows_[0].runs[0].x1;
  for (const auto& row : rows_) {
    x0 = std::min(x0, row.runs.front().x0);
    x1 = std::max(x1, row.runs.back().x1);
  }
  return {x0, rows_.front().y, x1 - x0, rows_.back().y - rows_.front().y + 1};
}

bool Polyomino::contains(Cell c) const {
  auto it = std::lower_bound(rows_.begin(), rows_.end(), c.y,
                             [](const PolyRow& r, std::int32_t y) { return r.y < y; });
  if (it == rows_.end() || it->y != c.y) return false;
  auto run = std::upper_bound(it->runs.begin(), it->runs.end(), c.x,
                              [](std::int32_t x, const Interval& iv) { return x < iv.x1; });
  return run != it->runs.end() && run->x0 <= c.x;
}

void Polyomino::for_each_cell(const std::function<void(Cell)>& fn) const {
  for (const auto& row : rows_)
    for (const auto& iv : row.runs)
      for (std::int32_t x = iv.x0; x < iv.x1; ++x) fn({x, row.y});
}

std::vector<Cell> Polyomino::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(area_));
  for_each_cell([&](Cell c) { out.push_back(c); });
  return out;
}

Polyomino Polyomino::translated(std::int32_t dx, std::int32_t dy) const {
  Polyomino p = *this;
  for (auto& row : p.rows_) {
    row.y += dy;
    for (auto& iv : row.runs) {
      iv.x0 += dx;
      iv.x1 += dx;
    }
  }
  return p;
}

Polyomino Polyomino::rotated(int quarter_turns) const {
  quarter_turns &= 3;
  if (quarter_turns == 0 || rows_.empty()) return *this;
  if (quarter_turns == 2) {
    // (x, y) -> (-x-1, -y-1): reverse rows and runs.
    std::vector<PolyRow> rows;
    rows.reserve(rows_.size());
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      PolyRow row{-it->y - 1, {}};
      for (auto r = it->runs.rbegin(); r != it->runs.rend(); ++r)
        row.runs.push_back({-r->x1, -r->x0});
      rows.push_back(std::move(row));
    }
    Polyomino p;
    p.rows_ = std::move(rows);
    p.area_ = area_;
    return p;
  }
  // One CCW turn: cell (x, y) -> (-y-1, x). Sweep target rows (former x) in
  // increasing order, maintaining the active set of source rows as events.
  // Source interval [x0, x1) in row y covers target rows [x0, x1) at target
  // column -y-1.
  struct Event {
    std::int32_t at;   // target row where the column toggles
    std::int32_t col;  // target column = -y-1
    bool open;
  };
  std::vector<Event> events;
  for (const auto& row : rows_)
    for (const auto& iv : row.runs) {
      events.push_back({iv.x0, -row.y - 1, true});
      events.push_back({iv.x1, -row.y - 1, false});
    }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.at < b.at;
  });
  // Active columns as a sorted boolean structure; columns toggle rarely, so a
  // std::map of maximal runs keeps snapshots cheap.
  std::map<std::int32_t, std::int32_t> active;  // col -> col_end (maximal runs)
  auto add_col = [&](std::int32_t c) {
    auto next = active.lower_bound(c);
    bool merge_prev = false, merge_next = false;
    if (next != active.end() && next->first == c + 1) merge_next = true;
    auto prev = next;
    if (prev != active.begin()) {
      --prev;
      if (prev->second == c) merge_prev = true;
    }
    if (merge_prev && merge_next) {
      prev->second = next->second;
      active.erase(next);
    } else if (merge_prev) {
      prev->second = c + 1;
    } else if (merge_next) {
      std::int32_t end = next->second;
      active.erase(next);
      active[c] = end;
    } else {
      active[c] = c + 1;
    }
  };
  auto remove_col = [&](std::int32_t c) {
    auto it = active.upper_bound(c);
    --it;
    std::int32_t a = it->first, b = it->second;
    active.erase(it);
    if (a < c) active[a] = c;
    if (c + 1 < b) active[c + 1] = b;
  };

  std::vector<PolyRow> rows;
  std::size_t ei = 0;
  while (ei < events.size()) {
    std::int32_t y = events[ei].at;
    while (ei < events.size() && events[ei].at == y) {
      if (events[ei].open)
        add_col(events[ei].col);
      else
        remove_col(events[ei].col);
      ++ei;
    }
    std::int32_t until = (ei < events.size()) ? events[ei].at : y;
    if (active.empty()) continue;
    PolyRow row{y, {}};
    for (const auto& [a, b] : active) row.runs.push_back({a, b});
    for (std::int32_t yy = y; yy < until; ++yy) {
      row.y = yy;
      rows.push_back(row);
    }
  }
  Polyomino p;
  p.rows_ = std::move(rows);
  p.area_ = area_;
  if (quarter_turns == 3) return p.rotated(2);
  return p;
}

Polyomino Polyomino::canonical() const {
  if (rows_.empty()) return *this;
  Box b = bbox();
  return translated(-b.x, -b.y);
}

bool Polyomino::congruent_by_translation(const Polyomino& other) const {
  if (area_ != other.area_) return false;
  Polyomino a = canonical(), b = other.canonical();
  return a.rows_ == b.rows_;
}

BoundaryWord Polyomino::boundary_word() const {
  if (rows_.empty()) throw std::invalid_argument("boundary word of empty polyomino");
  // Start at the top-left vertex of the leftmost run of the top row, heading
  // right; interior stays on the right of travel.
  const PolyRow& top = rows_.back();
  std::int64_t sx = top.runs.front().x0;
  std::int64_t sy = top.y + 1;
  std::int64_t x = sx, y = sy;
  Dir heading = Dir::R;
  BoundaryWord w;
  auto filled = [&](std::int64_t cx, std::int64_t cy) {
    return contains({static_cast<std::int32_t>(cx), static_cast<std::int32_t>(cy)});
  };
  do {
    // Cells around vertex (x, y): interior must stay on the right.
    Dir next = heading;
    auto right_cell = [&](Dir d) -> std::pair<std::int64_t, std::int64_t> {
      switch (d) {
        case Dir::R: return {x, y - 1};
        case Dir::D: return {x - 1, y - 1};
        case Dir::L: return {x - 1, y};
        case Dir::U: return {x, y};
      }
      return {0, 0};
    };
    auto left_cell = [&](Dir d) -> std::pair<std::int64_t, std::int64_t> {
      switch (d) {
        case Dir::R: return {x, y};
        case Dir::D: return {x, y - 1};
        case Dir::L: return {x - 1, y - 1};
        case Dir::U: return {x - 1, y};
      }
      return {0, 0};
    };
    // Prefer turning left (convex corner), then straight, then right.
    Dir left = opposite(rotate_cw(heading));
    for (Dir cand : {left, heading, rotate_cw(heading), opposite(heading)}) {
      auto [rx, ry] = right_cell(cand);
      auto [lx, ly] = left_cell(cand);
      if (filled(rx, ry) && !filled(lx, ly)) {
        next = cand;
        break;
      }
    }
    w.append(next, 1);
    x += dir_dx(next);
    y += dir_dy(next);
    heading = next;
  } while (x != sx || y != sy);
  return w.normalized();
}

Polyomino word_to_polyomino(const BoundaryWord& w) {
  if (!w.closes()) throw std::invalid_argument("word_to_polyomino: open word");
  if (!w.is_simple())
    throw std::invalid_argument("word_to_polyomino: self-intersecting word");
  // Gather vertical runs and build per-row crossings.
  std::map<std::int32_t, std::vector<std::int32_t>> crossings;
  std::int64_t x = 0, y = 0;
  for (const Step& s : w.steps()) {
    if (s.dir == Dir::U) {
      for (std::int64_t k = 0; k < s.count; ++k)
        crossings[static_cast<std::int32_t>(y + k)].push_back(
            static_cast<std::int32_t>(x));
    } else if (s.dir == Dir::D) {
      for (std::int64_t k = 1; k <= s.count; ++k)
        crossings[static_cast<std::int32_t>(y - k)].push_back(
            static_cast<std::int32_t>(x));
    }
    x += dir_dx(s.dir) * s.count;
    y += dir_dy(s.dir) * s.count;
  }
  std::vector<PolyRow> rows;
  rows.reserve(crossings.size());
  for (auto& [row_y, xs] : crossings) {
    std::sort(xs.begin(), xs.end());
    if (xs.size() % 2 != 0)
      throw std::invalid_argument("word_to_polyomino: odd crossing parity");
    PolyRow row{row_y, {}};
    for (std::size_t i = 0; i < xs.size(); i += 2)
      if (xs[i] < xs[i + 1]) row.runs.push_back({xs[i], xs[i + 1]});
    rows.push_back(std::move(row));
  }
  return Polyomino::from_rows(std::move(rows));
}

}  // namespace polywang
