#include "polywang/wang.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace polywang {

void WangTileSet::validate() const {
  if (tiles.empty()) throw std::invalid_argument("wang set: no tiles");
  if (color_count < 1) throw std::invalid_argument("wang set: color count < 1");
  for (const WangTile& t : tiles)
    for (int c : {t.north, t.east, t.south, t.west})
      if (c < 1 || c > color_count)
        throw std::invalid_argument("wang set: color out of range");
}

int side_color(const WangTile& t, WangSide s) {
  switch (s) {
    case WangSide::North: return t.north;
    case WangSide::East: return t.east;
    case WangSide::South: return t.south;
    case WangSide::West: return t.west;
  }
  return 0;
}

// --- unit pieces -------------------------------------------------------------

namespace {
// Cell bordered by a unit edge from vertex (x, y) along d, interior right.
std::pair<Cell, Dir> edge_cell(std::int32_t x, std::int32_t y, Dir d) {
  switch (d) {
    case Dir::R: return {{x, y - 1}, Dir::U};
    case Dir::D: return {{x - 1, y - 1}, Dir::R};
    case Dir::L: return {{x - 1, y}, Dir::D};
    case Dir::U: return {{x, y}, Dir::L};
  }
  return {{0, 0}, Dir::R};
}
}  // namespace

UnitPiece trace_unit_word(const std::string& name, const UnitWord& word) {
  std::int32_t x = 0, y = 0;
  std::vector<UnitEdge> edges;
  std::map<std::int32_t, std::vector<std::int32_t>> crossings;
  for (const LabeledStep& s : word) {
    auto [cell, side] = edge_cell(x, y, s.dir);
    edges.push_back({cell, side, s.label});
    if (s.dir == Dir::U) crossings[y].push_back(x);
    if (s.dir == Dir::D) crossings[y - 1].push_back(x);
    x += dir_dx(s.dir);
    y += dir_dy(s.dir);
  }
  if (x != 0 || y != 0) throw std::invalid_argument("unit word does not close");
  std::vector<Cell> cells;
  for (auto& [row, xs] : crossings) {
    std::sort(xs.begin(), xs.end());
    if (xs.size() % 2 != 0) throw std::invalid_argument("unit word: odd crossings");
    for (std::size_t i = 0; i < xs.size(); i += 2)
      for (std::int32_t cx = xs[i]; cx < xs[i + 1]; ++cx) cells.push_back({cx, row});
  }
  std::sort(cells.begin(), cells.end());
  UnitPiece p{name, std::move(cells), std::move(edges)};
  return p.normalized();
}

UnitPiece UnitPiece::rotated_ccw(int quarter_turns) const {
  UnitPiece p = *this;
  quarter_turns &= 3;
  for (int k = 0; k < quarter_turns; ++k) {
    for (Cell& c : p.cells) c = {static_cast<std::int32_t>(-c.y - 1), c.x};
    for (UnitEdge& e : p.edges) {
      e.cell = {static_cast<std::int32_t>(-e.cell.y - 1), e.cell.x};
      // A side facing dir f faces rotate_ccw(f) after the turn.
      e.side = opposite(rotate_cw(e.side));
    }
  }
  std::sort(p.cells.begin(), p.cells.end());
  return p.normalized();
}

UnitPiece UnitPiece::normalized() const {
  UnitPiece p = *this;
  if (p.cells.empty()) return p;
  std::int32_t mx = p.cells[0].x, my = p.cells[0].y;
  for (const Cell& c : p.cells) {
    mx = std::min(mx, c.x);
    my = std::min(my, c.y);
  }
  for (Cell& c : p.cells) {
    c.x -= mx;
    c.y -= my;
  }
  for (UnitEdge& e : p.edges) {
    e.cell.x -= mx;
    e.cell.y -= my;
  }
  std::sort(p.cells.begin(), p.cells.end());
  return p;
}

std::pair<int, int> UnitPiece::size() const {
  int w = 0, h = 0;
  for (const Cell& c : cells) {
    w = std::max(w, c.x + 1);
    h = std::max(h, c.y + 1);
  }
  return {w, h};
}

BoundaryWord cell_word_from_unit_word(const UnitWord& word) {
  BoundaryWord out;
  for (const LabeledStep& s : word) {
    BoundaryWord lw = BoundaryWord::parse(label_spec(s.label).word);
    out.append(lw.rotated_cw(static_cast<int>(s.dir)));
  }
  return out.normalized();
}

// --- catalog audit -----------------------------------------------------------

LabelDecode decode_label_word(const BoundaryWord& w, int length) {
  const int span = 6 * length - 2;
  LabelDecode out;
  out.displacement = w.displacement();
  out.simple = w.is_simple();

  // Work at unit granularity to be robust against run merges.
  std::string u;
  u.reserve(static_cast<std::size_t>(w.step_count()));
  for (const Step& s : w.steps())
    u.append(static_cast<std::size_t>(s.count), dir_letter(s.dir));
  auto expand = [](const BoundaryWord& word) {
    std::string s;
    for (const Step& st : word.steps())
      s.append(static_cast<std::size_t>(st.count), dir_letter(st.dir));
    return s;
  };
  static const std::string kT = expand(tooth_excursion_right());
  static const std::string kTb = expand(tooth_excursion_left());

  std::size_t i = 0;
  auto expect_run = [&](char c, int count) {
    for (int k = 0; k < count; ++k, ++i)
      if (i >= u.size() || u[i] != c)
        throw std::invalid_argument("label word: unexpected layout");
  };
  expect_run('r', span);
  expect_run('d', span);
  expect_run('r', 1);
  // Lock climb with right-handed excursions.
  int climbed = 0;
  while (climbed < span) {
    if (u.compare(i, kT.size(), kT) == 0) {
      if (climbed % 6 != 0)
        throw std::invalid_argument("label word: cavity off the index lattice");
      out.lock_set.push_back(length - climbed / 6);
      i += kT.size();
      climbed += 1;
    } else if (i < u.size() && u[i] == 'u') {
      ++i;
      ++climbed;
    } else {
      throw std::invalid_argument("label word: malformed lock climb");
    }
  }
  expect_run('r', 5);
  // Key climb with one left-handed excursion.
  int key_at = -1;
  climbed = 0;
  while (climbed < span) {
    if (u.compare(i, kTb.size(), kTb) == 0) {
      if (key_at >= 0) throw std::invalid_argument("label word: two key teeth");
      if ((climbed + 3) % 6 != 0)
        throw std::invalid_argument("label word: key tooth off the index lattice");
      key_at = (climbed + 3) / 6;
      i += kTb.size();
      climbed += 1;
    } else if (i < u.size() && u[i] == 'u') {
      ++i;
      ++climbed;
    } else {
      throw std::invalid_argument("label word: malformed key climb");
    }
  }
  if (key_at < 0) throw std::invalid_argument("label word: no key tooth");
  expect_run('r', 1);
  expect_run('d', span);
  expect_run('r', span);
  if (i != u.size()) throw std::invalid_argument("label word: trailing steps");

  out.key_index = key_at;
  std::sort(out.lock_set.begin(), out.lock_set.end());
  for (int v : out.lock_set)
    if (v < 1 || v > length)
      throw std::invalid_argument("label word: lock index out of range");
  return out;
}

bool CatalogAudit::all_ok() const {
  if (!symmetry_ok || !variant_rule_ok) return false;
  for (const auto& r : rows)
    if (!(r.displacement_ok && r.simple_ok && r.key_ok && r.lock_ok)) return false;
  return true;
}

CatalogAudit audit_catalog() {
  CatalogAudit audit;
  const auto& cat = label_catalog();
  for (const LabelSpec& spec : cat) {
    CatalogAuditRow row;
    row.name = spec.name;
    BoundaryWord w = BoundaryWord::parse(spec.word);
    row.decode = decode_label_word(w, kLabelLength);
    row.displacement_ok = row.decode.displacement == std::pair<std::int64_t, std::int64_t>{kLabelScale, 0};
    row.simple_ok = row.decode.simple;
    row.key_ok = row.decode.key_index == spec.key_index;
    row.lock_ok = row.decode.lock_set == spec.lock_set;
    audit.rows.push_back(std::move(row));
  }
  audit.symmetry_ok = true;
  for (int a = 0; a < kLabelCount; ++a)
    for (int b = 0; b < kLabelCount; ++b)
      if (lock_admits(static_cast<Label>(a), static_cast<Label>(b)) !=
          lock_admits(static_cast<Label>(b), static_cast<Label>(a)))
        audit.symmetry_ok = false;
  audit.variant_rule_ok = audit_variant_rule().empty();
  return audit;
}

// --- rod / blade assembly ----------------------------------------------------

std::vector<Label> color_section(int color, int m, SectionKind kind) {
  if (color < 1 || color > m) throw std::invalid_argument("color out of range");
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(m - 1));
  for (int j = 1; j <= m - 1; ++j) {
    if (kind == SectionKind::ISide)
      out.push_back(j <= color - 1 ? Label::I1N : Label::I0N);
    else
      out.push_back(j <= color - 1 ? Label::J0N : Label::J1N);
  }
  return out;
}

const SectionConvention& default_section_convention() {
  static const SectionConvention conv{};
  return conv;
}

UnitWord rod_unit_word(const WangTileSet& wts, const SectionConvention& conv) {
  wts.validate();
  const int n = wts.tile_count();
  const int m = wts.color_count;
  auto tile_at = [&](int i) {  // geometric position i in 1..n
    return conv.tiles_left_to_right ? wts.tiles[i - 1] : wts.tiles[n - i];
  };

  // Top side, geometric = traversal order (left to right).
  std::vector<Label> top;
  for (int group : {0, 1}) {
    for (int i = 1; i <= n; ++i) {
      const int color = side_color(tile_at(i), conv.group_side[group]);
      const auto info = color_section(color, m, SectionKind::ISide);
      top.push_back(Label::X01);
      for (Label slot : info) {
        top.push_back(slot);
        top.push_back(Label::xA);
      }
      top.push_back(Label::I0N);
    }
    top.push_back(Label::X01);
    top.push_back(Label::I0N);
    if (group == 0)
      top.insert(top.end(), static_cast<std::size_t>((2 * n - 2) * m + 2), Label::MA);
  }

  // Bottom side built geometrically (left to right), then reversed for the
  // clockwise traversal. Geometric groups: left half encodes group_side[3],
  // right half group_side[2] (the right end carries label 1).
  std::vector<Label> bottom;
  auto bottom_sections = [&](int group) {
    for (int i = 1; i <= n; ++i) {
      const int color = side_color(tile_at(i), conv.group_side[group]);
      const auto info = color_section(color, m, SectionKind::JSide);
      bottom.push_back(Label::J0N);
      for (Label slot : info) {
        bottom.push_back(Label::yA);
        bottom.push_back(slot);
      }
      bottom.push_back(Label::Y);
    }
  };
  bottom.push_back(Label::J0N);
  bottom.push_back(Label::Y);
  bottom_sections(3);
  bottom.insert(bottom.end(), static_cast<std::size_t>((2 * n - 2) * m + 2), Label::M);
  bottom.push_back(Label::J0N);
  bottom.push_back(Label::Y);
  bottom_sections(2);

  UnitWord w;
  for (Label lab : top) w.push_back({Dir::R, lab});
  w.push_back({Dir::D, Label::N});
  w.push_back({Dir::D, Label::One});
  for (auto it = bottom.rbegin(); it != bottom.rend(); ++it) w.push_back({Dir::L, *it});
  w.push_back({Dir::U, Label::N});
  w.push_back({Dir::U, Label::Zero});
  return w;
}

UnitWord blade_unit_word(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("blade: n, m must be positive");
  const int W = (6 * n - 2) * m + 6;
  const int K = (2 * n - 2) * m;
  UnitWord w;
  auto run = [&](Dir d, Label lab, int count) {
    for (int i = 0; i < count; ++i) w.push_back({d, lab});
  };
  run(Dir::R, Label::L, W);
  run(Dir::D, Label::Xp, 1);
  run(Dir::D, Label::LA, K);
  run(Dir::R, Label::LA, W);
  run(Dir::U, Label::LA, K + 1);
  run(Dir::U, Label::Yp, 1);
  run(Dir::U, Label::LA, 1);
  run(Dir::R, Label::L, W);
  run(Dir::D, Label::Xp, 1);
  run(Dir::D, Label::L, (4 * n - 4) * m + 3);
  run(Dir::D, Label::Xp, 1);
  run(Dir::D, Label::L, 1);
  run(Dir::L, Label::L, W);
  run(Dir::U, Label::Yp, 1);
  run(Dir::U, Label::LA, K);
  run(Dir::L, Label::LA, W);
  run(Dir::D, Label::LA, K + 1);
  run(Dir::D, Label::Xp, 1);
  run(Dir::D, Label::LA, 1);
  run(Dir::L, Label::L, W);
  run(Dir::U, Label::Yp, 1);
  run(Dir::U, Label::L, (4 * n - 4) * m + 3);
  run(Dir::U, Label::Yp, 1);
  run(Dir::U, Label::L, 1);
  return w;
}

BoundaryWord rod_word(const WangTileSet& wts, const SectionConvention& conv) {
  return cell_word_from_unit_word(rod_unit_word(wts, conv));
}

BoundaryWord blade_word(int n, int m) {
  return cell_word_from_unit_word(blade_unit_word(n, m));
}

BoundaryWord tooth_word() {
  BoundaryWord w = tooth_excursion_right();
  w.append(Dir::D, 1);
  return w;
}

WangTileSet pad_for_construction(const WangTileSet& wts) {
  wts.validate();
  WangTileSet out = wts;
  if (out.tile_count() == 1) out.tiles.push_back(out.tiles[0]);
  if (out.color_count == 1) out.color_count = 2;
  return out;
}

}  // namespace polywang
