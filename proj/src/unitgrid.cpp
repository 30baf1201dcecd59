#include "polywang/unitgrid.hpp"

#include <algorithm>
#include <stdexcept>

namespace polywang {

UnitGrid::UnitGrid(int width, int height, bool torus, std::vector<UnitPiece> pieces)
    : w_(width),
      h_(height),
      torus_(torus),
      pieces_(std::move(pieces)),
      occ_(static_cast<std::size_t>(width) * height, -1),
      edge_(static_cast<std::size_t>(width) * height, {-1, -1, -1, -1}) {
  if (width <= 0 || height <= 0) throw std::invalid_argument("unit grid: bad size");
}

int UnitGrid::idx(std::int32_t x, std::int32_t y) const {
  if (torus_) {
    x = ((x % w_) + w_) % w_;
    y = ((y % h_) + h_) % h_;
  }
  return y * w_ + x;
}

bool UnitGrid::in_bounds(std::int32_t x, std::int32_t y) const {
  return torus_ || (x >= 0 && x < w_ && y >= 0 && y < h_);
}

bool UnitGrid::occupied(std::int32_t x, std::int32_t y) const {
  return in_bounds(x, y) && occ_[idx(x, y)] >= 0;
}

int UnitGrid::edge_label(std::int32_t x, std::int32_t y, Dir side) const {
  if (!in_bounds(x, y)) return -1;
  return edge_[idx(x, y)][static_cast<int>(side)];
}

bool UnitGrid::can_place(int piece, std::int32_t x, std::int32_t y) const {
  const UnitPiece& p = pieces_[piece];
  if (torus_) {
    // Reject placements that wrap onto themselves.
    auto [pw, ph] = p.size();
    if (pw > w_ || ph > h_) {
      // Fine only when the wrapped cells stay distinct; checked below via occ
      // marks would miss self-overlap, so verify explicitly.
      std::vector<int> seen;
      seen.reserve(p.cells.size());
      for (const Cell& c : p.cells) {
        int i = idx(x + c.x, y + c.y);
        if (std::find(seen.begin(), seen.end(), i) != seen.end()) return false;
        seen.push_back(i);
      }
    }
  }
  for (const Cell& c : p.cells) {
    if (!in_bounds(x + c.x, y + c.y)) return false;
    if (occ_[idx(x + c.x, y + c.y)] >= 0) return false;
  }
  for (const UnitEdge& e : p.edges) {
    const std::int32_t nx = x + e.cell.x + dir_dx(e.side);
    const std::int32_t ny = y + e.cell.y + dir_dy(e.side);
    if (!in_bounds(nx, ny)) continue;  // window border imposes nothing
    const int i = idx(nx, ny);
    if (occ_[i] < 0) continue;
    const int other = edge_[i][static_cast<int>(opposite(e.side))];
    if (other < 0) return false;  // abutting an interior cell: impossible fit
    if (!labels_match(e.label, static_cast<Label>(other))) return false;
  }
  return true;
}

void UnitGrid::place(int piece, std::int32_t x, std::int32_t y) {
  const UnitPiece& p = pieces_[piece];
  const int id = static_cast<int>(placements_.size());
  for (const Cell& c : p.cells) occ_[idx(x + c.x, y + c.y)] = id;
  for (const UnitEdge& e : p.edges)
    edge_[idx(x + e.cell.x, y + e.cell.y)][static_cast<int>(e.side)] =
        static_cast<std::int8_t>(e.label);
  placements_.push_back({piece, x, y});
  occupied_count_ += static_cast<std::int64_t>(p.cells.size());
}

void UnitGrid::unplace() {
  const UnitPlacement pl = placements_.back();
  placements_.pop_back();
  const UnitPiece& p = pieces_[pl.piece];
  for (const Cell& c : p.cells) occ_[idx(pl.x + c.x, pl.y + c.y)] = -1;
  for (const UnitEdge& e : p.edges)
    edge_[idx(pl.x + e.cell.x, pl.y + e.cell.y)][static_cast<int>(e.side)] = -1;
  occupied_count_ -= static_cast<std::int64_t>(p.cells.size());
}

std::vector<UnitPlacement> UnitGrid::candidates(std::int32_t x, std::int32_t y) const {
  std::vector<UnitPlacement> out;
  for (int pi = 0; pi < static_cast<int>(pieces_.size()); ++pi) {
    const UnitPiece& p = pieces_[pi];
    for (const Cell& c : p.cells) {
      const std::int32_t ox = x - c.x, oy = y - c.y;
      if (can_place(pi, ox, oy)) out.push_back({pi, ox, oy});
    }
  }
  return out;
}

std::vector<std::pair<std::int32_t, std::int32_t>> UnitGrid::frontier() const {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  for (std::int32_t y = 0; y < h_; ++y)
    for (std::int32_t x = 0; x < w_; ++x) {
      if (occ_[idx(x, y)] >= 0) continue;
      for (Dir d : {Dir::R, Dir::D, Dir::L, Dir::U}) {
        if (occupied(x + dir_dx(d), y + dir_dy(d))) {
          out.push_back({x, y});
          break;
        }
      }
    }
  return out;
}

namespace {

struct Searcher {
  UnitGrid& grid;
  const std::vector<std::pair<std::int32_t, std::int32_t>>& target;
  std::int64_t budget;
  std::int64_t nodes = 0;

  bool covered_all() const {
    for (auto [x, y] : target)
      if (!grid.occupied(x, y)) return false;
    return true;
  }

  // Most-constrained uncovered target cell, preferring frontier cells.
  bool pick(std::pair<std::int32_t, std::int32_t>& cell,
            std::vector<UnitPlacement>& cand) const {
    bool found = false;
    std::size_t best = 0;
    for (auto [x, y] : target) {
      if (grid.occupied(x, y)) continue;
      bool frontier = false;
      for (Dir d : {Dir::R, Dir::D, Dir::L, Dir::U})
        if (grid.occupied(x + dir_dx(d), y + dir_dy(d))) {
          frontier = true;
          break;
        }
      if (!frontier && found) continue;
      auto c = grid.candidates(x, y);
      if (!found || c.size() < best) {
        best = c.size();
        cell = {x, y};
        cand = std::move(c);
        found = true;
        if (best <= 1) return true;
      }
    }
    return found;
  }

  bool dfs() {
    if (++nodes > budget) throw SearchStatus::BudgetExhausted;
    std::pair<std::int32_t, std::int32_t> cell;
    std::vector<UnitPlacement> cand;
    if (!pick(cell, cand)) return true;  // every target cell covered
    if (cand.empty()) return false;
    for (const UnitPlacement& pl : cand) {
      grid.place(pl.piece, pl.x, pl.y);
      if (dfs()) return true;
      grid.unplace();
    }
    return false;
  }
};

}  // namespace

UnitSearchResult complete_unit_region(
    UnitGrid& grid, const std::vector<std::pair<std::int32_t, std::int32_t>>& target,
    std::int64_t node_budget) {
  Searcher s{grid, target, node_budget};
  UnitSearchResult res;
  try {
    res.status = s.dfs() ? SearchStatus::Completed : SearchStatus::Exhausted;
  } catch (SearchStatus st) {
    res.status = st;
  }
  res.nodes = s.nodes;
  res.placements = grid.placements();
  return res;
}

std::optional<UnitPlacement> propagate_forced(
    UnitGrid& grid, const std::vector<std::pair<std::int32_t, std::int32_t>>& target,
    bool& contradiction, std::pair<std::int32_t, std::int32_t>* dead_cell) {
  contradiction = false;
  for (auto [x, y] : target) {
    if (grid.occupied(x, y)) continue;
    auto cand = grid.candidates(x, y);
    if (cand.empty()) {
      contradiction = true;
      if (dead_cell) *dead_cell = {x, y};
      return std::nullopt;
    }
    if (cand.size() == 1) {
      grid.place(cand[0].piece, cand[0].x, cand[0].y);
      return cand[0];
    }
  }
  return std::nullopt;
}

}  // namespace polywang
