#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polywang/wang.hpp"

// Unit-scale tiling engine for labeled pieces: occupancy plus an
// edge-matching constraint (two abutting unit edges must carry labels whose
// locks admit each other's keys). Tilings found here correspond one-to-one
// to tilings by the scaled labeled polyominoes with teeth.

namespace polywang {

struct UnitPlacement {
  int piece = 0;  // index into the grid's piece list
  std::int32_t x = 0, y = 0;
};

class UnitGrid {
 public:
  // torus: coordinates wrap; otherwise a bounded window.
  UnitGrid(int width, int height, bool torus, std::vector<UnitPiece> pieces);

  int width() const { return w_; }
  int height() const { return h_; }
  bool torus() const { return torus_; }
  const std::vector<UnitPiece>& pieces() const { return pieces_; }
  const std::vector<UnitPlacement>& placements() const { return placements_; }

  bool occupied(std::int32_t x, std::int32_t y) const;
  std::int64_t occupied_count() const { return occupied_count_; }
  // Label presented by a placed boundary edge at cell (x, y), side s;
  // -1 when none.
  int edge_label(std::int32_t x, std::int32_t y, Dir side) const;

  bool can_place(int piece, std::int32_t x, std::int32_t y) const;
  void place(int piece, std::int32_t x, std::int32_t y);
  void unplace();

  // All legal placements covering the given cell.
  std::vector<UnitPlacement> candidates(std::int32_t x, std::int32_t y) const;

  // Cells adjacent to the placed structure (uncovered, with a covered
  // 4-neighbor), restricted to `target` when nonempty.
  std::vector<std::pair<std::int32_t, std::int32_t>> frontier() const;

 private:
  int idx(std::int32_t x, std::int32_t y) const;
  bool in_bounds(std::int32_t x, std::int32_t y) const;

  int w_, h_;
  bool torus_;
  std::vector<UnitPiece> pieces_;
  std::vector<std::int32_t> occ_;                     // placement index or -1
  std::vector<std::array<std::int8_t, 4>> edge_;      // label per cell side or -1
  std::vector<UnitPlacement> placements_;
  std::int64_t occupied_count_ = 0;
};

enum class SearchStatus { Completed, Exhausted, BudgetExhausted };

struct UnitSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::vector<UnitPlacement> placements;
  std::int64_t nodes = 0;
};

// Backtracking completion: cover every cell of `target` (grid coordinates)
// with label-consistent placements. Deterministic; picks the most
// constrained frontier cell first.
UnitSearchResult complete_unit_region(
    UnitGrid& grid, const std::vector<std::pair<std::int32_t, std::int32_t>>& target,
    std::int64_t node_budget);

// One step of forced propagation: if some target cell has exactly one legal
// covering placement, places it and returns it. Returns nullopt when no
// forced cell exists. Sets `contradiction` when a target cell has none.
std::optional<UnitPlacement> propagate_forced(
    UnitGrid& grid, const std::vector<std::pair<std::int32_t, std::int32_t>>& target,
    bool& contradiction,
    std::pair<std::int32_t, std::int32_t>* dead_cell = nullptr);

}  // namespace polywang
