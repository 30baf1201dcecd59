#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Lattice geometry substrate: cells, interval-encoded polyominoes, rigid
// motions, and the boundary-word codec.

namespace polywang {

enum class Dir : std::uint8_t { R = 0, D = 1, L = 2, U = 3 };

char dir_letter(Dir d);
int dir_dx(Dir d);
int dir_dy(Dir d);
// One clockwise quarter turn: r -> d -> l -> u -> r.
Dir rotate_cw(Dir d);
Dir opposite(Dir d);

struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Step {
  Dir dir;
  std::int64_t count;  // > 0
  friend bool operator==(const Step&, const Step&) = default;
};

// A sequence of axis steps. Open segments are permitted; closed words trace
// piece boundaries clockwise (interior on the right of travel).
class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::vector<Step> steps);

  // Token grammar: direction letter in {r,d,l,u} with optional positive
  // decimal repeat ("r100 d100 r u12"); macros "t" and "T" expand to the
  // tooth excursions. '#' starts a comment to end of line.
  static BoundaryWord parse(std::string_view text);
  // Canonical text form; counts in decimal, count 1 omitted.
  std::string emit() const;

  const std::vector<Step>& steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  std::int64_t step_count() const;  // total unit steps

  std::pair<std::int64_t, std::int64_t> displacement() const;
  bool closes() const;
  // True iff the traced path visits no vertex twice (start=end allowed for
  // closed words).
  bool is_simple() const;

  // Merges consecutive steps of equal direction.
  BoundaryWord normalized() const;
  BoundaryWord reversed() const;
  // Rotates by quarter-turns clockwise (direction map r->d->l->u->r).
  BoundaryWord rotated_cw(int quarter_turns) const;
  BoundaryWord& append(const BoundaryWord& other);
  BoundaryWord& append(Dir d, std::int64_t count = 1);

  // Twice the signed shoelace area of the closed path.
  std::int64_t signed_area_x2() const;

 private:
  std::vector<Step> steps_;
};

// The tooth excursion words of the label table: "t" bumps right of an upward
// run, "T" bumps left. Both displace (0, 1).
const BoundaryWord& tooth_excursion_right();
const BoundaryWord& tooth_excursion_left();

struct Interval {
  std::int32_t x0 = 0;  // inclusive
  std::int32_t x1 = 0;  // exclusive
  std::int32_t length() const { return x1 - x0; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct PolyRow {
  std::int32_t y = 0;
  std::vector<Interval> runs;  // sorted, disjoint, non-adjacent
  friend bool operator==(const PolyRow&, const PolyRow&) = default;
};

// Finite edge-connected cell set stored as sorted per-row intervals.
// Construction normalizes (sorts, merges adjacent runs) and rejects
// disconnected input.
class Polyomino {
 public:
  Polyomino() = default;
  static Polyomino from_rows(std::vector<PolyRow> rows);
  static Polyomino from_cells(const std::vector<Cell>& cells);

  const std::vector<PolyRow>& rows() const { return rows_; }
  std::int64_t area() const { return area_; }
  bool empty() const { return rows_.empty(); }

  struct Box {
    std::int32_t x = 0, y = 0, w = 0, h = 0;
  };
  Box bbox() const;

  bool contains(Cell c) const;
  void for_each_cell(const std::function<void(Cell)>& fn) const;
  std::vector<Cell> cells() const;  // small pieces only

  Polyomino translated(std::int32_t dx, std::int32_t dy) const;
  // Counterclockwise quarter turns about the origin, then the caller may
  // canonicalize. quarter_turns in 0..3.
  Polyomino rotated(int quarter_turns) const;
  // Translation normalizing the bbox min corner to the origin.
  Polyomino canonical() const;
  bool congruent_by_translation(const Polyomino& other) const;

  friend bool operator==(const Polyomino& a, const Polyomino& b) {
    return a.rows_ == b.rows_;
  }

  // Clockwise boundary word of a simply-connected polyomino, starting at the
  // leftmost vertex of the top row.
  BoundaryWord boundary_word() const;

 private:
  std::vector<PolyRow> rows_;
  std::int64_t area_ = 0;
};

// Cells enclosed by a closed simple word (scanline parity fill); result is
// independent of traversal direction. Throws on open or self-intersecting
// words.
Polyomino word_to_polyomino(const BoundaryWord& w);

}  // namespace polywang
