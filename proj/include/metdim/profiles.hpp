#pragma once

#include <functional>
#include <vector>

#include "metdim/feasibility.hpp"
#include "metdim/stems.hpp"

namespace metdim {

/// Ranked classes of a total preorder; classes[r] holds the items of rank r.
struct WeakOrder {
  std::vector<std::vector<int>> classes;

  int size() const;
  /// rank of each item in [0, item_count), -1 for items not placed yet.
  std::vector<int> ranks(int item_count) const;
  /// 2c + 1 ways to add one more item: even o opens a new class at gap o / 2,
  /// odd o joins class o / 2.
  int insertion_count() const { return 2 * static_cast<int>(classes.size()) + 1; }
  WeakOrder inserted(int item, int option) const;
};

/// Every weak order of items 0..m-1, in a fixed order. Returns false early if the
/// visitor does.
bool for_each_weak_order(int item_count, const std::function<bool(const WeakOrder&)>& visit);

/// Multisets of size k over 0..cell_count-1 as sorted vectors, lexicographically.
std::vector<std::vector<int>> enumerate_assignments(int k, int cell_count);

/// One guessed coordinate: landmark `landmark` contributes the value offset + coef * t.
struct SymbolicItem {
  int landmark = 0;
  AffineValue value;
};

struct SymbolicSegment {
  int landmark = 0;
  Axis axis = Axis::Horizontal;
  int u_low = 0, u_high = 0, v_low = 0, v_high = 0;  // indices into the pair's items
};

/// Symbolic endpoints of every landmark's family on one track pair.
struct PairFrame {
  int pair = 0;
  std::vector<SymbolicItem> u_items;
  std::vector<SymbolicItem> v_items;
  std::vector<SymbolicSegment> segments;
  bool trivially_empty = false;  // some landmark sees nothing on this pair
};

/// Everything fixed by a stem (cell) assignment.
struct ProfileFrame {
  int k = 0;
  std::vector<int> assignment;  // cell id per landmark, nondecreasing
  std::vector<Cell> cells;      // cell per landmark
  std::vector<PairFrame> pairs;
};

ProfileFrame make_frame(const IndistinctTable& table, const std::vector<Cell>& cells, std::vector<int> assignment);

struct PairChoice {
  WeakOrder u_order;
  WeakOrder v_order;
  std::vector<int> u_parity;  // per item, -1 when not chosen yet
  std::vector<int> v_parity;
};

struct ChoiceProfile {
  int k = 0;
  std::vector<int> assignment;
  std::vector<PairChoice> pairs;  // parallel to ProfileFrame::pairs
};

/// Raw enumeration of the whole choice space: assignments, then per pair a weak order
/// of u items, one of v items, and a parity per item. `pair_items(assignment)` gives
/// the (u item count, v item count) of every pair.
void enumerate_profiles(int k, int cell_count,
                        const std::function<std::vector<std::pair<int, int>>(const std::vector<int>&)>& pair_items,
                        const std::function<bool(const ChoiceProfile&)>& visit);

/// Convenience form with the same item counts for every assignment.
void enumerate_profiles(int k, int cell_count, const std::vector<std::pair<int, int>>& pair_items,
                        const std::function<bool(const ChoiceProfile&)>& visit);

enum class Emptiness { Empty, NonEmpty, Inconsistent };

/// Decides from orders and parities alone whether the common intersection of all
/// landmarks' families on one pair has a valid lattice point. Inconsistent when the
/// orders put a segment's high end below its low end or split a fixed coordinate.
Emptiness symbolic_empty_intersection(const PairFrame& frame, const PairChoice& choice);

/// Placements (cell index per landmark) realizing the declared orders and parities.
/// Items absent from a partial order and unset parities add nothing.
FeasibilitySystem build_feasibility(const ProfileFrame& frame, const ChoiceProfile& profile);

}  // namespace metdim
