#include "metdim/profiles.hpp"

#include <algorithm>
#include <map>

#include "metdim/errors.hpp"

namespace metdim {

int WeakOrder::size() const {
  int n = 0;
  for (const auto& c : classes) n += static_cast<int>(c.size());
  return n;
}

std::vector<int> WeakOrder::ranks(int item_count) const {
  std::vector<int> r(static_cast<std::size_t>(item_count), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int item : classes[c]) r[static_cast<std::size_t>(item)] = static_cast<int>(c);
  return r;
}

WeakOrder WeakOrder::inserted(int item, int option) const {
  WeakOrder out = *this;
  auto slot = static_cast<std::size_t>(option / 2);
  if (option % 2 == 0) out.classes.insert(out.classes.begin() + static_cast<std::ptrdiff_t>(slot), {item});
  else out.classes[slot].push_back(item);
  return out;
}

namespace {

bool weak_orders_from(const WeakOrder& partial, int next, int item_count,
                      const std::function<bool(const WeakOrder&)>& visit) {
  if (next == item_count) return visit(partial);
  for (int o = 0; o < partial.insertion_count(); ++o)
    if (!weak_orders_from(partial.inserted(next, o), next + 1, item_count, visit)) return false;
  return true;
}

void multisets(int k, int cell_count, int from, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int c = from; c < cell_count; ++c) {
    cur.push_back(c);
    multisets(k, cell_count, c, cur, out);
    cur.pop_back();
  }
}

// Walks the per-pair choices of one assignment: u order, v order, parities.
struct RawWalk {
  const std::vector<std::pair<int, int>>& sizes;
  const std::function<bool(const ChoiceProfile&)>& visit;
  ChoiceProfile profile;

  bool pair_step(std::size_t p) {
    if (p == sizes.size()) return visit(profile);
    auto [mu, mv] = sizes[p];
    return for_each_weak_order(mu, [&](const WeakOrder& uo) {
      return for_each_weak_order(mv, [&](const WeakOrder& vo) {
        const int bits = mu + mv;
        for (long long mask = 0; mask < (1LL << bits); ++mask) {
          PairChoice& pc = profile.pairs[p];
          pc.u_order = uo;
          pc.v_order = vo;
          pc.u_parity.assign(static_cast<std::size_t>(mu), 0);
          pc.v_parity.assign(static_cast<std::size_t>(mv), 0);
          for (int i = 0; i < mu; ++i) pc.u_parity[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1);
          for (int i = 0; i < mv; ++i) pc.v_parity[static_cast<std::size_t>(i)] = static_cast<int>((mask >> (mu + i)) & 1);
          if (!pair_step(p + 1)) return false;
        }
        return true;
      });
    });
  }
};

int item_index(std::vector<SymbolicItem>& items, int landmark, AffineValue value) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].landmark == landmark && items[i].value == value) return static_cast<int>(i);
  items.push_back({landmark, value});
  return static_cast<int>(items.size()) - 1;
}

// Symbolic box: bounds given as (rank, item) in each rotated coordinate.
struct SymBox {
  int u_lo = -1, u_lo_item = -1, u_hi = 1 << 29, u_hi_item = -1;
  int v_lo = -1, v_lo_item = -1, v_hi = 1 << 29, v_hi_item = -1;
};

}  // namespace

bool for_each_weak_order(int item_count, const std::function<bool(const WeakOrder&)>& visit) {
  return weak_orders_from(WeakOrder{}, 0, item_count, visit);
}

std::vector<std::vector<int>> enumerate_assignments(int k, int cell_count) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (k < 0 || cell_count < 0) throw ArgumentError("negative landmark or cell count");
  multisets(k, cell_count, 0, cur, out);
  return out;
}

ProfileFrame make_frame(const IndistinctTable& table, const std::vector<Cell>& cells, std::vector<int> assignment) {
  ProfileFrame frame;
  frame.k = static_cast<int>(assignment.size());
  for (int c : assignment) frame.cells.push_back(cells.at(static_cast<std::size_t>(c)));
  frame.assignment = std::move(assignment);
  for (int p = 0; p < table.pair_count(); ++p) {
    PairFrame pf;
    pf.pair = p;
    for (int i = 0; i < frame.k; ++i) {
      auto family = parametric_indistinct(table, frame.cells[static_cast<std::size_t>(i)], p);
      if (family.empty()) pf.trivially_empty = true;
      for (const auto& s : family) {
        SymbolicSegment seg;
        seg.landmark = i;
        seg.axis = s.axis;
        seg.u_low = item_index(pf.u_items, i, s.u_low());
        seg.u_high = item_index(pf.u_items, i, s.u_high());
        seg.v_low = item_index(pf.v_items, i, s.v_low());
        seg.v_high = item_index(pf.v_items, i, s.v_high());
        pf.segments.push_back(seg);
      }
    }
    if (pf.trivially_empty) {
      pf.u_items.clear();
      pf.v_items.clear();
      pf.segments.clear();
    }
    frame.pairs.push_back(std::move(pf));
  }
  return frame;
}

void enumerate_profiles(int k, int cell_count,
                        const std::function<std::vector<std::pair<int, int>>(const std::vector<int>&)>& pair_items,
                        const std::function<bool(const ChoiceProfile&)>& visit) {
  for (auto& assignment : enumerate_assignments(k, cell_count)) {
    auto sizes = pair_items(assignment);
    RawWalk walk{sizes, visit, ChoiceProfile{k, assignment, std::vector<PairChoice>(sizes.size())}};
    if (!walk.pair_step(0)) return;
  }
}

void enumerate_profiles(int k, int cell_count, const std::vector<std::pair<int, int>>& pair_items,
                        const std::function<bool(const ChoiceProfile&)>& visit) {
  enumerate_profiles(k, cell_count, [&](const std::vector<int>&) { return pair_items; }, visit);
}

Emptiness symbolic_empty_intersection(const PairFrame& frame, const PairChoice& choice) {
  if (frame.trivially_empty) return Emptiness::Empty;
  const auto ur = choice.u_order.ranks(static_cast<int>(frame.u_items.size()));
  const auto vr = choice.v_order.ranks(static_cast<int>(frame.v_items.size()));
  auto rank = [](const std::vector<int>& r, int item) {
    int x = r[static_cast<std::size_t>(item)];
    if (x < 0) throw ArgumentError("profile leaves a segment endpoint unordered");
    return x;
  };

  int k = 0;
  for (const auto& s : frame.segments) {
    k = std::max(k, s.landmark + 1);
    if (rank(ur, s.u_low) > rank(ur, s.u_high) || rank(vr, s.v_low) > rank(vr, s.v_high)) return Emptiness::Inconsistent;
    if (s.axis == Axis::Horizontal && rank(vr, s.v_low) != rank(vr, s.v_high)) return Emptiness::Inconsistent;
    if (s.axis == Axis::Vertical && rank(ur, s.u_low) != rank(ur, s.u_high)) return Emptiness::Inconsistent;
  }
  std::vector<std::vector<const SymbolicSegment*>> by_landmark(static_cast<std::size_t>(k));
  for (const auto& s : frame.segments) by_landmark[static_cast<std::size_t>(s.landmark)].push_back(&s);

  auto parity = [](const std::vector<int>& bits, int item) {
    int p = bits[static_cast<std::size_t>(item)];
    if (p < 0) throw ArgumentError("profile leaves a parity unset");
    return p;
  };

  // One segment per landmark; the common part is a box in rank space.
  bool found = false;
  std::function<void(std::size_t, SymBox)> pick = [&](std::size_t i, SymBox box) {
    if (found) return;
    if (i == by_landmark.size()) {
      bool u_point = box.u_lo == box.u_hi, v_point = box.v_lo == box.v_hi;
      if (!u_point || !v_point) {
        found = true;  // a strict gap spans two consecutive integers
        return;
      }
      found = parity(choice.u_parity, box.u_lo_item) == parity(choice.v_parity, box.v_lo_item);
      return;
    }
    for (const auto* s : by_landmark[i]) {
      SymBox b = box;
      int r;
      if ((r = ur[static_cast<std::size_t>(s->u_low)]) > b.u_lo) b.u_lo = r, b.u_lo_item = s->u_low;
      if ((r = ur[static_cast<std::size_t>(s->u_high)]) < b.u_hi) b.u_hi = r, b.u_hi_item = s->u_high;
      if ((r = vr[static_cast<std::size_t>(s->v_low)]) > b.v_lo) b.v_lo = r, b.v_lo_item = s->v_low;
      if ((r = vr[static_cast<std::size_t>(s->v_high)]) < b.v_hi) b.v_hi = r, b.v_hi_item = s->v_high;
      if (b.u_lo > b.u_hi || b.v_lo > b.v_hi) continue;
      pick(i + 1, b);
    }
  };
  if (k > 0) pick(0, SymBox{});
  return found ? Emptiness::NonEmpty : Emptiness::Empty;
}

FeasibilitySystem build_feasibility(const ProfileFrame& frame, const ChoiceProfile& profile) {
  FeasibilitySystem sys;
  for (const auto& cell : frame.cells) sys.add_variable(0, cell.count - 1);
  for (int i = 0; i + 1 < frame.k; ++i)
    if (frame.assignment[static_cast<std::size_t>(i)] == frame.assignment[static_cast<std::size_t>(i + 1)])
      sys.add({{i, 1}, {i + 1, -1}}, Relation::LessEqual, -1);

  // lhs - rhs <= bound, or == bound, for items x = offset + coef * t
  auto relate = [&](const SymbolicItem& x, const SymbolicItem& y, Relation rel, long long bound) {
    sys.add({{x.landmark, x.value.coef}, {y.landmark, -y.value.coef}}, rel, bound - x.value.offset + y.value.offset);
  };
  auto order = [&](const std::vector<SymbolicItem>& items, const WeakOrder& wo) {
    for (std::size_t c = 0; c < wo.classes.size(); ++c) {
      const auto& cls = wo.classes[c];
      const auto& rep = items[static_cast<std::size_t>(cls.front())];
      for (std::size_t j = 1; j < cls.size(); ++j) relate(rep, items[static_cast<std::size_t>(cls[j])], Relation::Equal, 0);
      if (c + 1 < wo.classes.size()) relate(rep, items[static_cast<std::size_t>(wo.classes[c + 1].front())], Relation::LessEqual, -1);
    }
  };
  auto parities = [&](const std::vector<SymbolicItem>& items, const std::vector<int>& bits) {
    for (std::size_t i = 0; i < bits.size() && i < items.size(); ++i)
      if (bits[i] >= 0) sys.add_affine_parity(items[i].landmark, items[i].value.coef, items[i].value.offset, bits[i]);
  };

  for (std::size_t p = 0; p < frame.pairs.size() && p < profile.pairs.size(); ++p) {
    const auto& pf = frame.pairs[p];
    const auto& pc = profile.pairs[p];
    order(pf.u_items, pc.u_order);
    order(pf.v_items, pc.v_order);
    parities(pf.u_items, pc.u_parity);
    parities(pf.v_items, pc.v_parity);
  }
  return sys;
}

}  // namespace metdim
