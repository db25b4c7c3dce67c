#include <algorithm>

#include "metdim/geometry.hpp"

namespace metdim {

namespace {

struct Crossing {
  int param;  // position of the contact along the owning segment
  int other;
};

// Continuous contact between two rotated segments. Returns the contact position along
// `x` when they touch.
std::optional<int> contact(const AxisSegment& x, const AxisSegment& y) {
  if (x.axis == y.axis) {
    if (x.fixed != y.fixed) return std::nullopt;
    int lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
    if (lo > hi) return std::nullopt;
    return lo;
  }
  if (y.fixed < x.lo || y.fixed > x.hi || x.fixed < y.lo || x.fixed > y.hi) return std::nullopt;
  return y.fixed;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const std::vector<AxisSegment>& segs) : segs_(segs), groups_(segs.size()) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
      std::vector<Crossing> hits;
      for (std::size_t j = 0; j < segs.size(); ++j)
        if (i != j)
          if (auto at = contact(segs[i], segs[j])) hits.push_back({*at, static_cast<int>(j)});
      std::sort(hits.begin(), hits.end(), [](const Crossing& p, const Crossing& q) { return p.param < q.param; });
      // ties (same contact position) form one unordered group
      for (std::size_t k = 0; k < hits.size(); ++k) {
        if (k == 0 || hits[k].param != hits[k - 1].param) groups_[i].emplace_back();
        groups_[i].back().push_back(hits[k].other);
      }
    }
  }

  StructureFingerprint fingerprint() {
    std::vector<bool> seen(segs_.size(), false);
    std::vector<std::vector<int>> components;
    for (std::size_t s = 0; s < segs_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> comp{static_cast<int>(s)};
      seen[s] = true;
      for (std::size_t h = 0; h < comp.size(); ++h)
        for (const auto& grp : groups_[static_cast<std::size_t>(comp[h])])
          for (int o : grp)
            if (!seen[static_cast<std::size_t>(o)]) {
              seen[static_cast<std::size_t>(o)] = true;
              comp.push_back(o);
            }
      std::optional<std::vector<int>> best;
      for (int start : comp) {
        State st;
        st.label.assign(segs_.size(), -1);
        st.label[static_cast<std::size_t>(start)] = 0;
        st.order.push_back(start);
        expand(st, 0, 0, best);
      }
      components.push_back(std::move(*best));
    }
    std::sort(components.begin(), components.end());
    StructureFingerprint fp;
    fp.code.push_back(static_cast<int>(components.size()));
    for (const auto& c : components) {
      fp.code.push_back(static_cast<int>(c.size()));
      fp.code.insert(fp.code.end(), c.begin(), c.end());
    }
    return fp;
  }

 private:
  struct State {
    std::vector<int> label;
    std::vector<int> order;
    std::vector<int> code;
  };

  // Breadth-first labelling from a fixed start; tied neighbours are tried in every order.
  void expand(State st, std::size_t head, std::size_t group, std::optional<std::vector<int>>& best) {
    if (head == st.order.size()) {
      if (!best || st.code < *best) best = st.code;
      return;
    }
    int x = st.order[head];
    const auto& groups = groups_[static_cast<std::size_t>(x)];
    if (group == 0) {
      st.code.push_back(segs_[static_cast<std::size_t>(x)].axis == Axis::Horizontal ? 1 : 0);
      st.code.push_back(static_cast<int>(groups.size()));
    }
    if (group == groups.size()) {
      expand(std::move(st), head + 1, 0, best);
      return;
    }
    std::vector<int> fresh;
    for (int o : groups[group])
      if (st.label[static_cast<std::size_t>(o)] < 0) fresh.push_back(o);
    std::sort(fresh.begin(), fresh.end());
    do {
      State next = st;
      for (int o : fresh) {
        next.label[static_cast<std::size_t>(o)] = static_cast<int>(next.order.size());
        next.order.push_back(o);
      }
      std::vector<int> labels;
      for (int o : groups[group]) labels.push_back(next.label[static_cast<std::size_t>(o)]);
      std::sort(labels.begin(), labels.end());
      next.code.push_back(static_cast<int>(labels.size()));
      next.code.insert(next.code.end(), labels.begin(), labels.end());
      expand(std::move(next), head, group + 1, best);
    } while (std::next_permutation(fresh.begin(), fresh.end()));
  }

  const std::vector<AxisSegment>& segs_;
  std::vector<std::vector<std::vector<int>>> groups_;
};

}  // namespace

StructureFingerprint combinatorial_structure(const std::vector<AxisSegment>& segments) {
  return Canonicalizer(segments).fingerprint();
}

StructureFingerprint combinatorial_structure(const IndistinctSet& set) {
  return combinatorial_structure(to_axis_segments(set));
}

}  // namespace metdim
