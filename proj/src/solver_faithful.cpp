#include <algorithm>

#include "metdim/errors.hpp"
#include "metdim/profiles.hpp"
#include "metdim/solver.hpp"

namespace metdim {

namespace {

// Depth-first walk over one assignment's choice space. Every partial profile is
// checked for integer feasibility, which only ever discards unrealizable branches.
class FaithfulSearch {
 public:
  FaithfulSearch(ProfileFrame frame, int k, BudgetMeter& meter, SolveStats& stats)
      : frame_(std::move(frame)), k_(k), meter_(meter), stats_(stats) {
    profile_.k = frame_.k;
    profile_.assignment = frame_.assignment;
    profile_.pairs.resize(frame_.pairs.size());
    for (std::size_t p = 0; p < frame_.pairs.size(); ++p) {
      const auto& pf = frame_.pairs[p];
      auto& pc = profile_.pairs[p];
      pc.u_parity.assign(pf.u_items.size(), -1);
      pc.v_parity.assign(pf.v_items.size(), -1);
      if (pf.trivially_empty) continue;
      int pi = static_cast<int>(p);
      for (std::size_t i = 0; i < pf.u_items.size(); ++i) steps_.push_back({Step::UOrder, pi, static_cast<int>(i)});
      for (std::size_t i = 0; i < pf.v_items.size(); ++i) steps_.push_back({Step::VOrder, pi, static_cast<int>(i)});
      for (std::size_t i = 0; i < pf.u_items.size(); ++i) steps_.push_back({Step::UParity, pi, static_cast<int>(i)});
      for (std::size_t i = 0; i < pf.v_items.size(); ++i) steps_.push_back({Step::VParity, pi, static_cast<int>(i)});
      steps_.push_back({Step::Check, pi, 0});
    }
  }

  std::optional<std::vector<long long>> run() {
    if (!feasible()) return std::nullopt;
    if (walk(0)) return solution_;
    return std::nullopt;
  }

 private:
  struct Step {
    enum Kind { UOrder, VOrder, UParity, VParity, Check } kind;
    int pair;
    int item;
  };

  bool feasible() {
    ++stats_.feasibility_calls;
    auto sol = integer_feasibility(build_feasibility(frame_, profile_));
    if (!sol) return false;
    solution_ = std::move(*sol);
    return true;
  }

  bool walk(std::size_t s) {
    if (!meter_.tick()) throw ResourceError("faithful search budget exhausted", k_, 0);
    if (s == steps_.size()) {
      ++stats_.profiles;
      return feasible();
    }
    const Step& st = steps_[s];
    auto& pc = profile_.pairs[static_cast<std::size_t>(st.pair)];
    switch (st.kind) {
      case Step::UOrder:
      case Step::VOrder: {
        WeakOrder& wo = st.kind == Step::UOrder ? pc.u_order : pc.v_order;
        const WeakOrder saved = wo;
        for (int o = 0; o < saved.insertion_count(); ++o) {
          wo = saved.inserted(st.item, o);
          if (feasible() && walk(s + 1)) return true;
        }
        wo = saved;
        return false;
      }
      case Step::UParity:
      case Step::VParity: {
        auto& bit = (st.kind == Step::UParity ? pc.u_parity : pc.v_parity)[static_cast<std::size_t>(st.item)];
        for (int parity = 0; parity < 2; ++parity) {
          bit = parity;
          if (feasible() && walk(s + 1)) return true;
        }
        bit = -1;
        return false;
      }
      case Step::Check:
        if (symbolic_empty_intersection(frame_.pairs[static_cast<std::size_t>(st.pair)], pc) != Emptiness::Empty) return false;
        return walk(s + 1);
    }
    return false;
  }

  ProfileFrame frame_;
  int k_;
  BudgetMeter& meter_;
  SolveStats& stats_;
  ChoiceProfile profile_;
  std::vector<Step> steps_;
  std::vector<long long> solution_;
};

}  // namespace

std::optional<std::vector<Vertex>> solve_faithful(const FptInstance& inst, int k, BudgetMeter& meter, SolveStats& stats) {
  const int cells = static_cast<int>(inst.cells().size());
  for (auto& assignment : enumerate_assignments(k, cells)) {
    // more landmarks on a cell than it has positions can never be placed
    bool fits = true;
    for (std::size_t i = 0; i < assignment.size() && fits; ++i) {
      auto same = std::count(assignment.begin(), assignment.end(), assignment[i]);
      fits = same <= inst.cells()[static_cast<std::size_t>(assignment[i])].count;
    }
    if (!fits) continue;
    FaithfulSearch search(make_frame(inst.table(), inst.cells(), assignment), k, meter, stats);
    if (auto sol = search.run()) {
      std::vector<Vertex> witness;
      for (std::size_t i = 0; i < assignment.size(); ++i)
        witness.push_back(inst.vertex_at(assignment[i], static_cast<int>((*sol)[i])));
      std::sort(witness.begin(), witness.end());
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace metdim
