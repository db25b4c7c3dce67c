#include "metdim/feasibility.hpp"

#include <algorithm>
#include <sstream>

#include "metdim/errors.hpp"

namespace metdim {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

int mod2(long long x) { return static_cast<int>(((x % 2) + 2) % 2); }

struct Box {
  std::vector<long long> lo;
  std::vector<long long> hi;
  std::vector<int> residue;  // -1 when unconstrained

  bool snap(std::size_t v) {
    if (residue[v] < 0) return lo[v] <= hi[v];
    if (mod2(lo[v]) != residue[v]) ++lo[v];
    if (mod2(hi[v]) != residue[v]) --hi[v];
    return lo[v] <= hi[v];
  }
};

// Tightens `box` against every constraint until nothing changes. False on wipe-out.
bool propagate(const FeasibilitySystem& sys, Box& box, FeasibilityStats* stats) {
  const std::size_t n = box.lo.size();
  for (std::size_t v = 0; v < n; ++v)
    if (!box.snap(v)) return false;
  bool changed = true;
  while (changed) {
    changed = false;
    if (stats) ++stats->propagations;
    for (const auto& c : sys.constraints) {
      for (int sense = 0; sense < (c.relation == Relation::Equal ? 2 : 1); ++sense) {
        // sense 1 handles the >= half of an equality as -terms <= -rhs
        long long sign = sense == 0 ? 1 : -1;
        long long rhs = sign * c.rhs;
        for (std::size_t i = 0; i < c.terms.size(); ++i) {
          long long rest_min = 0;
          for (std::size_t j = 0; j < c.terms.size(); ++j) {
            if (j == i) continue;
            long long b = sign * c.terms[j].coef;
            auto y = static_cast<std::size_t>(c.terms[j].var);
            rest_min += b > 0 ? b * box.lo[y] : b * box.hi[y];
          }
          long long a = sign * c.terms[i].coef;
          auto x = static_cast<std::size_t>(c.terms[i].var);
          if (a > 0) {
            long long bound = floor_div(rhs - rest_min, a);
            if (bound < box.hi[x]) {
              box.hi[x] = bound;
              changed = true;
            }
          } else {
            long long bound = ceil_div(rhs - rest_min, a);
            if (bound > box.lo[x]) {
              box.lo[x] = bound;
              changed = true;
            }
          }
          if (!box.snap(x)) return false;
        }
      }
    }
  }
  return true;
}

bool search(const FeasibilitySystem& sys, Box box, FeasibilityStats* stats, std::vector<long long>& out) {
  if (stats) ++stats->search_nodes;
  if (!propagate(sys, box, stats)) return false;
  const std::size_t n = box.lo.size();
  std::size_t pick = n;
  long long best = 0;
  for (std::size_t v = 0; v < n; ++v) {
    long long width = box.hi[v] - box.lo[v];
    if (width > 0 && (pick == n || width < best)) {
      pick = v;
      best = width;
    }
  }
  if (pick == n) {
    out = box.lo;
    return sys.satisfied_by(out);
  }
  long long step = box.residue[pick] >= 0 ? 2 : 1;
  for (long long value = box.lo[pick]; value <= box.hi[pick]; value += step) {
    Box next = box;
    next.lo[pick] = next.hi[pick] = value;
    if (search(sys, std::move(next), stats, out)) return true;
  }
  return false;
}

}  // namespace

int FeasibilitySystem::add_variable(long long lo, long long hi) {
  domains.push_back({lo, hi});
  return variable_count() - 1;
}

void FeasibilitySystem::add(std::vector<LinearTerm> terms, Relation relation, long long rhs) {
  std::vector<LinearTerm> merged;
  for (const auto& t : terms) {
    if (t.var < 0 || t.var >= variable_count()) throw ArgumentError("constraint names an unknown variable");
    auto it = std::find_if(merged.begin(), merged.end(), [&](const LinearTerm& m) { return m.var == t.var; });
    if (it == merged.end()) merged.push_back(t);
    else it->coef += t.coef;
  }
  std::erase_if(merged, [](const LinearTerm& t) { return t.coef == 0; });
  if (merged.size() > 2) throw ArgumentError("constraints may involve at most two variables");
  if (merged.empty()) {
    bool ok = relation == Relation::Equal ? rhs == 0 : 0 <= rhs;
    if (!ok) contradiction = true;
    return;
  }
  constraints.push_back({std::move(merged), relation, rhs});
}

void FeasibilitySystem::add_parity(int var, int residue) {
  if (var < 0 || var >= variable_count()) throw ArgumentError("parity names an unknown variable");
  parities.push_back({var, mod2(residue)});
}

void FeasibilitySystem::add_affine_parity(int var, long long coef, long long offset, int parity) {
  if (mod2(coef) == 0) {
    if (mod2(offset) != mod2(parity)) contradiction = true;
    return;
  }
  add_parity(var, mod2(parity - offset));
}

bool FeasibilitySystem::satisfied_by(const std::vector<long long>& values) const {
  if (contradiction || values.size() != domains.size()) return false;
  for (std::size_t v = 0; v < values.size(); ++v)
    if (values[v] < domains[v].lo || values[v] > domains[v].hi) return false;
  for (const auto& p : parities)
    if (mod2(values[static_cast<std::size_t>(p.var)]) != p.residue) return false;
  for (const auto& c : constraints) {
    long long lhs = 0;
    for (const auto& t : c.terms) lhs += t.coef * values[static_cast<std::size_t>(t.var)];
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs > c.rhs) return false;
  }
  return true;
}

std::string FeasibilitySystem::describe() const {
  std::ostringstream out;
  for (std::size_t v = 0; v < domains.size(); ++v)
    out << domains[v].lo << " <= t" << v << " <= " << domains[v].hi << '\n';
  for (const auto& c : constraints) {
    for (std::size_t i = 0; i < c.terms.size(); ++i)
      out << (i ? " + " : "") << c.terms[i].coef << "*t" << c.terms[i].var;
    out << (c.relation == Relation::Equal ? " = " : " <= ") << c.rhs << '\n';
  }
  for (const auto& p : parities) out << "t" << p.var << " = " << p.residue << " (mod 2)\n";
  if (contradiction) out << "false\n";
  return out.str();
}

std::optional<std::vector<long long>> integer_feasibility(const FeasibilitySystem& system, FeasibilityStats* stats) {
  if (system.contradiction) return std::nullopt;
  const std::size_t n = system.domains.size();
  Box box{std::vector<long long>(n), std::vector<long long>(n), std::vector<int>(n, -1)};
  for (std::size_t v = 0; v < n; ++v) {
    box.lo[v] = system.domains[v].lo;
    box.hi[v] = system.domains[v].hi;
  }
  for (const auto& p : system.parities) {
    auto v = static_cast<std::size_t>(p.var);
    if (box.residue[v] >= 0 && box.residue[v] != p.residue) return std::nullopt;
    box.residue[v] = p.residue;
  }
  std::vector<long long> out;
  if (search(system, std::move(box), stats, out)) return out;
  return std::nullopt;
}

}  // namespace metdim
