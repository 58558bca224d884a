#include "spectra/arrow_engine.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

int popcount(IndexMask m) { return std::popcount(m); }

}  // namespace

bool PermutationAction::is_identity() const {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] != std::int64_t(i)) return false;
  }
  return true;
}

Session::Session(std::vector<LinearForm> ground_set, std::vector<LinearForm> moves, int round_budget)
    : ground_(std::move(ground_set)), round_budget_(round_budget) {
  if (ground_.size() < 2) throw InvalidInput("ground_set_too_small", "arrow session needs |A| >= 2");
  if (ground_.size() > kMaxGroundSet) {
    throw InvalidInput("ground_set_too_large",
                       "arrow session supports at most " + std::to_string(kMaxGroundSet) + " elements");
  }
  std::vector<LinearForm> sorted = ground_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("repeated_element", "ground set has a repeated element");
  }
  if (moves.empty()) throw InvalidInput("no_moves", "arrow session needs at least one move");
  if (round_budget_ < 0) throw InvalidInput("bad_budget", "round budget must be >= 0");

  full_ = IndexMask((1u << ground_.size()) - 1);
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  generators_ = moves;

  add_move(LinearForm(0));
  for (const auto& m : generators_) add_move(m);
}

std::size_t Session::add_move(const LinearForm& move) {
  if (auto it = move_lookup_.find(move); it != move_lookup_.end()) return it->second;
  const std::size_t m = moves_.size();
  moves_.push_back(move);
  move_lookup_.emplace(move, m);
  MoveTable table;
  table.target.assign(std::size_t(full_) + 1, full_);
  table.target[0] = 0;
  table.why.assign(std::size_t(full_) + 1, -1);
  tables_.push_back(std::move(table));
  seed_move(m);
  return m;
}

void Session::seed_move(std::size_t m) {
  const LinearForm& move = moves_[m];
  if (move.is_zero()) {
    for (IndexMask s = 1; s <= full_; ++s) tighten(m, s, s, "identity", {});
    return;
  }
  // U(y - x) v_x = v_y
  for (std::size_t x = 0; x < ground_.size(); ++x) {
    for (std::size_t y = 0; y < ground_.size(); ++y) {
      if (x != y && ground_[y] - ground_[x] == move) {
        tighten(m, IndexMask(1u << x), IndexMask(1u << y), "base", {});
      }
    }
  }
}

std::optional<std::size_t> Session::move_index(const LinearForm& move) const {
  auto it = move_lookup_.find(move);
  if (it == move_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<IndexMask> Session::target(IndexMask source, const LinearForm& move) const {
  auto m = move_index(move);
  if (!m || source == 0 || source > full_) return std::nullopt;
  return tables_[*m].target[source];
}

bool Session::holds(IndexMask source, const LinearForm& move, IndexMask target_mask) const {
  auto t = target(source, move);
  return t && (*t & ~target_mask) == 0;
}

std::vector<ArrowFact> Session::facts() const {
  std::vector<std::size_t> order(moves_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return moves_[a] < moves_[b]; });
  std::vector<ArrowFact> out;
  for (std::size_t m : order) {
    if (moves_[m].is_zero()) continue;
    for (IndexMask s = 1; s <= full_; ++s) {
      const IndexMask t = tables_[m].target[s];
      if (t != full_) out.push_back({s, moves_[m], t});
    }
  }
  return out;
}

std::size_t Session::fact_count() const { return facts().size(); }

IndexMask Session::mask_of(const std::vector<LinearForm>& elements) const {
  IndexMask mask = 0;
  for (const auto& e : elements) {
    auto it = std::find(ground_.begin(), ground_.end(), e);
    if (it == ground_.end()) throw InvalidInput("unknown_element", e.str() + " is not in the ground set");
    mask |= IndexMask(1u << (it - ground_.begin()));
  }
  return mask;
}

std::vector<LinearForm> Session::elements_of(IndexMask mask) const {
  std::vector<LinearForm> out;
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (mask & (1u << i)) out.push_back(ground_[i]);
  }
  return out;
}

std::string Session::describe(IndexMask mask) const {
  std::string out = "{";
  bool first = true;
  for (const auto& e : elements_of(mask)) {
    if (!first) out += ", ";
    out += e.str();
    first = false;
  }
  return out + "}";
}

bool Session::tighten(std::size_t m, IndexMask source, IndexMask target_mask, const char* rule,
                      std::vector<std::int64_t> premises) {
  MoveTable& table = tables_[m];
  const IndexMask next = table.target[source] & target_mask;
  if (next == table.target[source]) return false;
  // The new target is the intersection with what was known before.
  if (table.why[source] >= 0) premises.push_back(table.why[source]);
  std::sort(premises.begin(), premises.end());
  premises.erase(std::unique(premises.begin(), premises.end()), premises.end());
  premises.erase(std::remove(premises.begin(), premises.end(), -1), premises.end());
  log_.push_back({rule, moves_[m], source, next, std::move(premises)});
  table.target[source] = next;
  table.why[source] = std::int64_t(log_.size()) - 1;
  if (popcount(next) < popcount(source)) fail(table.why[source]);
  return true;
}

void Session::fail(std::int64_t derivation) const {
  std::set<std::int64_t> seen;
  std::vector<std::int64_t> stack{derivation};
  while (!stack.empty()) {
    auto d = stack.back();
    stack.pop_back();
    if (!seen.insert(d).second) continue;
    for (auto p : log_[std::size_t(d)].premises) stack.push_back(p);
  }
  std::vector<std::string> trace;
  for (auto d : seen) {
    const Derivation& step = log_[std::size_t(d)];
    std::ostringstream os;
    os << "#" << d << " " << step.rule << " [t=" << step.move.str() << "] " << describe(step.source)
       << " -> " << describe(step.target);
    if (!step.premises.empty()) {
      os << " from";
      for (auto p : step.premises) os << " #" << p;
    }
    trace.push_back(os.str());
  }
  const Derivation& last = log_[std::size_t(derivation)];
  throw Inconsistent("U(" + last.move.str() + ") would map " + describe(last.source) +
                         " into the smaller span " + describe(last.target),
                     std::move(trace));
}

bool Session::apply_structural(std::size_t m) {
  bool changed = false;
  const std::size_t n = ground_.size();
  // Weakening: a subset of a source maps into the same target. Supersets
  // have larger mask values, so a descending sweep propagates in one pass.
  for (IndexMask s = full_; s >= 1; --s) {
    for (std::size_t x = 0; x < n; ++x) {
      const IndexMask bigger = s | IndexMask(1u << x);
      if (bigger == s) continue;
      changed |= tighten(m, s, tables_[m].target[bigger], "weaken", {why(m, bigger)});
    }
  }
  // Union: span(S1 u S2) maps into span(T(S1) u T(S2)).
  for (IndexMask s = 1; s <= full_; ++s) {
    if (popcount(s) < 2) continue;
    for (IndexMask part = (s - 1) & s; part > 0; part = (part - 1) & s) {
      const IndexMask rest = s & ~part;
      if (part < rest) continue;
      const IndexMask u = tables_[m].target[part] | tables_[m].target[rest];
      changed |= tighten(m, s, u, "union", {why(m, part), why(m, rest)});
    }
  }
  return changed;
}

bool Session::apply_complement(std::size_t m) {
  // R1: a unitary that maps span S onto span T maps the orthogonal
  // complement of S onto that of T.
  bool changed = false;
  for (IndexMask s = 1; s < full_; ++s) {
    const IndexMask t = tables_[m].target[s];
    if (popcount(t) != popcount(s)) continue;
    changed |= tighten(m, full_ & ~s, full_ & ~t, "R1 complement", {why(m, s)});
  }
  return changed;
}

bool Session::apply_cancellation(std::size_t m) {
  // R2: if S' maps onto C and S is disjoint from S', then S maps into the
  // orthogonal complement of C.
  bool changed = false;
  for (IndexMask other = 1; other < full_; ++other) {
    const IndexMask c = tables_[m].target[other];
    if (popcount(c) != popcount(other)) continue;
    const IndexMask free = full_ & ~other;
    for (IndexMask s = free; s > 0; s = (s - 1) & free) {
      if (tables_[m].target[s] & c) {
        changed |= tighten(m, s, full_ & ~c, "R2 cancellation", {why(m, other), why(m, s)});
      }
    }
  }
  return changed;
}

bool Session::apply_inverse(std::size_t m) {
  // U(-t) undoes U(t): if S maps onto T under t, T maps onto S under -t.
  auto inv = move_index(-moves_[m]);
  if (!inv) return false;
  bool changed = false;
  for (IndexMask s = 1; s <= full_; ++s) {
    const IndexMask t = tables_[m].target[s];
    if (popcount(t) != popcount(s)) continue;
    changed |= tighten(*inv, t, s, "inverse", {why(m, s)});
  }
  return changed;
}

bool Session::apply_composition(std::size_t s_idx, std::size_t t_idx) {
  // R3: S -s-> T and T -t-> R give S -(s+t)-> R.
  auto u = move_index(moves_[s_idx] + moves_[t_idx]);
  if (!u) return false;
  bool changed = false;
  for (IndexMask s = 1; s <= full_; ++s) {
    const IndexMask mid = tables_[s_idx].target[s];
    if (mid == full_) continue;
    const IndexMask r = tables_[t_idx].target[mid];
    changed |= tighten(*u, s, r, "R3 composition", {why(s_idx, s), why(t_idx, mid)});
  }
  return changed;
}

bool Session::saturate(const ClosureOptions& options, std::uint64_t pass_seed) {
  struct Task {
    int kind;
    std::size_t a;
    std::size_t b;
  };
  bool any = false;
  for (std::uint64_t pass = 0;; ++pass) {
    std::vector<Task> tasks;
    for (std::size_t m = 0; m < moves_.size(); ++m) {
      for (int kind = 0; kind < 4; ++kind) tasks.push_back({kind, m, 0});
      for (std::size_t t = 0; t < moves_.size(); ++t) {
        if (move_index(moves_[m] + moves_[t])) tasks.push_back({4, m, t});
      }
    }
    if (options.shuffle_seed) {
      std::mt19937_64 rng(*options.shuffle_seed ^ (pass_seed * 0x9e3779b97f4a7c15ULL) ^ pass);
      std::shuffle(tasks.begin(), tasks.end(), rng);
    }
    bool changed = false;
    for (const Task& task : tasks) {
      switch (task.kind) {
        case 0: changed |= apply_structural(task.a); break;
        case 1: changed |= apply_complement(task.a); break;
        case 2: changed |= apply_cancellation(task.a); break;
        case 3: changed |= apply_inverse(task.a); break;
        default: changed |= apply_composition(task.a, task.b); break;
      }
    }
    if (!changed) return any;
    any = true;
  }
}

bool Session::admit_sums() {
  std::vector<LinearForm> fresh;
  for (std::size_t m = 0; m < moves_.size(); ++m) {
    for (const auto& g : generators_) {
      const LinearForm sum = moves_[m] + g;
      if (move_index(sum)) continue;
      const std::size_t gi = *move_index(g);
      bool useful = false;
      for (IndexMask s = 1; s <= full_ && !useful; ++s) {
        const IndexMask mid = tables_[m].target[s];
        useful = mid != full_ && tables_[gi].target[mid] != full_;
      }
      if (useful) fresh.push_back(sum);
    }
  }
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  for (const auto& f : fresh) add_move(f);
  return !fresh.empty();
}

void Session::close(const ClosureOptions& options) {
  fixpoint_ = false;
  for (;;) {
    saturate(options, std::uint64_t(rounds_used_));
    if (rounds_used_ >= round_budget_) break;
    ++rounds_used_;
    if (!admit_sums()) {
      fixpoint_ = true;
      return;
    }
  }
  // Budget spent: report whether another round would have grown the move set.
  Session probe = *this;
  fixpoint_ = !probe.admit_sums();
}

std::vector<LinearForm> pairwise_differences(const std::vector<LinearForm>& ground_set) {
  std::vector<LinearForm> out;
  for (const auto& x : ground_set)
    for (const auto& y : ground_set)
      if (!(x == y)) out.push_back(y - x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Session new_session(std::vector<LinearForm> ground_set, std::vector<LinearForm> moves, int round_budget) {
  return Session(std::move(ground_set), std::move(moves), round_budget);
}

Session close(Session session, const ClosureOptions& options) {
  session.close(options);
  return session;
}

std::optional<PermutationAction> extract_permutation(const Session& session, const LinearForm& move) {
  if (!session.move_index(move)) return std::nullopt;
  const std::size_t n = session.ground_set().size();
  PermutationAction action{move, std::vector<std::int64_t>(n, -1)};
  IndexMask hit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const IndexMask t = *session.target(IndexMask(1u << i), move);
    if (std::popcount(t) != 1) return std::nullopt;
    if (hit & t) {
      throw Inconsistent("two basis vectors are sent to " + session.describe(t) + " by U(" +
                             move.str() + ")",
                         {});
    }
    hit |= t;
    action.sigma[i] = std::countr_zero(t);
  }
  return action;
}

const char* to_string(Obstruction o) {
  return o == Obstruction::consistent ? "consistent" : "inconsistent";
}

Obstruction rationality_obstruction(const PermutationAction& p1, const PermutationAction& p2) {
  if (p1.move.is_zero() || p2.move.is_zero()) {
    throw InvalidInput("zero_move", "rationality obstruction needs nonzero moves");
  }
  if (p1.is_identity() && p2.is_identity()) return Obstruction::consistent;
  return p1.move.ratio_to(p2.move) ? Obstruction::consistent : Obstruction::inconsistent;
}

}  // namespace spectra
