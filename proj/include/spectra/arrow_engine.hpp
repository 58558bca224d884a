#ifndef SPECTRA_ARROW_ENGINE_HPP
#define SPECTRA_ARROW_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectra/linear_form.hpp"

namespace spectra {

// Deduction over statements "U(t) maps span{v_s : s in S} into
// span{v_b : b in T}", where v_a = U(a) v0 runs over an orthonormal basis
// indexed by a ground set A. Subsets of A are bitmasks over positions in A.
using IndexMask = std::uint32_t;

inline constexpr std::size_t kMaxGroundSet = 12;

struct ArrowFact {
  IndexMask source = 0;
  LinearForm move;
  IndexMask target = 0;
};

// One tightening of a target, with the derivations it relied on.
struct Derivation {
  std::string rule;
  LinearForm move;
  IndexMask source = 0;
  IndexMask target = 0;
  std::vector<std::int64_t> premises;
};

struct PermutationAction {
  LinearForm move;
  std::vector<std::int64_t> sigma;  // v_i -> v_{sigma[i]}

  bool is_identity() const;
};

struct ClosureOptions {
  // Shuffle the order in which rules and moves are visited inside each
  // saturation pass. The closure does not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

class Session {
 public:
  // Seeds the trivial facts S -> A, the identity at move 0, and the base
  // facts {x} -> {y} at move y - x whenever y - x is one of the moves.
  // Throws InvalidInput for |A| < 2, |A| > kMaxGroundSet, repeated
  // elements, or an empty move list.
  Session(std::vector<LinearForm> ground_set, std::vector<LinearForm> moves, int round_budget);

  const std::vector<LinearForm>& ground_set() const noexcept { return ground_; }
  const std::vector<LinearForm>& moves() const noexcept { return moves_; }
  const std::vector<LinearForm>& generators() const noexcept { return generators_; }
  int round_budget() const noexcept { return round_budget_; }
  int rounds_used() const noexcept { return rounds_used_; }
  // True once a saturation ended with no new move admitted.
  bool reached_fixpoint() const noexcept { return fixpoint_; }

  std::optional<std::size_t> move_index(const LinearForm& move) const;
  // Tightest known target of `source` under `move`; nullopt for unknown moves.
  std::optional<IndexMask> target(IndexMask source, const LinearForm& move) const;
  bool holds(IndexMask source, const LinearForm& move, IndexMask target) const;

  // Facts with a target smaller than A (move 0 excluded), ordered by move
  // then source.
  std::vector<ArrowFact> facts() const;
  std::size_t fact_count() const;
  const std::vector<Derivation>& derivations() const noexcept { return log_; }

  IndexMask full_mask() const noexcept { return full_; }
  IndexMask mask_of(const std::vector<LinearForm>& elements) const;
  std::vector<LinearForm> elements_of(IndexMask mask) const;
  std::string describe(IndexMask mask) const;

  // Runs the rules to a fixpoint, admitting sums of moves between rounds
  // while the round budget lasts. Throws Inconsistent (with a trace) when a
  // source is forced into a span of smaller dimension.
  void close(const ClosureOptions& options = {});

 private:
  struct MoveTable {
    std::vector<IndexMask> target;  // by source mask
    std::vector<std::int64_t> why;  // derivation index, -1 for trivial
  };

  std::size_t add_move(const LinearForm& move);
  void seed_move(std::size_t m);
  bool tighten(std::size_t m, IndexMask source, IndexMask target, const char* rule,
               std::vector<std::int64_t> premises);
  std::int64_t why(std::size_t m, IndexMask source) const { return tables_[m].why[source]; }
  bool saturate(const ClosureOptions& options, std::uint64_t pass_seed);
  bool apply_structural(std::size_t m);
  bool apply_complement(std::size_t m);
  bool apply_cancellation(std::size_t m);
  bool apply_inverse(std::size_t m);
  bool apply_composition(std::size_t s, std::size_t t);
  bool admit_sums();
  [[noreturn]] void fail(std::int64_t derivation) const;

  std::vector<LinearForm> ground_;
  std::vector<LinearForm> generators_;
  std::vector<LinearForm> moves_;
  std::map<LinearForm, std::size_t> move_lookup_;
  std::vector<MoveTable> tables_;
  std::vector<Derivation> log_;
  IndexMask full_ = 0;
  int round_budget_ = 0;
  int rounds_used_ = 0;
  bool fixpoint_ = false;
};

// All pairwise differences y - x (x != y), sorted.
std::vector<LinearForm> pairwise_differences(const std::vector<LinearForm>& ground_set);

Session new_session(std::vector<LinearForm> ground_set, std::vector<LinearForm> moves, int round_budget);

// Closes a copy of the session.
Session close(Session session, const ClosureOptions& options = {});

// The permutation induced on singletons, when every {a} has a singleton
// target under `move`. Throws Inconsistent if two sources share a target.
std::optional<PermutationAction> extract_permutation(const Session& session, const LinearForm& move);

enum class Obstruction { consistent, inconsistent };

const char* to_string(Obstruction o);

// Two non-trivially permuting times must have a rational ratio. Symbols in
// the moves are treated as irrational. Throws InvalidInput on a zero move.
Obstruction rationality_obstruction(const PermutationAction& p1, const PermutationAction& p2);

}  // namespace spectra

#endif  // SPECTRA_ARROW_ENGINE_HPP
