#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace leo {

enum class Source { Init, Explore, Exploit, Baseline };

const char* to_string(Source s);

/// One decision vector with its objective value(s) and provenance.
struct Candidate {
  std::vector<double> x;
  std::vector<double> f;        // 1 entry for single-objective, >=2 for MOO
  int iteration_born = 0;
  Source source = Source::Init;

  bool evaluated() const { return !f.empty(); }
  double loss() const { return f.at(0); }
};

enum class PoolRole { Explore, Exploit };

/// Ordered population with a fixed capacity. Between iterations a Pool is an
/// immutable snapshot; all operations below return new pools.
struct Pool {
  std::vector<Candidate> members;
  std::size_t capacity = 0;
  PoolRole role = PoolRole::Explore;

  const Candidate& best() const;
  double best_loss() const { return best().loss(); }
  double mean_loss() const;
};

/// Problem description: dimensionality, bounds, evaluator, optional gradient
/// and known optimum used by test oracles.
///
/// `lower`/`upper` are the true domain (entries may be +-infinity). For
/// unbounded problems `init_lower`/`init_upper` give the finite box used for
/// random initialization and for phrasing bounds inside prompts; evaluation
/// itself is not restricted to that box. For bounded problems the two pairs
/// coincide.
struct ObjectiveSpec {
  std::string name;
  std::size_t num_vars = 0;
  std::size_t num_objectives = 1;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> init_lower;
  std::vector<double> init_upper;

  struct KnownMinimum {
    double f_star = 0.0;
    std::vector<std::vector<double>> minimizers;
  };
  std::optional<KnownMinimum> known_minimum;

  // Evaluators must be pure and reentrant; batches may be evaluated in
  // parallel by callers.
  std::function<std::vector<double>(const std::vector<double>&)> evaluate;
  std::function<std::vector<double>(const std::vector<double>&)> gradient;  // optional

  bool bounded_dim(std::size_t i) const;
  void validate() const;
};

/// Evaluation budget with an exact call counter.
struct Budget {
  std::size_t max_iterations = 0;
  std::size_t max_evaluations = 0;  // 0 = no evaluation gate
  std::size_t evaluations_used = 0;

  bool evaluation_gated() const { return max_evaluations > 0; }
  std::size_t remaining_evaluations() const;
  bool exhausted() const { return evaluation_gated() && remaining_evaluations() == 0; }
};

// ---- pool algebra -----------------------------------------------------------

/// Appends new candidates to the pool without truncation (Pool grows to
/// old size + new size). All candidates must be evaluated and of matching
/// dimension.
Pool update_population(const Pool& pool, const std::vector<Candidate>& new_candidates);

/// Sorts ascending by f[0] (ties: iteration_born, then insertion order) and
/// keeps the best `capacity` members. Requires at least `capacity` members.
Pool sort_and_truncate(const Pool& pool);

/// Replaces the `num_port` worst exploit members with the `num_port` best
/// explore members. Pools are sorted internally first; the explore pool is
/// left untouched; the exploit pool keeps its size.
///
/// Replacement is unconditional, mirroring the ported-solutions rule even
/// when the incoming members are worse. `only_if_better` switches to pairwise
/// conditional replacement (i-th best incomer vs i-th worst incumbent).
Pool port_and_filter(const Pool& explore, const Pool& exploit, std::size_t num_port,
                     bool only_if_better = false);

/// Projects each component into [lower[i], upper[i]]; infinite bounds pass
/// values through unchanged.
std::vector<double> clamp_to_bounds(const std::vector<double>& x, const ObjectiveSpec& spec);

/// Evaluates a decision vector via spec.evaluate, charging the budget and
/// rejecting non-finite objective values.
Candidate evaluate_candidate(std::vector<double> x, const ObjectiveSpec& spec, Budget& budget,
                             int iteration_born, Source source);

// ---- serialization ----------------------------------------------------------

/// One candidate per row: x components then f components, at %.6f.
std::string pool_to_csv(const Pool& pool);

/// Comparator used by all pool sorts; exposed for tests.
bool candidate_less(const Candidate& a, const Candidate& b);

}  // namespace leo
