#include "leo/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "leo/errors.hpp"
#include "leo/util.hpp"

namespace leo {

const char* to_string(Source s) {
  switch (s) {
    case Source::Init: return "init";
    case Source::Explore: return "explore";
    case Source::Exploit: return "exploit";
    case Source::Baseline: return "baseline";
  }
  return "unknown";
}

const Candidate& Pool::best() const {
  if (members.empty()) throw std::invalid_argument("Pool::best on empty pool");
  auto it = std::min_element(members.begin(), members.end(), candidate_less);
  return *it;
}

double Pool::mean_loss() const {
  if (members.empty()) throw std::invalid_argument("Pool::mean_loss on empty pool");
  double sum = 0.0;
  for (const auto& c : members) sum += c.loss();
  return sum / static_cast<double>(members.size());
}

bool ObjectiveSpec::bounded_dim(std::size_t i) const {
  return std::isfinite(lower.at(i)) && std::isfinite(upper.at(i));
}

void ObjectiveSpec::validate() const {
  if (num_vars == 0) throw std::invalid_argument("ObjectiveSpec: num_vars must be positive");
  if (num_objectives == 0)
    throw std::invalid_argument("ObjectiveSpec: num_objectives must be positive");
  if (lower.size() != num_vars || upper.size() != num_vars)
    throw std::invalid_argument("ObjectiveSpec: bounds length != num_vars");
  if (init_lower.size() != num_vars || init_upper.size() != num_vars)
    throw std::invalid_argument("ObjectiveSpec: init box length != num_vars");
  for (std::size_t i = 0; i < num_vars; ++i) {
    if (!(lower[i] < upper[i]))
      throw std::invalid_argument("ObjectiveSpec: lower[i] must be < upper[i]");
    if (!std::isfinite(init_lower[i]) || !std::isfinite(init_upper[i]) ||
        !(init_lower[i] < init_upper[i]))
      throw std::invalid_argument("ObjectiveSpec: init box must be finite and ordered");
  }
  if (known_minimum) {
    for (const auto& xs : known_minimum->minimizers) {
      if (xs.size() != num_vars)
        throw std::invalid_argument("ObjectiveSpec: minimizer length != num_vars");
      for (std::size_t i = 0; i < num_vars; ++i) {
        if (bounded_dim(i) && (xs[i] < lower[i] || xs[i] > upper[i]))
          throw std::invalid_argument("ObjectiveSpec: known minimizer outside bounds");
      }
    }
  }
}

std::size_t Budget::remaining_evaluations() const {
  if (!evaluation_gated()) return std::numeric_limits<std::size_t>::max();
  return max_evaluations > evaluations_used ? max_evaluations - evaluations_used : 0;
}

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.loss() != b.loss()) return a.loss() < b.loss();
  return a.iteration_born < b.iteration_born;
}

namespace {

std::vector<Candidate> sorted_members(const Pool& pool) {
  std::vector<Candidate> m = pool.members;
  // stable: full ties keep insertion order
  std::stable_sort(m.begin(), m.end(), candidate_less);
  return m;
}

}  // namespace

Pool update_population(const Pool& pool, const std::vector<Candidate>& new_candidates) {
  const std::size_t dim =
      !pool.members.empty() ? pool.members.front().x.size()
                            : (!new_candidates.empty() ? new_candidates.front().x.size() : 0);
  for (const auto& c : new_candidates) {
    if (c.x.size() != dim)
      throw std::invalid_argument("update_population: candidate dimension mismatch");
    if (!c.evaluated())
      throw std::invalid_argument("update_population: unevaluated candidate");
    for (double v : c.f)
      if (!std::isfinite(v))
        throw std::invalid_argument("update_population: non-finite objective value");
  }
  Pool out = pool;
  out.members.insert(out.members.end(), new_candidates.begin(), new_candidates.end());
  return out;
}

Pool sort_and_truncate(const Pool& pool) {
  if (pool.members.size() < pool.capacity)
    throw std::invalid_argument("sort_and_truncate: fewer members than capacity");
  Pool out = pool;
  out.members = sorted_members(pool);
  out.members.resize(pool.capacity);
  return out;
}

Pool port_and_filter(const Pool& explore, const Pool& exploit, std::size_t num_port,
                     bool only_if_better) {
  if (num_port > explore.members.size() || num_port > exploit.members.size())
    throw std::invalid_argument("port_and_filter: num_port exceeds pool size");

  std::vector<Candidate> top = sorted_members(explore);
  top.resize(num_port);

  Pool out = exploit;
  out.members = sorted_members(exploit);
  const std::size_t n = out.members.size();
  for (std::size_t i = 0; i < num_port; ++i) {
    Candidate& displaced = out.members[n - num_port + i];
    if (only_if_better && !candidate_less(top[i], displaced)) continue;
    displaced = top[i];
  }
  return out;
}

std::vector<double> clamp_to_bounds(const std::vector<double>& x, const ObjectiveSpec& spec) {
  if (x.size() != spec.num_vars)
    throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
  std::vector<double> out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (std::isfinite(spec.lower[i]) && out[i] < spec.lower[i]) out[i] = spec.lower[i];
    if (std::isfinite(spec.upper[i]) && out[i] > spec.upper[i]) out[i] = spec.upper[i];
  }
  return out;
}

Candidate evaluate_candidate(std::vector<double> x, const ObjectiveSpec& spec, Budget& budget,
                             int iteration_born, Source source) {
  if (x.size() != spec.num_vars)
    throw std::invalid_argument("evaluate_candidate: dimension mismatch");
  if (budget.exhausted()) throw EvaluationError("evaluation budget exhausted");
  std::vector<double> f = spec.evaluate(x);
  budget.evaluations_used += 1;
  if (f.size() != spec.num_objectives)
    throw EvaluationError("objective returned wrong number of values for " + spec.name);
  for (double v : f)
    if (!std::isfinite(v))
      throw EvaluationError("objective returned non-finite value for " + spec.name);
  Candidate c;
  c.x = std::move(x);
  c.f = std::move(f);
  c.iteration_born = iteration_born;
  c.source = source;
  return c;
}

std::string pool_to_csv(const Pool& pool) {
  std::string out;
  for (const auto& c : pool.members) {
    bool first = true;
    for (double v : c.x) {
      if (!first) out += ',';
      out += format_fixed(v);
      first = false;
    }
    for (double v : c.f) {
      out += ',';
      out += format_fixed(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace leo
