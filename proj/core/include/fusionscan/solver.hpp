#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionscan/frames.hpp"
#include "fusionscan/fusion_table.hpp"
#include "fusionscan/group.hpp"
#include "fusionscan/signature.hpp"

namespace fusionscan {

struct SolverConfig {
  std::uint64_t nodeBudget = 10'000'000;
  int maxGroupOrder = 16;
  bool symmetryBreaking = true;
  bool recordTrace = false;
  // Prune with "a set closed under all still-possible products spans a
  // subring, so its dimension divides N". Off only for experiments.
  bool subringPropagator = true;
  std::size_t traceLimit = 500'000;  // lines kept; the rest are counted in traceDropped

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

enum class SolverStatus { Excluded, Realizable, Unknown };

std::string to_string(SolverStatus s);
SolverStatus parseSolverStatus(const std::string& s);

struct SolverOutcome {
  SolverStatus status = SolverStatus::Unknown;
  std::optional<FusionTable> model;
  std::uint64_t nodesVisited = 0;
  bool exhaustive = false;
  std::vector<std::string> trace;
  std::string reason;              // set for Unknown
  std::uint64_t framesExplored = 0;  // (group, duality, action) frames searched
  std::uint64_t traceDropped = 0;

  friend bool operator==(const SolverOutcome&, const SolverOutcome&) = default;
};

/// Step-numbered derivation log: "<step>\t<law>\t<equation>\t<change>".
class TraceLog {
 public:
  explicit TraceLog(std::size_t limit) : limit_(limit) {}
  void add(const std::string& law, const std::string& equation, const std::string& change);
  std::vector<std::string> lines;
  std::uint64_t dropped = 0;

 private:
  std::size_t limit_;
  std::uint64_t step_ = 0;
};

/// Search state for one frame: the cells with three non-invertible indices,
/// merged into variables along reciprocity, conjugation and the invertible
/// actions, with interval domains and the dimension, associativity and
/// subring-divisibility propagators. Cells with an invertible index are fixed
/// by the frame.
class FrameProblem {
 public:
  FrameProblem(const TypeSignature& sig, const GroupTable& group, const Frame& frame, bool subringPropagator,
               TraceLog* trace = nullptr);

  int rank() const noexcept { return r_; }
  int variableCount() const noexcept { return static_cast<int>(lo_.size()); }
  /// -1 when the cell has an invertible index (fixed by the frame).
  int variableOf(int a, int b, int c) const;
  std::pair<int, int> domain(int var) const { return {lo_[static_cast<std::size_t>(var)], hi_[static_cast<std::size_t>(var)]}; }
  /// Current bounds of any cell.
  std::pair<int, int> cellDomain(int a, int b, int c) const;
  /// The cell name used in traces, e.g. "N(x3,x5;x7)".
  std::string cellName(int a, int b, int c) const;

  /// False once any domain has emptied.
  bool consistent() const noexcept { return ok_; }
  /// Narrow a cell (variable or not) to [lo, hi]; false on contradiction.
  bool restrictCell(int a, int b, int c, int lo, int hi, const std::string& law = "branch");
  bool restrictVar(int var, int lo, int hi, const std::string& law = "branch");
  /// Runs all queued propagators to a fixpoint, then the subring check.
  bool propagate();

  /// Smallest non-singleton domain, ties to the lowest index; -1 if all fixed.
  int branchVariable() const;
  std::size_t mark() const noexcept { return trail_.size(); }
  void undo(std::size_t mark);
  /// Requires every variable fixed.
  FusionTable table() const;

 private:
  struct Linear {
    std::vector<std::pair<int, Int>> terms;  // (var, coefficient > 0)
    Int rhs;
    int a, b;
  };
  struct QTerm {
    int u, v;
    Int coef;
    friend auto operator<=>(const QTerm&, const QTerm&) = default;
  };
  struct Quadratic {
    std::vector<QTerm> terms;
    Int constant;  // sum(terms) + constant = 0
    int a, b, c, f;
  };

  int tripleId(int a, int b, int c) const { return ((a - n0_) * m_ + (b - n0_)) * m_ + (c - n0_); }
  int fixedCell(int a, int b, int c) const;
  void build();
  bool setBounds(int var, int lo, int hi, const std::string& law, const std::string& equation);
  bool propagateLinear(int id);
  bool propagateQuadratic(int id);
  bool subringCheck();
  void enqueue(int var);
  std::string linearText(const Linear& l) const;
  std::string quadraticText(const Quadratic& q) const;

  int r_, n0_, m_;
  Int N_;
  std::vector<Int> dims_;
  std::vector<std::string> names_;
  GroupTable group_;
  Frame frame_;
  bool subring_;
  TraceLog* trace_;

  std::vector<int> varOfTriple_;
  std::vector<int> repTriple_;
  std::vector<int> lo_, hi_;
  std::vector<Linear> linear_;
  std::vector<Quadratic> quadratic_;
  std::vector<std::vector<int>> watch_;  // var -> constraint ids (linear first, quadratic offset by linear_.size())
  std::vector<int> queue_;
  std::size_t qhead_ = 0;
  std::vector<char> queued_;
  struct TrailEntry {
    int var, lo, hi;
  };
  std::vector<TrailEntry> trail_;
  bool ok_ = true;
};

/// Decides whether some fusion table realizes `sig`.
SolverOutcome solve(const TypeSignature& sig, const SolverConfig& config = {});

}  // namespace fusionscan
