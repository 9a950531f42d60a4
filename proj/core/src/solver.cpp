#include "fusionscan/solver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fusionscan/group_catalog.hpp"

namespace fusionscan {

std::string to_string(SolverStatus s) {
  switch (s) {
    case SolverStatus::Excluded: return "Excluded";
    case SolverStatus::Realizable: return "Realizable";
    case SolverStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

SolverStatus parseSolverStatus(const std::string& s) {
  if (s == "Excluded") return SolverStatus::Excluded;
  if (s == "Realizable") return SolverStatus::Realizable;
  if (s == "Unknown") return SolverStatus::Unknown;
  throw ParseError("unknown solver status '" + s + "'");
}

void TraceLog::add(const std::string& law, const std::string& equation, const std::string& change) {
  ++step_;
  if (lines.size() >= limit_) {
    ++dropped;
    return;
  }
  lines.push_back(std::to_string(step_) + "\t" + law + "\t" + equation + "\t" + change);
}

namespace {

Int floorDiv(Int a, Int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
Int ceilDiv(Int a, Int b) { return -floorDiv(-a, b); }

Int isqrtFloor(Int x) {
  if (x < 0) return -1;
  Int s = 0;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

Int isqrtCeil(Int x) {
  if (x <= 0) return 0;
  const Int s = isqrtFloor(x);
  return s * s == x ? s : s + 1;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::string interval(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

}  // namespace

FrameProblem::FrameProblem(const TypeSignature& sig, const GroupTable& group, const Frame& frame,
                           bool subringPropagator, TraceLog* trace)
    : r_(static_cast<int>(sig.rank())),
      n0_(group.order()),
      m_(r_ - n0_),
      N_(globalDim(sig)),
      dims_(simpleDims(sig)),
      names_(simpleNames(sig)),
      group_(group),
      frame_(frame),
      subring_(subringPropagator),
      trace_(trace) {
  build();
}

int FrameProblem::fixedCell(int a, int b, int c) const {
  if (a < n0_) return c == frame_.leftMul(a, b) ? 1 : 0;
  if (b < n0_) return c == frame_.rightMul(a, b) ? 1 : 0;
  return b == frame_.rightMul(frame_.dual(a), c) ? 1 : 0;
}

int FrameProblem::variableOf(int a, int b, int c) const {
  if (a < n0_ || b < n0_ || c < n0_) return -1;
  return varOfTriple_[static_cast<std::size_t>(tripleId(a, b, c))];
}

std::pair<int, int> FrameProblem::cellDomain(int a, int b, int c) const {
  const int v = variableOf(a, b, c);
  if (v < 0) {
    const int x = fixedCell(a, b, c);
    return {x, x};
  }
  return domain(v);
}

std::string FrameProblem::cellName(int a, int b, int c) const {
  return "N(" + names_[static_cast<std::size_t>(a)] + "," + names_[static_cast<std::size_t>(b)] + ";" +
         names_[static_cast<std::size_t>(c)] + ")";
}

void FrameProblem::build() {
  const int cells = m_ * m_ * m_;
  const auto& dual = frame_.dual;
  UnionFind uf(cells);
  for (int a = n0_; a < r_; ++a)
    for (int b = n0_; b < r_; ++b)
      for (int c = n0_; c < r_; ++c) {
        const int t = tripleId(a, b, c);
        uf.unite(t, tripleId(dual(a), c, b));
        uf.unite(t, tripleId(c, dual(b), a));
        uf.unite(t, tripleId(dual(b), dual(a), dual(c)));
        for (int g = 1; g < n0_; ++g) {
          uf.unite(t, tripleId(frame_.leftMul(g, a), b, frame_.leftMul(g, c)));
          uf.unite(t, tripleId(a, frame_.rightMul(b, g), frame_.rightMul(c, g)));
          uf.unite(t, tripleId(frame_.rightMul(a, g), frame_.leftMul(group_.inverse(g), b), c));
        }
      }

  varOfTriple_.assign(static_cast<std::size_t>(cells), -1);
  for (int t = 0; t < cells; ++t) {
    const int root = uf.find(t);
    if (varOfTriple_[static_cast<std::size_t>(root)] < 0) {
      varOfTriple_[static_cast<std::size_t>(root)] = static_cast<int>(repTriple_.size());
      repTriple_.push_back(t);
      lo_.push_back(0);
      hi_.push_back(1 << 20);
    }
    const int v = varOfTriple_[static_cast<std::size_t>(root)];
    varOfTriple_[static_cast<std::size_t>(t)] = v;
    const int a = t / (m_ * m_) + n0_, b = t / m_ % m_ + n0_, c = t % m_ + n0_;
    const Int cap = dims_[static_cast<std::size_t>(a)] * dims_[static_cast<std::size_t>(b)] / dims_[static_cast<std::size_t>(c)];
    hi_[static_cast<std::size_t>(v)] = std::min<int>(hi_[static_cast<std::size_t>(v)], static_cast<int>(cap));
  }
  const int nv = variableCount();
  watch_.assign(static_cast<std::size_t>(nv), {});

  // Dimension law on the product a b, invertible summands moved to the right.
  std::set<std::pair<std::vector<std::pair<int, Int>>, Int>> seenLinear;
  for (int a = n0_; a < r_; ++a)
    for (int b = n0_; b < r_; ++b) {
      Int rhs = dims_[static_cast<std::size_t>(a)] * dims_[static_cast<std::size_t>(b)];
      for (int g = 0; g < n0_; ++g) rhs -= fixedCell(a, b, g);
      std::map<int, Int> coef;
      for (int c = n0_; c < r_; ++c) coef[variableOf(a, b, c)] += dims_[static_cast<std::size_t>(c)];
      std::vector<std::pair<int, Int>> terms(coef.begin(), coef.end());
      if (!seenLinear.insert({terms, rhs}).second) continue;
      linear_.push_back({std::move(terms), rhs, a, b});
    }

  // Associativity (a b) c = a (b c) at f, all four non-invertible.
  std::set<std::pair<std::vector<QTerm>, Int>> seenQuad;
  std::map<std::pair<int, int>, Int> acc;
  for (int a = n0_; a < r_; ++a)
    for (int b = n0_; b < r_; ++b)
      for (int c = n0_; c < r_; ++c)
        for (int f = n0_; f < r_; ++f) {
          acc.clear();
          Int constant = 0;
          for (int e = 0; e < n0_; ++e) {
            constant += fixedCell(a, b, e) * (f == frame_.leftMul(e, c) ? 1 : 0);
            constant -= fixedCell(b, c, e) * (f == frame_.rightMul(a, e) ? 1 : 0);
          }
          for (int e = n0_; e < r_; ++e) {
            const int l1 = variableOf(a, b, e), l2 = variableOf(e, c, f);
            const int r1 = variableOf(b, c, e), r2 = variableOf(a, e, f);
            acc[{std::min(l1, l2), std::max(l1, l2)}] += 1;
            acc[{std::min(r1, r2), std::max(r1, r2)}] -= 1;
          }
          std::vector<QTerm> terms;
          for (const auto& [uv, k] : acc)
            if (k != 0) terms.push_back({uv.first, uv.second, k});
          if (terms.empty()) {
            if (constant != 0) {
              Quadratic q{{}, constant, a, b, c, f};
              if (trace_) trace_->add("associativity", quadraticText(q), "frame refuted");
              ok_ = false;
              return;
            }
            continue;
          }
          if (terms.front().coef < 0) {
            for (auto& t : terms) t.coef = -t.coef;
            constant = -constant;
          }
          if (!seenQuad.insert({terms, constant}).second) continue;
          quadratic_.push_back({std::move(terms), constant, a, b, c, f});
        }

  for (std::size_t i = 0; i < linear_.size(); ++i)
    for (const auto& [v, k] : linear_[i].terms) watch_[static_cast<std::size_t>(v)].push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < quadratic_.size(); ++i) {
    const int id = static_cast<int>(linear_.size() + i);
    for (const auto& t : quadratic_[i].terms) {
      watch_[static_cast<std::size_t>(t.u)].push_back(id);
      if (t.v != t.u) watch_[static_cast<std::size_t>(t.v)].push_back(id);
    }
  }
  for (auto& w : watch_) {
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
  }

  queued_.assign(linear_.size() + quadratic_.size(), 1);
  queue_.resize(queued_.size());
  std::iota(queue_.begin(), queue_.end(), 0);
  qhead_ = 0;
  ok_ = propagate();
  trail_.clear();  // the root fixpoint is never undone
}

std::string FrameProblem::linearText(const Linear& l) const {
  std::string s;
  for (int c = n0_; c < r_; ++c) {
    if (!s.empty()) s += " + ";
    s += std::to_string(dims_[static_cast<std::size_t>(c)]) + "*" + cellName(l.a, l.b, c);
  }
  return s + " = " + std::to_string(l.rhs);
}

std::string FrameProblem::quadraticText(const Quadratic& q) const {
  const auto& n = names_;
  return "(" + n[static_cast<std::size_t>(q.a)] + " " + n[static_cast<std::size_t>(q.b)] + ") " +
         n[static_cast<std::size_t>(q.c)] + " = " + n[static_cast<std::size_t>(q.a)] + " (" +
         n[static_cast<std::size_t>(q.b)] + " " + n[static_cast<std::size_t>(q.c)] + ") at " +
         n[static_cast<std::size_t>(q.f)];
}

void FrameProblem::enqueue(int var) {
  for (int id : watch_[static_cast<std::size_t>(var)]) {
    if (queued_[static_cast<std::size_t>(id)]) continue;
    queued_[static_cast<std::size_t>(id)] = 1;
    queue_.push_back(id);
  }
}

bool FrameProblem::setBounds(int var, int lo, int hi, const std::string& law, const std::string& equation) {
  const auto idx = static_cast<std::size_t>(var);
  const int nlo = std::max(lo, lo_[idx]);
  const int nhi = std::min(hi, hi_[idx]);
  if (nlo == lo_[idx] && nhi == hi_[idx]) return true;
  if (trace_) {
    const int t = repTriple_[idx];
    const std::string cell = cellName(t / (m_ * m_) + n0_, t / m_ % m_ + n0_, t % m_ + n0_);
    trace_->add(law, equation,
                cell + " " + interval(lo_[idx], hi_[idx]) + " -> " + (nlo > nhi ? "empty" : interval(nlo, nhi)));
  }
  if (nlo > nhi) {
    ok_ = false;
    return false;
  }
  trail_.push_back({var, lo_[idx], hi_[idx]});
  lo_[idx] = nlo;
  hi_[idx] = nhi;
  enqueue(var);
  return true;
}

bool FrameProblem::restrictVar(int var, int lo, int hi, const std::string& law) {
  if (!ok_) return false;
  return setBounds(var, lo, hi, law, "");
}

bool FrameProblem::restrictCell(int a, int b, int c, int lo, int hi, const std::string& law) {
  if (!ok_) return false;
  const int v = variableOf(a, b, c);
  if (v < 0) {
    const int x = fixedCell(a, b, c);
    if (x < lo || x > hi) {
      if (trace_) trace_->add(law, "", cellName(a, b, c) + " fixed at " + std::to_string(x) + " -> empty");
      ok_ = false;
    }
    return ok_;
  }
  return setBounds(v, lo, hi, law, "");
}

bool FrameProblem::propagateLinear(int id) {
  const auto& l = linear_[static_cast<std::size_t>(id)];
  Int sumLo = 0, sumHi = 0;
  for (const auto& [v, k] : l.terms) {
    sumLo += k * lo_[static_cast<std::size_t>(v)];
    sumHi += k * hi_[static_cast<std::size_t>(v)];
  }
  if (sumLo > l.rhs || sumHi < l.rhs) {
    if (trace_) trace_->add("dimension", linearText(l), "row bounds " + interval(static_cast<int>(sumLo), static_cast<int>(sumHi)) + " miss " + std::to_string(l.rhs));
    ok_ = false;
    return false;
  }
  for (const auto& [v, k] : l.terms) {
    const auto i = static_cast<std::size_t>(v);
    const Int nhi = floorDiv(l.rhs - (sumLo - k * lo_[i]), k);
    const Int nlo = ceilDiv(l.rhs - (sumHi - k * hi_[i]), k);
    if (nlo > lo_[i] || nhi < hi_[i]) {
      if (!setBounds(v, static_cast<int>(std::max<Int>(nlo, -1)), static_cast<int>(std::min<Int>(nhi, 1 << 20)),
                     "dimension", trace_ ? linearText(l) : std::string()))
        return false;
    }
  }
  return true;
}

bool FrameProblem::propagateQuadratic(int id) {
  const auto& q = quadratic_[static_cast<std::size_t>(id)];
  const std::size_t n = q.terms.size();
  Int minS = q.constant, maxS = q.constant;
  std::vector<Int> tmin(n), tmax(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = q.terms[i];
    const Int pmin = Int{lo_[static_cast<std::size_t>(t.u)]} * lo_[static_cast<std::size_t>(t.v)];
    const Int pmax = Int{hi_[static_cast<std::size_t>(t.u)]} * hi_[static_cast<std::size_t>(t.v)];
    tmin[i] = t.coef > 0 ? t.coef * pmin : t.coef * pmax;
    tmax[i] = t.coef > 0 ? t.coef * pmax : t.coef * pmin;
    minS += tmin[i];
    maxS += tmax[i];
  }
  auto fail = [&](const std::string& why) {
    if (trace_) trace_->add("associativity", quadraticText(q), why);
    ok_ = false;
    return false;
  };
  if (minS > 0 || maxS < 0) return fail("sum bounds " + interval(static_cast<int>(minS), static_cast<int>(maxS)) + " exclude 0");

  for (std::size_t i = 0; i < n; ++i) {
    const auto& t = q.terms[i];
    // The term must cancel the rest: t_i in [-(maxS - tmax_i), -(minS - tmin_i)].
    const Int restMin = minS - tmin[i], restMax = maxS - tmax[i];
    Int pl, pu;
    if (t.coef > 0) {
      pl = ceilDiv(-restMax, t.coef);
      pu = floorDiv(-restMin, t.coef);
    } else {
      pl = ceilDiv(restMin, -t.coef);
      pu = floorDiv(restMax, -t.coef);
    }
    pl = std::max<Int>(pl, 0);
    const auto ui = static_cast<std::size_t>(t.u), vi = static_cast<std::size_t>(t.v);
    if (pl <= Int{lo_[ui]} * lo_[vi] && pu >= Int{hi_[ui]} * hi_[vi]) continue;
    if (pu < 0 || pl > pu) return fail("no product fits");
    const std::string eq = trace_ ? quadraticText(q) : std::string();
    if (t.u == t.v) {
      if (!setBounds(t.u, static_cast<int>(isqrtCeil(pl)), static_cast<int>(isqrtFloor(pu)), "associativity", eq))
        return false;
      continue;
    }
    auto tighten = [&](int x, int y) {
      const auto xi = static_cast<std::size_t>(x), yi = static_cast<std::size_t>(y);
      Int nlo = lo_[xi], nhi = hi_[xi];
      if (lo_[yi] > 0) nhi = std::min<Int>(nhi, pu / lo_[yi]);
      if (pl > 0) {
        if (hi_[yi] == 0) return setBounds(x, 1, 0, "associativity", eq);
        nlo = std::max<Int>(nlo, ceilDiv(pl, hi_[yi]));
      }
      return setBounds(x, static_cast<int>(nlo), static_cast<int>(nhi), "associativity", eq);
    };
    if (!tighten(t.u, t.v) || !tighten(t.v, t.u)) return false;
  }
  return true;
}

bool FrameProblem::subringCheck() {
  // poss[a*r+b]: simples c with N_{ab}^c possibly nonzero.
  const auto ru = static_cast<std::size_t>(r_);
  std::vector<std::uint64_t> poss(ru * ru, 0);
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b) {
      std::uint64_t mask = 0;
      for (int c = 0; c < r_; ++c)
        if (cellDomain(a, b, c).second > 0) mask |= std::uint64_t{1} << c;
      poss[static_cast<std::size_t>(a) * ru + static_cast<std::size_t>(b)] = mask;
    }
  auto close = [&](std::uint64_t s) {
    for (;;) {
      std::uint64_t grown = s;
      for (int a = 0; a < r_; ++a) {
        if (!(s >> a & 1)) continue;
        grown |= std::uint64_t{1} << frame_.dual(a);
        for (int b = 0; b < r_; ++b)
          if (s >> b & 1) grown |= poss[static_cast<std::size_t>(a) * ru + static_cast<std::size_t>(b)];
      }
      if (grown == s) return s;
      s = grown;
    }
  };
  auto dimOf = [&](std::uint64_t s) {
    Int d = 0;
    for (int x = 0; x < r_; ++x)
      if (s >> x & 1) d += dims_[static_cast<std::size_t>(x)] * dims_[static_cast<std::size_t>(x)];
    return d;
  };

  constexpr std::size_t kCap = 4096;
  std::set<std::uint64_t> seen{close(1)};
  std::vector<std::uint64_t> frontier(seen.begin(), seen.end());
  while (!frontier.empty() && seen.size() < kCap) {
    std::vector<std::uint64_t> next;
    for (auto s : frontier) {
      if (N_ % dimOf(s) != 0) {
        if (trace_) {
          std::string names;
          for (int x = 0; x < r_; ++x)
            if (s >> x & 1) names += (names.empty() ? "" : ",") + names_[static_cast<std::size_t>(x)];
          trace_->add("subring-divisibility", "{" + names + "} closed under all possible products",
                      "dimension " + std::to_string(dimOf(s)) + " does not divide " + std::to_string(N_));
        }
        ok_ = false;
        return false;
      }
      for (int x = 0; x < r_ && seen.size() < kCap; ++x) {
        if (s >> x & 1) continue;
        const auto grown = close(s | std::uint64_t{1} << x);
        if (seen.insert(grown).second) next.push_back(grown);
      }
    }
    frontier = std::move(next);
  }
  return true;
}

bool FrameProblem::propagate() {
  if (!ok_) return false;
  const auto nLinear = static_cast<int>(linear_.size());
  auto drain = [&] {
    while (qhead_ < queue_.size()) {
      const int id = queue_[qhead_++];
      queued_[static_cast<std::size_t>(id)] = 0;
      const bool good = id < nLinear ? propagateLinear(id) : propagateQuadratic(id - nLinear);
      if (!good) return false;
    }
    return true;
  };
  bool good = drain();
  if (good && subring_) good = subringCheck();
  if (!good) {
    for (std::size_t i = qhead_; i < queue_.size(); ++i) queued_[static_cast<std::size_t>(queue_[i])] = 0;
    ok_ = false;
  }
  queue_.clear();
  qhead_ = 0;
  return good;
}

int FrameProblem::branchVariable() const {
  int best = -1;
  int bestSize = 0;
  for (int v = 0; v < variableCount(); ++v) {
    const int size = hi_[static_cast<std::size_t>(v)] - lo_[static_cast<std::size_t>(v)];
    if (size > 0 && (best < 0 || size < bestSize)) {
      best = v;
      bestSize = size;
    }
  }
  return best;
}

void FrameProblem::undo(std::size_t mark) {
  while (trail_.size() > mark) {
    const auto& e = trail_.back();
    lo_[static_cast<std::size_t>(e.var)] = e.lo;
    hi_[static_cast<std::size_t>(e.var)] = e.hi;
    trail_.pop_back();
  }
  for (int id : queue_) queued_[static_cast<std::size_t>(id)] = 0;
  queue_.clear();
  qhead_ = 0;
  ok_ = true;
}

FusionTable FrameProblem::table() const {
  std::vector<int> tensor(static_cast<std::size_t>(r_) * static_cast<std::size_t>(r_) * static_cast<std::size_t>(r_));
  std::size_t i = 0;
  for (int a = 0; a < r_; ++a)
    for (int b = 0; b < r_; ++b)
      for (int c = 0; c < r_; ++c) {
        const auto [lo, hi] = cellDomain(a, b, c);
        if (lo != hi) throw Error("table(): " + cellName(a, b, c) + " is not fixed");
        tensor[i++] = lo;
      }
  return FusionTable(dims_, group_, frame_.dual, std::move(tensor));
}

namespace {

enum class Search { Found, Exhausted, Budget };

class Searcher {
 public:
  Searcher(const SolverConfig& cfg, TraceLog* trace) : cfg_(cfg), trace_(trace) {}

  Search run(FrameProblem& p) {
    const int v = p.branchVariable();
    if (v < 0) return leaf(p);
    const auto [lo, hi] = p.domain(v);
    for (int val = lo; val <= hi; ++val) {
      if (nodes >= cfg_.nodeBudget) return Search::Budget;
      ++nodes;
      const auto m = p.mark();
      if (p.restrictVar(v, val, val) && p.propagate()) {
        const auto r = run(p);
        if (r != Search::Exhausted) return r;
      }
      p.undo(m);
    }
    return Search::Exhausted;
  }

  std::uint64_t nodes = 0;
  std::optional<FusionTable> model;

 private:
  Search leaf(FrameProblem& p) {
    auto t = p.table();
    auto bad = verifyFusionTable(t, 1);
    if (bad.empty()) bad = subringDivisibilityViolations(t);
    if (!bad.empty()) {
      // Propagation is complete on fixed tables, so this only fires on a solver bug.
      if (trace_) trace_->add(bad.front().law, bad.front().detail, "leaf rejected by verifier");
      return Search::Exhausted;
    }
    model = std::move(t);
    return Search::Found;
  }

  const SolverConfig& cfg_;
  TraceLog* trace_;
};

std::string describeFrame(const TypeSignature& sig, const GroupTable& g, const Frame& f) {
  const auto names = simpleNames(sig);
  std::string s = "group " + (g.name().empty() ? "order " + std::to_string(g.order()) : g.name()) + "; dual";
  for (int x = g.order(); x < f.rank; ++x)
    if (f.dual(x) >= x) {
      s += " " + names[static_cast<std::size_t>(x)];
      if (f.dual(x) != x) s += "<->" + names[static_cast<std::size_t>(f.dual(x))];
    }
  s += "; |G[x]|";
  for (int x = g.order(); x < f.rank; ++x) {
    int stab = 0;
    for (int h = 0; h < g.order(); ++h) stab += f.leftMul(h, x) == x ? 1 : 0;
    s += " " + std::to_string(stab);
  }
  return s;
}

}  // namespace

SolverOutcome solve(const TypeSignature& sig, const SolverConfig& config) {
  if (config.nodeBudget < 1) throw Error("nodeBudget must be positive");
  SolverOutcome out;
  TraceLog log(config.traceLimit);
  TraceLog* trace = config.recordTrace ? &log : nullptr;
  auto finish = [&](SolverStatus st, std::string reason = {}) {
    out.status = st;
    out.exhaustive = st == SolverStatus::Excluded;
    out.reason = std::move(reason);
    if (trace) {
      out.trace = std::move(log.lines);
      out.traceDropped = log.dropped;
    }
    return out;
  };

  const Int n0 = sig.pointedCount();
  if (sig.rank() > 64) return finish(SolverStatus::Unknown, "rank above 64 is unsupported");
  if (n0 > config.maxGroupOrder || n0 > kGroupCatalogMaxOrder)
    return finish(SolverStatus::Unknown, "group order " + std::to_string(n0) + " exceeds the catalog ceiling");

  Searcher search(config, trace);
  try {
    for (const auto& group : enumerateGroups(static_cast<int>(n0)))
      for (const auto& dual : enumerateDualities(sig, group, config.symmetryBreaking))
        for (const auto& frame : enumerateFrames(sig, group, dual, config.symmetryBreaking)) {
          ++out.framesExplored;
          if (trace) trace->add("frame", describeFrame(sig, group, frame), "start");
          FrameProblem problem(sig, group, frame, config.subringPropagator, trace);
          if (!problem.consistent()) continue;
          const auto r = search.run(problem);
          out.nodesVisited = search.nodes;
          if (r == Search::Found) {
            out.model = std::move(search.model);
            return finish(SolverStatus::Realizable);
          }
          if (r == Search::Budget) return finish(SolverStatus::Unknown, "node budget exhausted");
        }
  } catch (const FrameLimitExceeded& e) {
    out.nodesVisited = search.nodes;
    return finish(SolverStatus::Unknown, e.what());
  }
  out.nodesVisited = search.nodes;
  return finish(SolverStatus::Excluded);
}

}  // namespace fusionscan
