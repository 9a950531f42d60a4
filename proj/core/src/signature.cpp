#include "fusionscan/signature.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <tuple>

namespace fusionscan {

namespace {

Int checkedMulAdd(Int acc, Int a, Int b) {
  Int prod = 0;
  Int sum = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &sum)) {
    throw Error("integer overflow computing global dimension");
  }
  return sum;
}

}  // namespace

TypeSignature::TypeSignature(std::vector<DimCount> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("type signature has no entries");
  if (entries_.front().dim != 1) {
    throw Error("first entry of a type must have dimension 1, got " +
                std::to_string(entries_.front().dim));
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].count < 1) {
      throw Error("entry " + std::to_string(i) + " has non-positive count");
    }
    if (i > 0 && entries_[i].dim <= entries_[i - 1].dim) {
      throw Error("dimensions must be strictly increasing");
    }
  }
  if (entries_.size() < 2) throw Error("pointed type (no simple of dimension > 1) is not admitted");
}

Int TypeSignature::countAt(Int dim) const noexcept {
  for (const auto& e : entries_) {
    if (e.dim == dim) return e.count;
  }
  return 0;
}

Int TypeSignature::rank() const noexcept {
  Int r = 0;
  for (const auto& e : entries_) r += e.count;
  return r;
}

bool operator<(const TypeSignature& a, const TypeSignature& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  if (x.front().count != y.front().count) return x.front().count < y.front().count;
  return std::lexicographical_compare(x.begin() + 1, x.end(), y.begin() + 1, y.end());
}

TypeSignature parseSignature(std::string_view text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')') {
    throw ParseError("signature must be enclosed in parentheses: '" + std::string(text) + "'");
  }
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);

  auto parseInt = [&](std::string_view tok) -> Int {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("invalid integer '" + std::string(tok) + "' in signature");
    }
    return v;
  };

  std::vector<DimCount> entries;
  while (true) {
    auto semi = body.find(';');
    std::string_view pair = body.substr(0, semi);
    auto comma = pair.find(',');
    if (comma == std::string_view::npos || pair.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("expected 'dim,count' but found '" + std::string(pair) + "'");
    }
    entries.push_back({parseInt(pair.substr(0, comma)), parseInt(pair.substr(comma + 1))});
    if (semi == std::string_view::npos) break;
    body.remove_prefix(semi + 1);
  }

  try {
    return TypeSignature(std::move(entries));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string renderSignature(const TypeSignature& sig) {
  std::string out = "(";
  bool first = true;
  for (const auto& e : sig.entries()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(e.dim);
    out += ',';
    out += std::to_string(e.count);
  }
  out += ')';
  return out;
}

Int globalDim(const TypeSignature& sig) {
  Int total = 0;
  for (const auto& e : sig.entries()) {
    Int sq = 0;
    if (__builtin_mul_overflow(e.dim, e.dim, &sq)) throw Error("integer overflow computing global dimension");
    total = checkedMulAdd(total, e.count, sq);
  }
  return total;
}

bool isFrobeniusType(const TypeSignature& sig, Int N) {
  if (globalDim(sig) != N) {
    throw Error("dimension mismatch: " + renderSignature(sig) + " has global dimension " +
                std::to_string(globalDim(sig)) + ", not " + std::to_string(N));
  }
  return std::all_of(sig.entries().begin(), sig.entries().end(),
                     [N](const DimCount& e) { return N % e.dim == 0; });
}

}  // namespace fusionscan
