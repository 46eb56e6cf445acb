#include "cak/vertex_set.hpp"

#include <cstdlib>
#include <string>

#include "cak/errors.hpp"

namespace cak {

VertexSet VertexSet::range(int n) {
  VertexSet s;
  for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
    s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return s;
}

VertexSet VertexSet::from(const std::vector<int>& members) {
  VertexSet s;
  for (int v : members) s.insert(v);
  return s;
}

int VertexSet::first() const {
  for (int w = 0; w < kWords; ++w)
    if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
  return -1;
}

int VertexSet::next(int after) const {
  int start = after + 1;
  if (start >= kCapacity) return -1;
  int w = start >> 6;
  auto bits = words_[w] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (bits) return w * 64 + std::countr_zero(bits);
    if (++w >= kWords) return -1;
    bits = words_[w];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  // Equal cardinality: the set holding the smallest element of the symmetric
  // difference has the lexicographically smaller member list.
  int d = (a ^ b).first();
  return d >= 0 && a.contains(d);
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::uint64_t search_budget(std::uint64_t fallback) {
  if (const char* env = std::getenv("CAK_BUDGET")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

}  // namespace cak
