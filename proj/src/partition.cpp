#include "symtrop/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symtrop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty token in partition: " + s);
    size_t caret = tok.find('^');
    try {
      if (caret == std::string::npos) {
        parts.push_back(std::stoi(tok));
      } else {
        int part = std::stoi(tok.substr(0, caret));
        int rep = std::stoi(tok.substr(caret + 1));
        if (rep < 0) throw std::invalid_argument("negative exponent");
        for (int i = 0; i < rep; ++i) parts.push_back(part);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition token '" + tok + "' in: " + s);
    }
  }
  return Partition(parts);
}

std::vector<int> Partition::multiplicities(int max_part) const {
  std::vector<int> m(max_part, 0);
  for (int p : parts_)
    if (p >= 1 && p <= max_part) ++m[p - 1];
  return m;
}

bool Partition::all_even() const {
  for (int p : parts_)
    if (p % 2 != 0) return false;
  return true;
}

std::string Partition::str() const {
  std::string out = "(";
  for (size_t i = 0; i < parts_.size();) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (i > 0) out += ",";
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

int revlex_cmp(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("revlex_cmp: size mismatch");
  // Compare increasing part lists; the smaller entry at the first
  // difference marks the revlex-larger partition.
  int la = a.length(), lb = b.length();
  for (int i = 0; i < std::min(la, lb); ++i) {
    int pa = a.part(la - 1 - i), pb = b.part(lb - 1 - i);
    if (pa != pb) return pa < pb ? 1 : -1;
  }
  return 0;  // equal size with equal common suffix forces equality
}

bool RevlexGreater::operator()(const Partition& a, const Partition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return revlex_cmp(a, b) > 0;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: size mismatch");
  long sa = 0, sb = 0;
  for (int j = 0; j < std::min(a.length(), b.length()); ++j) {
    sa += a.part(j);
    sb += b.part(j);
    if (sa < sb) return false;
  }
  return true;
}

bool superdominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("superdominates: size mismatch");
  long sa = 0, sb = 0;
  int la = a.length(), lb = b.length();
  for (int j = 0; j < std::min(la, lb); ++j) {
    sa += a.part(la - 1 - j);
    sb += b.part(lb - 1 - j);
    if (sa > sb) return false;
  }
  return true;
}

Partition fuse(const std::vector<Partition>& ps) {
  std::vector<int> parts;
  for (const auto& p : ps)
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
  return Partition(parts);
}

Partition fuse(const Partition& a, const Partition& b) { return fuse({a, b}); }
Partition fuse(const Partition& a, const Partition& b, const Partition& c) {
  return fuse({a, b, c});
}

Partition star(const Partition& a) {
  if (a.length() < 2) throw std::invalid_argument("star needs at least two parts");
  std::vector<int> parts(a.parts().begin() + 2, a.parts().end());
  parts.push_back(a.part(0) + a.part(1));
  return Partition(parts);
}

Partition repeat(const Partition& a, int k) {
  if (k < 1) throw std::invalid_argument("repeat count must be positive");
  std::vector<int> parts;
  for (int i = 0; i < k; ++i)
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
  return Partition(parts);
}

Partition scale(const Partition& a, int f) {
  std::vector<int> parts = a.parts();
  for (int& p : parts) p *= f;
  return Partition(parts);
}

const std::vector<Partition>& enum_partitions(int d) {
  if (d < 0) throw std::invalid_argument("negative integer");
  static std::map<int, std::vector<Partition>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return cache.emplace(d, std::move(out)).first->second;
}

std::vector<Partition> enum_even_partitions(int d) {
  std::vector<Partition> out;
  for (const auto& p : enum_partitions(d))
    if (p.all_even()) out.push_back(p);
  return out;
}

namespace {
// Cover relation of the dominance order on all partitions of d, by scanning
// for strict intermediates.
bool dominance_covers(const Partition& a, const Partition& b) {
  if (a == b || !dominates(a, b)) return false;
  for (const auto& v : enum_partitions(a.size())) {
    if (v == a || v == b) continue;
    if (dominates(a, v) && dominates(v, b)) return false;
  }
  return true;
}
}  // namespace

bool covers(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("covers: size mismatch");
  if (a.length() == b.length()) return dominance_covers(a, b);
  if (a.length() < 2) return false;
  return a.part(0) - a.part(1) <= 1 && star(a) == b;
}

std::vector<std::pair<Partition, Partition>> hasse(int d) {
  std::vector<std::pair<Partition, Partition>> edges;
  const auto& all = enum_partitions(d);
  for (const auto& a : all)
    for (const auto& b : all)
      if (covers(a, b)) edges.emplace_back(a, b);
  return edges;
}

std::string hasse_dot(int d) {
  std::ostringstream out;
  out << "digraph superdominance_" << d << " {\n";
  out << "  rankdir=TB;\n  node [shape=plaintext];\n";
  for (const auto& p : enum_partitions(d))
    out << "  \"" << p.str() << "\";\n";
  for (const auto& [a, b] : hasse(d))
    out << "  \"" << a.str() << "\" -> \"" << b.str() << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace symtrop
