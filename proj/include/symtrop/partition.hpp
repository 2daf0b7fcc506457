#pragma once

#include <string>
#include <utility>
#include <vector>

namespace symtrop {

// Weakly decreasing list of positive integers. The empty partition is the
// unique partition of 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& s);  // "4,2,2" or "4,2^2"

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[i]; }
  // Multiplicity vector (count of parts equal to 1..max_part).
  std::vector<int> multiplicities(int max_part) const;
  bool all_even() const;
  std::string str() const;  // exponent syntax, e.g. "(4,2^2)"

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// +1 if a comes strictly before b in reverse lexicographic order (a > b),
// -1 if after, 0 if equal. Requires |a| = |b|.
int revlex_cmp(const Partition& a, const Partition& b);

// Strict-weak-order placing revlex-larger partitions first; partitions of
// distinct sizes are ordered by size to keep the comparator total.
struct RevlexGreater {
  bool operator()(const Partition& a, const Partition& b) const;
};

bool dominates(const Partition& a, const Partition& b);       // a unrhd b
bool superdominates(const Partition& a, const Partition& b);  // a >= b

Partition fuse(const std::vector<Partition>& parts);
Partition fuse(const Partition& a, const Partition& b);
Partition fuse(const Partition& a, const Partition& b, const Partition& c);
Partition star(const Partition& a);           // merge the two largest parts
Partition repeat(const Partition& a, int k);  // k-fold fusion of a with itself
Partition scale(const Partition& a, int f);   // multiply every part by f

bool covers(const Partition& a, const Partition& b);

// All partitions of d, revlex order (largest first).
const std::vector<Partition>& enum_partitions(int d);
// All even partitions of d, revlex order.
std::vector<Partition> enum_even_partitions(int d);

// Cover pairs (upper, lower) over enum_partitions(d).
std::vector<std::pair<Partition, Partition>> hasse(int d);
std::string hasse_dot(int d);

}  // namespace symtrop
