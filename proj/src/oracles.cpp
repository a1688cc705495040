#include "sumkit/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sumkit::oracles {

Integer divisor_sum(long n) {
  if (n < 1) throw std::invalid_argument("divisor_sum needs n >= 1");
  Integer total = 0;
  for (long k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    total += k;
    if (k != n / k) total += n / k;
  }
  return total;
}

Permutation::Permutation(std::size_t n) : image_(n) { std::iota(image_.begin(), image_.end(), std::size_t{0}); }

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n || i == j) throw std::invalid_argument("bad transposition");
  Permutation p(n);
  std::swap(p.image_[i], p.image_[j]);
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutations on different sets");
  Permutation r(size());
  for (std::size_t i = 0; i < size(); ++i) r.image_[i] = image_[other.image_[i]];
  return r;
}

void Permutation::apply_transposition(std::size_t i, std::size_t j) {
  for (auto& v : image_) {
    if (v == i) {
      v = j;
    } else if (v == j) {
      v = i;
    }
  }
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<bool> seen(size(), false);
  std::vector<int> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = image_[j]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Rational hurwitz_oracle(int d, int g, const std::vector<int>& alpha) {
  if (d < 1 || d > 6) throw std::invalid_argument("hurwitz_oracle supports 1 <= d <= 6");
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  std::vector<int> target = alpha;
  std::sort(target.rbegin(), target.rend());
  long ramification = 0;
  long total = 0;
  for (int a : target) {
    if (a < 1) throw std::invalid_argument("partition parts must be positive");
    total += a;
    ramification += a - 1;
  }
  if (total != d) throw std::invalid_argument("alpha is not a partition of d");
  const long r = 2L * d + 2L * g - 2 - ramification;
  if (r < 0) return 0;

  const auto n = static_cast<std::size_t>(d);
  std::vector<std::pair<std::size_t, std::size_t>> transpositions;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) transpositions.emplace_back(i, j);
  }

  // Iterative backtracking: choice[k] indexes the k-th transposition and
  // products[k] is the product of the first k of them.
  Integer count = 0;
  const auto len = static_cast<std::size_t>(r);
  std::vector<std::size_t> choice(len, 0);
  std::vector<Permutation> products(len + 1, Permutation(n));
  auto finish = [&]() {
    if (products[len].cycle_type() != target) return;
    UnionFind uf(n);
    for (std::size_t k = 0; k < len; ++k) {
      const auto& [i, j] = transpositions[choice[k]];
      uf.unite(i, j);
    }
    const std::size_t root = uf.find(0);
    for (std::size_t i = 1; i < n; ++i) {
      if (uf.find(i) != root) return;
    }
    ++count;
  };
  if (len == 0 || transpositions.empty()) {
    if (len == 0) finish();
  } else {
    std::size_t depth = 0;
    choice[0] = 0;
    while (true) {
      products[depth + 1] = products[depth];
      const auto& [i, j] = transpositions[choice[depth]];
      products[depth + 1].apply_transposition(i, j);
      if (depth + 1 == len) {
        finish();
      } else {
        ++depth;
        choice[depth] = 0;
        continue;
      }
      // Advance to the next tuple.
      while (true) {
        if (++choice[depth] < transpositions.size()) break;
        if (depth == 0) return make_rational(count, factorial(static_cast<unsigned>(d)));
        --depth;
      }
    }
  }
  return make_rational(count, factorial(static_cast<unsigned>(d)));
}

Integer kontsevich_oracle(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<Integer> n(static_cast<std::size_t>(d) + 1, 0);
  n[1] = 1;
  for (long e = 2; e <= d; ++e) {
    Integer total = 0;
    for (long d1 = 1; d1 < e; ++d1) {
      const long d2 = e - d1;
      const Integer term = d2 * binomial(3 * e - 4, 3 * d1 - 2) - d1 * binomial(3 * e - 4, 3 * d1 - 1);
      total += n[static_cast<std::size_t>(d1)] * n[static_cast<std::size_t>(d2)] * d1 * d1 * d2 * term;
    }
    n[static_cast<std::size_t>(e)] = total;
  }
  return n[static_cast<std::size_t>(d)];
}

}  // namespace sumkit::oracles
