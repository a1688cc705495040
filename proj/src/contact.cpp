#include "sumkit/contact.hpp"

#include "sumkit/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace sumkit {

SeqStats seq_stats(const ContactSeq& s) {
  SeqStats r;
  r.length = static_cast<long>(s.size());
  for (const auto& c : s) {
    r.degree += c.multiplicity;
    r.product *= c.multiplicity;
  }
  return r;
}

ContactMultiset::ContactMultiset(std::initializer_list<std::pair<const Key, int>> counts) {
  for (const auto& [key, n] : counts) add(key.first, key.second, n);
}

ContactMultiset ContactMultiset::from_seq(const ContactSeq& s) {
  ContactMultiset m;
  for (const auto& c : s) m.add(c.multiplicity, c.index);
  return m;
}

void ContactMultiset::add(int multiplicity, int index, int count) {
  if (multiplicity < 1) throw std::invalid_argument("contact multiplicity must be >= 1");
  if (index < 0) throw std::invalid_argument("class index must be >= 0");
  if (count < 0) throw std::invalid_argument("negative contact count");
  if (count == 0) return;
  counts_[{multiplicity, index}] += count;
}

int ContactMultiset::count(int multiplicity, int index) const {
  auto it = counts_.find({multiplicity, index});
  return it == counts_.end() ? 0 : it->second;
}

long ContactMultiset::length() const {
  long n = 0;
  for (const auto& [k, c] : counts_) n += c;
  return n;
}

long ContactMultiset::degree() const {
  long n = 0;
  for (const auto& [k, c] : counts_) n += static_cast<long>(k.first) * c;
  return n;
}

int ContactMultiset::max_index() const {
  int r = -1;
  for (const auto& [k, c] : counts_) r = std::max(r, k.second);
  return r;
}

ContactMultiset ContactMultiset::operator+(const ContactMultiset& other) const {
  ContactMultiset r = *this;
  for (const auto& [k, c] : other.counts_) r.add(k.first, k.second, c);
  return r;
}

std::string ContactMultiset::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : counts_) {
    if (!first) out << ' ';
    first = false;
    out << k.first << '^' << c << '(' << k.second << ')';
  }
  return out.str();
}

ContactMultiset ContactMultiset::parse(std::string_view text) {
  ContactMultiset m;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int a = 0, count = 0, index = 0;
    char caret = 0, open = 0, close = 0;
    std::istringstream t(tok);
    if (!(t >> a >> caret >> count >> open >> index >> close) || caret != '^' || open != '(' || close != ')') {
      throw std::invalid_argument("malformed contact token '" + tok + "'");
    }
    if (t.peek() != std::char_traits<char>::eof()) throw std::invalid_argument("trailing text in '" + tok + "'");
    m.add(a, index, count);
  }
  return m;
}

MultisetStats multiset_stats(const ContactMultiset& m) {
  MultisetStats r;
  for (const auto& [k, c] : m.counts()) {
    r.length += c;
    r.degree += static_cast<long>(k.first) * c;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k.first), static_cast<unsigned long>(c));
    r.product *= p;
    r.factorial *= factorial(static_cast<unsigned>(c));
  }
  return r;
}

Integer ordered_multiplicity(const ContactMultiset& m) {
  auto st = multiset_stats(m);
  return factorial(static_cast<unsigned>(st.length)) / st.factorial;
}

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.size() != rows_.size()) throw std::invalid_argument("intersection matrix must be square");
  }
}

IntersectionMatrix IntersectionMatrix::identity(std::size_t n) {
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return IntersectionMatrix(std::move(rows));
}

IntersectionMatrix IntersectionMatrix::point_fundamental() {
  return IntersectionMatrix({{0, 1}, {1, 0}});
}

bool IntersectionMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (rows_[i][j] != rows_[j][i]) return false;
    }
  }
  return true;
}

IntersectionMatrix IntersectionMatrix::inverse() const {
  const std::size_t n = size();
  auto a = rows_;
  auto inv = identity(n).rows_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("intersection matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return IntersectionMatrix(std::move(inv));
}

namespace {

// (sum_j q_ij x_{a,j})^count expanded over compositions of count.
MultisetCombination expand_power(int a, int i, int count, const IntersectionMatrix& q) {
  const int n = static_cast<int>(q.size());
  MultisetCombination out;
  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == n - 1) {
      parts[static_cast<std::size_t>(j)] = left;
      Rational coeff = factorial(static_cast<unsigned>(count));
      ContactMultiset m;
      for (int k = 0; k < n; ++k) {
        const int e = parts[static_cast<std::size_t>(k)];
        if (e == 0) continue;
        const Rational& qik = q(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
        if (qik == 0) return;
        Rational pw = 1;
        for (int t = 0; t < e; ++t) pw *= qik;
        coeff *= pw;
        coeff /= factorial(static_cast<unsigned>(e));
        m.add(a, k, e);
      }
      out[m] += coeff;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      parts[static_cast<std::size_t>(j)] = e;
      rec(j + 1, left - e);
    }
  };
  rec(0, count);
  return out;
}

MultisetCombination multiply(const MultisetCombination& x, const MultisetCombination& y) {
  MultisetCombination out;
  for (const auto& [mx, cx] : x) {
    for (const auto& [my, cy] : y) out[mx + my] += cx * cy;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

MultisetCombination dual_multiset(const ContactMultiset& m, const IntersectionMatrix& q) {
  (void)q.inverse();  // singular pairings have no dual basis
  if (m.max_index() >= static_cast<int>(q.size())) {
    throw std::invalid_argument("contact class index outside the pairing's basis");
  }
  MultisetCombination acc{{ContactMultiset{}, Rational(1)}};
  for (const auto& [key, count] : m.counts()) {
    acc = multiply(acc, expand_power(key.first, key.second, count, q));
  }
  return acc;
}

std::vector<ContactMultiset> enumerate_multisets(int deg, int basis_size) {
  if (deg < 0) throw std::invalid_argument("negative degree target");
  if (basis_size < 1) throw std::invalid_argument("basis size must be positive");
  // Slots are (a, i) pairs; distribute the degree over slots in order.
  std::vector<ContactMultiset::Key> slots;
  for (int a = 1; a <= deg; ++a) {
    for (int i = 0; i < basis_size; ++i) slots.emplace_back(a, i);
  }
  std::vector<ContactMultiset> out;
  ContactMultiset current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t slot, int left) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    if (slot == slots.size()) return;
    const auto [a, i] = slots[slot];
    if (a > left) return;
    for (int c = left / a; c >= 0; --c) {
      ContactMultiset saved = current;
      current.add(a, i, c);
      rec(slot + 1, left - a * c);
      current = std::move(saved);
    }
  };
  rec(0, deg);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sumkit
