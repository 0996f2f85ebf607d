#include "qshapo/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qshapo {

int RootVec::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

bool RootVec::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

RootVec& RootVec::operator+=(const RootVec& o) {
  if (o.rank() != rank()) throw std::invalid_argument("RootVec: rank mismatch");
  for (int i = 0; i < rank(); ++i) coords[i] += o.coords[i];
  return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
  if (o.rank() != rank()) throw std::invalid_argument("RootVec: rank mismatch");
  for (int i = 0; i < rank(); ++i) coords[i] -= o.coords[i];
  return *this;
}

RootVec operator*(int k, RootVec a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string RootVec::to_string() const { return join(coords); }
std::string Weight::to_string() const { return join(pairings); }

Weight Weight::parse(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("weight: cannot parse '" + text + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw std::invalid_argument("weight: cannot parse '" + text + "'");
    w.pairings.push_back(x);
  }
  if (w.pairings.empty()) throw std::invalid_argument("weight: empty");
  return w;
}

RootSystemA::RootSystemA(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("RootSystemA: rank must be >= 1");
}

void RootSystemA::check(int r) const {
  if (r != n_) throw std::invalid_argument("RootSystemA: rank mismatch");
}

int RootSystemA::cartan(int i, int j) const {
  if (i == j) return 2;
  return (i - j == 1 || j - i == 1) ? -1 : 0;
}

int RootSystemA::pairing(const RootVec& a, const RootVec& b) const {
  check(a.rank());
  check(b.rank());
  int s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a.coords[i] == 0) continue;
    s += 2 * a.coords[i] * b.coords[i];
    if (i > 0) s -= a.coords[i] * b.coords[i - 1];
    if (i + 1 < n_) s -= a.coords[i] * b.coords[i + 1];
  }
  return s;
}

int RootSystemA::pairing(const Weight& l, const RootVec& g) const {
  check(l.rank());
  check(g.rank());
  int s = 0;
  for (int i = 0; i < n_; ++i) s += l.pairings[i] * g.coords[i];
  return s;
}

int RootSystemA::rho_pairing(const RootVec& g) const {
  check(g.rank());
  return g.height();
}

int RootSystemA::lambda_rho_pairing(const Weight& l, const RootVec& g) const {
  return pairing(l, g) + rho_pairing(g);
}

RootVec RootSystemA::simple(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("simple root index out of range");
  RootVec r = RootVec::zero(n_);
  r.coords[i - 1] = 1;
  return r;
}

RootVec RootSystemA::sigma(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("sigma index out of range");
  RootVec r = RootVec::zero(n_);
  for (int k = 0; k < i; ++k) r.coords[k] = 1;
  return r;
}

RootVec RootSystemA::root(int i, int j) const {
  if (i < 1 || j > n_ + 1 || i >= j) throw std::out_of_range("root index pair out of range");
  RootVec r = RootVec::zero(n_);
  for (int k = i; k < j; ++k) r.coords[k - 1] = 1;
  return r;
}

Weight RootSystemA::dot_reflect(int i, const Weight& l) const {
  check(l.rank());
  if (i < 1 || i > n_) throw std::out_of_range("dot_reflect: index out of range");
  int s = l.pairings[i - 1] + 1;
  Weight r = l;
  for (int j = 1; j <= n_; ++j) r.pairings[j - 1] -= s * cartan(i, j);
  return r;
}

Weight RootSystemA::sub(const Weight& l, const RootVec& g) const {
  check(l.rank());
  check(g.rank());
  Weight r = l;
  for (int j = 1; j <= n_; ++j) {
    int s = 0;
    for (int i = 1; i <= n_; ++i) s += g.coords[i - 1] * cartan(i, j);
    r.pairings[j - 1] -= s;
  }
  return r;
}

IndexSet::IndexSet(std::vector<int> e) : elems(std::move(e)) {
  for (std::size_t k = 1; k < elems.size(); ++k)
    if (elems[k - 1] >= elems[k]) throw std::invalid_argument("IndexSet: not strictly increasing");
}

bool IndexSet::contains(int x) const { return std::binary_search(elems.begin(), elems.end(), x); }

IndexSet IndexSet::without(int x) const {
  IndexSet r;
  for (int e : elems)
    if (e != x) r.elems.push_back(e);
  return r;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(elems[i]);
  }
  return s + "}";
}

namespace {

bool within(const IndexSet& I, int hi) {
  return !I.elems.empty() && I.elems.front() >= 1 && I.elems.back() <= hi;
}

}  // namespace

bool in_II(const IndexSet& I, int n) {
  return within(I, n + 1) && I.elems.front() == 1 && I.elems.back() == n + 1;
}

bool in_JJ(const IndexSet& J, int n) {
  return within(J, n) && J.elems.front() == 1 && J.elems.back() == n;
}

bool in_S(const IndexSet& I, int i) { return I.contains(i) && I.contains(i + 1); }

namespace {

// Subsets of [top] containing 1 and top, ordered by bitmask of the interior.
std::vector<IndexSet> enumerate_ends(int top) {
  std::vector<IndexSet> out;
  if (top == 1) {
    out.push_back(IndexSet({1}));
    return out;
  }
  int interior = top - 2;
  for (std::uint64_t mask = 0; mask < (1ULL << interior); ++mask) {
    std::vector<int> e{1};
    for (int k = 0; k < interior; ++k)
      if (mask & (1ULL << k)) e.push_back(k + 2);
    e.push_back(top);
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<IndexSet> enumerate_II(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_II: N must be >= 1");
  return enumerate_ends(n + 1);
}

std::vector<IndexSet> enumerate_JJ(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_JJ: N must be >= 1");
  return enumerate_ends(n);
}

std::set<int> r_of(const IndexSet& I, int n) {
  if (!in_II(I, n)) throw std::invalid_argument("r_of: " + I.to_string() + " is not in the index family");
  std::set<int> r;
  for (int s = 1; s <= n + 1; ++s)
    if (!I.contains(s)) r.insert(s - 1);
  return r;
}

Split split_I(const IndexSet& I, int i, int n) {
  if (i < 1 || i > n || !in_S(I, i))
    throw std::invalid_argument("split_I: " + I.to_string() + " does not contain i, i+1 for i=" +
                                std::to_string(i));
  Split s;
  if (i > 1) s.plus = I.without(i);
  if (i < n) s.minus = I.without(i + 1);
  for (int e : I.elems) {
    if (e <= i) s.I1.elems.push_back(e);
    if (e < i) s.I1p.elems.push_back(e);
    if (e >= i + 1) s.I2.elems.push_back(e);
    if (e > i + 1) s.I2m.elems.push_back(e);
  }
  return s;
}

IndexSet J1_of(const IndexSet& J, int n) {
  if (!in_JJ(J, n)) throw std::invalid_argument("J1_of: set must contain 1 and N");
  IndexSet r = J;
  r.elems.push_back(n + 1);
  return r;
}

IndexSet J2_of(const IndexSet& J, int n) {
  if (!in_JJ(J, n)) throw std::invalid_argument("J2_of: set must contain 1 and N");
  if (n == 1) throw std::invalid_argument("J2_of: undefined for N = 1");
  IndexSet r = J.without(n);
  r.elems.push_back(n + 1);
  return r;
}

std::vector<Weight> hyperplane_sample(int n, int m, int count, std::uint64_t seed, int range) {
  if (count <= 0) throw std::invalid_argument("hyperplane_sample: count must be positive");
  if (m < 1) throw std::invalid_argument("hyperplane_sample: m must be >= 1");
  if (n == 1 && count > 1) throw std::invalid_argument("hyperplane_sample: only one weight for N = 1");
  std::mt19937_64 rng(seed);
  std::set<Weight> seen;
  std::vector<Weight> out;
  int misses = 0;
  while (static_cast<int>(out.size()) < count) {
    // Widen the box when it is (nearly) exhausted.
    if (misses > 200) {
      ++range;
      misses = 0;
    }
    std::uniform_int_distribution<int> dist(-range, range);
    std::vector<int> p(n);
    int s = 0;
    for (int i = 0; i + 1 < n; ++i) {
      p[i] = dist(rng);
      s += p[i];
    }
    p[n - 1] = m - n - s;
    Weight w(p);
    if (seen.insert(w).second) {
      out.push_back(w);
    } else {
      ++misses;
    }
  }
  return out;
}

std::vector<Weight> lambda_sample(int n, int m, int count, std::uint64_t seed, int range) {
  if (count <= 0) throw std::invalid_argument("lambda_sample: count must be positive");
  if (m < 1) throw std::invalid_argument("lambda_sample: m must be >= 1");
  RootSystemA rs(n);
  // Grow the box until it holds enough candidates.
  std::vector<std::vector<int>> cands;
  int box = std::max(range, 1);
  while (true) {
    cands.clear();
    std::vector<int> cur(n - 1, 1);
    std::function<void(int)> rec = [&](int k) {
      if (k == n - 1) {
        cands.push_back(cur);
        return;
      }
      for (int x = 1; x <= box; ++x) {
        cur[k] = x;
        rec(k + 1);
      }
    };
    rec(0);
    if (static_cast<int>(cands.size()) >= count || n == 1) break;
    ++box;
  }
  std::mt19937_64 rng(seed);
  std::shuffle(cands.begin(), cands.end(), rng);
  std::vector<Weight> out;
  for (const auto& c : cands) {
    if (static_cast<int>(out.size()) == count) break;
    std::vector<int> nu(n);
    nu[0] = m - 1;
    for (int i = 1; i < n; ++i) nu[i] = c[i - 1] - 1;
    Weight l(nu);
    for (int i = 2; i <= n; ++i) l = rs.dot_reflect(i, l);
    out.push_back(l);
  }
  if (static_cast<int>(out.size()) < count && n > 1)
    throw std::runtime_error("lambda_sample: not enough distinct weights");
  return out;
}

std::uint64_t kostant_count(const RootVec& mu) {
  int n = mu.rank();
  if (!mu.is_nonnegative()) return 0;
  // Positive roots alpha_i + ... + alpha_{j-1}, consumed in a fixed order with
  // multiplicities, memoized on the remaining vector.
  std::vector<std::pair<int, int>> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) roots.emplace_back(i, j);
  std::map<std::pair<std::size_t, std::vector<int>>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, std::vector<int>&)> rec = [&](std::size_t k,
                                                                         std::vector<int>& rem) {
    if (k == roots.size()) {
      return std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; }) ? std::uint64_t{1}
                                                                                 : std::uint64_t{0};
    }
    auto key = std::make_pair(k, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    auto [a, b] = roots[k];
    std::uint64_t total = 0;
    int used = 0;
    while (true) {
      total += rec(k + 1, rem);
      bool ok = true;
      for (int t = a; t < b; ++t)
        if (rem[t - 1] == 0) ok = false;
      if (!ok) break;
      for (int t = a; t < b; ++t) --rem[t - 1];
      ++used;
    }
    for (int t = a; t < b; ++t) rem[t - 1] += used;
    memo[key] = total;
    return total;
  };
  std::vector<int> rem = mu.coords;
  return rec(0, rem);
}

}  // namespace qshapo
