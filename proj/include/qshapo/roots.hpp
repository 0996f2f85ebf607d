#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qshapo {

// Element of the root lattice in the basis alpha_1..alpha_N.
struct RootVec {
  std::vector<int> coords;

  RootVec() = default;
  explicit RootVec(std::vector<int> c) : coords(std::move(c)) {}
  static RootVec zero(int n) { return RootVec(std::vector<int>(n, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  int height() const;
  bool is_nonnegative() const;
  int operator[](int i) const { return coords[i]; }  // 0-based

  RootVec& operator+=(const RootVec& o);
  RootVec& operator-=(const RootVec& o);
  friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
  friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
  friend RootVec operator*(int k, RootVec a);
  friend bool operator==(const RootVec& a, const RootVec& b) = default;
  friend auto operator<=>(const RootVec& a, const RootVec& b) = default;

  std::string to_string() const;  // "1,0,2"
};

// Weight lambda given by its pairings ((lambda,alpha_1),...,(lambda,alpha_N)).
struct Weight {
  std::vector<int> pairings;

  Weight() = default;
  explicit Weight(std::vector<int> p) : pairings(std::move(p)) {}
  int rank() const { return static_cast<int>(pairings.size()); }
  int operator[](int i) const { return pairings[i]; }  // 0-based
  friend bool operator==(const Weight& a, const Weight& b) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) = default;

  static Weight parse(const std::string& text);
  std::string to_string() const;
};

class RootSystemA {
 public:
  explicit RootSystemA(int n);

  int rank() const { return n_; }
  int cartan(int i, int j) const;  // 1-based
  int pairing(const RootVec& a, const RootVec& b) const;
  int pairing(const Weight& l, const RootVec& g) const;  // (lambda, gamma)
  int rho_pairing(const RootVec& g) const;               // (rho, gamma)
  int lambda_rho_pairing(const Weight& l, const RootVec& g) const;  // (lambda+rho, gamma)

  RootVec simple(int i) const;
  RootVec sigma(int i) const;  // alpha_1 + ... + alpha_i
  RootVec eta() const { return sigma(n_); }
  // alpha_i + ... + alpha_{j-1}, the root of f_{i,j}
  RootVec root(int i, int j) const;

  Weight dot_reflect(int i, const Weight& l) const;
  Weight sub(const Weight& l, const RootVec& g) const;  // lambda - gamma

 private:
  void check(int r) const;
  int n_;
};

// Strictly increasing subset of [N+1].
struct IndexSet {
  std::vector<int> elems;

  IndexSet() = default;
  explicit IndexSet(std::vector<int> e);
  bool contains(int x) const;
  std::size_t size() const { return elems.size(); }
  IndexSet without(int x) const;
  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) = default;
  std::string to_string() const;  // "{1,3,4}"
};

bool in_II(const IndexSet& I, int n);
bool in_JJ(const IndexSet& J, int n);
// i, i+1 in I
bool in_S(const IndexSet& I, int i);

std::vector<IndexSet> enumerate_II(int n);
std::vector<IndexSet> enumerate_JJ(int n);
std::set<int> r_of(const IndexSet& I, int n);

struct Split {
  std::optional<IndexSet> plus;   // I \ {i}, absent for i = 1
  std::optional<IndexSet> minus;  // I \ {i+1}, absent for i = N
  IndexSet I1;                    // elements <= i
  IndexSet I2;                    // elements >= i+1
  IndexSet I1p;                   // elements < i
  IndexSet I2m;                   // elements > i+1
};
Split split_I(const IndexSet& I, int i, int n);

// For J in the set with 1, N: J_1 = J + {N+1}, J_2 = J - {N} + {N+1}.
IndexSet J1_of(const IndexSet& J, int n);
IndexSet J2_of(const IndexSet& J, int n);

// Weights with (lambda+rho, eta) = m, seeded, distinct; entries in [-range, range]
// except the last, which is forced by the hyperplane condition.
std::vector<Weight> hyperplane_sample(int n, int m, int count, std::uint64_t seed, int range = 3);

// Weights lambda = s_N...s_2 . nu with (nu, alpha_1) = m-1 and (nu+rho, alpha_i) in
// [1, range] for i >= 2, so every step of the inductive construction has r >= 1.
std::vector<Weight> lambda_sample(int n, int m, int count, std::uint64_t seed, int range = 3);

// Kostant partition count: ways to write mu as a multiset sum of positive roots.
std::uint64_t kostant_count(const RootVec& mu);

}  // namespace qshapo
