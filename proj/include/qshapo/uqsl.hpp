#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "qshapo/freealg.hpp"
#include "qshapo/linalg.hpp"
#include "qshapo/roots.hpp"
#include "qshapo/scalars.hpp"

namespace qshapo {

// Ordered product f_{m_1,n_1} ... f_{m_s,n_s} of Jimbo root vectors.
struct PBWMonomial {
  std::vector<std::pair<int, int>> factors;

  PBWMonomial() = default;
  explicit PBWMonomial(std::vector<std::pair<int, int>> f) : factors(std::move(f)) {}
  // f_I = f_{j0,j1} f_{j1,j2} ... for I = {j0 < j1 < ...}
  static PBWMonomial from_index_set(const IndexSet& I);
  // f_{1,2}^m f_{2,3}^m ... f_{n,n+1}^m, the all-simple monomial of weight m*eta
  static PBWMonomial pi0(int n, int m);

  bool is_ordered() const;  // lexicographically nondecreasing
  RootVec multidegree(int n) const;
  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) = default;
  friend auto operator<=>(const PBWMonomial& a, const PBWMonomial& b) = default;

  std::string to_string() const;  // "f[1,2]f[2,3]", "1" when empty
  std::string to_latex() const;
};

NCPolyQ jimbo(int i, int j);
NCPolyQ expand_pbw(const PBWMonomial& m);
inline NCPolyQ f_of(const IndexSet& I) { return expand_pbw(PBWMonomial::from_index_set(I)); }

// All ordered PBW monomials of multidegree mu, in lexicographic order.
std::vector<PBWMonomial> pbw_monomials(const RootVec& mu);

// Change of basis from normal words to PBW monomials, cached per weight.
class PbwBasis {
 public:
  explicit PbwBasis(std::shared_ptr<const RewriteSystem> rs) : rs_(std::move(rs)) {}

  const RewriteSystem& system() const { return *rs_; }

  template <class C>
  std::map<PBWMonomial, C> to_pbw(const NCPoly<C>& p) const {
    std::map<PBWMonomial, C> out;
    if (p.is_zero()) return out;
    NCPoly<C> nf = rs_->normal_form(p);
    if (nf.is_zero()) return out;
    RootVec mu = multidegree(nf.leading_word(), rs_->rank());
    const Block& b = block(mu);
    std::vector<const C*> x(b.words.size(), nullptr);
    for (const auto& [w, c] : nf.terms()) {
      auto it = b.word_index.find(w);
      if (it == b.word_index.end()) throw std::invalid_argument("to_pbw: polynomial is not homogeneous");
      x[it->second] = &c;
    }
    for (std::size_t i = 0; i < b.monomials.size(); ++i) {
      C acc;
      for (std::size_t j = 0; j < x.size(); ++j)
        if (x[j] && !b.inverse[i][j].is_zero()) acc += coeff_mul(*x[j], b.inverse[i][j]);
      if (!acc.is_zero()) out.emplace(b.monomials[i], acc);
    }
    return out;
  }

  template <class C>
  NCPoly<C> from_pbw(const std::map<PBWMonomial, C>& coords) const {
    NCPoly<C> r;
    for (const auto& [m, c] : coords) {
      NCPolyQ e = rs_->normal_form(expand_pbw(m));
      for (const auto& [w, k] : e.terms()) r.add(w, coeff_mul(c, k));
    }
    return r;
  }

  // Number of PBW monomials of weight mu; equals the number of normal words.
  std::size_t dimension(const RootVec& mu) const { return block(mu).monomials.size(); }

 private:
  struct Block {
    std::vector<PBWMonomial> monomials;
    std::vector<Word> words;
    std::map<Word, std::size_t> word_index;
    MatrixQ inverse;  // PBW coordinates = inverse * word coordinates
  };
  const Block& block(const RootVec& mu) const;

  std::shared_ptr<const RewriteSystem> rs_;
  mutable std::mutex mu_;
  mutable std::map<RootVec, std::unique_ptr<Block>> blocks_;
};

std::map<PBWMonomial, RatQ> to_pbw(const NCPolyQ& p, std::shared_ptr<const RewriteSystem> rs);

// Sum of c_gamma k_gamma, gamma a root-lattice vector (K_mu = k_{2mu}).
class CartanElement {
 public:
  using Key = std::vector<int>;

  CartanElement() = default;
  explicit CartanElement(int n) : n_(n) {}
  static CartanElement one(int n);
  static CartanElement k(const RootVec& gamma, const RatQ& c = RatQ(1));
  static CartanElement K(const RootVec& mu) { return k(2 * mu); }
  // h_i = -q^-1 v^{-(i-1)} K_{sigma_i}^{-1} [K_{sigma_i}; i]_v
  static CartanElement h(int i, int n);

  int rank() const { return n_; }
  const std::map<Key, RatQ>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const;

  CartanElement& operator+=(const CartanElement& o);
  friend CartanElement operator+(CartanElement a, const CartanElement& b) { return a += b; }
  friend CartanElement operator*(const CartanElement& a, const CartanElement& b);
  friend CartanElement operator*(const CartanElement& a, const RatQ& c);
  friend bool operator==(const CartanElement& a, const CartanElement& b) = default;

  // Converts to and from the evaluation image: k_gamma <-> prod y_i^{gamma_i}.
  WeightScalar as_weight_scalar() const;
  static CartanElement from_weight_scalar(const WeightScalar& s);

  std::string to_string() const;

 private:
  void add(const Key& k, const RatQ& c);
  int n_ = 0;
  std::map<Key, RatQ> t_;
};

using BorelElement = std::map<PBWMonomial, CartanElement>;

// Adjoint calculus for F = f_beta.

// (alpha_beta, multidegree of w)
int beta_pairing(const Word& w, int beta, int n);

template <class C>
NCPoly<C> sigma_aut(const NCPoly<C>& x, int beta, int n) {
  NCPoly<C> r;
  for (const auto& [w, c] : x.terms()) r.add(w, coeff_mul(c, RatQ::v_pow(-beta_pairing(w, beta, n))));
  return r;
}

// f_beta x - sigma(x) f_beta, in the free algebra.
template <class C>
NCPoly<C> ad_F(const NCPoly<C>& x, int beta, int n) {
  Word f = make_word({beta});
  return x.lmul_word(f) - sigma_aut(x, beta, n).rmul_word(f);
}

template <class C>
NCPoly<C> ad_F_pow(const NCPoly<C>& x, int beta, int k, const RewriteSystem& rs) {
  NCPoly<C> cur = rs.normal_form(x);
  for (int i = 0; i < k && !cur.is_zero(); ++i) cur = rs.normal_form(ad_F(cur, beta, rs.rank()));
  return cur;
}

class NilpotencyExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// [u, ad u, ad^2 u, ...] up to the last nonzero iterate (normal forms). Throws
// NilpotencyExceeded if more than height+2 iterates are nonzero.
std::vector<NCPolyQ> ad_F_series(const NCPolyQ& u, int beta, const RewriteSystem& rs);

bool leibniz_check(const NCPolyQ& a, const NCPolyQ& b, int beta, int n, const RewriteSystem& rs);

// Right-hand side of F^l u = sum_i v^{-i(l-i)} [l,i] v^{i(beta,nu)} ad^{l-i}(u) F^i, normal form.
NCPolyQ fell_u_expand(int ell, const NCPolyQ& u, int beta, const RewriteSystem& rs);
// Same identity re-indexed with the sum cut at the nilpotency index.
NCPolyQ lemx_expand(int ell, const NCPolyQ& u, int beta, const RewriteSystem& rs);

// sum_e parts[e] * F^e with F = f_beta, F-exponents possibly negative.
template <class C>
struct FTail {
  int beta = 0;
  std::map<int, NCPoly<C>> parts;

  // Multiply on the right by F^k; every resulting exponent must be >= 0.
  NCPoly<C> times_F(int k, const RewriteSystem& rs) const {
    NCPoly<C> r;
    for (const auto& [e, p] : parts) {
      if (p.is_zero()) continue;
      if (e + k < 0) throw std::domain_error("FTail: negative F-power remains");
      r += p.rmul_word(Word(e + k, static_cast<char>(beta)));
    }
    return rs.normal_form(r);
  }
};

// Psi_r(u) = sum_i v^{-i(r-i)} [r,i]_v v^{(r-i)(beta,nu)} ad^i(u) F^{-i}; u = F gives F.
FTail<RatQ> psi(int r, const NCPolyQ& u, int beta, const RewriteSystem& rs);
// Same with r formal: coefficients are Laurent polynomials in t = v^r (one symbol).
FTail<WeightScalar> psi_formal(const NCPolyQ& u, int beta, const RewriteSystem& rs);
// Psi_r(F u F^-1) = Psi_{r+1}(u) for formal r, checked after right multiplication by F^{k+1}.
bool psi_shift_check(const NCPolyQ& u, int beta, const RewriteSystem& rs);

// Exact division by F^k = f_beta^k on the right (x = y F^k) or left (x = F^k y);
// nullopt if x is not divisible.
std::optional<NCPolyQ> right_divide(const NCPolyQ& x, int beta, int k, const RewriteSystem& rs);
std::optional<NCPolyQ> left_divide(const NCPolyQ& x, int beta, int k, const RewriteSystem& rs);

}  // namespace qshapo
