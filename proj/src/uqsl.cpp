#include "qshapo/uqsl.hpp"

#include <functional>
#include <stdexcept>

namespace qshapo {

PBWMonomial PBWMonomial::from_index_set(const IndexSet& I) {
  PBWMonomial m;
  for (std::size_t k = 1; k < I.elems.size(); ++k) m.factors.emplace_back(I.elems[k - 1], I.elems[k]);
  return m;
}

PBWMonomial PBWMonomial::pi0(int n, int m) {
  PBWMonomial r;
  for (int i = 1; i <= n; ++i)
    for (int k = 0; k < m; ++k) r.factors.emplace_back(i, i + 1);
  return r;
}

bool PBWMonomial::is_ordered() const {
  for (std::size_t k = 1; k < factors.size(); ++k)
    if (factors[k] < factors[k - 1]) return false;
  return true;
}

RootVec PBWMonomial::multidegree(int n) const {
  RootVec r = RootVec::zero(n);
  for (auto [a, b] : factors) {
    if (a < 1 || b > n + 1 || a >= b) throw std::out_of_range("PBWMonomial: factor out of range");
    for (int t = a; t < b; ++t) ++r.coords[t - 1];
  }
  return r;
}

std::string PBWMonomial::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (auto [a, b] : factors) s += "f[" + std::to_string(a) + "," + std::to_string(b) + "]";
  return s;
}

std::string PBWMonomial::to_latex() const {
  if (factors.empty()) return "1";
  std::string s;
  std::size_t k = 0;
  while (k < factors.size()) {
    std::size_t e = k;
    while (e < factors.size() && factors[e] == factors[k]) ++e;
    s += "f_{" + std::to_string(factors[k].first) + "," + std::to_string(factors[k].second) + "}";
    if (e - k > 1) s += "^{" + std::to_string(e - k) + "}";
    k = e;
  }
  return s;
}

NCPolyQ jimbo(int i, int j) {
  if (i < 1 || j <= i || j > 120) throw std::out_of_range("jimbo: need 1 <= i < j");
  static std::mutex mu;
  static std::map<std::pair<int, int>, NCPolyQ> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({i, j});
    if (it != cache.end()) return it->second;
  }
  NCPolyQ r;
  if (j == i + 1) {
    r = NCPolyQ::letter(i);
  } else {
    NCPolyQ prev = jimbo(i, j - 1);
    Word last = make_word({j - 1});
    r = prev.rmul_word(last).scaled(RatQ::q_pow(1)) - prev.lmul_word(last).scaled(RatQ::q_pow(-1));
  }
  std::lock_guard lock(mu);
  cache.emplace(std::make_pair(i, j), r);
  return r;
}

NCPolyQ expand_pbw(const PBWMonomial& m) {
  NCPolyQ r = NCPolyQ::one();
  for (auto [a, b] : m.factors) r = r * jimbo(a, b);
  return r;
}

std::vector<PBWMonomial> pbw_monomials(const RootVec& mu) {
  int n = mu.rank();
  std::vector<std::pair<int, int>> roots;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n + 1; ++b) roots.emplace_back(a, b);
  std::vector<PBWMonomial> out;
  if (!mu.is_nonnegative()) return out;
  std::vector<int> rem = mu.coords;
  PBWMonomial cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    bool done = true;
    for (int c : rem)
      if (c) done = false;
    if (done) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < roots.size(); ++k) {
      auto [a, b] = roots[k];
      bool ok = true;
      for (int t = a; t < b; ++t)
        if (rem[t - 1] == 0) ok = false;
      if (!ok) continue;
      for (int t = a; t < b; ++t) --rem[t - 1];
      cur.factors.emplace_back(a, b);
      rec(k);
      cur.factors.pop_back();
      for (int t = a; t < b; ++t) ++rem[t - 1];
    }
  };
  rec(0);
  return out;
}

const PbwBasis::Block& PbwBasis::block(const RootVec& mu) const {
  std::lock_guard lock(mu_);
  auto it = blocks_.find(mu);
  if (it != blocks_.end()) return *it->second;
  auto b = std::make_unique<Block>();
  b->monomials = pbw_monomials(mu);
  b->words = normal_words(*rs_, mu);
  if (b->monomials.size() != b->words.size())
    throw std::logic_error("PBW basis: " + std::to_string(b->monomials.size()) + " monomials but " +
                           std::to_string(b->words.size()) + " normal words in weight " + mu.to_string());
  std::size_t d = b->words.size();
  for (std::size_t k = 0; k < d; ++k) b->word_index.emplace(b->words[k], k);
  MatrixQ a(d, std::vector<RatQ>(d));
  for (std::size_t j = 0; j < d; ++j) {
    NCPolyQ e = rs_->normal_form(expand_pbw(b->monomials[j]));
    for (const auto& [w, c] : e.terms()) a[b->word_index.at(w)][j] = c;
  }
  auto inv = invert(a);
  if (!inv)
    throw std::logic_error("PBW basis: expansions are linearly dependent in weight " + mu.to_string() +
                           "; the rewrite system is inconsistent");
  b->inverse = std::move(*inv);
  return *blocks_.emplace(mu, std::move(b)).first->second;
}

std::map<PBWMonomial, RatQ> to_pbw(const NCPolyQ& p, std::shared_ptr<const RewriteSystem> rs) {
  return PbwBasis(std::move(rs)).to_pbw(p);
}

CartanElement CartanElement::one(int n) {
  CartanElement c(n);
  c.t_.emplace(Key(n, 0), RatQ(1));
  return c;
}

CartanElement CartanElement::k(const RootVec& gamma, const RatQ& c) {
  CartanElement r(gamma.rank());
  r.add(gamma.coords, c);
  return r;
}

CartanElement CartanElement::h(int i, int n) {
  if (i < 1 || i > n) throw std::out_of_range("h: index out of range");
  RatQ v = RatQ::v_pow(1);
  RatQ denom = (v - v.inverse()).inverse();
  RatQ qinv = RatQ::q_pow(-1);
  RootVec sig = RootSystemA(n).sigma(i);
  CartanElement r = one(n) * (-qinv * v * denom);
  r += k(-4 * sig, qinv * RatQ::v_pow(1 - 2 * i) * denom);
  return r;
}

bool CartanElement::is_one() const {
  if (t_.size() != 1) return false;
  for (int x : t_.begin()->first)
    if (x) return false;
  return t_.begin()->second.is_one();
}

void CartanElement::add(const Key& key, const RatQ& c) {
  if (c.is_zero()) return;
  if (n_ == 0) n_ = static_cast<int>(key.size());
  auto [it, ins] = t_.try_emplace(key, c);
  if (ins) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

CartanElement& CartanElement::operator+=(const CartanElement& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
  if (n_ == 0) n_ = o.n_;
  return *this;
}

CartanElement operator*(const CartanElement& a, const CartanElement& b) {
  CartanElement r(a.n_ ? a.n_ : b.n_);
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      CartanElement::Key k = ka;
      for (std::size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
      r.add(k, ca * cb);
    }
  return r;
}

CartanElement operator*(const CartanElement& a, const RatQ& c) {
  CartanElement r(a.n_);
  for (const auto& [k, x] : a.t_) r.add(k, x * c);
  return r;
}

WeightScalar CartanElement::as_weight_scalar() const {
  WeightScalar s(n_);
  for (const auto& [k, c] : t_) s += WeightScalar::monomial(k, c);
  return s;
}

CartanElement CartanElement::from_weight_scalar(const WeightScalar& s) {
  CartanElement r(s.nvars());
  for (const auto& [e, c] : s.terms()) r.add(e, c);
  return r;
}

std::string CartanElement::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : t_) {
    if (!s.empty()) s += " + ";
    bool trivial = true;
    for (int x : k)
      if (x) trivial = false;
    std::string key;
    for (std::size_t i = 0; i < k.size(); ++i) key += (i ? "," : "") + std::to_string(k[i]);
    if (trivial)
      s += c.to_string();
    else
      s += "(" + c.to_string() + ")*k[" + key + "]";
  }
  return s;
}

int beta_pairing(const Word& w, int beta, int n) {
  int s = 0;
  for (char ch : w) {
    int l = static_cast<int>(ch);
    if (l == beta)
      s += 2;
    else if (l == beta - 1 || l == beta + 1)
      s -= 1;
  }
  (void)n;
  return s;
}

namespace {

// (beta, nu) for homogeneous u, nu = -multidegree(u).
int beta_nu(const NCPolyQ& u, int beta, int n) {
  if (u.is_zero()) return 0;
  RootVec md = multidegree(u.leading_word(), n);
  for (const auto& [w, c] : u.terms())
    if (multidegree(w, n) != md) throw std::invalid_argument("expected a homogeneous element");
  return -beta_pairing(u.leading_word(), beta, n);
}

}  // namespace

std::vector<NCPolyQ> ad_F_series(const NCPolyQ& u0, int beta, const RewriteSystem& rs) {
  NCPolyQ u = rs.normal_form(u0);
  std::vector<NCPolyQ> out;
  if (u.is_zero()) return out;
  int limit = u.max_degree() + 2;
  out.push_back(u);
  while (true) {
    NCPolyQ next = rs.normal_form(ad_F(out.back(), beta, rs.rank()));
    if (next.is_zero()) break;
    if (static_cast<int>(out.size()) >= limit)
      throw NilpotencyExceeded("ad_F iteration exceeded the nilpotency cap " + std::to_string(limit));
    out.push_back(std::move(next));
  }
  return out;
}

bool leibniz_check(const NCPolyQ& a, const NCPolyQ& b, int beta, int n, const RewriteSystem& rs) {
  if (n < 0) throw std::invalid_argument("leibniz_check: n must be >= 0");
  NCPolyQ lhs = ad_F_pow(a * b, beta, n, rs);
  NCPolyQ rhs;
  for (int i = 0; i <= n; ++i) {
    NCPolyQ da = ad_F_pow(a, beta, n - i, rs);
    for (int s = 0; s < i; ++s) da = sigma_aut(da, beta, rs.rank());
    NCPolyQ db = ad_F_pow(b, beta, i, rs);
    rhs += (da * db).scaled(RatQ::v_pow(i * (n - i)) * qbinom(n, i));
  }
  return rs.normal_form(rhs) == lhs;
}

NCPolyQ fell_u_expand(int ell, const NCPolyQ& u, int beta, const RewriteSystem& rs) {
  if (ell < 0) throw std::invalid_argument("fell_u_expand: ell must be >= 0");
  int bn = beta_nu(u, beta, rs.rank());
  NCPolyQ r;
  for (int i = 0; i <= ell; ++i) {
    NCPolyQ ad = ad_F_pow(u, beta, ell - i, rs);
    RatQ c = RatQ::v_pow(-i * (ell - i)) * qbinom(ell, i) * RatQ::v_pow(i * bn);
    r += ad.rmul_word(Word(i, static_cast<char>(beta))).scaled(c);
  }
  return rs.normal_form(r);
}

NCPolyQ lemx_expand(int ell, const NCPolyQ& u, int beta, const RewriteSystem& rs) {
  int bn = beta_nu(u, beta, rs.rank());
  auto series = ad_F_series(u, beta, rs);
  NCPolyQ r;
  for (int i = 0; i < static_cast<int>(series.size()) && i <= ell; ++i) {
    RatQ c = RatQ::v_pow(-i * (ell - i)) * RatQ::v_pow((ell - i) * bn) * qbinom(ell, i);
    r += series[i].rmul_word(Word(ell - i, static_cast<char>(beta))).scaled(c);
  }
  return rs.normal_form(r);
}

namespace {

bool is_F(const NCPolyQ& u, int beta) {
  return u.size() == 1 && u.terms().begin()->first == make_word({beta}) &&
         u.terms().begin()->second.is_one();
}

}  // namespace

FTail<RatQ> psi(int r, const NCPolyQ& u, int beta, const RewriteSystem& rs) {
  FTail<RatQ> out;
  out.beta = beta;
  if (is_F(u, beta)) {
    out.parts[0] = u;
    return out;
  }
  int bn = beta_nu(u, beta, rs.rank());
  auto series = ad_F_series(u, beta, rs);
  for (int i = 0; i < static_cast<int>(series.size()); ++i) {
    RatQ c = RatQ::v_pow(-i * (r - i)) * qbinom(r, i) * RatQ::v_pow((r - i) * bn);
    if (c.is_zero()) continue;
    out.parts[-i] = series[i].scaled(c);
  }
  return out;
}

FTail<WeightScalar> psi_formal(const NCPolyQ& u, int beta, const RewriteSystem& rs) {
  FTail<WeightScalar> out;
  out.beta = beta;
  if (is_F(u, beta)) {
    out.parts[0] = lift(u, 1);
    return out;
  }
  int bn = beta_nu(u, beta, rs.rank());
  auto series = ad_F_series(u, beta, rs);
  for (int i = 0; i < static_cast<int>(series.size()); ++i) {
    WeightScalar c = WeightScalar::monomial({bn - i}, RatQ::v_pow(i * i - i * bn)) * qbinom_formal(i);
    out.parts[-i] = lift(series[i], 1).scaled(c);
  }
  return out;
}

bool psi_shift_check(const NCPolyQ& u, int beta, const RewriteSystem& rs) {
  FTail<WeightScalar> p = psi_formal(u, beta, rs);
  int k = p.parts.empty() ? 0 : -p.parts.begin()->first;
  Word f = make_word({beta});
  // F Psi_t(u) F^{-1} F^{k+1} versus Psi_{vt}(u) F^{k+1}
  NCPolyW lhs = rs.normal_form(p.times_F(k, rs).lmul_word(f));
  FTail<WeightScalar> shifted = p;
  for (auto& [e, poly] : shifted.parts) {
    NCPolyW s;
    for (const auto& [w, c] : poly.terms()) s.add(w, c.rescale({2}));
    poly = s;
  }
  NCPolyW rhs = shifted.times_F(k + 1, rs);
  return lhs == rhs;
}

namespace {

std::optional<NCPolyQ> divide(const NCPolyQ& x0, int beta, int k, const RewriteSystem& rs, bool right) {
  NCPolyQ x = rs.normal_form(x0);
  if (x.is_zero() || k == 0) return x;
  int n = rs.rank();
  RootVec md = multidegree(x.leading_word(), n);
  RootVec mu = md;
  mu.coords[beta - 1] -= k;
  if (!mu.is_nonnegative()) return std::nullopt;
  auto basis = normal_words(rs, mu);
  auto rows = normal_words(rs, md);
  std::map<Word, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
  MatrixQ a(rows.size(), std::vector<RatQ>(basis.size()));
  Word fk(k, static_cast<char>(beta));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    NCPolyQ col = rs.normal_form(NCPolyQ(right ? basis[j] + fk : fk + basis[j]));
    for (const auto& [w, c] : col.terms()) a[row_index.at(w)][j] = c;
  }
  std::vector<RatQ> b(rows.size());
  for (const auto& [w, c] : x.terms()) {
    auto it = row_index.find(w);
    if (it == row_index.end()) throw std::invalid_argument("divide: element is not homogeneous");
    b[it->second] = c;
  }
  auto sol = solve(a, b);
  if (!sol) return std::nullopt;
  NCPolyQ y;
  for (std::size_t j = 0; j < basis.size(); ++j) y.add(basis[j], (*sol)[j]);
  return y;
}

}  // namespace

std::optional<NCPolyQ> right_divide(const NCPolyQ& x, int beta, int k, const RewriteSystem& rs) {
  return divide(x, beta, k, rs, true);
}

std::optional<NCPolyQ> left_divide(const NCPolyQ& x, int beta, int k, const RewriteSystem& rs) {
  return divide(x, beta, k, rs, false);
}

}  // namespace qshapo
