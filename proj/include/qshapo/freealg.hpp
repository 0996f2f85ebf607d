#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qshapo/roots.hpp"
#include "qshapo/scalars.hpp"

namespace qshapo {

// A word in the letters f_1..f_N; each char holds a letter index.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
Word make_word(const std::vector<int>& letters);
std::vector<int> word_letters(const Word& w);
RootVec multidegree(const Word& w, int n);
std::string word_text(const Word& w);  // "f2*f1*f1", "1" for the empty word

// Degree-lexicographic order, letters compared left to right with f_1 < f_2 < ...
struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline RatQ coeff_mul(const RatQ& a, const RatQ& b) { return a * b; }
inline WeightScalar coeff_mul(const WeightScalar& a, const RatQ& b) { return a * b; }

// Finite linear combination of words with coefficients in C (RatQ or WeightScalar).
template <class C>
class NCPoly {
 public:
  using Terms = std::map<Word, C, DegLex>;

  NCPoly() = default;
  explicit NCPoly(const Word& w, C c = C(1)) { add(w, c); }

  static NCPoly letter(int i) { return NCPoly(make_word({i})); }
  static NCPoly one() { return NCPoly(Word()); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  C coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? C() : it->second;
  }
  const Word& leading_word() const { return t_.rbegin()->first; }
  int max_degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first.size()); }

  void add(const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) r.add(wa + wb, ca * cb);
    return r;
  }
  NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
  NCPoly scaled(const C& s) const {
    NCPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : t_) r.add(w, c * s);
    return r;
  }
  NCPoly scaled_q(const RatQ& s) const {
    NCPoly r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : t_) r.add(w, coeff_mul(c, s));
    return r;
  }
  NCPoly lmul_word(const Word& w) const {
    NCPoly r;
    for (const auto& [x, c] : t_) r.t_.emplace(w + x, c);
    return r;
  }
  NCPoly rmul_word(const Word& w) const {
    NCPoly r;
    for (const auto& [x, c] : t_) r.t_.emplace(x + w, c);
    return r;
  }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += "(" + it->second.to_string() + ")*" + word_text(it->first);
    }
    return s;
  }

 private:
  Terms t_;
};

using NCPolyQ = NCPoly<RatQ>;
using NCPolyW = NCPoly<WeightScalar>;

// Lift a RatQ polynomial to WeightScalar coefficients in nvars symbols.
NCPolyW lift(const NCPolyQ& p, int nvars);

// Right-hand sides of the q-Serre relations of U_q(n^-) in the letters f_1..f_N.
std::vector<NCPolyQ> serre_relations(int n);

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(int needed, int cap)
      : std::runtime_error("word degree " + std::to_string(needed) + " exceeds rewrite cap " +
                           std::to_string(cap) + "; rebuild with cap >= " + std::to_string(needed)),
        needed_(needed) {}
  int needed() const { return needed_; }

 private:
  int needed_;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rule {
  Word lead;
  NCPolyQ tail;  // lead rewrites to tail
};

struct CompletionLimits {
  std::size_t max_rules = 200000;
};

// Header of the serialized form: "<magic> <version>".
inline constexpr const char* kRewriteMagic = "qshapo-rewrite-system";
inline constexpr int kRewriteFormatVersion = 1;

class RewriteSystem {
 public:
  RewriteSystem(int n, int cap, std::vector<Rule> rules);

  int rank() const { return n_; }
  int cap() const { return cap_; }
  const std::vector<Rule>& rules() const { return rules_; }

  // Leftmost rule occurrence in w: (position, rule index), or position npos.
  std::pair<std::size_t, std::size_t> find_reducible(const Word& w) const;
  bool is_normal(const Word& w) const { return find_reducible(w).first == Word::npos; }

  // Normal form of a single word (memoized).
  NCPolyQ normal_form_word(const Word& w) const;

  template <class C>
  NCPoly<C> normal_form(const NCPoly<C>& p) const {
    NCPoly<C> r;
    for (const auto& [w, c] : p.terms()) {
      if (static_cast<int>(w.size()) > cap_) throw CapExceeded(static_cast<int>(w.size()), cap_);
      if (is_normal(w)) {
        r.add(w, c);
        continue;
      }
      NCPolyQ nf = normal_form_word(w);
      for (const auto& [x, k] : nf.terms()) r.add(x, coeff_mul(c, k));
    }
    return r;
  }

  std::string serialize() const;
  static RewriteSystem deserialize(const std::string& text);

  std::size_t cache_size() const;

 private:
  struct Cache {
    mutable std::shared_mutex mu;
    std::unordered_map<Word, NCPolyQ> nf;
  };

  int n_;
  int cap_;
  std::vector<Rule> rules_;
  std::unordered_map<Word, std::size_t> index_;
  std::vector<std::size_t> lead_lengths_;
  std::shared_ptr<Cache> cache_;
};

// Degree-truncated overlap completion of a homogeneous two-sided ideal.
RewriteSystem complete(int n, const std::vector<NCPolyQ>& relations, int cap,
                       const CompletionLimits& limits = {});

// Completion of the q-Serre ideal.
RewriteSystem build_serre_system(int n, int cap, const CompletionLimits& limits = {});

// Process-wide Serre system for rank n with cap at least `cap`; rebuilt when a larger cap is asked for.
// Throws CapExceeded when `cap` is above the configured limit.
std::shared_ptr<const RewriteSystem> shared_serre_system(int n, int cap);
using SystemBuilder = std::function<RewriteSystem(int n, int cap)>;
void set_system_builder(SystemBuilder builder);  // empty resets to build_serre_system
void set_cap_limit(int limit);
int cap_limit();

// Normal words of multidegree mu in deglex order.
std::vector<Word> normal_words(const RewriteSystem& rs, const RootVec& mu);
std::size_t dim_weight_space(const RewriteSystem& rs, const RootVec& mu);

struct ConfluenceReport {
  std::size_t overlaps_checked = 0;
  std::size_t inclusions = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && inclusions == 0; }
};
ConfluenceReport audit_confluence(const RewriteSystem& rs, int max_degree);

}  // namespace qshapo
