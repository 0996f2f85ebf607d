#include "qshapo/freealg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace qshapo {

Word make_word(std::initializer_list<int> letters) {
  return make_word(std::vector<int>(letters));
}

Word make_word(const std::vector<int>& letters) {
  Word w;
  w.reserve(letters.size());
  for (int l : letters) {
    if (l < 1 || l > 120) throw std::out_of_range("make_word: letter out of range");
    w.push_back(static_cast<char>(l));
  }
  return w;
}

std::vector<int> word_letters(const Word& w) {
  std::vector<int> r;
  r.reserve(w.size());
  for (char c : w) r.push_back(static_cast<int>(c));
  return r;
}

RootVec multidegree(const Word& w, int n) {
  RootVec r = RootVec::zero(n);
  for (char c : w) {
    int l = static_cast<int>(c);
    if (l < 1 || l > n) throw std::out_of_range("multidegree: letter outside alphabet");
    ++r.coords[l - 1];
  }
  return r;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += "f" + std::to_string(static_cast<int>(w[i]));
  }
  return s;
}

NCPolyW lift(const NCPolyQ& p, int nvars) {
  NCPolyW r;
  for (const auto& [w, c] : p.terms()) r.add(w, WeightScalar(nvars, c));
  return r;
}

std::vector<NCPolyQ> serre_relations(int n) {
  std::vector<NCPolyQ> rels;
  RatQ two_v = RatQ::v_pow(1) + RatQ::v_pow(-1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int d = i > j ? i - j : j - i;
      NCPolyQ r;
      if (d == 1) {
        r.add(make_word({i, i, j}), RatQ(1));
        r.add(make_word({i, j, i}), -two_v);
        r.add(make_word({j, i, i}), RatQ(1));
      } else if (i < j) {
        // the commutator relation is listed once per unordered pair
        r.add(make_word({i, j}), RatQ(1));
        r.add(make_word({j, i}), RatQ(-1));
      } else {
        continue;
      }
      rels.push_back(r);
    }
  return rels;
}

RewriteSystem::RewriteSystem(int n, int cap, std::vector<Rule> rules)
    : n_(n), cap_(cap), rules_(std::move(rules)), cache_(std::make_shared<Cache>()) {
  std::set<std::size_t> lens;
  for (std::size_t k = 0; k < rules_.size(); ++k) {
    if (!index_.emplace(rules_[k].lead, k).second)
      throw std::invalid_argument("RewriteSystem: duplicate leading word");
    lens.insert(rules_[k].lead.size());
  }
  lead_lengths_.assign(lens.begin(), lens.end());
}

std::pair<std::size_t, std::size_t> RewriteSystem::find_reducible(const Word& w) const {
  if (rules_.empty()) return {Word::npos, 0};
  Word probe;
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t len : lead_lengths_) {
      if (p + len > w.size()) break;
      probe.assign(w, p, len);
      auto it = index_.find(probe);
      if (it != index_.end()) return {p, it->second};
    }
  }
  return {Word::npos, 0};
}

NCPolyQ RewriteSystem::normal_form_word(const Word& w0) const {
  if (static_cast<int>(w0.size()) > cap_) throw CapExceeded(static_cast<int>(w0.size()), cap_);
  auto lookup = [&](const Word& w, NCPolyQ& out) {
    std::shared_lock lock(cache_->mu);
    auto it = cache_->nf.find(w);
    if (it == cache_->nf.end()) return false;
    out = it->second;
    return true;
  };
  NCPolyQ result;
  if (lookup(w0, result)) return result;

  // Post-order traversal: a word is resolved once all its one-step successors are.
  std::vector<Word> stack{w0};
  std::unordered_map<Word, NCPolyQ> local;
  auto resolved = [&](const Word& w) -> const NCPolyQ* {
    auto it = local.find(w);
    if (it != local.end()) return &it->second;
    NCPolyQ tmp;
    if (lookup(w, tmp)) return &local.emplace(w, std::move(tmp)).first->second;
    return nullptr;
  };
  while (!stack.empty()) {
    Word w = stack.back();
    if (resolved(w)) {
      stack.pop_back();
      continue;
    }
    auto [pos, ri] = find_reducible(w);
    if (pos == Word::npos) {
      local.emplace(w, NCPolyQ(w));
      stack.pop_back();
      continue;
    }
    const Rule& rule = rules_[ri];
    Word prefix = w.substr(0, pos);
    Word suffix = w.substr(pos + rule.lead.size());
    bool ready = true;
    for (const auto& [t, c] : rule.tail.terms()) {
      Word child = prefix + t + suffix;
      if (!resolved(child)) {
        stack.push_back(std::move(child));
        ready = false;
      }
    }
    if (!ready) continue;
    NCPolyQ nf;
    for (const auto& [t, c] : rule.tail.terms()) {
      const NCPolyQ* sub = resolved(prefix + t + suffix);
      for (const auto& [x, k] : sub->terms()) nf.add(x, c * k);
    }
    local.emplace(w, nf);
    {
      std::unique_lock lock(cache_->mu);
      cache_->nf.emplace(w, std::move(nf));
    }
    stack.pop_back();
  }
  return local.at(w0);
}

std::size_t RewriteSystem::cache_size() const {
  std::shared_lock lock(cache_->mu);
  return cache_->nf.size();
}

namespace {

constexpr const char* kMagic = kRewriteMagic;
constexpr int kFormatVersion = kRewriteFormatVersion;

std::string letters_text(const Word& w) {
  if (w.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(w[i]));
  }
  return s;
}

Word parse_letters(const std::string& s, int n) {
  if (s == "-") return Word();
  std::vector<int> ls;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int l = std::stoi(item);
    if (l < 1 || l > n) throw std::invalid_argument("letter outside alphabet");
    ls.push_back(l);
  }
  return make_word(ls);
}

}  // namespace

std::string RewriteSystem::serialize() const {
  std::ostringstream os;
  os << kMagic << " " << kFormatVersion << "\n";
  os << "rank " << n_ << "\n";
  os << "cap " << cap_ << "\n";
  os << "rules " << rules_.size() << "\n";
  for (const auto& r : rules_) {
    os << "rule " << letters_text(r.lead) << " " << r.tail.size() << "\n";
    for (const auto& [w, c] : r.tail.terms()) os << letters_text(w) << " " << c.to_string() << "\n";
  }
  os << "end\n";
  return os.str();
}

RewriteSystem RewriteSystem::deserialize(const std::string& text) {
  std::istringstream is(text);
  auto fail = [](const std::string& why) -> void {
    throw std::invalid_argument("rewrite system file: " + why);
  };
  std::string magic, key;
  int version = 0, n = 0, cap = 0;
  std::size_t count = 0;
  if (!(is >> magic >> version) || magic != kMagic) fail("bad header");
  if (version != kFormatVersion) fail("unsupported version " + std::to_string(version));
  if (!(is >> key >> n) || key != "rank" || n < 1) fail("bad rank line");
  if (!(is >> key >> cap) || key != "cap" || cap < 0) fail("bad cap line");
  if (!(is >> key >> count) || key != "rules") fail("bad rules line");
  std::vector<Rule> rules;
  rules.reserve(count);
  std::string line;
  std::getline(is, line);
  for (std::size_t k = 0; k < count; ++k) {
    if (!std::getline(is, line)) fail("truncated");
    std::istringstream ls(line);
    std::string tag, lead;
    std::size_t terms = 0;
    if (!(ls >> tag >> lead >> terms) || tag != "rule") fail("bad rule line");
    Rule r;
    r.lead = parse_letters(lead, n);
    for (std::size_t t = 0; t < terms; ++t) {
      if (!std::getline(is, line)) fail("truncated");
      auto sp = line.find(' ');
      if (sp == std::string::npos) fail("bad term line");
      Word w = parse_letters(line.substr(0, sp), n);
      RatQ c = RatQ::parse(line.substr(sp + 1));
      if (c.is_zero()) fail("zero coefficient");
      if (!DegLex()(w, r.lead) || multidegree(w, n) != multidegree(r.lead, n))
        fail("tail word not smaller or not homogeneous");
      r.tail.add(w, c);
    }
    rules.push_back(std::move(r));
  }
  if (!(is >> key) || key != "end") fail("missing end marker");
  return RewriteSystem(n, cap, std::move(rules));
}

namespace {

struct Overlap {
  std::size_t a, b, k;  // suffix of lead a of length k equals prefix of lead b
};

// Overlaps between rule x and every rule in [0, upto), in both orders.
void collect_overlaps(const std::vector<Rule>& rules, std::size_t x, std::size_t upto, int cap,
                      std::map<int, std::vector<Overlap>>& out) {
  auto try_pair = [&](std::size_t a, std::size_t b) {
    const Word& la = rules[a].lead;
    const Word& lb = rules[b].lead;
    std::size_t mx = std::min(la.size(), lb.size());
    for (std::size_t k = 1; k < mx; ++k) {
      int deg = static_cast<int>(la.size() + lb.size() - k);
      if (deg > cap) continue;
      if (la.compare(la.size() - k, k, lb, 0, k) == 0) out[deg].push_back({a, b, k});
    }
  };
  for (std::size_t y = 0; y < upto; ++y) {
    try_pair(x, y);
    if (y != x) try_pair(y, x);
  }
}

NCPolyQ s_poly(const std::vector<Rule>& rules, const Overlap& o) {
  const Rule& ra = rules[o.a];
  const Rule& rb = rules[o.b];
  Word tail_b = rb.lead.substr(o.k);
  Word head_a = ra.lead.substr(0, ra.lead.size() - o.k);
  return ra.tail.rmul_word(tail_b) - rb.tail.lmul_word(head_a);
}

// Row-reduced echelon basis keyed by leading word; all elements monic.
class EchelonBasis {
 public:
  void insert(NCPolyQ p) {
    for (auto it = rows_.rbegin(); it != rows_.rend() && !p.is_zero(); ++it) {
      RatQ c = p.coeff(it->first);
      if (!c.is_zero()) p -= it->second.scaled(c);
    }
    if (p.is_zero()) return;
    Word lead = p.leading_word();
    p = p.scaled(p.coeff(lead).inverse());
    for (auto& [l, row] : rows_) {
      RatQ c = row.coeff(lead);
      if (!c.is_zero()) row -= p.scaled(c);
    }
    rows_.emplace(lead, std::move(p));
  }
  const std::map<Word, NCPolyQ, DegLex>& rows() const { return rows_; }

 private:
  std::map<Word, NCPolyQ, DegLex> rows_;
};

}  // namespace

RewriteSystem complete(int n, const std::vector<NCPolyQ>& relations, int cap,
                       const CompletionLimits& limits) {
  std::map<int, std::vector<NCPolyQ>> rel_by_degree;
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    RootVec md = multidegree(r.leading_word(), n);
    for (const auto& [w, c] : r.terms())
      if (multidegree(w, n) != md) throw std::invalid_argument("complete: relation is not homogeneous");
    int d = static_cast<int>(r.leading_word().size());
    if (d > cap) throw std::invalid_argument("complete: degree cap below relation degree");
    rel_by_degree[d].push_back(r);
  }
  std::vector<Rule> rules;
  std::map<int, std::vector<Overlap>> overlaps;
  RewriteSystem current(n, cap, {});
  for (int d = 1; d <= cap; ++d) {
    std::vector<NCPolyQ> cands = rel_by_degree[d];
    for (const auto& o : overlaps[d]) cands.push_back(s_poly(rules, o));
    if (cands.empty()) continue;
    std::map<RootVec, EchelonBasis> bases;
    for (auto& c : cands) {
      NCPolyQ r = current.normal_form(c);
      if (r.is_zero()) continue;
      bases[multidegree(r.leading_word(), n)].insert(std::move(r));
    }
    std::size_t before = rules.size();
    for (const auto& [md, basis] : bases)
      for (const auto& [lead, row] : basis.rows()) {
        Rule rule;
        rule.lead = lead;
        for (const auto& [w, c] : row.terms())
          if (w != lead) rule.tail.add(w, -c);
        rules.push_back(std::move(rule));
      }
    if (rules.size() > limits.max_rules)
      throw BudgetExceeded("completion exceeded the rule budget of " +
                           std::to_string(limits.max_rules) + " at degree " + std::to_string(d));
    if (rules.size() == before) continue;
    for (std::size_t x = before; x < rules.size(); ++x) collect_overlaps(rules, x, x + 1, cap, overlaps);
    current = RewriteSystem(n, cap, rules);
  }
  return current;
}

RewriteSystem build_serre_system(int n, int cap, const CompletionLimits& limits) {
  return complete(n, serre_relations(n), cap, limits);
}

namespace {

struct Registry {
  std::mutex mu;
  std::map<int, std::shared_ptr<const RewriteSystem>> systems;
  SystemBuilder builder;
  int limit = 64;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

std::shared_ptr<const RewriteSystem> shared_serre_system(int n, int cap) {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  if (cap > r.limit) throw CapExceeded(cap, r.limit);
  cap = std::max(cap, 3);  // Serre relations have degree 3
  auto& slot = r.systems[n];
  if (!slot || slot->cap() < cap) {
    RewriteSystem rs = r.builder ? r.builder(n, cap) : build_serre_system(n, cap);
    slot = std::make_shared<const RewriteSystem>(std::move(rs));
  }
  return slot;
}

void set_system_builder(SystemBuilder builder) {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  r.builder = std::move(builder);
  r.systems.clear();
}

void set_cap_limit(int limit) {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  r.limit = limit;
}

int cap_limit() {
  Registry& r = registry();
  std::lock_guard lock(r.mu);
  return r.limit;
}

namespace {

void enumerate_normal(const RewriteSystem& rs, std::vector<int>& rem, int left, Word& cur,
                      const std::function<void(const Word&)>& emit) {
  if (left == 0) {
    emit(cur);
    return;
  }
  for (int l = 1; l <= rs.rank(); ++l) {
    if (rem[l - 1] == 0) continue;
    cur.push_back(static_cast<char>(l));
    // Only suffixes can newly contain a leading word.
    bool ok = true;
    for (const auto& r : rs.rules()) {
      const Word& lead = r.lead;
      if (lead.size() <= cur.size() && cur.compare(cur.size() - lead.size(), lead.size(), lead) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      --rem[l - 1];
      enumerate_normal(rs, rem, left - 1, cur, emit);
      ++rem[l - 1];
    }
    cur.pop_back();
  }
}

}  // namespace

std::vector<Word> normal_words(const RewriteSystem& rs, const RootVec& mu) {
  if (mu.rank() != rs.rank()) throw std::invalid_argument("normal_words: rank mismatch");
  if (!mu.is_nonnegative()) return {};
  if (mu.height() > rs.cap()) throw CapExceeded(mu.height(), rs.cap());
  std::vector<Word> out;
  std::vector<int> rem = mu.coords;
  Word cur;
  enumerate_normal(rs, rem, mu.height(), cur, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t dim_weight_space(const RewriteSystem& rs, const RootVec& mu) {
  return normal_words(rs, mu).size();
}

ConfluenceReport audit_confluence(const RewriteSystem& rs, int max_degree) {
  ConfluenceReport rep;
  const auto& rules = rs.rules();
  int deg = std::min(max_degree, rs.cap());
  for (std::size_t a = 0; a < rules.size(); ++a)
    for (std::size_t b = 0; b < rules.size(); ++b) {
      if (a != b && rules[b].lead.size() >= rules[a].lead.size() &&
          rules[b].lead.find(rules[a].lead) != Word::npos)
        ++rep.inclusions;
    }
  std::map<int, std::vector<Overlap>> overlaps;
  for (std::size_t x = 0; x < rules.size(); ++x) collect_overlaps(rules, x, x + 1, deg, overlaps);
  for (const auto& [d, list] : overlaps)
    for (const auto& o : list) {
      ++rep.overlaps_checked;
      NCPolyQ s = rs.normal_form(s_poly(rules, o));
      if (!s.is_zero())
        rep.failures.push_back("overlap of " + word_text(rules[o.a].lead) + " and " +
                               word_text(rules[o.b].lead) + " leaves " + s.to_string());
    }
  for (const auto& r : rules)
    for (const auto& [w, c] : r.tail.terms())
      if (!rs.is_normal(w) || !DegLex()(w, r.lead))
        rep.failures.push_back("rule " + word_text(r.lead) + " has a reducible or larger tail word");
  return rep;
}

}  // namespace qshapo
