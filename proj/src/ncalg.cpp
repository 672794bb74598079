#include "tauforge/ncalg.hpp"

#include <sstream>

#include "tauforge/error.hpp"
#include "tauforge/expr.hpp"

namespace tauforge {
namespace {

using Accumulator = std::map<Word, QScalar, GradedLex>;

void accumulate(Accumulator& acc, const Word& w, const QScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

LinearWords flatten(Accumulator&& acc) {
  LinearWords out;
  out.reserve(acc.size());
  for (auto& [w, c] : acc) out.emplace_back(w, std::move(c));
  return out;
}

constexpr int max_depth = 2000;

}  // namespace

Presentation::Presentation(std::string name, std::vector<std::string> generators, std::vector<RewriteRule> rules,
                           std::vector<std::pair<Gen, Gen>> unit_pairs, std::size_t step_budget)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      rules_(std::move(rules)),
      unit_pairs_(std::move(unit_pairs)),
      step_budget_(step_budget) {
  const std::size_t n = generators_.size();
  if (n == 0 || n > 255) throw PresentationError("presentation needs between 1 and 255 generators");
  table_.assign(n * n, -1);
  auto check = [&](Gen g) {
    if (g >= n) throw PresentationError("rule uses an undeclared generator in " + name_);
  };
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& r = rules_[i];
    check(r.left);
    check(r.right);
    for (const auto& [w, c] : r.rhs)
      for (Gen g : w) check(g);
    int& slot = table_[r.left * n + r.right];
    if (slot < 0) slot = static_cast<int>(i);
  }
  for (const auto& [g, h] : unit_pairs_) {
    check(g);
    check(h);
  }
}

std::optional<Gen> Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == name) return static_cast<Gen>(i);
  return std::nullopt;
}

Gen Presentation::generator(std::string_view name) const {
  auto g = find(name);
  if (!g) throw PresentationError("unknown generator '" + std::string(name) + "' in " + name_);
  return *g;
}

std::optional<Gen> Presentation::inverse_of(Gen g) const {
  for (const auto& [a, b] : unit_pairs_) {
    if (a == g) return b;
    if (b == g) return a;
  }
  return std::nullopt;
}

const RewriteRule* Presentation::first_rule(Gen l, Gen r) const {
  const int idx = table_[l * generators_.size() + r];
  return idx < 0 ? nullptr : &rules_[static_cast<std::size_t>(idx)];
}

bool Presentation::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (first_rule(w[i], w[i + 1])) return false;
  return true;
}

namespace {

// Normal-form engine. A word g·v with v normal only needs rewriting at its
// front, so normal forms are built by left-multiplying generators onto normal
// words, memoizing every word seen.
class Reducer {
 public:
  Reducer(const Presentation& p, std::unordered_map<Word, LinearWords, WordHash>& cache,
          const std::function<const RewriteRule*(Gen, Gen)>& rule)
      : p_(p), cache_(cache), rule_(rule) {}

  LinearWords normal_form(const Word& w) {
    if (w.size() <= 1) return {{w, QScalar(1L)}};
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    Word tail(w.begin() + 1, w.end());
    LinearWords reduced_tail = normal_form(tail);
    Accumulator acc;
    for (const auto& [v, c] : reduced_tail)
      for (const auto& [u, d] : left_multiply(w[0], v)) accumulate(acc, u, c * d);
    LinearWords out = flatten(std::move(acc));
    cache_.emplace(w, out);
    return out;
  }

 private:
  LinearWords left_multiply(Gen g, const Word& v) {
    Word key;
    key.reserve(v.size() + 1);
    key.push_back(g);
    key.insert(key.end(), v.begin(), v.end());
    const RewriteRule* r = v.empty() ? nullptr : rule_(g, v[0]);
    if (!r) return {{key, QScalar(1L)}};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    if (++steps_ > p_.step_budget())
      throw PresentationError("rewriting step budget exhausted in " + p_.name() + " at " + p_.word_str(key));
    if (++depth_ > max_depth)
      throw PresentationError("rewriting does not terminate in " + p_.name() + " at " + p_.word_str(key));
    Word rest(v.begin() + 1, v.end());
    Accumulator acc;
    for (const auto& [rw, rc] : r->rhs) {
      LinearWords cur{{rest, rc}};
      for (auto letter = rw.rbegin(); letter != rw.rend(); ++letter) {
        Accumulator next;
        for (const auto& [u, c] : cur)
          for (const auto& [x, d] : left_multiply(*letter, u)) accumulate(next, x, c * d);
        cur = flatten(std::move(next));
      }
      for (const auto& [u, c] : cur) accumulate(acc, u, c);
    }
    --depth_;
    LinearWords out = flatten(std::move(acc));
    cache_.emplace(key, out);
    return out;
  }

  const Presentation& p_;
  std::unordered_map<Word, LinearWords, WordHash>& cache_;
  const std::function<const RewriteRule*(Gen, Gen)>& rule_;
  std::size_t steps_ = 0;
  int depth_ = 0;
};

}  // namespace

LinearWords Presentation::normal_form(const Word& w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  std::function<const RewriteRule*(Gen, Gen)> rule = [this](Gen l, Gen r) { return first_rule(l, r); };
  Reducer reducer(*this, cache_, rule);
  return reducer.normal_form(w);
}

std::vector<LinearWords> Presentation::single_steps(const Word& w) const {
  std::vector<LinearWords> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    for (const auto& r : rules_) {
      if (r.left != w[i] || r.right != w[i + 1]) continue;
      LinearWords step;
      for (const auto& [rw, rc] : r.rhs) {
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        u.insert(u.end(), rw.begin(), rw.end());
        u.insert(u.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
        step.emplace_back(std::move(u), rc);
      }
      out.push_back(std::move(step));
    }
  }
  return out;
}

std::string Presentation::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t k = i;
    while (k < w.size() && w[k] == w[i]) ++k;
    if (!out.empty()) out += '*';
    out += generators_[w[i]];
    if (k - i > 1) out += "^" + std::to_string(k - i);
    i = k;
  }
  return out;
}

NCPoly::NCPoly(PresentationPtr presentation, const TimesPoly& scalar) : pres_(std::move(presentation)) {
  if (!scalar.is_zero()) terms_.emplace(Word(), scalar);
}

NCPoly NCPoly::generator(const PresentationPtr& p, std::string_view name) { return generator(p, p->generator(name)); }

NCPoly NCPoly::generator(const PresentationPtr& p, Gen g) { return from_word(p, Word{g}); }

NCPoly NCPoly::from_word(const PresentationPtr& p, const Word& w, const TimesPoly& coefficient) {
  NCPoly out(p);
  if (coefficient.is_zero()) return out;
  for (const auto& [u, c] : p->normal_form(w)) out.add_normal(u, coefficient * c);
  return out;
}

TimesPoly NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? TimesPoly() : it->second;
}

void NCPoly::add_normal(const Word& w, const TimesPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_normal(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  for (const auto& [w, c] : rhs.terms_) add_normal(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const TimesPoly& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= rhs;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.pres_ != b.pres_) throw PresentationError("multiplying elements of different presentations");
  NCPoly out(a.pres_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      const TimesPoly c = ca * cb;
      if (wa.empty() || wb.empty()) {
        out.add_normal(w, c);
        continue;
      }
      for (const auto& [u, s] : a.pres_->normal_form(w)) out.add_normal(u, c * s);
    }
  }
  return out;
}

NCPoly NCPoly::pow(int n) const {
  NCPoly out(pres_, TimesPoly(1L));
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::vector<std::pair<Monomial, QScalar>> parts(c.terms().begin(), c.terms().end());
    std::sort(parts.begin(), parts.end(),
              [](const auto& x, const auto& y) { return Monomial::render_less(x.first, y.first); });
    for (const auto& [m, s] : parts) {
      std::string body;
      if (!m.is_one()) body = m.str();
      if (!w.empty()) body += (body.empty() ? "" : "*") + pres_->word_str(w);
      std::string piece;
      if (body.empty())
        piece = s.str();
      else if (s.is_one())
        piece = body;
      else if ((-s).is_one())
        piece = "-" + body;
      else
        piece = s.factor_str() + "*" + body;
      if (!first && piece.front() != '-') os << '+';
      os << piece;
      first = false;
    }
  }
  return os.str();
}

namespace {

struct NCOps {
  PresentationPtr pres;

  NCPoly scalar(const TimesPoly& t) const { return NCPoly(pres, t); }
  NCPoly number(const Rational& r) { return scalar(TimesPoly(QScalar(r))); }
  NCPoly symbol(const std::string& name, std::size_t) {
    if (auto g = pres->find(name)) return NCPoly::generator(pres, *g);
    if (name == "q") return scalar(TimesPoly(QScalar::q()));
    return scalar(TimesPoly::variable(Var(name)));
  }
  static bool scalar_value(const NCPoly& p, QScalar& out) {
    if (p.is_zero()) {
      out = QScalar();
      return true;
    }
    if (p.size() != 1 || !p.terms().begin()->first.empty()) return false;
    const TimesPoly& t = p.terms().begin()->second;
    if (!t.is_constant()) return false;
    out = t.constant_term();
    return true;
  }
  NCPoly divide(const NCPoly& a, const NCPoly& b, std::size_t pos) {
    QScalar s;
    if (!scalar_value(b, s) || s.is_zero()) throw ParseError("division by a non-scalar", pos);
    return a * TimesPoly(s.inverse());
  }
  NCPoly power(const NCPoly& a, int e, std::size_t pos) {
    if (e >= 0) return a.pow(e);
    QScalar s;
    if (scalar_value(a, s) && !s.is_zero()) return scalar(TimesPoly(s.pow(e)));
    if (a.size() == 1 && a.terms().begin()->first.size() == 1 && a.terms().begin()->second == TimesPoly(1L)) {
      if (auto inv = pres->inverse_of(a.terms().begin()->first[0]))
        return NCPoly::generator(pres, *inv).pow(-e);
    }
    throw ParseError("negative power of a non-invertible element", pos);
  }
};

}  // namespace

NCPoly NCPoly::parse(const PresentationPtr& p, std::string_view text) {
  auto tree = parse_expr(text);
  NCOps ops{p};
  return evaluate_expr<NCPoly>(*tree, ops);
}

NCPoly substitute_generators(const NCPoly& p, const std::vector<NCPoly>& images, const PresentationPtr& target) {
  NCPoly out(target);
  for (const auto& [w, c] : p.terms()) {
    NCPoly term(target, c);
    for (Gen g : w) term = term * images.at(g);
    out += term;
  }
  return out;
}

TimesPoly substitute_scalars(const NCPoly& p, const std::vector<TimesPoly>& images) {
  TimesPoly out;
  for (const auto& [w, c] : p.terms()) {
    TimesPoly term = c;
    for (Gen g : w) term *= images.at(g);
    out += term;
  }
  return out;
}

VerificationReport check_local_confluence(const Presentation& p, int max_len) {
  VerificationReport report;
  report.id = "ncalg.confluence";
  report.params["presentation"] = p.name();
  report.params["max_len"] = std::to_string(max_len);
  ReportTimer timer(report);
  if (max_len < 3) throw PreconditionError("check_local_confluence requires max_len >= 3");
  const auto n = static_cast<Gen>(p.generators().size());
  std::size_t failures = 0;
  for (int len = 2; len <= max_len; ++len) {
    Word w(static_cast<std::size_t>(len), 0);
    for (;;) {
      auto steps = p.single_steps(w);
      if (steps.size() >= 2) {
        std::vector<Accumulator> results;
        std::string error;
        for (const auto& step : steps) {
          Accumulator acc;
          try {
            for (const auto& [u, c] : step)
              for (const auto& [v, d] : p.normal_form(u)) accumulate(acc, v, c * d);
          } catch (const PresentationError& e) {
            error = e.what();
          }
          results.push_back(std::move(acc));
        }
        if (!error.empty()) {
          report.add(p.word_str(w), error);
          ++failures;
        } else {
          for (std::size_t i = 1; i < results.size(); ++i) {
            if (results[i] == results[0]) continue;
            NCPoly diff(std::make_shared<const Presentation>(p.name(), p.generators(), std::vector<RewriteRule>{}));
            for (const auto& [v, c] : results[0]) diff.add_normal(v, TimesPoly(c));
            for (const auto& [v, c] : results[i]) diff.add_normal(v, TimesPoly(-c));
            report.add(p.word_str(w), diff.str());
            ++failures;
            break;
          }
        }
      }
      // Next word in lexicographic order.
      int pos = len - 1;
      while (pos >= 0 && w[static_cast<std::size_t>(pos)] + 1 == n) w[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
      ++w[static_cast<std::size_t>(pos)];
    }
  }
  if (failures == 0) report.add("words up to length " + std::to_string(max_len), "");
  return report;
}

namespace {

RewriteRule rule(Gen l, Gen r, LinearWords rhs) { return RewriteRule{l, r, std::move(rhs)}; }

}  // namespace

PresentationPtr funq_sl2() {
  static const PresentationPtr p = [] {
    enum : Gen { a, d, b, c };
    const QScalar q = QScalar::q();
    const QScalar qi = QScalar::q_power(-1);
    std::vector<RewriteRule> rules{
        rule(b, a, {{{a, b}, q}}),
        rule(c, a, {{{a, c}, q}}),
        rule(b, d, {{{d, b}, qi}}),
        rule(c, d, {{{d, c}, qi}}),
        rule(c, b, {{{b, c}, QScalar(1L)}}),
        rule(d, a, {{{}, QScalar(1L)}, {{b, c}, q}}),
        rule(a, d, {{{}, QScalar(1L)}, {{b, c}, qi}}),
    };
    return std::make_shared<const Presentation>("FunqSL2", std::vector<std::string>{"a", "d", "b", "c"},
                                                std::move(rules));
  }();
  return p;
}

PresentationPtr comm_sl2() {
  static const PresentationPtr p = [] {
    enum : Gen { a, d, b, c };
    const QScalar one(1L);
    std::vector<RewriteRule> rules{
        rule(b, a, {{{a, b}, one}}),
        rule(c, a, {{{a, c}, one}}),
        rule(b, d, {{{d, b}, one}}),
        rule(c, d, {{{d, c}, one}}),
        rule(c, b, {{{b, c}, one}}),
        rule(d, a, {{{}, one}, {{b, c}, one}}),
        rule(a, d, {{{}, one}, {{b, c}, one}}),
    };
    return std::make_shared<const Presentation>("CommSL2", std::vector<std::string>{"a", "d", "b", "c"},
                                                std::move(rules));
  }();
  return p;
}

PresentationPtr gauss_param(int sigma) {
  if (sigma != 1 && sigma != -1) throw PreconditionError("gauss_param exponent must be +1 or -1");
  enum : Gen { s, sbar, Q, Qinv };
  const QScalar up = QScalar::q_power(sigma);
  const QScalar down = QScalar::q_power(-sigma);
  const QScalar one(1L);
  std::vector<RewriteRule> rules{
      rule(sbar, s, {{{s, sbar}, one}}),
      rule(Q, s, {{{s, Q}, up}}),
      rule(Q, sbar, {{{sbar, Q}, up}}),
      rule(Qinv, s, {{{s, Qinv}, down}}),
      rule(Qinv, sbar, {{{sbar, Qinv}, down}}),
      rule(Q, Qinv, {{{}, one}}),
      rule(Qinv, Q, {{{}, one}}),
  };
  return std::make_shared<const Presentation>(sigma == 1 ? "GaussParam(+)" : "GaussParam",
                                              std::vector<std::string>{"s", "sbar", "Q", "Qinv"}, std::move(rules),
                                              std::vector<std::pair<Gen, Gen>>{{Q, Qinv}});
}

PresentationPtr gauss_param() {
  static const PresentationPtr p = gauss_param(-1);
  return p;
}

PresentationPtr q_plane() {
  static const PresentationPtr p = [] {
    std::vector<RewriteRule> rules{rule(1, 0, {{{0, 1}, QScalar::q()}})};
    return std::make_shared<const Presentation>("QPlane", std::vector<std::string>{"x", "y"}, std::move(rules));
  }();
  return p;
}

PresentationPtr free_presentation(std::vector<std::string> generators) {
  return std::make_shared<const Presentation>("Free", std::move(generators), std::vector<RewriteRule>{});
}

NCPoly to_classical(const NCPoly& p) {
  if (p.presentation() != funq_sl2()) throw PresentationError("to_classical expects a FunqSL2 element");
  NCPoly out(comm_sl2());
  for (const auto& [w, c] : p.terms()) out.add_normal(w, to_times(eval_q1(c)));
  return out;
}

}  // namespace tauforge
