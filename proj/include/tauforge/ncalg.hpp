#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tauforge/poly.hpp"
#include "tauforge/report.hpp"

namespace tauforge {

using Gen = std::uint8_t;
using Word = std::vector<Gen>;

/// Shortlex order: shorter words first, then lexicographic by generator index.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Gen g : w) h = (h ^ g) * 1099511628211ULL;
    return h ^ w.size();
  }
};

/// Finite linear combination of words with QScalar coefficients.
using LinearWords = std::vector<std::pair<Word, QScalar>>;

/// A rewrite `left right -> rhs` on adjacent generator pairs.
struct RewriteRule {
  Gen left = 0;
  Gen right = 0;
  LinearWords rhs;
};

/// Generators, quadratic rewrite rules and optional unit pairs (g, g^-1).
///
/// Normal forms are memoized; the cache is guarded by a mutex so a presentation
/// can be shared across threads.
class Presentation {
 public:
  static constexpr std::size_t default_step_budget = 1'000'000;

  Presentation(std::string name, std::vector<std::string> generators, std::vector<RewriteRule> rules,
               std::vector<std::pair<Gen, Gen>> unit_pairs = {}, std::size_t step_budget = default_step_budget);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const std::vector<std::pair<Gen, Gen>>& unit_pairs() const { return unit_pairs_; }
  std::size_t step_budget() const { return step_budget_; }

  std::optional<Gen> find(std::string_view name) const;
  /// Throws PresentationError for an unknown name.
  Gen generator(std::string_view name) const;
  std::optional<Gen> inverse_of(Gen g) const;

  /// Normal form of a word; throws PresentationError when the step budget runs out.
  LinearWords normal_form(const Word& w) const;
  /// All results of applying one rule once somewhere in w.
  std::vector<LinearWords> single_steps(const Word& w) const;
  bool is_normal(const Word& w) const;

  std::string word_str(const Word& w) const;

 private:
  const RewriteRule* first_rule(Gen l, Gen r) const;
  LinearWords reduce_uncached(const Word& w) const;

  std::string name_;
  std::vector<std::string> generators_;
  std::vector<RewriteRule> rules_;
  std::vector<std::pair<Gen, Gen>> unit_pairs_;
  std::size_t step_budget_;
  std::vector<int> table_;  // first rule index per (left, right), -1 if none

  mutable std::mutex mutex_;
  mutable std::unordered_map<Word, LinearWords, WordHash> cache_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Element of the algebra of a presentation with TimesPoly coefficients.
/// Every stored word is in normal form and no coefficient is zero.
class NCPoly {
 public:
  using term_map = std::map<Word, TimesPoly, GradedLex>;

  explicit NCPoly(PresentationPtr presentation) : pres_(std::move(presentation)) {}
  NCPoly(PresentationPtr presentation, const TimesPoly& scalar);

  static NCPoly generator(const PresentationPtr& p, std::string_view name);
  static NCPoly generator(const PresentationPtr& p, Gen g);
  /// Reduces an arbitrary word with a coefficient.
  static NCPoly from_word(const PresentationPtr& p, const Word& w, const TimesPoly& coefficient = TimesPoly(1L));
  /// Parses the rendering grammar; identifiers are generators when declared, time variables otherwise.
  static NCPoly parse(const PresentationPtr& p, std::string_view text);

  const PresentationPtr& presentation() const { return pres_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TimesPoly coefficient(const Word& w) const;
  std::size_t size() const { return terms_.size(); }

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const TimesPoly& rhs);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const TimesPoly& b) { return a *= b; }
  friend NCPoly operator*(const TimesPoly& b, NCPoly a) { return a *= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

  NCPoly pow(int n) const;

  /// Applies a map to each time-polynomial coefficient. The map must be additive
  /// and commute with multiplication by q-scalars (q-derivatives, substitutions).
  template <class F>
  NCPoly map_times(F f) const {
    NCPoly out(pres_);
    for (const auto& [w, c] : terms_) {
      TimesPoly image = f(c);
      if (!image.is_zero()) out.terms_.emplace_hint(out.terms_.end(), w, std::move(image));
    }
    return out;
  }

  /// Adds c·w for a word already in normal form.
  void add_normal(const Word& w, const TimesPoly& c);

  std::string str() const;

 private:
  PresentationPtr pres_;
  term_map terms_;
};

/// Ring map: replaces each generator by images[g], all in the target presentation.
NCPoly substitute_generators(const NCPoly& p, const std::vector<NCPoly>& images, const PresentationPtr& target);
/// Counit-style evaluation: generators map to time polynomials (commutative target).
TimesPoly substitute_scalars(const NCPoly& p, const std::vector<TimesPoly>& images);

/// Exhaustively checks that every word up to max_len has a unique normal form
/// along all first rewriting steps.
VerificationReport check_local_confluence(const Presentation& p, int max_len);

/// a < d < b < c with the relations of the quantum group of SL2; normal words a^i b^j c^k and d^l b^j c^k.
PresentationPtr funq_sl2();
/// The q = 1 specialisation of funq_sl2: commuting a, b, c, d with ad - bc = 1.
PresentationPtr comm_sl2();
/// Gauss parameters s, sbar, Q, Qinv with Q s = q^sigma s Q; sigma is the frozen convention of module funq.
PresentationPtr gauss_param();
/// Gauss parameters with an explicit exponent sigma = +1 or -1.
PresentationPtr gauss_param(int sigma);
/// Two generators with y x -> q x y.
PresentationPtr q_plane();
/// Generators with no relations.
PresentationPtr free_presentation(std::vector<std::string> generators);

/// Moves a FunqSL2 element to CommSL2 by evaluating every coefficient at q = 1.
NCPoly to_classical(const NCPoly& p);

}  // namespace tauforge
