#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

namespace tauforge {

/// One identity inside a verification run; an empty residual means it holds exactly.
struct ReportItem {
  std::string label;
  std::string residual;
  bool passed() const { return residual.empty(); }
};

/// Outcome of a verification: per-identity residuals, parameters and timing.
struct VerificationReport {
  std::string id;
  std::string anchor;
  std::map<std::string, std::string> params;
  std::vector<ReportItem> items;
  double milliseconds = 0;

  /// Records an identity; `residual` is the rendered residual or empty when zero.
  void add(std::string label, std::string residual) { items.push_back({std::move(label), std::move(residual)}); }

  template <class T>
  void add_zero_check(std::string label, const T& residual) {
    add(std::move(label), residual.is_zero() ? std::string() : residual.str());
  }

  /// Merges the items of another report, prefixing their labels.
  void absorb(const VerificationReport& other, const std::string& prefix = {});

  bool passed() const;
  /// Failing residuals joined as `label: residual; ...`; empty iff passed.
  std::string residual() const;
};

/// Renders twice-a-spin as `1/2`, `1`, `3/2`, ...
inline std::string spin_str(int two_j) {
  return two_j % 2 == 0 ? std::to_string(two_j / 2) : std::to_string(two_j) + "/2";
}

/// Measures wall time into a report on destruction.
class ReportTimer {
 public:
  explicit ReportTimer(VerificationReport& report)
      : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~ReportTimer() {
    report_.milliseconds =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }
  ReportTimer(const ReportTimer&) = delete;
  ReportTimer& operator=(const ReportTimer&) = delete;

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tauforge
