#include "tauforge/report.hpp"

namespace tauforge {

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& item : other.items) items.push_back({prefix + item.label, item.residual});
}

bool VerificationReport::passed() const {
  for (const auto& item : items)
    if (!item.passed()) return false;
  return true;
}

std::string VerificationReport::residual() const {
  std::string out;
  for (const auto& item : items) {
    if (item.passed()) continue;
    if (!out.empty()) out += "; ";
    out += item.label + ": " + item.residual;
  }
  return out;
}

}  // namespace tauforge
