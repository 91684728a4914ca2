#include "ladders/report.hpp"

#include <algorithm>
#include <cmath>

namespace ladders {

const Check &VerificationReport::add(std::string name, double residual, double tolerance,
                                     std::string note) {
  Check c;
  c.name = std::move(name);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = residual <= tolerance; // false for NaN
  c.note = std::move(note);
  checks_.push_back(std::move(c));
  return checks_.back();
}

const Check &VerificationReport::add_info(std::string name, double residual, double tolerance,
                                          std::string note) {
  add(std::move(name), residual, tolerance, std::move(note));
  checks_.back().enforced = false;
  return checks_.back();
}

const Check &VerificationReport::add_claim(std::string name, bool holds, std::string note) {
  return add(std::move(name), holds ? 0.0 : 1.0, 0.5, std::move(note));
}

void VerificationReport::skip(std::string name, std::string reason) {
  skipped_.push_back({std::move(name), std::move(reason)});
}

void VerificationReport::merge(const VerificationReport &other, const std::string &prefix) {
  for (Check c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  for (SkippedCheck s : other.skipped_) {
    s.name = prefix + s.name;
    skipped_.push_back(std::move(s));
  }
  dumped_.insert(dumped_.end(), other.dumped_.begin(), other.dumped_.end());
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [](const Check &c) { return c.passed || !c.enforced; });
}

const Check *VerificationReport::find(const std::string &name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const Check &c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

double VerificationReport::max_residual() const {
  double worst = 0.0;
  for (const auto &c : checks_)
    if (c.enforced)
      worst = std::max(worst, std::isnan(c.residual) ? INFINITY : c.residual);
  return worst;
}

} // namespace ladders
