#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace neutrolab {

using Index = std::uint32_t;

// Outcome of a decision procedure. When `holds` is false, `reason` names the
// failed condition and `witness` lists the carrier indices that exhibit it
// (the meaning of the positions depends on the reason).
struct Verdict {
  bool holds = true;
  std::string reason;
  std::vector<Index> witness;
  std::vector<std::string> flags;

  explicit operator bool() const noexcept { return holds; }

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why, std::vector<Index> witness = {}) {
    Verdict v;
    v.holds = false;
    v.reason = std::move(why);
    v.witness = std::move(witness);
    return v;
  }

  Verdict& flag(std::string f) {
    flags.push_back(std::move(f));
    return *this;
  }
  bool has_flag(const std::string& f) const {
    for (const auto& x : flags)
      if (x == f) return true;
    return false;
  }
};

}  // namespace neutrolab
