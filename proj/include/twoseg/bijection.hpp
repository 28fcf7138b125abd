#pragma once

#include <functional>
#include <string>
#include <vector>

#include "twoseg/report.hpp"

namespace twoseg {

/// Checks a function table [0, source_size) -> [0, target_size) for
/// bijectivity; failures go to `rep` with the smallest witnesses.
/// Returns true when the table is a bijection.
inline bool check_bijection(CheckReport& rep, const std::string& condition,
                            const std::vector<int>& index, const std::string& role,
                            const std::vector<int>& table, int target_size,
                            const std::function<std::string(int)>& source_name,
                            const std::function<std::string(int)>& target_name) {
  ++rep.checked;
  std::vector<int> first_hit(target_size, -1);
  bool ok = true;
  for (int x = 0; x < static_cast<int>(table.size()); ++x) {
    int y = table[x];
    if (first_hit[y] < 0) {
      first_hit[y] = x;
    } else if (ok) {
      rep.fail({condition, index, role, FailureKind::not_injective,
                {source_name(first_hit[y]), source_name(x), target_name(y)}});
      ok = false;
    }
  }
  for (int y = 0; y < target_size; ++y)
    if (first_hit[y] < 0) {
      rep.fail({condition, index, role, FailureKind::not_surjective, {target_name(y)}});
      ok = false;
      break;
    }
  return ok;
}

} // namespace twoseg
