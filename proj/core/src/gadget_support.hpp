#pragma once

#include <string>

#include "recamp/election.hpp"

namespace recamp::detail {

// `base`, or `base` followed by primes, whichever is first absent from
// `taken`; the result is inserted into `taken`.
inline CandidateId fresh_name(const std::string& base, CandidateSet& taken) {
  std::string name = base;
  while (taken.contains(CandidateId(name))) name += '\'';
  CandidateId id(name);
  taken.insert(id);
  return id;
}

}  // namespace recamp::detail
