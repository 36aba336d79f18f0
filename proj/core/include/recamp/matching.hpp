#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace recamp {

struct BipartiteEdge {
  std::size_t left = 0;
  std::size_t right = 0;
  std::int64_t weight = 0;
  std::int64_t multiplicity = 1;
};

// Vertices are 0..left_count-1 on the left and 0..right_count-1 on the right.
struct BipartiteMultigraph {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<BipartiteEdge> edges;
};

struct DegreeConstraint {
  std::vector<std::int64_t> left;   // b(v) for left vertices
  std::vector<std::int64_t> right;  // b(v) for right vertices
};

struct MatchingResult {
  struct Chosen {
    std::size_t edge = 0;  // index into BipartiteMultigraph::edges
    std::int64_t count = 0;
  };
  std::vector<Chosen> chosen;  // ascending edge index, count >= 1
  std::int64_t cardinality = 0;
  std::int64_t total_weight = 0;
};

// Minimum total weight among maximum-cardinality matchings. All
// multiplicities must be 1 (kPrecondition); malformed graphs throw kShape.
[[nodiscard]] MatchingResult min_cost_max_cardinality_matching(const BipartiteMultigraph& g);

// Minimum-weight b-matching using parallel edges up to their multiplicity.
// nullopt when no perfect b-matching exists or its minimum weight exceeds cap.
[[nodiscard]] std::optional<MatchingResult> min_weight_perfect_b_matching(
    const BipartiteMultigraph& g, const DegreeConstraint& b, std::int64_t cap);

}  // namespace recamp
