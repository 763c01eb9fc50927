#ifndef TTP_INSTANCE_HPP
#define TTP_INSTANCE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ttp/common.hpp"

namespace ttp {

enum class InstanceFormat { matrix, coords, line, auto_detect };

// A tournament instance: n teams and a symmetric metric distance matrix.
// Line instances additionally carry the consecutive gaps d_1..d_{n-1}.
struct Instance {
  int n = 0;
  std::vector<std::vector<Weight>> dist;
  std::optional<std::vector<Weight>> line_gaps;
  bool integral = true;
  std::string name = "instance";

  Weight d(int a, int b) const { return dist[a][b]; }
  bool is_line() const { return line_gaps.has_value(); }

  // Sum of weighted degrees (= 2 * total edge weight).
  Weight weighted_degree(int v) const;
  Weight degree_sum() const;
};

struct ParseOptions {
  InstanceFormat format = InstanceFormat::auto_detect;
  // Tolerance for triangle-inequality violations; kTol by default, raise via
  // --allow-near-metric for rounded coordinate data.
  Weight metric_eps = kTol;
  bool round_coords = false;  // round Euclidean distances to integers
};

Instance parse_instance(std::istream& in, const ParseOptions& opts = {});
Instance parse_instance(const std::string& text, const ParseOptions& opts = {});
Instance load_instance(const std::string& path, const ParseOptions& opts = {});

// Uniform points in a square, Euclidean distances. Metric by construction,
// deterministic for a fixed seed.
Instance generate_random_metric(int n, std::uint64_t seed);

// Unit-gap line with n teams.
Instance make_line_instance(const std::vector<Weight>& gaps);

// Throws on symmetry/diagonal/triangle violations (witness in message).
void validate_metric(const Instance& inst, Weight eps = kTol);

std::string format_weight(Weight w, bool integral);

}  // namespace ttp

#endif
