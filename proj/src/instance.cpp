#include "ttp/instance.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ttp {

Weight Instance::weighted_degree(int v) const {
  Weight s = 0;
  for (int j = 0; j < n; ++j) s += dist[v][j];
  return s;
}

Weight Instance::degree_sum() const {
  Weight s = 0;
  for (int v = 0; v < n; ++v) s += weighted_degree(v);
  return s;
}

namespace {

std::vector<double> read_numbers(std::istream& in) {
  std::vector<double> xs;
  double v;
  while (in >> v) xs.push_back(v);
  if (!in.eof()) fail(Errc::parse_error, "malformed numeric token in instance text");
  return xs;
}

bool all_integral(const std::vector<std::vector<Weight>>& m) {
  for (const auto& row : m)
    for (Weight w : row)
      if (w != std::floor(w)) return false;
  return true;
}

Instance from_matrix(int n, const std::vector<double>& xs) {
  Instance inst;
  inst.n = n;
  inst.dist.assign(n, std::vector<Weight>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inst.dist[i][j] = xs[1 + i * n + j];
  inst.integral = all_integral(inst.dist);
  // Recognize line structure from the first row so line files round-trip
  // through the matrix format as well.
  std::vector<Weight> gaps(n - 1);
  bool is_line = true;
  for (int i = 0; i + 1 < n && is_line; ++i) {
    gaps[i] = inst.dist[0][i + 1] - inst.dist[0][i];
    if (gaps[i] < 0) is_line = false;
  }
  if (is_line) {
    for (int i = 0; i < n && is_line; ++i)
      for (int j = 0; j < n && is_line; ++j) {
        Weight expect = std::fabs(inst.dist[0][j] - inst.dist[0][i]);
        if (std::fabs(inst.dist[i][j] - expect) > kTol) is_line = false;
      }
    if (is_line) inst.line_gaps = gaps;
  }
  return inst;
}

Instance from_coords(int n, const std::vector<double>& xs, bool round_coords) {
  Instance inst;
  inst.n = n;
  inst.dist.assign(n, std::vector<Weight>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double dx = xs[1 + 2 * i] - xs[1 + 2 * j];
      double dy = xs[2 + 2 * i] - xs[2 + 2 * j];
      double d = std::sqrt(dx * dx + dy * dy);
      inst.dist[i][j] = round_coords ? std::floor(d + 0.5) : d;
    }
  inst.integral = all_integral(inst.dist);
  return inst;
}

}  // namespace

Instance make_line_instance(const std::vector<Weight>& gaps) {
  int n = static_cast<int>(gaps.size()) + 1;
  Instance inst;
  inst.n = n;
  inst.dist.assign(n, std::vector<Weight>(n, 0));
  std::vector<Weight> pos(n, 0);
  for (int i = 1; i < n; ++i) pos[i] = pos[i - 1] + gaps[i - 1];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inst.dist[i][j] = std::fabs(pos[i] - pos[j]);
  inst.line_gaps = gaps;
  inst.integral = all_integral(inst.dist);
  return inst;
}

void validate_metric(const Instance& inst, Weight eps) {
  int n = inst.n;
  for (int i = 0; i < n; ++i) {
    if (std::fabs(inst.dist[i][i]) > kTol)
      fail(Errc::metric_violation, "nonzero diagonal at team " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      if (inst.dist[i][j] < -kTol)
        fail(Errc::metric_violation, "negative distance");
      if (std::fabs(inst.dist[i][j] - inst.dist[j][i]) > kTol)
        fail(Errc::metric_violation, "asymmetric pair (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ")");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        if (inst.dist[i][l] > inst.dist[i][j] + inst.dist[j][l] + eps)
          fail(Errc::metric_violation,
               "triangle inequality violated on triple (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + "," + std::to_string(l + 1) + ")");
      }
    }
  if (inst.line_gaps) {
    const auto& gaps = *inst.line_gaps;
    if (static_cast<int>(gaps.size()) != n - 1)
      fail(Errc::parse_error, "line gap vector has wrong length");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Weight expect = 0;
        for (int l = std::min(i, j); l < std::max(i, j); ++l) expect += gaps[l];
        if (std::fabs(inst.dist[i][j] - expect) > kTol)
          fail(Errc::metric_violation, "distance matrix inconsistent with line gaps");
      }
  }
}

Instance parse_instance(std::istream& in, const ParseOptions& opts) {
  auto xs = read_numbers(in);
  if (xs.empty()) fail(Errc::parse_error, "empty instance text");
  if (xs[0] != std::floor(xs[0]) || xs[0] < 1) fail(Errc::parse_error, "bad team count");
  int n = static_cast<int>(xs[0]);
  if (n % 2 != 0) fail(Errc::odd_team_count, "team count must be even");
  if (n < 4) fail(Errc::too_few_teams, "need at least 4 teams");
  std::size_t rest = xs.size() - 1;

  InstanceFormat fmt = opts.format;
  if (fmt == InstanceFormat::auto_detect) {
    if (rest == static_cast<std::size_t>(n) * n)
      fmt = InstanceFormat::matrix;
    else if (rest == 2 * static_cast<std::size_t>(n))
      fmt = InstanceFormat::coords;
    else if (rest == static_cast<std::size_t>(n) - 1)
      fmt = InstanceFormat::line;
    else
      fail(Errc::parse_error, "token count matches no known format");
  }

  Instance inst;
  switch (fmt) {
    case InstanceFormat::matrix:
      if (rest != static_cast<std::size_t>(n) * n) fail(Errc::parse_error, "matrix token count");
      inst = from_matrix(n, xs);
      break;
    case InstanceFormat::coords:
      if (rest != 2 * static_cast<std::size_t>(n)) fail(Errc::parse_error, "coords token count");
      inst = from_coords(n, xs, opts.round_coords);
      break;
    case InstanceFormat::line: {
      if (rest != static_cast<std::size_t>(n) - 1) fail(Errc::parse_error, "line token count");
      std::vector<Weight> gaps(xs.begin() + 1, xs.end());
      for (Weight g : gaps)
        if (g < 0) fail(Errc::parse_error, "negative line gap");
      inst = make_line_instance(gaps);
      break;
    }
    default:
      fail(Errc::parse_error, "unresolved format");
  }
  validate_metric(inst, opts.metric_eps);
  return inst;
}

Instance parse_instance(const std::string& text, const ParseOptions& opts) {
  std::istringstream ss(text);
  return parse_instance(ss, opts);
}

Instance load_instance(const std::string& path, const ParseOptions& opts) {
  std::ifstream f(path);
  if (!f) fail(Errc::parse_error, "cannot open instance file " + path);
  Instance inst = parse_instance(f, opts);
  auto slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.find_last_of('.');
  inst.name = dot == std::string::npos ? base : base.substr(0, dot);
  return inst;
}

Instance generate_random_metric(int n, std::uint64_t seed) {
  if (n % 2 != 0) fail(Errc::odd_team_count, "team count must be even");
  if (n < 4) fail(Errc::too_few_teams, "need at least 4 teams");
  Rng rng(seed * 0x100000001b3ull + 0xcbf29ce484222325ull);
  std::vector<double> px(n), py(n);
  for (int i = 0; i < n; ++i) {
    px[i] = rng.next_real() * 1000.0;
    py[i] = rng.next_real() * 1000.0;
  }
  Instance inst;
  inst.n = n;
  inst.integral = false;
  inst.name = "random-n" + std::to_string(n) + "-s" + std::to_string(seed);
  inst.dist.assign(n, std::vector<Weight>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double dx = px[i] - px[j], dy = py[i] - py[j];
      inst.dist[i][j] = std::sqrt(dx * dx + dy * dy);
    }
  return inst;
}

std::string format_weight(Weight w, bool integral) {
  if (integral && std::fabs(w - std::llround(w)) < 0.5) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(w)));
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", w);
  return buf;
}

}  // namespace ttp
