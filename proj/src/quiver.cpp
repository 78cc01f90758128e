#include "stabcat/quiver.hpp"

#include <algorithm>
#include <set>

#include "stabcat/error.hpp"

namespace stabcat {

const char* to_string(QuiverIssue::Kind kind) {
  switch (kind) {
    case QuiverIssue::Kind::Cyclic: return "Cyclic";
    case QuiverIssue::Kind::DanglingEndpoint: return "DanglingEndpoint";
    case QuiverIssue::Kind::DuplicateArrowName: return "DuplicateArrowName";
  }
  return "Unknown";
}

namespace {

// Kahn's algorithm; returns fewer than n vertices iff there is a cycle.
std::vector<std::size_t> kahn(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : arrows) ++indeg[a.target];
  std::vector<std::size_t> order;
  std::vector<bool> done(n, false);
  // Smallest ready vertex first keeps the order canonical.
  while (order.size() < n) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick == n) break;
    done[pick] = true;
    order.push_back(pick);
    for (const auto& a : arrows)
      if (a.source == pick) --indeg[a.target];
  }
  return order;
}

}  // namespace

std::vector<QuiverIssue> Quiver::validate(std::size_t vertices,
                                          const std::vector<Arrow>& arrows) {
  std::vector<QuiverIssue> issues;
  std::set<std::string> names;
  bool endpoints_ok = true;
  for (const auto& a : arrows) {
    if (a.source >= vertices || a.target >= vertices) {
      issues.push_back({QuiverIssue::Kind::DanglingEndpoint,
                        "arrow '" + a.name + "' has an endpoint outside 1.." +
                            std::to_string(vertices)});
      endpoints_ok = false;
    }
    if (!names.insert(a.name).second)
      issues.push_back({QuiverIssue::Kind::DuplicateArrowName,
                        "arrow name '" + a.name + "' is used twice"});
  }
  if (endpoints_ok && kahn(vertices, arrows).size() < vertices)
    issues.push_back({QuiverIssue::Kind::Cyclic, "quiver has an oriented cycle"});
  return issues;
}

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows)
    : n_(vertices), arrows_(std::move(arrows)) {
  auto issues = validate(n_, arrows_);
  if (!issues.empty()) {
    ErrorKind kind = ErrorKind::InvalidInput;
    switch (issues.front().kind) {
      case QuiverIssue::Kind::Cyclic: kind = ErrorKind::Cyclic; break;
      case QuiverIssue::Kind::DanglingEndpoint:
        kind = ErrorKind::DanglingEndpoint;
        break;
      case QuiverIssue::Kind::DuplicateArrowName:
        kind = ErrorKind::DuplicateArrowName;
        break;
    }
    fail(kind, issues.front().detail);
  }
  topo_ = kahn(n_, arrows_);

  paths_.assign(n_, std::vector<std::vector<Path>>(n_));
  for (std::size_t s = 0; s < n_; ++s) {
    // Iterative DFS; acyclicity bounds the depth.
    std::vector<Path> stack{Path{}};
    std::vector<std::size_t> ends{s};
    while (!stack.empty()) {
      Path p = std::move(stack.back());
      std::size_t end = ends.back();
      stack.pop_back();
      ends.pop_back();
      paths_[s][end].push_back(p);
      for (std::size_t a = arrows_.size(); a-- > 0;) {
        if (arrows_[a].source != end) continue;
        Path next = p;
        next.push_back(a);
        stack.push_back(std::move(next));
        ends.push_back(arrows_[a].target);
      }
    }
  }
}

std::optional<std::size_t> Quiver::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  return std::nullopt;
}

bool Quiver::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::size_t> comp(n_);
  for (std::size_t v = 0; v < n_; ++v) comp[v] = v;
  auto find = [&](std::size_t v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (const auto& a : arrows_) comp[find(a.source)] = find(a.target);
  for (std::size_t v = 1; v < n_; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

const std::vector<Path>& Quiver::paths(std::size_t from, std::size_t to) const {
  return paths_.at(from).at(to);
}

std::size_t Quiver::path_index(std::size_t from, std::size_t to,
                               const Path& p) const {
  const auto& ps = paths(from, to);
  auto it = std::find(ps.begin(), ps.end(), p);
  require(it != ps.end(), ErrorKind::InternalAssertion, "path not found");
  return static_cast<std::size_t>(it - ps.begin());
}

PathTable path_table(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  PathTable counts(n, std::vector<std::size_t>(n, 0));
  // Dynamic programming over a topological order: paths from s ending at v
  // are the trivial path (if v == s) plus extensions of paths into sources of
  // arrows into v.
  const auto& order = q.topological_order();
  for (std::size_t s = 0; s < n; ++s) {
    counts[s][s] = 1;
    for (std::size_t v : order)
      for (const auto& a : q.arrows())
        if (a.target == v) counts[s][v] += counts[s][a.source];
  }
  return counts;
}

Quiver an_quiver(std::size_t n, const std::string& orientation) {
  require(n >= 1, ErrorKind::InvalidInput, "A_n needs n >= 1");
  require(orientation.size() == n - 1, ErrorKind::InvalidInput,
          "orientation string for A_" + std::to_string(n) + " must have length " +
              std::to_string(n - 1));
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const char c = orientation[k];
    require(c == '>' || c == '<', ErrorKind::InvalidInput,
            std::string("bad orientation character '") + c + "'");
    Arrow a{"a" + std::to_string(k + 1), k, k + 1};
    if (c == '<') std::swap(a.source, a.target);
    arrows.push_back(std::move(a));
  }
  return Quiver(n, std::move(arrows));
}

std::optional<std::string> an_orientation(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  if (n == 0 || q.arrow_count() != n - 1) return std::nullopt;
  std::string orient(n - 1, '?');
  for (const auto& a : q.arrows()) {
    const std::size_t lo = std::min(a.source, a.target);
    const std::size_t hi = std::max(a.source, a.target);
    if (hi != lo + 1 || orient[lo] != '?') return std::nullopt;
    orient[lo] = a.source == lo ? '>' : '<';
  }
  return orient;
}

std::vector<std::string> an_orientations(std::size_t n) {
  require(n >= 1 && n <= 20, ErrorKind::InvalidInput, "n out of range");
  std::vector<std::string> out;
  const std::size_t m = n - 1;
  for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
    std::string s(m, '<');
    for (std::size_t k = 0; k < m; ++k)
      if (bits >> (m - 1 - k) & 1) s[k] = '>';
    out.push_back(std::move(s));
  }
  return out;
}

bool is_monotone(const std::string& orientation) {
  return orientation.find('>') == std::string::npos ||
         orientation.find('<') == std::string::npos;
}

Quiver discrete_quiver(std::size_t n) { return Quiver(n, {}); }

}  // namespace stabcat
