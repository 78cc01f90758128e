#pragma once

// Finite acyclic quivers and their paths.
//
// Vertices are 0-based inside the library; the JSON and CLI surfaces use the
// 1-based labels 1..n of the A_n diagrams.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stabcat {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A path is the list of arrow indices in the order they are traversed.
/// The trivial path at a vertex is the empty list.
using Path = std::vector<std::size_t>;

struct QuiverIssue {
  enum class Kind { Cyclic, DanglingEndpoint, DuplicateArrowName };
  Kind kind;
  std::string detail;
};

const char* to_string(QuiverIssue::Kind kind);

class Quiver {
 public:
  Quiver() = default;
  /// Validates; throws Error with the first issue's kind on failure.
  Quiver(std::size_t vertices, std::vector<Arrow> arrows);

  /// All problems with a candidate quiver, without throwing.
  static std::vector<QuiverIssue> validate(std::size_t vertices,
                                           const std::vector<Arrow>& arrows);

  std::size_t vertex_count() const { return n_; }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  std::optional<std::size_t> arrow_index(const std::string& name) const;

  /// Vertices ordered so that every arrow goes forward.
  const std::vector<std::size_t>& topological_order() const { return topo_; }
  bool is_connected() const;

  /// Paths from `from` to `to` in canonical order (depth-first, arrows taken
  /// in index order).
  const std::vector<Path>& paths(std::size_t from, std::size_t to) const;
  /// Position of `p` in paths(from, to); p must be such a path.
  std::size_t path_index(std::size_t from, std::size_t to, const Path& p) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> topo_;
  std::vector<std::vector<std::vector<Path>>> paths_;  // [from][to]
};

/// counts[i][j] = number of paths i -> j (trivial path included on i == j).
using PathTable = std::vector<std::vector<std::size_t>>;

PathTable path_table(const Quiver& q);

/// A_n with arrow k joining k and k+1 (1-based), '>' meaning k -> k+1.
/// Arrows are named a1..a(n-1).
Quiver an_quiver(std::size_t n, const std::string& orientation);

/// Orientation string when q is an orientation of A_n (arrow between each
/// consecutive pair of vertices, nothing else); nullopt otherwise.
std::optional<std::string> an_orientation(const Quiver& q);

/// All 2^(n-1) orientation strings in lexicographic order ('<' before '>').
std::vector<std::string> an_orientations(std::size_t n);

/// True if every character agrees (all '>' or all '<'); vacuous for n <= 2.
bool is_monotone(const std::string& orientation);

/// Arrow-free quiver on n vertices (semisimple path algebra).
Quiver discrete_quiver(std::size_t n);

}  // namespace stabcat
