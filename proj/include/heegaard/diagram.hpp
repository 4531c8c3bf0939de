#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "heegaard/errors.hpp"
#include "heegaard/word.hpp"

namespace heegaard {

/// One transverse crossing of alpha_i with beta_j.
///
/// `prefix` is the number of letters of alpha_i read before the crossing
/// (0..m_i) and `suffix` the number of letters of beta_j read before it
/// (0..n_j); the coordinate uses the remaining letters l+1..n_j of beta_j.
struct IntersectionPoint {
  std::string label;
  int alpha = 1;
  int beta = 1;
  std::size_t prefix = 0;
  std::size_t suffix = 0;
  int sign = 1;

  friend bool operator==(const IntersectionPoint&, const IntersectionPoint&) = default;
};

struct HeegaardDiagram {
  int genus = 1;
  std::vector<Word> alpha;
  std::vector<Word> beta;
  std::vector<IntersectionPoint> points;

  /// Points on alpha_i and beta_j (1-based indices), in storage order.
  std::vector<const IntersectionPoint*> points_on(int i, int j) const;
  const IntersectionPoint* find_point(std::string_view label) const;

  /// Sorts points by label; the text format always emits this order.
  void canonicalize();

  /// Equality of the data model: points compare as a set keyed by label.
  friend bool operator==(const HeegaardDiagram& a, const HeegaardDiagram& b);
};

/// Throws InvalidDiagram if any structural invariant fails: genus >= 1,
/// exactly g nonempty alpha and beta words over c_1..c_{2g}, unique nonempty
/// labels, curve indices in 1..g, positions within their words, sign = ±1.
void check_diagram(const HeegaardDiagram& d);

struct Warning {
  enum class Kind {
    alpha_not_freely_reduced,
    beta_not_freely_reduced,
    beta_not_cyclically_reduced,
    duplicate_position,
  };
  Kind kind;
  std::string message;

  friend bool operator==(const Warning&, const Warning&) = default;
};

/// Advisory checks on a structurally valid diagram. A beta word that is not
/// freely reduced reports only that; the cyclic check applies to freely
/// reduced beta words.
std::vector<Warning> validate(const HeegaardDiagram& d);

/// Error from the text reader. `line` is 1-based; for problems detected after
/// the last line (a missing curve) it is one past the last line.
class ParseError : public Error {
 public:
  enum class Kind { syntax, semantic };
  ParseError(Kind kind, int line, const std::string& what);

  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Reads the line-based `.hd` format:
///
///     genus <g>
///     alpha <i>: <word>        (g lines, any order)
///     beta <j>: <word>         (g lines, any order)
///     x <label>: a<i> b<j> k=<int> l=<int> sign=<+|->
///
/// `#` starts a comment and blank lines are skipped. The result is validated
/// and canonical (points sorted by label).
HeegaardDiagram parse_diagram(std::istream& in);
HeegaardDiagram parse_diagram(std::string_view text);

/// Canonical text: genus line, alpha 1..g, beta 1..g, then points by label,
/// single spaces, one trailing newline per line.
std::string serialize_diagram(const HeegaardDiagram& d);

/// Names accepted by `fixture`, with `lens-p-q` as a pattern.
std::vector<std::string> fixture_names();

/// Expands the lens pattern to every admissible concrete name.
std::vector<std::string> all_fixture_names();

/// Built-in diagrams: `s3`, `s1xs2`, `s3-genus2-stab`, and `lens-p-q` for
/// 2 <= p <= 12, 1 <= q < p, gcd(p, q) = 1. Throws UnknownFixture otherwise.
HeegaardDiagram fixture(std::string_view name);

}  // namespace heegaard
