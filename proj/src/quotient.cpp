#include "heegaard/quotient.hpp"

#include <algorithm>

#include "heegaard/errors.hpp"
#include "heegaard/hermite.hpp"

namespace heegaard {

namespace {

bool lex_less(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string group_term(const Integer& d) { return "Z/" + to_string(d); }

}  // namespace

bool ClassCoordinate::is_zero() const {
  const auto zero = [](const Integer& x) { return x == 0; };
  return std::all_of(free_part.begin(), free_part.end(), zero) &&
         std::all_of(torsion.begin(), torsion.end(), zero);
}

std::string ClassCoordinate::str() const {
  if (is_zero()) return "0";
  std::vector<std::string> terms;
  if (!free_part.empty()) {
    std::string tuple = "(";
    for (std::size_t i = 0; i < free_part.size(); ++i) {
      if (i > 0) tuple += ',';
      tuple += to_string(free_part[i]);
    }
    terms.push_back(tuple + ")");
  }
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    terms.push_back(to_string(torsion[i]) + " mod " + to_string(moduli[i]));
  }
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " + ";
    out += terms[i];
  }
  return out;
}

bool operator<(const ClassCoordinate& a, const ClassCoordinate& b) {
  if (a.free_part != b.free_part) return lex_less(a.free_part, b.free_part);
  if (a.torsion != b.torsion) return lex_less(a.torsion, b.torsion);
  return lex_less(a.moduli, b.moduli);
}

QuotientGroup::QuotientGroup(IntMatrix relations)
    : relations_(std::move(relations)), snf_(smith_normal_form(relations_)) {
  diagonal_ = snf_.diagonal(ambient_rank());
  for (const auto& d : diagonal_) {
    if (d == 0) {
      ++free_rank_;
    } else if (d > 1) {
      invariant_factors_.push_back(d);
    }
  }
}

std::optional<Integer> QuotientGroup::order() const {
  if (free_rank_ > 0) return std::nullopt;
  Integer out = 1;
  for (const auto& d : invariant_factors_) out *= d;
  return out;
}

ClassCoordinate QuotientGroup::reduce(const IntVector& v) const {
  if (v.size() != ambient_rank()) {
    throw InvalidInput("vector of length " + std::to_string(v.size()) + " in a quotient of Z^" +
                       std::to_string(ambient_rank()));
  }
  const IntVector y = snf_.U * v;
  ClassCoordinate out;
  for (Eigen::Index i = 0; i < ambient_rank(); ++i) {
    const Integer& d = diagonal_[static_cast<std::size_t>(i)];
    if (d == 0) {
      out.free_part.push_back(y(i));
    } else if (d > 1) {
      Integer r = y(i) % d;
      if (r < 0) r += d;
      out.torsion.push_back(std::move(r));
      out.moduli.push_back(d);
    }
  }
  return out;
}

std::string QuotientGroup::str() const {
  if (is_trivial()) return "0";
  std::vector<std::string> terms;
  if (free_rank_ == 1) terms.emplace_back("Z");
  if (free_rank_ > 1) terms.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : invariant_factors_) terms.push_back(group_term(d));
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += " + ";
    out += terms[i];
  }
  return out;
}

QuotientGroup build_quotient(const std::vector<IntVector>& vectors, int genus) {
  if (genus < 1) throw InvalidInput("genus must be at least 1");
  const Eigen::Index rank = 2 * genus;
  for (const auto& v : vectors) {
    if (v.size() != rank) {
      throw InvalidInput("relation of length " + std::to_string(v.size()) + ", expected " +
                         std::to_string(rank));
    }
  }
  return QuotientGroup(stack_columns(vectors, rank));
}

ClassCoordinate reduce(const QuotientGroup& q, const IntVector& v) { return q.reduce(v); }

bool lattice_member(const std::vector<IntVector>& vectors, const IntVector& v) {
  for (const auto& w : vectors) {
    if (w.size() != v.size()) {
      throw InvalidInput("lattice generator of length " + std::to_string(w.size()) +
                         ", expected " + std::to_string(v.size()));
    }
  }
  return lattice_member(stack_columns(vectors, v.size()), v);
}

}  // namespace heegaard
