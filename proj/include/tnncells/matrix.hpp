#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace tnn {

using Rational = mpq_class;

// Parses "p", "p/q" or "-p/q"; the result is canonicalized (lowest terms,
// positive denominator). Throws InvalidInputError on junk or zero
// denominator.
Rational parse_rational(const std::string& s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& r);

// Dense n x n matrix of exact rationals. Everything here is plain
// Gauss-style linear algebra; n stays tiny (SL_n with n <= 6), so no
// cleverness is warranted.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(std::size_t(n) * n) {}
  static RatMatrix identity(int n);

  int size() const { return n_; }
  Rational& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix inverse() const;  // throws InvalidInputError if singular
  Rational det() const;

  bool operator==(const RatMatrix& o) const;

  nlohmann::json to_json() const;  // rows of "p/q" strings
  static RatMatrix from_json(const nlohmann::json& j);
  std::string to_string() const;  // human-readable, for messages

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace tnn
