#include "tnncells/matrix.hpp"

#include <cctype>
#include <sstream>

#include "tnncells/error.hpp"

namespace tnn {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInputError("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw InvalidInputError("bad rational literal '" + s + "'");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw InvalidInputError("bad rational literal '" + s + "'");
  if (q.get_den() == 0) throw InvalidInputError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& r) {
  // two-argument mpq_class construction does not canonicalize on its own
  Rational c = r;
  c.canonicalize();
  return c.get_str();
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (n_ != o.n_) throw InvalidInputError("matrix size mismatch");
  RatMatrix c(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n_; ++j)
        if (o.at(k, j) != 0) c.at(i, j) += aik * o.at(k, j);
    }
  return c;
}

RatMatrix RatMatrix::inverse() const {
  RatMatrix a(*this);
  RatMatrix inv = identity(n_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw InvalidInputError("matrix is singular");
    if (piv != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rational d = a.at(col, col);
    for (int j = 0; j < n_; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (int j = 0; j < n_; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rational RatMatrix::det() const {
  RatMatrix a(*this);
  Rational d = 1;
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      d = -d;
      for (int j = col; j < n_; ++j) std::swap(a.at(piv, j), a.at(col, j));
    }
    d *= a.at(col, col);
    for (int r = col + 1; r < n_; ++r) {
      if (a.at(r, col) == 0) continue;
      Rational f = a.at(r, col) / a.at(col, col);
      for (int j = col; j < n_; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return d;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

nlohmann::json RatMatrix::to_json() const {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < n_; ++i) {
    auto row = nlohmann::json::array();
    for (int j = 0; j < n_; ++j) row.push_back(rational_str(at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix RatMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw InvalidInputError("matrix JSON must be a non-empty array of rows");
  const int n = int(j.size());
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto& row = j.at(i);
    if (!row.is_array() || int(row.size()) != n)
      throw InvalidInputError("matrix JSON must be square");
    for (int k = 0; k < n; ++k)
      m.at(i, k) = parse_rational(row.at(k).get<std::string>());
  }
  return m;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < n_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < n_; ++j) os << (j ? " " : "[") << rational_str(at(i, j));
    os << "]" << (i + 1 == n_ ? "]" : "\n");
  }
  return os.str();
}

}  // namespace tnn
