#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcrys {

// A_n^(1), B_n^(1), C_n^(1), A_{2n-1}^(2), A_{2n}^(2), D_{n+1}^(2)
enum class Family { A1, B1, C1, A2odd, A2even, D2 };

struct AffineType {
  Family family = Family::A1;
  int n = 1;

  AffineType() = default;
  AffineType(Family f, int rank);  // validates the rank bound

  int size() const { return n + 1; }  // |I|
  bool operator==(const AffineType&) const = default;

  // "A1:2", "B1:3", "C1:2", "A2:5" (2n-1), "A2:2" (2n), "D2:3" (n+1)
  static AffineType parse(const std::string& s);
  std::string name() const;
  std::string pretty() const;  // e.g. "A_5^(2)"
};

using Matrix = std::vector<std::vector<int>>;

Matrix cartan_matrix(const AffineType& t);
std::vector<int> marks(const AffineType& t);
std::vector<int> comarks(const AffineType& t);
int d0(const AffineType& t);

// Exact rational with a positive denominator; only used for the δ-part.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  bool operator==(const Rational&) const = default;
  std::string str() const;

 private:
  std::int64_t num_, den_;
};

// Classical weight in the basis Λ_0..Λ_n.
struct ClassicalWeight {
  std::vector<std::int64_t> c;

  ClassicalWeight() = default;
  explicit ClassicalWeight(int size) : c(size, 0) {}
  explicit ClassicalWeight(std::vector<std::int64_t> v) : c(std::move(v)) {}

  std::int64_t operator[](int i) const { return c[i]; }
  std::int64_t& operator[](int i) { return c[i]; }
  int size() const { return static_cast<int>(c.size()); }
  ClassicalWeight operator+(const ClassicalWeight& o) const;
  ClassicalWeight operator-(const ClassicalWeight& o) const;
  bool operator==(const ClassicalWeight&) const = default;
  bool operator<(const ClassicalWeight& o) const { return c < o.c; }
  bool dominant() const;
  std::string str() const;  // "c0,c1,...,cn"
  static ClassicalWeight parse(const std::string& s);
};

struct AffineWeight {
  ClassicalWeight lambda;
  Rational delta;
  bool operator==(const AffineWeight&) const = default;
  std::string str() const;
};

std::int64_t level(const AffineType& t, const ClassicalWeight& w);
ClassicalWeight classical_root(const AffineType& t, int j);
AffineWeight affine_root(const AffineType& t, int j);
AffineWeight operator-(const AffineWeight& w, const AffineWeight& a);
AffineWeight operator+(const AffineWeight& w, const AffineWeight& a);
AffineWeight scale(const AffineWeight& a, const Rational& k);

// All dominant weights of the given level.
std::vector<ClassicalWeight> dominant_weights(const AffineType& t, int l);

// Kernel sanity: A·marks = 0, A^T·comarks = 0, gcd 1, positivity.
bool check_kernels(const AffineType& t, std::string* why = nullptr);

}  // namespace affcrys
