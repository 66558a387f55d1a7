#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lks {

using VertexSet = std::vector<int>;

// Malformed or out-of-domain input (bad file, bad vertex id, bad parameter).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input is well formed but a hypothesis of the operation does not hold.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A guaranteed construction failed. Always a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

// Exact rational with 64-bit parts; intermediate products use 128 bits and
// overflow of the reduced result throws.
class Rational {
 public:
  Rational() = default;
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT(implicit)
  Rational(long long num, long long den);

  // Accepts "3", "-2/7", "0.003", "1e-3".
  static Rational parse(const std::string& text);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  long long floor() const;
  long long ceil() const;
  std::string str() const;

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend int compare(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return compare(a, b) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

 private:
  static Rational from128(__int128 num, __int128 den);
  long long num_ = 0;
  long long den_ = 1;
};

Rational rmin(const Rational& a, const Rational& b);
Rational rmax(const Rational& a, const Rational& b);

// The constant ladder. Nothing here enforces the "much smaller than"
// relations between constants; callers choose values and reports echo them.
struct ToolkitConfig {
  Rational q{1, 2};
  Rational beta{1, 2000};
  Rational gamma{1, 200};
  Rational sigma{1, 20};
  Rational alpha{1, 100};
  Rational eta{1, 10};
  Rational omega{1, 5};
  Rational eps{1, 100};
  Rational tau{2};
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = all available

  void validate() const;  // throws InputError on a non-positive constant
};

// One named postcondition check.
struct BulletResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Sorted, deduplicated copy.
VertexSet normalized(VertexSet s);

}  // namespace lks
