#include "lks/common.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace lks {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr long long kMax = std::numeric_limits<long long>::max();

}  // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  *this = from128(num, den);
}

Rational Rational::from128(__int128 num, __int128 den) {
  if (den == 0) throw InputError("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) throw InputError("rational overflow");
  Rational r;
  r.num_ = static_cast<long long>(num);
  r.den_ = static_cast<long long>(den);
  return r;
}

Rational Rational::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw InputError("empty number");
  auto slash = t.find('/');
  if (slash != std::string::npos) {
    Rational a = parse(t.substr(0, slash));
    Rational b = parse(t.substr(slash + 1));
    if (b.num_ == 0) throw InputError("zero denominator in '" + text + "'");
    return a / b;
  }
  size_t i = 0;
  bool neg = false;
  if (t[i] == '+' || t[i] == '-') neg = t[i++] == '-';
  __int128 num = 0, den = 1;
  bool digits = false, dot = false;
  for (; i < t.size(); ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
      num = num * 10 + (c - '0');
      if (dot) den *= 10;
      if (num > kMax || den > kMax) throw InputError("number too long: '" + text + "'");
    } else if (c == '.' && !dot) {
      dot = true;
    } else if ((c == 'e' || c == 'E') && digits) {
      long long e = 0;
      try {
        size_t used = 0;
        e = std::stoll(t.substr(i + 1), &used);
        if (used != t.size() - i - 1) throw InputError("bad exponent");
      } catch (const std::exception&) {
        throw InputError("bad number '" + text + "'");
      }
      if (e > 18 || e < -18) throw InputError("exponent out of range in '" + text + "'");
      for (long long j = 0; j < (e < 0 ? -e : e); ++j) (e < 0 ? den : num) *= 10;
      i = t.size();
      break;
    } else {
      throw InputError("bad number '" + text + "'");
    }
  }
  if (!digits) throw InputError("bad number '" + text + "'");
  return from128(neg ? -num : num, den);
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rational::ceil() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from128(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                           static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from128(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw InputError("division by zero");
  return Rational::from128(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

int compare(const Rational& a, const Rational& b) {
  __int128 l = static_cast<__int128>(a.num_) * b.den_;
  __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l < r ? -1 : (l > r ? 1 : 0);
}

Rational rmin(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational rmax(const Rational& a, const Rational& b) { return a < b ? b : a; }

void ToolkitConfig::validate() const {
  const std::pair<const char*, const Rational*> all[] = {
      {"q", &q},         {"beta", &beta},   {"gamma", &gamma}, {"sigma", &sigma}, {"alpha", &alpha},
      {"eta", &eta},     {"omega", &omega}, {"eps", &eps},     {"tau", &tau}};
  for (const auto& [name, v] : all)
    if (*v <= Rational(0)) throw InputError(std::string("constant ") + name + " must be positive");
  if (threads < 0) throw InputError("thread budget must be >= 0");
}

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace lks
