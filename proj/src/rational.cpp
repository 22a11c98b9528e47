#include "hfa/rational.hpp"

namespace hfa {

using boost::multiprecision::cpp_int;

std::string to_fraction_string(const Rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& r, int digits) {
  cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  const bool negative = num < 0;
  if (negative) num = -num;

  cpp_int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  cpp_int scaled = (num * scale * 2 + den) / (den * 2);  // round half up

  const cpp_int whole = scaled / scale;
  cpp_int frac = scaled % scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (frac != 0) {
    std::string f = frac.str();
    f.insert(0, static_cast<std::size_t>(digits) - f.size(), '0');
    while (!f.empty() && f.back() == '0') f.pop_back();
    out += "." + f;
  }
  return out;
}

}  // namespace hfa
