#include "toric/numeric.hpp"

#include <cctype>

namespace toric {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

bool parse_rat(const std::string& s, Rat& out) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-') ? 1 : 0;
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(s, start, s.size())) return false;
    out = Rat(Int(s));
    return true;
  }
  if (!all_digits(s, start, slash)) return false;
  if (!all_digits(s, slash + 1, s.size())) return false;
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) return false;
  out = make_rat(num, den);
  return true;
}

std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string vec_to_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace toric
